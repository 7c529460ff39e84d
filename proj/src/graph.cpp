#include "spantree/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "spantree/errors.hpp"

namespace spantree {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw InvalidParameter("graph needs at least one vertex");
    for (auto& [u, v] : edges_) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > n_ || u == v)
            throw InvalidParameter("edge endpoints must be distinct labels in 1..n");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(n_ + 1, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

int Graph::degree(int v) const {
    if (v < 1 || v > n_) throw InvalidParameter("vertex label out of range");
    return static_cast<int>(adj_[v].size());
}

Graph make_path(int n) {
    if (n < 1) throw InvalidParameter("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw InvalidParameter("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({1, n});
    return Graph(n, std::move(edges));
}

Graph make_grid(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParameter("grid needs a,b >= 1");
    auto idx = [b](int i, int j) { return (i - 1) * b + j; };
    std::vector<Edge> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) {
            if (j < b) edges.push_back({idx(i, j), idx(i, j + 1)});
            if (i < a) edges.push_back({idx(i, j), idx(i + 1, j)});
        }
    return Graph(a * b, std::move(edges));
}

Graph make_torus(int a, int b) {
    // min dimension 3 keeps the wrap-around edges simple (no doubled edges)
    if (a < 3 || b < 3) throw InvalidParameter("torus needs a,b >= 3");
    auto idx = [b](int i, int j) { return (i - 1) * b + j; };
    std::vector<Edge> edges;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) {
            edges.push_back({idx(i, j), idx(i, j % b + 1)});
            edges.push_back({idx(i, j), idx(i % a + 1, j)});
        }
    return Graph(a * b, std::move(edges));
}

Graph make_complete(int n) {
    if (n < 1) throw InvalidParameter("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    if (n < 2) throw InvalidParameter("star needs n >= 2");
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) edges.push_back({1, v});
    return Graph(n, std::move(edges));
}

Graph make_subdivided_star(int p, int q, int k) {
    if (p <= 0 || p >= q) throw InvalidParameter("subdivided star needs 0 < p < q");
    if (k < 1) throw InvalidParameter("subdivided star needs k >= 1");
    const int branches = p * k;
    const int extra = (q - p) * k;
    std::vector<Edge> edges;
    int next = 2;
    for (int b = 0; b < branches; ++b) {
        // branch b gets its share of the subdivision vertices, then a leaf
        int inner = extra / branches + (b < extra % branches ? 1 : 0);
        int prev = 1;
        for (int s = 0; s < inner; ++s) {
            edges.push_back({prev, next});
            prev = next++;
        }
        edges.push_back({prev, next});
        ++next;
    }
    return Graph(q * k + 1, std::move(edges));
}

Graph make_counterexample(int k) {
    if (k < 2) throw InvalidParameter("counterexample family needs k >= 2");
    Graph tree = make_subdivided_star(1, 2, k);
    std::vector<int> mids;
    for (int v = 2; v <= tree.vertex_count() && mids.size() < 2; ++v)
        if (tree.degree(v) == 2) mids.push_back(v);
    auto edges = tree.edges();
    edges.push_back({mids[0], mids[1]});
    return Graph(tree.vertex_count(), std::move(edges));
}

Graph make_half_graph(int m) {
    if (m < 1) throw InvalidParameter("half graph needs m >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= m; ++i)
        for (int j = i; j <= m; ++j) edges.push_back({i, m + j});
    return Graph(2 * m, std::move(edges));
}

Graph power(const Graph& g, int k) {
    if (k < 1) throw InvalidParameter("graph power needs k >= 1");
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (int s = 1; s <= n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int v = s + 1; v <= n; ++v)
            if (dist[v] >= 1 && dist[v] <= k) edges.push_back({s, v});
    }
    return Graph(n, std::move(edges));
}

Graph graph_difference(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw InvalidParameter("graph difference needs equal vertex counts");
    std::vector<Edge> edges;
    std::set_difference(g.edges().begin(), g.edges().end(),
                        h.edges().begin(), h.edges().end(),
                        std::back_inserter(edges));
    return Graph(g.vertex_count(), std::move(edges));
}

Graph delete_vertex(const Graph& g, int v) {
    const int n = g.vertex_count();
    if (v < 1 || v > n) throw InvalidParameter("vertex label out of range");
    std::vector<Edge> edges;
    for (auto [a, b] : g.edges()) {
        if (a == v || b == v) continue;
        edges.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    }
    return Graph(n - 1, std::move(edges));
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count() + 1, -1);
    dist[src] = 0;
    std::deque<int> queue{src};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.adjacency()[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    auto dist = bfs_distances(g, 1);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (dist[v] < 0) return false;
    return true;
}

std::vector<int> leaf_vertices(const Graph& g) {
    std::vector<int> leaves;
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (g.degree(v) == 1) leaves.push_back(v);
    return leaves;
}

}  // namespace spantree
