#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace spantree {

using Edge = std::pair<int, int>;  // u < v, labels 1-based

// Labeled simple undirected graph on vertices 1..n. Immutable after
// construction; the edge list is kept sorted so graphs compare and
// serialize deterministically. Connectivity is not an invariant; the
// operations that need it check it.
class Graph {
public:
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// --- generators -----------------------------------------------------------

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_grid(int a, int b);
Graph make_torus(int a, int b);
Graph make_complete(int n);
Graph make_star(int n);

// Star with p*k leaves whose branches absorb (q-p)*k extra subdivision
// vertices, distributed round-robin; a tree on q*k+1 vertices. Requires
// 0 < p < q.
Graph make_subdivided_star(int p, int q, int k);

// make_subdivided_star(1,2,k) plus one edge joining the two lowest-labeled
// degree-2 branch vertices, closing a single triangle through the center.
Graph make_counterexample(int k);

// Bipartite half graph: u_1..u_m = 1..m, v_1..v_m = m+1..2m, edges
// {u_i, v_j} for i <= j.
Graph make_half_graph(int m);

// --- operations -----------------------------------------------------------

// k-th power: same vertices, edge wherever the distance in g is 1..k.
// Distances via BFS; vertices in different components are never joined.
Graph power(const Graph& g, int k);

// Edge-set difference on a shared vertex set.
Graph graph_difference(const Graph& g, const Graph& h);

// Remove v and relabel the remaining vertices to 1..n-1 preserving order.
Graph delete_vertex(const Graph& g, int v);

// --- queries --------------------------------------------------------------

bool is_connected(const Graph& g);

// BFS distances from src; -1 for unreachable vertices. Index 0 unused.
std::vector<int> bfs_distances(const Graph& g, int src);

// Vertices of degree exactly 1, ascending.
std::vector<int> leaf_vertices(const Graph& g);

}  // namespace spantree
