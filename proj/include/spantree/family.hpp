#pragma once

#include <map>
#include <string>

#include "spantree/graph.hpp"

namespace spantree {

enum class FamilyKind {
    PathPower,
    CyclePower,
    Grid,
    Torus,
    Complete,
    Star,
    SubdividedStar,
    Counterexample,
};

// index -> vertex count of member index, as vertices = s*index + t
struct AffineMap {
    long long s = 1;
    long long t = 0;
    long long operator()(long long index) const { return s * index + t; }
};

// A recursively generated graph family. Member 0 is the smallest legal
// member; the start index records the family's natural parameter for that
// member (n for powers of paths/cycles, the free side for grids/tori, k
// for the star-based families).
class FamilySpec {
public:
    static FamilySpec path_power(int r);
    static FamilySpec cycle_power(int r);
    static FamilySpec grid(int a);
    static FamilySpec torus(int a);
    static FamilySpec complete();
    static FamilySpec star();
    static FamilySpec subdivided_star(int p, int q);
    static FamilySpec counterexample();

    // Parse "path-power", "cycle-power", "grid", "torus", "complete",
    // "star", "subdivided-star", "counterexample" plus its parameters.
    static FamilySpec from_name(const std::string& kind,
                                const std::map<std::string, long long>& params);

    FamilyKind kind() const { return kind_; }
    const std::string& tag() const { return tag_; }
    std::map<std::string, long long> params() const;

    int start_index() const { return start_; }
    AffineMap vertex_map() const { return map_; }

    // Cycle powers, tori and complete graphs have transitive symmetry the
    // leaf count can exploit.
    bool vertex_transitive() const;

    Graph member(int index) const;

private:
    FamilyKind kind_;
    std::string tag_;
    int r_ = 0, a_ = 0, p_ = 0, q_ = 0;
    int start_ = 0;
    AffineMap map_;
};

}  // namespace spantree
