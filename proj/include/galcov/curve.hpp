#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "galcov/cover.hpp"

namespace galcov {

// Combinatorics of a plane curve relative to a branched cover: irreducible
// components, and singular points off the branch locus with their local
// branches (each branch lying on one component).
struct CurveComponent {
    std::string id;
    int degree = 1;
};

struct CurveBranch {
    std::string component;
};

struct CurvePoint {
    std::string id;
    std::vector<CurveBranch> branches;
};

struct CurveCombinatorics {
    std::vector<CurveComponent> components;
    std::vector<CurvePoint> points;

    // unique ids, point/component ids disjoint, branches reference existing
    // components, every point has at least one branch, degrees >= 1
    void validate() const;
};

struct IncidenceGraph {
    Multigraph graph;
    std::vector<int> vertex_class;  // 0 = point vertex, 1 = component vertex
};

// Bipartite incidence graph: one vertex per point and per component (ids kept
// verbatim), one edge per local branch with plus direction point -> component.
// The k-th branch of point P becomes edge "P#k".
IncidenceGraph incidence_graph(const CurveCombinatorics& cc);

// Data describing how a Z_m-cover splits the curve: the fiber size s_C of
// each component (a divisor of m) and one offset per local branch.
struct CyclicSplittingData {
    int m = 1;
    std::map<std::string, int> s;
    std::map<std::string, std::vector<int>> offsets;
};

// Cover of the incidence graph for Z_m.  The fiber over point P is
// "P@0".."P@m-1", the fiber over component C is "C@0".."C@s_C-1", and the
// j-th lift of branch edge "P#k" (component C, offset o) joins P@j to
// C@((j-o) mod s_C).  The generator [1] shifts all indices by +1.
Cover build_splitting_cover(const CurveCombinatorics& cc, const CyclicSplittingData& d);

// Fiber size over the component's base vertex.
int splitting_number(const Cover& c, std::string_view component_id);

// Number of connected components of the total graph.
int connected_number(const Cover& c);

// Vertex classes for the total graph obtained by pulling base classes back
// through the projection (for class-constrained isomorphism searches).
std::vector<int> pull_back_classes(const Cover& c, const std::vector<int>& base_classes);

}  // namespace galcov
