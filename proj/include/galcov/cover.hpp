#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galcov/graph.hpp"
#include "galcov/group.hpp"

namespace galcov {

// Branched G-cover of multigraphs: projection phi from the total graph to the
// base graph together with a left G-action on the total graph.  Covers are
// built by the JSON loader or the splitting-cover builder and then validated;
// the struct itself is plain data so that broken input can still be loaded
// and reported on.
//
// Required properties (checked by validate_cover):
//   - phi and every action map preserve plus directions;
//   - action is a homomorphism into the automorphisms of the total graph;
//   - phi is G-invariant and its fibers are precisely the G-orbits;
//   - G acts freely on edges (fibers of edges are regular orbits).
// Branching is allowed on vertices only: vertex stabilizers may be nontrivial.
struct Cover {
    GroupPtr group;
    Multigraph total;
    Multigraph base;
    GraphMap phi;                                  // total -> base
    std::vector<std::optional<GraphMap>> action;   // indexed by group element
};

// Fills missing action maps by composing the given ones (the given elements
// must generate G for this to reach everything).  Entries already present are
// never overwritten; inconsistencies are left for validate_cover to report.
// Returns diagnostics for maps that are malformed or elements left unreached.
std::vector<std::string> complete_action(Cover& c);

struct CheckResult {
    std::string name;
    bool pass;
    std::string witness;  // empty when the check passed
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool ok() const;
    // name of the first failing check, or empty
    std::string first_failure() const;
};

// Runs the cover axioms in dependency order and stops adding checks once a
// failure makes later ones meaningless.
ValidationReport validate_cover(const Cover& c);

std::vector<int> fiber_vertices(const Cover& c, int base_vertex);
std::vector<int> fiber_edges(const Cover& c, int base_edge);

GroupSubset vertex_stabilizer(const Cover& c, int total_vertex);

// Frontier sets of the lifts of a base walk: entry i holds the total vertices
// reachable from lift_v0 by lifting the first i steps (sorted).  Entry 0 is
// {lift_v0}.
std::vector<std::vector<int>> frontier_sets(const Cover& c, const Walk& base_walk,
                                            int lift_v0);

// Net voltage set of a closed base walk at a chosen lift of its start vertex:
// those g whose translate of lift_v0 lies in the final frontier.  For the
// length-0 walk this is exactly the stabilizer of lift_v0.
GroupSubset net_voltage_set(const Cover& c, const Walk& closed_walk, int lift_v0);

// Conjugacy class of the net voltage set; independent of the chosen lift.
SubsetClass net_voltage_class(const Cover& c, const Walk& closed_walk);

// Equivalence test for covers of edgeless bases: with the vertex bijection
// theta_v (base1 -> base2) fixed, the covers are equivalent exactly when for
// every base vertex the tau-image of a lift stabilizer in c1 is conjugate to
// a lift stabilizer in c2 over the corresponding vertex.
bool edgeless_equivalent(const Cover& c1, const Cover& c2,
                         const std::vector<int>& theta_v, const GroupAutomorphism& tau);

}  // namespace galcov
