#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "galcov/graph.hpp"

namespace galcov {

// Optional restriction for isomorphism search: vertex v of g1 may only map to
// vertices w of g2 with c2[w] == c1[v].  Class values are arbitrary ints.
struct VertexClassConstraint {
    std::vector<int> c1;
    std::vector<int> c2;
};

// Enumerates all isomorphisms g1 -> g2 (vertex and edge bijections compatible
// with endpoints; plus directions are not required to be preserved).  Parallel
// edges give several edge bijections per vertex bijection; each is reported.
// The visit callback returns false to stop early.  Enumeration order is
// deterministic: vertices of g1 are matched in decreasing-degree order, images
// tried in increasing index order, edge bijections in lexicographic order.
// Returns false when the visit callback stopped the search.
bool for_each_isomorphism(const Multigraph& g1, const Multigraph& g2,
                          const std::optional<VertexClassConstraint>& classes,
                          const std::function<bool(const GraphMap&)>& visit);

std::vector<GraphMap> isomorphisms(const Multigraph& g1, const Multigraph& g2,
                                   const std::optional<VertexClassConstraint>& classes = {});

std::optional<GraphMap> first_isomorphism(const Multigraph& g1, const Multigraph& g2,
                                          const std::optional<VertexClassConstraint>& classes = {});

}  // namespace galcov
