#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace galcov {

// Finite multigraph with string-labeled vertices and edges.  Loops and
// parallel edges are allowed.  Every edge has a plus direction init -> term;
// walks may traverse an edge either way.
class Multigraph {
public:
    int add_vertex(std::string id);
    int add_edge(std::string id, std::string_view init_id, std::string_view term_id);
    int add_edge_idx(std::string id, int init, int term);

    int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const std::string& edge_id(int e) const { return edges_[e].id; }
    int edge_init(int e) const { return edges_[e].init; }
    int edge_term(int e) const { return edges_[e].term; }
    bool is_loop(int e) const { return edges_[e].init == edges_[e].term; }

    std::optional<int> vertex_index(std::string_view id) const;
    std::optional<int> edge_index(std::string_view id) const;
    int require_vertex(std::string_view id) const;
    int require_edge(std::string_view id) const;

    // Loops contribute 2 to the degree of their vertex.
    int degree(int v) const;

private:
    struct Edge {
        std::string id;
        int init;
        int term;
    };
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
    std::map<std::string, int, std::less<>> vertex_lookup_;
    std::map<std::string, int, std::less<>> edge_lookup_;
};

struct WalkStep {
    int edge;
    bool forward;  // true: init -> term, false: term -> init

    bool operator==(const WalkStep&) const = default;
    // plus direction sorts before minus
    auto operator<=>(const WalkStep& rhs) const {
        if (auto c = edge <=> rhs.edge; c != 0) return c;
        return (forward ? 0 : 1) <=> (rhs.forward ? 0 : 1);
    }
};

// Walk on a fixed graph: a start vertex and a list of directed edge
// traversals.  The visited vertex sequence is derived and cached.
class Walk {
public:
    // Validates continuity of the steps; throws invalid_argument otherwise.
    static Walk make(const Multigraph& g, int start, std::vector<WalkStep> steps);

    const Multigraph& graph() const { return *graph_; }
    int start() const { return vertices_.front(); }
    int end() const { return vertices_.back(); }
    int length() const { return static_cast<int>(steps_.size()); }
    const std::vector<WalkStep>& steps() const { return steps_; }
    // i in [0, length()]
    int vertex(int i) const { return vertices_[i]; }
    const std::vector<int>& vertices() const { return vertices_; }

    bool closed() const { return start() == end(); }
    // Closed, length >= 1, vertices v_0..v_{n-1} pairwise distinct and no
    // edge repeated (the edge condition only bites for length-2 backtracks).
    bool simple_closed() const;

    bool operator==(const Walk& rhs) const {
        return vertices_.front() == rhs.vertices_.front() && steps_ == rhs.steps_;
    }

private:
    Walk() = default;
    const Multigraph* graph_ = nullptr;
    std::vector<WalkStep> steps_;
    std::vector<int> vertices_;
};

Walk inverse_walk(const Walk& w);
// a then b; requires a.end() == b.start() on the same graph
Walk concat_walks(const Walk& a, const Walk& b);
// j-th rotation of a closed walk: starts at w.vertex(j mod length)
Walk shift_walk(const Walk& w, int j);

// All simple closed walks, each rotation and direction listed separately.
// Ordered by (length, start vertex, step list).  A loop edge yields the two
// length-1 walks; a tree yields nothing.
std::vector<Walk> enumerate_simple_closed_walks(const Multigraph& g);

// Map between two graphs: vertex images and edge images by index.
struct GraphMap {
    std::vector<int> v;
    std::vector<int> e;

    bool operator==(const GraphMap&) const = default;
};

GraphMap identity_map(const Multigraph& g);
// outer(inner(x))
GraphMap compose_maps(const GraphMap& outer, const GraphMap& inner);
GraphMap invert_map(const Multigraph& src, const Multigraph& dst, const GraphMap& m);

// Endpoint compatibility as unordered pairs: {f(init), f(term)} must equal
// the endpoint pair of the image edge.
bool is_graph_map(const Multigraph& src, const Multigraph& dst, const GraphMap& m);
// Additionally init -> init and term -> term for every edge.
bool preserves_directions(const Multigraph& src, const Multigraph& dst, const GraphMap& m);
bool is_bijective_map(const Multigraph& src, const Multigraph& dst, const GraphMap& m);

// Image of a walk under a graph map (directions flip where the image edge is
// glued in reversed orientation).
Walk map_walk(const GraphMap& m, const Walk& w, const Multigraph& dst);

}  // namespace galcov
