#ifndef BCOLAB_GRAPH_HPP
#define BCOLAB_GRAPH_HPP

#include <compare>
#include <unordered_map>
#include <vector>

namespace bcolab {

using VertexId = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;

    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph over positive integer vertex ids.
/// Ids need not be contiguous. Immutable after construction; neighbor
/// lists and the edge list are kept in ascending order so that every
/// iteration over the graph is deterministic.
class Graph {
public:
    Graph() = default;

    /// Throws PreconditionError on self-loops, duplicate edges, duplicate
    /// or non-positive vertex ids, or edges with undeclared endpoints.
    static Graph build(std::vector<VertexId> vertices, std::vector<Edge> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    /// Ascending (u, v) order; the position of an edge in this list is its
    /// canonical edge index.
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_vertex(VertexId v) const { return index_.count(v) > 0; }
    bool has_edge(VertexId a, VertexId b) const;

    /// Position of v in vertices(); throws PreconditionError if unknown.
    int index_of(VertexId v) const;
    /// Canonical index of edge {a, b}, or -1 if absent.
    int edge_index(VertexId a, VertexId b) const;

    const std::vector<VertexId>& neighbors(VertexId v) const;

private:
    std::vector<VertexId> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<VertexId>> adj_; // by vertex index, ascending ids
    std::unordered_map<VertexId, int> index_;
};

int degree(const Graph& g, VertexId v);

/// True iff g has exactly one connected component; the empty graph
/// counts as connected.
bool is_connected(const Graph& g);

/// True iff no edge of g has both endpoints in s. Throws on unknown ids.
bool is_independent_set(const Graph& g, const std::vector<VertexId>& s);

/// One directed edge.
struct Arc {
    VertexId tail;
    VertexId head;
    bool operator==(const Arc&) const = default;
};

/// An orientation of a base graph: per base edge exactly one directed
/// arc. Arcs are stored aligned with the base graph's canonical edge
/// order, so arcs()[i] orients edges()[i].
class Orientation {
public:
    Orientation() = default;

    /// Validates that the arcs project onto the base edge set exactly
    /// once each; throws PreconditionError otherwise.
    static Orientation build(const Graph& base, std::vector<Arc> arcs);

    const std::vector<Arc>& arcs() const { return arcs_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }

    Orientation reversed() const;

    bool operator==(const Orientation&) const = default;

private:
    std::vector<Arc> arcs_;
};

} // namespace bcolab

#endif
