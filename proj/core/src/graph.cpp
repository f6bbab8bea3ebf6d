#include "bcolab/graph.hpp"

#include <algorithm>
#include <string>

#include "bcolab/errors.hpp"

namespace bcolab {

Graph Graph::build(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    Graph g;
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] <= 0)
            throw PreconditionError("vertex ids must be positive, got " +
                                    std::to_string(vertices[i]));
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw PreconditionError("duplicate vertex id " + std::to_string(vertices[i]));
    }
    g.vertices_ = std::move(vertices);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i)
        g.index_.emplace(g.vertices_[i], static_cast<int>(i));

    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge& e = edges[i];
        if (e.u == e.v)
            throw PreconditionError("self-loop at vertex " + std::to_string(e.u));
        if (i > 0 && edges[i] == edges[i - 1])
            throw PreconditionError("parallel edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "}");
        if (!g.index_.count(e.u) || !g.index_.count(e.v))
            throw PreconditionError("edge {" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + "} has an undeclared endpoint");
    }
    g.edges_ = std::move(edges);

    g.adj_.resize(g.vertices_.size());
    for (const Edge& e : g.edges_) {
        g.adj_[g.index_.at(e.u)].push_back(e.v);
        g.adj_[g.index_.at(e.v)].push_back(e.u);
    }
    for (auto& nbrs : g.adj_)
        std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    return edge_index(a, b) >= 0;
}

int Graph::index_of(VertexId v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw PreconditionError("unknown vertex id " + std::to_string(v));
    return it->second;
}

int Graph::edge_index(VertexId a, VertexId b) const {
    if (a == b)
        return -1;
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e))
        return -1;
    return static_cast<int>(it - edges_.begin());
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
    return adj_[index_of(v)];
}

int degree(const Graph& g, VertexId v) {
    return static_cast<int>(g.neighbors(v).size());
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0)
        return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(g.vertices()[i])) {
            int j = g.index_of(w);
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                stack.push_back(j);
            }
        }
    }
    return reached == n;
}

bool is_independent_set(const Graph& g, const std::vector<VertexId>& s) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (VertexId v : s)
        in_s[g.index_of(v)] = 1;
    for (VertexId v : s) {
        for (VertexId w : g.neighbors(v))
            if (in_s[g.index_of(w)])
                return false;
    }
    return true;
}

Orientation Orientation::build(const Graph& base, std::vector<Arc> arcs) {
    if (static_cast<int>(arcs.size()) != base.edge_count())
        throw PreconditionError("orientation has " + std::to_string(arcs.size()) +
                                " arcs for " + std::to_string(base.edge_count()) + " edges");
    std::vector<Arc> aligned(arcs.size(), Arc{0, 0});
    std::vector<char> used(arcs.size(), 0);
    for (const Arc& a : arcs) {
        int ei = base.edge_index(a.tail, a.head);
        if (ei < 0)
            throw PreconditionError("arc (" + std::to_string(a.tail) + "," +
                                    std::to_string(a.head) + ") is not a base edge");
        if (used[ei])
            throw PreconditionError("edge {" + std::to_string(base.edges()[ei].u) + "," +
                                    std::to_string(base.edges()[ei].v) + "} oriented twice");
        used[ei] = 1;
        aligned[ei] = a;
    }
    Orientation o;
    o.arcs_ = std::move(aligned);
    return o;
}

Orientation Orientation::reversed() const {
    Orientation o;
    o.arcs_.reserve(arcs_.size());
    for (const Arc& a : arcs_)
        o.arcs_.push_back(Arc{a.head, a.tail});
    return o;
}

} // namespace bcolab
