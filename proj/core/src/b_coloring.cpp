#include "bcolab/b_coloring.hpp"

#include <algorithm>
#include <cmath>

#include "bcolab/errors.hpp"

namespace bcolab {

int Coloring::at(VertexId v) const {
    auto it = map_.find(v);
    if (it == map_.end())
        throw PreconditionError("vertex " + std::to_string(v) + " has no color");
    return it->second;
}

std::vector<std::pair<VertexId, int>> Coloring::sorted_items() const {
    std::vector<std::pair<VertexId, int>> items(map_.begin(), map_.end());
    std::sort(items.begin(), items.end());
    return items;
}

namespace {

// Dense colors by vertex index, or a diagnostic.
std::pair<std::vector<int>, std::string> dense_colors(const BColInstance& inst,
                                                      const Coloring& c) {
    std::vector<int> colors(inst.graph.vertex_count(), -1);
    for (int i = 0; i < inst.graph.vertex_count(); ++i) {
        VertexId v = inst.graph.vertices()[i];
        if (!c.has(v))
            return {{}, "vertex " + std::to_string(v) + " has no color"};
        int q = c.at(v);
        if (q < 0 || q >= inst.k)
            return {{}, "vertex " + std::to_string(v) + " has color " + std::to_string(q) +
                            " outside [0.." + std::to_string(inst.k - 1) + "]"};
        colors[i] = q;
    }
    return {std::move(colors), ""};
}

std::optional<Edge> find_monochromatic_edge(const Graph& g, const std::vector<int>& colors) {
    for (const Edge& e : g.edges())
        if (colors[g.index_of(e.u)] == colors[g.index_of(e.v)])
            return e;
    return std::nullopt;
}

std::vector<std::vector<VertexId>> b_vertices_dense(const BColInstance& inst,
                                                    const std::vector<int>& colors) {
    const Graph& g = inst.graph;
    std::vector<std::vector<VertexId>> result(inst.k);
    std::vector<int> seen_at(inst.k, -1); // color -> last vertex index that saw it
    for (int i = 0; i < g.vertex_count(); ++i) {
        VertexId v = g.vertices()[i];
        int own = colors[i];
        int distinct = 0;
        for (VertexId w : g.neighbors(v)) {
            int q = colors[g.index_of(w)];
            if (q != own && seen_at[q] != i) {
                seen_at[q] = i;
                ++distinct;
            }
        }
        if (distinct == inst.k - 1)
            result[own].push_back(v);
    }
    return result;
}

} // namespace

bool is_proper(const BColInstance& inst, const Coloring& c) {
    auto [colors, err] = dense_colors(inst, c);
    if (!err.empty())
        throw PreconditionError(err);
    return !find_monochromatic_edge(inst.graph, colors).has_value();
}

std::vector<std::vector<VertexId>> b_vertices(const BColInstance& inst, const Coloring& c) {
    auto [colors, err] = dense_colors(inst, c);
    if (!err.empty())
        throw PreconditionError(err);
    if (find_monochromatic_edge(inst.graph, colors))
        throw PreconditionError("coloring is not proper");
    return b_vertices_dense(inst, colors);
}

BColoringCheck check_b_coloring(const BColInstance& inst, const Coloring& c) {
    auto [colors, err] = dense_colors(inst, c);
    if (!err.empty())
        return {false, err};
    if (auto e = find_monochromatic_edge(inst.graph, colors))
        return {false, "edge {" + std::to_string(e->u) + "," + std::to_string(e->v) +
                           "} is monochromatic (color " +
                           std::to_string(colors[inst.graph.index_of(e->u)]) + ")"};
    auto bv = b_vertices_dense(inst, colors);
    for (int q = 0; q < inst.k; ++q)
        if (bv[q].empty())
            return {false, "color " + std::to_string(q) + " has no b-vertex"};
    return {};
}

namespace {

struct BruteColoringState {
    const Graph& g;
    int k;
    std::vector<int> colors; // by vertex index, -1 = uncolored
    bool found = false;
};

void search_colorings(BruteColoringState& st, const BColInstance& inst, int i, int max_used) {
    if (st.found)
        return;
    const int n = st.g.vertex_count();
    if (i == n) {
        // Leaf colorings are proper by construction; only the b-vertex
        // condition remains.
        auto bv = b_vertices_dense(inst, st.colors);
        st.found = std::all_of(bv.begin(), bv.end(),
                               [](const auto& s) { return !s.empty(); });
        return;
    }
    VertexId v = st.g.vertices()[i];
    const int limit = std::min(st.k - 1, max_used + 1);
    for (int q = 0; q <= limit && !st.found; ++q) {
        bool clash = false;
        for (VertexId w : st.g.neighbors(v))
            if (st.colors[st.g.index_of(w)] == q) {
                clash = true;
                break;
            }
        if (clash)
            continue;
        st.colors[i] = q;
        search_colorings(st, inst, i + 1, std::max(max_used, q));
        if (!st.found)
            st.colors[i] = -1;
    }
}

} // namespace

std::optional<Coloring> solve_bcol_brute(const BColInstance& inst,
                                         const BColBruteOptions& opts) {
    const int n = inst.graph.vertex_count();
    const int k = inst.k;
    if (k < 1)
        throw PreconditionError("color count must be at least 1");

    double space = std::pow(static_cast<double>(k), static_cast<double>(n));
    if (space > static_cast<double>(opts.max_assignments))
        throw PreconditionError("k^n = " + std::to_string(k) + "^" + std::to_string(n) +
                                " exceeds the solver budget");

    // Each color class must be nonempty.
    if (k > n)
        return std::nullopt;
    int candidates = 0;
    for (VertexId v : inst.graph.vertices())
        if (degree(inst.graph, v) >= k - 1)
            ++candidates;
    if (candidates < k)
        return std::nullopt;

    BruteColoringState st{inst.graph, k, std::vector<int>(n, -1), false};
    search_colorings(st, inst, 0, -1);
    if (!st.found)
        return std::nullopt;

    Coloring c;
    for (int i = 0; i < n; ++i)
        c.set(inst.graph.vertices()[i], st.colors[i]);
    if (!is_b_coloring(inst, c))
        throw InternalInvariantError("brute b-coloring solver returned an invalid coloring");
    return c;
}

} // namespace bcolab
