#ifndef BCOLAB_TESTS_ORACLES_HPP
#define BCOLAB_TESTS_ORACLES_HPP

// Reference implementations used only by tests. Each takes a
// deliberately different route from the library code (sets and pairwise
// comparisons instead of sorted signatures, odometers instead of
// backtracking) so that a shared bug cannot hide behind agreement.

#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcolab/b_coloring.hpp"
#include "bcolab/circulating_orientation.hpp"
#include "bcolab/graph.hpp"
#include "bcolab/path_decomposition.hpp"

namespace bcolab::oracles {

/// Module number by pairwise signature comparison, quadratic on purpose.
inline int naive_module_number(const Graph& g, const LinearOrder& order, int i) {
    const std::set<VertexId> prefix(order.begin(), order.begin() + i);
    std::vector<std::set<VertexId>> outside;
    outside.reserve(i);
    for (int j = 0; j < i; ++j) {
        std::set<VertexId> sig;
        for (VertexId w : g.neighbors(order[j]))
            if (!prefix.count(w)) sig.insert(w);
        outside.push_back(std::move(sig));
    }
    int classes = 0;
    for (int a = 0; a < i; ++a) {
        bool duplicate = false;
        for (int b = 0; b < a && !duplicate; ++b) duplicate = outside[a] == outside[b];
        if (!duplicate) ++classes;
    }
    return classes;
}

/// Full 2^m enumeration. Bit (m-1-i) of the mask flips edge i, so masks
/// ascend in exactly the order the library solver explores branches and
/// the first witnesses must coincide.
inline std::optional<Orientation> naive_circori(const CircOriInstance& inst) {
    const Graph& g = inst.graph;
    const int m = g.edge_count();
    if (m > 20) throw std::runtime_error("oracle limited to 20 edges");
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
        std::map<VertexId, long long> net;
        std::vector<Arc> arcs;
        arcs.reserve(m);
        for (int i = 0; i < m; ++i) {
            const Edge& e = g.edges()[i];
            const bool flip = (mask >> (m - 1 - i)) & 1ULL;
            const Arc a = flip ? Arc{e.v, e.u} : Arc{e.u, e.v};
            net[a.tail] += inst.weight_at(i);
            net[a.head] -= inst.weight_at(i);
            arcs.push_back(a);
        }
        bool balanced = true;
        for (const auto& [v, b] : net)
            if (b != 0) balanced = false;
        if (balanced) return Orientation::build(g, arcs);
    }
    return std::nullopt;
}

/// b-coloring validity over dense colors by vertex index. Distinct
/// neighbor colors are counted by sort-and-unique, a different route
/// from the library's stamp array.
inline bool valid_b_coloring(const BColInstance& inst, const std::vector<int>& colors) {
    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    for (int i = 0; i < n; ++i)
        if (colors[i] < 0 || colors[i] >= inst.k) return false;
    for (const Edge& e : g.edges())
        if (colors[g.index_of(e.u)] == colors[g.index_of(e.v)]) return false;
    std::vector<bool> has_b(inst.k, false);
    std::vector<int> seen;
    for (int i = 0; i < n; ++i) {
        seen.clear();
        for (VertexId w : g.neighbors(g.vertices()[i])) {
            const int q = colors[g.index_of(w)];
            if (q != colors[i]) seen.push_back(q);
        }
        std::sort(seen.begin(), seen.end());
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        if (static_cast<int>(seen.size()) == inst.k - 1) has_b[colors[i]] = true;
    }
    for (bool b : has_b)
        if (!b) return false;
    return true;
}

inline bool valid_b_coloring(const BColInstance& inst, const Coloring& c) {
    std::vector<int> colors(inst.graph.vertex_count(), -1);
    for (int i = 0; i < inst.graph.vertex_count(); ++i) {
        const VertexId v = inst.graph.vertices()[i];
        if (!c.has(v)) return false;
        colors[i] = c.at(v);
    }
    return valid_b_coloring(inst, colors);
}

/// Odometer over all k^n assignments, vertex 0 most significant, so the
/// first hit is the lexicographically least valid assignment. The
/// library solver's symmetry breaking returns the same one: relabeling
/// any valid coloring by first-use order only ever lowers it.
inline std::optional<Coloring> naive_bcol(const BColInstance& inst) {
    const int n = inst.graph.vertex_count();
    const int k = inst.k;
    if (std::pow(static_cast<double>(k), static_cast<double>(n)) > 5e7)
        throw std::runtime_error("oracle budget exceeded");
    std::vector<int> colors(n, 0);
    while (true) {
        if (valid_b_coloring(inst, colors)) {
            Coloring c;
            for (int i = 0; i < n; ++i) c.set(inst.graph.vertices()[i], colors[i]);
            return c;
        }
        int pos = n - 1;
        while (pos >= 0 && colors[pos] == k - 1) colors[pos--] = 0;
        if (pos < 0) return std::nullopt;
        ++colors[pos];
    }
}

/// Reference path-decomposition validator: every check by direct scan,
/// same axiom precedence as the library (vertex, edge, interval).
inline PdValidation slow_validate_pd(const Graph& g, const PathDecomposition& pd) {
    for (std::size_t b = 0; b < pd.bags.size(); ++b)
        for (VertexId v : pd.bags[b])
            if (!g.has_vertex(v))
                return {false, PdAxiom::VertexCoverage, "unknown vertex in a bag"};
    for (VertexId v : g.vertices()) {
        bool found = false;
        for (const auto& bag : pd.bags)
            for (VertexId w : bag)
                if (w == v) found = true;
        if (!found) return {false, PdAxiom::VertexCoverage, "vertex in no bag"};
    }
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (const auto& bag : pd.bags) {
            bool has_u = false, has_v = false;
            for (VertexId w : bag) {
                has_u = has_u || w == e.u;
                has_v = has_v || w == e.v;
            }
            if (has_u && has_v) covered = true;
        }
        if (!covered) return {false, PdAxiom::EdgeCoverage, "edge in no bag"};
    }
    for (VertexId v : g.vertices()) {
        std::vector<int> occ;
        for (std::size_t b = 0; b < pd.bags.size(); ++b)
            for (VertexId w : pd.bags[b])
                if (w == v) occ.push_back(static_cast<int>(b));
        for (std::size_t j = 0; j + 1 < occ.size(); ++j)
            if (occ[j + 1] != occ[j] + 1)
                return {false, PdAxiom::Interval, "occurrence gap"};
    }
    return {};
}

} // namespace bcolab::oracles

#endif
