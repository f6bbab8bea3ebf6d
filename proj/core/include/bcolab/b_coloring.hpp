#ifndef BCOLAB_B_COLORING_HPP
#define BCOLAB_B_COLORING_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bcolab/graph.hpp"

namespace bcolab {

struct BColInstance {
    Graph graph;
    int k = 1; // number of colors, palette [0..k-1]
};

/// Total mapping vertex id -> color.
class Coloring {
public:
    Coloring() = default;

    void set(VertexId v, int color) { map_[v] = color; }
    bool has(VertexId v) const { return map_.count(v) > 0; }
    /// Throws PreconditionError if v has no color.
    int at(VertexId v) const;
    int size() const { return static_cast<int>(map_.size()); }

    /// Ascending by vertex id; the canonical iteration order.
    std::vector<std::pair<VertexId, int>> sorted_items() const;

    bool operator==(const Coloring&) const = default;

private:
    std::unordered_map<VertexId, int> map_;
};

/// True iff no edge is monochromatic. Throws PreconditionError when the
/// coloring is not total on the vertex set or uses a color outside
/// [0..k-1].
bool is_proper(const BColInstance& inst, const Coloring& c);

/// For each color q, the vertices of color q whose neighborhood covers
/// every color except q, ascending. Throws PreconditionError if c is
/// not proper.
std::vector<std::vector<VertexId>> b_vertices(const BColInstance& inst, const Coloring& c);

struct BColoringCheck {
    bool ok = true;
    std::string reason;
};

/// Full b-coloring check: proper and every color class has a b-vertex.
/// Malformed colorings yield ok = false with a diagnostic instead of an
/// error.
BColoringCheck check_b_coloring(const BColInstance& inst, const Coloring& c);

inline bool is_b_coloring(const BColInstance& inst, const Coloring& c) {
    return check_b_coloring(inst, c).ok;
}

struct BColBruteOptions {
    // Cap on the k^n assignment space; the default corresponds to the
    // k <= 5, n <= 12 desk-scale envelope.
    long long max_assignments = 244'140'625; // 5^12
};

/// Exhaustive decision oracle, never meant for reduced instances.
/// Deterministic: vertices ascending, colors ascending, and vertex
/// number i may use at most one color beyond those already in use.
/// Global prune: fewer than k vertices of degree >= k-1 means no
/// b-coloring can exist. Returns the canonical first solution, or
/// nullopt. Throws PreconditionError when k^n exceeds the budget.
std::optional<Coloring> solve_bcol_brute(const BColInstance& inst,
                                         const BColBruteOptions& opts = {});

} // namespace bcolab

#endif
