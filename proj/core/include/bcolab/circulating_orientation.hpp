#ifndef BCOLAB_CIRCULATING_ORIENTATION_HPP
#define BCOLAB_CIRCULATING_ORIENTATION_HPP

#include <optional>
#include <vector>

#include "bcolab/graph.hpp"

namespace bcolab {

/// Magnitudes are unary in the problem statement, so the sum of all
/// edge weights is capped.
inline constexpr long long kDefaultUnaryCap = 10'000;

/// Undirected graph with positive integer edge weights.
struct CircOriInstance {
    Graph graph;
    std::vector<int> weights; // aligned with graph.edges()

    /// Throws PreconditionError on a weight < 1, a weight-count mismatch,
    /// or a total weight above the unary cap.
    static CircOriInstance build(Graph graph, std::vector<int> weights,
                                 long long unary_cap = kDefaultUnaryCap);

    int weight_at(int edge_index) const { return weights[edge_index]; }
    int weight(VertexId a, VertexId b) const;
};

/// W_v: sum of weights of edges incident to v.
long long vertex_weight(const CircOriInstance& inst, VertexId v);

/// W: sum of all edge weights.
long long total_weight(const CircOriInstance& inst);

/// True iff weighted out-degree equals weighted in-degree at every
/// vertex. Throws PreconditionError if o does not orient exactly the
/// instance's edges.
bool is_circulating(const CircOriInstance& inst, const Orientation& o);

/// Necessary (not sufficient) condition: every W_v must be even, since
/// balance forces in-weight = W_v / 2.
bool parity_feasible(const CircOriInstance& inst);

struct CircOriBruteOptions {
    int max_edges = 24;
};

/// Exhaustive decision oracle. Edges are processed in canonical order;
/// at each edge the (min -> max) arc is tried first, so the witness is
/// the lexicographically first circulating orientation. A branch is
/// abandoned as soon as some vertex's committed in- or out-weight
/// exceeds W_v / 2, which is forced at any balanced leaf. Throws
/// PreconditionError when the edge cap is exceeded.
std::optional<Orientation> solve_circori_brute(const CircOriInstance& inst,
                                               const CircOriBruteOptions& opts = {});

} // namespace bcolab

#endif
