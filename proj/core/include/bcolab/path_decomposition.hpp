#ifndef BCOLAB_PATH_DECOMPOSITION_HPP
#define BCOLAB_PATH_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "bcolab/graph.hpp"

namespace bcolab {

/// Ordered sequence of vertex bags. Bags are stored sorted-unique.
struct PathDecomposition {
    std::vector<std::vector<VertexId>> bags;

    static PathDecomposition from_bags(std::vector<std::vector<VertexId>> bags);

    int bag_count() const { return static_cast<int>(bags.size()); }
};

/// Permutation of the vertex set of some graph.
using LinearOrder = std::vector<VertexId>;

enum class PdAxiom { VertexCoverage, EdgeCoverage, Interval };

/// Outcome of validate_pd. Violations are a value, not an error; the
/// message names the first violated axiom and the offending
/// vertex/edge/bag indices.
struct PdValidation {
    bool ok = true;
    PdAxiom axiom = PdAxiom::VertexCoverage;
    std::string message;
};

/// Checks the three path-decomposition axioms against g in the order
/// vertex coverage, edge coverage, occurrence intervals.
PdValidation validate_pd(const Graph& g, const PathDecomposition& pd);

/// Maximum bag size minus one. Throws PreconditionError on an empty
/// decomposition.
int pd_width(const PathDecomposition& pd);

/// Orders vertices by the index of their leftmost bag, ties broken by
/// ascending vertex id. The result has module-width at most
/// pd_width(pd) + 2. Throws PreconditionError if validate_pd fails.
LinearOrder pd_to_linear_order(const Graph& g, const PathDecomposition& pd);

/// Number of equivalence classes of the prefix {order[0..i-1]} under
/// "same neighborhood outside the prefix". i is 1-based; throws
/// PreconditionError on a malformed order or out-of-range i.
int module_number(const Graph& g, const LinearOrder& order, int i);

/// Maximum module number over all prefixes of the order.
int module_width(const Graph& g, const LinearOrder& order);

} // namespace bcolab

#endif
