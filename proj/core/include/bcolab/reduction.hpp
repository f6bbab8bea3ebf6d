#ifndef BCOLAB_REDUCTION_HPP
#define BCOLAB_REDUCTION_HPP

#include <array>
#include <string>
#include <vector>

#include "bcolab/b_coloring.hpp"
#include "bcolab/circulating_orientation.hpp"
#include "bcolab/graph.hpp"
#include "bcolab/path_decomposition.hpp"

namespace bcolab {

enum class RoleKind {
    SuperstarCenter, // s*, center of the distinguished star
    SuperstarLeaf,   // leaf of s* that belongs to no L-block
    AnonCenter,      // center of anonymous star j
    AnonLeaf,        // leaf i of anonymous star j
    Orig,            // copy of source vertex v
    Pad,             // i-th private neighbor of source vertex v
    X,               // x-vertex of edge e on the given endpoint's side
    Y,               // i-th vertex of Y_e
    Z,               // i-th vertex of Z_e
    Q,               // q_{e,h}, h in {1,2}
    L,               // i-th superstar leaf of block L_{e, endpoint}
};

/// Where an H-vertex came from. `edge` and `star` are 1-based; `index`
/// is 1-based within its group; `endpoint` is a source vertex id.
struct VertexRole {
    RoleKind kind = RoleKind::SuperstarCenter;
    int edge = 0;
    VertexId endpoint = 0;
    int star = 0;
    int index = 0;

    bool operator==(const VertexRole&) const = default;
};

/// The constructed b-coloring instance (H, k) plus everything needed to
/// trace H-vertices back to their gadget of origin. H vertex ids are
/// contiguous 1..|V(H)| in construction order.
struct ReducedInstance {
    Graph h;
    int k = 0;
    std::vector<VertexRole> roles; // roles[id - 1]
    CircOriInstance source;

    VertexId superstar_center = 0;
    std::vector<VertexId> superstar_plain_leaves;
    std::vector<VertexId> anon_centers;             // by star index
    std::vector<std::vector<VertexId>> anon_leaves; // by star index
    std::vector<VertexId> orig;                     // by source vertex index
    std::vector<std::vector<VertexId>> pads;        // by source vertex index
    // Per source edge index; side 0 = smaller endpoint, side 1 = larger.
    std::vector<std::array<VertexId, 2>> x;
    std::vector<std::array<VertexId, 2>> q; // q[ei][h-1]
    std::vector<std::vector<VertexId>> y;
    std::vector<std::vector<VertexId>> z;
    std::vector<std::array<std::vector<VertexId>, 2>> l_blocks;

    const VertexRole& role_of(VertexId hv) const { return roles.at(hv - 1); }
};

/// Color count of the constructed instance: 2W + 3m + n + 2.
int compute_k(const CircOriInstance& inst);

/// Builds (H, k) from the source instance. Throws ReductionError when
/// the source is disconnected, has a weight < 1, or has an odd vertex
/// weight (which makes the pad-set size non-integral and the source a
/// trivial NO). All structural invariants of the construction are
/// verified before returning.
ReducedInstance build_instance(const CircOriInstance& inst);

/// The instance (H, k) as seen by the b-coloring module.
inline BColInstance bcol_instance(const ReducedInstance& red) {
    return BColInstance{red.h, red.k};
}

/// Canonical NO instance of b-coloring (a single edge with k = 3);
/// what `reduce --force-trivial-no` emits for parity-infeasible input.
BColInstance trivial_no_instance();

/// Builds the witness b-coloring of H from a circulating orientation of
/// the source. Fully deterministic: every free choice is resolved by
/// ascending order. Throws PreconditionError if o is not circulating.
Coloring forward_witness(const ReducedInstance& red, const Orientation& o);

/// Reads an orientation back out of a b-coloring of H: each edge is
/// oriented toward the endpoint whose x-vertex is a b-vertex. Throws
/// PreconditionError if c is not a b-coloring, ExtractionError
/// otherwise (see ExtractionErrorKind).
Orientation extract_orientation(const ReducedInstance& red, const Coloring& c);

/// Structural audit of a b-coloring of H, one item per claim family:
/// (a) b-vertices are exactly one per color, located at s*, the source
///     vertices, the q-pairs, the anonymous centers, and one x-vertex
///     per edge;
/// (b) colors on distinct L-blocks are pairwise disjoint;
/// (c) per edge, the Y_e colors equal the L-block colors of the side
///     opposite the b-vertex x.
struct AuditReport {
    struct Item {
        bool ok = true;
        std::string detail;
    };
    Item b_vertex_location;
    Item block_disjoint;
    Item y_block_match;

    bool ok() const { return b_vertex_location.ok && block_disjoint.ok && y_block_match.ok; }
    std::string summary() const;
};

AuditReport audit_coloring(const ReducedInstance& red, const Coloring& c);

/// Lifts a path decomposition of the source graph to one of H:
/// s* joins every bag, each pad gets one bag after its vertex's
/// leftmost bag, each edge gadget gets one bag per Y/Z/L vertex after
/// the leftmost bag containing both endpoints, and width-1 sections for
/// the remaining superstar leaves and the anonymous stars are appended.
/// The result is validated and has width at most pd_width(pd_g) + 6.
PathDecomposition build_pd_for_H(const ReducedInstance& red, const PathDecomposition& pd_g);

} // namespace bcolab

#endif
