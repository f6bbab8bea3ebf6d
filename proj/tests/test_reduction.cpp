#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "bcolab/errors.hpp"
#include "bcolab/generators.hpp"
#include "bcolab/graph.hpp"
#include "bcolab/reduction.hpp"
#include "oracles.hpp"

using namespace bcolab;

namespace {

CircOriInstance triangle_all2() {
    Graph g = Graph::build({1, 2, 3}, {Edge(1, 2), Edge(1, 3), Edge(2, 3)});
    return CircOriInstance::build(g, {2, 2, 2});
}

CircOriInstance single_edge(int w) {
    return CircOriInstance::build(Graph::build({1, 2}, {Edge(1, 2)}), {w});
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("compute_k on frozen examples") {
    CHECK(compute_k(single_edge(1)) == 9);
    CHECK(compute_k(single_edge(2)) == 11);
    Graph p3 = Graph::build({1, 2, 3}, {Edge(1, 2), Edge(2, 3)});
    CHECK(compute_k(CircOriInstance::build(p3, {1, 1})) == 15);
    CHECK(compute_k(triangle_all2()) == 26);
}

TEST_CASE("build_instance rejects unusable sources") {
    Graph split = Graph::build({1, 2, 3, 4}, {Edge(1, 2), Edge(3, 4)});
    try {
        build_instance(CircOriInstance::build(split, {2, 2}));
        FAIL("expected ReductionError");
    } catch (const ReductionError& e) {
        CHECK(e.kind() == ReductionErrorKind::Disconnected);
    }

    Graph tri = Graph::build({1, 2, 3}, {Edge(1, 2), Edge(1, 3), Edge(2, 3)});
    try {
        build_instance(CircOriInstance::build(tri, {1, 1, 2}));
        FAIL("expected ReductionError");
    } catch (const ReductionError& e) {
        CHECK(e.kind() == ReductionErrorKind::ParityInfeasible);
    }

    // aggregate bypasses CircOriInstance::build on purpose
    try {
        build_instance(CircOriInstance{tri, {0, 2, 2}});
        FAIL("expected ReductionError");
    } catch (const ReductionError& e) {
        CHECK(e.kind() == ReductionErrorKind::ZeroWeight);
    }
}

TEST_CASE("construction sizes on the all-2 triangle") {
    ReducedInstance red = build_instance(triangle_all2());
    CHECK(red.k == 26);
    CHECK(red.h.vertex_count() == 499);

    // ids are contiguous in construction order
    for (int i = 0; i < red.h.vertex_count(); ++i)
        CHECK(red.h.vertices()[i] == i + 1);
    CHECK(red.roles.size() == 499);

    CHECK(red.superstar_plain_leaves.size() == 13); // 3m + n + 1
    CHECK(red.anon_centers.size() == 13);           // 2W + 1
    for (const auto& leaves : red.anon_leaves) CHECK(leaves.size() == 25);
    REQUIRE(red.orig.size() == 3);
    for (const auto& p : red.pads) CHECK(p.size() == 19); // k - 3W_v/2 - 1
    REQUIRE(red.x.size() == 3);
    for (int ei = 0; ei < 3; ++ei) {
        CHECK(red.y[ei].size() == 2);
        CHECK(red.z[ei].size() == 19); // k - 2w - 3
        CHECK(red.l_blocks[ei][0].size() == 2);
        CHECK(red.l_blocks[ei][1].size() == 2);
    }

    CHECK(red.role_of(red.superstar_center).kind == RoleKind::SuperstarCenter);
    CHECK(red.role_of(red.orig[1]).kind == RoleKind::Orig);
    CHECK(red.role_of(red.orig[1]).endpoint == 2);
    CHECK(red.role_of(red.x[0][0]).kind == RoleKind::X);
    CHECK(red.role_of(red.x[0][0]).edge == 1);
    CHECK(red.role_of(red.x[0][0]).endpoint == 1);
    CHECK(red.role_of(red.x[0][1]).endpoint == 2);
    CHECK(red.role_of(red.q[2][1]).kind == RoleKind::Q);
    CHECK(red.role_of(red.q[2][1]).index == 2);
    CHECK(red.role_of(red.l_blocks[1][1][0]).kind == RoleKind::L);
    CHECK(red.role_of(red.l_blocks[1][1][0]).edge == 2);
    CHECK(red.role_of(red.l_blocks[1][1][0]).endpoint == 3);
}

TEST_CASE("construction sizes on a single heavy edge") {
    ReducedInstance red = build_instance(single_edge(2));
    CHECK(red.k == 11);
    CHECK(red.h.vertex_count() == 92);
    CHECK(red.superstar_plain_leaves.size() == 6); // 3 + 2 + 1
    CHECK(red.anon_centers.size() == 5);
    for (const auto& p : red.pads) CHECK(p.size() == 7); // 11 - 3 - 1
    CHECK(red.z[0].size() == 4);                         // 11 - 4 - 3
}

TEST_CASE("degrees by role match the closed forms") {
    for (const CircOriInstance& inst :
         {triangle_all2(), single_edge(2),
          CircOriInstance::build(Graph::build({1, 2, 3}, {Edge(1, 2), Edge(2, 3)}),
                                 {2, 2})}) {
        ReducedInstance red = build_instance(inst);
        for (VertexId hv : red.h.vertices()) {
            const VertexRole& r = red.role_of(hv);
            long long expect = -1;
            switch (r.kind) {
            case RoleKind::SuperstarCenter: expect = red.k - 1; break;
            case RoleKind::AnonCenter: expect = red.k - 1; break;
            case RoleKind::Q: expect = red.k; break;
            case RoleKind::X: {
                const int ei = r.edge - 1;
                const int w = inst.weight_at(ei);
                expect = 2 * w + (red.k - 2 * w - 3) + 2;
                break;
            }
            case RoleKind::Orig:
                expect = red.k + vertex_weight(inst, r.endpoint) / 2 - 1;
                break;
            case RoleKind::SuperstarLeaf:
            case RoleKind::AnonLeaf:
            case RoleKind::Pad: expect = 1; break;
            case RoleKind::Y:
            case RoleKind::Z: expect = 4; break;
            case RoleKind::L: expect = 5; break;
            }
            CHECK(degree(red.h, hv) == expect);
        }
    }
}

TEST_CASE("empty source degenerates gracefully") {
    CircOriInstance inst = CircOriInstance::build(Graph::build({}, {}), {});
    ReducedInstance red = build_instance(inst);
    CHECK(red.k == 2);
    CHECK(red.h.vertex_count() == 4);
    auto o = solve_circori_brute(inst);
    REQUIRE(o.has_value());
    Coloring c = forward_witness(red, *o);
    CHECK(is_b_coloring(bcol_instance(red), c));
}

TEST_CASE("forward witness colors follow the fixed palette") {
    ReducedInstance red = build_instance(triangle_all2());
    auto o = solve_circori_brute(red.source);
    REQUIRE(o.has_value());
    Coloring c = forward_witness(red, *o);
    CHECK(is_b_coloring(bcol_instance(red), c));

    const int n = 3, m = 3;
    CHECK(c.at(red.superstar_center) == 0);
    CHECK(c.at(red.orig[0]) == 1);
    CHECK(c.at(red.orig[2]) == 3);
    CHECK(c.at(red.q[0][0]) == n + 1);
    CHECK(c.at(red.q[0][1]) == m + n + 1);
    CHECK(c.at(red.x[0][0]) == 2 * m + n + 1);
    CHECK(c.at(red.x[0][1]) == 2 * m + n + 1);
    CHECK(c.at(red.anon_centers[0]) == 3 * m + n + 1);
    CHECK(c.at(red.anon_centers[12]) == 3 * m + n + 13);

    // L-blocks carry 3m+n+1 .. 3m+n+2W consecutively
    int next = 3 * m + n + 1;
    for (int ei = 0; ei < 3; ++ei)
        for (int side = 0; side < 2; ++side)
            for (VertexId lv : red.l_blocks[ei][side]) CHECK(c.at(lv) == next++);
    CHECK(next == 3 * m + n + 13);

    // exactly k colors in use
    std::set<int> used;
    for (auto [v, q] : c.sorted_items()) used.insert(q);
    CHECK(static_cast<int>(used.size()) == red.k);

    Orientation not_circ =
        Orientation::build(red.source.graph, {Arc{1, 2}, Arc{1, 3}, Arc{2, 3}});
    CHECK_THROWS_AS(forward_witness(red, not_circ), PreconditionError);
}

TEST_CASE("extraction inverts the forward witness") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto [inst, planted] = gen_yes_instance(seed, 4 + static_cast<int>(seed % 3), 2, 2);
        ReducedInstance red = build_instance(inst);
        auto solved = solve_circori_brute(inst);
        REQUIRE(solved.has_value());
        Coloring c = forward_witness(red, *solved);
        CHECK(extract_orientation(red, c) == *solved);

        // the planted witness round-trips too
        CHECK(extract_orientation(red, forward_witness(red, planted)) == planted);
    }
}

TEST_CASE("extraction demands a b-coloring") {
    ReducedInstance red = build_instance(single_edge(2));
    Coloring c;
    for (VertexId v : red.h.vertices()) c.set(v, 0);
    try {
        extract_orientation(red, c);
        FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
        CHECK(contains(e.what(), "extraction requires a b-coloring"));
    }
}

TEST_CASE("extraction failure kinds surface through doctored role tables") {
    ReducedInstance red = build_instance(triangle_all2());
    auto solved = solve_circori_brute(red.source);
    REQUIRE(solved.has_value());
    Coloring c = forward_witness(red, *solved);

    SUBCASE("neither x is a b-vertex") {
        ReducedInstance bad = red;
        bad.x[0] = {red.pads[0][0], red.pads[0][1]};
        try {
            extract_orientation(bad, c);
            FAIL("expected ExtractionError");
        } catch (const ExtractionError& e) {
            CHECK(e.kind() == ExtractionErrorKind::MalformedColoring);
        }
    }
    SUBCASE("both x are b-vertices") {
        ReducedInstance bad = red;
        bad.x[0] = {red.superstar_center, red.orig[0]};
        try {
            extract_orientation(bad, c);
            FAIL("expected ExtractionError");
        } catch (const ExtractionError& e) {
            CHECK(e.kind() == ExtractionErrorKind::MalformedColoring);
        }
    }
    SUBCASE("flipping one edge breaks balance") {
        ReducedInstance bad = red;
        std::swap(bad.x[0][0], bad.x[0][1]);
        try {
            extract_orientation(bad, c);
            FAIL("expected ExtractionError");
        } catch (const ExtractionError& e) {
            CHECK(e.kind() == ExtractionErrorKind::BalanceViolation);
        }
    }
}

TEST_CASE("audit passes on forward witnesses") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        auto [inst, planted] = gen_yes_instance(seed, 4, 2, 2);
        ReducedInstance red = build_instance(inst);
        Coloring c = forward_witness(red, planted);
        AuditReport rep = audit_coloring(red, c);
        CHECK(rep.ok());
        CHECK(contains(rep.summary(), "ok"));
    }
}

TEST_CASE("audit items fail on doctored role tables") {
    ReducedInstance red = build_instance(triangle_all2());
    auto solved = solve_circori_brute(red.source);
    REQUIRE(solved.has_value());
    Coloring c = forward_witness(red, *solved);

    SUBCASE("misplaced x list") {
        ReducedInstance bad = red;
        bad.x[0] = {red.pads[0][0], red.pads[0][1]};
        AuditReport rep = audit_coloring(bad, c);
        CHECK_FALSE(rep.b_vertex_location.ok);
    }
    SUBCASE("shared block") {
        ReducedInstance bad = red;
        bad.l_blocks[0][0] = red.l_blocks[1][0];
        AuditReport rep = audit_coloring(bad, c);
        CHECK_FALSE(rep.block_disjoint.ok);
        CHECK(contains(rep.block_disjoint.detail, "blocks"));
    }
    SUBCASE("swapped block sides") {
        ReducedInstance bad = red;
        std::swap(bad.l_blocks[0][0], bad.l_blocks[0][1]);
        AuditReport rep = audit_coloring(bad, c);
        CHECK_FALSE(rep.y_block_match.ok);
    }
}

TEST_CASE("recoloring the non-b x to an opposite-block color keeps everything valid") {
    ReducedInstance red = build_instance(triangle_all2());
    auto solved = solve_circori_brute(red.source);
    REQUIRE(solved.has_value());
    Coloring c = forward_witness(red, *solved);

    const Arc a = solved->arcs()[0];
    const Edge e = red.source.graph.edges()[0];
    const int tail_side = (a.tail == e.u) ? 0 : 1;
    Coloring c2 = c;
    c2.set(red.x[0][tail_side], c.at(red.l_blocks[0][1 - tail_side][0]));

    CHECK(is_b_coloring(bcol_instance(red), c2));
    CHECK(audit_coloring(red, c2).ok());
    CHECK(extract_orientation(red, c2) == *solved);
}

TEST_CASE("trivial no instance") {
    BColInstance no = trivial_no_instance();
    CHECK(no.k == 3);
    CHECK(no.graph.vertex_count() == 2);
    CHECK_FALSE(solve_bcol_brute(no).has_value());
}

TEST_CASE("lifted path decompositions stay valid and narrow") {
    SUBCASE("triangle") {
        ReducedInstance red = build_instance(triangle_all2());
        PathDecomposition pd = PathDecomposition::from_bags({{1, 2, 3}});
        PathDecomposition lifted = build_pd_for_H(red, pd);
        CHECK(validate_pd(red.h, lifted).ok);
        CHECK(pd_width(lifted) <= pd_width(pd) + 6);
    }
    SUBCASE("even path") {
        Graph p3 = Graph::build({1, 2, 3}, {Edge(1, 2), Edge(2, 3)});
        ReducedInstance red = build_instance(CircOriInstance::build(p3, {2, 2}));
        PathDecomposition pd = PathDecomposition::from_bags({{1, 2}, {2, 3}});
        PathDecomposition lifted = build_pd_for_H(red, pd);
        PdValidation v = validate_pd(red.h, lifted);
        INFO(v.message);
        CHECK(v.ok);
        CHECK(pd_width(lifted) <= 7);
    }
    SUBCASE("invalid source decomposition is rejected") {
        ReducedInstance red = build_instance(triangle_all2());
        PathDecomposition bad = PathDecomposition::from_bags({{1, 2}, {2, 3}});
        CHECK_THROWS_AS(build_pd_for_H(red, bad), PreconditionError);
    }
}
