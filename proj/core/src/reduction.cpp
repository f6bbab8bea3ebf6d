#include "bcolab/reduction.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bcolab/errors.hpp"

namespace bcolab {

namespace {

struct HBuilder {
    std::vector<VertexId> verts;
    std::vector<Edge> edges;
    std::vector<VertexRole> roles;

    VertexId add(const VertexRole& r) {
        VertexId id = static_cast<VertexId>(verts.size()) + 1;
        verts.push_back(id);
        roles.push_back(r);
        return id;
    }
    void link(VertexId a, VertexId b) { edges.emplace_back(a, b); }
};

std::string describe(const VertexRole& r) {
    std::ostringstream os;
    switch (r.kind) {
    case RoleKind::SuperstarCenter: os << "superstar center"; break;
    case RoleKind::SuperstarLeaf: os << "superstar leaf " << r.index; break;
    case RoleKind::AnonCenter: os << "center of star " << r.star; break;
    case RoleKind::AnonLeaf: os << "leaf " << r.index << " of star " << r.star; break;
    case RoleKind::Orig: os << "copy of source vertex " << r.endpoint; break;
    case RoleKind::Pad: os << "pad " << r.index << " of source vertex " << r.endpoint; break;
    case RoleKind::X: os << "x-vertex of edge " << r.edge << " at " << r.endpoint; break;
    case RoleKind::Y: os << "Y-vertex " << r.index << " of edge " << r.edge; break;
    case RoleKind::Z: os << "Z-vertex " << r.index << " of edge " << r.edge; break;
    case RoleKind::Q: os << "q_" << r.index << " of edge " << r.edge; break;
    case RoleKind::L: os << "L-vertex " << r.index << " of edge " << r.edge << " at "
                         << r.endpoint;
        break;
    }
    return os.str();
}

long long expected_degree(const ReducedInstance& red, const VertexRole& r) {
    switch (r.kind) {
    case RoleKind::SuperstarCenter:
    case RoleKind::AnonCenter:
    case RoleKind::X:
        return red.k - 1;
    case RoleKind::SuperstarLeaf:
    case RoleKind::AnonLeaf:
    case RoleKind::Pad:
        return 1;
    case RoleKind::Orig:
        return red.k + vertex_weight(red.source, r.endpoint) / 2 - 1;
    case RoleKind::Y:
    case RoleKind::Z:
        return 4;
    case RoleKind::Q:
        return red.k;
    case RoleKind::L:
        return 5;
    }
    return -1;
}

void verify_construction(const ReducedInstance& red) {
    const long long n = red.source.graph.vertex_count();
    const long long m = red.source.graph.edge_count();
    const long long W = total_weight(red.source);
    const long long k = red.k;

    const long long expected_order = k * (2 * W + 2 + n + m) - 4 * W + m;
    if (red.h.vertex_count() != expected_order)
        throw InternalInvariantError("constructed graph has " +
                                     std::to_string(red.h.vertex_count()) + " vertices, expected " +
                                     std::to_string(expected_order));
    if (static_cast<long long>(red.roles.size()) != expected_order)
        throw InternalInvariantError("role table size mismatch");

    for (VertexId hv : red.h.vertices()) {
        const VertexRole& r = red.role_of(hv);
        long long want = expected_degree(red, r);
        long long got = degree(red.h, hv);
        if (got != want)
            throw InternalInvariantError("vertex " + std::to_string(hv) + " (" + describe(r) +
                                         ") has degree " + std::to_string(got) + ", expected " +
                                         std::to_string(want));
    }
}

std::string join_problems(const std::vector<std::string>& problems) {
    std::ostringstream os;
    const std::size_t shown = std::min<std::size_t>(problems.size(), 4);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i > 0) os << "; ";
        os << problems[i];
    }
    if (problems.size() > shown) os << "; and " << problems.size() - shown << " more";
    return os.str();
}

} // namespace

int compute_k(const CircOriInstance& inst) {
    long long k = 2 * total_weight(inst) + 3LL * inst.graph.edge_count() +
                  inst.graph.vertex_count() + 2;
    return static_cast<int>(k);
}

BColInstance trivial_no_instance() {
    Graph g = Graph::build({1, 2}, {Edge(1, 2)});
    return BColInstance{std::move(g), 3};
}

ReducedInstance build_instance(const CircOriInstance& inst) {
    for (int w : inst.weights)
        if (w < 1) throw ReductionError(ReductionErrorKind::ZeroWeight, "edge weight below 1");
    if (!is_connected(inst.graph))
        throw ReductionError(ReductionErrorKind::Disconnected, "source graph is disconnected");
    if (!parity_feasible(inst))
        throw ReductionError(ReductionErrorKind::ParityInfeasible,
                             "a vertex has odd total incident weight, so no circulating "
                             "orientation exists");

    const Graph& g = inst.graph;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const long long W = total_weight(inst);
    const int k = compute_k(inst);

    ReducedInstance red;
    red.k = k;
    red.source = inst;

    HBuilder hb;

    red.superstar_center = hb.add({.kind = RoleKind::SuperstarCenter});
    red.l_blocks.resize(m);
    for (int ei = 0; ei < m; ++ei) {
        const Edge& e = g.edges()[ei];
        const int we = inst.weight_at(ei);
        for (int side = 0; side < 2; ++side) {
            const VertexId ep = side == 0 ? e.u : e.v;
            for (int i = 0; i < we; ++i) {
                VertexId id = hb.add(
                    {.kind = RoleKind::L, .edge = ei + 1, .endpoint = ep, .index = i + 1});
                hb.link(red.superstar_center, id);
                red.l_blocks[ei][side].push_back(id);
            }
        }
    }
    const int plain = k - 1 - static_cast<int>(2 * W); // = 3m + n + 1
    for (int i = 0; i < plain; ++i) {
        VertexId id = hb.add({.kind = RoleKind::SuperstarLeaf, .index = i + 1});
        hb.link(red.superstar_center, id);
        red.superstar_plain_leaves.push_back(id);
    }

    const int star_count = static_cast<int>(2 * W) + 1;
    for (int j = 0; j < star_count; ++j) {
        VertexId c = hb.add({.kind = RoleKind::AnonCenter, .star = j + 1});
        red.anon_centers.push_back(c);
        std::vector<VertexId> leaves;
        for (int i = 0; i < k - 1; ++i) {
            VertexId id = hb.add({.kind = RoleKind::AnonLeaf, .star = j + 1, .index = i + 1});
            hb.link(c, id);
            leaves.push_back(id);
        }
        red.anon_leaves.push_back(std::move(leaves));
    }

    red.orig.resize(n);
    red.pads.resize(n);
    for (int vi = 0; vi < n; ++vi) {
        const VertexId v = g.vertices()[vi];
        VertexId ov = hb.add({.kind = RoleKind::Orig, .endpoint = v});
        red.orig[vi] = ov;
        // Parity feasibility makes 3 W_v / 2 integral.
        const long long pad_count = k - 3 * vertex_weight(inst, v) / 2 - 1;
        if (pad_count <= 0)
            throw InternalInvariantError("non-positive pad count at source vertex " +
                                         std::to_string(v));
        for (long long i = 0; i < pad_count; ++i) {
            VertexId p = hb.add({.kind = RoleKind::Pad,
                                 .endpoint = v,
                                 .index = static_cast<int>(i) + 1});
            hb.link(ov, p);
            red.pads[vi].push_back(p);
        }
        for (VertexId nb : g.neighbors(v)) {
            const int ei = g.edge_index(v, nb);
            const int side = v < nb ? 0 : 1;
            for (VertexId lv : red.l_blocks[ei][side]) hb.link(ov, lv);
        }
    }

    red.x.resize(m);
    red.q.resize(m);
    red.y.resize(m);
    red.z.resize(m);
    for (int ei = 0; ei < m; ++ei) {
        const Edge& e = g.edges()[ei];
        const int we = inst.weight_at(ei);
        red.x[ei][0] = hb.add({.kind = RoleKind::X, .edge = ei + 1, .endpoint = e.u});
        red.x[ei][1] = hb.add({.kind = RoleKind::X, .edge = ei + 1, .endpoint = e.v});
        for (int i = 0; i < we; ++i)
            red.y[ei].push_back(hb.add({.kind = RoleKind::Y, .edge = ei + 1, .index = i + 1}));
        const int zc = k - 2 * we - 3;
        if (zc <= 0)
            throw InternalInvariantError("non-positive Z size at edge " + std::to_string(ei + 1));
        for (int i = 0; i < zc; ++i)
            red.z[ei].push_back(hb.add({.kind = RoleKind::Z, .edge = ei + 1, .index = i + 1}));
        red.q[ei][0] = hb.add({.kind = RoleKind::Q, .edge = ei + 1, .index = 1});
        red.q[ei][1] = hb.add({.kind = RoleKind::Q, .edge = ei + 1, .index = 2});

        for (int side = 0; side < 2; ++side) {
            const VertexId xs = red.x[ei][side];
            for (VertexId yv : red.y[ei]) hb.link(xs, yv);
            for (VertexId zv : red.z[ei]) hb.link(xs, zv);
            for (VertexId lv : red.l_blocks[ei][side]) hb.link(xs, lv);
        }
        const VertexId ou = red.orig[g.index_of(e.u)];
        const VertexId ov = red.orig[g.index_of(e.v)];
        for (VertexId yv : red.y[ei]) {
            hb.link(ou, yv);
            hb.link(ov, yv);
        }
        hb.link(red.q[ei][0], red.q[ei][1]);
        for (VertexId qh : {red.q[ei][0], red.q[ei][1]}) {
            for (VertexId zv : red.z[ei]) hb.link(qh, zv);
            for (int side = 0; side < 2; ++side)
                for (VertexId lv : red.l_blocks[ei][side]) hb.link(qh, lv);
            hb.link(qh, red.x[ei][0]);
            hb.link(qh, red.x[ei][1]);
        }
    }

    red.roles = std::move(hb.roles);
    red.h = Graph::build(std::move(hb.verts), std::move(hb.edges));
    verify_construction(red);
    return red;
}

Coloring forward_witness(const ReducedInstance& red, const Orientation& o) {
    if (!is_circulating(red.source, o))
        throw PreconditionError("forward witness requires a circulating orientation");

    const Graph& g = red.source.graph;
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int k = red.k;

    Coloring c;
    c.set(red.superstar_center, 0);
    for (int vi = 0; vi < n; ++vi) c.set(red.orig[vi], vi + 1);

    // L-blocks take the consecutive range (3m+n+1 .. 3m+n+2W) in block order.
    std::vector<std::array<int, 2>> block_start(m);
    int next_color = 3 * m + n + 1;
    for (int ei = 0; ei < m; ++ei) {
        for (int side = 0; side < 2; ++side) {
            block_start[ei][side] = next_color;
            const auto& block = red.l_blocks[ei][side];
            for (std::size_t i = 0; i < block.size(); ++i)
                c.set(block[i], next_color + static_cast<int>(i));
            next_color += static_cast<int>(block.size());
        }
    }

    {
        std::size_t idx = 0;
        for (int col = 1; col <= 3 * m + n; ++col)
            c.set(red.superstar_plain_leaves.at(idx++), col);
        c.set(red.superstar_plain_leaves.at(idx++), k - 1);
        if (idx != red.superstar_plain_leaves.size())
            throw InternalInvariantError("superstar leaf color count mismatch");
    }

    for (std::size_t j = 0; j < red.anon_centers.size(); ++j) {
        const int center_color = 3 * m + n + static_cast<int>(j) + 1;
        c.set(red.anon_centers[j], center_color);
        int col = 0;
        for (VertexId leaf : red.anon_leaves[j]) {
            if (col == center_color) ++col;
            c.set(leaf, col++);
        }
    }

    for (int ei = 0; ei < m; ++ei) {
        const int i1 = ei + 1;
        c.set(red.q[ei][0], n + i1);
        c.set(red.q[ei][1], m + n + i1);
        c.set(red.x[ei][0], 2 * m + n + i1);
        c.set(red.x[ei][1], 2 * m + n + i1);

        const Arc& a = o.arcs()[ei];
        const int tail_side = a.tail == g.edges()[ei].u ? 0 : 1;
        for (std::size_t i = 0; i < red.y[ei].size(); ++i)
            c.set(red.y[ei][i], block_start[ei][tail_side] + static_cast<int>(i));

        std::vector<char> excluded(k, 0);
        for (int side = 0; side < 2; ++side)
            for (std::size_t i = 0; i < red.l_blocks[ei][side].size(); ++i)
                excluded[block_start[ei][side] + static_cast<int>(i)] = 1;
        excluded[n + i1] = 1;
        excluded[m + n + i1] = 1;
        excluded[2 * m + n + i1] = 1;
        std::size_t zi = 0;
        for (int col = 0; col < k; ++col) {
            if (excluded[col]) continue;
            if (zi >= red.z[ei].size())
                throw InternalInvariantError("Z color surplus at edge " + std::to_string(i1));
            c.set(red.z[ei][zi++], col);
        }
        if (zi != red.z[ei].size())
            throw InternalInvariantError("Z color deficit at edge " + std::to_string(i1));
    }

    // Pads absorb whatever is missing around their source vertex; balance
    // of the orientation makes the count come out exactly right.
    for (int vi = 0; vi < n; ++vi) {
        std::vector<char> seen(k, 0);
        seen[c.at(red.orig[vi])] = 1;
        for (VertexId nb : red.h.neighbors(red.orig[vi]))
            if (red.role_of(nb).kind != RoleKind::Pad) seen[c.at(nb)] = 1;
        std::size_t pi = 0;
        for (int col = 0; col < k; ++col) {
            if (seen[col]) continue;
            if (pi >= red.pads[vi].size())
                throw InternalInvariantError("pad color surplus at source vertex " +
                                             std::to_string(g.vertices()[vi]));
            c.set(red.pads[vi][pi++], col);
        }
        if (pi != red.pads[vi].size())
            throw InternalInvariantError("pad color deficit at source vertex " +
                                         std::to_string(g.vertices()[vi]));
    }

    BColoringCheck chk = check_b_coloring(bcol_instance(red), c);
    if (!chk.ok) throw InternalInvariantError("forward witness rejected: " + chk.reason);
    return c;
}

Orientation extract_orientation(const ReducedInstance& red, const Coloring& c) {
    const BColInstance bi = bcol_instance(red);
    BColoringCheck chk = check_b_coloring(bi, c);
    if (!chk.ok) throw PreconditionError("extraction requires a b-coloring: " + chk.reason);

    std::vector<char> is_b(red.h.vertex_count() + 1, 0);
    for (const auto& per_color : b_vertices(bi, c))
        for (VertexId v : per_color) is_b[v] = 1;

    const Graph& g = red.source.graph;
    std::vector<Arc> arcs;
    arcs.reserve(g.edge_count());
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const bool bu = is_b[red.x[ei][0]];
        const bool bv = is_b[red.x[ei][1]];
        if (bu == bv)
            throw ExtractionError(ExtractionErrorKind::MalformedColoring,
                                  std::string("edge ") + std::to_string(ei + 1) + ": " +
                                      (bu ? "both" : "neither") +
                                      " of its x-vertices are b-vertices");
        const Edge& e = g.edges()[ei];
        arcs.push_back(bu ? Arc{e.v, e.u} : Arc{e.u, e.v});
    }
    Orientation o = Orientation::build(g, std::move(arcs));
    if (!is_circulating(red.source, o))
        throw ExtractionError(ExtractionErrorKind::BalanceViolation,
                              "extracted orientation is not balanced");
    return o;
}

std::string AuditReport::summary() const {
    auto line = [](const char* name, const Item& it) {
        std::string s = std::string(name) + ": ";
        s += it.ok ? "ok" : "FAIL";
        if (!it.detail.empty()) s += " (" + it.detail + ")";
        return s;
    };
    return line("b-vertex location", b_vertex_location) + "\n" +
           line("L-block disjointness", block_disjoint) + "\n" +
           line("Y-block match", y_block_match) + "\n";
}

AuditReport audit_coloring(const ReducedInstance& red, const Coloring& c) {
    const BColInstance bi = bcol_instance(red);
    BColoringCheck chk = check_b_coloring(bi, c);
    if (!chk.ok) throw PreconditionError("audit requires a b-coloring: " + chk.reason);

    AuditReport rep;
    const auto bv = b_vertices(bi, c);
    std::vector<char> is_b(red.h.vertex_count() + 1, 0);
    for (const auto& per_color : bv)
        for (VertexId v : per_color) is_b[v] = 1;

    {
        std::vector<std::string> problems;
        for (int col = 0; col < red.k; ++col)
            if (bv[col].size() != 1)
                problems.push_back("color " + std::to_string(col) + " has " +
                                   std::to_string(bv[col].size()) + " b-vertices");
        for (const auto& per_color : bv) {
            for (VertexId v : per_color) {
                switch (red.role_of(v).kind) {
                case RoleKind::SuperstarCenter:
                case RoleKind::AnonCenter:
                case RoleKind::Orig:
                case RoleKind::Q:
                case RoleKind::X:
                    break;
                default:
                    problems.push_back("vertex " + std::to_string(v) + " (" +
                                       describe(red.role_of(v)) + ") is a b-vertex");
                }
            }
        }
        auto require_b = [&](VertexId v) {
            if (!is_b[v])
                problems.push_back("vertex " + std::to_string(v) + " (" +
                                   describe(red.role_of(v)) + ") is not a b-vertex");
        };
        require_b(red.superstar_center);
        for (VertexId v : red.orig) require_b(v);
        for (VertexId v : red.anon_centers) require_b(v);
        for (const auto& pair : red.q) {
            require_b(pair[0]);
            require_b(pair[1]);
        }
        for (std::size_t ei = 0; ei < red.x.size(); ++ei) {
            const int cnt = (is_b[red.x[ei][0]] ? 1 : 0) + (is_b[red.x[ei][1]] ? 1 : 0);
            if (cnt != 1)
                problems.push_back("edge " + std::to_string(ei + 1) + " has " +
                                   std::to_string(cnt) + " b-vertices among its x-vertices");
        }
        rep.b_vertex_location.ok = problems.empty();
        rep.b_vertex_location.detail = join_problems(problems);
    }

    {
        std::vector<std::string> problems;
        std::unordered_map<int, std::pair<int, int>> owner; // color -> (edge, side)
        for (std::size_t ei = 0; ei < red.l_blocks.size(); ++ei) {
            for (int side = 0; side < 2; ++side) {
                for (VertexId lv : red.l_blocks[ei][side]) {
                    const int col = c.at(lv);
                    auto [it, fresh] = owner.emplace(col, std::pair<int, int>{
                                                             static_cast<int>(ei), side});
                    if (!fresh)
                        problems.push_back(
                            "color " + std::to_string(col) + " appears in the blocks of edges " +
                            std::to_string(it->second.first + 1) + " and " +
                            std::to_string(ei + 1));
                }
            }
        }
        rep.block_disjoint.ok = problems.empty();
        rep.block_disjoint.detail = join_problems(problems);
    }

    {
        std::vector<std::string> problems;
        for (std::size_t ei = 0; ei < red.y.size(); ++ei) {
            const bool bu = is_b[red.x[ei][0]];
            const bool bv2 = is_b[red.x[ei][1]];
            if (bu == bv2) {
                problems.push_back("edge " + std::to_string(ei + 1) +
                                   ": no unique b-vertex side to compare against");
                continue;
            }
            // The Y colors must copy the block opposite the b-vertex side.
            const int tail_side = bu ? 1 : 0;
            std::vector<int> got, want;
            for (VertexId yv : red.y[ei]) got.push_back(c.at(yv));
            for (VertexId lv : red.l_blocks[ei][tail_side]) want.push_back(c.at(lv));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            if (got != want)
                problems.push_back("edge " + std::to_string(ei + 1) +
                                   ": Y colors differ from the tail-side block colors");
        }
        rep.y_block_match.ok = problems.empty();
        rep.y_block_match.detail = join_problems(problems);
    }

    return rep;
}

PathDecomposition build_pd_for_H(const ReducedInstance& red, const PathDecomposition& pd_g) {
    const Graph& g = red.source.graph;
    PdValidation val = validate_pd(g, pd_g);
    if (!val.ok)
        throw PreconditionError("not a path decomposition of the source graph: " + val.message);

    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int d = static_cast<int>(pd_g.bags.size());

    std::vector<int> first(n, -1);
    for (int b = 0; b < d; ++b)
        for (VertexId v : pd_g.bags[b]) {
            const int vi = g.index_of(v);
            if (first[vi] < 0) first[vi] = b;
        }

    std::vector<std::vector<int>> verts_at(d), edges_at(d);
    for (int vi = 0; vi < n; ++vi) verts_at[first[vi]].push_back(vi);
    // Bags holding a vertex are consecutive, so the leftmost bag with
    // both endpoints is where the later interval starts.
    for (int ei = 0; ei < m; ++ei) {
        const Edge& e = g.edges()[ei];
        edges_at[std::max(first[g.index_of(e.u)], first[g.index_of(e.v)])].push_back(ei);
    }

    std::vector<std::vector<VertexId>> bags;
    for (int b = 0; b < d; ++b) {
        std::vector<VertexId> base{red.superstar_center};
        for (VertexId v : pd_g.bags[b]) base.push_back(red.orig[g.index_of(v)]);
        bags.push_back(base);
        for (int vi : verts_at[b]) {
            for (VertexId p : red.pads[vi]) {
                auto bag = base;
                bag.push_back(p);
                bags.push_back(std::move(bag));
            }
        }
        for (int ei : edges_at[b]) {
            auto core = base;
            core.push_back(red.x[ei][0]);
            core.push_back(red.x[ei][1]);
            core.push_back(red.q[ei][0]);
            core.push_back(red.q[ei][1]);
            auto run = [&](const std::vector<VertexId>& vs) {
                for (VertexId w : vs) {
                    auto bag = core;
                    bag.push_back(w);
                    bags.push_back(std::move(bag));
                }
            };
            run(red.l_blocks[ei][0]);
            run(red.l_blocks[ei][1]);
            run(red.y[ei]);
            run(red.z[ei]);
        }
    }
    // Keep the superstar's occurrence contiguous: its plain-leaf bags
    // directly follow the main section, the star sections come last.
    for (VertexId leaf : red.superstar_plain_leaves)
        bags.push_back({red.superstar_center, leaf});
    for (std::size_t j = 0; j < red.anon_centers.size(); ++j)
        for (VertexId leaf : red.anon_leaves[j]) bags.push_back({red.anon_centers[j], leaf});

    PathDecomposition out = PathDecomposition::from_bags(std::move(bags));
    PdValidation lifted = validate_pd(red.h, out);
    if (!lifted.ok)
        throw InternalInvariantError("lifted decomposition invalid: " + lifted.message);
    const int base_width = d == 0 ? 0 : pd_width(pd_g);
    if (pd_width(out) > base_width + 6)
        throw InternalInvariantError("lifted width " + std::to_string(pd_width(out)) +
                                     " exceeds source width " + std::to_string(base_width) +
                                     " + 6");
    return out;
}

} // namespace bcolab
