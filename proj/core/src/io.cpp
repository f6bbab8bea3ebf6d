#include "bcolab/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bcolab/errors.hpp"

namespace bcolab {

namespace {

constexpr long long kMaxId = 100'000'000;

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string raw = text.substr(pos, nl == std::string::npos ? nl : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::istringstream is(raw);
        std::vector<std::string> tokens;
        std::string tok;
        while (is >> tok) tokens.push_back(tok);
        if (tokens.empty() || tokens[0] == "c") continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

long long to_int(const Line& ln, std::size_t ti, long long lo, long long hi) {
    const std::string& tok = ln.tokens[ti];
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail(ln.number, "'" + tok + "' is not an integer");
    if (value < lo || value > hi)
        fail(ln.number, "value " + tok + " outside [" + std::to_string(lo) + ".." +
                            std::to_string(hi) + "]");
    return value;
}

void expect_tokens(const Line& ln, std::size_t count, const std::string& shape) {
    if (ln.tokens.size() != count) fail(ln.number, "expected '" + shape + "'");
}

std::vector<VertexId> iota_vertices(int n) {
    std::vector<VertexId> vs(n);
    for (int i = 0; i < n; ++i) vs[i] = i + 1;
    return vs;
}

// rank of each vertex in ascending id order, 1-based
std::unordered_map<VertexId, VertexId> renumber_map(const Graph& g) {
    std::unordered_map<VertexId, VertexId> rank;
    rank.reserve(g.vertices().size());
    VertexId next = 1;
    for (VertexId v : g.vertices()) rank[v] = next++;
    return rank;
}

} // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw PreconditionError("cannot write file: " + path);
    out << text;
    if (!out) throw PreconditionError("write failed: " + path);
}

FileKind sniff_kind(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) return FileKind::Unknown;
    const auto& t = lines[0].tokens;
    if (t[0] == "p" && t.size() >= 2 && t[1] == "circori") return FileKind::CircOri;
    if (t[0] == "p" && t.size() >= 2 && t[1] == "bcol") return FileKind::BCol;
    if (t[0] == "s" && t.size() >= 2 && t[1] == "pd") return FileKind::Pd;
    if (t[0] == "a") return FileKind::Orientation;
    if (t[0] == "v") return FileKind::Coloring;
    if (t[0] == "n") return FileKind::RoleMap;
    if (t[0] == "o") return FileKind::Order;
    return FileKind::Unknown;
}

CircOriInstance parse_circori(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input, expected 'p circori <n> <m>'");
    const Line& h = lines[0];
    if (h.tokens.size() != 4 || h.tokens[0] != "p" || h.tokens[1] != "circori")
        fail(h.number, "expected 'p circori <n> <m>'");
    const int n = static_cast<int>(to_int(h, 2, 0, kMaxId));
    const int m = static_cast<int>(to_int(h, 3, 0, kMaxId));
    if (static_cast<int>(lines.size()) - 1 != m)
        fail(h.number, "header declares " + std::to_string(m) + " edges, found " +
                           std::to_string(lines.size() - 1) + " data lines");

    std::vector<Edge> edges;
    std::vector<int> weights;
    for (int i = 0; i < m; ++i) {
        const Line& ln = lines[i + 1];
        expect_tokens(ln, 4, "e <u> <v> <w>");
        if (ln.tokens[0] != "e") fail(ln.number, "expected 'e <u> <v> <w>'");
        const auto u = static_cast<VertexId>(to_int(ln, 1, 1, n));
        const auto v = static_cast<VertexId>(to_int(ln, 2, 1, n));
        const int w = static_cast<int>(to_int(ln, 3, 1, kMaxId));
        edges.emplace_back(u, v);
        weights.push_back(w);
    }
    try {
        Graph g = Graph::build(iota_vertices(n), edges);
        // weights follow input line order; realign to canonical edge order
        std::vector<int> aligned(m, 0);
        std::vector<char> used(m, 0);
        for (int i = 0; i < m; ++i) {
            const int ei = g.edge_index(edges[i].u, edges[i].v);
            aligned[ei] = weights[i];
            used[ei] = 1;
        }
        for (char c : used)
            if (!c) throw PreconditionError("edge list inconsistent");
        return CircOriInstance::build(std::move(g), std::move(aligned));
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

std::string serialize_circori(const CircOriInstance& inst) {
    const Graph& g = inst.graph;
    auto rank = renumber_map(g);
    std::ostringstream os;
    os << "p circori " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (int ei = 0; ei < g.edge_count(); ++ei) {
        const Edge& e = g.edges()[ei];
        os << "e " << rank.at(e.u) << " " << rank.at(e.v) << " " << inst.weight_at(ei) << "\n";
    }
    return os.str();
}

BColInstance parse_bcol(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input, expected 'p bcol <n> <m> <k>'");
    const Line& h = lines[0];
    if (h.tokens.size() != 5 || h.tokens[0] != "p" || h.tokens[1] != "bcol")
        fail(h.number, "expected 'p bcol <n> <m> <k>'");
    const int n = static_cast<int>(to_int(h, 2, 0, kMaxId));
    const int m = static_cast<int>(to_int(h, 3, 0, kMaxId));
    const int k = static_cast<int>(to_int(h, 4, 1, kMaxId));
    if (static_cast<int>(lines.size()) - 1 != m)
        fail(h.number, "header declares " + std::to_string(m) + " edges, found " +
                           std::to_string(lines.size() - 1) + " data lines");

    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        const Line& ln = lines[i + 1];
        expect_tokens(ln, 3, "e <u> <v>");
        if (ln.tokens[0] != "e") fail(ln.number, "expected 'e <u> <v>'");
        const auto u = static_cast<VertexId>(to_int(ln, 1, 1, n));
        const auto v = static_cast<VertexId>(to_int(ln, 2, 1, n));
        edges.emplace_back(u, v);
    }
    try {
        return BColInstance{Graph::build(iota_vertices(n), std::move(edges)), k};
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("invalid instance: ") + e.what());
    }
}

std::string serialize_bcol(const BColInstance& inst) {
    const Graph& g = inst.graph;
    auto rank = renumber_map(g);
    std::ostringstream os;
    os << "p bcol " << g.vertex_count() << " " << g.edge_count() << " " << inst.k << "\n";
    for (const Edge& e : g.edges()) os << "e " << rank.at(e.u) << " " << rank.at(e.v) << "\n";
    return os.str();
}

PathDecomposition parse_pd(const std::string& text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty input, expected 's pd <d> <maxbagsize> <n>'");
    const Line& h = lines[0];
    if (h.tokens.size() != 5 || h.tokens[0] != "s" || h.tokens[1] != "pd")
        fail(h.number, "expected 's pd <d> <maxbagsize> <n>'");
    const int d = static_cast<int>(to_int(h, 2, 0, kMaxId));
    const int maxbag = static_cast<int>(to_int(h, 3, 0, kMaxId));
    const int n = static_cast<int>(to_int(h, 4, 0, kMaxId));
    if (static_cast<int>(lines.size()) - 1 != d)
        fail(h.number, "header declares " + std::to_string(d) + " bags, found " +
                           std::to_string(lines.size() - 1) + " data lines");

    std::vector<std::vector<VertexId>> bags;
    for (int i = 0; i < d; ++i) {
        const Line& ln = lines[i + 1];
        if (ln.tokens.size() < 2 || ln.tokens[0] != "b") fail(ln.number, "expected 'b <idx> <v...>'");
        const int idx = static_cast<int>(to_int(ln, 1, 1, d));
        if (idx != i + 1) fail(ln.number, "bag index " + std::to_string(idx) + ", expected " +
                                              std::to_string(i + 1));
        std::vector<VertexId> bag;
        for (std::size_t t = 2; t < ln.tokens.size(); ++t)
            bag.push_back(static_cast<VertexId>(to_int(ln, t, 1, n)));
        if (static_cast<int>(bag.size()) > maxbag)
            fail(ln.number, "bag larger than the declared maximum " + std::to_string(maxbag));
        std::vector<VertexId> sorted = bag;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ln.number, "duplicate vertex in bag");
        bags.push_back(std::move(bag));
    }
    return PathDecomposition::from_bags(std::move(bags));
}

std::string serialize_pd(const PathDecomposition& pd, const Graph& g) {
    auto rank = renumber_map(g);
    std::size_t maxbag = 0;
    for (const auto& bag : pd.bags) maxbag = std::max(maxbag, bag.size());
    std::ostringstream os;
    os << "s pd " << pd.bags.size() << " " << maxbag << " " << g.vertex_count() << "\n";
    for (std::size_t i = 0; i < pd.bags.size(); ++i) {
        os << "b " << i + 1;
        for (VertexId v : pd.bags[i]) os << " " << rank.at(v);
        os << "\n";
    }
    return os.str();
}

std::vector<Arc> parse_orientation(const std::string& text) {
    std::vector<Arc> arcs;
    for (const Line& ln : tokenize(text)) {
        expect_tokens(ln, 3, "a <tail> <head>");
        if (ln.tokens[0] != "a") fail(ln.number, "expected 'a <tail> <head>'");
        arcs.push_back(Arc{static_cast<VertexId>(to_int(ln, 1, 1, kMaxId)),
                           static_cast<VertexId>(to_int(ln, 2, 1, kMaxId))});
    }
    return arcs;
}

std::string serialize_orientation(const Orientation& o, const Graph& g) {
    auto rank = renumber_map(g);
    std::ostringstream os;
    for (const Arc& a : o.arcs()) os << "a " << rank.at(a.tail) << " " << rank.at(a.head) << "\n";
    return os.str();
}

Coloring parse_coloring(const std::string& text) {
    Coloring c;
    for (const Line& ln : tokenize(text)) {
        expect_tokens(ln, 3, "v <vertex> <color>");
        if (ln.tokens[0] != "v") fail(ln.number, "expected 'v <vertex> <color>'");
        const auto v = static_cast<VertexId>(to_int(ln, 1, 1, kMaxId));
        const int col = static_cast<int>(to_int(ln, 2, 0, kMaxId));
        if (c.has(v)) fail(ln.number, "vertex " + std::to_string(v) + " colored twice");
        c.set(v, col);
    }
    return c;
}

std::string serialize_coloring(const Coloring& c, const Graph& g) {
    auto rank = renumber_map(g);
    std::ostringstream os;
    for (VertexId v : g.vertices()) os << "v " << rank.at(v) << " " << c.at(v) << "\n";
    return os.str();
}

LinearOrder parse_order(const std::string& text) {
    LinearOrder order;
    std::unordered_set<VertexId> seen;
    for (const Line& ln : tokenize(text)) {
        expect_tokens(ln, 2, "o <vertex>");
        if (ln.tokens[0] != "o") fail(ln.number, "expected 'o <vertex>'");
        const auto v = static_cast<VertexId>(to_int(ln, 1, 1, kMaxId));
        if (!seen.insert(v).second) fail(ln.number, "vertex " + std::to_string(v) + " repeated");
        order.push_back(v);
    }
    return order;
}

std::string serialize_order(const LinearOrder& order, const Graph& g) {
    auto rank = renumber_map(g);
    std::ostringstream os;
    for (VertexId v : order) os << "o " << rank.at(v) << "\n";
    return os.str();
}

namespace {

std::string role_tokens(const VertexRole& r,
                        const std::unordered_map<VertexId, VertexId>& rank) {
    std::ostringstream os;
    switch (r.kind) {
    case RoleKind::SuperstarCenter: os << "SS"; break;
    case RoleKind::SuperstarLeaf: os << "SL " << r.index; break;
    case RoleKind::AnonCenter: os << "AC " << r.star; break;
    case RoleKind::AnonLeaf: os << "AL " << r.star << " " << r.index; break;
    case RoleKind::Orig: os << "V " << rank.at(r.endpoint); break;
    case RoleKind::Pad: os << "P " << rank.at(r.endpoint) << " " << r.index; break;
    case RoleKind::X: os << "X " << r.edge << " " << rank.at(r.endpoint); break;
    case RoleKind::Y: os << "Y " << r.edge << " " << r.index; break;
    case RoleKind::Z: os << "Z " << r.edge << " " << r.index; break;
    case RoleKind::Q: os << "Q " << r.edge << " " << r.index; break;
    case RoleKind::L:
        os << "L " << r.edge << " " << rank.at(r.endpoint) << " " << r.index;
        break;
    }
    return os.str();
}

} // namespace

std::string serialize_rolemap(const ReducedInstance& red) {
    auto rank = renumber_map(red.source.graph);
    std::ostringstream os;
    for (VertexId hv : red.h.vertices())
        os << "n " << hv << " " << role_tokens(red.role_of(hv), rank) << "\n";
    return os.str();
}

std::vector<std::pair<VertexId, VertexRole>> parse_rolemap(const std::string& text) {
    std::vector<std::pair<VertexId, VertexRole>> out;
    std::unordered_set<VertexId> seen;
    for (const Line& ln : tokenize(text)) {
        if (ln.tokens.size() < 3 || ln.tokens[0] != "n")
            fail(ln.number, "expected 'n <id> <role-tokens>'");
        const auto id = static_cast<VertexId>(to_int(ln, 1, 1, kMaxId));
        if (!seen.insert(id).second) fail(ln.number, "vertex " + std::to_string(id) + " repeated");
        const std::string& kind = ln.tokens[2];
        VertexRole r;
        auto want = [&](std::size_t count, const char* shape) {
            if (ln.tokens.size() != count)
                fail(ln.number, std::string("expected 'n <id> ") + shape + "'");
        };
        if (kind == "SS") {
            want(3, "SS");
            r.kind = RoleKind::SuperstarCenter;
        } else if (kind == "SL") {
            want(4, "SL <i>");
            r.kind = RoleKind::SuperstarLeaf;
            r.index = static_cast<int>(to_int(ln, 3, 1, kMaxId));
        } else if (kind == "AC") {
            want(4, "AC <j>");
            r.kind = RoleKind::AnonCenter;
            r.star = static_cast<int>(to_int(ln, 3, 1, kMaxId));
        } else if (kind == "AL") {
            want(5, "AL <j> <i>");
            r.kind = RoleKind::AnonLeaf;
            r.star = static_cast<int>(to_int(ln, 3, 1, kMaxId));
            r.index = static_cast<int>(to_int(ln, 4, 1, kMaxId));
        } else if (kind == "V") {
            want(4, "V <v>");
            r.kind = RoleKind::Orig;
            r.endpoint = static_cast<VertexId>(to_int(ln, 3, 1, kMaxId));
        } else if (kind == "P") {
            want(5, "P <v> <i>");
            r.kind = RoleKind::Pad;
            r.endpoint = static_cast<VertexId>(to_int(ln, 3, 1, kMaxId));
            r.index = static_cast<int>(to_int(ln, 4, 1, kMaxId));
        } else if (kind == "X") {
            want(5, "X <e> <v>");
            r.kind = RoleKind::X;
            r.edge = static_cast<int>(to_int(ln, 3, 1, kMaxId));
            r.endpoint = static_cast<VertexId>(to_int(ln, 4, 1, kMaxId));
        } else if (kind == "Y" || kind == "Z") {
            want(5, kind == "Y" ? "Y <e> <i>" : "Z <e> <i>");
            r.kind = kind == "Y" ? RoleKind::Y : RoleKind::Z;
            r.edge = static_cast<int>(to_int(ln, 3, 1, kMaxId));
            r.index = static_cast<int>(to_int(ln, 4, 1, kMaxId));
        } else if (kind == "Q") {
            want(5, "Q <e> <h>");
            r.kind = RoleKind::Q;
            r.edge = static_cast<int>(to_int(ln, 3, 1, kMaxId));
            r.index = static_cast<int>(to_int(ln, 4, 1, 2));
        } else if (kind == "L") {
            want(6, "L <e> <v> <i>");
            r.kind = RoleKind::L;
            r.edge = static_cast<int>(to_int(ln, 3, 1, kMaxId));
            r.endpoint = static_cast<VertexId>(to_int(ln, 4, 1, kMaxId));
            r.index = static_cast<int>(to_int(ln, 5, 1, kMaxId));
        } else {
            fail(ln.number, "unknown role kind '" + kind + "'");
        }
        out.emplace_back(id, r);
    }
    return out;
}

ReducedInstance reduced_from_files(const std::string& bcol_text, const std::string& rolemap_text) {
    const BColInstance target = parse_bcol(bcol_text);
    auto roles = parse_rolemap(rolemap_text);
    if (roles.empty()) throw ParseError("role map has no entries");
    std::sort(roles.begin(), roles.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto N = static_cast<VertexId>(roles.size());
    for (VertexId i = 0; i < N; ++i)
        if (roles[i].first != i + 1)
            throw ParseError("role map ids are not exactly 1.." + std::to_string(N));
    if (N != target.graph.vertex_count())
        throw PreconditionError("role map has " + std::to_string(N) + " entries for " +
                                std::to_string(target.graph.vertex_count()) + " vertices");

    // Decode the source instance: V roles list its vertices, the X pairs
    // give each edge's endpoints, and w_e is the size of Y_e.
    std::vector<VertexId> src_vertices;
    int edge_count = 0;
    for (const auto& [id, r] : roles) {
        if (r.kind == RoleKind::Orig) src_vertices.push_back(r.endpoint);
        edge_count = std::max(edge_count, r.edge);
    }
    std::vector<std::vector<VertexId>> x_ends(edge_count);
    std::vector<int> y_count(edge_count, 0);
    for (const auto& [id, r] : roles) {
        if (r.kind == RoleKind::X) x_ends[r.edge - 1].push_back(r.endpoint);
        if (r.kind == RoleKind::Y) ++y_count[r.edge - 1];
    }
    std::vector<Edge> src_edges;
    for (int ei = 0; ei < edge_count; ++ei) {
        if (x_ends[ei].size() != 2 || x_ends[ei][0] == x_ends[ei][1])
            throw ParseError("edge " + std::to_string(ei + 1) +
                             " lacks two x-vertices on distinct endpoints");
        if (y_count[ei] < 1)
            throw ParseError("edge " + std::to_string(ei + 1) + " has no Y-vertices");
        src_edges.emplace_back(x_ends[ei][0], x_ends[ei][1]);
    }

    Graph src_graph = Graph::build(std::move(src_vertices), src_edges);
    std::vector<int> weights(edge_count, 0);
    for (int ei = 0; ei < edge_count; ++ei) {
        const int canonical = src_graph.edge_index(src_edges[ei].u, src_edges[ei].v);
        if (canonical != ei)
            throw ParseError("role-map edge indices disagree with canonical edge order");
        weights[ei] = y_count[ei];
    }
    CircOriInstance source = CircOriInstance::build(std::move(src_graph), std::move(weights));

    ReducedInstance red = build_instance(source);
    if (red.k != target.k)
        throw PreconditionError("bcol header k = " + std::to_string(target.k) +
                                " but the construction yields k = " + std::to_string(red.k));
    if (red.h.vertices() != target.graph.vertices() || red.h.edges() != target.graph.edges())
        throw PreconditionError("bcol file does not match the graph built from the role map");
    for (VertexId i = 0; i < N; ++i)
        if (!(roles[i].second == red.roles[i]))
            throw PreconditionError("role map entry for vertex " + std::to_string(i + 1) +
                                    " does not match the construction");
    return red;
}

} // namespace bcolab
