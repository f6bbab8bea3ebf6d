#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <chrono>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "bcolab/io.hpp"
#include "bcolab/reduction.hpp"
#include "cli.hpp"

using namespace bcolab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path dir;
    TempDir() {
        const auto tick = std::chrono::steady_clock::now().time_since_epoch().count();
        dir = fs::temp_directory_path() / ("bcolab_cli_" + std::to_string(tick));
        fs::create_directories(dir);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }
    std::string operator()(const std::string& name) const { return (dir / name).string(); }
};

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

const std::string kTriangleAll2 = "p circori 3 3\ne 1 2 2\ne 1 3 2\ne 2 3 2\n";
const std::string kTriangle112 = "p circori 3 3\ne 1 2 1\ne 1 3 1\ne 2 3 2\n";
const std::string kC5Bcol3 =
    "p bcol 5 5 3\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n";

} // namespace

TEST_CASE("argument errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"reduce"}).code == 2); // missing required options
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("reduce prints the frozen headline numbers") {
    TempDir tmp;
    write_text_file(tmp("tri.circori"), kTriangleAll2);
    CliResult r = cli({"reduce", tmp("tri.circori"), "-o", tmp("tri")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "k = 26"));
    CHECK(contains(r.out, "|V(H)| = 499"));
    CHECK(fs::exists(tmp("tri.bcol")));
    CHECK(fs::exists(tmp("tri.rolemap")));

    BColInstance h = parse_bcol(read_text_file(tmp("tri.bcol")));
    CHECK(h.k == 26);
    CHECK(h.graph.vertex_count() == 499);
}

TEST_CASE("reduce lifts a decomposition and the result verifies") {
    TempDir tmp;
    write_text_file(tmp("tri.circori"), kTriangleAll2);
    write_text_file(tmp("src.pd"), "s pd 1 3 3\nb 1 1 2 3\n");
    CliResult r =
        cli({"reduce", tmp("tri.circori"), "--pd", tmp("src.pd"), "-o", tmp("tri")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "pd width: source = 2"));
    REQUIRE(fs::exists(tmp("tri.pd")));

    CliResult v = cli({"verify", "pd", tmp("tri.bcol"), tmp("tri.pd")});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "path decomposition: ok"));

    // lifted width stays within the +6 envelope: source width 2 -> at most 8
    PathDecomposition lifted = parse_pd(read_text_file(tmp("tri.pd")));
    CHECK(pd_width(lifted) <= 8);
}

TEST_CASE("reduce on parity-infeasible input") {
    TempDir tmp;
    write_text_file(tmp("bad.circori"), kTriangle112);

    CliResult r = cli({"reduce", tmp("bad.circori"), "-o", tmp("bad")});
    CHECK(r.code == 3);
    CHECK_FALSE(r.err.empty());

    CliResult forced =
        cli({"reduce", tmp("bad.circori"), "-o", tmp("bad"), "--force-trivial-no"});
    CHECK(forced.code == 0);
    CHECK(contains(forced.out, "parity infeasible"));
    CHECK(read_text_file(tmp("bad.bcol")) == "p bcol 2 1 3\ne 1 2\n");

    CliResult solve = cli({"solve", "bcol", tmp("bad.bcol")});
    CHECK(solve.code == 1);
    CHECK(contains(solve.err, "no b-coloring with 3 colors"));
}

TEST_CASE("solve and verify close the loop on the triangle") {
    TempDir tmp;
    write_text_file(tmp("tri.circori"), kTriangleAll2);

    CliResult s = cli({"solve", "circori", tmp("tri.circori"), "-o", tmp("tri.orientation")});
    CHECK(s.code == 0);
    CHECK(contains(s.out, "wrote"));
    CHECK(read_text_file(tmp("tri.orientation")) == "a 1 2\na 3 1\na 2 3\n");

    CliResult v =
        cli({"verify", "orientation", tmp("tri.circori"), tmp("tri.orientation")});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "orientation: circulating (W = 6)"));

    write_text_file(tmp("bad.orientation"), "a 1 2\na 1 3\na 2 3\n");
    CliResult bad =
        cli({"verify", "orientation", tmp("tri.circori"), tmp("bad.orientation")});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "orientation: FAIL: vertex 1"));

    write_text_file(tmp("wrong.orientation"), "a 1 2\na 3 1\n");
    CHECK(cli({"verify", "orientation", tmp("tri.circori"), tmp("wrong.orientation")}).code ==
          3);

    CliResult none = cli({"solve", "circori", tmp("tri.circori"), "--budget", "2"});
    CHECK(none.code == 3);
}

TEST_CASE("solve bcol emits the canonical coloring and verify accepts it") {
    TempDir tmp;
    write_text_file(tmp("c5.bcol"), kC5Bcol3);

    CliResult s = cli({"solve", "bcol", tmp("c5.bcol")});
    CHECK(s.code == 0);
    CHECK(s.out == "v 1 0\nv 2 1\nv 3 0\nv 4 1\nv 5 2\n");

    write_text_file(tmp("c5.coloring"), s.out);
    CliResult v = cli({"verify", "coloring", tmp("c5.bcol"), tmp("c5.coloring")});
    CHECK(v.code == 0);
    CHECK(contains(v.out, "b-coloring: ok (k = 3)"));

    write_text_file(tmp("bad.coloring"), "v 1 0\nv 2 1\nv 3 0\nv 4 1\nv 5 0\n");
    CliResult bad = cli({"verify", "coloring", tmp("c5.bcol"), tmp("bad.coloring")});
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "b-coloring: FAIL"));
}

TEST_CASE("verify pd rejects a broken decomposition with the offending edge") {
    TempDir tmp;
    write_text_file(tmp("p3.circori"), "p circori 3 2\ne 1 2 2\ne 2 3 2\n");
    write_text_file(tmp("bad.pd"), "s pd 2 2 3\nb 1 1 2\nb 2 3\n");
    CliResult r = cli({"verify", "pd", tmp("p3.circori"), tmp("bad.pd")});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "edge {2,3}"));
}

TEST_CASE("order commands match the frozen P3 example") {
    TempDir tmp;
    write_text_file(tmp("p3.circori"), "p circori 3 2\ne 1 2 2\ne 2 3 2\n");
    write_text_file(tmp("p3.pd"), "s pd 2 2 3\nb 1 1 2\nb 2 2 3\n");

    CliResult o = cli({"order", "from-pd", tmp("p3.circori"), tmp("p3.pd"), "-o",
                       tmp("p3.order")});
    CHECK(o.code == 0);
    CHECK(read_text_file(tmp("p3.order")) == "o 1\no 2\no 3\n");

    CliResult mw = cli({"order", "module-width", tmp("p3.circori"), tmp("p3.order")});
    CHECK(mw.code == 0);
    CHECK(mw.out == "2\n");
}

TEST_CASE("generators write parseable files deterministically") {
    TempDir tmp;
    CliResult g1 = cli({"gen", "yes", "--seed", "9", "--n", "5", "-o", tmp("a")});
    CHECK(g1.code == 0);
    CHECK(contains(g1.out, "n = 5"));
    CliResult g2 = cli({"gen", "yes", "--seed", "9", "--n", "5", "-o", tmp("b")});
    CHECK(read_text_file(tmp("a.circori")) == read_text_file(tmp("b.circori")));
    CHECK(read_text_file(tmp("a.orientation")) == read_text_file(tmp("b.orientation")));

    CliResult v = cli({"verify", "orientation", tmp("a.circori"), tmp("a.orientation")});
    CHECK(v.code == 0);

    CliResult s = cli({"solve", "circori", tmp("a.circori"), "-o", tmp("a.solved")});
    CHECK(s.code == 0);
    CHECK(cli({"verify", "orientation", tmp("a.circori"), tmp("a.solved")}).code == 0);

    CliResult r = cli({"gen", "random", "--seed", "4", "--n", "6", "--m", "8", "-o", tmp("r")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "parity"));

    CliResult p = cli({"gen", "pd-graph", "--seed", "3", "--n", "8", "--width", "2", "-o",
                       tmp("p")});
    CHECK(p.code == 0);
    CHECK(contains(p.out, "pd width = 2"));
    CHECK(cli({"verify", "pd", tmp("p.circori"), tmp("p.pd")}).code == 0);
}

TEST_CASE("extract recovers the orientation from files") {
    TempDir tmp;
    write_text_file(tmp("tri.circori"), kTriangleAll2);
    REQUIRE(cli({"reduce", tmp("tri.circori"), "-o", tmp("tri")}).code == 0);

    ReducedInstance red = reduced_from_files(read_text_file(tmp("tri.bcol")),
                                             read_text_file(tmp("tri.rolemap")));
    auto solved = solve_circori_brute(red.source);
    REQUIRE(solved.has_value());
    write_text_file(tmp("tri.coloring"),
                    serialize_coloring(forward_witness(red, *solved), red.h));

    CliResult e = cli({"extract", tmp("tri.bcol"), tmp("tri.rolemap"), tmp("tri.coloring")});
    CHECK(e.code == 0);
    CHECK(e.out == "a 1 2\na 3 1\na 2 3\n");

    // a non-b-coloring is a precondition failure
    std::string flat;
    for (int v = 1; v <= red.h.vertex_count(); ++v)
        flat += "v " + std::to_string(v) + " 0\n";
    write_text_file(tmp("flat.coloring"), flat);
    CliResult bad =
        cli({"extract", tmp("tri.bcol"), tmp("tri.rolemap"), tmp("flat.coloring")});
    CHECK(bad.code == 3);
}

TEST_CASE("roundtrip summarizes and honors the perturb modes") {
    CliResult ok = cli({"roundtrip", "--trials", "3", "--seed", "5", "--n", "5"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "3/3"));

    CliResult js = cli({"roundtrip", "--trials", "2", "--seed", "5", "--n", "5", "--json"});
    CHECK(js.code == 0);
    CHECK(contains(js.out, "\"trials\""));
    CHECK(contains(js.out, "\"passed\""));

    CliResult hit = cli({"roundtrip", "--trials", "2", "--seed", "5", "--n", "5",
                         "--perturb", "superstar"});
    CHECK(hit.code == 1);
    CHECK(contains(hit.out, "perturbation caught"));

    CHECK(cli({"roundtrip", "--perturb", "sideways"}).code == 3);
}

TEST_CASE("unreadable or alien input exits 2") {
    TempDir tmp;
    CHECK(cli({"solve", "circori", tmp("missing.circori")}).code == 2);
    write_text_file(tmp("junk.txt"), "hello world\n");
    CHECK(cli({"solve", "circori", tmp("junk.txt")}).code == 2);
    CHECK(cli({"reduce", tmp("junk.txt"), "-o", tmp("x")}).code == 2);
}
