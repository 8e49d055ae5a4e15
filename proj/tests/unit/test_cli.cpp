#include <doctest.h>

#include "../../tools/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

using namespace surfskew;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "surfskew");
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        if (l == line) return true;
    return false;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("surfskew_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("gen then invariants on the folded 3-cube") {
    TempDir dir;
    Run g = run({"gen", "--family", "folded-cube", "--d", "3", "-o", dir / "f3.txt"});
    REQUIRE(g.code == 0);
    CHECK(parse_graph(slurp(dir / "f3.txt")) == generate(family::FoldedCube{3}));
    Run inv = run({"invariants", dir / "f3.txt", "--t", "1"});
    CHECK(inv.code == 0);
    CHECK(has_line(inv.out, "p: 8"));
    CHECK(has_line(inv.out, "q: 16"));
    CHECK(has_line(inv.out, "delta: 0"));
    CHECK(has_line(inv.out, "epsilon: 0"));
    CHECK(has_line(inv.out, "genus: 1 (formula:folded-cube)"));
}

TEST_CASE("chain with a dropped-cube certificate") {
    TempDir dir;
    REQUIRE(run({"certify", "cube-drops", "--d", "5", "--k", "1", "-o", dir / "q5.cert"}).code == 0);
    Run c = run({"chain", "family cube 5", "--t", "4", "--certificate", dir / "q5.cert"});
    CHECK(c.code == 0);
    CHECK(has_line(c.out, "chain: δ=4 ε=4 μ=4 [cert] ν∈[4,?]"));
    CHECK(has_line(c.out, "epsilon=mu: yes"));
}

TEST_CASE("chain with exact oracles on K_{5,3}") {
    Run c = run({"chain", "family complete-bipartite 5 3", "--t", "0", "--exact"});
    CHECK(c.code == 0);
    CHECK(has_line(c.out, "chain: δ=3 ε=3 μ=3 [search] ν=4 [search]"));
    CHECK(has_line(c.out, "mu=nu: no"));
}

TEST_CASE("exit codes") {
    TempDir dir;
    CHECK(run({"bogus"}).code == cli::kUsage);
    CHECK(run({"invariants", "family cube 3", "--frobnicate"}).code == cli::kUsage);
    CHECK(run({"certify", "cube-drops", "--d", "2", "--k", "0"}).code == cli::kUsage);
    CHECK(run({"invariants", dir / "missing.txt"}).code == cli::kNoInput);
    {
        std::ofstream(dir / "junk.txt") << "not a graph\n";
    }
    CHECK(run({"invariants", dir / "junk.txt"}).code == cli::kNoInput);
    CHECK(run({"gen", "--family", "cube", "--d", "3", "-o", dir / "no/such/dir/x.txt"}).code == cli::kCantCreate);

    REQUIRE(run({"certify", "guy", "--a", "4", "--b", "4", "-o", dir / "g.cert"}).code == 0);
    std::string text = slurp(dir / "g.cert");
    DeletionCertificate c = parse_certificate(text);
    c.deleted.pop_back();
    {
        std::ofstream(dir / "bad.cert") << serialize_certificate(c);
    }
    Run bad = run({"verify", dir / "bad.cert"});
    CHECK(bad.code == cli::kVerifyFailed);
    CHECK(has_line(bad.out, "status: fail"));

    Run bounded = run({"genus", "family complete 8", "--budget-nodes", "5"});
    CHECK(bounded.code == cli::kBoundsOnly);
}

TEST_CASE("flags override environment variables") {
    ::setenv("SURFSKEW_BUDGET_NODES", "5", 1);
    CHECK(run({"genus", "family complete 6"}).code == cli::kBoundsOnly);
    CHECK(run({"genus", "family complete 6", "--budget-nodes", "50000000"}).code == 0);
    ::unsetenv("SURFSKEW_BUDGET_NODES");

    ::setenv("SURFSKEW_MAX_K", "2", 1);
    CHECK(run({"crossing", "family complete 6"}).code == cli::kBoundsOnly);
    CHECK(run({"crossing", "family complete 6", "--max-k", "3"}).code == 0);
    ::unsetenv("SURFSKEW_MAX_K");
    CHECK(run({"crossing", "family complete 6"}).code == 0);
}

TEST_CASE("emitted files round-trip and verify") {
    TempDir dir;
    for (const std::string& name : cli::construction_names()) {
        std::vector<std::string> params;
        if (name == "guy") params = {"--a", "5", "--b", "4"};
        else if (name == "torus-complete-even" || name == "torus-complete-odd") params = {"--r", "5"};
        else if (name == "torus-kab3") params = {"--a", "8"};
        else if (name == "torus-kab") params = {"--a", "6", "--b", "5"};
        else if (name == "cube" || name == "folded-cube") params = {"--d", "5"};
        else if (name == "cube-drops" || name == "folded-drops") params = {"--d", "5", "--k", "3"};
        else if (name == "cube-in-kaa") params = {"--d", "4"};
        CAPTURE(name);
        std::string emb = dir / (name + ".emb");
        std::string cert = dir / (name + ".cert");
        std::vector<std::string> e{"embed", name, "-o", emb};
        e.insert(e.end(), params.begin(), params.end());
        std::vector<std::string> c{"certify", name, "-o", cert};
        c.insert(c.end(), params.begin(), params.end());
        REQUIRE(run(e).code == 0);
        REQUIRE(run(c).code == 0);
        std::string et = slurp(emb), ct = slurp(cert);
        CHECK(serialize_embedding(parse_embedding(et)) == et);
        CHECK(serialize_certificate(parse_certificate(ct, dir.path.string())) == ct);
        Run ve = run({"verify", emb});
        Run vc = run({"verify", cert});
        CHECK(ve.code == 0);
        CHECK(vc.code == 0);
        CHECK(has_line(vc.out, "status: pass"));
    }
    std::string drawing = dir / "k6.drawing";
    REQUIRE(run({"crossing", "family complete 6", "--certificate", drawing}).code == 0);
    std::string dt = slurp(drawing);
    CHECK(serialize_drawing(parse_drawing(dt)) == dt);
    CHECK(run({"verify", drawing}).code == 0);

    std::string graph = dir / "k33.txt";
    REQUIRE(run({"gen", "--family", "complete-bipartite", "--a", "3", "--b", "3", "-o", graph}).code == 0);
    CHECK(serialize_graph(parse_graph(slurp(graph))) == slurp(graph));
    std::string skew = dir / "k33.cert";
    REQUIRE(run({"skewness", graph, "--certificate", skew}).code == 0);
    CHECK(run({"verify", skew}).code == 0);
}

TEST_CASE("torus-complete report rows") {
    Run r = run({"report", "--suite", "torus-complete", "--r", "4..8"});
    REQUIRE(r.code == 0);
    for (int k = 4; k <= 8; ++k) {
        CHECK(r.out.find(std::to_string(2 * k * k - 7 * k)) != std::string::npos);
        CHECK(r.out.find(std::to_string(2 * k * k - 5 * k - 3)) != std::string::npos);
    }
    CHECK(r.out == run({"report", "--suite", "torus-complete", "--r", "4..8"}).out);
}
