#include "gog/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = gog::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path.string();
}

size_t count_lines(const std::string& text, const std::string& prefix) {
    size_t n = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (line.rfind(prefix, 0) == 0) ++n;
    return n;
}

}  // namespace

TEST_CASE("invariants command") {
    const std::string psl = write_temp("gogcalc_test_psl.gog",
                                       "vertex v1 finite:2\n"
                                       "vertex v2 finite:3\n"
                                       "edge e1 v1 v2 1\n");
    const CliResult r = run({"invariants", psl});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "omega = -1/6\n"
          "rg = 1/6\n"
          "b1l2 = 1/6\n"
          "vb = 1/6\n"
          "vc = 1/6\n");
    CHECK(r.err.empty());
}

TEST_CASE("invariants with undeclared custom invariants") {
    const std::string path = write_temp(
        "gogcalc_test_undef.gog",
        "custom mystery omega=undef rg=0 b1l2=0 vb=0 vc_eq_rg=0 norm=unbounded hyp=1\n"
        "vertex x custom:mystery\n");
    const CliResult r = run({"invariants", path});
    CHECK(r.code == 2);
    CHECK(r.out ==
          "omega = undefined:omega not declared for vertex \"x\"\n"
          "rg = 0\n"
          "b1l2 = 0\n"
          "vb = 0\n"
          "vc = undefined:vc not established for vertex \"x\"\n");
}

TEST_CASE("invariants rejects invalid graphs") {
    const std::string path = write_temp("gogcalc_test_lagrange.gog",
                                        "vertex a finite:4\n"
                                        "vertex b finite:6\n"
                                        "edge e a b 4\n");
    const CliResult r = run({"invariants", path});
    CHECK(r.code == 1);
    CHECK(r.out == "violation: e: edge order 4 does not divide endpoint order 6 (vertex \"b\")\n");
    // the collapsed-edge warning still lands on the error stream
    CHECK(r.err.find("warning: e: edge order equals order of finite vertex \"a\"") !=
          std::string::npos);

    const std::string split = write_temp("gogcalc_test_split.gog",
                                         "vertex a finite:2\n"
                                         "vertex b finite:3\n");
    const CliResult d = run({"invariants", split});
    CHECK(d.code == 1);
    CHECK(d.out == "violation: graph is not connected\n");
}

TEST_CASE("invariants on a degenerate but legal edge") {
    const std::string path = write_temp("gogcalc_test_collapse.gog",
                                        "vertex a finite:2\n"
                                        "vertex b finite:4\n"
                                        "edge e a b 2\n");
    const CliResult r = run({"invariants", path});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "omega = 1/4\n"
          "rg = -1/4\n"
          "b1l2 = -1/4\n"
          "vb = -1/4\n"
          "vc = -1/4\n");
    CHECK(count_lines(r.err, "warning:") == 1);
}

TEST_CASE("invariants with a missing file") {
    const CliResult r = run({"invariants", "/nonexistent/file.gog"});
    CHECK(r.code == 3);
    CHECK(r.err.find("cannot open") != std::string::npos);
}

TEST_CASE("decompose command") {
    CliResult r = run({"decompose", "hnn", "6", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "index=6 factors=Kx1 free_rank=3\n");

    r = run({"decompose", "free-product", "2", "3", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "index=6 factors=H1x3,H2x2 free_rank=2\n");

    r = run({"decompose", "amalgam", "6", "4", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "index=12 factors=N1x2,N2x3 free_rank=2\n");

    r = run({"decompose", "hnn", "5", "2"});  // 2 does not divide 5
    CHECK(r.code == 1);
    CHECK(r.err.rfind("error:", 0) == 0);

    r = run({"decompose", "direct-product", "2", "2"});
    CHECK(r.code == 3);

    r = run({"decompose", "hnn", "6"});
    CHECK(r.code == 3);
    CHECK(r.err == "error: decompose hnn takes <k> <c>\n");

    r = run({"decompose", "free-product", "2", "3"});
    CHECK(r.code == 3);
    CHECK(r.err == "error: decompose free-product takes <m> <n> <s>\n");
}

TEST_CASE("mednykh command") {
    CliResult r = run({"mednykh", "sym3", "2", "--brute-force"});
    CHECK(r.code == 0);
    CHECK(r.out == "formula = 486\nbrute_force = 486\nMATCH\n");

    r = run({"mednykh", "sym3", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "formula = 486\n");

    r = run({"mednykh", "sym4", "5", "--brute-force"});  // 24^10 tuples
    CHECK(r.code == 4);
    CHECK(r.out.rfind("formula = ", 0) == 0);
    CHECK(r.err.rfind("error:", 0) == 0);

    r = run({"mednykh", "sporadic1", "2"});
    CHECK(r.code == 3);
}

TEST_CASE("enumerate-subgroups command") {
    CliResult r = run({"enumerate-subgroups", "cyclic2", "cyclic2", "--max-index", "2"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "index=1 orbitsA=2 orbitsB=2 free_rank=0 min_rank=2\n"
          "index=2 orbitsA=2,2 orbitsB=1 free_rank=0 min_rank=2\n"
          "index=2 orbitsA=1 orbitsB=2,2 free_rank=0 min_rank=2\n"
          "index=2 orbitsA=1 orbitsB=1 free_rank=1 min_rank=1\n");

    // thread count must not change the output
    const CliResult threaded =
        run({"--threads", "2", "enumerate-subgroups", "cyclic2", "cyclic3", "--max-index", "4"});
    const CliResult serial =
        run({"enumerate-subgroups", "cyclic2", "cyclic3", "--max-index", "4"});
    CHECK(threaded.code == 0);
    CHECK(threaded.out == serial.out);

    r = run({"enumerate-subgroups", "cyclic2", "cyclic2", "--max-index", "8"});
    CHECK(r.code == 4);  // default budget stops at index 7
    CHECK(r.err.rfind("error:", 0) == 0);

    r = run({"enumerate-subgroups", "cyclic99", "cyclic2", "--max-index", "1"});
    CHECK(r.code == 3);
}

TEST_CASE("verify command") {
    const CliResult r = run({"verify", "--suite", "dihedral-count"});
    CHECK(r.code == 0);
    CHECK(count_lines(r.out, "PASS dihedral-count:") == 4);
    CHECK(count_lines(r.out, "FAIL") == 0);
    CHECK(r.out.find("passed 4/4\n") != std::string::npos);

    CHECK(run({"verify", "--suite", "astrology"}).code == 3);
}

TEST_CASE("bounds command") {
    const std::string psl = write_temp("gogcalc_test_psl2.gog",
                                       "vertex v1 finite:2\n"
                                       "vertex v2 finite:3\n"
                                       "edge e1 v1 v2 1\n");
    CliResult r = run({"bounds", psl});
    CHECK(r.code == 0);
    CHECK(r.out == "norm = 3\nrg = 1/6\naccessibility_edges = 2\n");

    r = run({"bounds", psl, "--norm", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "norm = 6\nrg = 1/6\naccessibility_edges = 4\n");

    r = run({"bounds", psl, "--fix-index", "6", "--fix-omega", "-1/6"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "norm = 3\nrg = 1/6\naccessibility_edges = 2\nfix_complexity = 25/6\n");

    r = run({"bounds", psl, "--fix-index", "6"});
    CHECK(r.code == 3);  // --fix-index needs --fix-omega

    const std::string nil = write_temp("gogcalc_test_nil.gog", "vertex n nilpotent\n");
    r = run({"bounds", nil});
    CHECK(r.code == 2);
    CHECK(r.out == "norm = unbounded\nrg = 0\naccessibility_edges = undefined:norm unbounded\n");
}

TEST_CASE("usage and help") {
    const CliResult help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("gogcalc") != std::string::npos);

    const CliResult bare = run({});
    CHECK(bare.code == 3);

    const CliResult unknown = run({"transmogrify"});
    CHECK(unknown.code == 3);
}
