// Drives the built command line binary end to end. The binary path and the
// source directory come from the environment (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/schema_check.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

std::string cli_path() {
    const char* env = std::getenv("SPEXLIN_CLI");
    REQUIRE_MESSAGE(env != nullptr, "SPEXLIN_CLI must point at the built binary");
    return env;
}

std::string src_dir() {
    const char* env = std::getenv("SPEXLIN_SRC");
    REQUIRE_MESSAGE(env != nullptr, "SPEXLIN_SRC must point at the source tree");
    return env;
}

RunResult run(const std::string& args) {
    RunResult result;
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) result.out.append(buf, got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

oracle::SchemaChecker& schema() {
    static oracle::SchemaChecker checker = [] {
        std::ifstream in(src_dir() + "/schema/run_report.schema.json");
        REQUIRE(in.good());
        return oracle::SchemaChecker(nlohmann::json::parse(in));
    }();
    return checker;
}

void check_schema(const std::string& out) {
    std::string why;
    bool ok = schema().validate(nlohmann::json::parse(out), &why);
    CHECK_MESSAGE(ok, why);
}

}  // namespace

TEST_CASE("spectral subcommand") {
    auto r = run("spectral " + src_dir() + "/data/fano.hg");
    CHECK(r.status == 0);
    CHECK(r.out.find("rho = 3") != std::string::npos);

    auto j = run("spectral " + src_dir() + "/data/fano.hg --json --vector");
    CHECK(j.status == 0);
    check_schema(j.out);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["result"]["rho"].get<double>() == doctest::Approx(3.0));
    CHECK(doc["result"]["eigenvector"].size() == 7);
}

TEST_CASE("berge-check exit codes encode found / not found") {
    CHECK(run("berge-check " + src_dir() + "/data/star3.hg --pattern c3").status == 0);
    auto found = run("berge-check " + src_dir() + "/data/fano.hg --pattern c3 --witness --json");
    CHECK(found.status == 1);
    check_schema(found.out);
    auto doc = nlohmann::json::parse(found.out);
    CHECK(doc["result"]["found"] == true);
    CHECK(doc["result"]["witness"]["vertex_map"].size() == 3);

    CHECK(run("berge-check " + src_dir() + "/data/fano.hg --pattern kst:2,2").status == 1);
    CHECK(run("berge-check " + src_dir() + "/data/star3.hg --pattern k2,2").status == 0);
}

TEST_CASE("berge-check exact head variant") {
    // hm-bipartite host with head {0,1}; a pinned K_{2,2} exists
    std::string tmp = "/tmp/spexlin_cli_exact.hg";
    {
        std::ofstream out(tmp);
        out << "3 6 4\n0 2 3\n0 4 5\n1 2 4\n1 3 5\n";
    }
    CHECK(run("berge-check " + tmp + " --pattern kst:2,2 --exact-head 0,1").status == 1);
    CHECK(run("berge-check " + src_dir() + "/data/star3.hg --pattern kst:2,2 --exact-head 0")
              .status == 0);
}

TEST_CASE("shadow subcommand") {
    auto r = run("shadow " + src_dir() + "/data/star3.hg --report --json");
    CHECK(r.status == 0);
    check_schema(r.out);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["pairs"].size() == 9);
    CHECK(doc["result"]["bound_report"]["satisfied"] == true);
}

TEST_CASE("bound eval and verify") {
    auto eval = run("bound eval --name spex_kst_c3 --params n=7,r=3,s=2,t=2");
    CHECK(eval.status == 0);
    CHECK(eval.out.find("1.5") != std::string::npos);

    auto json_eval = run("bound eval --name spex_k2t --params n=13,r=3,t=3 --json");
    CHECK(json_eval.status == 0);
    check_schema(json_eval.out);
    auto doc = nlohmann::json::parse(json_eval.out);
    CHECK(doc["result"]["bound_value"].get<double>() == doctest::Approx(7.723468825668325));
    CHECK(doc["result"]["hypothesis_ok"] == true);

    auto verify = run("bound verify --name shadow_bound --input " + src_dir() +
                      "/data/fano.hg --json");
    CHECK(verify.status == 0);
    check_schema(verify.out);

    auto avg = run("bound verify --name avg_degree --input " + src_dir() + "/data/star3.hg");
    CHECK(avg.status == 0);

    auto strict = run("bound verify --name spex_kst_c3 --params s=2,t=2 --strict --input " +
                      src_dir() + "/data/fano.hg");
    CHECK(strict.status == 2);  // fano contains a Berge triangle, bound not applicable
}

TEST_CASE("verify subcommand over corpora") {
    auto r = run("verify --random 25 --n 10 --r 3 --seed 11 "
                 "--checks shadow_bound,avg_degree,walk_remark --json");
    CHECK(r.status == 0);
    check_schema(r.out);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["ok"] == true);
    CHECK(doc["result"]["corpus_size"] == 25);

    auto ex = run("verify --exhaustive --n 6 --r 3 --linear --forbid c3,k2:2 "
                  "--checks spex_kst_c3:2:2,c3_structure --json");
    CHECK(ex.status == 0);
    check_schema(ex.out);

    // the connected filter shrinks the corpus
    auto all = run("verify --exhaustive --n 6 --r 3 --linear --checks avg_degree --json");
    auto conn =
        run("verify --exhaustive --n 6 --r 3 --linear --connected --checks avg_degree --json");
    CHECK(all.status == 0);
    CHECK(conn.status == 0);
    auto all_n = nlohmann::json::parse(all.out)["result"]["corpus_size"].get<int>();
    auto conn_n = nlohmann::json::parse(conn.out)["result"]["corpus_size"].get<int>();
    CHECK(conn_n < all_n);
    CHECK(conn_n >= 1);
}

TEST_CASE("extremal subcommand reproduces the n=5 triangle-free maximum") {
    auto r = run("extremal --n 5 --r 2 --forbid c3 --objective edges --witnesses --json");
    CHECK(r.status == 0);
    check_schema(r.out);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["optimum"].get<double>() == doctest::Approx(6.0));
    CHECK(doc["result"]["exhaustive"] == true);
    REQUIRE(doc["result"]["witnesses"].size() >= 1);
    CHECK(doc["result"]["witnesses"][0]["edges"].size() == 6);
}

TEST_CASE("gen subcommand is deterministic and parseable") {
    auto a = run("gen --n 9 --r 3 --seed 4 --max-edges 5");
    auto b = run("gen --n 9 --r 3 --seed 4 --max-edges 5");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);

    auto j = run("gen --n 9 --r 3 --seed 4 --max-edges 5 --json");
    check_schema(j.out);

    // round trip: emitted text parses back through the spectral command
    std::string tmp = "/tmp/spexlin_cli_gen.hg";
    {
        std::ofstream out(tmp);
        out << a.out;
    }
    CHECK(run("spectral " + tmp).status == 0);
}

TEST_CASE("input errors exit with status 2 and a line diagnostic") {
    CHECK(run("spectral /tmp/definitely_missing_file.hg").status == 2);

    std::string tmp = "/tmp/spexlin_cli_bad.hg";
    {
        std::ofstream out(tmp);
        out << "3 3 1\n0 1 9\n";
    }
    std::string cmd = cli_path() + " spectral " + tmp + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string err;
    char buf[512];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) err.append(buf, got);
    int raw = pclose(pipe);
    CHECK(WEXITSTATUS(raw) == 2);
    CHECK(err.find("line 2") != std::string::npos);

    CHECK(run("bound eval --name bogus --params x=1").status == 2);
    CHECK(run("bound eval --name spex_k2t --params n=10").status == 2);  // missing r, t
    CHECK(run("extremal --n 5 --objective nonsense").status == 2);
    CHECK(run("nonsense-subcommand").status == 2);
}

TEST_CASE("pattern capacity guard and its override") {
    // K_{3,5} has 15 edges, above the default cap of 12
    CHECK(run("berge-check " + src_dir() + "/data/fano.hg --pattern kst:3,5").status == 2);
    CHECK(run("berge-check " + src_dir() +
              "/data/fano.hg --pattern kst:3,5 --max-pattern-edges 16")
              .status == 0);  // 15 edges cannot fit in 7
}

TEST_CASE("version flag") {
    auto r = run("--version");
    CHECK(r.status == 0);
    CHECK(r.out.find("spexlin") != std::string::npos);
}
