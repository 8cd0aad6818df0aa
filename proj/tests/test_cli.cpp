#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;

namespace {

std::string g_binary;

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args, const std::string& env = "") {
    std::string cmd = env.empty() ? "" : env + " ";
    cmd += g_binary + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    REQUIRE(f.good());
    f << body;
}

} // namespace

TEST_CASE("generate text lists the 2x2 first jet generators") {
    RunResult r = run("generate --rows 2 --cols 2 --rank 1 --jets 1 --format text");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "1*x_1_1_0*x_2_2_0 - 1*x_1_2_0*x_2_1_0\n"
          "1*x_1_1_0*x_2_2_1 - 1*x_1_2_0*x_2_1_1 - 1*x_2_1_0*x_1_2_1 + "
          "1*x_2_2_0*x_1_1_1\n");
}

TEST_CASE("generate json carries schema, config and variables") {
    RunResult r = run("generate --rows 2 --cols 3 --rank 1 --jets 2");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("schema") == 1);
    CHECK(rep.at("config").at("command") == "generate");
    CHECK(rep.at("config").at("rows") == 2);
    CHECK(rep.at("config").at("prime") == 0);
    CHECK(rep.at("r") == 2);
    CHECK(rep.at("s") == 3);
    CHECK(rep.at("c") == 1);
    CHECK(rep.at("m") == 2);
    CHECK(rep.at("variables").size() == 2 * 3 * 3);
    CHECK(rep.at("variables")[0] == "x_1_1_0");
    CHECK(rep.at("generators").size() == 3 * 3); // three 2-minors, orders 0..2
}

TEST_CASE("predict reports three components for the 5x3 third jets") {
    RunResult r = run("predict --rows 5 --cols 3 --jets 3");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("schema") == 1);
    CHECK(rep.at("applicable") == true);
    CHECK(rep.at("count") == 3);
    CHECK(rep.at("dims") == json::array({28, 29, 30}));
    CHECK(rep.at("certificate").get<std::string>().find("r > s >= 3") == 0);
}

TEST_CASE("predict text mode on failing hypotheses") {
    RunResult r = run("predict --rows 3 --cols 3 --jets 1 --format text");
    CHECK(r.code == 0);
    CHECK(r.out.find("applicable: no") != std::string::npos);
    CHECK(r.out.find("count: 0") != std::string::npos);
}

TEST_CASE("count exact matches the singular 2x2 tallies") {
    RunResult r = run("count --rows 2 --cols 2 --rank 1 --jets 0 --q 2 --q 3");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("label") == "EVIDENCE");
    CHECK(rep.at("reports").size() == 2);
    CHECK(rep.at("reports")[0].at("q") == 2);
    CHECK(rep.at("reports")[0].at("count") == 10);
    CHECK(rep.at("reports")[1].at("q") == 3);
    CHECK(rep.at("reports")[1].at("count") == 33);
    double slope = rep.at("dim_estimate").at("slope").get<double>();
    CHECK(slope > 2.5);
    CHECK(slope < 3.5);
}

TEST_CASE("count json is byte identical across reruns") {
    const std::string args =
        "count --rows 2 --cols 2 --rank 1 --jets 1 --q 3 --mode mc "
        "--samples 20000 --seed 42 --workers 2";
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    json rep = json::parse(a.out);
    CHECK(rep.at("reports")[0].at("mode") == "monte-carlo");
    CHECK(rep.at("reports")[0].at("seed") == 42);
}

TEST_CASE("worker threads resolve from flag over environment over default") {
    RunResult def = run("predict --rows 5 --cols 3 --jets 1");
    CHECK(json::parse(def.out).at("config").at("workers") == 1);
    RunResult env = run("predict --rows 5 --cols 3 --jets 1", "JETLAB_THREADS=5");
    CHECK(json::parse(env.out).at("config").at("workers") == 5);
    RunResult flag = run("count --rows 2 --cols 2 --rank 1 --jets 0 --q 2 --workers 2",
                         "JETLAB_THREADS=5");
    CHECK(json::parse(flag.out).at("config").at("workers") == 2);
    RunResult junk = run("predict --rows 5 --cols 3 --jets 1", "JETLAB_THREADS=frog");
    CHECK(json::parse(junk.out).at("config").at("workers") == 1);
}

TEST_CASE("contact solves a file input and prefers combined divisors") {
    const std::string path = "/tmp/jetlab_cli_contact.json";
    write_file(path,
               R"({"n": 2, "k": [0, 1], "a": [[1, 3]], "families": [[0, 1]],)"
               R"( "orders": [4]})");
    RunResult r = run("contact --input " + path);
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("schema") == 1);
    CHECK(rep.at("value") == 3);
    CHECK(rep.at("nu") == json::array({1, 1}));
}

TEST_CASE("contact reports infeasible queries") {
    const std::string path = "/tmp/jetlab_cli_infeasible.json";
    write_file(path,
               R"({"k": [0, 0], "a": [[1, 0], [0, 1]], "families": [],)"
               R"( "orders": [2, 1]})");
    RunResult r = run("contact --input " + path + " --format text");
    CHECK(r.code == 0);
    CHECK(r.out == "infeasible\n");
    RunResult j = run("contact --input " + path);
    CHECK(json::parse(j.out).at("value") == "infeasible");
}

TEST_CASE("origin fiber suite passes and emits one line per sub-check") {
    RunResult r = run("check --suite origin-fiber --rows 2 --cols 2 --rank 1 "
                      "--jets 2 --format text");
    CHECK(r.code == 0);
    CHECK(r.out ==
          "PASS survivors-match-lower-jets\n"
          "PASS high-orders-absent\n"
          "PASS\n");
    RunResult j = run("check --suite origin-fiber --rows 3 --cols 3 --rank 2 --jets 3");
    CHECK(j.code == 0);
    json rep = json::parse(j.out);
    CHECK(rep.at("label") == "VERIFIED");
    CHECK(rep.at("degree") == 3);
    CHECK(rep.at("pass") == true);
}

TEST_CASE("origin fiber count suite passes over small primes") {
    RunResult r = run("check --suite origin-fiber-count --rows 2 --cols 2 --rank 1 "
                      "--jets 2 --q 2 --q 3");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("label") == "EVIDENCE");
    CHECK(rep.at("checks")[0].at("left") == 160);
    CHECK(rep.at("checks")[0].at("right") == 160);
    CHECK(rep.at("checks")[1].at("left") == 2673);
    CHECK(rep.at("pass") == true);
}

TEST_CASE("minimal primes suite verifies over the rationals") {
    RunResult r = run("check --suite minimal-primes");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("label") == "VERIFIED");
    CHECK(rep.at("field") == "QQ");
    CHECK(rep.at("p2_dimension") == 9);
    CHECK(rep.at("p1_dimension") == 10);
    CHECK(rep.at("checks").size() == 6);
    CHECK(rep.at("pass") == true);
}

TEST_CASE("lemma32 suite passes on a two-center resolution") {
    const std::string path = "/tmp/jetlab_cli_lemma32.json";
    write_file(path, R"({"k": [1], "a": [[2], [1]], "families": []})");
    RunResult r = run("check --suite lemma32 --input " + path +
                      " --order 3 --scale 2 --z-index 1");
    CHECK(r.code == 0);
    json rep = json::parse(r.out);
    CHECK(rep.at("label") == "VERIFIED");
    CHECK(rep.at("left").is_number());
    CHECK(rep.at("pass") == true);
}

TEST_CASE("a check that cannot be confirmed exits with one") {
    const std::string path = "/tmp/jetlab_cli_refuted.json";
    write_file(path, R"({"k": [0, 0], "a": [[1, 0], [0, 1]], "families": []})");
    RunResult r = run("check --suite lemma32 --input " + path +
                      " --order 2 --scale 3 --z-index 1 --format text");
    CHECK(r.code == 1);
    CHECK(r.out.find("FAIL both-sides-feasible") != std::string::npos);
}

TEST_CASE("usage and resource problems exit with two") {
    CHECK(run("frobnicate").code == 2);
    CHECK(run("generate --rows 2 --cols 99").code == 2);
    CHECK(run("check --suite lemma32").code == 2); // missing --input
    CHECK(run("count --rows 2 --cols 2 --rank 1 --jets 9 --q 2 --cap 100").code == 2);
    CHECK(run("contact --input /tmp/jetlab_cli_no_such_file.json").code == 2);
    CHECK(run("generate --rows 2 --cols 2 --rank 5 --jets 1").code == 2);
}

TEST_CASE("output flag writes the report to a file") {
    const std::string path = "/tmp/jetlab_cli_out.json";
    std::remove(path.c_str());
    RunResult r = run("predict --rows 5 --cols 3 --jets 3 --output " + path);
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    json rep = json::parse(f);
    CHECK(rep.at("count") == 3);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <jetlab-binary> [doctest args]\n");
        return 2;
    }
    g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(argc - 1, argv + 1);
    return ctx.run();
}
