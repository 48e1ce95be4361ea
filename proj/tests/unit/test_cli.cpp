#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

const std::string example = ASYNCFLOW_TEST_DATA "/example_circuit.net";

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "asyncflow");
    std::ostringstream out;
    std::ostringstream err;
    const int status = asyncflow::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("asyncflow_test_" + name);
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

TEST_CASE("sim reproduces the stable scenario")
{
    const auto r = run({"sim", example, "--init", "00", "--alpha", "01;(11)", "--steps", "3"});
    CHECK(r.status == 0);
    CHECK(r.out == "# k alpha state\n-1 - 00\n0 01 01\n1 11 01\n2 11 01\n3 11 01\n");
    CHECK(r.err.empty());

    const auto zero = run({"sim", example, "--init", "10", "--alpha", ";(11)", "--steps", "0"});
    CHECK(zero.out == "# k alpha state\n-1 - 10\n0 11 11\n");
}

TEST_CASE("sim warns on semi-flows and writes JSON")
{
    const auto path = temp_path("sim.json");
    const auto r = run({"sim", example, "--init", "00", "--alpha", ";(10)", "--steps", "2", "--json", path.string()});
    CHECK(r.status == 0);
    CHECK(r.err.find("not progressive") != std::string::npos);
    const auto json = nlohmann::json::parse(slurp(path));
    REQUIRE(json.is_array());
    CHECK(json.size() == 4);
    CHECK(json[0]["k"] == -1);
    CHECK(json[1]["state"] == "10");
    std::filesystem::remove(path);
}

TEST_CASE("identity network trace is constant")
{
    const auto path = temp_path("identity.net");
    std::ofstream(path) << "x1 = x1\nx2 = x2\n";
    const auto r = run({"sim", path.string(), "--init", "10", "--alpha", ";(11)", "--steps", "2"});
    CHECK(r.out == "# k alpha state\n-1 - 10\n0 11 10\n1 11 10\n2 11 10\n");
    const auto fix = run({"fixpoints", path.string()});
    CHECK(fix.out == "00\n01\n10\n11\n");
    std::filesystem::remove(path);
}

TEST_CASE("rsim reports settling and cycles")
{
    const auto stable = run({"rsim", example, "--init", "00", "--alpha", ";(01)", "--times", "0;+1", "--until", "5"});
    CHECK(stable.status == 0);
    CHECK(stable.out == "# interval state\n(-inf, 0) 00\n[0, inf) 01\neventually constant: 01 from 0\n");

    const auto cycling = run({"rsim", example, "--init", "10", "--alpha", ";(01)", "--times", "0;+1", "--until", "1"});
    CHECK(cycling.out == "# interval state\n(-inf, 0) 10\n[0, 1) 11\n[1, 2) 10\ncycle from 0 period 2: 11 10\n");

    const auto early = run({"rsim", example, "--init", "10", "--alpha", ";(01)", "--times", "0;+1", "--until", "-1"});
    CHECK(early.out == "# interval state\n(-inf, 0) 10\ncycle from 0 period 2: 11 10\n");
}

TEST_CASE("diagram and fixpoints")
{
    const auto fix = run({"fixpoints", example});
    CHECK(fix.status == 0);
    CHECK(fix.out == "01\n");

    const auto a = run({"diagram", example});
    const auto b = run({"diagram", example});
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("digraph state_diagram {", 0) == 0);

    const auto path = temp_path("diagram.dot");
    CHECK(run({"diagram", example, "--dot", path.string(), "--hide-self-loops"}).status == 0);
    const std::string dot = slurp(path);
    CHECK(dot.find("\"00\" -> \"11\" [label=\"11\"];") != std::string::npos);
    CHECK(dot.find("\"01\" -> \"01\"") == std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("check exit statuses")
{
    const auto vacuous = run({"check", "--random", "--trials", "0"});
    CHECK(vacuous.status == 0);
    CHECK(vacuous.out.find("overall: PASS") != std::string::npos);

    const auto pass = run({"check", example, "--trials", "200", "--seed", "3", "--threads", "1"});
    CHECK(pass.status == 0);

    const auto fail = run({"check", "--random", "--trials", "300", "--mutant", "lookahead", "--threads", "1"});
    CHECK(fail.status == 1);
    CHECK(fail.out.find("overall: FAIL") != std::string::npos);
    CHECK(fail.out.find("first counterexample for causality.discrete") != std::string::npos);

    const auto path = temp_path("check.json");
    CHECK(run({"check", "--random", "--trials", "50", "--json", path.string()}).status == 0);
    CHECK(nlohmann::json::parse(slurp(path))["passed"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("check output does not depend on the thread count")
{
    const auto one = run({"check", "--random", "--trials", "200", "--seed", "9", "--threads", "1", "--mutant", "delayed-switch"});
    const auto two = run({"check", "--random", "--trials", "200", "--seed", "9", "--threads", "2", "--mutant", "delayed-switch"});
    CHECK(one.out == two.out);
    CHECK(one.status == two.status);
}

TEST_CASE("usage and input errors exit 2 with one diagnostic line")
{
    for (const auto& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"sim", example, "--init", "0", "--alpha", ";(11)", "--steps", "1"},
             {"sim", example, "--init", "00", "--alpha", "bad", "--steps", "1"},
             {"sim", example, "--init", "00", "--alpha", ";(11)", "--steps", "-1"},
             {"rsim", example, "--init", "00", "--alpha", ";(11)", "--times", "1,0;+1", "--until", "2"},
             {"rsim", example, "--init", "00", "--alpha", ";(11)", "--times", "0;+0", "--until", "2"},
             {"fixpoints", "/nonexistent.net"},
             {"check"},
             {"check", "--random", "--trials", "-1"},
             {"check", "--random", "--mutant", "bogus"},
         }) {
        CAPTURE(args.size());
        const auto r = run(args);
        CHECK(r.status == 2);
        CHECK_FALSE(r.err.empty());
    }
    const auto r = run({"sim", example, "--init", "00", "--alpha", "bad", "--steps", "1"});
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
}
