#include "grid2dom/cli.hpp"

#include "grid2dom/grid.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace grid2dom;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// The "# "-prefixed block a csv compute --witness emits, decoded back into a
// grid. Only valid when no notes are present (plain --witness, no --check).
StoneGrid witness_from_csv(const std::string& text) {
    std::istringstream lines(text);
    std::string ascii;
    for (std::string line; std::getline(lines, line);)
        if (line.rfind("# ", 0) == 0) ascii += line.substr(2) + "\n";
    return grid_from_ascii(ascii);
}

} // namespace

TEST_CASE("compute, csv default") {
    const CliRun r = run({"compute", "3", "7"});
    CHECK(r.code == 0);
    CHECK(r.out == "m,n,gamma\n3,7,11\n");
    CHECK(r.err.empty());
}

TEST_CASE("compute, json") {
    const CliRun r = run({"--format", "json", "compute", "3", "7"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("schema") == 1);
    CHECK(j.at("command") == "compute");
    CHECK(j.at("m") == 3);
    CHECK(j.at("n") == 7);
    CHECK(j.at("gamma") == 11);
    CHECK(j.at("method") == "iter");
    CHECK_FALSE(j.contains("witness"));
}

TEST_CASE("compute with witness, json round trip") {
    const CliRun r = run({"--format", "json", "compute", "4", "15", "--witness"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("gamma") == 29);
    REQUIRE(j.contains("witness"));
    const StoneGrid g = grid_from_json_string(j.at("witness").dump());
    CHECK(g.rows == 4);
    CHECK(g.cols == 15);
    CHECK(is_dominating(g));
    CHECK(weight(g) == 29);
}

TEST_CASE("compute with witness, csv comment block") {
    const CliRun r = run({"compute", "4", "15", "--witness"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("m,n,gamma\n4,15,29\n", 0) == 0);
    const StoneGrid g = witness_from_csv(r.out);
    CHECK(g.rows == 4);
    CHECK(is_dominating(g));
    CHECK(weight(g) == 29);
}

TEST_CASE("compute with witness, ascii") {
    const CliRun r = run({"--format", "ascii", "compute", "2", "3", "--witness"});
    REQUIRE(r.code == 0);
    const std::string head = "gamma(2,3) = 4\n";
    REQUIRE(r.out.rfind(head, 0) == 0);
    const StoneGrid g = grid_from_ascii(r.out.substr(head.size()));
    CHECK(g.rows == 2);
    CHECK(g.cols == 3);
    CHECK(is_dominating(g));
    CHECK(weight(g) == 4);
}

TEST_CASE("compute --check against the published forms") {
    const CliRun ok = run({"compute", "2", "5", "--check"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("# check: ok") != std::string::npos);

    // No published form for 5 rows; the check reports that and passes.
    const CliRun none = run({"compute", "5", "2", "--check"});
    CHECK(none.code == 0);
    CHECK(none.out.find("# check: no reference") != std::string::npos);
}

TEST_CASE("compute via min-plus powering") {
    const CliRun r = run({"compute", "2", "1000000", "--method", "matpow"});
    CHECK(r.code == 0);
    CHECK(r.out == "m,n,gamma\n2,1000000,1000001\n");
}

TEST_CASE("table") {
    const CliRun r = run({"table", "2", "1", "5", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out == "m,n,gamma\n2,1,2\n2,2,3\n2,3,4\n2,4,5\n2,5,6\n# check: ok\n");

    const CliRun j = run({"--format", "json", "table", "3", "4", "6"});
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    REQUIRE(parsed.at("rows").size() == 3);
    CHECK(parsed.at("rows")[0].at("n") == 4);
    CHECK(parsed.at("rows")[0].at("gamma") == 7);
    CHECK(parsed.at("rows")[2].at("gamma") == 10);

    CHECK(run({"table", "2", "5", "3"}).code == 2); // n_min > n_max
}

TEST_CASE("states") {
    const CliRun r = run({"states", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "m,states,dominated_states\n2,23,9\n");

    const CliRun listed = run({"states", "2", "--list"});
    CHECK(listed.out.find("index,state") != std::string::npos);
    CHECK(listed.out.find("0,\"A2,A2\"") != std::string::npos);

    const CliRun j = run({"--format", "json", "states", "3", "--list"});
    REQUIRE(j.code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("count") == 95);
    CHECK(parsed.at("dominated_count") == 27);
    CHECK(parsed.at("states").size() == 95);
}

TEST_CASE("oracle-check") {
    const CliRun r = run({"oracle-check", "2", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("m,n,solve,brute,raw,status") != std::string::npos);
    CHECK(r.out.find("BAD") == std::string::npos);
    CHECK(r.out.find(",ok") != std::string::npos);

    const CliRun a = run({"--format", "ascii", "oracle-check", "1", "2"});
    CHECK(a.code == 0);
    CHECK(a.out.find("legend:") != std::string::npos);
}

TEST_CASE("conjecture") {
    const CliRun r = run({"conjecture", "2", "40"});
    CHECK(r.code == 0);
    CHECK(r.out == "m,n_max,start_n,period,increments\n2,40,1,1,\"1\"\n");

    // The 4-row sequence has no periodic tail this early in the range.
    const CliRun none = run({"conjecture", "4", "20"});
    CHECK(none.code == 0);
    CHECK(none.out == "m,n_max,start_n,period,increments\n4,20,,,\n");

    const CliRun a = run({"--format", "ascii", "conjecture", "4", "20"});
    CHECK(a.out == "no linear tail detected up to n=20\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"compute", "3"}).code == 2);
    CHECK(run({"compute", "0", "5"}).code == 2);
    CHECK(run({"compute", "2", "2", "--method", "gauss"}).code == 2);
    CHECK(run({"--format", "yaml", "states", "1"}).code == 2);

    const CliRun mixed = run({"compute", "2", "4", "--method", "matpow", "--witness"});
    CHECK(mixed.code == 2);
    CHECK(mixed.err.find("--witness requires --method iter") != std::string::npos);

    const CliRun huge = run({"compute", "2", "3000000000"});
    CHECK(huge.code == 2);
    CHECK(huge.err.find("matpow") != std::string::npos);
}

TEST_CASE("resource limits exit with 3") {
    const CliRun states = run({"states", "9"});
    CHECK(states.code == 3);
    CHECK(states.err.find("resource limit:") != std::string::npos);

    const CliRun capped = run({"--mem-cap", "1", "compute", "6", "2"});
    CHECK(capped.code == 3);
}

TEST_CASE("help exits with 0") {
    const CliRun r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("grid2dom") != std::string::npos);
    CHECK(r.out.find("compute") != std::string::npos);
}

TEST_CASE("cache directory from flag and environment") {
    namespace fs = std::filesystem;
    const fs::path flag_dir = fs::temp_directory_path() / "g2dm-cli-cache-flag";
    const fs::path env_dir = fs::temp_directory_path() / "g2dm-cli-cache-env";
    fs::remove_all(flag_dir);
    fs::remove_all(env_dir);

    CHECK(run({"--cache-dir", flag_dir.string(), "compute", "2", "2"}).code == 0);
    CHECK(fs::exists(flag_dir / "transfer-m2.g2dm"));

    ::setenv("GRID2DOM_CACHE", env_dir.c_str(), 1);
    CHECK(run({"compute", "2", "2"}).code == 0);
    CHECK(fs::exists(env_dir / "transfer-m2.g2dm"));

    // An explicit flag wins over the environment.
    fs::remove_all(flag_dir);
    CHECK(run({"--cache-dir", flag_dir.string(), "compute", "2", "2"}).code == 0);
    CHECK(fs::exists(flag_dir / "transfer-m2.g2dm"));
    ::unsetenv("GRID2DOM_CACHE");

    fs::remove_all(flag_dir);
    fs::remove_all(env_dir);
}
