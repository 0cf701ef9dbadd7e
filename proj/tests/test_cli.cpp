#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <utility>

#include <json.hpp>

using nlohmann::json;

namespace {

// Runs the binary through the shell; stderr is discarded so diagnostics
// don't pollute the captured stream.
std::pair<int, std::string> run_shell(const std::string& cmd) {
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::pair<int, std::string> run_cli(const std::string& args) {
    return run_shell(std::string(CYCPERM_CLI_PATH) + " " + args);
}

std::pair<int, std::string> run_cli_env(const std::string& env, const std::string& args) {
    return run_shell(env + " " + std::string(CYCPERM_CLI_PATH) + " " + args);
}

}  // namespace

TEST_CASE("count command") {
    auto [code, out] = run_cli("count --patterns '[1324]' --min-n 4 --max-n 6 --format json");
    CHECK(code == 0);
    const json j = json::parse(out);
    CHECK(j["command"] == "count");
    CHECK(j["inputs"]["patterns"] == "[1324]");
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["count"] == "5");
    CHECK(j["rows"][1]["count"] == "13");
    CHECK(j["rows"][2]["count"] == "34");
    CHECK(j["pass"] == true);
}

TEST_CASE("count of the incompatible pair is zero from size six") {
    auto [code, out] = run_cli("count --patterns '[1234],[1432]' --min-n 6 --max-n 7 --format csv");
    CHECK(code == 0);
    CHECK(out == "n,count\n6,0\n7,0\n");
}

TEST_CASE("count of the bonded pattern follows the catalan numbers") {
    auto [code, out] = run_cli("count --patterns '[13(24)]' --min-n 2 --max-n 5 --format csv");
    CHECK(code == 0);
    CHECK(out == "n,count\n2,1\n3,2\n4,5\n5,14\n");
}

TEST_CASE("genfun command") {
    {
        auto [code, out] = run_cli("genfun --patterns '[1324]' --stat cdes --n 2 --format json");
        CHECK(code == 0);
        const json j = json::parse(out);
        CHECK(j["coeffs"] == json::array({"0", "1"}));
    }
    {
        auto [code, out] =
            run_cli("genfun --patterns '[1234],[1342]' --stat joint --n 3 --format json");
        CHECK(code == 0);
        const json j = json::parse(out);
        REQUIRE(j["coeffs"].size() == 2);
        CHECK(j["coeffs"][0] == json::array({1, 1, "1"}));
        CHECK(j["coeffs"][1] == json::array({2, 1, "1"}));
    }
    {
        auto [code, out] =
            run_cli("genfun --patterns '[1324],[1423]' --stat cdes --n 4 --format json");
        CHECK(code == 0);
        const json j = json::parse(out);
        CHECK(j["coeffs"] == json::array({"0", "1", "2", "1"}));
    }
    {
        auto [code, out] = run_cli("genfun --patterns 213,231 --stat des --n 5 --format json");
        CHECK(code == 0);
        const json j = json::parse(out);
        CHECK(j["coeffs"] == json::array({"1", "4", "6", "4", "1"}));
    }
}

TEST_CASE("verify command") {
    auto [code, out] = run_cli("verify --suite singles --max-n 6 --format json");
    CHECK(code == 0);
    const json j = json::parse(out);
    CHECK(j["pass"] == true);
    REQUIRE(j["rows"].size() == 36);
    const auto& row = j["rows"][0];
    CHECK(row.contains("entry_id"));
    CHECK(row.contains("n"));
    CHECK(row.contains("expected"));
    CHECK(row.contains("actual"));
    CHECK(row.contains("pass"));

    auto [tcode, tout] = run_cli("verify --suite es --max-n 6");
    CHECK(tcode == 0);
    CHECK(tout.find(" 0 failed") != std::string::npos);
}

TEST_CASE("wilf command") {
    auto [code, out] = run_cli("wilf --set-size 1 --max-n 6 --format json");
    CHECK(code == 0);
    const json j = json::parse(out);
    REQUIRE(j["classes"].size() == 3);
    for (const auto& cls : j["classes"]) {
        CHECK(cls["members"].size() == 2);
        CHECK(cls["nontrivial"] == false);
    }
    auto [bad, _] = run_cli("wilf --set-size 1 --length 5");
    CHECK(bad == 2);
}

TEST_CASE("tree command") {
    auto [code, out] = run_cli("tree --patterns '[1234],[1342]' --levels 6 --rules --format json");
    CHECK(code == 0);
    const json j = json::parse(out);
    CHECK(j["pass"] == true);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][4]["level"] == 6);
    CHECK(j["rows"][4]["total"] == "8");

    // no grammar registered for this pair
    auto [bad, _] = run_cli("tree --patterns '[1243],[1324]' --levels 5 --rules");
    CHECK(bad == 2);
}

TEST_CASE("es command") {
    auto [code, out] = run_cli("es --m 2 --n 2 --format json");
    CHECK(code == 0);
    const json j = json::parse(out);
    CHECK(j["pass"] == true);
    CHECK(j["rows"][0]["actual"] == "[14253]");
    CHECK(j["rows"][1]["actual"] == "avoids");
    CHECK(j["rows"][2]["expected"] == "0");
    CHECK(j["rows"][2]["actual"] == "0");

    // mn+2 beyond the cap: the scan phase is skipped but the run passes
    auto [big_code, big_out] = run_cli("es --m 5 --n 3 --format json");
    CHECK(big_code == 0);
    const json big = json::parse(big_out);
    CHECK(big["pass"] == true);
    CHECK(big["rows"][2]["actual"] == "skipped");
}

TEST_CASE("conjecture command") {
    auto [code, out] = run_cli("conjecture --id egf-123 --order 4 --format json");
    CHECK(code == 0);
    const json j = json::parse(out);
    CHECK(j["rows"][0]["kind"] == "counts");
    CHECK(j["rows"][0]["values"] == json::array({"1", "1", "1", "3"}));
    CHECK(j["rows"][1]["kind"] == "self_check");
    CHECK(j["rows"][1]["ok"] == true);
    REQUIRE(j["rows"].size() == 5);
    CHECK(j["rows"][4]["convention"] == "shifted");
    CHECK(j["rows"][4]["vanishes"] == true);

    auto [code213, out213] = run_cli("conjecture --id egf-213 --order 4 --format json");
    CHECK(code213 == 0);
    const json k = json::parse(out213);
    CHECK(k["rows"][2]["well_formed"] == false);
    CHECK(k["rows"][3]["well_formed"] == true);
}

TEST_CASE("output redirection") {
    const std::string path = "cli_out_test.json";
    auto [code, out] = run_cli("count --patterns '[1234]' --min-n 2 --max-n 3 --format json --out " +
                               path);
    CHECK(code == 0);
    CHECK(out.empty());
    std::ifstream f(path);
    REQUIRE(f.good());
    const json j = json::parse(f);
    CHECK(j["command"] == "count");
    std::remove(path.c_str());
}

TEST_CASE("usage and resource errors exit with code two") {
    CHECK(run_cli("").first == 2);
    CHECK(run_cli("count").first == 2);                               // missing --patterns
    CHECK(run_cli("count --patterns '[12x]'").first == 2);              // parse failure
    CHECK(run_cli("count --patterns 213 --max-n 5").first == 2);      // linear set can't scan
    CHECK(run_cli("count --patterns '[1234]' --max-n 13").first == 2);  // beyond the hard cap
    CHECK(run_cli("verify --suite nonsense").first == 2);
    CHECK(run_cli("genfun --patterns '[1324]' --stat typo --n 4").first == 2);
    CHECK(run_cli("conjecture --id egf-999 --order 3").first == 2);
    CHECK(run_cli("--help").first == 0);
}

TEST_CASE("environment cap") {
    auto [code, _] = run_cli_env("CYCPERM_MAX_N=5", "count --patterns '[1234]' --max-n 6");
    CHECK(code == 2);
    auto [ok_code, ok_out] =
        run_cli_env("CYCPERM_MAX_N=5", "count --patterns '[1234]' --min-n 5 --max-n 5");
    CHECK(ok_code == 0);
    auto [bad_code, bad_out] = run_cli_env("CYCPERM_MAX_N=frog", "count --patterns '[1234]'");
    CHECK(bad_code == 2);
}
