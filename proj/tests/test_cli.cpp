#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

// Exercises the installed binary end to end; SYMPAIR_CLI_PATH is injected by
// the build so the tests always run the freshly built tool.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Run the CLI with stderr dropped; capture stdout and the exit code.
RunResult run_cli(const std::string& cli_args) {
    std::string command =
        std::string(SYMPAIR_CLI_PATH) + " " + cli_args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE_MESSAGE(pipe != nullptr, "popen failed for: " << command);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "missing file " << path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string temp_path(const std::string& name) {
    const char* dir = std::getenv("TMPDIR");
    return std::string(dir ? dir : "/tmp") + "/" + name;
}

using json = nlohmann::json;

}  // namespace

TEST_CASE("construct emits the spec, layout and generator matrix as JSON") {
    auto r = run_cli("construct --q 7 --k 3 --m 4");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["spec"]["q"] == 7);
    CHECK(j["spec"]["k"] == 3);
    CHECK(j["spec"]["m"] == 4);
    CHECK(j["spec"]["n"] == 8);
    CHECK(j["spec"]["t"] == 1);
    CHECK(j["spec"]["m1"] == 4);
    REQUIRE(j["layout"].size() == 8);
    CHECK(j["layout"][0]["tag"] == "alpha");
    CHECK(j["layout"][0]["index"] == 1);
    CHECK(j["layout"][0]["value"] == 2);
    CHECK(j["layout"][1]["tag"] == "beta1");
    CHECK(j["layout"][3]["tag"] == "beta2");
    REQUIRE(j["generator"].size() == 3);
    // Row 0 evaluates the constant polynomial 1 everywhere.
    for (const auto& entry : j["generator"][0]) CHECK(entry == 1);
    // Row 1 evaluates x at the laid-out points.
    CHECK(j["generator"][1][0] == 2);
    CHECK(j["generator"][1][1] == 0);
}

TEST_CASE("construct accepts explicit evaluation points") {
    auto r = run_cli("construct --q 7 --k 3 --m 4 --beta1 5 --beta2 6 --alphas 1,2,3,4");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["spec"]["beta1"] == 5);
    CHECK(j["spec"]["beta2"] == 6);
    CHECK(j["layout"][0]["value"] == 1);
    CHECK(j["layout"][1]["value"] == 5);
}

TEST_CASE("construct rejects bad parameters with exit 2") {
    CHECK(run_cli("construct --q 7 --k 3 --m 6").exit_code == 2);   // m > q-2
    CHECK(run_cli("construct --q 7 --k 2 --m 4").exit_code == 2);   // k < 3
    CHECK(run_cli("construct --q 6 --k 3 --m 4").exit_code == 2);   // 6 not a prime power
    CHECK(run_cli("construct --k 3 --m 4").exit_code == 2);         // no field given
    CHECK(run_cli("construct --q 7 --p 3 --e 2 --k 3 --m 4").exit_code == 2);
    CHECK(run_cli("construct --q 7 --k 3 --m 4 --beta1 5").exit_code == 2);
    CHECK(run_cli("construct --q 7 --m 4").exit_code == 2);         // missing --k
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("construct --q 7 --k 3 --m 4 --nonsense 1").exit_code == 2);
}

TEST_CASE("help exits 0") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("verify reports the distance agreement") {
    auto r = run_cli("verify --q 7 --k 3 --m 4");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["dp_enumerated"] == 7);
    CHECK(j["dp_formula"] == 7);
    CHECK(j["rank"] == 3);
    CHECK(j["mds"] == true);
    CHECK(j["pass"] == true);

    CHECK(run_cli("verify --q 3 --k 3 --m 4").exit_code == 2);      // m > q-2
}

TEST_CASE("verify accepts extension fields via --p/--e") {
    auto r = run_cli("verify --p 2 --e 3 --k 3 --m 5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["spec"]["q"] == 8);
    CHECK(j["pass"] == true);
}

TEST_CASE("spectrum csv matches the comparison table golden") {
    auto r = run_cli("spectrum --q 7 --k 3 --m 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "weight,enumerated,closed_form,delta\n"
          "0,1,1,0\n"
          "7,48,48,0\n"
          "8,294,294,0\n");
}

TEST_CASE("spectrum json carries distribution, closed form and diff") {
    auto r = run_cli("spectrum --q 7 --k 4 --m 5");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["distribution"]["7"] == 102);
    CHECK(j["distribution"]["8"] == 228);
    CHECK(j["distribution"]["9"] == 2070);
    CHECK(j["closed_form"]["7"] == 102);
    CHECK(j["diff"]["match"] == true);
}

TEST_CASE("spectrum without a closed form reports sanity facts") {
    auto r = run_cli("spectrum --q 8 --k 5 --m 6");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j.count("closed_form") == 0);
    CHECK(j["sanity"]["pass"] == true);
    CHECK(j["distribution"]["0"] == 1);

    auto csv = run_cli("spectrum --q 8 --k 5 --m 6 --format csv");
    CHECK(csv.exit_code == 0);
    // No closed-form column values for k outside {3,4}.
    CHECK(csv.out.starts_with("weight,enumerated,closed_form,delta\n0,1,,\n5,"));
}

TEST_CASE("spectrum enforces the enumeration ceiling with exit 2") {
    CHECK(run_cli("spectrum --q 7 --k 3 --m 4 --ceiling 100").exit_code == 2);
}

TEST_CASE("census exits 0 when every class count matches its formula") {
    auto r = run_cli("census --q 7 --m 4");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["q"] == 7);
    CHECK(j["m"] == 4);
    CHECK(j["rows"].size() == 25);
    CHECK(j["all_match"] == true);

    auto csv = run_cli("census --q 7 --m 4 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.starts_with("class,enumerated,formula,delta\nS1,6,6,0\nS2,18,18,0"));

    CHECK(run_cli("census --q 7 --m 6").exit_code == 2);            // m > q-2
    CHECK(run_cli("census --q 67 --m 4").exit_code == 2);           // enumeration too big
}

TEST_CASE("sweep over a small grid summarizes every case and passes") {
    auto r = run_cli("sweep --q 7,8 --k 3..4 --m all --jobs 2");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["pass"] == true);
    // q=7: m in {4,5} for k=3, {5} for k=4; q=8: {4,5,6} and {5,6}.
    CHECK(j["cases"].size() == 8);
    CHECK(j["cases"][0]["q"] == 7);
    CHECK(j["cases"][0]["k"] == 3);
    CHECK(j["cases"][0]["m"] == 4);
    CHECK(j["cases"][0]["dp_enumerated"] == 7);
    CHECK(j["cases"][0]["dp_formula"] == 7);
    CHECK(j["cases"][0]["mds"] == true);
    CHECK(j["cases"][0]["spectrum"] == "match");
    CHECK(j["cases"][0]["census"] == "ok");
    // One census per distinct (q,m): 7x{4,5}, 8x{4,5,6}.
    CHECK(j["censuses"].size() == 5);
    CHECK(j["censuses"][0]["all_match"] == true);
}

TEST_CASE("sweep output is byte-identical across thread counts") {
    std::string a = temp_path("sympair_sweep_j1.json");
    std::string b = temp_path("sympair_sweep_j4.json");
    auto r1 = run_cli("sweep --q 7 --k 3..4 --m all --jobs 1 --out " + a);
    auto r2 = run_cli("sweep --q 7 --k 3..4 --m all --jobs 4 --out " + b);
    CHECK(r1.exit_code == 0);
    CHECK(r2.exit_code == 0);
    CHECK(r1.out.empty());  // table goes to the file, progress to stderr
    CHECK(read_file(a) == read_file(b));

    std::string c = temp_path("sympair_sweep_j1.csv");
    std::string d = temp_path("sympair_sweep_j4.csv");
    CHECK(run_cli("sweep --q 7 --k 3..4 --format csv --jobs 1 --out " + c).exit_code == 0);
    CHECK(run_cli("sweep --q 7 --k 3..4 --format csv --jobs 4 --out " + d).exit_code == 0);
    std::string csv = read_file(c);
    CHECK(csv == read_file(d));
    CHECK(csv.starts_with("q,k,m,n,dp_enumerated,dp_formula,rank,mds,spectrum,census\n"));
    CHECK(csv.find("7,3,4,8,7,7,3,true,match,ok\n") != std::string::npos);
}

TEST_CASE("sweep reads a config file and lets flags override it") {
    std::string cfg_path = temp_path("sympair_sweep.cfg");
    {
        std::ofstream f(cfg_path);
        f << "# grid under test\n"
          << "q = 7\n"
          << "k = 3..4\n"
          << "m = all\n"
          << "format = csv\n"
          << "jobs = 1\n";
    }
    auto r = run_cli("sweep --config " + cfg_path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.starts_with("q,k,"));

    // --format beats the config's csv.
    auto rj = run_cli("sweep --config " + cfg_path + " --format json");
    CHECK(rj.exit_code == 0);
    json j = json::parse(rj.out);
    CHECK(j["pass"] == true);

    CHECK(run_cli("sweep --config /nonexistent.cfg").exit_code == 2);
}

TEST_CASE("sweep with an empty grid exits 2") {
    CHECK(run_cli("sweep --q 5 --k 4 --m all").exit_code == 2);     // no m fits 4 < m <= 3
    CHECK(run_cli("sweep --q 7 --k 3 --m 6").exit_code == 2);       // m > q-2 filtered out
}
