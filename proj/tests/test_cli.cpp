#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "maxdeg/cli.hpp"

using namespace maxdeg;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("counts") {
    auto r = run({"counts", "2conn-outerplanar", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "class,n,count\n2conn-outerplanar,2,1\n2conn-outerplanar,3,1\n2conn-outerplanar,4,9\n");
    r = run({"counts", "conn-outerplanar", "4", "--format", "json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["counts"]["1"] == "1");
    CHECK(j["counts"]["3"] == "4");
    CHECK(j["counts"]["4"] == "37");
}

TEST_CASE("constants json") {
    auto r = run({"constants", "2conn-sp"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(std::stod(j["q"].get<std::string>()) == doctest::Approx(0.7620402).epsilon(1e-6));
    CHECK(std::stod(j["c"].get<std::string>()) == doctest::Approx(3.679772).epsilon(1e-6));
    for (auto key : {"class", "x0", "q", "c", "auxiliaries", "residuals"}) CHECK(j.contains(key));
}

TEST_CASE("degrees") {
    auto r = run({"degrees", "2conn-outerplanar", "4", "6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("2conn-outerplanar,4,2,,2/3\n") != std::string::npos);
    CHECK(r.out.find("2conn-outerplanar,4,3,,1/3\n") != std::string::npos);
}

TEST_CASE("errors give nonzero exit codes") {
    auto r = run({"counts", "planar", "4"});
    CHECK(r.code != 0);
    CHECK(r.err.find("unknown graph class") != std::string::npos);
    CHECK(run({}).code != 0);
    CHECK(run({"degrees", "2conn-sp", "1"}).code == 2);
    CHECK(run({"verify", "9"}).code == 2);
    CHECK(run({"bounds", "2conn-sp", "12", "--reference", "oracle"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("identical configuration gives identical bytes") {
    const std::vector<std::string> args{"sample", "conn-sp", "60", "--count", "3", "--seed", "42"};
    auto a = run(args), b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    std::istringstream in(a.out);
    int n = 0, m = 0;
    in >> n >> m;
    CHECK(n == 60);
    CHECK(m >= 59);
    CHECK(run({"sample", "conn-sp", "60", "--count", "3", "--seed", "43"}).out != a.out);
}

TEST_CASE("experiment files") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "maxdeg-cli-test";
    fs::create_directories(dir);
    const std::string prefix = (dir / "run").string();
    auto slurp = [](const std::string& p) {
        std::ifstream f(p);
        return std::string(std::istreambuf_iterator<char>(f), {});
    };
    std::vector<std::string> args{"experiment", "2conn-outerplanar", "--n-grid", "32,64", "--samples", "20",
                                  "--seed", "3", "-o", prefix};
    auto r = run(args);
    REQUIRE(r.code == 0);
    auto csv = slurp(prefix + ".csv"), dat = slurp(prefix + ".dat");
    CHECK(csv.rfind("class,n,sample,maxdeg\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 41);
    CHECK(std::count(dat.begin(), dat.end(), '\n') == 3);
    auto j = nlohmann::json::parse(slurp(prefix + ".json"));
    CHECK(j["records"].size() == 2);
    args.insert(args.end(), {"--workers", "3"});
    CHECK(run(args).out == r.out);
    CHECK(slurp(prefix + ".csv") == csv);
    fs::remove_all(dir);
}

TEST_CASE("verify level 1") {
    auto r = run({"verify", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("schema file lists every subcommand") {
    std::ifstream f(MAXDEG_SOURCE_DIR "/docs/cli_schema.json");
    REQUIRE(f);
    auto j = nlohmann::json::parse(f);
    for (auto name : {"counts", "constants", "degrees", "tails", "bounds", "sample", "experiment", "verify"}) {
        CHECK(j["subcommands"].contains(name));
        auto h = run({name, "--help"});
        CHECK(h.code == 0);
        CHECK(!h.out.empty());
    }
}
