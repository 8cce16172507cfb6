#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsc/cache.hpp"
#include "qsc/cli.hpp"
#include "qsc/classical.hpp"
#include "qsc/quantum.hpp"

using namespace qsc;
using Json = nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = qsc::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classical product command") {
    auto r = run_cli({"product", "--flag", "1,2;3", "--u", "2,1,3", "--v", "2,1,3",
                      "--classical"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["flag"]["n"] == 3);
    CHECK(j["flag"]["ranks"] == Json::array({1, 2}));
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["perm"] == Json::array({3, 1, 2}));
    CHECK(j["terms"][0]["coeff"] == 1);
    CHECK_FALSE(j["terms"][0].contains("q"));
}

TEST_CASE("quantum product command round-trips to the class") {
    auto r = run_cli({"qproduct", "--flag", "1;2", "--u", "2,1", "--v", "2,1"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    Flag f = Flag::parse("1;2");
    QCohClass parsed(f);
    for (auto& t : j["terms"]) {
        QMonomial d = t["q"].get<QMonomial>();
        Permutation w(t["perm"].get<std::vector<int>>());
        parsed.add(d, w, t["coeff"].get<long long>());
    }
    CHECK(parsed == quantum_product(QCohClass::basis(f, Permutation::parse("2,1")),
                                    QCohClass::basis(f, Permutation::parse("2,1"))));
}

TEST_CASE("gromov-witten command") {
    auto r = run_cli({"gw", "--flag", "1;2", "--classes", "2,1|2,1|2,1", "--d", "1"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["value"] == 1);
    auto zero = run_cli({"gw", "--flag", "1;2", "--classes", "2,1|2,1|1,2", "--d", "1"});
    REQUIRE(zero.code == 0);
    CHECK(Json::parse(zero.out)["value"] == 0);
}

TEST_CASE("giambelli commands emit polynomial text") {
    auto r = run_cli({"giambelli", "--flag", "1;2", "--perm", "2,1"});
    REQUIRE(r.code == 0);
    CHECK(Json::parse(r.out)["poly"] == "s1_1");
    auto q = run_cli({"qgiambelli", "--flag", "1,2;3", "--perm", "3,2,1"});
    REQUIRE(q.code == 0);
    Poly p = Poly::parse(Json::parse(q.out)["poly"].get<std::string>());
    CHECK(p.drop_q() == giambelli_poly(Permutation::parse("3,2,1"), Flag::parse("1,2;3")));
}

TEST_CASE("basis command") {
    auto r = run_cli({"basis", "--flag", "2;4"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["counts"]["perms"] == 6);
    CHECK(j["counts"]["lambdas"] == 6);
    auto f = run_cli({"basis", "--flag", "1;2"});
    CHECK(Json::parse(f.out)["perms"].size() == 2);
}

TEST_CASE("verify command") {
    auto r = run_cli({"verify", "--flag", "1;3", "--suite", "thm3_16"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["cases"].get<long long>() > 0);
    auto bad = run_cli({"verify", "--flag", "1;3", "--suite", "bogus"});
    CHECK(bad.code == 2);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run_cli({"product", "--flag", "nope", "--u", "1,2", "--v", "1,2"}).code == 2);
    CHECK(run_cli({"product", "--flag", "1;2", "--u", "1,1", "--v", "1,2"}).code == 2);
    CHECK(run_cli({"giambelli", "--flag", "1;3", "--perm", "1,3,2"}).code == 2);
    CHECK(run_cli({"gw", "--flag", "1;2", "--classes", "2,1|2,1", "--d", "1,1"}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("output is byte stable") {
    auto a = run_cli({"qproduct", "--flag", "1,2;3", "--u", "2,3,1", "--v", "3,1,2"});
    auto b = run_cli({"qproduct", "--flag", "1,2;3", "--u", "2,3,1", "--v", "3,1,2"});
    CHECK(a.out == b.out);
    CHECK(a.code == 0);
}

TEST_CASE("table rendering") {
    auto r = run_cli({"--table", "product", "--flag", "1,2;3", "--u", "2,1,3", "--v",
                      "2,1,3"});
    REQUIRE(r.code == 0);
    CHECK(r.out == "1  [3,1,2]\n");
}

TEST_CASE("constant cache semantics") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "qsc_cache_test";
    std::filesystem::remove_all(dir);
    ConstantCache cache(dir);
    CHECK_FALSE(cache.get("k").has_value());
    cache.put("k", "record-1");
    cache.put("other", "record-2");
    CHECK(cache.get("k") == "record-1");
    cache.put("k", "record-1b");
    CHECK(cache.get("k") == "record-1b");
    cache.invalidate("k");
    CHECK_FALSE(cache.get("k").has_value());
    CHECK(cache.get("other") == "record-2");

    // corrupt the stored record: the entry reads as a miss
    {
        std::ofstream f(dir / "records.ndjson", std::ios::app);
        f << "{\"key\":\"bad\",\"sum\":\"0\",\"record\":\"tampered\"}\n";
        f << "not json at all\n";
    }
    ConstantCache reopened(dir);
    CHECK_FALSE(reopened.get("bad").has_value());
    CHECK(reopened.get("other") == "record-2");
    CHECK_FALSE(reopened.take_warnings().empty());
    std::filesystem::remove_all(dir);
}

TEST_CASE("cache hits replay byte-identical output") {
    std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "qsc_cli_cache_test";
    std::filesystem::remove_all(dir);
    setenv(kCacheEnvVar, dir.c_str(), 1);
    auto first = run_cli({"qproduct", "--flag", "2;4", "--u", "1,3,2,4", "--v", "1,3,2,4"});
    auto second = run_cli({"qproduct", "--flag", "2;4", "--u", "1,3,2,4", "--v", "1,3,2,4"});
    REQUIRE(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(std::filesystem::exists(dir / "records.ndjson"));
    auto bypass = run_cli({"--no-cache", "qproduct", "--flag", "2;4", "--u", "1,3,2,4",
                           "--v", "1,3,2,4"});
    CHECK(bypass.out == first.out);
    unsetenv(kCacheEnvVar);
    std::filesystem::remove_all(dir);
}
