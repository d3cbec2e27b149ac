#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "dynconf/error.hpp"
#include "dynconf/exceptional.hpp"
#include "dynconf/export.hpp"

using namespace dynconf;

namespace {

json read_golden(const std::string& kind) {
    std::ifstream in(std::string(DYNCONF_SOURCE_DIR) + "/tests/golden/" + kind + ".configs.json");
    REQUIRE(in.good());
    return json::parse(in);
}

}  // namespace

TEST_CASE("published counts") {
    RunOptions o;
    o.workers = 4;
    const std::map<std::string, std::pair<std::size_t, std::size_t>> want = {
        {"E6", {77, 11}}, {"E7", {346, 44}}, {"E8", {1892, 138}}, {"F4", {25, 5}}, {"G2", {4, 2}}};
    for (const auto& [kind, counts] : want) {
        auto r = run_exceptional_checked(kind, o);
        CHECK(r.completed);
        CHECK(r.total == counts.first);
        CHECK(r.mod_tau == counts.second);
        CHECK(r.revalidated);
        CHECK(r.twist_stable);
        CHECK(r.matches());
    }
}

TEST_CASE("groups per kind") {
    CHECK(exceptional_job("E6").group.text() == "tau5rho");
    CHECK(exceptional_job("E7").group.text() == "tau8");
    CHECK(exceptional_job("E8").group.text() == "tau14");
    CHECK(exceptional_job("F4").group.text() == "tau5");
    CHECK(exceptional_job("G2").group.text() == "tau2");
    CHECK_THROWS_AS(exceptional_job("A5"), Error);
}

TEST_CASE("dry run reports quiver sizes only") {
    RunOptions o;
    o.dry_run = true;
    auto t = run_all(o);
    std::vector<int> sizes;
    for (const auto& c : t.columns) {
        sizes.push_back(c.vertices);
        CHECK_FALSE(c.completed);
        CHECK(c.configurations.empty());
    }
    CHECK(sizes == std::vector<int>{30, 56, 112, 20, 4});
}

TEST_CASE("only filter") {
    auto t = run_all({}, {"F4"});
    REQUIRE(t.columns.size() == 1);
    CHECK(t.columns[0].total == 25);
    CHECK(t.columns[0].mod_tau == 5);
    CHECK(t.all_match());
    auto text = t.render();
    CHECK(text.find("25") != std::string::npos);
}

TEST_CASE("a result that differs from the expected counts does not match") {
    auto r = run_exceptional("G2");
    REQUIRE(r.matches());
    r.total = 5;
    CHECK_FALSE(r.matches());
    r.total = 4;
    r.mod_tau = 1;
    CHECK_FALSE(r.matches());
}

TEST_CASE("an exhausted budget is reported, not thrown, by the plain runner") {
    RunOptions o;
    o.time_budget_seconds = 1e-9;
    auto r = run_exceptional("E8", o);
    CHECK_FALSE(r.completed);
    CHECK_FALSE(r.error.empty());
    CHECK_FALSE(r.matches());
    try {
        run_exceptional_checked("E8", o);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TimeBudgetExceeded);
    }
}

TEST_CASE("lists equal the golden files") {
    for (const std::string kind : {"E6", "E7", "E8", "F4", "G2"}) {
        auto r = run_exceptional(kind);
        CHECK_MESSAGE(configuration_list_to_json(*r.quiver, r.configurations) == read_golden(kind), kind);
    }
}

TEST_CASE("reruns are identical for any worker count") {
    for (const std::string kind : {"E6", "E7", "F4"}) {
        auto base = run_exceptional(kind, {1, 900.0, false});
        for (int w : {2, 8}) {
            auto again = run_exceptional(kind, {w, 900.0, false});
            REQUIRE(again.configurations.size() == base.configurations.size());
            for (std::size_t k = 0; k < base.configurations.size(); ++k)
                CHECK(again.configurations[k].members == base.configurations[k].members);
        }
    }
}
