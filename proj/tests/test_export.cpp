#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dynconf/export.hpp"
#include "dynconf/error.hpp"

using namespace dynconf;

namespace {

std::vector<TranslationQuiver> samples() {
    return {build_quotient(build_dynkin("A5"), {4, false}),  build_quotient(build_dynkin("B3"), {4, false}),
            build_quotient(build_dynkin("D4"), {3, true}),   build_quotient(build_dynkin("E6"), {5, true}),
            build_quotient(build_dynkin("G2"), {2, false}),  build_z_window(build_dynkin("C4"), -1, 3),
            build_z_window(build_dynkin("F4"), 0, 2)};
}

}  // namespace

TEST_CASE("quiver JSON round trips") {
    for (const auto& q : samples()) {
        auto j = quiver_to_json(q);
        auto back = quiver_from_json(json::parse(j.dump()));
        CHECK(quiver_to_json(back) == j);
        CHECK(back.size() == q.size());
        CHECK(back.arrows.size() == q.arrows.size());
    }
}

TEST_CASE("configuration JSON round trips by ids and by labels") {
    auto q = build_quotient(build_dynkin("A5"), {4, false});
    for (const auto& c : enumerate_configurations(q)) {
        auto j = configuration_to_json(q, c.members);
        CHECK(configuration_from_json(q, json::parse(j.dump())) == c.members);
        json by_label = {{"members", j["labels"]}};
        CHECK(configuration_from_json(q, by_label) == c.members);
    }
    auto g2 = build_quotient(build_dynkin("G2"), {2, false});
    auto list = configuration_list_to_json(g2, enumerate_configurations(g2));
    CHECK(list["count"] == 4);
    CHECK(json::parse(list.dump()) == list);
}

TEST_CASE("attached configurations survive the round trip") {
    auto q = build_quotient(build_dynkin("A5"), {4, false});
    auto c = enumerate_configurations(q).at(3).members;
    auto a = attach_configuration(q, c);
    auto back = quiver_from_json(quiver_to_json(a));
    CHECK(back.size() == q.size() + static_cast<int>(c.size()));
    CHECK(quiver_to_json(back) == quiver_to_json(a));
}

TEST_CASE("DOT output") {
    auto b3 = build_quotient(build_dynkin("B3"), {4, false});
    auto dot = quiver_to_dot(b3, {0});
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(dot.find("(1,2)") != std::string::npos);
    CHECK(dot.find("(2,1)") != std::string::npos);
    CHECK(dot.find("(1,1)") == std::string::npos);
    auto a = quiver_to_dot(build_quotient(build_dynkin("A4"), {3, false}));
    CHECK(a.find("(1,1)") == std::string::npos);
    CHECK(a.find("->") != std::string::npos);
}

TEST_CASE("ASCII grids bracket members and show every vertex once") {
    auto q = build_quotient(build_dynkin("A5"), {4, false});
    auto c = enumerate_configurations(q).front().members;
    auto text = render_quiver(q, c);
    std::size_t brackets = 0;
    for (char ch : text) brackets += ch == '[';
    CHECK(brackets == c.size());
    CHECK(std::count(text.begin(), text.end(), '\n') >= 5);

    auto dg = build_dynkin("A3");
    auto grid = render_grid(dg, 0, 4, [](const Slot& s) { return std::to_string(s.node); });
    CHECK(grid.find('0') != std::string::npos);
    CHECK(grid.find('2') != std::string::npos);
}

TEST_CASE("quiver names") {
    CHECK(quiver_name(build_quotient(build_dynkin("E6"), {5, true})) == "E6/tau5rho");
    CHECK(quiver_name(build_z_window(build_dynkin("A5"), 0, 3)) == "A5[0,3)");
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(quiver_from_json(json{{"kind", "nonsense"}}), Error);
    auto q = build_quotient(build_dynkin("A5"), {4, false});
    CHECK_THROWS_AS(configuration_from_json(q, json{{"members", {99}}}), Error);
}
