#include <catch_amalgamated.hpp>

#include <string>  // for string

#include "takahasi/io.hpp"

namespace takahasi {

  TEST_CASE("automaton round trip", "[io]") {
    auto j = json::parse(R"({"alphabet": ["a", "b"], "vertices": 2,
                             "base": 0, "terminals": [1],
                             "edges": [[0, "a", 1], [1, "b'", 0]]})");
    auto [alphabet, a] = automaton_from_json(j);
    REQUIRE(a.number_of_vertices() == 2);
    REQUIRE(a.number_of_edges() == 2);
    REQUIRE(a.terminals() == std::vector<vertex_type>{1});
    auto k = to_json(a, alphabet);
    REQUIRE(k["edges"][1][1] == "b'");
    auto [alphabet2, b] = automaton_from_json(k);
    REQUIRE(b.edges() == a.edges());
    REQUIRE(alphabet2 == alphabet);

    j["edges"][0] = json::array({0, "c", 1});
    REQUIRE_THROWS_AS(automaton_from_json(j), TakahasiError);
    REQUIRE_THROWS_AS(automaton_from_json(json::parse(R"({"edges": []})")),
                      TakahasiError);
  }

  TEST_CASE("group, Rees and Clifford round trips", "[io]") {
    auto g = FiniteGroup::from_name("S3");
    REQUIRE(group_from_json(to_json(g)) == g);
    REQUIRE(group_from_json(json("C2xC2")).order() == 4);
    REQUIRE_THROWS_AS(group_from_json(json::parse(R"({"table": [[0, 1]]})")),
                      TakahasiError);
    REQUIRE_THROWS_AS(
        group_from_json(json::parse(R"({"order": 3, "table": [[0]]})")),
        TakahasiError);

    ReesStructure s(FiniteGroup::cyclic(3), 2, 2, {{0, 0}, {0, 1}});
    auto          t = rees_from_json(to_json(s));
    REQUIRE(t.table() == s.table());
    REQUIRE(to_json(t)["P"] == json::parse("[[0, 0], [0, 1]]"));

    auto c = chain_of_groups(
        {FiniteGroup::cyclic(1), FiniteGroup::cyclic(2),
         FiniteGroup::cyclic(4)},
        {{0, 0}, {0, 1, 0, 1}});
    auto cj = to_json(c);
    REQUIRE(cj["links"].size() == 3);
    auto d = clifford_from_json(cj);
    REQUIRE(d.table() == c.table());
    cj["links"][0]["map"] = json::array({0, 1, 1, 0});
    REQUIRE_THROWS_AS(clifford_from_json(cj), TakahasiError);
  }

  TEST_CASE("presentation and endomorphism round trips", "[io]") {
    auto p = BalancedPresentation::parse("semigroup a b c ; cac = cbc");
    auto j = to_json(p);
    REQUIRE(j["flavor"] == "semigroup");
    REQUIRE(j["relations"][0][1] == "cbc");
    auto q = presentation_from_json(j);
    REQUIRE(q.str() == p.str());
    REQUIRE(presentation_from_json(json(p.str())).str() == p.str());
    j["flavor"] = "group";
    REQUIRE_THROWS_AS(presentation_from_json(j), TakahasiError);

    auto phi = parse_endo(p, "a -> b ; b -> a");
    auto ej  = to_json(p, phi);
    REQUIRE(ej == json::parse(R"({"a": "b", "b": "a", "c": "c"})"));
    REQUIRE(endo_from_json(p, ej).images() == phi.images());
    REQUIRE(endo_from_json(p, json("a -> b ; b -> a")).images()
            == phi.images());
    REQUIRE_THROWS_AS(endo_from_json(p, json::parse(R"({"c": "a"})")),
                      TakahasiError);
  }

  TEST_CASE("reports", "[io]") {
    auto r = to_json(profile(NumSgp({3, 5})));
    REQUIRE(r["d"] == 1);
    REQUIRE(r["p"] == 8);

    auto p   = BalancedPresentation::parse("monoid a b ; ab = ba");
    auto phi = parse_endo(p, "a -> b ; b -> a");
    auto f   = to_json(p, fix_up_to(p, phi, 4));
    REQUIRE(f["fixed"] == json::parse(R"(["ab", "aabb"])"));
    REQUIRE(f["rank_at_length"] == 1);
    ClassTable t(p, 4);
    auto       pr = to_json(p, per_up_to(p, t, phi));
    REQUIRE(pr["k"] == 2);
    REQUIRE(pr["R"] == 2);
    REQUIRE(pr["orbits"][0]["p"] == 2);
    REQUIRE(to_json(exth_check(2))["all_pass"] == true);
  }

}  // namespace takahasi
