#include <catch_amalgamated.hpp>

#include <cstddef>  // for size_t
#include <numeric>  // for iota
#include <set>      // for set
#include <vector>   // for vector

#include "oracles.hpp"
#include "takahasi/clifford.hpp"

namespace takahasi {

  namespace {
    std::vector<element_type> identity_map(std::size_t n) {
      std::vector<element_type> m(n);
      std::iota(m.begin(), m.end(), 0);
      return m;
    }

    // Y = {0 < 1}, both groups Z/2, identity link.
    SemilatticeOfGroups two_level_z2() {
      return chain_of_groups({FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)},
                             {identity_map(2)});
    }

    std::vector<CliffordElement> level(SemilatticeOfGroups const& s,
                                       std::size_t                a) {
      std::vector<CliffordElement> out;
      for (element_type g = 0; g < s.group(a).order(); ++g) {
        out.push_back({a, g});
      }
      return out;
    }

    // Independent Green index for a subgroup T of a group S: the sets
    // xT ∩ Tx for x outside T, plus one.
    std::size_t coset_meets(FiniteGroup const& g, Subgroup const& t) {
      std::set<std::set<element_type>> classes;
      for (element_type x = 0; x < g.order(); ++x) {
        if (t.contains(x)) {
          continue;
        }
        std::set<element_type> left, both;
        for (auto y : t.elements()) {
          left.insert(g.product(x, y));
        }
        for (auto y : t.elements()) {
          if (left.count(g.product(y, x)) != 0) {
            both.insert(g.product(y, x));
          }
        }
        classes.insert(both);
      }
      return classes.size() + 1;
    }

    bool is_normal(FiniteGroup const& g, Subgroup const& t) {
      for (element_type x = 0; x < g.order(); ++x) {
        for (auto y : t.elements()) {
          if (!t.contains(g.product(g.product(g.inverse(x), y), x))) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  TEST_CASE("structure validation", "[clifford]") {
    auto c2 = FiniteGroup::cyclic(2), c4 = FiniteGroup::cyclic(4);
    // Not a homomorphism C4 -> C2.
    REQUIRE_THROWS_AS(chain_of_groups({c2, c4}, {{0, 1, 0, 0}}),
                      TakahasiError);
    // Not a semilattice.
    REQUIRE_THROWS_AS(SemilatticeOfGroups({{0, 1}, {0, 1}}, {c2, c2}, {}),
                      TakahasiError);
    // Missing link.
    REQUIRE_THROWS_AS(SemilatticeOfGroups({{0, 0}, {0, 1}}, {c2, c2}, {}),
                      TakahasiError);
    // Links that do not compose.
    table_type chain3 = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
    REQUIRE_THROWS_AS(
        SemilatticeOfGroups(chain3,
                            {c2, c2, c2},
                            {{2, 1, identity_map(2)},
                             {1, 0, identity_map(2)},
                             {2, 0, {0, 0}}}),
        TakahasiError);
    SemilatticeOfGroups ok(chain3,
                           {c2, c2, c2},
                           {{2, 1, identity_map(2)}, {1, 0, {0, 0}}});
    REQUIRE(ok.link(2, 0) == std::vector<element_type>{0, 0});
    REQUIRE(ok.size() == 6);
  }

  TEST_CASE("multiply examples", "[clifford]") {
    auto c3 = FiniteGroup::cyclic(3), c6 = FiniteGroup::cyclic(6);
    // Bottom C3, top C6, link g ↦ g mod 3.
    auto s = chain_of_groups({c3, c6}, {{0, 1, 2, 0, 1, 2}});
    REQUIRE(s.multiply({1, 2}, {1, 3}) == CliffordElement{1, 5});
    REQUIRE(s.multiply({1, 4}, {0, 1}) == CliffordElement{0, 2});
    REQUIRE(s.multiply({0, 1}, {1, 4}) == CliffordElement{0, 2});

    auto z2 = two_level_z2();
    REQUIRE(z2.multiply({1, 0}, {0, 1}) == CliffordElement{0, 1});
  }

  TEST_CASE("semigroup laws and Green's relations", "[clifford][property]") {
    SplitMix64 rng(3);
    for (int n = 0; n < 20; ++n) {
      auto s = random_clifford(rng, 2 + n % 2, 6);
      auto t = s.table();
      for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = 0; y < s.size(); ++y) {
          for (std::size_t z = 0; z < s.size(); ++z) {
            REQUIRE(t[t[x][y]][z] == t[x][t[y][z]]);
          }
        }
      }
      for (std::size_t a = 0; a < s.semilattice_size(); ++a) {
        auto e = s.index(s.identity(a));
        REQUIRE(t[e][e] == e);
        for (std::size_t x = 0; x < s.size(); ++x) {
          REQUIRE(t[e][x] == t[x][e]);
        }
      }
      auto h = oracle::green_h_classes(t);
      auto j = oracle::green_j_classes(t);
      for (std::size_t x = 0; x < s.size(); ++x) {
        for (std::size_t y = 0; y < s.size(); ++y) {
          REQUIRE((h[x] == h[y]) == (j[x] == j[y]));
          REQUIRE((h[x] == h[y])
                  == (s.element(x).alpha == s.element(y).alpha));
        }
      }
    }
  }

  TEST_CASE("closure examples", "[clifford]") {
    auto s = two_level_z2();
    REQUIRE(closure(s, {{1, 0}}).size() == 1);
    REQUIRE(closure(s, {{1, 1}})
            == std::vector<CliffordElement>{{1, 0}, {1, 1}});
    auto mixed = closure(s, {{1, 1}, {0, 0}});
    REQUIRE(mixed.size() == 4);
    REQUIRE_THROWS_AS(closure(s, {}), TakahasiError);
  }

  TEST_CASE("index examples", "[clifford]") {
    auto s = two_level_z2();
    auto r = index(s, s.elements());
    REQUIRE(r.class_indices == std::vector<std::size_t>{1, 1});
    REQUIRE(r.sup == 1);

    r = index(s, level(s, 1));
    REQUIRE(r.class_indices == std::vector<std::size_t>{2, 1});
    REQUIRE(r.sup == 2);
    REQUIRE_FALSE(r.infinite);

    auto s3 = chain_of_groups({FiniteGroup::symmetric(3), FiniteGroup::cyclic(1)},
                              {{0}});
    r = index(s3, level(s3, 1));
    REQUIRE(r.class_indices[0] == 6);

    REQUIRE_THROWS_AS(index(s, {{1, 1}}), TakahasiError);
  }

  TEST_CASE("green_index examples", "[clifford]") {
    auto s = two_level_z2();
    REQUIRE(green_index(s, s.elements()).green_index == 1);
    REQUIRE(green_index(s, level(s, 1)).green_index == 2);

    // In a single group the H^T-classes outside T are the sets xT ∩ Tx,
    // which are cosets exactly when T is normal.
    std::size_t non_normal = 0;
    for (auto name : {"C6", "S3", "C2xC2", "D4", "C8"}) {
      auto g = FiniteGroup::from_name(name);
      auto s1 = chain_of_groups({g}, {});
      for (element_type x = 0; x < g.order(); ++x) {
        auto                         h = closure(g, {x});
        std::vector<CliffordElement> t;
        for (auto y : h.elements()) {
          t.push_back({0, y});
        }
        auto gi = green_index(s1, t).green_index;
        REQUIRE(gi == coset_meets(g, h));
        REQUIRE(index(s1, t).sup == takahasi::index(g, h));
        if (is_normal(g, h)) {
          REQUIRE(gi == takahasi::index(g, h));
        } else {
          REQUIRE(gi > takahasi::index(g, h));
          ++non_normal;
        }
      }
    }
    REQUIRE(non_normal > 0);
  }

  TEST_CASE("retraction_check examples", "[clifford]") {
    auto s = two_level_z2();
    auto r = retraction_check(s, level(s, 1), 1);
    REQUIRE(r.rk_g == r.rk_c);
    REQUIRE(r.holds);
    REQUIRE_FALSE(r.onto_with_zero);

    r = retraction_check(s, s.elements(), 0);
    REQUIRE(r.rk_g == 1);
    REQUIRE(r.rk_c == 2);
    REQUIRE(r.holds);

    r = retraction_check(s, s.elements(), 1);
    REQUIRE(r.onto_with_zero);
    REQUIRE(r.holds);

    REQUIRE_THROWS_AS(retraction_check(s, level(s, 1), 0), TakahasiError);
  }

  TEST_CASE("index inequalities on random instances", "[clifford][property]") {
    SplitMix64 rng(17);
    for (int n = 0; n < 40; ++n) {
      auto s = random_clifford(rng, 2 + n % 2);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<CliffordElement> a(rng.between(1, 2));
        for (auto& x : a) {
          x = s.element(rng.below(s.size()));
        }
        auto t  = closure(s, a);
        auto gr = green_index(s, t);
        REQUIRE(gr.green_index <= gr.num_classes);
        REQUIRE(index(s, t).sup >= 1);
        REQUIRE(rk_c(s, t) <= a.size());
        for (std::size_t alpha = 0; alpha < s.semilattice_size(); ++alpha) {
          bool meets = false;
          for (auto const& x : t) {
            meets = meets || x.alpha == alpha;
          }
          if (meets) {
            REQUIRE(retraction_check(s, t, alpha).holds);
          }
        }
      }
    }
  }

  TEST_CASE("fix, per and the image chain", "[clifford]") {
    auto          s = two_level_z2();
    self_map_type id(s.size());
    std::iota(id.begin(), id.end(), 0);
    REQUIRE(fix(s, id).fixed.size() == s.size());
    REQUIRE(per(s, id).R == 1);
    REQUIRE(per(s, id).k == 1);

    // Collapse everything onto the bottom class along the links.
    auto c3 = FiniteGroup::cyclic(3), c6 = FiniteGroup::cyclic(6);
    auto t  = chain_of_groups({c3, c6}, {{0, 1, 2, 0, 1, 2}});
    self_map_type down(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) {
      auto e  = t.element(x);
      down[x] = t.index({0, t.link(e.alpha, 0)[e.g]});
    }
    auto f = fix(t, down);
    REQUIRE(f.fixed == level(t, 0));
    REQUIRE(f.by_class.size() == 1);
    auto p = per(t, down);
    REQUIRE(p.periodic == level(t, 0));
    REQUIRE(p.k <= t.size());
    REQUIRE(image_chain(t, down)
            == std::vector<std::vector<std::size_t>>{{0, 1}, {0}});

    // Inversion on an abelian top class composed with the collapse is an
    // endomorphism of order 2 on the bottom.
    self_map_type neg(t.size());
    for (std::size_t x = 0; x < t.size(); ++x) {
      auto e = t.element(x);
      neg[x] = t.index(t.inverse(e));
    }
    auto pn = per(t, neg);
    REQUIRE(pn.periodic.size() == t.size());
    REQUIRE(pn.R == 2);

    self_map_type bad = id;
    std::swap(bad[0], bad[2]);
    REQUIRE_THROWS_WITH(fix(s, bad),
                        Catch::Matchers::ContainsSubstring("pair"));
  }

}  // namespace takahasi
