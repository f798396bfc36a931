#include <catch_amalgamated.hpp>

#include <cstddef>  // for size_t
#include <regex>    // for regex, regex_match
#include <string>   // for string

#include "oracles.hpp"
#include "takahasi/presentations.hpp"
#include "takahasi/rewriting.hpp"

namespace takahasi {

  namespace {
    word_type w(char const* s) {
      return Alphabet::letters(2).parse(s);
    }

    std::string letters(word_type const& u) {
      std::string out;
      for (auto x : u) {
        out += static_cast<char>('a' + x);
      }
      return out;
    }
  }  // namespace

  TEST_CASE("rule validation", "[rewriting]") {
    REQUIRE_THROWS_AS(RewriteSystem({{w("aa"), w("bb")}}), TakahasiError);
    REQUIRE_THROWS_AS(RewriteSystem({{w("ab"), w("a")}}), TakahasiError);
    REQUIRE_THROWS_AS(RewriteSystem({{w("ab"), w("ab")}}), TakahasiError);
    REQUIRE_THROWS_AS(RewriteSystem(std::vector<Rule>{Rule{}}), TakahasiError);
    REQUIRE_NOTHROW(RewriteSystem({{w("ba"), w("ab")}}));
  }

  TEST_CASE("a^2 = b^2 normal forms", "[rewriting]") {
    auto r = RewriteSystem::a2_equals_b2();
    REQUIRE(r.normal_form(w("bbb")) == w("aab"));
    REQUIRE(r.normal_form(w("bbaa")) == w("aaaa"));
    REQUIRE(r.normal_form(w("abab")) == w("abab"));
    REQUIRE(r.normal_form(w("ba")) == w("ba"));
    REQUIRE(r.is_normal_form(w("aabab")));
    REQUIRE_FALSE(r.is_normal_form(w("abb")));
  }

  TEST_CASE("a^2 = b^2 critical pairs", "[rewriting]") {
    auto report = RewriteSystem::a2_equals_b2().check_local_confluence();
    REQUIRE(report.confluent);
    REQUIRE(report.pairs.size() == 2);
    REQUIRE(report.pairs[0].overlap == w("bbb"));
    REQUIRE(report.pairs[0].left_normal_form == w("aab"));
    REQUIRE(report.pairs[1].overlap == w("bbaa"));
    REQUIRE(report.pairs[1].right_normal_form == w("aaaa"));

    RewriteSystem bad({{w("bab"), w("aaa")}});
    auto          r2 = bad.check_local_confluence();
    REQUIRE_FALSE(r2.confluent);
    REQUIRE(r2.pairs.size() == 1);
    REQUIRE(r2.pairs[0].left_normal_form == w("aaaab"));
    REQUIRE(r2.pairs[0].right_normal_form == w("baaaa"));
  }

  TEST_CASE("normal forms lie in a*(ba)*(1 + b)", "[rewriting][property]") {
    auto             r = RewriteSystem::a2_equals_b2();
    std::regex const pattern("^a*(ba)*b?$");
    auto             p  = BalancedPresentation::parse("monoid a b ; aa = bb");
    ClassTable       table(p, 10);
    for (std::size_t len = 0; len <= 10; ++len) {
      oracle::for_each_word(2, len, [&](word_type const& u) {
        auto nf = r.normal_form(u);
        if (len <= 8) {
          REQUIRE(std::regex_match(letters(nf), pattern));
        }
        REQUIRE(r.is_normal_form(nf));
        REQUIRE(nf == table.representative(table.class_of(u)));
      });
    }
  }

}  // namespace takahasi
