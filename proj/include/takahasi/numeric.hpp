// Subsemigroups of (N, +) and (Z, +), and the Z x Z chain S_1 ⊂ S_2 ⊂ ...
//
// Convention: a generated subsemigroup consists of the nonempty sums of its
// generators, so 0 is never a member of a subsemigroup of N.

#ifndef TAKAHASI_NUMERIC_HPP_
#define TAKAHASI_NUMERIC_HPP_

#include <algorithm>  // for sort, unique, all_of
#include <cstddef>    // for size_t
#include <cstdint>    // for int64_t
#include <cstdlib>    // for abs
#include <numeric>    // for gcd
#include <set>        // for set
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "exception.hpp"  // for TakahasiError

namespace takahasi {

  //! A finitely generated subsemigroup of (N, +).
  class NumSgp {
   public:
    explicit NumSgp(std::vector<std::int64_t> generators)
        : _generators(std::move(generators)) {
      if (_generators.empty()) {
        detail::fail("NumSgp needs at least one generator");
      }
      for (auto g : _generators) {
        if (g < 1) {
          detail::fail("NumSgp generators must be positive, got ", g);
        }
      }
      std::sort(_generators.begin(), _generators.end());
      _generators.erase(std::unique(_generators.begin(), _generators.end()),
                        _generators.end());
    }

    std::vector<std::int64_t> const& generators() const noexcept {
      return _generators;
    }

    //! gcd of the generators.
    std::int64_t gcd() const noexcept {
      std::int64_t d = 0;
      for (auto g : _generators) {
        d = std::gcd(d, g);
      }
      return d;
    }

    //! table[n] iff n in S, for 0 <= n <= limit.
    std::vector<bool> membership_table(std::int64_t limit) const {
      std::vector<bool> reach(static_cast<std::size_t>(limit) + 1, false);
      reach[0] = true;  // empty sum, cleared below
      for (std::int64_t n = 1; n <= limit; ++n) {
        for (auto g : _generators) {
          if (g > n) {
            break;
          }
          if (reach[n - g]) {
            reach[n] = true;
            break;
          }
        }
      }
      reach[0] = false;
      return reach;
    }

    bool operator==(NumSgp const&) const = default;

   private:
    std::vector<std::int64_t> _generators;
  };

  //! n is a nonempty sum of generators. Throws for n < 0.
  inline bool member(NumSgp const& s, std::int64_t n) {
    if (n < 0) {
      detail::fail("member: n must be non-negative, got ", n);
    }
    if (n == 0) {
      return false;
    }
    return s.membership_table(n)[n];
  }

  struct NumSgpProfile {
    std::int64_t              d = 0;  // d_S
    std::int64_t              p = 0;  // p_S
    std::vector<std::int64_t> minimal_generators;
  };

  //! d_S, p_S and the minimal generating set.
  //!
  //! Membership is tabulated until g_min / d consecutive multiples of d are
  //! members; every larger multiple is then a member (add g_min), so the
  //! last missing multiple seen determines p_S exactly.
  inline NumSgpProfile profile(NumSgp const& s) {
    auto const& gens  = s.generators();
    auto const  d     = s.gcd();
    auto const  run   = gens.front() / d;
    auto        limit = std::max<std::int64_t>(gens.back(), 64);
    while (true) {
      auto         table       = s.membership_table(limit);
      std::int64_t consecutive = 0;
      std::int64_t last_gap    = 0;  // 0 is always missing
      bool         done        = false;
      for (std::int64_t n = d; n <= limit; n += d) {
        if (table[n]) {
          if (++consecutive == run) {
            done = true;
            break;
          }
        } else {
          consecutive = 0;
          last_gap    = n;
        }
      }
      if (!done) {
        limit *= 2;
        continue;
      }
      NumSgpProfile result;
      result.d = d;
      result.p = last_gap + 1;
      for (auto g : gens) {
        bool decomposable = false;
        for (std::int64_t x = 1; x < g && !decomposable; ++x) {
          decomposable = table[x] && table[g - x];
        }
        if (!decomposable) {
          result.minimal_generators.push_back(g);
        }
      }
      return result;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsemigroups of Z
  ////////////////////////////////////////////////////////////////////////

  struct IntSgpClass {
    enum class Tag { nonneg, nonpos, full_group };
    Tag          tag = Tag::nonneg;
    std::int64_t d   = 0;  // meaningful for full_group: the set is Zd
    bool         operator==(IntSgpClass const&) const = default;
  };

  //! Positive generators only, negative only, or Zd with d the gcd of the
  //! absolute values. Throws if 0 is a generator.
  inline IntSgpClass classify_int(std::vector<std::int64_t> const& gens) {
    if (gens.empty()) {
      detail::fail("classify_int needs at least one generator");
    }
    bool         pos = false, neg = false;
    std::int64_t d = 0;
    for (auto g : gens) {
      if (g == 0) {
        detail::fail("classify_int: 0 is not allowed as a generator");
      }
      pos = pos || g > 0;
      neg = neg || g < 0;
      d   = std::gcd(d, std::abs(g));
    }
    if (pos && neg) {
      return {IntSgpClass::Tag::full_group, d};
    }
    return {pos ? IntSgpClass::Tag::nonneg : IntSgpClass::Tag::nonpos, 0};
  }

  ////////////////////////////////////////////////////////////////////////
  // Chains
  ////////////////////////////////////////////////////////////////////////

  struct NumChainReport {
    std::vector<std::int64_t> d;
    std::vector<std::int64_t> p;
    std::size_t               stabilization_index = 0;  // 1-based
    bool                      witnessed           = false;
  };

  inline bool contains(NumSgp const& big, NumSgp const& small) {
    auto const& gens  = small.generators();
    auto        table = big.membership_table(gens.back());
    return std::all_of(gens.begin(), gens.end(),
                       [&](std::int64_t g) { return bool(table[g]); });
  }

  //! The sequences d_n and p_n along an ascending chain, and the least
  //! 1-based p with S_p = S_{p+1} = ... = S_n. Throws at the first pair
  //! that is not ascending.
  inline NumChainReport chain_stabilization(std::vector<NumSgp> const& chain) {
    if (chain.empty()) {
      detail::fail("chain_stabilization: empty chain");
    }
    NumChainReport report;
    for (std::size_t n = 0; n < chain.size(); ++n) {
      if (n + 1 < chain.size() && !contains(chain[n + 1], chain[n])) {
        detail::fail("chain not ascending at pair (", n + 1, ",", n + 2, ")");
      }
      auto prof = profile(chain[n]);
      report.d.push_back(prof.d);
      report.p.push_back(prof.p);
    }
    std::size_t p = chain.size();
    while (p > 1 && contains(chain[p - 2], chain.back())) {
      --p;
    }
    report.stabilization_index = p;
    report.witnessed           = p < chain.size();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Z x Z
  ////////////////////////////////////////////////////////////////////////

  struct Vec2 {
    std::int64_t x = 0;
    std::int64_t y = 0;
    auto         operator<=>(Vec2 const&) const = default;
    Vec2         operator+(Vec2 const& v) const noexcept {
      return {x + v.x, y + v.y};
    }
    Vec2 operator-(Vec2 const& v) const noexcept {
      return {x - v.x, y - v.y};
    }
  };

  enum class Z2Membership { member, not_member, unknown };

  namespace detail {
    // Is x a sum of the given integers? Zero sums are allowed only when
    // allow_empty. Exact, via the classification of subsemigroups of Z.
    inline bool z_member(std::vector<std::int64_t> const& xs,
                         std::int64_t x,
                         bool         allow_empty) {
      if (x == 0 && allow_empty) {
        return true;
      }
      std::vector<std::int64_t> nonzero;
      bool                      has_zero = false;
      for (auto v : xs) {
        if (v == 0) {
          has_zero = true;
        } else {
          nonzero.push_back(v);
        }
      }
      if (x == 0 && has_zero) {
        return true;
      }
      if (nonzero.empty()) {
        return false;
      }
      auto cls = classify_int(nonzero);
      switch (cls.tag) {
        case IntSgpClass::Tag::full_group:
          return x % cls.d == 0;
        case IntSgpClass::Tag::nonneg:
          return x > 0 && member(NumSgp(nonzero), x);
        case IntSgpClass::Tag::nonpos: {
          for (auto& v : nonzero) {
            v = -v;
          }
          return x < 0 && member(NumSgp(nonzero), -x);
        }
      }
      return false;
    }

    // Graded case: every generator has y >= 0.
    inline bool z2_member_graded(std::vector<Vec2> const& gens, Vec2 target) {
      if (target.y < 0) {
        return false;
      }
      std::vector<Vec2>         positive;
      std::vector<std::int64_t> level;
      for (auto const& g : gens) {
        if (g.y > 0) {
          positive.push_back(g);
        } else {
          level.push_back(g.x);
        }
      }
      // Distribute target.y among the generators with positive second
      // coordinate; whatever remains must come from the level ones.
      bool found = false;
      auto rec   = [&](auto&& self, std::size_t i, Vec2 rest, bool used) {
        if (found) {
          return;
        }
        if (i == positive.size()) {
          if (rest.y == 0 && z_member(level, rest.x, used)) {
            found = true;
          }
          return;
        }
        for (std::int64_t k = 0; k * positive[i].y <= rest.y; ++k) {
          self(self,
               i + 1,
               Vec2{rest.x - k * positive[i].x, rest.y - k * positive[i].y},
               used || k > 0);
        }
      };
      rec(rec, 0, target, false);
      return found;
    }
  }  // namespace detail

  //! Membership of target in the subsemigroup of Z^2 generated by gens.
  //!
  //! When every generator has second coordinate >= 0 (or every one <= 0)
  //! the second coordinate grades the sums and the answer is exact. In
  //! general, sums of at most bound generators are searched and a miss is
  //! reported as unknown.
  inline Z2Membership z2_member(std::vector<Vec2> const& gens,
                                Vec2                     target,
                                std::size_t              bound) {
    if (gens.empty()) {
      detail::fail("z2_member needs at least one generator");
    }
    bool const up = std::all_of(gens.begin(), gens.end(),
                                [](Vec2 const& v) { return v.y >= 0; });
    bool const down = std::all_of(gens.begin(), gens.end(),
                                  [](Vec2 const& v) { return v.y <= 0; });
    if (up || down) {
      auto g = gens;
      if (!up) {
        for (auto& v : g) {
          v.y = -v.y;
        }
        target.y = -target.y;
      }
      return detail::z2_member_graded(g, target) ? Z2Membership::member
                                                 : Z2Membership::not_member;
    }
    std::set<Vec2> level(gens.begin(), gens.end());
    for (std::size_t k = 1; k <= bound; ++k) {
      if (level.count(target) != 0) {
        return Z2Membership::member;
      }
      if (k == bound) {
        break;
      }
      std::set<Vec2> next;
      for (auto const& v : level) {
        for (auto const& g : gens) {
          next.insert(v + g);
        }
      }
      level = std::move(next);
    }
    return Z2Membership::unknown;
  }

  //! Generators (-2, 0) and (2n - 1, 1) of S_n, i.e. a^-2 and a^{2n-1} b.
  inline std::vector<Vec2> notts_generators(std::int64_t n) {
    return {{-2, 0}, {2 * n - 1, 1}};
  }

  struct NottsStep {
    std::int64_t n         = 0;
    bool         contained = false;  // S_n ⊆ S_{n+1}
    bool         excluded  = false;  // (2n + 1, 1) ∉ S_n
  };

  struct NottsReport {
    std::vector<NottsStep> steps;
    bool                   all_strict = false;
  };

  //! Verifies S_n ⊊ S_{n+1} for 1 <= n < n_max.
  inline NottsReport notts_chain(std::int64_t n_max) {
    if (n_max < 2) {
      detail::fail("notts_chain: n_max must be at least 2");
    }
    NottsReport report;
    report.all_strict = true;
    for (std::int64_t n = 1; n < n_max; ++n) {
      auto const here = notts_generators(n);
      auto const next = notts_generators(n + 1);
      NottsStep  step{n, true, false};
      for (auto const& g : here) {
        step.contained = step.contained
                         && z2_member(next, g, 4) == Z2Membership::member;
      }
      step.excluded = z2_member(here, {2 * n + 1, 1}, 4 * n + 8)
                      == Z2Membership::not_member;
      report.all_strict = report.all_strict && step.contained && step.excluded;
      report.steps.push_back(step);
    }
    return report;
  }

}  // namespace takahasi

#endif  // TAKAHASI_NUMERIC_HPP_
