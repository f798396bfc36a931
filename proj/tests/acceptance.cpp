// Acceptance suite: one PASS/FAIL line per criterion. Library results are
// compared against the brute-force oracles in oracles.hpp wherever one
// exists. The exit status is nonzero if any criterion fails for a reason
// other than a documented mathematical counterexample.

#include <algorithm>   // for sort, all_of
#include <chrono>      // for steady_clock
#include <cstddef>     // for size_t
#include <cstdint>     // for int64_t, uint64_t
#include <cstdio>      // for printf
#include <functional>  // for function
#include <map>         // for map
#include <numeric>     // for iota
#include <optional>    // for optional
#include <regex>       // for regex_match
#include <set>         // for set
#include <string>      // for string, to_string
#include <utility>     // for pair
#include <vector>      // for vector

#include "takahasi/clifford.hpp"
#include "takahasi/experiments.hpp"
#include "takahasi/groups.hpp"
#include "takahasi/numeric.hpp"
#include "takahasi/presentations.hpp"
#include "takahasi/random.hpp"
#include "takahasi/rees.hpp"
#include "takahasi/rewriting.hpp"
#include "takahasi/stallings.hpp"
#include "takahasi/words.hpp"

#include "oracles.hpp"

using namespace takahasi;

namespace {

  constexpr std::uint64_t seed = 1;

  struct Outcome {
    bool                       pass      = true;
    std::size_t                instances = 0;
    std::string                note;
    std::optional<std::string> counterexample;
    //! Set when the only failure is a proven counterexample to the
    //! criterion as stated; every other part must still pass.
    std::optional<std::string> unattainable;

    void fail(std::string what) {
      if (pass) {
        counterexample = std::move(what);
      }
      pass = false;
    }
  };

  struct Criterion {
    int                      id;
    std::string              title;
    double                   budget;  // seconds
    std::function<Outcome()> run;
  };

  std::string letters(word_type const& w) {
    std::string s;
    for (auto x : w) {
      s += static_cast<char>('a' + x);
    }
    return s.empty() ? "1" : s;
  }

  //! Calls f on each k-subset of {0, ..., n - 1}; stops when f is true.
  template <typename F>
  bool some_subset(std::size_t n, std::size_t k, F&& f) {
    if (k > n) {
      return false;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (f(idx)) {
        return true;
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) {
        --i;
      }
      if (i == 0) {
        return false;
      }
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) {
        idx[j] = idx[j - 1] + 1;
      }
    }
  }

  //! Closure of gens under a binary operation on a finite set.
  template <typename T, typename Mul>
  std::set<T> naive_closure(std::vector<T> const& gens, Mul&& mul) {
    std::set<T>    found(gens.begin(), gens.end());
    std::vector<T> queue(found.begin(), found.end());
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (auto const& z : {mul(queue[i], queue[j]), mul(queue[j], queue[i])}) {
          if (found.insert(z).second) {
            queue.push_back(z);
          }
        }
      }
    }
    return found;
  }

  //! Least size of a subset of the finite set whole generating it under
  //! mul (finite, so products alone give inverses). Size 0 generates only
  //! the trivial set {unit} when unit is given.
  template <typename T, typename Mul>
  std::size_t naive_rank(std::set<T> const&      whole,
                         Mul&&                   mul,
                         std::optional<T> const& unit = std::nullopt) {
    if (unit && whole == std::set<T>{*unit}) {
      return 0;
    }
    std::vector<T> pool(whole.begin(), whole.end());
    for (std::size_t k = 1;; ++k) {
      bool found = some_subset(pool.size(), k, [&](auto const& idx) {
        std::vector<T> gens;
        for (auto i : idx) {
          gens.push_back(pool[i]);
        }
        return naive_closure(gens, mul) == whole;
      });
      if (found) {
        return k;
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 1. Stallings rank against Nielsen reduction
  ////////////////////////////////////////////////////////////////////////

  Outcome stallings_rank() {
    Outcome out;
    auto    alphabet = Alphabet::letters(2, true);
    // Reduced words of length 1..5, one from each pair {w, w^-1}: a set
    // of generators and its inverses generate the same subgroup.
    std::vector<word_type> words, frontier{{}};
    for (std::size_t len = 1; len <= 5; ++len) {
      std::vector<word_type> next;
      for (auto const& w : frontier) {
        for (letter_type x = 0; x < 4; ++x) {
          if (w.empty() || x != (w.back() ^ 1U)) {
            auto v = w;
            v.push_back(x);
            next.push_back(std::move(v));
          }
        }
      }
      frontier = std::move(next);
      for (auto const& w : frontier) {
        if (w < oracle::inverse(w)) {
          words.push_back(w);
        }
      }
    }
    auto check = [&](std::vector<word_type> const& gens) {
      ++out.instances;
      auto        g       = subgroup(2, gens);
      auto const& a       = g.automaton();
      auto        formula = static_cast<std::int64_t>(a.number_of_edges() / 2)
                     - static_cast<std::int64_t>(a.number_of_vertices()) + 1;
      auto nielsen
          = static_cast<std::int64_t>(oracle::nielsen_basis(gens).size());
      if (formula != nielsen || static_cast<std::int64_t>(g.rank()) != nielsen) {
        std::string s;
        for (auto const& w : gens) {
          s += (s.empty() ? "" : ", ") + alphabet.print(w);
        }
        out.fail("⟨" + s + "⟩: formula " + std::to_string(formula)
                 + ", Nielsen " + std::to_string(nielsen));
      }
    };
    std::size_t const n = words.size();
    for (std::size_t i = 0; i < n; ++i) {
      check({words[i]});
      for (std::size_t j = i + 1; j < n; ++j) {
        check({words[i], words[j]});
        for (std::size_t l = j + 1; l < n; ++l) {
          check({words[i], words[j], words[l]});
        }
      }
    }
    out.note = std::to_string(n) + " words up to inversion";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. Automaton rank bound
  ////////////////////////////////////////////////////////////////////////

  Outcome ragr_bound_sweep() {
    Outcome        out;
    SplitMix64     rng(seed);
    std::int64_t   tight = 0;
    while (out.instances < 500) {
      auto t = trim(random_automaton(rng, 6, 2, 10));
      if (t.degenerate) {
        continue;
      }
      ++out.instances;
      auto const&           a = t.automaton;
      std::set<vertex_type> marked(a.terminals().begin(), a.terminals().end());
      marked.insert(a.base());
      auto bound = static_cast<std::int64_t>(a.number_of_edges())
                   - static_cast<std::int64_t>(a.number_of_vertices())
                   + static_cast<std::int64_t>(marked.size());
      auto r    = pipeline(a);
      auto rank = static_cast<std::int64_t>(r.stallings.rank());
      auto where = "instance " + std::to_string(out.instances);
      tight += rank == bound;
      if (rank > bound) {
        out.fail(where + ": rank " + std::to_string(rank) + " > bound "
                 + std::to_string(bound));
      }
      if (r.merged.terminals() != std::vector<vertex_type>{r.merged.base()}
          || !r.dualized.is_dual() || !r.folded.is_inverse()
          || !r.stallings.automaton().is_stallings()) {
        out.fail(where + ": a pipeline stage lacks its property");
      }
      auto nielsen = oracle::nielsen_basis(basis(r.stallings)).size();
      if (static_cast<std::int64_t>(nielsen) != rank) {
        out.fail(where + ": basis has Nielsen rank " + std::to_string(nielsen));
      }
    }
    out.note = "bound attained on " + std::to_string(tight);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. Fold order
  ////////////////////////////////////////////////////////////////////////

  Outcome fold_order() {
    Outcome    out;
    SplitMix64 rng(seed);
    for (; out.instances < 100; ++out.instances) {
      auto a  = random_dual_automaton(rng, 6, 2, 4);
      auto f0 = fold(a);
      auto f1 = canonical_form(fold(a, rng()));
      auto f2 = canonical_form(fold(a, rng()));
      if (!f0.is_deterministic() || !(f1 == f2)
          || !(canonical_form(f0) == f1)) {
        out.fail("instance " + std::to_string(out.instances));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. d_S and p_S against the segment oracle
  ////////////////////////////////////////////////////////////////////////

  Outcome numeric_invariants() {
    Outcome out;
    auto    check = [&](std::vector<std::int64_t> const& gens) {
      ++out.instances;
      auto pr = profile(NumSgp(gens));
      auto o  = oracle::segment_oracle(gens, 400);
      if (pr.d != o.d || pr.p != o.p) {
        out.fail(json(gens).dump() + ": library (" + std::to_string(pr.d)
                 + ", " + std::to_string(pr.p) + "), oracle ("
                 + std::to_string(o.d) + ", " + std::to_string(o.p) + ")");
      }
    };
    for (std::int64_t x = 2; x <= 12; ++x) {
      check({x});
      for (std::int64_t y = x + 1; y <= 12; ++y) {
        check({x, y});
        for (std::int64_t z = y + 1; z <= 12; ++z) {
          check({x, y, z});
        }
      }
    }
    auto p35 = profile(NumSgp({3, 5}));
    auto o35 = oracle::segment_oracle({3, 5}, 400);
    if (p35.d != 1 || p35.p != 8 || o35.d != 1 || o35.p != 8) {
      out.fail("⟨3,5⟩ does not give (d, p) = (1, 8)");
    }
    out.note = "⟨3,5⟩ gives d=1 p=8";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. The strict chain in Z x Z
  ////////////////////////////////////////////////////////////////////////

  Outcome notts() {
    Outcome out;
    // (x, y) ∈ S_m iff (x, y) = j(-2, 0) + y(2m - 1, 1) with j, y >= 0 and
    // j + y > 0.
    auto member = [](std::int64_t m, std::int64_t x, std::int64_t y) {
      if (y < 0) {
        return false;
      }
      for (std::int64_t j = 0; j <= std::abs(x) + 2 * m * y + 2; ++j) {
        if (j + y > 0 && y * (2 * m - 1) - 2 * j == x) {
          return true;
        }
      }
      return false;
    };
    auto report = notts_chain(25);
    if (report.steps.size() != 24 || !report.all_strict) {
      out.fail("library chain is not strict");
    }
    for (std::int64_t n = 1; n <= 25; ++n) {
      ++out.instances;
      bool excluded = !member(n, 2 * n + 1, 1);
      if (!excluded
          || z2_member(notts_generators(n), {2 * n + 1, 1}, 64)
                 != Z2Membership::not_member) {
        out.fail("(2n+1, 1) ∈ S_n for n = " + std::to_string(n));
      }
      if (n < 25) {
        bool contained = member(n + 1, -2, 0) && member(n + 1, 2 * n - 1, 1);
        auto const& step = report.steps[n - 1];
        if (!contained || !step.contained || !step.excluded) {
          out.fail("S_n ⊄ S_{n+1} for n = " + std::to_string(n));
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Rees components
  ////////////////////////////////////////////////////////////////////////

  Outcome rees_bound() {
    Outcome     out;
    SplitMix64  rng(seed);
    std::size_t max_cs = 0, max_g = 0;
    for (auto name : {"C2", "C3", "C4", "C2xC2", "S3", "C6"}) {
      auto g = FiniteGroup::from_name(name);
      for (std::size_t ni = 1; ni <= 2; ++ni) {
        for (std::size_t nl = 1; nl <= 2; ++nl) {
          for (std::size_t m = 0; m < 20; ++m) {
            table_type p(nl, std::vector<element_type>(ni));
            for (auto& row : p) {
              for (auto& x : row) {
                x = rng.below(g.order());
              }
            }
            ReesStructure s(g, ni, nl, p);
            auto          mul = [&](ReesElement const& x, ReesElement const& y) {
              return ReesElement{
                  x.i, g.product(g.product(x.g, p[x.lambda][y.i]), y.g),
                  y.lambda};
            };
            for (std::size_t trial = 0; trial < 2; ++trial) {
              std::vector<ReesElement> a(rng.below(2) + 1);
              for (auto& x : a) {
                x = {rng.below(ni), rng.below(g.order()), rng.below(nl)};
              }
              auto where = std::string(name) + " P=" + json(p).dump()
                           + " A=" + detail::print_rees(a);
              auto t_oracle = naive_closure(a, mul);
              auto t        = closure(s, a);
              if (std::vector<ReesElement>(t_oracle.begin(), t_oracle.end())
                  != t.elements) {
                out.fail("closure differs for " + where);
                continue;
              }
              auto rk_cs = naive_rank(t_oracle, mul);
              max_cs     = std::max(max_cs, rk_cs);
              std::set<std::pair<std::size_t, std::size_t>> cells;
              for (auto const& x : t_oracle) {
                cells.emplace(x.i, x.lambda);
              }
              // T meets every cell of I_T × Λ_T.
              for (auto i : t.i_set) {
                for (auto l : t.lambda_set) {
                  ++out.instances;
                  auto here = where + " (i,λ)=(" + std::to_string(i) + ","
                              + std::to_string(l) + ")";
                  std::set<element_type> image;
                  for (auto const& x : t_oracle) {
                    if (x.i == i && x.lambda == l) {
                      image.insert(g.product(x.g, p[l][i]));
                    }
                  }
                  auto gmul = [&](element_type x, element_type y) {
                    return g.product(x, y);
                  };
                  auto rk_g = naive_rank(image, gmul,
                                         std::optional(g.identity()));
                  max_g     = std::max(max_g, rk_g);
                  auto b    = rank_bound_check(s, a, i, l);
                  auto lib  = component_iso(s, t, i, l).elements();
                  auto lang = language(s, build_g_automaton(s, a, i, l));
                  if (cells.count({i, l}) == 0
                      || std::vector<element_type>(image.begin(), image.end())
                             != lib) {
                    out.fail("component image differs for " + here);
                  } else if (b.rk_cs != rk_cs || b.rk_component != rk_g) {
                    out.fail("ranks differ from the oracle for " + here);
                  } else if (rk_g > rk_cs * rk_cs + 1 || !b.bound_holds) {
                    out.fail("bound fails for " + here);
                  } else if (lang.elements() != lib) {
                    out.fail("automaton language differs for " + here);
                  }
                }
              }
            }
          }
        }
      }
    }
    out.note = "max rk_CS " + std::to_string(max_cs) + ", max rk_G "
               + std::to_string(max_g);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 7 and 8. Clifford semigroups
  ////////////////////////////////////////////////////////////////////////

  struct CliffordCase {
    SemilatticeOfGroups          s;
    std::vector<CliffordElement> gens;
    std::string                  name;
  };

  std::vector<CliffordCase> clifford_cases() {
    std::vector<CliffordCase> cases;
    SplitMix64                rng(seed);
    for (std::size_t n = 0; n < 50; ++n) {
      auto s = random_clifford(rng, 2 + n % 2);
      for (std::size_t trial = 0; trial < 4; ++trial) {
        std::vector<CliffordElement> a(rng.below(2) + 1);
        for (auto& x : a) {
          x = s.element(rng.below(s.size()));
        }
        cases.push_back({s, a, "semilattice " + std::to_string(n) + " trial "
                                   + std::to_string(trial)});
      }
    }
    return cases;
  }

  CliffordElement clifford_mul(SemilatticeOfGroups const& s,
                               CliffordElement const&     x,
                               CliffordElement const&     y) {
    auto m  = s.meet(x.alpha, y.alpha);
    auto gx = m == x.alpha ? x.g : s.link(x.alpha, m)[x.g];
    auto gy = m == y.alpha ? y.g : s.link(y.alpha, m)[y.g];
    return {m, s.group(m).product(gx, gy)};
  }

  struct GreenOracle {
    std::size_t green_index = 1;
    std::size_t num_classes = 0;
  };

  //! H^T-classes from the sets T¹a and aT¹, computed element by element.
  GreenOracle green_oracle(SemilatticeOfGroups const&         s,
                           std::set<CliffordElement> const& t) {
    using key_type = std::pair<std::set<CliffordElement>,
                               std::set<CliffordElement>>;
    std::map<key_type, bool> classes;  // class -> lies outside T
    for (auto const& a : s.elements()) {
      key_type key{{a}, {a}};
      for (auto const& x : t) {
        key.first.insert(clifford_mul(s, x, a));
        key.second.insert(clifford_mul(s, a, x));
      }
      classes[key] = t.count(a) == 0;
    }
    GreenOracle g;
    g.num_classes = classes.size();
    for (auto const& [key, outside] : classes) {
      g.green_index += outside;
    }
    return g;
  }

  Outcome clifford_indices() {
    Outcome out;
    for (auto const& c : clifford_cases()) {
      ++out.instances;
      auto const& s   = c.s;
      auto        mul = [&](CliffordElement const& x, CliffordElement const& y) {
        return clifford_mul(s, x, y);
      };
      auto t_oracle = naive_closure(c.gens, mul);
      auto t        = closure(s, c.gens);
      if (std::vector<CliffordElement>(t_oracle.begin(), t_oracle.end()) != t) {
        out.fail("closure differs on " + c.name);
        continue;
      }
      auto idx = index(s, t);
      for (std::size_t a = 0; a < s.semilattice_size(); ++a) {
        std::size_t meet = 0;
        for (auto const& x : t_oracle) {
          meet += x.alpha == a;
        }
        auto expected = meet == 0 ? s.group(a).order()
                                  : s.group(a).order() / meet;
        if (idx.class_indices.at(a) != expected) {
          out.fail("[H : H ∩ T] differs on " + c.name);
        }
      }
      auto gi = green_index(s, t);
      auto go = green_oracle(s, t_oracle);
      if (gi.green_index != go.green_index || gi.num_classes != go.num_classes) {
        out.fail("Green index differs from the oracle on " + c.name);
      }
      if (idx.infinite || gi.green_index > gi.num_classes) {
        out.fail("Green index exceeds |S/H^T| on " + c.name);
      }
    }
    // Single groups: every subgroup generated by at most two elements.
    std::size_t subgroups = 0, normal = 0, differs = 0;
    std::string example;
    for (auto const& name : group_pool(8)) {
      auto g    = FiniteGroup::from_name(name);
      auto s    = chain_of_groups({g}, {});
      auto gmul = [&](element_type x, element_type y) { return g.product(x, y); };
      for (element_type x = 0; x < g.order(); ++x) {
        for (element_type y = x; y < g.order(); ++y) {
          ++subgroups;
          auto                         h = naive_closure(
              std::vector<element_type>{x, y}, gmul);
          std::vector<CliffordElement> t;
          for (auto e : h) {
            t.push_back({0, e});
          }
          auto lagrange = g.order() / h.size();
          auto gi       = green_index(s, t).green_index;
          if (index(s, t).sup != lagrange) {
            out.fail("[S:T] differs from the Lagrange index in " + name);
          }
          if (gi != green_oracle(s, {t.begin(), t.end()}).green_index) {
            out.fail("Green index differs from the oracle in " + name);
          }
          bool is_normal = true;
          for (element_type z = 0; z < g.order(); ++z) {
            for (auto e : h) {
              is_normal = is_normal
                          && h.count(g.product(g.product(g.inverse(z), e), z));
            }
          }
          normal += is_normal;
          if (gi != lagrange) {
            if (is_normal) {
              out.fail("Green index differs from the Lagrange index for a "
                       "normal subgroup of "
                       + name);
            } else if (differs++ == 0) {
              example = name + ", |T| = " + std::to_string(h.size())
                        + ": Green index " + std::to_string(gi)
                        + ", Lagrange index " + std::to_string(lagrange);
            }
          }
        }
      }
    }
    out.instances += subgroups;
    out.note = "single groups: [S:T] = Lagrange on " + std::to_string(subgroups)
               + ", Green = Lagrange on all " + std::to_string(normal)
               + " normal subgroups";
    if (differs > 0) {
      out.unattainable
          = "Green index differs from the Lagrange index on "
            + std::to_string(differs)
            + " non-normal subgroups (H^T-classes are xT ∩ Tx); e.g. "
            + example;
    }
    return out;
  }

  Outcome clifford_retraction() {
    Outcome out;
    for (auto const& c : clifford_cases()) {
      auto const& s   = c.s;
      auto        mul = [&](CliffordElement const& x, CliffordElement const& y) {
        return clifford_mul(s, x, y);
      };
      auto t    = naive_closure(c.gens, mul);
      auto rk_c = naive_rank(t, mul);
      for (std::size_t alpha = 0; alpha < s.semilattice_size(); ++alpha) {
        std::set<element_type> meet;
        for (auto const& x : t) {
          if (x.alpha == alpha) {
            meet.insert(x.g);
          }
        }
        if (meet.empty()) {
          continue;
        }
        ++out.instances;
        auto const& g    = s.group(alpha);
        auto        gmul = [&](element_type x, element_type y) {
          return g.product(x, y);
        };
        auto rk_g  = naive_rank(meet, gmul, std::optional(g.identity()));
        auto r     = retraction_check(s, {t.begin(), t.end()}, alpha);
        auto where = c.name + " α=" + std::to_string(alpha);
        if (r.rk_g != rk_g || r.rk_c != rk_c) {
          out.fail("ranks differ from the oracle on " + where);
        } else if (rk_g > rk_c || !r.holds) {
          out.fail("rk_G(T ∩ H) > rk_C(T) on " + where);
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Shared machinery for the presentation sweeps
  ////////////////////////////////////////////////////////////////////////

  word_type substitute(std::vector<word_type> const& images,
                       word_type const&              w) {
    word_type out;
    for (auto x : w) {
      out.insert(out.end(), images[x].begin(), images[x].end());
    }
    return out;
  }

  //! Relations u = v with |u| = |v| = 2 up to renaming letters and
  //! swapping sides, as sets of canonical pairs.
  std::set<relation_type> relation_orbits(std::size_t k) {
    std::vector<letter_type> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<letter_type>> perms;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<relation_type> out;
    for (letter_type a = 0; a < k * k; ++a) {
      for (letter_type b = 0; b < k * k; ++b) {
        word_type     u{a / letter_type(k), a % letter_type(k)};
        word_type     v{b / letter_type(k), b % letter_type(k)};
        auto const    none = static_cast<letter_type>(k);
        relation_type best{{none, none}, {none, none}};
        for (auto const& q : perms) {
          word_type     pu{q[u[0]], q[u[1]]}, pv{q[v[0]], q[v[1]]};
          relation_type r{std::min(pu, pv), std::max(pu, pv)};
          best = std::min(best, r);
        }
        out.insert(best);
      }
    }
    return out;
  }

  struct SweepCase {
    BalancedPresentation  p;
    oracle::CodedClasses  classes;
    ClassTable            table;
    std::vector<std::vector<word_type>> endos;
  };

  //! Every presentation ⟨A | u = v⟩ of the sweep over k letters with every
  //! endomorphism whose generator images have length <= 2, validated by
  //! the oracle. Fails out if the relation list or the endomorphism count
  //! differs from the library's.
  std::vector<SweepCase> sweep_cases(std::size_t k, Outcome& out) {
    std::vector<SweepCase> cases;
    auto                   lib_rels = two_letter_relations(k);
    if (std::set<relation_type>(lib_rels.begin(), lib_rels.end())
        != relation_orbits(k)) {
      out.fail("relation list differs from the orbit oracle for |A| = "
               + std::to_string(k));
    }
    std::vector<word_type> images{{}};
    for (letter_type x = 0; x < k; ++x) {
      images.push_back({x});
    }
    for (letter_type x = 0; x < k; ++x) {
      for (letter_type y = 0; y < k; ++y) {
        images.push_back({x, y});
      }
    }
    for (auto const& rel : lib_rels) {
      BalancedPresentation p(Alphabet::letters(k), {rel});
      SweepCase            c{p, oracle::CodedClasses(k, 8, {rel}),
                  ClassTable(p, 8), {}};
      std::vector<std::size_t> choice(k, 0);
      while (true) {
        std::vector<word_type> im;
        for (auto i : choice) {
          im.push_back(images[i]);
        }
        auto pu = substitute(im, rel.first), pv = substitute(im, rel.second);
        if (pu.size() == pv.size()
            && c.classes.klass(pu) == c.classes.klass(pv)) {
          c.endos.push_back(std::move(im));
        }
        std::size_t j = 0;
        while (j < k && ++choice[j] == images.size()) {
          choice[j++] = 0;
        }
        if (j == k) {
          break;
        }
      }
      std::size_t lib_count = 0;
      for_each_endo(p, c.table, 2, [&](Endo const&) { ++lib_count; });
      if (lib_count != c.endos.size()) {
        out.fail(p.str() + ": library finds " + std::to_string(lib_count)
                 + " endomorphisms, oracle " + std::to_string(c.endos.size()));
      }
      cases.push_back(std::move(c));
    }
    return cases;
  }

  //! Fixed classes of lengths 1..L and which of them are indecomposable.
  struct FixOracle {
    std::vector<bool> fixed;  // by oracle class
    std::vector<bool> indecomposable;
  };

  FixOracle fix_oracle(oracle::CodedClasses const& cc,
                       std::vector<bool>           fixed) {
    FixOracle   f{std::move(fixed), std::vector<bool>(cc.num_classes(), false)};
    auto const  k = cc.num_letters();
    for (std::size_t c = 0; c < cc.num_classes(); ++c) {
      f.indecomposable[c] = f.fixed[c] && cc.length(c) > 0;
    }
    for (std::size_t n = 2; n <= cc.max_length(); ++n) {
      for (std::uint64_t code = 0; code < cc.count(n); ++code) {
        auto c = cc.klass(n, code);
        if (!f.indecomposable[c]) {
          continue;
        }
        std::uint64_t tail = 1;
        for (std::size_t i = n - 1; i >= 1; --i) {
          tail *= k;  // k^(n - i)
          if (f.fixed[cc.klass(i, code / tail)]
              && f.fixed[cc.klass(n - i, code % tail)]) {
            f.indecomposable[c] = false;
            break;
          }
        }
      }
    }
    return f;
  }

  std::vector<word_type> oracle_words(oracle::CodedClasses const& cc,
                                      std::vector<bool> const&    in) {
    std::vector<word_type> out;
    for (std::size_t c = 0; c < cc.num_classes(); ++c) {
      if (in[c] && cc.length(c) > 0) {
        out.push_back(cc.least(c));
      }
    }
    return out;
  }

  std::vector<bool> fixed_by(oracle::CodedClasses const&   cc,
                             std::vector<word_type> const& images) {
    std::vector<bool> fixed(cc.num_classes(), false);
    for (std::size_t c = 0; c < cc.num_classes(); ++c) {
      auto w   = cc.least(c);
      auto img = substitute(images, w);
      fixed[c] = img.size() == w.size() && cc.klass(img) == c;
    }
    return fixed;
  }

  ////////////////////////////////////////////////////////////////////////
  // 9. Rank of Fix over one-relator presentations
  ////////////////////////////////////////////////////////////////////////

  Outcome ltwo() {
    Outcome     out;
    std::size_t max_rank = 0;
    for (std::size_t k : {2, 3}) {
      for (auto& c : sweep_cases(k, out)) {
        for (auto const& im : c.endos) {
          ++out.instances;
          auto phi   = validate_endo(c.p, im);
          auto lib   = fix_up_to(c.table, phi);
          auto o     = fix_oracle(c.classes, fixed_by(c.classes, im));
          auto ind   = oracle_words(c.classes, o.indecomposable);
          auto where = c.p.str() + " with " + phi.str(c.p);
          max_rank   = std::max(max_rank, ind.size());
          if (lib.fixed != oracle_words(c.classes, o.fixed)
              || lib.indecomposables != ind) {
            out.fail("Fix differs from the oracle for " + where);
          } else if (ind.size() > k || lib.rank_at_length > k) {
            out.fail("rank " + std::to_string(ind.size()) + " > |A| for "
                     + where);
          }
        }
      }
    }
    out.note = "max rank " + std::to_string(max_rank);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 10. Closed-form Fix
  ////////////////////////////////////////////////////////////////////////

  Outcome closed_forms() {
    Outcome out;
    for (auto [rel, gen] : {std::pair{"ab = ba", word_type{0, 1}},
                            std::pair{"aa = bb", word_type{0, 0}}}) {
      ++out.instances;
      auto p   = BalancedPresentation::parse(std::string("monoid a b ; ") + rel);
      auto lib = fix_up_to(p, parse_endo(p, "a -> b ; b -> a"), 8);
      oracle::CodedClasses   cc(2, 8, p.relations());
      auto                   o = fix_oracle(cc, fixed_by(cc, {{1}, {0}}));
      // (B ∪ {gen})* with B empty: the classes of gen^n.
      std::vector<bool> powers(cc.num_classes(), false);
      word_type         w;
      for (std::size_t n = 1; 2 * n <= 8; ++n) {
        w.insert(w.end(), gen.begin(), gen.end());
        powers[cc.klass(w)] = true;
      }
      auto fixed = oracle_words(cc, o.fixed);
      if (fixed != oracle_words(cc, powers)
          || oracle_words(cc, o.indecomposable) != std::vector<word_type>{gen}) {
        out.fail(std::string(rel) + ": oracle Fix is not ⟨" + letters(gen)
                 + "⟩");
      }
      if (lib.fixed != fixed || lib.indecomposables != std::vector<word_type>{gen}) {
        out.fail(std::string(rel) + ": library indecomposables are not {"
                 + letters(gen) + "}");
      }
    }
    out.note = "{ab} and {aa}";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 11. The rewriting system {bb -> aa, baa -> aab}
  ////////////////////////////////////////////////////////////////////////

  Outcome rewriting() {
    Outcome out;
    auto    rs = RewriteSystem::a2_equals_b2();
    for (auto const& [l, r] : rs.rules()) {
      if (r.size() != l.size() || !(r < l)) {
        out.fail("rule " + letters(l) + " -> " + letters(r)
                 + " does not decrease");
      }
    }
    auto report = rs.check_local_confluence();
    std::map<std::string, std::pair<std::string, std::string>> pairs;
    for (auto const& cp : report.pairs) {
      if (!cp.joinable) {
        out.fail("critical pair " + letters(cp.overlap) + " does not join");
      }
      pairs[letters(cp.overlap)]
          = {letters(cp.left_normal_form), letters(cp.right_normal_form)};
    }
    std::map<std::string, std::pair<std::string, std::string>> const expected
        = {{"bbb", {"aab", "aab"}}, {"bbaa", {"aaaa", "aaaa"}}};
    if (!report.confluent || report.pairs.size() != 2 || pairs != expected) {
      out.fail("critical pairs are not {bbb -> aab, bbaa -> aaaa}");
    }
    std::regex           shape("a*(ba)*b?");
    oracle::CodedClasses cc(2, 8, {{{1, 1}, {0, 0}}, {{1, 0, 0}, {0, 0, 1}}});
    for (std::size_t n = 0; n <= 8; ++n) {
      std::set<word_type> forms;
      for (std::uint64_t code = 0; code < cc.count(n); ++code) {
        ++out.instances;
        auto w  = cc.word(n, code);
        auto nf = rs.normal_form(w);
        forms.insert(nf);
        auto text = n == 0 ? std::string() : letters(nf);
        if (!rs.is_normal_form(nf) || cc.klass(nf) != cc.klass(w)
            || !std::regex_match(text, shape)) {
          out.fail("normal form " + letters(nf) + " of " + letters(w));
        }
      }
      std::size_t classes = 0;
      for (std::size_t c = 0; c < cc.num_classes(); ++c) {
        classes += cc.length(c) == n;
      }
      if (forms.size() != classes) {
        out.fail("length " + std::to_string(n) + ": "
                 + std::to_string(forms.size()) + " normal forms, "
                 + std::to_string(classes) + " classes");
      }
    }
    out.note = "2 critical pairs, both join";
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 12. (ca)^n c in ⟨a, b, c | cac = cbc⟩
  ////////////////////////////////////////////////////////////////////////

  Outcome exth() {
    Outcome                 out;
    std::size_t const       n_max = 6, max_len = 2 * n_max + 1;
    std::vector<word_type>  images{{1}, {0}, {2}};
    oracle::CodedClasses    cc(3, max_len, {{{2, 0, 2}, {2, 1, 2}}});
    auto                    o = fix_oracle(cc, fixed_by(cc, images));
    std::vector<std::size_t> counts;
    std::set<std::size_t>    seen;
    for (std::size_t n = 1; n <= n_max; ++n) {
      ++out.instances;
      word_type w;
      for (std::size_t i = 0; i < n; ++i) {
        w.insert(w.end(), {2, 0});
      }
      w.push_back(2);
      auto c = cc.klass(w);
      if (!o.fixed[c] || !o.indecomposable[c] || !seen.insert(c).second) {
        out.fail("(ca)^" + std::to_string(n)
                 + "c is not a new indecomposable fixed point");
      }
      std::size_t count = 0;
      for (std::size_t x = 0; x < cc.num_classes(); ++x) {
        count += o.indecomposable[x] && cc.length(x) <= 2 * n + 1;
      }
      counts.push_back(count);
    }
    auto lib = exth_check(n_max);
    if (!lib.all_pass || lib.counts != counts) {
      out.fail("library report differs from the oracle");
    }
    if (counts.back() < 6
        || !std::is_sorted(counts.begin(), counts.end(), std::less_equal<>())
        || std::adjacent_find(counts.begin(), counts.end()) != counts.end()) {
      out.fail("counts are not >= 6 and strictly increasing");
    }
    out.note = "counts " + json(counts).dump();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 13. Periodic points
  ////////////////////////////////////////////////////////////////////////

  //! Follows φ from a class; words longer than L are kept as words.
  class Orbit {
   public:
    Orbit(oracle::CodedClasses const& cc, std::vector<word_type> const& images)
        : _cc(cc), _images(images), _next(cc.num_classes(), none) {
      _erasing = std::any_of(images.begin(), images.end(),
                             [](word_type const& w) { return w.empty(); });
      for (std::size_t c = 0; c < cc.num_classes(); ++c) {
        auto img = substitute(images, cc.least(c));
        if (img.size() <= cc.max_length()) {
          _next[c] = cc.klass(img);
        }
      }
    }

    //! The class of xφ^n for x in class c, or none if it is longer than L.
    std::size_t power(std::size_t c, std::uint64_t n) const {
      return n == 0 ? c : powers(c, n).back();
    }

    //! The classes of xφ, xφ^2, ..., xφ^n for x in class c.
    std::vector<std::size_t> powers(std::size_t c, std::uint64_t n) const {
      std::vector<std::size_t> result(n, none);
      std::size_t              cur = c;
      word_type                raw;
      for (std::uint64_t i = 0; i < n; ++i) {
        if (cur != none) {
          if (_next[cur] != none) {
            cur       = _next[cur];
            result[i] = cur;
            continue;
          }
          raw = substitute(_images, _cc.least(cur));
          cur = none;
        } else {
          if (!_erasing) {
            return result;  // lengths never decrease
          }
          raw = substitute(_images, raw);
        }
        if (raw.size() <= _cc.max_length()) {
          cur = _cc.klass(raw);
        }
        result[i] = cur;
      }
      return result;
    }

    static constexpr std::size_t none = ~std::size_t(0);

   private:
    oracle::CodedClasses const&   _cc;
    std::vector<word_type> const& _images;
    std::vector<std::size_t>      _next;
    bool                          _erasing = false;
  };

  Outcome periodic_points() {
    Outcome       out;
    std::uint64_t max_r = 1;
    for (std::size_t k : {2, 3}) {
      for (auto& c : sweep_cases(k, out)) {
        auto const& cc = c.classes;
        // Oracle class of each library class.
        std::vector<std::size_t> to_oracle(c.table.num_classes());
        for (std::size_t x = 0; x < c.table.num_classes(); ++x) {
          to_oracle[x] = cc.klass(
              c.table.representative(static_cast<ClassTable::class_type>(x)));
        }
        for (auto const& im : c.endos) {
          ++out.instances;
          auto       phi   = validate_endo(c.p, im);
          auto       where = c.p.str() + " with " + phi.str(c.p);
          Orbit      orbit(cc, im);
          EndoPowers powers(c.table, phi);
          std::vector<std::vector<bool>> fix(7, std::vector<bool>(cc.num_classes()));
          for (std::size_t x = 0; x < cc.num_classes(); ++x) {
            auto const seq = orbit.powers(x, 6);
            for (std::uint64_t n = 1; n <= 6; ++n) {
              fix[n][x] = seq[n - 1] == x;
            }
          }
          std::vector<std::vector<bool>> lib_fix(7);
          for (std::uint64_t n = 1; n <= 6; ++n) {
            lib_fix[n]      = powers.fixed(n);
            auto const& lib = lib_fix[n];
            for (std::size_t x = 0; x < lib.size(); ++x) {
              if (lib[x] != fix[n][to_oracle[x]]) {
                out.fail("Fix(φ^" + std::to_string(n)
                         + ") differs from the oracle for " + where);
              }
            }
            for (std::uint64_t m = 1; m < n; ++m) {
              for (std::size_t x = 0; n % m == 0 && x < lib.size(); ++x) {
                if (lib_fix[m][x] && !lib[x]) {
                  out.fail("Fix(φ^" + std::to_string(m) + ") ⊄ Fix(φ^"
                           + std::to_string(n) + ") for " + where);
                }
              }
            }
          }
          std::vector<bool> union_fix(cc.num_classes(), false);
          for (std::size_t x = 0; x < cc.num_classes(); ++x) {
            for (std::uint64_t n = 1; n <= 6; ++n) {
              union_fix[x] = union_fix[x] || fix[n][x];
            }
          }
          auto per = per_up_to(c.p, c.table, phi);
          max_r    = std::max(max_r, per.R);
          if (!per.stabilized || per.periodic != oracle_words(cc, union_fix)) {
            out.fail("Per differs from the union of Fix(φ^n), n <= 6, for "
                     + where);
            continue;
          }
          for (auto const& x : per.periodic) {
            auto cls = cc.klass(x);
            if (orbit.power(cls, per.R) != cls) {
              out.fail(letters(x) + " φ^R ≠ " + letters(x) + " for " + where);
            }
          }
        }
      }
    }
    out.note = "max R " + std::to_string(max_r);
    return out;
  }

}  // namespace

int main() {
  std::vector<Criterion> const criteria = {
      {1, "Stallings rank equals Nielsen rank", 60, stallings_rank},
      {2, "automaton rank bound", 30, ragr_bound_sweep},
      {3, "fold-order invariance", 10, fold_order},
      {4, "d_S and p_S against the segment oracle", 10, numeric_invariants},
      {5, "strict chain S_1 ⊊ ... ⊊ S_25 in Z^2", 5, notts},
      {6, "Rees component rank bound", 120, rees_bound},
      {7, "Clifford index and Green index", 30, clifford_indices},
      {8, "rk_G(T ∩ H) <= rk_C(T)", 30, clifford_retraction},
      {9, "rank of Fix <= |A| on one-relator presentations", 300, ltwo},
      {10, "closed-form Fix for ab = ba and aa = bb", 5, closed_forms},
      {11, "rewriting system {bb -> aa, baa -> aab}", 5, rewriting},
      {12, "(ca)^n c in <a,b,c | cac = cbc>", 30, exth},
      {13, "periodic points and period bound", 120, periodic_points},
  };
  std::printf("acceptance suite, seed %llu\n",
              static_cast<unsigned long long>(seed));
  int hard_failures = 0;
  for (auto const& c : criteria) {
    auto    start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (std::exception const& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - start)
                      .count();
    if (secs > c.budget) {
      out.fail("took " + std::to_string(secs) + " s, budget "
               + std::to_string(c.budget) + " s");
    }
    bool ok = out.pass && !out.unattainable;
    hard_failures += !out.pass;
    std::printf("%s %2d  %s  [%zu instances, %.2f s / %.0f s]%s%s\n",
                ok ? "PASS" : "FAIL", c.id, c.title.c_str(), out.instances,
                secs, c.budget, out.note.empty() ? "" : "  ",
                out.note.c_str());
    if (out.counterexample) {
      std::printf("        counterexample: %s\n", out.counterexample->c_str());
    }
    if (out.pass && out.unattainable) {
      std::printf("        does not hold as stated: %s\n",
                  out.unattainable->c_str());
    }
    std::fflush(stdout);
  }
  return hard_failures == 0 ? 0 : 1;
}
