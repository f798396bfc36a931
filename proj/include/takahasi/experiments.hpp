// Seeded sweeps that check the library's invariants on many instances.
// Each returns a pass flag, an instance count, the first counterexample
// and a JSON summary.

#ifndef TAKAHASI_EXPERIMENTS_HPP_
#define TAKAHASI_EXPERIMENTS_HPP_

#include <cstddef>     // for size_t
#include <cstdint>     // for uint64_t
#include <functional>  // for function
#include <map>         // for map
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for move
#include <vector>      // for vector

#include "clifford.hpp"       // for SemilatticeOfGroups, green_index
#include "io.hpp"             // for json
#include "numeric.hpp"        // for notts_chain, profile
#include "presentations.hpp"  // for ltwo_sweep, exth_check
#include "random.hpp"         // for SplitMix64
#include "rees.hpp"           // for ReesStructure, rank_bound_check
#include "rewriting.hpp"      // for RewriteSystem
#include "stallings.hpp"      // for pipeline, fold

namespace takahasi {

  struct ExperimentResult {
    ExperimentResult(std::string name_, std::uint64_t seed_)
        : name(std::move(name_)), seed(seed_) {}

    std::string                name;
    std::uint64_t              seed      = 0;
    bool                       pass      = true;
    std::size_t                instances = 0;
    std::optional<std::string> counterexample;
    json                       details = json::object();

    void fail(std::string what) {
      pass = false;
      if (!counterexample) {
        counterexample = std::move(what);
      }
    }

    json to_json() const {
      json out = {{"experiment", name},
                  {"seed", seed},
                  {"pass", pass},
                  {"instances", instances},
                  {"details", details}};
      if (counterexample) {
        out["counterexample"] = *counterexample;
      }
      return out;
    }
  };

  //! Named integer parameters with defaults; unknown names are rejected.
  using ExperimentParams = std::map<std::string, std::int64_t>;

  namespace detail {
    inline std::int64_t param(ExperimentParams const& given,
                              std::string const&      name,
                              std::int64_t            fallback) {
      auto it = given.find(name);
      return it == given.end() ? fallback : it->second;
    }

    inline bool is_normal(FiniteGroup const& g, Subgroup const& h) {
      for (element_type x = 0; x < g.order(); ++x) {
        for (auto y : h.elements()) {
          if (!h.contains(g.product(g.product(g.inverse(x), y), x))) {
            return false;
          }
        }
      }
      return true;
    }

    inline std::string print_rees(std::vector<ReesElement> const& a) {
      std::string out;
      for (auto const& x : a) {
        out += (out.empty() ? "" : " ") + std::to_string(x.i) + ":"
               + std::to_string(x.g) + ":" + std::to_string(x.lambda);
      }
      return out;
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Free groups
  ////////////////////////////////////////////////////////////////////////

  //! rank(A4) <= |E| - |Q| + |{q0} ∪ T| on random trim automata.
  inline ExperimentResult experiment_ragr(std::uint64_t seed,
                                          std::size_t   count        = 500,
                                          std::size_t   max_vertices = 6) {
    ExperimentResult r{"ragr", seed};
    SplitMix64       rng(seed);
    std::int64_t     worst_slack = -1;
    while (r.instances < count) {
      auto t = trim(random_automaton(rng, max_vertices, 2, 10));
      if (t.degenerate) {
        continue;
      }
      ++r.instances;
      auto rank  = static_cast<std::int64_t>(pipeline(t.automaton).report.rank);
      auto bound = ragr_bound(t.automaton);
      if (worst_slack < 0 || bound - rank < worst_slack) {
        worst_slack = bound - rank;
      }
      if (rank > bound) {
        r.fail("instance " + std::to_string(r.instances) + ": rank "
               + std::to_string(rank) + " > bound " + std::to_string(bound));
      }
    }
    r.details["min_slack"] = worst_slack;
    return r;
  }

  //! Folding a dual automaton in two shuffled orders gives one canonical
  //! form.
  inline ExperimentResult experiment_fold_order(std::uint64_t seed,
                                                std::size_t   count = 100) {
    ExperimentResult r{"fold-order", seed};
    SplitMix64       rng(seed);
    for (; r.instances < count; ++r.instances) {
      auto a  = random_dual_automaton(rng, 6, 2, 4);
      auto f1 = canonical_form(fold(a, rng()));
      auto f2 = canonical_form(fold(a, rng()));
      if (!(f1 == f2)) {
        r.fail("instance " + std::to_string(r.instances)
               + ": fold orders disagree");
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Numerical semigroups
  ////////////////////////////////////////////////////////////////////////

  //! S_n ⊊ S_{n+1} in Z² for n < n_max.
  inline ExperimentResult experiment_notts(std::int64_t n_max) {
    ExperimentResult r{"notts", 0};
    auto             report = notts_chain(n_max);
    r.instances             = report.steps.size();
    for (auto const& s : report.steps) {
      if (!s.contained || !s.excluded) {
        r.fail("n = " + std::to_string(s.n)
               + (s.contained ? ": (2n+1, 1) is in S_n"
                              : ": S_n is not contained in S_{n+1}"));
      }
    }
    r.details["all_strict"] = report.all_strict;
    return r;
  }

  //! For every generator set in {2, ..., max_gen} of size <= max_size:
  //! p_S - 1 is a multiple of d_S outside S, the multiples of d_S from p_S
  //! to p_S + max_gen are in S, and the minimal generators regenerate the
  //! same profile.
  inline ExperimentResult experiment_numeric(std::int64_t max_gen  = 12,
                                             std::size_t  max_size = 3) {
    ExperimentResult                       r{"numeric", 0};
    std::vector<std::vector<std::int64_t>> sets{{}};
    for (std::int64_t g = 2; g <= max_gen; ++g) {
      auto n = sets.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (sets[i].size() < max_size) {
          auto s = sets[i];
          s.push_back(g);
          sets.push_back(std::move(s));
        }
      }
    }
    for (auto const& gens : sets) {
      if (gens.empty()) {
        continue;
      }
      ++r.instances;
      NumSgp s(gens);
      auto   pr    = profile(s);
      auto   table = s.membership_table(pr.p + max_gen + 1);
      // p_S - 1 is the last multiple of d_S outside S.
      auto const gap = pr.p - 1;
      bool       ok  = gap % pr.d == 0 && !table[gap];
      for (auto n = gap + pr.d; n <= pr.p + max_gen; n += pr.d) {
        ok = ok && table[n];
      }
      auto again = profile(NumSgp(pr.minimal_generators));
      ok         = ok && again.d == pr.d && again.p == pr.p;
      if (!ok) {
        r.fail("generators " + json(gens).dump());
      }
    }
    auto p35            = profile(NumSgp({3, 5}));
    r.details["<3,5>"]  = {{"d", p35.d}, {"p", p35.p}};
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Completely simple semigroups
  ////////////////////////////////////////////////////////////////////////

  inline std::vector<std::string> group_pool(std::size_t max_order) {
    static char const* const names[]
        = {"C2",  "C3",    "C4",  "C2xC2", "C5",  "S3",      "C6",
           "C7",  "C8",    "D4",  "C2xC4", "C2xC2xC2", "C9", "C3xC3",
           "C10", "D5",    "C11", "C12",   "D6",  "C2xC6"};
    std::vector<std::string> out;
    for (auto n : names) {
      if (FiniteGroup::from_name(n).order() <= max_order) {
        out.emplace_back(n);
      }
    }
    return out;
  }

  //! rk_G(T^(iλ)) <= rk_CS(T)² + 1 and the G-automaton language equals
  //! the component image, over the given groups, |I|, |Λ| <= 2, random
  //! sandwich matrices and closures of random generators.
  inline ExperimentResult
  experiment_rees_bound(std::uint64_t                   seed,
                        std::vector<std::string> const& groups,
                        std::size_t                     max_gens     = 2,
                        std::size_t                     per_shape    = 20,
                        std::size_t                     gen_trials   = 2) {
    ExperimentResult r{"rees-bound", seed};
    SplitMix64       rng(seed);
    std::size_t      max_rank = 0, max_component = 0;
    for (auto const& name : groups) {
      auto g = FiniteGroup::from_name(name);
      for (std::size_t ni = 1; ni <= 2; ++ni) {
        for (std::size_t nl = 1; nl <= 2; ++nl) {
          for (std::size_t m = 0; m < per_shape; ++m) {
            table_type p(nl, std::vector<element_type>(ni));
            for (auto& row : p) {
              for (auto& x : row) {
                x = rng.below(g.order());
              }
            }
            ReesStructure s(g, ni, nl, p);
            for (std::size_t trial = 0; trial < gen_trials; ++trial) {
              std::vector<ReesElement> a(rng.between(1, max_gens));
              for (auto& x : a) {
                x = s.element(rng.below(s.size()));
              }
              auto t = closure(s, a);
              for (auto i : t.i_set) {
                for (auto l : t.lambda_set) {
                  ++r.instances;
                  auto b        = rank_bound_check(s, a, i, l);
                  max_rank      = std::max(max_rank, b.rk_cs);
                  max_component = std::max(max_component, b.rk_component);
                  auto where    = name + " P=" + json(p).dump() + " A="
                               + detail::print_rees(a) + " (i,λ)=("
                               + std::to_string(i) + ","
                               + std::to_string(l) + ")";
                  if (!b.bound_holds) {
                    r.fail("bound fails for " + where);
                  }
                  auto aut = build_g_automaton(s, a, i, l);
                  if (!(language(s, aut) == component_iso(s, t, i, l))) {
                    r.fail("automaton language differs for " + where);
                  }
                }
              }
            }
          }
        }
      }
    }
    r.details["groups"]            = groups;
    r.details["max_rk_cs"]         = max_rank;
    r.details["max_rk_component"]  = max_component;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Clifford semigroups
  ////////////////////////////////////////////////////////////////////////

  //! On random strong semilattices of groups: green_index <= |S/H^T|,
  //! and rk_G(T ∩ H) <= rk_C(T) for every class H meeting T. On single
  //! groups: [S:T] equals the Lagrange index, and so does the Green index
  //! when T is normal.
  inline ExperimentResult experiment_clifford(std::uint64_t seed,
                                              std::size_t   count  = 50,
                                              std::size_t   trials = 4) {
    ExperimentResult r{"clifford-index", seed};
    SplitMix64       rng(seed);
    std::size_t      retractions = 0;
    for (std::size_t n = 0; n < count; ++n) {
      auto s = random_clifford(rng, 2 + n % 2);
      for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<CliffordElement> a(rng.between(1, 2));
        for (auto& x : a) {
          x = s.element(rng.below(s.size()));
        }
        auto t = closure(s, a);
        ++r.instances;
        auto gi    = green_index(s, t);
        auto where = "instance " + std::to_string(n) + " " + to_json(s).dump();
        if (index(s, t).infinite || gi.green_index > gi.num_classes) {
          r.fail("green index exceeds |S/H^T| on " + where);
        }
        for (std::size_t alpha = 0; alpha < s.semilattice_size(); ++alpha) {
          bool meets = false;
          for (auto const& x : t) {
            meets = meets || x.alpha == alpha;
          }
          if (meets) {
            ++retractions;
            if (!retraction_check(s, t, alpha).holds) {
              r.fail("rk_G(T ∩ H) > rk_C(T) on " + where);
            }
          }
        }
      }
    }
    std::size_t normal = 0, non_normal = 0, non_normal_differs = 0;
    for (auto name : group_pool(8)) {
      auto g  = FiniteGroup::from_name(name);
      auto s1 = chain_of_groups({g}, {});
      for (element_type x = 0; x < g.order(); ++x) {
        for (element_type y = x; y < g.order(); ++y) {
          auto                         h = closure(g, {x, y});
          std::vector<CliffordElement> t;
          for (auto e : h.elements()) {
            t.push_back({0, e});
          }
          auto lagrange = takahasi::index(g, h);
          auto gi       = green_index(s1, t).green_index;
          if (index(s1, t).sup != lagrange) {
            r.fail("[S:T] differs from the Lagrange index in " + name);
          }
          if (detail::is_normal(g, h)) {
            ++normal;
            if (gi != lagrange) {
              r.fail("Green index differs from the Lagrange index for a "
                     "normal subgroup of "
                     + name);
            }
          } else {
            ++non_normal;
            non_normal_differs += gi != lagrange;
          }
        }
      }
    }
    r.details["retraction_checks"]         = retractions;
    r.details["single_group_normal"]       = normal;
    r.details["single_group_non_normal"]   = non_normal;
    r.details["non_normal_green_differs"]  = non_normal_differs;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  //! rank_at_L(Fix(φ)) <= |A| for all one-relator presentations with
  //! relator sides of length 2 and endomorphisms with images of length
  //! <= image_len.
  inline ExperimentResult experiment_ltwo(std::size_t letters,
                                          std::size_t image_len  = 2,
                                          std::size_t max_length = 8) {
    ExperimentResult r{"ltwo-sweep", 0};
    json             rows = json::array();
    std::size_t      max_rank = 0;
    for (auto const& row : ltwo_sweep(letters, image_len, max_length)) {
      r.instances += row.endos;
      max_rank = std::max(max_rank, row.max_rank);
      if (row.violations != 0) {
        r.fail(row.presentation + " with " + row.witness.value_or(""));
      }
      rows.push_back(to_json(row));
    }
    r.details["rows"]     = std::move(rows);
    r.details["max_rank"] = max_rank;
    r.details["letters"]  = letters;
    return r;
  }

  //! The (ca)^n c family in ⟨a, b, c | cac = cbc⟩ with a ↔ b.
  inline ExperimentResult experiment_exth(std::size_t n_max = 6) {
    ExperimentResult r{"exth", 0};
    auto             report = exth_check(n_max);
    r.instances             = n_max;
    if (!report.all_pass) {
      r.fail("exth check failed: " + to_json(report).dump());
    }
    if (report.counts.back() < n_max) {
      r.fail("fewer than n_max indecomposables up to length 2 n_max + 1");
    }
    r.details = to_json(report);
    return r;
  }

  //! The two closed-form Fix descriptions: indecomposables {ab} for
  //! ab = ba and {aa} for aa = bb, both under the swap.
  inline ExperimentResult experiment_closed_forms(std::size_t max_length = 8) {
    ExperimentResult r{"closed-forms", 0};
    for (auto text : {"monoid a b ; ab = ba", "monoid a b ; aa = bb"}) {
      auto p   = BalancedPresentation::parse(text);
      auto f   = fix_up_to(p, parse_endo(p, "a -> b ; b -> a"), max_length);
      auto ind = detail::words_json(p, f.indecomposables);
      ++r.instances;
      r.details[text] = ind;
      word_type expected
          = p.relations()[0].first == word_type{0, 1} ? word_type{0, 1}
                                                      : word_type{0, 0};
      if (f.indecomposables != std::vector<word_type>{expected}) {
        r.fail(std::string(text) + " gives " + ind.dump());
      }
    }
    return r;
  }

  //! The a² = b² rewriting system: order, local confluence, the two
  //! critical pairs, and the shape a*(ba)*(1 + b) of normal forms.
  inline ExperimentResult experiment_rewriting(std::size_t max_length = 8) {
    ExperimentResult r{"rewriting", 0};
    auto             rs     = RewriteSystem::a2_equals_b2();
    auto             report = rs.check_local_confluence();
    if (!report.confluent || report.pairs.size() != 2) {
      r.fail("critical pairs do not all join");
    }
    json pairs = json::array();
    auto print = [](word_type const& w) {
      std::string s;
      for (auto x : w) {
        s += static_cast<char>('a' + x);
      }
      return s.empty() ? std::string("1") : s;
    };
    for (auto const& cp : report.pairs) {
      pairs.push_back({{"overlap", print(cp.overlap)},
                       {"left", print(cp.left_normal_form)},
                       {"right", print(cp.right_normal_form)},
                       {"joinable", cp.joinable}});
    }
    r.details["critical_pairs"] = std::move(pairs);
    // a*(ba)*(1 + b): after the leading a's, letters alternate b, a, ...
    for (auto const& w : all_words_up_to(2, max_length)) {
      ++r.instances;
      auto        nf = rs.normal_form(w);
      std::size_t i  = 0;
      while (i < nf.size() && nf[i] == 0) {
        ++i;
      }
      bool ok = true;
      for (std::size_t j = i; j < nf.size(); ++j) {
        ok = ok && nf[j] == ((j - i) % 2 == 0 ? 1u : 0u);
      }
      if (!ok) {
        r.fail("normal form " + print(nf) + " of " + print(w));
      }
    }
    return r;
  }

  //! On every endomorphism of the ltwo sweep: Fix(φ^m) ⊆ Fix(φ^n) for
  //! m | n <= 6, per_up_to stabilizes and agrees with the union of
  //! Fix(φ^n) for n <= 6, and xφ^R = x for every reported periodic x.
  inline ExperimentResult experiment_per(std::size_t letters,
                                         std::size_t image_len  = 2,
                                         std::size_t max_length = 8) {
    ExperimentResult r{"per-sweep", 0};
    std::uint64_t    max_r = 1;
    std::size_t      max_k = 0, exact = 0;
    for (auto const& rel : two_letter_relations(letters)) {
      BalancedPresentation p(Alphabet::letters(letters), {rel});
      ClassTable           table(p, max_length);
      for_each_endo(p, table, image_len, [&](Endo const& phi) {
        ++r.instances;
        auto       where = p.str() + " with " + phi.str(p);
        EndoPowers powers(table, phi);
        std::vector<std::vector<bool>> fixes;
        for (std::uint64_t m = 1; m <= 6; ++m) {
          fixes.push_back(powers.fixed(m));
        }
        for (std::size_t m = 1; m <= 6; ++m) {
          for (std::size_t n = 2 * m; n <= 6; n += m) {
            for (std::size_t c = 0; c < table.num_classes(); ++c) {
              if (fixes[m - 1][c] && !fixes[n - 1][c]) {
                r.fail("Fix(φ^" + std::to_string(m) + ") ⊄ Fix(φ^"
                       + std::to_string(n) + ") for " + where);
              }
            }
          }
        }
        auto per = per_up_to(p, table, phi);
        if (!per.stabilized) {
          r.fail("Per not stabilized for " + where);
        }
        exact += per.exact;
        std::vector<word_type> union_fix;
        for (std::size_t c = table.first_class(1); c < table.num_classes();
             ++c) {
          bool in = false;
          for (auto const& f : fixes) {
            in = in || f[c];
          }
          if (in) {
            union_fix.push_back(
                table.representative(static_cast<ClassTable::class_type>(c)));
          }
        }
        if (union_fix != per.periodic) {
          r.fail("Per differs from the union of Fix(φ^n), n <= 6, for "
                 + where);
        }
        if (!period_divides_R(table, phi, per).holds) {
          r.fail("period does not divide R for " + where);
        }
        max_r = std::max(max_r, per.R);
        max_k = std::max(max_k, per.k);
      });
    }
    r.details["max_R"] = max_r;
    r.details["max_k"] = max_k;
    r.details["exact"] = exact;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Registry
  ////////////////////////////////////////////////////////////////////////

  struct ExperimentInfo {
    std::string                                                 name;
    std::string                                                 summary;
    ExperimentParams                                            defaults;
    std::function<ExperimentResult(std::uint64_t, ExperimentParams const&)>
        run;
  };

  inline std::vector<ExperimentInfo> const& experiments() {
    using detail::param;
    static std::vector<ExperimentInfo> const all = {
        {"ragr",
         "automaton rank bound on random trim automata",
         {{"count", 500}, {"max-vertices", 6}},
         [](std::uint64_t seed, ExperimentParams const& p) {
           return experiment_ragr(seed, param(p, "count", 500),
                                  param(p, "max-vertices", 6));
         }},
        {"fold-order",
         "fold results do not depend on the fold order",
         {{"count", 100}},
         [](std::uint64_t seed, ExperimentParams const& p) {
           return experiment_fold_order(seed, param(p, "count", 100));
         }},
        {"numeric",
         "d_S and p_S over small generator sets",
         {{"max-gen", 12}, {"max-size", 3}},
         [](std::uint64_t, ExperimentParams const& p) {
           return experiment_numeric(param(p, "max-gen", 12),
                                     param(p, "max-size", 3));
         }},
        {"notts",
         "strict ascending chain in Z^2",
         {{"n-max", 25}},
         [](std::uint64_t, ExperimentParams const& p) {
           return experiment_notts(param(p, "n-max", 25));
         }},
        {"rees-bound",
         "component rank bound in Rees matrix semigroups",
         {{"group-max", 6}, {"gens", 2}, {"per-shape", 20}},
         [](std::uint64_t seed, ExperimentParams const& p) {
           return experiment_rees_bound(
               seed, group_pool(param(p, "group-max", 6)),
               param(p, "gens", 2), param(p, "per-shape", 20));
         }},
        {"clifford-index",
         "Green index and retraction rank in Clifford semigroups",
         {{"count", 50}},
         [](std::uint64_t seed, ExperimentParams const& p) {
           return experiment_clifford(seed, param(p, "count", 50));
         }},
        {"ltwo-sweep",
         "rank of Fix for one-relator balanced presentations",
         {{"letters", 3}, {"image-len", 2}, {"max-length", 8}},
         [](std::uint64_t, ExperimentParams const& p) {
           return experiment_ltwo(param(p, "letters", 3),
                                  param(p, "image-len", 2),
                                  param(p, "max-length", 8));
         }},
        {"closed-forms",
         "Fix for ab = ba and aa = bb under the swap",
         {{"max-length", 8}},
         [](std::uint64_t, ExperimentParams const& p) {
           return experiment_closed_forms(param(p, "max-length", 8));
         }},
        {"rewriting",
         "the a^2 = b^2 rewriting system",
         {{"max-length", 8}},
         [](std::uint64_t, ExperimentParams const& p) {
           return experiment_rewriting(param(p, "max-length", 8));
         }},
        {"exth",
         "fixed points of cac = cbc under a <-> b",
         {{"n-max", 6}},
         [](std::uint64_t, ExperimentParams const& p) {
           return experiment_exth(param(p, "n-max", 6));
         }},
        {"per-sweep",
         "periodic points and period bounds over the ltwo sweep",
         {{"letters", 2}, {"image-len", 2}, {"max-length", 8}},
         [](std::uint64_t, ExperimentParams const& p) {
           return experiment_per(param(p, "letters", 2),
                                 param(p, "image-len", 2),
                                 param(p, "max-length", 8));
         }},
    };
    return all;
  }

  //! Runs the named experiment; throws on an unknown name or parameter.
  inline ExperimentResult run_experiment(std::string const&      name,
                                         std::uint64_t           seed,
                                         ExperimentParams const& params) {
    for (auto const& e : experiments()) {
      if (e.name != name) {
        continue;
      }
      for (auto const& [key, value] : params) {
        if (e.defaults.count(key) == 0) {
          detail::fail("experiment ", name, " has no parameter \"", key,
                       "\"");
        }
        if (value < 0) {
          detail::fail("parameter \"", key, "\" must be non-negative");
        }
      }
      auto result = e.run(seed, params);
      result.seed = seed;
      return result;
    }
    detail::fail("unknown experiment \"", name, "\"");
  }

}  // namespace takahasi

#endif  // TAKAHASI_EXPERIMENTS_HPP_
