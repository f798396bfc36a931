// Rees matrix semigroups M[G, I, Λ, P] over finite groups.

#ifndef TAKAHASI_REES_HPP_
#define TAKAHASI_REES_HPP_

#include <algorithm>  // for sort, unique, find
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <map>        // for map
#include <set>        // for set
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "dynamics.hpp"   // for self_map_type, periodic_report
#include "exception.hpp"  // for TakahasiError
#include "groups.hpp"     // for FiniteGroup, Subgroup, min_rank

namespace takahasi {

  //! An element (i, g, λ) of a Rees matrix semigroup.
  struct ReesElement {
    std::size_t  i      = 0;
    element_type g      = 0;
    std::size_t  lambda = 0;
    auto         operator<=>(ReesElement const&) const = default;
  };

  //! M[G, I, Λ, P] with I = {0, ..., |I| - 1}, Λ = {0, ..., |Λ| - 1} and
  //! the sandwich matrix indexed as P[λ][i].
  class ReesStructure {
   public:
    ReesStructure(FiniteGroup                            group,
                  std::size_t                            num_i,
                  std::size_t                            num_lambda,
                  std::vector<std::vector<element_type>> sandwich)
        : _group(std::move(group)),
          _num_i(num_i),
          _num_lambda(num_lambda),
          _sandwich(std::move(sandwich)) {
      if (num_i == 0 || num_lambda == 0) {
        detail::fail("ReesStructure: I and Λ must be nonempty");
      }
      if (_sandwich.size() != num_lambda) {
        detail::fail("ReesStructure: P must have |Λ| = ", num_lambda,
                     " rows, found ", _sandwich.size());
      }
      for (auto const& row : _sandwich) {
        if (row.size() != num_i) {
          detail::fail("ReesStructure: every row of P needs |I| = ", num_i,
                       " entries");
        }
        for (auto p : row) {
          if (p >= _group.order()) {
            detail::fail("ReesStructure: P entry ", p, " is not in G");
          }
        }
      }
    }

    FiniteGroup const& group() const noexcept {
      return _group;
    }

    std::size_t num_i() const noexcept {
      return _num_i;
    }

    std::size_t num_lambda() const noexcept {
      return _num_lambda;
    }

    element_type sandwich(std::size_t lambda, std::size_t i) const {
      return _sandwich[lambda][i];
    }

    std::vector<std::vector<element_type>> const& sandwich() const noexcept {
      return _sandwich;
    }

    std::size_t size() const noexcept {
      return _num_i * _group.order() * _num_lambda;
    }

    //! Position of x in 0, ..., size() - 1; inverse of element().
    std::size_t index(ReesElement const& x) const {
      validate(x);
      return (x.i * _group.order() + x.g) * _num_lambda + x.lambda;
    }

    ReesElement element(std::size_t k) const {
      return {k / (_num_lambda * _group.order()),
              (k / _num_lambda) % _group.order(),
              k % _num_lambda};
    }

    void validate(ReesElement const& x) const {
      if (x.i >= _num_i || x.g >= _group.order() || x.lambda >= _num_lambda) {
        detail::fail("(", x.i, ",", x.g, ",", x.lambda,
                     ") is not an element of the Rees matrix semigroup");
      }
    }

    //! (i, g, λ)(j, h, μ) = (i, g p_{λj} h, μ).
    ReesElement multiply(ReesElement const& x, ReesElement const& y) const {
      return {x.i,
              _group.product(_group.product(x.g, _sandwich[x.lambda][y.i]),
                             y.g),
              y.lambda};
    }

    //! The inverse of x in its H-class: (i, p⁻¹ g⁻¹ p⁻¹, λ), p = p_{λi}.
    ReesElement unary(ReesElement const& x) const {
      auto pinv = _group.inverse(_sandwich[x.lambda][x.i]);
      return {x.i,
              _group.product(_group.product(pinv, _group.inverse(x.g)), pinv),
              x.lambda};
    }

    //! The multiplication table on indices.
    table_type table() const {
      table_type t(size(), std::vector<element_type>(size()));
      for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
          t[x][y] = index(multiply(element(x), element(y)));
        }
      }
      return t;
    }

   private:
    FiniteGroup                            _group;
    std::size_t                            _num_i;
    std::size_t                            _num_lambda;
    std::vector<std::vector<element_type>> _sandwich;
  };

  //! A completely simple subsemigroup given by generators.
  struct CSSub {
    std::vector<ReesElement> generators;
    std::vector<ReesElement> elements;  // sorted
    std::vector<std::size_t> i_set;     // I_T, sorted
    std::vector<std::size_t> lambda_set;  // Λ_T, sorted

    bool contains(ReesElement const& x) const {
      return std::binary_search(elements.begin(), elements.end(), x);
    }
  };

  namespace detail {
    template <typename T>
    std::vector<T> sorted_unique(std::vector<T> v) {
      std::sort(v.begin(), v.end());
      v.erase(std::unique(v.begin(), v.end()), v.end());
      return v;
    }

    inline bool contains(std::vector<std::size_t> const& v, std::size_t x) {
      return std::binary_search(v.begin(), v.end(), x);
    }
  }  // namespace detail

  //! The least subset containing a closed under multiply and unary.
  inline CSSub closure(ReesStructure const& s, std::vector<ReesElement> a) {
    if (a.empty()) {
      detail::fail("closure: generator list must be nonempty");
    }
    std::vector<bool>        seen(s.size(), false);
    std::vector<ReesElement> found;
    auto                     add = [&](ReesElement const& x) {
      auto k = s.index(x);
      if (!seen[k]) {
        seen[k] = true;
        found.push_back(x);
      }
    };
    for (auto const& x : a) {
      add(x);
    }
    for (std::size_t n = 0; n < found.size(); ++n) {
      add(s.unary(found[n]));
      for (std::size_t m = 0; m <= n; ++m) {
        add(s.multiply(found[n], found[m]));
        add(s.multiply(found[m], found[n]));
      }
    }
    CSSub t;
    t.generators = detail::sorted_unique(std::move(a));
    t.elements   = detail::sorted_unique(std::move(found));
    for (auto const& x : t.elements) {
      t.i_set.push_back(x.i);
      t.lambda_set.push_back(x.lambda);
    }
    t.i_set      = detail::sorted_unique(std::move(t.i_set));
    t.lambda_set = detail::sorted_unique(std::move(t.lambda_set));
    return t;
  }

  //! T^(iλ) = T ∩ ({i} × G × {λ}).
  inline std::vector<ReesElement>
  component(CSSub const& t, std::size_t i, std::size_t lambda) {
    if (!detail::contains(t.i_set, i) || !detail::contains(t.lambda_set,
                                                           lambda)) {
      detail::fail("component: (", i, ",", lambda,
                   ") is not in I_T × Λ_T");
    }
    std::vector<ReesElement> out;
    for (auto const& x : t.elements) {
      if (x.i == i && x.lambda == lambda) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! G^(iλ), the image of T^(iλ) under (i, g, λ) ↦ g p_{λi}.
  inline Subgroup component_iso(ReesStructure const& s,
                                CSSub const&         t,
                                std::size_t          i,
                                std::size_t          lambda) {
    auto                      comp = component(t, i, lambda);
    std::vector<element_type> image;
    for (auto const& x : comp) {
      image.push_back(s.group().product(x.g, s.sandwich(lambda, i)));
    }
    auto h = Subgroup::checked(s.group(), image);
    if (h.size() != comp.size()) {
      detail::fail("component_iso: map is not injective");
    }
    return h;
  }

  //! A finite automaton with edges labelled by group elements. State 0 is
  //! q0, states 1, ..., |Λ_A| stand for the elements of lambda_states, and
  //! the last state is t.
  struct GAutomaton {
    struct Edge {
      std::size_t  source = 0;
      element_type label  = 0;
      std::size_t  target = 0;
      auto         operator<=>(Edge const&) const = default;
    };

    std::vector<std::size_t> lambda_states;
    std::vector<Edge>        edges;  // sorted, deduplicated

    std::size_t num_states() const noexcept {
      return lambda_states.size() + 2;
    }

    std::size_t initial() const noexcept {
      return 0;
    }

    std::size_t terminal() const noexcept {
      return lambda_states.size() + 1;
    }

    //! Every state lies on a path from q0 to t.
    bool is_trim() const {
      std::size_t const              n = num_states();
      std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
      for (std::size_t q = 0; q < n; ++q) {
        reach[q][q] = true;
      }
      for (auto const& e : edges) {
        reach[e.source][e.target] = true;
      }
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t p = 0; p < n; ++p) {
          for (std::size_t q = 0; q < n; ++q) {
            if (reach[p][k] && reach[k][q]) {
              reach[p][q] = true;
            }
          }
        }
      }
      for (std::size_t q = 0; q < n; ++q) {
        if (!reach[initial()][q] || !reach[q][terminal()]) {
          return false;
        }
      }
      return true;
    }
  };

  //! The G-automaton whose language is G^(iλ) for T = ⟨A⟩.
  inline GAutomaton build_g_automaton(ReesStructure const&            s,
                                      std::vector<ReesElement> const& a,
                                      std::size_t                     i,
                                      std::size_t                     lambda) {
    if (a.empty()) {
      detail::fail("build_g_automaton: A must be nonempty");
    }
    std::vector<std::size_t> i_a, lambda_a;
    for (auto const& x : a) {
      s.validate(x);
      i_a.push_back(x.i);
      lambda_a.push_back(x.lambda);
    }
    i_a      = detail::sorted_unique(std::move(i_a));
    lambda_a = detail::sorted_unique(std::move(lambda_a));
    if (!detail::contains(i_a, i) || !detail::contains(lambda_a, lambda)) {
      detail::fail("build_g_automaton: (", i, ",", lambda,
                   ") is not in I_A × Λ_A");
    }
    GAutomaton aut;
    aut.lambda_states = lambda_a;
    auto state        = [&](std::size_t mu) {
      return static_cast<std::size_t>(
                 std::lower_bound(lambda_a.begin(), lambda_a.end(), mu)
                 - lambda_a.begin())
             + 1;
    };
    auto const& g = s.group();
    for (auto const& x : a) {
      if (x.i == i) {
        aut.edges.push_back({aut.initial(), x.g, state(x.lambda)});
      }
    }
    for (auto mu : lambda_a) {
      for (auto const& x : a) {
        aut.edges.push_back({state(mu),
                             g.product(s.sandwich(mu, x.i), x.g),
                             state(x.lambda)});
      }
    }
    aut.edges.push_back(
        {state(lambda), s.sandwich(lambda, i), aut.terminal()});
    aut.edges = detail::sorted_unique(std::move(aut.edges));
    return aut;
  }

  //! The set of products of labels of successful paths, by a search over
  //! (state, group element) pairs.
  inline Subgroup language(ReesStructure const& s, GAutomaton const& aut) {
    auto const&                    g = s.group();
    std::vector<std::vector<bool>> seen(aut.num_states(),
                                        std::vector<bool>(g.order(), false));
    std::vector<std::pair<std::size_t, element_type>> queue{
        {aut.initial(), g.identity()}};
    seen[aut.initial()][g.identity()] = true;
    for (std::size_t n = 0; n < queue.size(); ++n) {
      auto [q, x] = queue[n];
      for (auto const& e : aut.edges) {
        if (e.source == q) {
          auto y = g.product(x, e.label);
          if (!seen[e.target][y]) {
            seen[e.target][y] = true;
            queue.emplace_back(e.target, y);
          }
        }
      }
    }
    std::vector<element_type> labels;
    for (element_type x = 0; x < g.order(); ++x) {
      if (seen[aut.terminal()][x]) {
        labels.push_back(x);
      }
    }
    return Subgroup::checked(g, labels);
  }

  //! Products of labels of successful paths with at most max_edges edges.
  inline std::set<element_type> path_labels(ReesStructure const& s,
                                            GAutomaton const&    aut,
                                            std::size_t          max_edges) {
    auto const&                                 g = s.group();
    std::set<std::pair<std::size_t, element_type>> level{
        {aut.initial(), g.identity()}};
    std::set<element_type> out;
    for (std::size_t k = 0; k < max_edges; ++k) {
      std::set<std::pair<std::size_t, element_type>> next;
      for (auto const& [q, x] : level) {
        for (auto const& e : aut.edges) {
          if (e.source == q) {
            next.emplace(e.target, g.product(x, e.label));
          }
        }
      }
      for (auto const& [q, x] : next) {
        if (q == aut.terminal()) {
          out.insert(x);
        }
      }
      level = std::move(next);
    }
    return out;
  }

  struct RankBoundReport {
    std::size_t rk_cs        = 0;
    std::size_t rk_component = 0;
    bool        bound_holds  = false;
  };

  //! rk_CS(T) for T = ⟨a⟩, by exhaustive search over subsets of T in size
  //! order. Throws if |T| > max_size or the rank exceeds max_rank.
  inline std::size_t rk_cs(ReesStructure const&            s,
                           std::vector<ReesElement> const& a,
                           std::size_t                     max_size = 64,
                           std::size_t                     max_rank = 4) {
    auto t = closure(s, a);
    if (t.elements.size() > max_size) {
      detail::fail("rk_cs: |T| = ", t.elements.size(), " exceeds the cap ",
                   max_size);
    }
    // The deduplicated generators always work, so the search stops there.
    std::size_t const upper = t.generators.size();
    for (std::size_t k = 1; k < upper; ++k) {
      if (k > max_rank) {
        detail::fail("rk_cs: rank exceeds the cap ", max_rank);
      }
      bool found = detail::any_subset(
          t.elements.size(), k, [&](std::vector<std::size_t> const& idx) {
            std::vector<ReesElement> b;
            for (auto j : idx) {
              b.push_back(t.elements[j]);
            }
            return closure(s, b).elements.size() == t.elements.size();
          });
      if (found) {
        return k;
      }
    }
    return upper;
  }

  //! Compares rk_G(T^(iλ)) with rk_CS(T)² + 1 for T = ⟨a⟩.
  inline RankBoundReport rank_bound_check(ReesStructure const&            s,
                                          std::vector<ReesElement> const& a,
                                          std::size_t                     i,
                                          std::size_t lambda) {
    auto            t = closure(s, a);
    RankBoundReport r;
    r.rk_cs = rk_cs(s, a);
    r.rk_component
        = min_rank(s.group(), component_iso(s, t, i, lambda), 64);
    r.bound_holds = r.rk_component <= r.rk_cs * r.rk_cs + 1;
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  //! Checks that phi (indexed by s.index) is a total homomorphism; throws
  //! naming the first violating pair otherwise.
  inline void validate_endo(ReesStructure const& s, self_map_type const& phi) {
    if (phi.size() != s.size()) {
      detail::fail("endomorphism must map all ", s.size(),
                   " elements, got ", phi.size());
    }
    for (auto y : phi) {
      if (y >= s.size()) {
        detail::fail("endomorphism image ", y, " out of range");
      }
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      for (std::size_t y = 0; y < s.size(); ++y) {
        auto xy = s.index(s.multiply(s.element(x), s.element(y)));
        if (phi[xy]
            != s.index(s.multiply(s.element(phi[x]), s.element(phi[y])))) {
          detail::fail("not a homomorphism at pair (", x, ",", y, ")");
        }
      }
    }
  }

  //! Extends generator images to a total map and validates it. Throws if
  //! the generators do not generate s or the extension is inconsistent.
  inline self_map_type extend_endo(ReesStructure const&            s,
                                   std::vector<ReesElement> const& gens,
                                   std::vector<ReesElement> const& images) {
    if (gens.size() != images.size() || gens.empty()) {
      detail::fail("extend_endo: need one image per generator");
    }
    std::size_t const        none = s.size();
    self_map_type            phi(s.size(), none);
    std::vector<std::size_t> found;
    auto set = [&](std::size_t x, std::size_t y) {
      if (phi[x] == none) {
        phi[x] = y;
        found.push_back(x);
      } else if (phi[x] != y) {
        detail::fail("extend_endo: inconsistent images at element ", x);
      }
    };
    for (std::size_t k = 0; k < gens.size(); ++k) {
      set(s.index(gens[k]), s.index(images[k]));
    }
    auto mul = [&](std::size_t x, std::size_t y) {
      return s.index(s.multiply(s.element(x), s.element(y)));
    };
    auto un = [&](std::size_t x) { return s.index(s.unary(s.element(x))); };
    for (std::size_t n = 0; n < found.size(); ++n) {
      set(un(found[n]), un(phi[found[n]]));
      for (std::size_t m = 0; m <= n; ++m) {
        auto a = found[n], b = found[m];
        set(mul(a, b), mul(phi[a], phi[b]));
        set(mul(b, a), mul(phi[b], phi[a]));
      }
    }
    if (found.size() != s.size()) {
      detail::fail("extend_endo: generators do not generate the semigroup");
    }
    validate_endo(s, phi);
    return phi;
  }

  struct ReesFixReport {
    std::vector<ReesElement> fixed;
    //! The fixed points in each H-class {i} × G × {λ} that meets Fix.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<ReesElement>>
        by_class;
  };

  inline ReesFixReport fix(ReesStructure const& s, self_map_type const& phi) {
    validate_endo(s, phi);
    ReesFixReport report;
    for (auto x : fixed_points(phi)) {
      auto e = s.element(x);
      report.fixed.push_back(e);
      report.by_class[{e.i, e.lambda}].push_back(e);
    }
    return report;
  }

  struct ReesPerReport {
    std::size_t              k = 1;
    std::vector<ReesElement> periodic;
    std::uint64_t            R = 1;
  };

  inline ReesPerReport per(ReesStructure const& s, self_map_type const& phi) {
    validate_endo(s, phi);
    auto          dyn = periodic_report(phi);
    ReesPerReport report;
    report.k = dyn.k;
    report.R = dyn.R;
    for (auto x : dyn.periodic) {
      report.periodic.push_back(s.element(x));
    }
    return report;
  }

}  // namespace takahasi

#endif  // TAKAHASI_REES_HPP_
