// Clifford semigroups as strong semilattices of finite groups.

#ifndef TAKAHASI_CLIFFORD_HPP_
#define TAKAHASI_CLIFFORD_HPP_

#include <algorithm>  // for sort, binary_search, max
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <map>        // for map
#include <numeric>    // for iota
#include <optional>   // for optional
#include <set>        // for set
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "dynamics.hpp"   // for self_map_type, periodic_report
#include "exception.hpp"  // for TakahasiError
#include "groups.hpp"     // for FiniteGroup, Subgroup, min_rank
#include "random.hpp"     // for SplitMix64

namespace takahasi {

  //! An element (α, g) with g in the group G_α.
  struct CliffordElement {
    std::size_t  alpha = 0;
    element_type g     = 0;
    auto         operator<=>(CliffordElement const&) const = default;
  };

  //! A link φ_{α,β}: G_α -> G_β for α >= β, as an element map.
  struct Link {
    std::size_t               from = 0;
    std::size_t               to   = 0;
    std::vector<element_type> map;
  };

  //! A strong semilattice of groups. The semilattice Y = {0, ..., k - 1}
  //! is given by its meet table; α >= β means α ∧ β = β.
  class SemilatticeOfGroups {
   public:
    //! Links may be given for any set of pairs α > β that connects every
    //! comparable pair through a chain; the remaining links are composed,
    //! and every composite is checked for consistency.
    SemilatticeOfGroups(table_type               meet,
                        std::vector<FiniteGroup> groups,
                        std::vector<Link> const& links)
        : _meet(std::move(meet)), _groups(std::move(groups)) {
      std::size_t const k = _meet.size();
      if (k == 0 || _groups.size() != k) {
        detail::fail("semilattice needs one group per element, got ", k,
                     " elements and ", _groups.size(), " groups");
      }
      for (auto const& row : _meet) {
        if (row.size() != k) {
          detail::fail("meet table is not square");
        }
        for (auto x : row) {
          if (x >= k) {
            detail::fail("meet table entry ", x, " out of range");
          }
        }
      }
      for (std::size_t a = 0; a < k; ++a) {
        if (_meet[a][a] != a) {
          detail::fail("meet is not idempotent at ", a);
        }
        for (std::size_t b = 0; b < k; ++b) {
          if (_meet[a][b] != _meet[b][a]) {
            detail::fail("meet is not commutative at (", a, ",", b, ")");
          }
          for (std::size_t c = 0; c < k; ++c) {
            if (_meet[_meet[a][b]][c] != _meet[a][_meet[b][c]]) {
              detail::fail("meet is not associative at (", a, ",", b, ",",
                           c, ")");
            }
          }
        }
      }
      _links.assign(k, std::vector<std::vector<element_type>>(k));
      for (std::size_t a = 0; a < k; ++a) {
        _links[a][a].resize(_groups[a].order());
        std::iota(_links[a][a].begin(), _links[a][a].end(), 0);
      }
      for (auto const& l : links) {
        if (l.from >= k || l.to >= k || !geq(l.from, l.to)) {
          detail::fail("link (", l.from, ",", l.to,
                       ") does not go down the semilattice");
        }
        if (!is_homomorphism(_groups[l.from], _groups[l.to], l.map)) {
          detail::fail("link (", l.from, ",", l.to,
                       ") is not a group homomorphism");
        }
        if (l.from == l.to) {
          if (l.map != _links[l.from][l.from]) {
            detail::fail("link (", l.from, ",", l.from,
                         ") must be the identity");
          }
          continue;
        }
        if (!_links[l.from][l.to].empty() && _links[l.from][l.to] != l.map) {
          detail::fail("link (", l.from, ",", l.to, ") given twice");
        }
        _links[l.from][l.to] = l.map;
      }
      // Compose along chains until nothing changes, checking consistency.
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) {
            if (_links[a][b].empty()) {
              continue;
            }
            for (std::size_t c = 0; c < k; ++c) {
              if (_links[b][c].empty()) {
                continue;
              }
              std::vector<element_type> composite(_groups[a].order());
              for (element_type g = 0; g < composite.size(); ++g) {
                composite[g] = _links[b][c][_links[a][b][g]];
              }
              if (_links[a][c].empty()) {
                _links[a][c] = std::move(composite);
                changed      = true;
              } else if (_links[a][c] != composite) {
                detail::fail("links do not compose: (", a, ",", b,
                             ") then (", b, ",", c, ") differs from (", a,
                             ",", c, ")");
              }
            }
          }
        }
      }
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
          if (geq(a, b) && _links[a][b].empty()) {
            detail::fail("missing link (", a, ",", b, ")");
          }
        }
      }
      _offset.push_back(0);
      for (auto const& g : _groups) {
        _offset.push_back(_offset.back() + g.order());
      }
    }

    std::size_t semilattice_size() const noexcept {
      return _meet.size();
    }

    std::size_t meet(std::size_t a, std::size_t b) const {
      return _meet[a][b];
    }

    table_type const& meet_table() const noexcept {
      return _meet;
    }

    //! α >= β in Y.
    bool geq(std::size_t a, std::size_t b) const {
      return _meet[a][b] == b;
    }

    FiniteGroup const& group(std::size_t a) const {
      return _groups[a];
    }

    std::vector<FiniteGroup> const& groups() const noexcept {
      return _groups;
    }

    //! φ_{α,β} for α >= β.
    std::vector<element_type> const& link(std::size_t a, std::size_t b) const {
      if (!geq(a, b)) {
        detail::fail("no link from ", a, " to ", b);
      }
      return _links[a][b];
    }

    std::size_t size() const noexcept {
      return _offset.back();
    }

    std::size_t index(CliffordElement const& x) const {
      validate(x);
      return _offset[x.alpha] + x.g;
    }

    CliffordElement element(std::size_t k) const {
      auto a = static_cast<std::size_t>(
                   std::upper_bound(_offset.begin(), _offset.end(), k)
                   - _offset.begin())
               - 1;
      return {a, k - _offset[a]};
    }

    void validate(CliffordElement const& x) const {
      if (x.alpha >= _groups.size() || x.g >= _groups[x.alpha].order()) {
        detail::fail("(", x.alpha, ",", x.g,
                     ") is not an element of the Clifford semigroup");
      }
    }

    //! (α, g)(β, h) = (α∧β, (g)φ_{α,α∧β} (h)φ_{β,α∧β}).
    CliffordElement multiply(CliffordElement const& x,
                             CliffordElement const& y) const {
      auto c = _meet[x.alpha][y.alpha];
      return {c,
              _groups[c].product(_links[x.alpha][c][x.g],
                                 _links[y.alpha][c][y.g])};
    }

    CliffordElement inverse(CliffordElement const& x) const {
      return {x.alpha, _groups[x.alpha].inverse(x.g)};
    }

    CliffordElement identity(std::size_t a) const {
      return {a, _groups[a].identity()};
    }

    table_type table() const {
      table_type t(size(), std::vector<element_type>(size()));
      for (std::size_t x = 0; x < size(); ++x) {
        for (std::size_t y = 0; y < size(); ++y) {
          t[x][y] = index(multiply(element(x), element(y)));
        }
      }
      return t;
    }

    std::vector<CliffordElement> elements() const {
      std::vector<CliffordElement> out;
      for (std::size_t k = 0; k < size(); ++k) {
        out.push_back(element(k));
      }
      return out;
    }

   private:
    table_type                                          _meet;
    std::vector<FiniteGroup>                            _groups;
    std::vector<std::vector<std::vector<element_type>>> _links;
    std::vector<std::size_t>                            _offset;
  };

  //! The least subset containing a closed under multiply and inverse.
  inline std::vector<CliffordElement>
  closure(SemilatticeOfGroups const& s, std::vector<CliffordElement> const& a) {
    if (a.empty()) {
      detail::fail("closure: generator list must be nonempty");
    }
    std::vector<bool>            seen(s.size(), false);
    std::vector<CliffordElement> found;
    auto                         add = [&](CliffordElement const& x) {
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
      add(s.inverse(found[n]));
      for (std::size_t m = 0; m <= n; ++m) {
        add(s.multiply(found[n], found[m]));
        add(s.multiply(found[m], found[n]));
      }
    }
    std::sort(found.begin(), found.end());
    return found;
  }

  namespace detail {
    inline std::vector<CliffordElement>
    sorted_subset(SemilatticeOfGroups const&          s,
                  std::vector<CliffordElement> const& t) {
      auto out = t;
      for (auto const& x : out) {
        s.validate(x);
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    inline bool has(std::vector<CliffordElement> const& t,
                    CliffordElement const&              x) {
      return std::binary_search(t.begin(), t.end(), x);
    }

    inline void check_subalgebra(SemilatticeOfGroups const&          s,
                                 std::vector<CliffordElement> const& t) {
      for (auto const& x : t) {
        if (!has(t, s.inverse(x))) {
          detail::fail("T is not closed under inversion at (", x.alpha, ",",
                       x.g, ")");
        }
        for (auto const& y : t) {
          if (!has(t, s.multiply(x, y))) {
            detail::fail("T is not closed under multiplication");
          }
        }
      }
    }
  }  // namespace detail

  struct IndexReport {
    //! [H_α : H_α ∩ T] for each α, with [G : ∅] = |G|.
    std::vector<std::size_t> class_indices;
    std::size_t              sup      = 0;
    //! Always false for finite groups; kept so reports have a fixed shape.
    bool                     infinite = false;
  };

  //! [S : T] = sup of the per-class indices. Throws if T is not a
  //! (2,1)-subalgebra.
  inline IndexReport index(SemilatticeOfGroups const&          s,
                           std::vector<CliffordElement> const& t_in) {
    auto t = detail::sorted_subset(s, t_in);
    detail::check_subalgebra(s, t);
    IndexReport report;
    for (std::size_t a = 0; a < s.semilattice_size(); ++a) {
      std::size_t meet_size = 0;
      for (auto const& x : t) {
        meet_size += x.alpha == a;
      }
      auto idx = meet_size == 0 ? s.group(a).order()
                                : s.group(a).order() / meet_size;
      report.class_indices.push_back(idx);
      report.sup = std::max(report.sup, idx);
    }
    return report;
  }

  struct GreenIndexReport {
    //! Number of H^T-classes contained in S \ T, plus one.
    std::size_t green_index = 1;
    //! |S / H^T|.
    std::size_t num_classes = 0;
    //! H^T-class of each element, by index.
    std::vector<std::size_t> classes;
  };

  //! The Green index from L^T (T¹a = T¹b) and R^T (aT¹ = bT¹).
  inline GreenIndexReport green_index(SemilatticeOfGroups const&          s,
                                      std::vector<CliffordElement> const& t_in) {
    auto t = detail::sorted_subset(s, t_in);
    using key_type
        = std::pair<std::set<std::size_t>, std::set<std::size_t>>;
    std::map<key_type, std::size_t> ids;
    std::set<std::size_t>           outside;
    GreenIndexReport                report;
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto     a = s.element(k);
      key_type key;
      key.first.insert(k);
      key.second.insert(k);
      for (auto const& x : t) {
        key.first.insert(s.index(s.multiply(x, a)));
        key.second.insert(s.index(s.multiply(a, x)));
      }
      auto id = ids.emplace(std::move(key), ids.size()).first->second;
      report.classes.push_back(id);
      if (!detail::has(t, a)) {
        outside.insert(id);
      }
    }
    report.num_classes = ids.size();
    report.green_index = outside.size() + 1;
    return report;
  }

  //! rk_C(T): the least size of a subset of T whose closure is T. Throws
  //! if |T| > max_size or the rank exceeds max_rank.
  inline std::size_t rk_c(SemilatticeOfGroups const&          s,
                          std::vector<CliffordElement> const& t_in,
                          std::size_t                         max_size = 64,
                          std::size_t                         max_rank = 4) {
    auto t = detail::sorted_subset(s, t_in);
    if (t.empty()) {
      return 0;
    }
    if (t.size() > max_size) {
      detail::fail("rk_c: |T| = ", t.size(), " exceeds the cap ", max_size);
    }
    for (std::size_t k = 1; k <= t.size(); ++k) {
      if (k > max_rank) {
        detail::fail("rk_c: rank exceeds the cap ", max_rank);
      }
      bool found = detail::any_subset(
          t.size(), k, [&](std::vector<std::size_t> const& idx) {
            std::vector<CliffordElement> b;
            for (auto j : idx) {
              b.push_back(t[j]);
            }
            return closure(s, b).size() == t.size();
          });
      if (found) {
        return k;
      }
    }
    return t.size();
  }

  struct RetractionReport {
    std::size_t rk_g          = 0;  // rk_G(T ∩ H)
    std::size_t rk_c          = 0;  // rk_C(T)
    bool        holds         = false;
    bool        onto_with_zero = false;  // T' ≠ T, so ψ maps onto (T∩H)⁰
  };

  //! Builds ψ: T -> T ∩ H_α (or (T ∩ H_α)⁰), t ↦ te on T' = {t : te ∈ H_α}
  //! and 0 elsewhere, checks it is a retraction of Clifford semigroups,
  //! and compares rk_G(T ∩ H_α) with rk_C(T).
  inline RetractionReport
  retraction_check(SemilatticeOfGroups const&          s,
                   std::vector<CliffordElement> const& t_in,
                   std::size_t                         alpha) {
    auto t = detail::sorted_subset(s, t_in);
    detail::check_subalgebra(s, t);
    if (alpha >= s.semilattice_size()) {
      detail::fail("retraction_check: no class ", alpha);
    }
    std::vector<element_type> meet;
    for (auto const& x : t) {
      if (x.alpha == alpha) {
        meet.push_back(x.g);
      }
    }
    if (meet.empty()) {
      detail::fail("retraction_check: T ∩ H is empty");
    }
    auto const e = s.identity(alpha);
    // ψ(t) or nullopt for 0.
    auto psi = [&](CliffordElement const& x) -> std::optional<CliffordElement> {
      auto xe = s.multiply(x, e);
      if (xe.alpha != alpha) {
        return std::nullopt;
      }
      return xe;
    };
    auto times = [&](std::optional<CliffordElement> const& x,
                     std::optional<CliffordElement> const& y)
        -> std::optional<CliffordElement> {
      if (!x || !y) {
        return std::nullopt;
      }
      return s.multiply(*x, *y);
    };
    RetractionReport report;
    for (auto const& x : t) {
      auto px = psi(x);
      if (!px) {
        report.onto_with_zero = true;
      } else if (!detail::has(t, *px)) {
        detail::fail("retraction_check: ψ leaves T");
      }
      if (x.alpha == alpha && px != x) {
        detail::fail("retraction_check: ψ does not fix T ∩ H");
      }
      auto pinv = psi(s.inverse(x));
      if (px.has_value() != pinv.has_value()
          || (px && s.inverse(*px) != *pinv)) {
        detail::fail("retraction_check: ψ does not preserve inverses");
      }
      for (auto const& y : t) {
        if (psi(s.multiply(x, y)) != times(px, psi(y))) {
          detail::fail("retraction_check: ψ is not a homomorphism");
        }
      }
    }
    auto const& g = s.group(alpha);
    report.rk_g   = min_rank(g, Subgroup::checked(g, meet), 64);
    report.rk_c   = rk_c(s, t);
    report.holds  = report.rk_g <= report.rk_c;
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  //! Checks that phi (indexed by s.index) is a total homomorphism; throws
  //! naming the first violating pair otherwise.
  inline void validate_endo(SemilatticeOfGroups const& s,
                            self_map_type const&       phi) {
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

  struct CliffordFixReport {
    std::vector<CliffordElement>                         fixed;
    std::map<std::size_t, std::vector<CliffordElement>> by_class;
  };

  inline CliffordFixReport fix(SemilatticeOfGroups const& s,
                               self_map_type const&       phi) {
    validate_endo(s, phi);
    CliffordFixReport report;
    for (auto x : fixed_points(phi)) {
      auto e = s.element(x);
      report.fixed.push_back(e);
      report.by_class[e.alpha].push_back(e);
    }
    return report;
  }

  struct CliffordPerReport {
    std::size_t                  k = 1;
    std::vector<CliffordElement> periodic;
    std::uint64_t                R = 1;
  };

  inline CliffordPerReport per(SemilatticeOfGroups const& s,
                               self_map_type const&       phi) {
    validate_endo(s, phi);
    auto              dyn = periodic_report(phi);
    CliffordPerReport report;
    report.k = dyn.k;
    report.R = dyn.R;
    for (auto x : dyn.periodic) {
      report.periodic.push_back(s.element(x));
    }
    return report;
  }

  //! The semilattice parts Y_n of the images Sφ^n, n = 0, 1, ..., up to
  //! the first repetition.
  inline std::vector<std::vector<std::size_t>>
  image_chain(SemilatticeOfGroups const& s, self_map_type const& phi) {
    validate_endo(s, phi);
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              image(s.size());
    std::iota(image.begin(), image.end(), 0);
    while (true) {
      std::set<std::size_t> ys;
      for (auto x : image) {
        ys.insert(s.element(x).alpha);
      }
      std::vector<std::size_t> y(ys.begin(), ys.end());
      if (!out.empty() && out.back() == y) {
        return out;
      }
      out.push_back(std::move(y));
      std::set<std::size_t> next;
      for (auto x : image) {
        next.insert(phi[x]);
      }
      image.assign(next.begin(), next.end());
    }
  }

  //! A chain Y = {0 < 1 < ... < k - 1} with the given groups and links
  //! from each level to the one below it.
  inline SemilatticeOfGroups
  chain_of_groups(std::vector<FiniteGroup>                      groups,
                  std::vector<std::vector<element_type>> const& down) {
    std::size_t const k = groups.size();
    if (down.size() + 1 != k) {
      detail::fail("chain_of_groups: need ", k - 1, " links, got ",
                   down.size());
    }
    table_type meet(k, std::vector<element_type>(k));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        meet[a][b] = std::min(a, b);
      }
    }
    std::vector<Link> links;
    for (std::size_t a = 1; a < k; ++a) {
      links.push_back({a, a - 1, down[a - 1]});
    }
    return SemilatticeOfGroups(std::move(meet), std::move(groups), links);
  }

  //! A random strong semilattice of groups of order <= max_order: a chain
  //! of two or three levels, or two incomparable levels over a bottom one.
  //! Links are drawn uniformly from all homomorphisms.
  inline SemilatticeOfGroups random_clifford(SplitMix64& rng,
                                             std::size_t levels,
                                             std::size_t max_order = 8) {
    static char const* const pool[]
        = {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C2xC2", "S3",
           "D4", "C2xC4", "C2xC2xC2"};
    std::vector<FiniteGroup> candidates;
    for (auto name : pool) {
      auto g = FiniteGroup::from_name(name);
      if (g.order() <= max_order) {
        candidates.push_back(std::move(g));
      }
    }
    auto pick = [&] { return candidates[rng.below(candidates.size())]; };
    auto hom  = [&](FiniteGroup const& from, FiniteGroup const& to) {
      auto all = homomorphisms(from, to);
      return all[rng.below(all.size())];
    };
    if (levels < 2 || levels > 3) {
      detail::fail("random_clifford: levels must be 2 or 3");
    }
    std::vector<FiniteGroup> groups;
    for (std::size_t a = 0; a < levels; ++a) {
      groups.push_back(pick());
    }
    if (levels == 3 && rng.coin()) {
      // 1 and 2 are incomparable with meet 0.
      table_type meet = {{0, 0, 0}, {0, 1, 0}, {0, 0, 2}};
      std::vector<Link> links = {{1, 0, hom(groups[1], groups[0])},
                                 {2, 0, hom(groups[2], groups[0])}};
      return SemilatticeOfGroups(std::move(meet), std::move(groups), links);
    }
    std::vector<std::vector<element_type>> down;
    for (std::size_t a = 1; a < levels; ++a) {
      down.push_back(hom(groups[a], groups[a - 1]));
    }
    return chain_of_groups(std::move(groups), down);
  }

}  // namespace takahasi

#endif  // TAKAHASI_CLIFFORD_HPP_
