// Finite groups given by multiplication tables.

#ifndef TAKAHASI_GROUPS_HPP_
#define TAKAHASI_GROUPS_HPP_

#include <algorithm>  // for sort, next_permutation, all_of
#include <cstddef>    // for size_t
#include <numeric>    // for iota
#include <optional>   // for optional
#include <string>     // for string, stoul
#include <utility>    // for move
#include <vector>     // for vector

#include "exception.hpp"  // for TakahasiError

namespace takahasi {

  using element_type = std::size_t;
  using table_type   = std::vector<std::vector<element_type>>;

  //! A finite group with elements 0, ..., n - 1.
  class FiniteGroup {
   public:
    //! Validates the table: square, entries in range, two-sided identity,
    //! two-sided inverses and, when n <= 64, associativity.
    explicit FiniteGroup(table_type table) : _table(std::move(table)) {
      std::size_t const n = _table.size();
      if (n == 0) {
        detail::fail("FiniteGroup: empty table");
      }
      for (auto const& row : _table) {
        if (row.size() != n) {
          detail::fail("FiniteGroup: table is not square");
        }
        for (auto x : row) {
          if (x >= n) {
            detail::fail("FiniteGroup: entry ", x, " out of range");
          }
        }
      }
      std::optional<element_type> e;
      for (element_type x = 0; x < n && !e; ++x) {
        bool ok = true;
        for (element_type y = 0; y < n && ok; ++y) {
          ok = _table[x][y] == y && _table[y][x] == y;
        }
        if (ok) {
          e = x;
        }
      }
      if (!e) {
        detail::fail("FiniteGroup: no identity element");
      }
      _identity = *e;
      _inverse.assign(n, n);
      for (element_type x = 0; x < n; ++x) {
        for (element_type y = 0; y < n; ++y) {
          if (_table[x][y] == _identity && _table[y][x] == _identity) {
            _inverse[x] = y;
            break;
          }
        }
        if (_inverse[x] == n) {
          detail::fail("FiniteGroup: element ", x, " has no inverse");
        }
      }
      if (n <= 64) {
        for (element_type x = 0; x < n; ++x) {
          for (element_type y = 0; y < n; ++y) {
            for (element_type z = 0; z < n; ++z) {
              if (_table[_table[x][y]][z] != _table[x][_table[y][z]]) {
                detail::fail("FiniteGroup: not associative at (",
                             x, ",", y, ",", z, ")");
              }
            }
          }
        }
      }
    }

    std::size_t order() const noexcept {
      return _table.size();
    }

    element_type identity() const noexcept {
      return _identity;
    }

    element_type product(element_type x, element_type y) const {
      return _table[x][y];
    }

    element_type inverse(element_type x) const {
      return _inverse[x];
    }

    element_type power(element_type x, std::size_t k) const {
      element_type result = _identity;
      for (std::size_t i = 0; i < k; ++i) {
        result = product(result, x);
      }
      return result;
    }

    std::size_t element_order(element_type x) const {
      std::size_t  k = 1;
      element_type y = x;
      while (y != _identity) {
        y = product(y, x);
        ++k;
      }
      return k;
    }

    table_type const& table() const noexcept {
      return _table;
    }

    bool operator==(FiniteGroup const& that) const {
      return _table == that._table;
    }

    ////////////////////////////////////////////////////////////////////////
    // Constructors
    ////////////////////////////////////////////////////////////////////////

    //! Z/n with element k standing for k mod n.
    static FiniteGroup cyclic(std::size_t n) {
      if (n == 0) {
        detail::fail("cyclic: order must be positive");
      }
      table_type t(n, std::vector<element_type>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          t[x][y] = (x + y) % n;
        }
      }
      return FiniteGroup(std::move(t));
    }

    //! The dihedral group of order 2n: element r^k s^f is k + n f.
    static FiniteGroup dihedral(std::size_t n) {
      if (n == 0) {
        detail::fail("dihedral: n must be positive");
      }
      table_type t(2 * n, std::vector<element_type>(2 * n));
      for (std::size_t x = 0; x < 2 * n; ++x) {
        for (std::size_t y = 0; y < 2 * n; ++y) {
          std::size_t k1 = x % n, f1 = x / n, k2 = y % n, f2 = y / n;
          // r^k1 s^f1 r^k2 s^f2 = r^(k1 +- k2) s^(f1 + f2)
          std::size_t k = f1 == 0 ? (k1 + k2) % n : (k1 + n - k2) % n;
          t[x][y]       = k + n * ((f1 + f2) % 2);
        }
      }
      return FiniteGroup(std::move(t));
    }

    //! The symmetric group on n <= 4 points; elements are the permutations
    //! in lexicographic order, composed left to right.
    static FiniteGroup symmetric(std::size_t n) {
      if (n == 0 || n > 4) {
        detail::fail("symmetric: n must be in [1, 4], got ", n);
      }
      std::vector<std::vector<std::size_t>> perms;
      std::vector<std::size_t>              p(n);
      std::iota(p.begin(), p.end(), 0);
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      auto index = [&](std::vector<std::size_t> const& q) {
        return static_cast<element_type>(
            std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
      };
      table_type t(perms.size(), std::vector<element_type>(perms.size()));
      for (std::size_t x = 0; x < perms.size(); ++x) {
        for (std::size_t y = 0; y < perms.size(); ++y) {
          std::vector<std::size_t> q(n);
          for (std::size_t i = 0; i < n; ++i) {
            q[i] = perms[y][perms[x][i]];
          }
          t[x][y] = index(q);
        }
      }
      return FiniteGroup(std::move(t));
    }

    //! G x H with (g, h) stored as g * |H| + h.
    static FiniteGroup direct_product(FiniteGroup const& g,
                                      FiniteGroup const& h) {
      std::size_t const m = h.order(), n = g.order() * m;
      table_type        t(n, std::vector<element_type>(n));
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          t[x][y] = g.product(x / m, y / m) * m + h.product(x % m, y % m);
        }
      }
      return FiniteGroup(std::move(t));
    }

    //! Parses names such as "C6", "D4" (order 8), "S3", "C2xC2", "1".
    static FiniteGroup from_name(std::string const& name) {
      std::optional<FiniteGroup> result;
      std::size_t                start = 0;
      while (start <= name.size()) {
        auto end = name.find('x', start);
        if (end == std::string::npos) {
          end = name.size();
        }
        auto        part = name.substr(start, end - start);
        FiniteGroup factor = cyclic(1);
        if (part == "1") {
          factor = cyclic(1);
        } else if (part.size() >= 2
                   && std::all_of(part.begin() + 1, part.end(),
                                  [](char c) { return c >= '0' && c <= '9'; })) {
          auto k = std::stoul(part.substr(1));
          switch (part[0]) {
            case 'C':
              factor = cyclic(k);
              break;
            case 'D':
              factor = dihedral(k);
              break;
            case 'S':
              factor = symmetric(k);
              break;
            default:
              detail::fail("unknown group name \"", name, "\"");
          }
        } else {
          detail::fail("unknown group name \"", name, "\"");
        }
        result = result ? direct_product(*result, factor) : factor;
        start  = end + 1;
      }
      return *result;
    }

   private:
    table_type                _table;
    element_type              _identity = 0;
    std::vector<element_type> _inverse;
  };

  //! A subgroup of a finite group, as a sorted element list.
  class Subgroup {
   public:
    Subgroup() = default;

    std::vector<element_type> const& elements() const noexcept {
      return _elements;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    bool contains(element_type x) const {
      return std::binary_search(_elements.begin(), _elements.end(), x);
    }

    bool operator==(Subgroup const&) const = default;

    //! Validates that elements form a subgroup of g.
    static Subgroup checked(FiniteGroup const&        g,
                            std::vector<element_type> elements) {
      Subgroup h;
      std::sort(elements.begin(), elements.end());
      elements.erase(std::unique(elements.begin(), elements.end()),
                     elements.end());
      h._elements = std::move(elements);
      if (h._elements.empty() || h._elements.back() >= g.order()) {
        detail::fail("subgroup: empty or out of range element set");
      }
      for (auto x : h._elements) {
        if (!h.contains(g.inverse(x))) {
          detail::fail("subgroup: not closed under inverse at ", x);
        }
        for (auto y : h._elements) {
          if (!h.contains(g.product(x, y))) {
            detail::fail("subgroup: not closed at (", x, ",", y, ")");
          }
        }
      }
      return h;
    }

   private:
    friend Subgroup closure(FiniteGroup const&,
                            std::vector<element_type> const&);
    std::vector<element_type> _elements;
  };

  //! The subgroup generated by a; the trivial subgroup when a is empty.
  inline Subgroup closure(FiniteGroup const&               g,
                          std::vector<element_type> const& a) {
    std::vector<bool>         seen(g.order(), false);
    std::vector<element_type> found{g.identity()};
    seen[g.identity()] = true;
    for (auto x : a) {
      if (x >= g.order()) {
        detail::fail("closure: element ", x, " out of range");
      }
    }
    // In a finite group the submonoid generated by a is the subgroup.
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (auto x : a) {
        auto y = g.product(found[i], x);
        if (!seen[y]) {
          seen[y] = true;
          found.push_back(y);
        }
      }
    }
    Subgroup h;
    std::sort(found.begin(), found.end());
    h._elements = std::move(found);
    return h;
  }

  //! [G : H] for a validated subgroup H.
  inline std::size_t index(FiniteGroup const& g, Subgroup const& h) {
    return g.order() / h.size();
  }

  //! [G : H] for an element set, which must be a subgroup.
  inline std::size_t index(FiniteGroup const&               g,
                           std::vector<element_type> const& h) {
    return index(g, Subgroup::checked(g, h));
  }

  namespace detail {
    // Calls f on every k-subset of items (as index vectors); stops when f
    // returns true, and returns whether it did.
    template <typename F>
    bool any_subset(std::size_t n, std::size_t k, F&& f) {
      if (k > n) {
        return false;
      }
      std::vector<std::size_t> idx(k);
      std::iota(idx.begin(), idx.end(), 0);
      while (true) {
        if (f(static_cast<std::vector<std::size_t> const&>(idx))) {
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
  }  // namespace detail

  //! The least number of elements generating h. Throws if |h| > cap.
  inline std::size_t min_rank(FiniteGroup const& g,
                              Subgroup const&    h,
                              std::size_t        cap = 24) {
    if (h.size() > cap) {
      detail::fail("min_rank: subgroup of order ", h.size(),
                   " exceeds the cap ", cap,
                   "; use a rank bound instead or raise the cap");
    }
    if (h.size() == 1) {
      return 0;
    }
    std::vector<element_type> pool;
    for (auto x : h.elements()) {
      if (x != g.identity()) {
        pool.push_back(x);
      }
    }
    for (std::size_t k = 1;; ++k) {
      bool found = detail::any_subset(
          pool.size(), k, [&](std::vector<std::size_t> const& idx) {
            std::vector<element_type> a;
            for (auto i : idx) {
              a.push_back(pool[i]);
            }
            return closure(g, a).size() == h.size();
          });
      if (found) {
        return k;
      }
    }
  }

  inline std::size_t min_rank(FiniteGroup const& g, std::size_t cap = 24) {
    return min_rank(g, closure(g, [&] {
                      std::vector<element_type> all(g.order());
                      std::iota(all.begin(), all.end(), 0);
                      return all;
                    }()),
                    cap);
  }

  //! True iff f (indexed by elements of g) is a homomorphism g -> h.
  inline bool is_homomorphism(FiniteGroup const&               g,
                              FiniteGroup const&               h,
                              std::vector<element_type> const& f) {
    if (f.size() != g.order()) {
      return false;
    }
    for (auto y : f) {
      if (y >= h.order()) {
        return false;
      }
    }
    for (element_type x = 0; x < g.order(); ++x) {
      for (element_type y = 0; y < g.order(); ++y) {
        if (f[g.product(x, y)] != h.product(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Every homomorphism g -> h, as element maps.
  inline std::vector<std::vector<element_type>>
  homomorphisms(FiniteGroup const& g, FiniteGroup const& h) {
    // Greedy generating set: each new generator is outside the subgroup
    // generated so far.
    std::vector<element_type> gens;
    while (closure(g, gens).size() != g.order()) {
      auto sub = closure(g, gens);
      for (element_type x = 0; x < g.order(); ++x) {
        if (!sub.contains(x)) {
          gens.push_back(x);
          break;
        }
      }
    }
    std::vector<std::vector<element_type>> result;
    std::vector<element_type>              images(gens.size(), 0);
    while (true) {
      // Extend along words in the generators; reject on conflict.
      std::vector<element_type> f(g.order(), h.order());
      f[g.identity()] = h.identity();
      std::vector<element_type> queue{g.identity()};
      bool                      ok = true;
      for (std::size_t i = 0; i < queue.size() && ok; ++i) {
        for (std::size_t j = 0; j < gens.size() && ok; ++j) {
          auto x = g.product(queue[i], gens[j]);
          auto y = h.product(f[queue[i]], images[j]);
          if (f[x] == h.order()) {
            f[x] = y;
            queue.push_back(x);
          } else {
            ok = f[x] == y;
          }
        }
      }
      if (ok && is_homomorphism(g, h, f)) {
        result.push_back(std::move(f));
      }
      std::size_t j = 0;
      while (j < images.size() && ++images[j] == h.order()) {
        images[j++] = 0;
      }
      if (j == images.size()) {
        return result;
      }
    }
  }

}  // namespace takahasi

#endif  // TAKAHASI_GROUPS_HPP_
