// Fixed and periodic points of self-maps of finite sets.

#ifndef TAKAHASI_DYNAMICS_HPP_
#define TAKAHASI_DYNAMICS_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <numeric>  // for lcm, iota
#include <vector>   // for vector

namespace takahasi {

  //! A total map {0, ..., n - 1} -> {0, ..., n - 1}, x |-> map[x].
  using self_map_type = std::vector<std::size_t>;

  //! Composition "f then g".
  inline self_map_type then(self_map_type const& f, self_map_type const& g) {
    self_map_type h(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) {
      h[x] = g[f[x]];
    }
    return h;
  }

  //! f^e by repeated squaring.
  inline self_map_type map_power(self_map_type f, std::uint64_t e) {
    self_map_type result(f.size());
    std::iota(result.begin(), result.end(), 0);
    while (e > 0) {
      if (e & 1) {
        result = then(result, f);
      }
      f = then(f, f);
      e >>= 1;
    }
    return result;
  }

  inline std::vector<std::size_t> fixed_points(self_map_type const& f) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < f.size(); ++x) {
      if (f[x] == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  //! The least n >= 1 with x f^n = x, or 0 if x is not periodic.
  inline std::size_t period(self_map_type const& f, std::size_t x) {
    std::size_t y = f[x];
    for (std::size_t n = 1; n <= f.size(); ++n) {
      if (y == x) {
        return n;
      }
      y = f[y];
    }
    return 0;
  }

  struct PeriodicReport {
    //! Least k with Fix(f^{k!}) = Per(f).
    std::size_t              k = 1;
    std::vector<std::size_t> periodic;
    std::vector<std::size_t> periods;  // parallel to periodic
    //! lcm of the periods; 1 when Per(f) is empty.
    std::uint64_t            R = 1;
  };

  //! Per(f) from the cycles of f, the stabilization index k of the chain
  //! Fix(f^{1!}) ⊆ Fix(f^{2!}) ⊆ ..., and R = lcm of the periods.
  inline PeriodicReport periodic_report(self_map_type const& f) {
    PeriodicReport report;
    for (std::size_t x = 0; x < f.size(); ++x) {
      auto p = period(f, x);
      if (p != 0) {
        report.periodic.push_back(x);
        report.periods.push_back(p);
        report.R = std::lcm(report.R, static_cast<std::uint64_t>(p));
      }
    }
    // f^{k!} = (f^{(k-1)!})^k
    auto power = f;
    for (std::size_t k = 1;; ++k) {
      power = map_power(power, k);
      if (fixed_points(power) == report.periodic) {
        report.k = k;
        return report;
      }
    }
  }

}  // namespace takahasi

#endif  // TAKAHASI_DYNAMICS_HPP_
