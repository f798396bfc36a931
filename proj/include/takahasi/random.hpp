// Deterministic, platform-independent pseudo-random numbers.
//
// std::uniform_int_distribution is implementation defined, so sweeps that
// must be reproducible bit-for-bit draw through this instead.

#ifndef TAKAHASI_RANDOM_HPP_
#define TAKAHASI_RANDOM_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for uint64_t
#include <utility>  // for swap
#include <vector>   // for vector

namespace takahasi {

  //! SplitMix64 generator. split() derives an independent child stream, so
  //! per-instance generators do not depend on iteration order.
  class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed = 0) : _state(seed) {}

    std::uint64_t operator()() noexcept {
      std::uint64_t z = (_state += 0x9E3779B97F4A7C15ULL);
      z               = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
      z               = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
      return z ^ (z >> 31);
    }

    static constexpr result_type min() noexcept {
      return 0;
    }
    static constexpr result_type max() noexcept {
      return ~result_type(0);
    }

    //! Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) noexcept {
      // Lemire-style rejection keeps the draw unbiased.
      std::uint64_t const threshold = (0 - n) % n;
      std::uint64_t       x;
      do {
        x = (*this)();
      } while (x < threshold);
      return x % n;
    }

    //! Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) noexcept {
      return lo + static_cast<std::int64_t>(
                 below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    bool coin() noexcept {
      return ((*this)() >> 63) != 0;
    }

    SplitMix64 split() noexcept {
      return SplitMix64((*this)() ^ 0xD1B54A32D192ED03ULL);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) noexcept {
      for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[below(i)]);
      }
    }

   private:
    std::uint64_t _state;
  };

}  // namespace takahasi

#endif  // TAKAHASI_RANDOM_HPP_
