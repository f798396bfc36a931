// Length-preserving string rewriting systems ordered by shortlex.

#ifndef TAKAHASI_REWRITING_HPP_
#define TAKAHASI_REWRITING_HPP_

#include <algorithm>  // for equal, search
#include <cstddef>    // for size_t
#include <utility>    // for move
#include <vector>     // for vector

#include "exception.hpp"  // for TakahasiError
#include "words.hpp"      // for word_type, ShortLexLess

namespace takahasi {

  struct Rule {
    word_type lhs;
    word_type rhs;
  };

  struct CriticalPair {
    word_type overlap;
    word_type left;   // the rewrite at the first rule
    word_type right;  // the rewrite at the second rule
    word_type left_normal_form;
    word_type right_normal_form;
    bool      joinable = false;
  };

  struct ConfluenceReport {
    std::vector<CriticalPair> pairs;
    bool                      confluent = true;
  };

  //! Rules l → r with |l| = |r| and r <_shortlex l. Every rewrite lowers a
  //! word in the shortlex order among words of one length, so rewriting
  //! terminates.
  class RewriteSystem {
   public:
    explicit RewriteSystem(std::vector<Rule> rules) : _rules(std::move(rules)) {
      for (std::size_t i = 0; i < _rules.size(); ++i) {
        auto const& [l, r] = _rules[i];
        if (l.empty()) {
          detail::fail("rule ", i, " has an empty left-hand side");
        }
        if (l.size() != r.size()) {
          detail::fail("rule ", i, " is not length-preserving");
        }
        if (!ShortLexLess()(r, l)) {
          detail::fail("rule ", i,
                       " does not decrease in the shortlex order");
        }
      }
    }

    //! {bb → aa, baa → aab} over a < b.
    static RewriteSystem a2_equals_b2() {
      return RewriteSystem({{{1, 1}, {0, 0}}, {{1, 0, 0}, {0, 0, 1}}});
    }

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    //! Rewrites at the leftmost match (first rule on ties) until no rule
    //! applies.
    word_type normal_form(word_type w) const {
      while (true) {
        bool changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
          for (auto const& [l, r] : _rules) {
            if (i + l.size() <= w.size()
                && std::equal(l.begin(), l.end(), w.begin() + i)) {
              std::copy(r.begin(), r.end(), w.begin() + i);
              changed = true;
              break;
            }
          }
        }
        if (!changed) {
          return w;
        }
      }
    }

    bool is_normal_form(word_type const& w) const {
      for (auto const& [l, r] : _rules) {
        if (std::search(w.begin(), w.end(), l.begin(), l.end()) != w.end()) {
          return false;
        }
      }
      return true;
    }

    //! Every overlap of two left-hand sides (a proper suffix of one equal
    //! to a proper prefix of the other, or one contained in the other),
    //! rewritten both ways and reduced to normal form.
    ConfluenceReport check_local_confluence() const {
      ConfluenceReport report;
      auto add = [&](word_type overlap, word_type left, word_type right) {
        CriticalPair cp{std::move(overlap), std::move(left), std::move(right),
                        {}, {}, false};
        cp.left_normal_form  = normal_form(cp.left);
        cp.right_normal_form = normal_form(cp.right);
        cp.joinable          = cp.left_normal_form == cp.right_normal_form;
        report.confluent     = report.confluent && cp.joinable;
        report.pairs.push_back(std::move(cp));
      };
      for (std::size_t i = 0; i < _rules.size(); ++i) {
        for (std::size_t j = 0; j < _rules.size(); ++j) {
          auto const& [li, ri] = _rules[i];
          auto const& [lj, rj] = _rules[j];
          for (std::size_t k = 1; k < li.size() && k < lj.size(); ++k) {
            if (!std::equal(li.end() - k, li.end(), lj.begin())) {
              continue;
            }
            word_type overlap = li;
            overlap.insert(overlap.end(), lj.begin() + k, lj.end());
            word_type left = ri;
            left.insert(left.end(), lj.begin() + k, lj.end());
            word_type right(li.begin(), li.end() - k);
            right.insert(right.end(), rj.begin(), rj.end());
            add(std::move(overlap), std::move(left), std::move(right));
          }
          if (i != j && lj.size() <= li.size()) {
            for (std::size_t s = 0; s + lj.size() <= li.size(); ++s) {
              if (!std::equal(lj.begin(), lj.end(), li.begin() + s)) {
                continue;
              }
              word_type right = li;
              std::copy(rj.begin(), rj.end(), right.begin() + s);
              add(li, ri, std::move(right));
            }
          }
        }
      }
      return report;
    }

   private:
    std::vector<Rule> _rules;
  };

}  // namespace takahasi

#endif  // TAKAHASI_REWRITING_HPP_
