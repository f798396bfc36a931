// Alphabets, words, formal inverses, free reduction and the shortlex order.
//
// Letters are small unsigned integers. Over a plain alphabet the letter of
// the i-th symbol is i. Over an involutive alphabet (A together with the
// formal inverses A^-1) the symbol i gives the letters 2i and 2i + 1, the
// latter being its formal inverse, so inversion is flipping the low bit.
// Textual names only appear in Alphabet::parse and Alphabet::print.

#ifndef TAKAHASI_WORDS_HPP_
#define TAKAHASI_WORDS_HPP_

#include <algorithm>      // for reverse, lexicographical_compare_three_way
#include <compare>        // for strong_ordering
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t
#include <memory>         // for shared_ptr
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <utility>        // for move
#include <vector>         // for vector

#include "exception.hpp"  // for TakahasiError

namespace takahasi {

  using letter_type = std::uint32_t;
  using word_type   = std::vector<letter_type>;

  ////////////////////////////////////////////////////////////////////////
  // Involutive letters
  ////////////////////////////////////////////////////////////////////////

  constexpr letter_type involutive_letter(letter_type symbol,
                                          bool        inverted) noexcept {
    return 2 * symbol + (inverted ? 1 : 0);
  }

  constexpr letter_type inverse_letter(letter_type x) noexcept {
    return x ^ 1U;
  }

  constexpr letter_type symbol_of(letter_type x) noexcept {
    return x >> 1;
  }

  constexpr bool is_inverted(letter_type x) noexcept {
    return (x & 1U) != 0;
  }

  //! A symbol of A or A^-1 in unpacked form.
  struct InvolutiveSymbol {
    letter_type symbol   = 0;
    bool        inverted = false;

    constexpr InvolutiveSymbol inverse() const noexcept {
      return {symbol, !inverted};
    }
    constexpr letter_type letter() const noexcept {
      return involutive_letter(symbol, inverted);
    }
    static constexpr InvolutiveSymbol from_letter(letter_type x) noexcept {
      return {symbol_of(x), is_inverted(x)};
    }
    constexpr bool operator==(InvolutiveSymbol const&) const = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  //! An ordered finite set of named symbols; the order defines shortlex.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names, bool involutive = false)
        : _names(std::move(names)), _involutive(involutive) {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        auto const& n = _names[i];
        if (n.empty()) {
          detail::fail("alphabet symbol ", i, " has an empty name");
        }
        for (char c : n) {
          if (c == '\'' || c == ' ' || c == '\t' || c == '\n') {
            detail::fail("invalid character in alphabet symbol \"", n, "\"");
          }
        }
        if (!_index.emplace(n, static_cast<letter_type>(i)).second) {
          detail::fail("duplicate alphabet symbol \"", n, "\"");
        }
        _single_char = _single_char && n.size() == 1;
      }
    }

    //! The symbols a, b, c, ... (at most 26).
    static Alphabet letters(std::size_t n, bool involutive = false) {
      if (n > 26) {
        detail::fail("Alphabet::letters supports at most 26 symbols, got ", n);
      }
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) {
        names.emplace_back(1, static_cast<char>('a' + i));
      }
      return Alphabet(std::move(names), involutive);
    }

    //! Number of symbols of A (not counting formal inverses).
    std::size_t size() const noexcept {
      return _names.size();
    }

    //! Number of distinct letters: |A|, or 2|A| when involutive.
    std::size_t letter_count() const noexcept {
      return _involutive ? 2 * _names.size() : _names.size();
    }

    bool involutive() const noexcept {
      return _involutive;
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    bool contains(letter_type x) const noexcept {
      return x < letter_count();
    }

    letter_type letter(std::string_view name, bool inverted = false) const {
      auto it = _index.find(std::string(name));
      if (it == _index.end()) {
        detail::fail("unknown symbol \"", name, "\"");
      }
      if (inverted && !_involutive) {
        detail::fail("formal inverse \"", name, "'\" used over a plain alphabet");
      }
      return _involutive ? involutive_letter(it->second, inverted) : it->second;
    }

    std::string name(letter_type x) const {
      if (!contains(x)) {
        detail::fail("letter ", x, " is not in the alphabet");
      }
      if (!_involutive) {
        return _names[x];
      }
      return _names[symbol_of(x)] + (is_inverted(x) ? "'" : "");
    }

    //! Parses whitespace-separated symbols, "'" marking a formal inverse.
    //! When every symbol name is one character, a token may also be a run of
    //! symbols ("cac"). The tokens "1" and "ε" (when not symbols) denote the
    //! empty word.
    word_type parse(std::string_view text) const {
      word_type   result;
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) {
          ++j;
        }
        if (j > i) {
          parse_token(text.substr(i, j - i), result);
        }
        i = j;
      }
      return result;
    }

    //! Whitespace-separated form; parse(print(w)) == w.
    std::string print(word_type const& w) const {
      std::string out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += name(w[i]);
      }
      return out;
    }

    //! Juxtaposed form for single-character alphabets ("cac"); "1" for the
    //! empty word. Falls back to print() otherwise.
    std::string print_compact(word_type const& w) const {
      if (!_single_char) {
        return print(w);
      }
      if (w.empty()) {
        return "1";
      }
      std::string out;
      for (auto x : w) {
        out += name(x);
      }
      return out;
    }

    bool operator==(Alphabet const& that) const {
      return _names == that._names && _involutive == that._involutive;
    }

   private:
    static bool is_space(char c) noexcept {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    }

    void parse_token(std::string_view tok, word_type& out) const {
      bool        inverted = false;
      std::string base(tok);
      if (base.size() > 1 && base.back() == '\'') {
        inverted = true;
        base.pop_back();
      }
      if (_index.count(base) != 0) {
        out.push_back(letter(base, inverted));
        return;
      }
      if (tok == "1" || tok == "\xCE\xB5") {
        return;
      }
      if (!_single_char) {
        detail::fail("unknown symbol \"", tok, "\"");
      }
      for (std::size_t k = 0; k < tok.size(); ++k) {
        bool inv = k + 1 < tok.size() && tok[k + 1] == '\'';
        out.push_back(letter(std::string_view(&tok[k], 1), inv));
        if (inv) {
          ++k;
        }
      }
    }

    std::vector<std::string>                     _names;
    std::unordered_map<std::string, letter_type> _index;
    bool                                         _involutive  = false;
    bool                                         _single_char = true;
  };

  ////////////////////////////////////////////////////////////////////////
  // Operations on raw words
  ////////////////////////////////////////////////////////////////////////

  //! Deletes adjacent pairs x x^-1 until none remain. Involutive letters.
  inline word_type free_reduce(word_type const& w) {
    word_type out;
    out.reserve(w.size());
    for (auto x : w) {
      if (!out.empty() && out.back() == inverse_letter(x)) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  inline bool is_freely_reduced(word_type const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == inverse_letter(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  //! Formal inverse: reversed, every letter inverted. Does not reduce.
  inline word_type invert(word_type const& w) {
    word_type out(w.rbegin(), w.rend());
    for (auto& x : out) {
      x = inverse_letter(x);
    }
    return out;
  }

  //! Shorter words first, then lexicographic by letter order.
  inline std::strong_ordering shortlex_compare(word_type const& u,
                                               word_type const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() <=> v.size();
    }
    return std::lexicographical_compare_three_way(
        u.begin(), u.end(), v.begin(), v.end());
  }

  struct ShortLexLess {
    bool operator()(word_type const& u, word_type const& v) const noexcept {
      return shortlex_compare(u, v) < 0;
    }
  };

  inline word_type concat(word_type const& u, word_type const& v) {
    word_type out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  inline word_type power(word_type const& w, std::size_t n) {
    word_type out;
    out.reserve(w.size() * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.insert(out.end(), w.begin(), w.end());
    }
    return out;
  }

  struct WordHash {
    std::size_t operator()(word_type const& w) const noexcept {
      std::size_t h = 0xcbf29ce484222325ULL;
      for (auto x : w) {
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h ^ w.size();
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Word: letters bound to an alphabet
  ////////////////////////////////////////////////////////////////////////

  //! A word that remembers its alphabet, for use at API boundaries where
  //! words over different alphabets must not be mixed.
  class Word {
   public:
    Word(std::shared_ptr<Alphabet const> alphabet, word_type letters)
        : _alphabet(std::move(alphabet)), _letters(std::move(letters)) {
      if (_alphabet == nullptr) {
        detail::fail("Word requires an alphabet");
      }
      for (auto x : _letters) {
        if (!_alphabet->contains(x)) {
          detail::fail("letter ", x, " is not in the alphabet");
        }
      }
    }

    static Word parse(std::shared_ptr<Alphabet const> alphabet,
                      std::string_view                text) {
      auto letters = alphabet->parse(text);
      return Word(std::move(alphabet), std::move(letters));
    }

    Alphabet const& alphabet() const noexcept {
      return *_alphabet;
    }
    std::shared_ptr<Alphabet const> const& alphabet_ptr() const noexcept {
      return _alphabet;
    }
    word_type const& letters() const noexcept {
      return _letters;
    }
    std::size_t length() const noexcept {
      return _letters.size();
    }
    std::string str() const {
      return _alphabet->print(_letters);
    }

    Word reduced() const {
      require_involutive();
      return Word(_alphabet, free_reduce(_letters));
    }
    Word inverse() const {
      require_involutive();
      return Word(_alphabet, invert(_letters));
    }

    bool operator==(Word const& that) const {
      return same_alphabet(that) && _letters == that._letters;
    }

    bool same_alphabet(Word const& that) const {
      return _alphabet == that._alphabet || *_alphabet == *that._alphabet;
    }

   private:
    void require_involutive() const {
      if (!_alphabet->involutive()) {
        detail::fail("formal inversion needs an involutive alphabet");
      }
    }

    std::shared_ptr<Alphabet const> _alphabet;
    word_type                       _letters;
  };

  //! Shortlex comparison; throws if the alphabets differ.
  inline std::strong_ordering shortlex_cmp(Word const& u, Word const& v) {
    if (!u.same_alphabet(v)) {
      detail::fail("shortlex_cmp: words over different alphabets");
    }
    return shortlex_compare(u.letters(), v.letters());
  }

}  // namespace takahasi

#endif  // TAKAHASI_WORDS_HPP_
