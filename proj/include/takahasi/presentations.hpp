// Balanced finitely presented monoids and semigroups, their endomorphisms,
// and fixed and periodic points of those endomorphisms.
//
// A presentation is balanced when both sides of every relation have the
// same length. Congruence classes are then finite and consist of words of
// one length, so the word problem is solved by exhaustive search.

#ifndef TAKAHASI_PRESENTATIONS_HPP_
#define TAKAHASI_PRESENTATIONS_HPP_

#include <algorithm>      // for sort, all_of, next_permutation
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t, uint64_t
#include <limits>         // for numeric_limits
#include <numeric>        // for lcm, iota
#include <optional>       // for optional
#include <set>            // for set
#include <string>         // for string
#include <string_view>    // for string_view
#include <unordered_map>  // for unordered_map
#include <unordered_set>  // for unordered_set
#include <utility>        // for move, pair
#include <vector>         // for vector

#include "exception.hpp"  // for TakahasiError
#include "words.hpp"      // for Alphabet, word_type, WordHash

namespace takahasi {

  enum class Flavor { monoid, semigroup };

  using relation_type = std::pair<word_type, word_type>;

  namespace detail {
    //! Pieces of text between any of the characters in seps.
    inline std::vector<std::string_view> split(std::string_view text,
                                               std::string_view seps) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      while (true) {
        auto end = text.find_first_of(seps, start);
        out.push_back(text.substr(start, end - start));
        if (end == std::string_view::npos) {
          return out;
        }
        start = end + 1;
      }
    }

    inline std::string_view trim(std::string_view s) {
      auto const ws = " \t\r\n";
      auto       b  = s.find_first_not_of(ws);
      if (b == std::string_view::npos) {
        return {};
      }
      return s.substr(b, s.find_last_not_of(ws) - b + 1);
    }

    inline std::vector<std::string> tokens(std::string_view s) {
      std::vector<std::string> out;
      std::size_t              i = 0;
      while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) {
          ++i;
        }
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') {
          ++j;
        }
        if (j > i) {
          out.emplace_back(s.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace detail

  //! A presentation ⟨A | u_i = v_i⟩ with |u_i| = |v_i| for every i.
  class BalancedPresentation {
   public:
    BalancedPresentation(Alphabet                   alphabet,
                         std::vector<relation_type> relations,
                         Flavor                     flavor = Flavor::monoid)
        : _alphabet(std::move(alphabet)),
          _relations(std::move(relations)),
          _flavor(flavor) {
      if (_alphabet.involutive()) {
        detail::fail("presentations need a plain (non-involutive) alphabet");
      }
      if (_alphabet.size() == 0) {
        detail::fail("presentations need at least one letter");
      }
      for (std::size_t i = 0; i < _relations.size(); ++i) {
        auto const& [u, v] = _relations[i];
        if (u.size() != v.size()) {
          detail::fail("relation ", i, " is not balanced: lengths ", u.size(),
                       " and ", v.size());
        }
        if (_flavor == Flavor::semigroup && u.empty()) {
          detail::fail("relation ", i,
                       " uses the empty word in a semigroup presentation");
        }
        for (auto const* w : {&u, &v}) {
          for (auto x : *w) {
            if (x >= _alphabet.size()) {
              detail::fail("relation ", i, " uses letter ", x,
                           " outside the alphabet");
            }
          }
        }
        if (u != v) {
          _moves.emplace_back(u, v);
          _moves.emplace_back(v, u);
        }
      }
    }

    //! Parses "monoid a b c ; cac = cbc ; ..." (or "semigroup ..."); the
    //! first segment is the flavor followed by the generator names. A
    //! comma may be used in place of any semicolon.
    static BalancedPresentation parse(std::string_view text) {
      auto parts = detail::split(text, ";,");
      auto head  = detail::tokens(parts[0]);
      if (head.empty()
          || (head[0] != "monoid" && head[0] != "semigroup")) {
        detail::fail("presentation must start with \"monoid\" or "
                     "\"semigroup\"");
      }
      Flavor                   flavor = head[0] == "monoid" ? Flavor::monoid
                                                            : Flavor::semigroup;
      std::vector<std::string> names(head.begin() + 1, head.end());
      if (!names.empty() && names[0].front() == '<'
          && names[0].back() == '>') {
        if (names.size() > 1) {
          // "<A> a b c": the bracketed token only labels the list.
          names.erase(names.begin());
        } else {
          // "<abc>" lists single-character generators.
          auto inner = names[0].substr(1, names[0].size() - 2);
          names.clear();
          for (char c : inner) {
            names.emplace_back(1, c);
          }
        }
      }
      Alphabet                   alphabet(names);
      std::vector<relation_type> relations;
      for (std::size_t i = 1; i < parts.size(); ++i) {
        auto rel = detail::trim(parts[i]);
        if (rel.empty()) {
          continue;
        }
        auto sides = detail::split(rel, "=");
        if (sides.size() != 2) {
          detail::fail("relation \"", rel, "\" must have the form u = v");
        }
        relations.emplace_back(alphabet.parse(sides[0]),
                               alphabet.parse(sides[1]));
      }
      return BalancedPresentation(std::move(alphabet), std::move(relations),
                                  flavor);
    }

    std::string str() const {
      std::string out = _flavor == Flavor::monoid ? "monoid" : "semigroup";
      for (auto const& n : _alphabet.names()) {
        out += ' ' + n;
      }
      for (auto const& [u, v] : _relations) {
        out += " ; " + _alphabet.print_compact(u) + " = "
               + _alphabet.print_compact(v);
      }
      return out;
    }

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t num_letters() const noexcept {
      return _alphabet.size();
    }

    std::vector<relation_type> const& relations() const noexcept {
      return _relations;
    }

    Flavor flavor() const noexcept {
      return _flavor;
    }

    //! Every relation in both directions, trivial ones omitted.
    std::vector<relation_type> const& moves() const noexcept {
      return _moves;
    }

    void validate_word(word_type const& w) const {
      for (auto x : w) {
        if (x >= _alphabet.size()) {
          detail::fail("letter ", x, " is not in the alphabet");
        }
      }
      if (_flavor == Flavor::semigroup && w.empty()) {
        detail::fail("the empty word is not an element of a semigroup");
      }
    }

    word_type parse_word(std::string_view text) const {
      auto w = _alphabet.parse(text);
      validate_word(w);
      return w;
    }

    std::string print(word_type const& w) const {
      return _alphabet.print_compact(w);
    }

   private:
    Alphabet                   _alphabet;
    std::vector<relation_type> _relations;
    Flavor                     _flavor;
    std::vector<relation_type> _moves;
  };

  //! Every word obtained from w by applying relations in either direction
  //! at any position, sorted. Throws if more than cap words are found.
  inline std::vector<word_type>
  congruence_class(BalancedPresentation const& p,
                   word_type const&            w,
                   std::size_t                 cap = 1'000'000) {
    std::unordered_set<word_type, WordHash> seen{w};
    std::vector<word_type>                  queue{w};
    for (std::size_t n = 0; n < queue.size(); ++n) {
      auto const current = queue[n];
      for (auto const& [from, to] : p.moves()) {
        if (from.size() > current.size()) {
          continue;
        }
        for (std::size_t i = 0; i + from.size() <= current.size(); ++i) {
          if (!std::equal(from.begin(), from.end(), current.begin() + i)) {
            continue;
          }
          auto next = current;
          std::copy(to.begin(), to.end(), next.begin() + i);
          if (seen.insert(next).second) {
            if (seen.size() > cap) {
              detail::fail("congruence class exceeds the cap ", cap);
            }
            queue.push_back(std::move(next));
          }
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
  }

  //! The shortlex-least word of the class of w.
  inline word_type canonical(BalancedPresentation const& p,
                             word_type const&            w,
                             std::size_t                 cap = 1'000'000) {
    return congruence_class(p, w, cap).front();
  }

  inline bool equal(BalancedPresentation const& p,
                    word_type const&            u,
                    word_type const&            v,
                    std::size_t                 cap = 1'000'000) {
    return u.size() == v.size() && canonical(p, u, cap) == canonical(p, v, cap);
  }

  //! Canonical forms of every x with x >=_J w: all factors of all words in
  //! the class of w. Includes the empty word in the monoid flavor.
  inline std::vector<word_type> j_above(BalancedPresentation const& p,
                                        word_type const&            w,
                                        std::size_t cap = 1'000'000) {
    p.validate_word(w);
    std::set<word_type, ShortLexLess> factors;
    for (auto const& m : congruence_class(p, w, cap)) {
      for (std::size_t i = 0; i <= m.size(); ++i) {
        for (std::size_t j = i; j <= m.size(); ++j) {
          if (j > i || p.flavor() == Flavor::monoid) {
            factors.emplace(m.begin() + i, m.begin() + j);
          }
        }
      }
    }
    std::set<word_type, ShortLexLess> out;
    for (auto const& f : factors) {
      out.insert(canonical(p, f, cap));
    }
    return {out.begin(), out.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Class tables
  ////////////////////////////////////////////////////////////////////////

  //! The congruence classes of all words of length at most L. A word of
  //! length n over k letters is coded as the base-k number of its letters,
  //! so within one length the code order is the lexicographic order and
  //! the least code of a class is its canonical form.
  class ClassTable {
   public:
    using code_type  = std::uint64_t;
    using class_type = std::uint32_t;

    ClassTable(BalancedPresentation const& p, std::size_t max_length)
        : _k(p.num_letters()), _max_length(max_length) {
      _pow.push_back(1);
      for (std::size_t n = 1; n <= max_length + 1; ++n) {
        if (_pow.back() > (code_type(1) << 26) / _k) {
          detail::fail("class table: ", _k, "^", n,
                       " words exceed the table limit; lower the length");
        }
        _pow.push_back(_pow.back() * _k);
      }
      _class_of.resize(max_length + 1);
      _first_class.resize(max_length + 2);
      std::vector<letter_type> digits;
      for (std::size_t n = 0; n <= max_length; ++n) {
        _first_class[n] = _classes.size();
        auto& table     = _class_of[n];
        table.assign(_pow[n], unset);
        std::vector<code_type> stack;
        for (code_type root = 0; root < _pow[n]; ++root) {
          if (table[root] != unset) {
            continue;
          }
          auto id = static_cast<class_type>(_classes.size());
          _classes.push_back({n, root, _members.size(), 0});
          table[root] = id;
          stack.push_back(root);
          while (!stack.empty()) {
            auto code = stack.back();
            stack.pop_back();
            _members.push_back(code);
            decode(code, n, digits);
            for (auto const& [from, to] : p.moves()) {
              std::size_t const m = from.size();
              for (std::size_t i = 0; i + m <= n; ++i) {
                if (!std::equal(from.begin(), from.end(), digits.begin() + i)) {
                  continue;
                }
                code_type next = code;
                for (std::size_t j = 0; j < m; ++j) {
                  auto w = _pow[n - 1 - i - j];
                  next   = next - from[j] * w + to[j] * w;
                }
                if (table[next] == unset) {
                  table[next] = id;
                  stack.push_back(next);
                }
              }
            }
          }
          auto& info = _classes.back();
          info.end   = _members.size();
          std::sort(_members.begin() + info.begin, _members.end());
        }
      }
      _first_class[max_length + 1] = _classes.size();
    }

    std::size_t num_letters() const noexcept {
      return _k;
    }

    std::size_t max_length() const noexcept {
      return _max_length;
    }

    std::size_t num_classes() const noexcept {
      return _classes.size();
    }

    //! Classes of length n are first_class(n), ..., first_class(n + 1) - 1.
    std::size_t first_class(std::size_t n) const {
      return _first_class[n];
    }

    code_type power(std::size_t n) const {
      return _pow[n];
    }

    code_type encode(word_type const& w) const {
      code_type c = 0;
      for (auto x : w) {
        c = c * _k + x;
      }
      return c;
    }

    void decode(code_type                 code,
                std::size_t               n,
                std::vector<letter_type>& out) const {
      out.resize(n);
      for (std::size_t i = n; i > 0; --i) {
        out[i - 1] = static_cast<letter_type>(code % _k);
        code /= _k;
      }
    }

    word_type decode(code_type code, std::size_t n) const {
      word_type w;
      decode(code, n, w);
      return w;
    }

    class_type class_of(std::size_t n, code_type code) const {
      return _class_of[n][code];
    }

    class_type class_of(word_type const& w) const {
      if (w.size() > _max_length) {
        detail::fail("class table: word of length ", w.size(),
                     " exceeds the table length ", _max_length);
      }
      return class_of(w.size(), encode(w));
    }

    std::size_t length(class_type c) const {
      return _classes[c].length;
    }

    code_type representative_code(class_type c) const {
      return _classes[c].rep;
    }

    word_type representative(class_type c) const {
      return decode(_classes[c].rep, _classes[c].length);
    }

    //! Codes of the words in class c, increasing.
    std::pair<code_type const*, code_type const*>
    members(class_type c) const {
      auto const& info = _classes[c];
      return {_members.data() + info.begin, _members.data() + info.end};
    }

    std::size_t class_size(class_type c) const {
      return _classes[c].end - _classes[c].begin;
    }

   private:
    struct ClassInfo {
      std::size_t length;
      code_type   rep;
      std::size_t begin;
      std::size_t end;
    };

    static constexpr class_type unset = std::numeric_limits<class_type>::max();

    std::size_t                          _k;
    std::size_t                          _max_length;
    std::vector<code_type>               _pow;
    std::vector<std::vector<class_type>> _class_of;
    std::vector<std::size_t>             _first_class;
    std::vector<ClassInfo>               _classes;
    std::vector<code_type>               _members;
  };

  ////////////////////////////////////////////////////////////////////////
  // Endomorphisms
  ////////////////////////////////////////////////////////////////////////

  //! A map a ↦ aφ on generators, validated to induce an endomorphism.
  class Endo {
   public:
    std::vector<word_type> const& images() const noexcept {
      return _images;
    }

    word_type const& image(letter_type a) const {
      return _images[a];
    }

    word_type apply(word_type const& w) const {
      word_type out;
      for (auto x : w) {
        out.insert(out.end(), _images[x].begin(), _images[x].end());
      }
      return out;
    }

    //! Every image has length 1.
    bool is_length_preserving() const {
      return std::all_of(_images.begin(), _images.end(),
                         [](word_type const& w) { return w.size() == 1; });
    }

    std::string str(BalancedPresentation const& p) const {
      std::string out;
      for (letter_type a = 0; a < _images.size(); ++a) {
        if (a != 0) {
          out += " ; ";
        }
        out += p.alphabet().name(a) + " -> " + p.print(_images[a]);
      }
      return out;
    }

   private:
    friend Endo validate_endo(BalancedPresentation const&,
                              std::vector<word_type>,
                              std::size_t);
    std::vector<word_type> _images;
  };

  //! Checks that (u_i)φ = (v_i)φ in the presented monoid for every
  //! relation. Throws naming the first violated relation and the two
  //! distinct canonical images.
  inline Endo validate_endo(BalancedPresentation const& p,
                            std::vector<word_type>      images,
                            std::size_t                 cap = 1'000'000) {
    if (images.size() != p.num_letters()) {
      detail::fail("endomorphism needs ", p.num_letters(), " images, got ",
                   images.size());
    }
    for (auto const& w : images) {
      p.validate_word(w);
    }
    Endo phi;
    phi._images = std::move(images);
    for (std::size_t i = 0; i < p.relations().size(); ++i) {
      auto const& [u, v] = p.relations()[i];
      auto cu = canonical(p, phi.apply(u), cap);
      auto cv = canonical(p, phi.apply(v), cap);
      if (cu != cv) {
        detail::fail("not an endomorphism: relation ", i, " maps to ",
                     p.print(cu), " and ", p.print(cv));
      }
    }
    return phi;
  }

  //! Parses "a -> b ; b -> a ; c -> c" (commas also separate entries);
  //! letters not mentioned are fixed.
  inline Endo parse_endo(BalancedPresentation const& p,
                         std::string_view            text,
                         std::size_t                 cap = 1'000'000) {
    std::vector<word_type> images;
    for (letter_type a = 0; a < p.num_letters(); ++a) {
      images.push_back({a});
    }
    for (auto part : detail::split(text, ";,")) {
      part = detail::trim(part);
      if (part.empty()) {
        continue;
      }
      auto arrow = part.find("->");
      if (arrow == std::string_view::npos) {
        detail::fail("endomorphism entry \"", part,
                     "\" must have the form a -> w");
      }
      auto name = std::string(detail::trim(part.substr(0, arrow)));
      images[p.alphabet().letter(name)]
          = p.alphabet().parse(part.substr(arrow + 2));
    }
    return validate_endo(p, std::move(images), cap);
  }

  struct GeneratorOrbit {
    bool        bounded = false;  // a repeat was found below the cap
    std::size_t m       = 0;      // m_a
    std::size_t p       = 0;      // p_a
  };

  namespace detail {
    // canon(w) returns the canonical form of w, or nothing if it cannot
    // be computed within the caps.
    template <typename Canon>
    std::vector<GeneratorOrbit> eventual_period(BalancedPresentation const& p,
                                                Endo const&                 phi,
                                                std::size_t length_cap,
                                                Canon&&     canon) {
      std::vector<GeneratorOrbit> out;
      for (letter_type a = 0; a < p.num_letters(); ++a) {
        std::unordered_map<word_type, std::size_t, WordHash> seen;
        word_type      x{a};
        GeneratorOrbit orbit;
        for (std::size_t n = 0; x.size() <= length_cap; ++n) {
          auto c = canon(x);
          if (!c) {
            break;
          }
          auto [it, inserted] = seen.emplace(*c, n);
          if (!inserted) {
            orbit = {true, it->second, n - it->second};
            break;
          }
          x = phi.apply(*c);
        }
        out.push_back(orbit);
      }
      return out;
    }
  }  // namespace detail

  //! For each generator a, the first (m_a, p_a) with aφ^{m_a + p_a} =
  //! aφ^{m_a}. The orbit is reported unbounded once an iterate is longer
  //! than length_cap or has a congruence class larger than cap.
  inline std::vector<GeneratorOrbit>
  eventual_period(BalancedPresentation const& p,
                  Endo const&                 phi,
                  std::size_t                 length_cap = 16,
                  std::size_t                 cap        = 100'000) {
    return detail::eventual_period(
        p, phi, length_cap, [&](word_type const& w) -> std::optional<word_type> {
          try {
            return canonical(p, w, cap);
          } catch (TakahasiError const&) {
            return std::nullopt;
          }
        });
  }

  //! As above, reading canonical forms from a class table when it covers
  //! the word.
  inline std::vector<GeneratorOrbit>
  eventual_period(BalancedPresentation const& p,
                  ClassTable const&           table,
                  Endo const&                 phi,
                  std::size_t                 length_cap,
                  std::size_t                 cap = 100'000) {
    return detail::eventual_period(
        p, phi, length_cap, [&](word_type const& w) -> std::optional<word_type> {
          if (w.size() <= table.max_length()) {
            return table.representative(table.class_of(w));
          }
          try {
            return canonical(p, w, cap);
          } catch (TakahasiError const&) {
            return std::nullopt;
          }
        });
  }

  //! Images of classes under powers of an endomorphism, within a class
  //! table. Iterates of generators longer than the table are recorded as
  //! such: a word containing one cannot be fixed by that power.
  class EndoPowers {
   public:
    using class_type = ClassTable::class_type;
    static constexpr class_type too_long
        = std::numeric_limits<class_type>::max();

    EndoPowers(ClassTable const& table, Endo const& phi)
        : _table(&table), _phi(phi) {
      std::vector<class_type> identity;
      for (letter_type a = 0; a < table.num_letters(); ++a) {
        identity.push_back(table.class_of(1, a));
      }
      _gen.push_back(std::move(identity));
    }

    //! Class of aφ^n, or too_long.
    class_type generator_image(letter_type a, std::uint64_t n) {
      extend(n);
      return _gen[n][a];
    }

    //! Class of wφ^n for the representative w of c, or too_long.
    class_type image(class_type c, std::uint64_t n) {
      extend(n);
      return image_from(c, _gen[n]);
    }

    //! The class of cφ^n (or too_long) for every class c. The image of a
    //! representative is the image of its prefix class followed by the
    //! image of its last letter.
    std::vector<class_type> images(std::uint64_t n) {
      extend(n);
      auto const&             t   = *_table;
      auto const&             gen = _gen[n];
      std::vector<class_type> out(t.num_classes(), too_long);
      out[0] = t.class_of(0, 0);
      for (std::size_t c = t.first_class(1); c < out.size(); ++c) {
        auto const len  = t.length(static_cast<class_type>(c));
        auto const code = t.representative_code(static_cast<class_type>(c));
        auto const k    = t.num_letters();
        auto const head = out[t.class_of(len - 1, code / k)];
        auto const tail = gen[code % k];
        if (head == too_long || tail == too_long) {
          continue;
        }
        auto const hl = t.length(head), tl = t.length(tail);
        if (hl + tl > t.max_length()) {
          continue;
        }
        out[c] = t.class_of(hl + tl,
                            t.representative_code(head) * t.power(tl)
                                + t.representative_code(tail));
      }
      return out;
    }

    //! membership[c] iff c ∈ Fix(φ^n); classes of every length <= L.
    std::vector<bool> fixed(std::uint64_t n) {
      auto              im = images(n);
      std::vector<bool> out(im.size(), false);
      for (std::size_t c = 0; c < out.size(); ++c) {
        out[c] = im[c] == c;
      }
      return out;
    }

    ClassTable const& table() const noexcept {
      return *_table;
    }

   private:
    class_type image_from(class_type c, std::vector<class_type> const& gen) {
      auto const& t = *_table;
      auto const  n = t.length(c);
      t.decode(t.representative_code(c), n, _digits);
      ClassTable::code_type code = 0;
      std::size_t           len  = 0;
      for (auto x : _digits) {
        auto g = gen[x];
        if (g == too_long) {
          return too_long;
        }
        auto gl = t.length(g);
        len += gl;
        if (len > t.max_length()) {
          return too_long;
        }
        code = code * t.power(gl) + t.representative_code(g);
      }
      return t.class_of(len, code);
    }

    void extend(std::uint64_t n) {
      if (n > 1'000'000) {
        detail::fail("EndoPowers: exponent ", n, " is too large");
      }
      auto const& t = *_table;
      while (_gen.size() <= n) {
        // aφ^{j+1} = (aφ)φ^j, letter by letter.
        auto const&             prev = _gen.back();
        std::vector<class_type> next;
        for (letter_type a = 0; a < t.num_letters(); ++a) {
          ClassTable::code_type code = 0;
          std::size_t           len  = 0;
          bool                  over = false;
          for (auto x : _phi.image(a)) {
            auto g = prev[x];
            if (g == too_long || (len += t.length(g)) > t.max_length()) {
              over = true;
              break;
            }
            code = code * t.power(t.length(g)) + t.representative_code(g);
          }
          next.push_back(over ? too_long : t.class_of(len, code));
        }
        _gen.push_back(std::move(next));
      }
    }

    ClassTable const*                    _table;
    Endo                                 _phi;
    std::vector<std::vector<class_type>> _gen;
    std::vector<letter_type>             _digits;
  };

  //! The members of a graded submonoid (classes of length >= 1 flagged in
  //! in_set) that are not products of two members of smaller length, tested
  //! over every word of each class and every split point.
  inline std::vector<ClassTable::class_type>
  indecomposables(ClassTable const& t, std::vector<bool> const& in_set) {
    std::vector<ClassTable::class_type> out;
    for (std::size_t c = t.first_class(1); c < t.num_classes(); ++c) {
      if (!in_set[c]) {
        continue;
      }
      auto const n            = t.length(static_cast<ClassTable::class_type>(c));
      bool       decomposable = false;
      auto [b, e] = t.members(static_cast<ClassTable::class_type>(c));
      for (auto it = b; it != e && !decomposable; ++it) {
        for (std::size_t j = 1; j < n && !decomposable; ++j) {
          auto w      = t.power(n - j);
          decomposable = in_set[t.class_of(j, *it / w)]
                         && in_set[t.class_of(n - j, *it % w)];
        }
      }
      if (!decomposable) {
        out.push_back(static_cast<ClassTable::class_type>(c));
      }
    }
    return out;
  }

  struct FixReport {
    std::size_t            max_length = 0;
    std::vector<word_type> fixed;  // canonical, lengths 1..L, shortlex
    std::vector<word_type> indecomposables;
    std::size_t            rank_at_length = 0;
  };

  namespace detail {
    inline std::vector<word_type> representatives(ClassTable const&        t,
                                                  std::vector<bool> const& in) {
      std::vector<word_type> out;
      for (std::size_t c = t.first_class(1); c < t.num_classes(); ++c) {
        if (in[c]) {
          out.push_back(t.representative(static_cast<ClassTable::class_type>(c)));
        }
      }
      return out;
    }

    inline std::vector<word_type>
    representatives(ClassTable const&                          t,
                    std::vector<ClassTable::class_type> const& cs) {
      std::vector<word_type> out;
      for (auto c : cs) {
        out.push_back(t.representative(c));
      }
      return out;
    }
  }  // namespace detail

  //! Fixed points of φ of length 1..L with the indecomposable ones.
  inline FixReport fix_up_to(ClassTable const& table, Endo const& phi) {
    EndoPowers powers(table, phi);
    auto       in = powers.fixed(1);
    FixReport  report;
    report.max_length      = table.max_length();
    report.fixed           = detail::representatives(table, in);
    auto ind               = indecomposables(table, in);
    report.indecomposables = detail::representatives(table, ind);
    report.rank_at_length  = ind.size();
    return report;
  }

  inline FixReport fix_up_to(BalancedPresentation const& p,
                             Endo const&                 phi,
                             std::size_t                 max_length) {
    return fix_up_to(ClassTable(p, max_length), phi);
  }

  struct PerReport {
    std::size_t max_length = 0;
    //! Least k <= n_max with Fix(φ^{k!}) = Per(φ) up to L; 0 if none.
    std::size_t k = 0;
    //! The chain Fix(φ^{n!}) is constant from k to n_max, and either Per is
    //! exact or the constant stretch has at least two terms.
    bool stabilized = false;
    //! Per(φ) is exact up to L: every generator orbit was found to be
    //! eventually periodic. Otherwise periodic is Fix(φ^{n_max!}) and k is
    //! where the chain becomes constant.
    bool                        exact = false;
    std::vector<GeneratorOrbit> orbits;
    std::vector<word_type>      periodic;  // canonical, lengths 1..L
    std::vector<std::size_t>    periods;   // parallel to periodic
    std::vector<word_type>      indecomposables;
    //! lcm of the periods of the indecomposables.
    std::uint64_t R = 1;
  };

  //! Per(φ) up to length L, the stabilization index k of the chain
  //! Fix(φ^{1!}) ⊆ Fix(φ^{2!}) ⊆ ..., and the period bound R.
  //!
  //! When every generator satisfies aφ^{m_a + p_a} = aφ^{m_a}, take p the
  //! lcm of the p_a and N the least positive multiple of p with N >= m_a
  //! for all a. Then φ^{N + jp} = φ^N, and any x with xφ^d = x satisfies
  //! x = xφ^{dN} = xφ^N, so Per(φ) = Fix(φ^N) exactly. Generator orbits
  //! are followed up to length_cap, which defaults to L.
  inline PerReport per_up_to(BalancedPresentation const& p,
                             ClassTable const&           table,
                             Endo const&                 phi,
                             std::size_t                 n_max      = 6,
                             std::size_t                 length_cap = 0) {
    if (n_max == 0 || n_max > 8) {
      detail::fail("per_up_to: n_max must be in [1, 8], got ", n_max);
    }
    PerReport report;
    report.max_length = table.max_length();
    report.orbits     = eventual_period(
        p, table, phi, length_cap == 0 ? table.max_length() : length_cap);
    EndoPowers powers(table, phi);

    std::vector<std::vector<bool>> fix_factorial;
    std::uint64_t                  factorial = 1;
    for (std::size_t n = 1; n <= n_max; ++n) {
      factorial *= n;
      fix_factorial.push_back(powers.fixed(factorial));
    }
    report.exact = std::all_of(report.orbits.begin(), report.orbits.end(),
                               [](GeneratorOrbit const& o) {
                                 return o.bounded;
                               });
    std::vector<bool> per;
    if (report.exact) {
      std::uint64_t period = 1, pre = 0;
      for (auto const& o : report.orbits) {
        period = std::lcm(period, static_cast<std::uint64_t>(o.p));
        pre    = std::max(pre, static_cast<std::uint64_t>(o.m));
      }
      per = powers.fixed(period
                         * std::max<std::uint64_t>(1,
                                                   (pre + period - 1) / period));
    } else {
      per = fix_factorial.back();
    }
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (fix_factorial[n - 1] == per) {
        report.k          = n;
        report.stabilized = report.exact || n < n_max;
        break;
      }
    }
    for (std::size_t c = table.first_class(1); c < table.num_classes(); ++c) {
      if (!per[c]) {
        continue;
      }
      auto cls = static_cast<ClassTable::class_type>(c);
      report.periodic.push_back(table.representative(cls));
      std::size_t d = 1;
      while (powers.image(cls, d) != cls) {
        ++d;
      }
      report.periods.push_back(d);
    }
    auto ind               = indecomposables(table, per);
    report.indecomposables = detail::representatives(table, ind);
    for (auto c : ind) {
      std::uint64_t d = 1;
      while (powers.image(c, d) != c) {
        ++d;
      }
      report.R = std::lcm(report.R, d);
    }
    return report;
  }

  struct PeriodCheck {
    bool                     holds = true;
    std::optional<word_type> witness;
  };

  //! xφ^R = x for every periodic x listed in the report.
  inline PeriodCheck period_divides_R(ClassTable const& table,
                                      Endo const&       phi,
                                      PerReport const&  report) {
    EndoPowers  powers(table, phi);
    PeriodCheck check;
    for (auto const& x : report.periodic) {
      auto c = table.class_of(x);
      if (powers.image(c, report.R) != c) {
        check.holds   = false;
        check.witness = x;
        return check;
      }
    }
    return check;
  }

  struct ReductionCheck {
    //! Every generator orbit is eventually periodic.
    bool          applicable = false;
    std::uint64_t p          = 0;
    bool          holds      = false;
    std::optional<word_type> witness;
  };

  //! Fix(φ) = (Fix(φ^{p-1}))φ^p up to length L, where p is the least
  //! multiple of every p_a with p - 1 >= m_a for every generator a.
  inline ReductionCheck reduction_identity_check(BalancedPresentation const& p,
                                                 ClassTable const& table,
                                                 Endo const&       phi,
                                                 std::size_t length_cap = 0) {
    ReductionCheck check;
    auto           orbits = eventual_period(
        p, table, phi, length_cap == 0 ? table.max_length() : length_cap);
    check.applicable      = std::all_of(orbits.begin(), orbits.end(),
                                   [](GeneratorOrbit const& o) {
                                     return o.bounded;
                                   });
    if (!check.applicable) {
      return check;
    }
    std::uint64_t period = 1, pre = 0;
    for (auto const& o : orbits) {
      period = std::lcm(period, static_cast<std::uint64_t>(o.p));
      pre    = std::max(pre, static_cast<std::uint64_t>(o.m));
    }
    check.p = period;
    while (check.p - 1 < pre) {
      check.p += period;
    }
    EndoPowers powers(table, phi);
    auto       fix   = powers.fixed(1);
    auto       inner = powers.fixed(check.p - 1);
    std::vector<bool> image(table.num_classes(), false);
    for (std::size_t c = 0; c < table.num_classes(); ++c) {
      if (inner[c]) {
        auto x = powers.image(static_cast<ClassTable::class_type>(c), check.p);
        if (x != EndoPowers::too_long) {
          image[x] = true;
        }
      }
    }
    check.holds = true;
    for (std::size_t c = table.first_class(1); c < table.num_classes(); ++c) {
      if (fix[c] != image[c]) {
        check.holds   = false;
        check.witness = table.representative(static_cast<ClassTable::class_type>(c));
        break;
      }
    }
    return check;
  }

  ////////////////////////////////////////////////////////////////////////
  // ⟨a, b, c | cac = cbc⟩ with a ↔ b
  ////////////////////////////////////////////////////////////////////////

  struct ExthReport {
    std::size_t n_max = 0;
    //! For n = 1..n_max: (ca)^n c is fixed, and indecomposable in Fix.
    std::vector<bool> fixed;
    std::vector<bool> indecomposable;
    bool              pairwise_distinct = false;
    //! Number of indecomposables of Fix of length <= 2n + 1, n = 1..n_max.
    std::vector<std::size_t> counts;
    bool                     counts_increasing = false;
    //! φ² is the identity, so every element is periodic.
    bool per_is_everything = false;
    bool per_equals_fix    = false;
    //! The (ca)^n c statements and the count growth.
    bool all_pass = false;
  };

  inline BalancedPresentation exth_presentation() {
    return BalancedPresentation::parse("semigroup a b c ; cac = cbc");
  }

  inline ExthReport exth_check(std::size_t n_max) {
    if (n_max == 0) {
      detail::fail("exth_check: n_max must be at least 1");
    }
    auto       p   = exth_presentation();
    auto       phi = parse_endo(p, "a -> b ; b -> a ; c -> c");
    ClassTable table(p, 2 * n_max + 1);
    EndoPowers powers(table, phi);
    auto       fix = powers.fixed(1);
    auto       ind = indecomposables(table, fix);
    std::set<ClassTable::class_type> ind_set(ind.begin(), ind.end());

    ExthReport report;
    report.n_max = n_max;
    std::set<ClassTable::class_type> distinct;
    for (std::size_t n = 1; n <= n_max; ++n) {
      word_type w;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(2);
        w.push_back(0);
      }
      w.push_back(2);
      auto c = table.class_of(w);
      distinct.insert(c);
      report.fixed.push_back(fix[c]);
      report.indecomposable.push_back(ind_set.count(c) != 0);
      std::size_t count = 0;
      for (auto d : ind) {
        count += table.length(d) <= 2 * n + 1;
      }
      report.counts.push_back(count);
    }
    report.pairwise_distinct = distinct.size() == n_max;
    report.counts_increasing = true;
    for (std::size_t n = 1; n < report.counts.size(); ++n) {
      report.counts_increasing
          = report.counts_increasing && report.counts[n] > report.counts[n - 1];
    }
    auto per              = per_up_to(p, table, phi);
    std::vector<bool> everything(table.num_classes(), true);
    report.per_is_everything
        = per.exact
          && per.periodic == detail::representatives(table, everything);
    report.per_equals_fix
        = per.exact && per.periodic == detail::representatives(table, fix);
    report.all_pass
        = report.pairwise_distinct && report.counts_increasing
          && std::all_of(report.fixed.begin(), report.fixed.end(),
                         [](bool b) { return b; })
          && std::all_of(report.indecomposable.begin(),
                         report.indecomposable.end(),
                         [](bool b) { return b; });
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // One-relator presentations ⟨A | a1a2 = a3a4⟩
  ////////////////////////////////////////////////////////////////////////

  //! Relations u = v with |u| = |v| = 2 over k letters, one per orbit under
  //! permuting letters and swapping sides (u = u included).
  inline std::vector<relation_type> two_letter_relations(std::size_t k) {
    std::vector<word_type> words;
    for (letter_type x = 0; x < k; ++x) {
      for (letter_type y = 0; y < k; ++y) {
        words.push_back({x, y});
      }
    }
    std::vector<letter_type> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<letter_type>> perms;
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::set<relation_type>    seen;
    std::vector<relation_type> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      for (std::size_t j = i; j < words.size(); ++j) {
        relation_type best{words[j], words[i]};
        bool          first = true;
        for (auto const& q : perms) {
          word_type u = {q[words[i][0]], q[words[i][1]]};
          word_type v = {q[words[j][0]], q[words[j][1]]};
          relation_type r = u < v ? relation_type{u, v} : relation_type{v, u};
          if (first || r < best) {
            best  = r;
            first = false;
          }
        }
        if (seen.insert(best).second) {
          out.push_back(best);
        }
      }
    }
    return out;
  }

  //! Every word of length <= max_len over k letters, shortlex.
  inline std::vector<word_type> all_words_up_to(std::size_t k,
                                                std::size_t max_len) {
    std::vector<word_type> out{{}};
    for (std::size_t n = 0; n < out.size(); ++n) {
      if (out[n].size() == max_len) {
        continue;
      }
      for (letter_type x = 0; x < k; ++x) {
        auto w = out[n];
        w.push_back(x);
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  //! Calls f(endo) for every validated endomorphism with images of length
  //! <= image_len; returns the number of candidate maps tried.
  template <typename F>
  std::size_t for_each_endo(BalancedPresentation const& p,
                            ClassTable const&           table,
                            std::size_t                 image_len,
                            F&&                         f) {
    auto images = all_words_up_to(p.num_letters(), image_len);
    if (p.flavor() == Flavor::semigroup) {
      images.erase(images.begin());
    }
    std::size_t const        k = p.num_letters();
    std::vector<std::size_t> choice(k, 0);
    std::size_t              tried = 0;
    auto                     same  = [&](word_type const& u, word_type const& v) {
      if (u.size() != v.size()) {
        return false;
      }
      if (u.size() <= table.max_length()) {
        return table.class_of(u) == table.class_of(v);
      }
      return equal(p, u, v);
    };
    while (true) {
      ++tried;
      std::vector<word_type> im;
      for (auto c : choice) {
        im.push_back(images[c]);
      }
      bool ok = true;
      for (auto const& [u, v] : p.relations()) {
        word_type pu, pv;
        for (auto x : u) {
          pu.insert(pu.end(), im[x].begin(), im[x].end());
        }
        for (auto x : v) {
          pv.insert(pv.end(), im[x].begin(), im[x].end());
        }
        ok = ok && same(pu, pv);
      }
      if (ok) {
        f(validate_endo(p, std::move(im)));
      }
      std::size_t j = 0;
      while (j < k && ++choice[j] == images.size()) {
        choice[j++] = 0;
      }
      if (j == k) {
        return tried;
      }
    }
  }

  struct LtwoRow {
    std::string presentation;
    std::size_t endos     = 0;  // validated endomorphisms
    std::size_t max_rank  = 0;
    std::size_t violations = 0;
    std::optional<std::string> witness;
  };

  //! rank_at_L(Fix(φ)) <= |A| over every relation u = v with |u| = |v| = 2
  //! and every endomorphism with images of length <= image_len.
  inline std::vector<LtwoRow> ltwo_sweep(std::size_t letters,
                                         std::size_t image_len  = 2,
                                         std::size_t max_length = 8) {
    std::vector<LtwoRow> rows;
    for (auto const& rel : two_letter_relations(letters)) {
      BalancedPresentation p(Alphabet::letters(letters), {rel});
      ClassTable           table(p, max_length);
      LtwoRow              row;
      row.presentation = p.str();
      for_each_endo(p, table, image_len, [&](Endo const& phi) {
        ++row.endos;
        EndoPowers powers(table, phi);
        auto       rank = indecomposables(table, powers.fixed(1)).size();
        row.max_rank    = std::max(row.max_rank, rank);
        if (rank > letters) {
          ++row.violations;
          if (!row.witness) {
            row.witness = phi.str(p);
          }
        }
      });
      rows.push_back(std::move(row));
    }
    return rows;
  }

}  // namespace takahasi

#endif  // TAKAHASI_PRESENTATIONS_HPP_
