// Command-line front end: one subcommand per library operation plus the
// seeded experiment sweeps. Output is a plain-text report by default and
// JSON with --json.

#include <algorithm>   // for all_of, find, replace
#include <cstdint>     // for uint64_t, int64_t
#include <cstdlib>     // for getenv
#include <fstream>     // for ifstream
#include <functional>  // for function
#include <iostream>    // for cout, cerr
#include <iterator>    // for istreambuf_iterator
#include <map>         // for map
#include <sstream>     // for ostringstream
#include <string>      // for string, stoll
#include <vector>      // for vector

#include <CLI11.hpp>

#include "takahasi/clifford.hpp"
#include "takahasi/experiments.hpp"
#include "takahasi/groups.hpp"
#include "takahasi/io.hpp"
#include "takahasi/numeric.hpp"
#include "takahasi/presentations.hpp"
#include "takahasi/rees.hpp"
#include "takahasi/rewriting.hpp"
#include "takahasi/stallings.hpp"
#include "takahasi/words.hpp"

using namespace takahasi;

namespace {

  ////////////////////////////////////////////////////////////////////////
  // Output
  ////////////////////////////////////////////////////////////////////////

  std::string scalar(json const& v) {
    if (v.is_string()) {
      return v.get<std::string>();
    }
    if (v.is_array()
        && std::none_of(v.begin(), v.end(), [](json const& x) {
             return x.is_structured();
           })) {
      std::string out = "[";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i == 0 ? "" : ", ") + scalar(v[i]);
      }
      return out + "]";
    }
    return v.dump();
  }

  bool is_table(json const& v) {
    return v.is_array() && !v.empty()
           && std::all_of(v.begin(), v.end(),
                          [](json const& x) { return x.is_object(); });
  }

  void print_table(json const& rows, std::string const& pad) {
    std::vector<std::string> columns;
    for (auto const& row : rows) {
      for (auto const& [k, v] : row.items()) {
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) {
          columns.push_back(k);
        }
      }
    }
    std::vector<std::size_t> width;
    for (auto const& c : columns) {
      std::size_t w = c.size();
      for (auto const& row : rows) {
        if (row.contains(c)) {
          w = std::max(w, scalar(row[c]).size());
        }
      }
      width.push_back(w);
    }
    auto line = [&](auto&& cell) {
      std::string out = pad;
      for (std::size_t i = 0; i < columns.size(); ++i) {
        auto text = cell(i);
        out += text + std::string(width[i] - text.size() + 2, ' ');
      }
      while (!out.empty() && out.back() == ' ') {
        out.pop_back();
      }
      std::cout << out << '\n';
    };
    line([&](std::size_t i) { return columns[i]; });
    for (auto const& row : rows) {
      line([&](std::size_t i) {
        return row.contains(columns[i]) ? scalar(row[columns[i]])
                                        : std::string();
      });
    }
  }

  void print_human(json const& j, std::string const& pad = "") {
    for (auto const& [k, v] : j.items()) {
      if (v.is_object()) {
        std::cout << pad << k << ":\n";
        print_human(v, pad + "  ");
      } else if (is_table(v)) {
        std::cout << pad << k << ":\n";
        print_table(v, pad + "  ");
      } else {
        std::cout << pad << k << ": " << scalar(v) << '\n';
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Input parsing
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::string> split_any(std::string const& text,
                                     std::string const& seps) {
    std::vector<std::string> out;
    std::string              cur;
    for (char c : text) {
      if (seps.find(c) != std::string::npos) {
        out.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(cur);
    for (auto& s : out) {
      s = std::string(detail::trim(s));
    }
    out.erase(std::remove(out.begin(), out.end(), std::string()), out.end());
    return out;
  }

  std::vector<std::int64_t> parse_ints(std::string const& text) {
    std::vector<std::int64_t> out;
    for (auto const& s : split_any(text, ", \t")) {
      std::size_t used = 0;
      long long   v    = 0;
      try {
        v = std::stoll(s, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used != s.size()) {
        detail::fail("\"", s, "\" is not an integer");
      }
      out.push_back(v);
    }
    return out;
  }

  std::vector<std::size_t> parse_indices(std::string const& text) {
    std::vector<std::size_t> out;
    for (auto v : parse_ints(text)) {
      if (v < 0) {
        detail::fail("index ", v, " must be non-negative");
      }
      out.push_back(static_cast<std::size_t>(v));
    }
    return out;
  }

  std::string read_file(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path);
    if (!in) {
      detail::fail("cannot open \"", path, "\"");
    }
    return {std::istreambuf_iterator<char>(in), {}};
  }

  json read_json(std::string const& path) {
    try {
      return json::parse(read_file(path));
    } catch (json::parse_error const& e) {
      detail::fail("\"", path, "\" is not valid JSON: ", e.what());
    }
  }

  //! Global cap for congruence class searches: TAKAHASI_CAP or 10^6.
  std::size_t env_cap() {
    if (auto const* v = std::getenv("TAKAHASI_CAP")) {
      auto xs = parse_ints(v);
      if (xs.size() != 1 || xs[0] <= 0) {
        detail::fail("TAKAHASI_CAP must be a positive integer");
      }
      return static_cast<std::size_t>(xs[0]);
    }
    return 1'000'000;
  }

  ////////////////////////////////////////////////////////////////////////
  // Free groups
  ////////////////////////////////////////////////////////////////////////

  struct StallingsOptions {
    std::string letters = "a,b";
    std::string gens;
    std::string word;
    std::string chain;
    std::string input;
    bool        dot = false;
  };

  Alphabet involutive_alphabet(std::string const& letters) {
    return Alphabet(split_any(letters, ", "), true);
  }

  std::vector<word_type> parse_words(Alphabet const& a, std::string const& s) {
    std::vector<word_type> out;
    for (auto const& part : split_any(s, ";,")) {
      out.push_back(a.parse(part));
    }
    return out;
  }

  json stallings_json(StallingsGraph const& g, Alphabet const& a) {
    json basis = json::array();
    for (auto const& w : takahasi::basis(g)) {
      basis.push_back(a.print(w));
    }
    return {{"rank", g.rank()},
            {"vertices", g.number_of_vertices()},
            {"edges", g.number_of_edges()},
            {"basis", basis},
            {"automaton", to_json(g.automaton(), a)}};
  }

  void add_stallings(CLI::App& app, std::function<json()>& action) {
    auto* cmd = app.add_subcommand("stallings", "Stallings automata");
    cmd->require_subcommand(1);
    static StallingsOptions o;

    auto* fold_cmd = cmd->add_subcommand("fold", "fold an automaton");
    fold_cmd->add_option("input", o.input, "automaton JSON file or -")
        ->required();
    fold_cmd->add_flag("--dot", o.dot, "emit Graphviz instead of JSON");
    fold_cmd->callback([&] {
      action = [] {
        auto [a, aut] = automaton_from_json(read_json(o.input));
        auto folded   = fold(aut);
        if (o.dot) {
          return json{{"dot", to_dot(folded, a)}};
        }
        return to_json(folded, a);
      };
    });

    auto* rank_cmd = cmd->add_subcommand("rank", "rank of ⟨gens⟩");
    rank_cmd->add_option("--letters", o.letters, "alphabet, comma separated");
    rank_cmd->add_option("--gens", o.gens, "generators separated by ';'")
        ->required();
    rank_cmd->callback([&] {
      action = [] {
        auto a = involutive_alphabet(o.letters);
        return stallings_json(subgroup(a.size(), parse_words(a, o.gens)), a);
      };
    });

    auto* member_cmd = cmd->add_subcommand("member", "membership in ⟨gens⟩");
    member_cmd->add_option("--letters", o.letters, "alphabet, comma separated");
    member_cmd->add_option("--gens", o.gens, "generators separated by ';'")
        ->required();
    member_cmd->add_option("--word", o.word, "word to test")->required();
    member_cmd->callback([&] {
      action = [] {
        auto a = involutive_alphabet(o.letters);
        auto g = subgroup(a.size(), parse_words(a, o.gens));
        return json{{"word", o.word},
                    {"member", membership(g, a.parse(o.word))}};
      };
    });

    auto* pipe_cmd
        = cmd->add_subcommand("pipeline", "trim automaton to Stallings graph");
    pipe_cmd->add_option("input", o.input, "automaton JSON file or -")
        ->required();
    pipe_cmd->callback([&] {
      action = [] {
        auto [a, aut] = automaton_from_json(read_json(o.input));
        auto r        = pipeline(aut);
        auto stage    = [&](Automaton const& x) {
          return json{{"vertices", x.number_of_vertices()},
                      {"edges", x.number_of_edges()}};
        };
        return json{{"stages",
                     json::array({stage(r.merged), stage(r.dualized),
                                  stage(r.folded),
                                  stage(r.stallings.automaton())})},
                    {"rank", r.report.rank},
                    {"ragr_bound", ragr_bound(aut)},
                    {"stallings", to_json(r.stallings.automaton(), a)}};
      };
    });

    auto* chain_cmd = cmd->add_subcommand("chain", "ascending chain check");
    chain_cmd->add_option("--letters", o.letters, "alphabet, comma separated");
    chain_cmd
        ->add_option("--chain", o.chain,
                     "generator lists separated by '|', generators by ';'")
        ->required();
    chain_cmd->callback([&] {
      action = [] {
        auto                                a = involutive_alphabet(o.letters);
        std::vector<std::vector<word_type>> chain;
        for (auto const& part : split_any(o.chain, "|")) {
          chain.push_back(parse_words(a, part));
        }
        auto r = chain_check(a.size(), chain);
        return json{{"ranks", r.ranks},
                    {"stabilization_index", r.stabilization_index},
                    {"witnessed", r.witnessed}};
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Numerical semigroups
  ////////////////////////////////////////////////////////////////////////

  void add_numeric(CLI::App& app, std::function<json()>& action) {
    auto* cmd = app.add_subcommand("numeric", "subsemigroups of N, Z, Z^2");
    cmd->require_subcommand(1);
    static std::string  gens, chain;
    static std::int64_t n = 0, window = 0, n_max = 25;

    auto* prof = cmd->add_subcommand("profile", "d_S, p_S, minimal generators");
    prof->add_option("--gens", gens, "positive generators, comma separated")
        ->required();
    prof->add_option("--window", window, "membership table up to this value");
    prof->callback([&] {
      action = [] {
        NumSgp s(parse_ints(gens));
        auto   j = to_json(profile(s));
        if (window > 0) {
          auto                      table = s.membership_table(window);
          std::vector<std::int64_t> members;
          for (std::int64_t k = 0; k <= window; ++k) {
            if (table[k]) {
              members.push_back(k);
            }
          }
          j["members"] = members;
        }
        return j;
      };
    });

    auto* mem = cmd->add_subcommand("member", "membership in ⟨gens⟩ ⊆ N");
    mem->add_option("--gens", gens, "positive generators")->required();
    mem->add_option("--n", n, "value to test")->required();
    mem->callback([&] {
      action = [] {
        return json{{"n", n}, {"member", member(NumSgp(parse_ints(gens)), n)}};
      };
    });

    auto* cls = cmd->add_subcommand("classify", "subsemigroup of Z");
    cls->add_option("--gens", gens, "nonzero generators")->required();
    cls->callback([&] {
      action = [] {
        auto        c   = classify_int(parse_ints(gens));
        char const* tag = c.tag == IntSgpClass::Tag::nonneg   ? "nonneg"
                          : c.tag == IntSgpClass::Tag::nonpos ? "nonpos"
                                                              : "full_group";
        json j = {{"class", tag}};
        if (c.tag == IntSgpClass::Tag::full_group) {
          j["d"] = c.d;
        }
        return j;
      };
    });

    auto* ch = cmd->add_subcommand("chain", "ascending chain in N");
    ch->add_option("--chain", chain, "generator lists separated by '|'")
        ->required();
    ch->callback([&] {
      action = [] {
        std::vector<NumSgp> c;
        for (auto const& part : split_any(chain, "|")) {
          c.emplace_back(parse_ints(part));
        }
        auto r = chain_stabilization(c);
        return json{{"d", r.d},
                    {"p", r.p},
                    {"stabilization_index", r.stabilization_index},
                    {"witnessed", r.witnessed}};
      };
    });

    auto* nt = cmd->add_subcommand("notts", "strict chain S_1 ⊊ S_2 ⊊ ... in Z^2");
    nt->add_option("--n-max", n_max, "length of the chain");
    nt->callback([&] {
      action = [] {
        auto r     = notts_chain(n_max);
        json steps = json::array();
        for (auto const& s : r.steps) {
          steps.push_back({{"n", s.n},
                           {"contained", s.contained},
                           {"excluded", s.excluded}});
        }
        return json{{"steps", steps}, {"all_strict", r.all_strict}};
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees matrix semigroups
  ////////////////////////////////////////////////////////////////////////

  struct StructureOptions {
    std::string input;
    std::string group = "C2";
    std::size_t num_i = 1, num_lambda = 1;
    std::string sandwich;
    std::string chain;
    std::string gens;
    std::string endo;
    std::string images;
    std::size_t i = 0, lambda = 0, alpha = 0;
  };

  ReesStructure rees_structure(StructureOptions const& o) {
    if (!o.input.empty()) {
      return rees_from_json(read_json(o.input));
    }
    table_type p(o.num_lambda, std::vector<element_type>(o.num_i, 0));
    if (!o.sandwich.empty()) {
      p.clear();
      for (auto const& row : split_any(o.sandwich, ";")) {
        p.push_back(parse_indices(row));
      }
    }
    return ReesStructure(FiniteGroup::from_name(o.group), o.num_i,
                         o.num_lambda, p);
  }

  std::vector<ReesElement> parse_rees(std::string const& text) {
    std::vector<ReesElement> out;
    for (auto const& item : split_any(text, " ,;")) {
      auto spaced = item;
      std::replace(spaced.begin(), spaced.end(), ':', ' ');
      auto v = parse_indices(spaced);
      if (v.size() != 3) {
        detail::fail("Rees element \"", item, "\" must be i:g:lambda");
      }
      out.push_back({v[0], v[1], v[2]});
    }
    return out;
  }

  json rees_elements(std::vector<ReesElement> const& xs) {
    json out = json::array();
    for (auto const& x : xs) {
      out.push_back(std::to_string(x.i) + ":" + std::to_string(x.g) + ":"
                    + std::to_string(x.lambda));
    }
    return out;
  }

  self_map_type rees_endo(ReesStructure const& s, StructureOptions const& o) {
    if (!o.images.empty()) {
      return extend_endo(s, parse_rees(o.gens), parse_rees(o.images));
    }
    return parse_indices(o.endo);
  }

  void add_structure_options(CLI::App* c, StructureOptions& o, bool rees) {
    c->add_option("--input", o.input, "structure JSON file");
    if (rees) {
      c->add_option("--group", o.group, "group name, e.g. S3 or C2xC4");
      c->add_option("--I", o.num_i, "|I|");
      c->add_option("--Lambda", o.num_lambda, "|Λ|");
      c->add_option("--P", o.sandwich, "sandwich rows P[λ] separated by ';'");
    } else {
      c->add_option("--chain", o.chain,
                    "groups bottom to top, comma separated, trivial links");
    }
  }

  void add_rees(CLI::App& app, std::function<json()>& action) {
    auto* cmd = app.add_subcommand("rees", "Rees matrix semigroups");
    cmd->require_subcommand(1);
    static StructureOptions o;

    auto with_gens = [&](char const* name, char const* help, bool component) {
      auto* c = cmd->add_subcommand(name, help);
      add_structure_options(c, o, true);
      c->add_option("--gens", o.gens, "generators i:g:lambda")->required();
      if (component) {
        c->add_option("--i", o.i, "row index i")->required();
        c->add_option("--lambda", o.lambda, "column index λ")->required();
      }
      return c;
    };

    with_gens("closure", "closure of generators", false)->callback([&] {
      action = [] {
        auto s = rees_structure(o);
        auto t = closure(s, parse_rees(o.gens));
        return json{{"size", t.elements.size()},
                    {"I_T", t.i_set},
                    {"Lambda_T", t.lambda_set},
                    {"elements", rees_elements(t.elements)}};
      };
    });

    with_gens("component", "component T^(iλ) and its image in G", true)
        ->callback([&] {
          action = [] {
            auto s = rees_structure(o);
            auto t = closure(s, parse_rees(o.gens));
            return json{{"component", rees_elements(component(t, o.i, o.lambda))},
                        {"image", component_iso(s, t, o.i, o.lambda).elements()}};
          };
        });

    with_gens("automaton", "G-automaton of the component", true)
        ->callback([&] {
          action = [] {
            auto s   = rees_structure(o);
            auto aut = build_g_automaton(s, parse_rees(o.gens), o.i, o.lambda);
            json edges = json::array();
            for (auto const& e : aut.edges) {
              edges.push_back({e.source, e.label, e.target});
            }
            return json{{"states", aut.num_states()},
                        {"lambda_states", aut.lambda_states},
                        {"edges", edges},
                        {"trim", aut.is_trim()},
                        {"language", language(s, aut).elements()}};
          };
        });

    with_gens("bound", "rk_G(T^(iλ)) <= rk_CS(T)^2 + 1", true)
        ->callback([&] {
          action = [] {
            auto s = rees_structure(o);
            auto r = rank_bound_check(s, parse_rees(o.gens), o.i, o.lambda);
            return json{{"rk_cs", r.rk_cs},
                        {"rk_component", r.rk_component},
                        {"bound_holds", r.bound_holds}};
          };
        });

    auto endo_cmd = [&](char const* name, char const* help) {
      auto* c = cmd->add_subcommand(name, help);
      add_structure_options(c, o, true);
      c->add_option("--endo", o.endo, "element index map, comma separated");
      c->add_option("--gens", o.gens, "generators i:g:lambda (with --images)");
      c->add_option("--images", o.images, "images of --gens");
      return c;
    };
    endo_cmd("fix", "fixed points of an endomorphism")->callback([&] {
      action = [] {
        auto s = rees_structure(o);
        auto r = fix(s, rees_endo(s, o));
        json classes = json::array();
        for (auto const& [key, xs] : r.by_class) {
          classes.push_back({{"i", key.first},
                             {"lambda", key.second},
                             {"elements", rees_elements(xs)}});
        }
        return json{{"fixed", rees_elements(r.fixed)}, {"classes", classes}};
      };
    });
    endo_cmd("per", "periodic points of an endomorphism")->callback([&] {
      action = [] {
        auto s = rees_structure(o);
        auto r = per(s, rees_endo(s, o));
        return json{{"k", r.k},
                    {"R", r.R},
                    {"periodic", rees_elements(r.periodic)}};
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Clifford semigroups
  ////////////////////////////////////////////////////////////////////////

  SemilatticeOfGroups clifford_structure(StructureOptions const& o) {
    if (!o.input.empty()) {
      return clifford_from_json(read_json(o.input));
    }
    if (o.chain.empty()) {
      detail::fail("give --input or --chain");
    }
    std::vector<FiniteGroup>               groups;
    std::vector<std::vector<element_type>> down;
    for (auto const& name : split_any(o.chain, ",")) {
      groups.push_back(FiniteGroup::from_name(name));
      if (groups.size() > 1) {
        down.emplace_back(groups.back().order(),
                          groups[groups.size() - 2].identity());
      }
    }
    return chain_of_groups(std::move(groups), down);
  }

  std::vector<CliffordElement> parse_clifford(std::string const& text) {
    std::vector<CliffordElement> out;
    for (auto item : split_any(text, " ,;")) {
      std::replace(item.begin(), item.end(), ':', ' ');
      auto v = parse_indices(item);
      if (v.size() != 2) {
        detail::fail("Clifford element must be alpha:g");
      }
      out.push_back({v[0], v[1]});
    }
    return out;
  }

  json clifford_elements(std::vector<CliffordElement> const& xs) {
    json out = json::array();
    for (auto const& x : xs) {
      out.push_back(std::to_string(x.alpha) + ":" + std::to_string(x.g));
    }
    return out;
  }

  void add_clifford(CLI::App& app, std::function<json()>& action) {
    auto* cmd = app.add_subcommand("clifford", "Clifford semigroups");
    cmd->require_subcommand(1);
    static StructureOptions o;

    auto with_gens = [&](char const* name, char const* help) {
      auto* c = cmd->add_subcommand(name, help);
      add_structure_options(c, o, false);
      c->add_option("--gens", o.gens, "generators alpha:g of T")->required();
      return c;
    };

    with_gens("index", "[S:T] for T = ⟨gens⟩")->callback([&] {
      action = [] {
        auto s = clifford_structure(o);
        auto t = closure(s, parse_clifford(o.gens));
        auto r = index(s, t);
        return json{{"class_indices", r.class_indices},
                    {"index", r.sup},
                    {"infinite", r.infinite}};
      };
    });

    with_gens("green-index", "Green index of T = ⟨gens⟩")->callback([&] {
      action = [] {
        auto s = clifford_structure(o);
        auto t = closure(s, parse_clifford(o.gens));
        auto r = green_index(s, t);
        return json{{"green_index", r.green_index},
                    {"classes", r.num_classes}};
      };
    });

    auto* ret = with_gens("retraction", "rk_G(T ∩ H_α) <= rk_C(T)");
    ret->add_option("--alpha", o.alpha, "semilattice element α")->required();
    ret->callback([&] {
      action = [] {
        auto s = clifford_structure(o);
        auto t = closure(s, parse_clifford(o.gens));
        auto r = retraction_check(s, t, o.alpha);
        return json{{"rk_g", r.rk_g},
                    {"rk_c", r.rk_c},
                    {"holds", r.holds},
                    {"onto_with_zero", r.onto_with_zero}};
      };
    });

    auto endo_cmd = [&](char const* name, char const* help) {
      auto* c = cmd->add_subcommand(name, help);
      add_structure_options(c, o, false);
      c->add_option("--endo", o.endo, "element index map, comma separated")
          ->required();
      return c;
    };
    endo_cmd("fix", "fixed points of an endomorphism")->callback([&] {
      action = [] {
        auto s = clifford_structure(o);
        auto r = fix(s, parse_indices(o.endo));
        json classes = json::array();
        for (auto const& [alpha, xs] : r.by_class) {
          classes.push_back(
              {{"alpha", alpha}, {"elements", clifford_elements(xs)}});
        }
        return json{{"fixed", clifford_elements(r.fixed)},
                    {"classes", classes}};
      };
    });
    endo_cmd("per", "periodic points of an endomorphism")->callback([&] {
      action = [] {
        auto s = clifford_structure(o);
        auto r = per(s, parse_indices(o.endo));
        return json{{"k", r.k},
                    {"R", r.R},
                    {"periodic", clifford_elements(r.periodic)}};
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Presented monoids
  ////////////////////////////////////////////////////////////////////////

  struct MonoidOptions {
    std::string presentation;
    std::string word, other, endo;
    std::size_t max_length = 8, n_max = 6, letters = 3, image_len = 2;
    std::size_t cap        = 0;
  };

  BalancedPresentation monoid_presentation(MonoidOptions const& o) {
    if (!o.presentation.empty() && o.presentation.front() == '@') {
      return presentation_from_json(read_json(o.presentation.substr(1)));
    }
    return BalancedPresentation::parse(o.presentation);
  }

  void add_monoid(CLI::App& app, std::function<json()>& action, bool& ok) {
    auto* cmd = app.add_subcommand("monoid", "balanced presentations");
    cmd->require_subcommand(1);
    static MonoidOptions o;
    auto cap = [] { return o.cap != 0 ? o.cap : env_cap(); };

    auto with_p = [&](char const* name, char const* help) {
      auto* c = cmd->add_subcommand(name, help);
      c->add_option("--presentation,-p", o.presentation,
                    "\"monoid a b ; ab = ba\" or @file.json")
          ->required();
      c->add_option("--cap", o.cap, "congruence class size cap");
      return c;
    };

    auto* canon = with_p("canon", "canonical form of a word");
    canon->add_option("--word", o.word)->required();
    canon->callback([&, cap] {
      action = [cap] {
        auto p     = monoid_presentation(o);
        auto w     = p.parse_word(o.word);
        auto klass = congruence_class(p, w, cap());
        return json{{"canonical", p.print(klass.front())},
                    {"length", w.size()},
                    {"class_size", klass.size()}};
      };
    });

    auto* eq = with_p("equal", "word problem");
    eq->add_option("--word", o.word)->required();
    eq->add_option("--other", o.other)->required();
    eq->callback([&, cap] {
      action = [cap] {
        auto p = monoid_presentation(o);
        return json{{"equal", equal(p, p.parse_word(o.word),
                                    p.parse_word(o.other), cap())}};
      };
    });

    auto* ja = with_p("jabove", "elements J-above a word");
    ja->add_option("--word", o.word)->required();
    ja->callback([&, cap] {
      action = [cap] {
        auto p = monoid_presentation(o);
        return json{{"j_above", detail::words_json(
                                    p, j_above(p, p.parse_word(o.word), cap()))}};
      };
    });

    auto with_endo = [&](char const* name, char const* help) {
      auto* c = with_p(name, help);
      c->add_option("--endo,-e", o.endo, "\"a -> b ; b -> a\" or JSON")
          ->required();
      c->add_option("--max-length,-L", o.max_length, "length bound L");
      c->add_option("--n-max", o.n_max, "factorial window for Per");
      return c;
    };
    auto endo = [](BalancedPresentation const& p) {
      auto t = detail::trim(o.endo);
      if (!t.empty() && t.front() == '{') {
        return endo_from_json(p, json::parse(std::string(t)));
      }
      return parse_endo(p, o.endo);
    };

    with_endo("fix", "fixed points up to length L")->callback([&, endo] {
      action = [endo] {
        auto p = monoid_presentation(o);
        return to_json(p, fix_up_to(p, endo(p), o.max_length));
      };
    });
    with_endo("per", "periodic points up to length L")->callback([&, endo] {
      action = [endo] {
        auto       p = monoid_presentation(o);
        ClassTable t(p, o.max_length);
        return to_json(p, per_up_to(p, t, endo(p), o.n_max));
      };
    });
    with_endo("period-check", "x φ^R = x for periodic x")
        ->callback([&, endo] {
          action = [endo, &ok] {
            auto       p   = monoid_presentation(o);
            auto       phi = endo(p);
            ClassTable t(p, o.max_length);
            auto       r     = per_up_to(p, t, phi, o.n_max);
            auto       check = period_divides_R(t, phi, r);
            ok               = check.holds;
            json j = {{"R", r.R}, {"holds", check.holds},
                      {"periodic", r.periodic.size()}};
            if (check.witness) {
              j["witness"] = p.print(*check.witness);
            }
            return j;
          };
        });

    auto* ex = cmd->add_subcommand("exth", "(ca)^n c in ⟨a,b,c | cac = cbc⟩");
    ex->add_option("--n-max", o.n_max, "largest n");
    ex->callback([&] {
      action = [&ok] {
        auto r = exth_check(o.n_max);
        ok     = r.all_pass;
        return to_json(r);
      };
    });

    auto* lt = cmd->add_subcommand("ltwo-sweep",
                                   "rank of Fix over one-relator presentations");
    lt->add_option("--letters", o.letters, "alphabet size");
    lt->add_option("--image-len", o.image_len, "longest generator image");
    lt->add_option("--max-length,-L", o.max_length, "length bound L");
    lt->callback([&] {
      action = [&ok] {
        json rows = json::array();
        for (auto const& row : ltwo_sweep(o.letters, o.image_len, o.max_length)) {
          ok = ok && row.violations == 0;
          rows.push_back(to_json(row));
        }
        return json{{"rows", rows}, {"pass", ok}};
      };
    });

    auto* rw = cmd->add_subcommand("rewrite",
                                   "the system {bb -> aa, baa -> aab}");
    rw->add_option("--word", o.word, "word over a, b to reduce");
    rw->callback([&] {
      action = [] {
        auto rs       = RewriteSystem::a2_equals_b2();
        auto alphabet = Alphabet::letters(2);
        json pairs    = json::array();
        auto report   = rs.check_local_confluence();
        for (auto const& cp : report.pairs) {
          pairs.push_back({{"overlap", alphabet.print_compact(cp.overlap)},
                           {"left", alphabet.print_compact(cp.left_normal_form)},
                           {"right", alphabet.print_compact(cp.right_normal_form)},
                           {"joinable", cp.joinable}});
        }
        json j = {{"confluent", report.confluent}, {"critical_pairs", pairs}};
        if (!o.word.empty()) {
          j["normal_form"]
              = alphabet.print_compact(rs.normal_form(alphabet.parse(o.word)));
        }
        return j;
      };
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Experiments
  ////////////////////////////////////////////////////////////////////////

  void add_experiment(CLI::App&              app,
                      std::function<json()>& action,
                      bool&                  ok,
                      std::uint64_t const&   seed) {
    static std::string              name;
    static std::vector<std::string> params;
    std::string                     names;
    for (auto const& e : experiments()) {
      names += "\n  " + e.name + ": " + e.summary;
    }
    auto* cmd = app.add_subcommand("experiment",
                                   "run a seeded sweep; experiments:" + names);
    cmd->add_option("name", name, "experiment name")->required();
    cmd->add_option("--param", params, "key=value, repeatable");
    // Every registered parameter is also accepted as --key value.
    static std::map<std::string, std::int64_t> direct;
    for (auto const& e : experiments()) {
      for (auto const& [key, value] : e.defaults) {
        if (direct.count(key) == 0) {
          direct[key] = -1;
          cmd->add_option("--" + key, direct[key], "experiment parameter");
        }
      }
    }
    cmd->callback([&] {
      action = [&] {
        ExperimentParams p;
        for (auto const& [key, value] : direct) {
          if (value >= 0) {
            p[key] = value;
          }
        }
        for (auto const& kv : params) {
          auto eq = kv.find('=');
          if (eq == std::string::npos) {
            detail::fail("--param expects key=value, got \"", kv, "\"");
          }
          auto v = parse_ints(kv.substr(eq + 1));
          if (v.size() != 1) {
            detail::fail("--param ", kv, " needs one integer value");
          }
          p[kv.substr(0, eq)] = v[0];
        }
        auto r = run_experiment(name, seed, p);
        ok     = r.pass;
        return r.to_json();
      };
    });
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"takahasi: subalgebra ranks, chains and fixed points"};
  app.require_subcommand(1);
  app.fallthrough();

  bool          as_json = false;
  std::uint64_t seed    = 1;
  app.add_flag("--json", as_json, "print JSON instead of text");
  app.add_option("--seed", seed, "seed for randomized experiments");

  std::function<json()> action;
  bool                  ok = true;
  try {
    add_stallings(app, action);
    add_numeric(app, action);
    add_rees(app, action);
    add_clifford(app, action);
    add_monoid(app, action, ok);
    add_experiment(app, action, ok, seed);
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e);
  } catch (TakahasiError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    auto result = action();
    if (as_json) {
      std::cout << result.dump(2) << '\n';
    } else {
      print_human(result);
    }
  } catch (TakahasiError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (json::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return ok ? 0 : 1;
}
