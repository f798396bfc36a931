// JSON serialization of automata, groups, Rees and Clifford structures,
// presentations, endomorphisms and reports.

#ifndef TAKAHASI_IO_HPP_
#define TAKAHASI_IO_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <utility>  // for move, pair
#include <vector>   // for vector

#include <json.hpp>  // for nlohmann::json

#include "clifford.hpp"       // for SemilatticeOfGroups
#include "exception.hpp"      // for TakahasiError
#include "groups.hpp"         // for FiniteGroup
#include "numeric.hpp"        // for NumSgpProfile
#include "presentations.hpp"  // for BalancedPresentation, Endo
#include "rees.hpp"           // for ReesStructure
#include "stallings.hpp"      // for Automaton
#include "words.hpp"          // for Alphabet

namespace takahasi {

  using json = nlohmann::json;

  namespace detail {
    //! Runs f, turning JSON type and key errors into TakahasiError.
    template <typename F>
    auto from_json_checked(char const* what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        fail("invalid ", what, " JSON: ", e.what());
      }
    }
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Automata
  ////////////////////////////////////////////////////////////////////////

  //! {"alphabet": [...], "vertices": n, "base": 0, "terminals": [...],
  //!  "edges": [[src, "label", dst], ...]} with "'" marking inverses.
  inline json to_json(Automaton const& a, Alphabet const& alphabet) {
    json edges = json::array();
    for (auto const& e : a.edges()) {
      edges.push_back({e.source, alphabet.name(e.label), e.target});
    }
    return {{"alphabet", alphabet.names()},
            {"vertices", a.number_of_vertices()},
            {"base", a.base()},
            {"terminals", a.terminals()},
            {"edges", std::move(edges)}};
  }

  inline std::pair<Alphabet, Automaton> automaton_from_json(json const& j) {
    return detail::from_json_checked("automaton", [&] {
      Alphabet alphabet(j.at("alphabet").get<std::vector<std::string>>(),
                        true);
      std::vector<Edge> edges;
      for (auto const& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3) {
          detail::fail("automaton edge must be [source, label, target]");
        }
        auto label = alphabet.parse(e[1].get<std::string>());
        if (label.size() != 1) {
          detail::fail("automaton edge label must be one letter");
        }
        edges.push_back({e[0].get<vertex_type>(), label[0],
                         e[2].get<vertex_type>()});
      }
      Automaton a(alphabet.size(),
                  j.at("vertices").get<std::size_t>(),
                  j.value("base", vertex_type(0)),
                  j.at("terminals").get<std::vector<vertex_type>>(),
                  std::move(edges));
      return std::pair<Alphabet, Automaton>(std::move(alphabet), std::move(a));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Groups, Rees and Clifford structures
  ////////////////////////////////////////////////////////////////////////

  //! {"order": n, "table": [[...], ...]}
  inline json to_json(FiniteGroup const& g) {
    return {{"order", g.order()}, {"table", g.table()}};
  }

  //! Accepts the table form or a name such as "S3" or "C2xC4".
  inline FiniteGroup group_from_json(json const& j) {
    if (j.is_string()) {
      return FiniteGroup::from_name(j.get<std::string>());
    }
    return detail::from_json_checked("group", [&] {
      auto g = FiniteGroup(j.at("table").get<table_type>());
      if (j.contains("order") && j["order"].get<std::size_t>() != g.order()) {
        detail::fail("group order ", j["order"].get<std::size_t>(),
                     " does not match the table size ", g.order());
      }
      return g;
    });
  }

  //! {"group": {...}, "I": n, "Lambda": m, "P": [[...]]} with P[λ][i].
  inline json to_json(ReesStructure const& s) {
    return {{"group", to_json(s.group())},
            {"I", s.num_i()},
            {"Lambda", s.num_lambda()},
            {"P", s.sandwich()}};
  }

  inline ReesStructure rees_from_json(json const& j) {
    return detail::from_json_checked("Rees structure", [&] {
      return ReesStructure(group_from_json(j.at("group")),
                           j.at("I").get<std::size_t>(),
                           j.at("Lambda").get<std::size_t>(),
                           j.at("P").get<table_type>());
    });
  }

  //! {"meet": [[...]], "groups": [...], "links": [{"from", "to", "map"}]}
  //! listing the link of every pair α > β.
  inline json to_json(SemilatticeOfGroups const& s) {
    json groups = json::array(), links = json::array();
    for (auto const& g : s.groups()) {
      groups.push_back(to_json(g));
    }
    for (std::size_t a = 0; a < s.semilattice_size(); ++a) {
      for (std::size_t b = 0; b < s.semilattice_size(); ++b) {
        if (a != b && s.geq(a, b)) {
          links.push_back({{"from", a}, {"to", b}, {"map", s.link(a, b)}});
        }
      }
    }
    return {{"meet", s.meet_table()},
            {"groups", std::move(groups)},
            {"links", std::move(links)}};
  }

  inline SemilatticeOfGroups clifford_from_json(json const& j) {
    return detail::from_json_checked("Clifford structure", [&] {
      std::vector<FiniteGroup> groups;
      for (auto const& g : j.at("groups")) {
        groups.push_back(group_from_json(g));
      }
      std::vector<Link> links;
      for (auto const& l : j.value("links", json::array())) {
        links.push_back({l.at("from").get<std::size_t>(),
                         l.at("to").get<std::size_t>(),
                         l.at("map").get<std::vector<element_type>>()});
      }
      return SemilatticeOfGroups(j.at("meet").get<table_type>(),
                                 std::move(groups), links);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations and endomorphisms
  ////////////////////////////////////////////////////////////////////////

  //! {"flavor": "monoid", "generators": [...], "relations": [[u, v], ...]}
  inline json to_json(BalancedPresentation const& p) {
    json rels = json::array();
    for (auto const& [u, v] : p.relations()) {
      rels.push_back({p.print(u), p.print(v)});
    }
    return {{"flavor", p.flavor() == Flavor::monoid ? "monoid" : "semigroup"},
            {"generators", p.alphabet().names()},
            {"relations", std::move(rels)}};
  }

  //! Accepts the JSON object form or the text form as a string.
  inline BalancedPresentation presentation_from_json(json const& j) {
    if (j.is_string()) {
      return BalancedPresentation::parse(j.get<std::string>());
    }
    return detail::from_json_checked("presentation", [&] {
      auto flavor = j.value("flavor", std::string("monoid"));
      if (flavor != "monoid" && flavor != "semigroup") {
        detail::fail("unknown flavor \"", flavor, "\"");
      }
      Alphabet alphabet(j.at("generators").get<std::vector<std::string>>());
      std::vector<relation_type> rels;
      for (auto const& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) {
          detail::fail("relation must be a pair [u, v]");
        }
        rels.emplace_back(alphabet.parse(r[0].get<std::string>()),
                          alphabet.parse(r[1].get<std::string>()));
      }
      return BalancedPresentation(std::move(alphabet), std::move(rels),
                                  flavor == "monoid" ? Flavor::monoid
                                                     : Flavor::semigroup);
    });
  }

  //! {"a": "b", "b": "a", ...}
  inline json to_json(BalancedPresentation const& p, Endo const& phi) {
    json out = json::object();
    for (letter_type a = 0; a < p.num_letters(); ++a) {
      out[p.alphabet().name(a)] = p.print(phi.image(a));
    }
    return out;
  }

  //! Accepts the object form or the text form "a -> b ; b -> a".
  inline Endo endo_from_json(BalancedPresentation const& p, json const& j) {
    if (j.is_string()) {
      return parse_endo(p, j.get<std::string>());
    }
    return detail::from_json_checked("endomorphism", [&] {
      std::vector<word_type> images;
      for (letter_type a = 0; a < p.num_letters(); ++a) {
        images.push_back({a});
      }
      for (auto const& [name, image] : j.items()) {
        images[p.alphabet().letter(name)]
            = p.alphabet().parse(image.get<std::string>());
      }
      return validate_endo(p, std::move(images));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  inline json to_json(NumSgpProfile const& r) {
    return {{"d", r.d}, {"p", r.p}, {"minimal_generators",
                                     r.minimal_generators}};
  }

  namespace detail {
    inline json words_json(BalancedPresentation const& p,
                           std::vector<word_type> const& ws) {
      json out = json::array();
      for (auto const& w : ws) {
        out.push_back(p.print(w));
      }
      return out;
    }
  }  // namespace detail

  inline json to_json(BalancedPresentation const& p, FixReport const& r) {
    return {{"max_length", r.max_length},
            {"fixed", detail::words_json(p, r.fixed)},
            {"indecomposables", detail::words_json(p, r.indecomposables)},
            {"rank_at_length", r.rank_at_length}};
  }

  inline json to_json(BalancedPresentation const& p, PerReport const& r) {
    json orbits = json::array();
    for (letter_type a = 0; a < r.orbits.size(); ++a) {
      auto const& o = r.orbits[a];
      orbits.push_back({{"generator", p.alphabet().name(a)},
                        {"bounded", o.bounded},
                        {"m", o.m},
                        {"p", o.p}});
    }
    return {{"max_length", r.max_length},
            {"k", r.k},
            {"stabilized", r.stabilized},
            {"exact", r.exact},
            {"orbits", std::move(orbits)},
            {"periodic", detail::words_json(p, r.periodic)},
            {"periods", r.periods},
            {"indecomposables", detail::words_json(p, r.indecomposables)},
            {"R", r.R}};
  }

  inline json to_json(ExthReport const& r) {
    return {{"n_max", r.n_max},
            {"fixed", r.fixed},
            {"indecomposable", r.indecomposable},
            {"pairwise_distinct", r.pairwise_distinct},
            {"counts", r.counts},
            {"counts_increasing", r.counts_increasing},
            {"per_is_everything", r.per_is_everything},
            {"per_equals_fix", r.per_equals_fix},
            {"all_pass", r.all_pass}};
  }

  inline json to_json(LtwoRow const& r) {
    json out = {{"presentation", r.presentation},
                {"endos", r.endos},
                {"max_rank", r.max_rank},
                {"violations", r.violations}};
    if (r.witness) {
      out["witness"] = *r.witness;
    }
    return out;
  }

}  // namespace takahasi

#endif  // TAKAHASI_IO_HPP_
