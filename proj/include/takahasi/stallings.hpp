// Finite automata over A ∪ A^-1, Stallings foldings and subgroup ranks.
//
// Edge labels are involutive letters (see words.hpp). An automaton with T =
// {q0} recognises a subset of the free group on A; folding, pruning and the
// rank formula |E|/2 - |Q| + 1 then describe the subgroup it generates.

#ifndef TAKAHASI_STALLINGS_HPP_
#define TAKAHASI_STALLINGS_HPP_

#include <algorithm>  // for sort, unique, binary_search
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, int64_t
#include <deque>      // for deque
#include <map>        // for map
#include <numeric>    // for iota
#include <optional>   // for optional
#include <queue>      // for queue
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <utility>    // for move, pair
#include <vector>     // for vector

#include "exception.hpp"  // for TakahasiError
#include "random.hpp"     // for SplitMix64
#include "words.hpp"      // for word_type, letter_type

namespace takahasi {

  using vertex_type = std::uint32_t;

  struct Edge {
    vertex_type source = 0;
    letter_type label  = 0;
    vertex_type target = 0;

    auto operator<=>(Edge const&) const = default;
    bool operator==(Edge const&) const  = default;
  };

  constexpr Edge dual_edge(Edge const& e) noexcept {
    return {e.target, inverse_letter(e.label), e.source};
  }

  //! A finite (A ∪ A^-1)-automaton (Q, q0, T, E) with Q = {0, ..., n - 1}.
  //! Edges form a set: they are stored sorted and without duplicates.
  class Automaton {
   public:
    Automaton() : Automaton(0, 1, 0, {0}, {}) {}

    Automaton(std::size_t              alphabet_size,
              std::size_t              vertices,
              vertex_type              base,
              std::vector<vertex_type> terminals,
              std::vector<Edge>        edges)
        : _alphabet_size(alphabet_size),
          _vertices(vertices),
          _base(base),
          _terminals(std::move(terminals)),
          _edges(std::move(edges)) {
      if (_base >= _vertices) {
        detail::fail("base vertex ", _base, " is not one of the ", _vertices,
                     " vertices");
      }
      for (auto t : _terminals) {
        if (t >= _vertices) {
          detail::fail("terminal vertex ", t, " out of range");
        }
      }
      for (auto const& e : _edges) {
        if (e.source >= _vertices || e.target >= _vertices) {
          detail::fail("edge endpoint out of range");
        }
        if (e.label >= 2 * _alphabet_size) {
          detail::fail("edge label ", e.label, " not in A ∪ A^-1");
        }
      }
      std::sort(_terminals.begin(), _terminals.end());
      _terminals.erase(std::unique(_terminals.begin(), _terminals.end()),
                       _terminals.end());
      std::sort(_edges.begin(), _edges.end());
      _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());
    }

    std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }
    std::size_t number_of_vertices() const noexcept {
      return _vertices;
    }
    std::size_t number_of_edges() const noexcept {
      return _edges.size();
    }
    vertex_type base() const noexcept {
      return _base;
    }
    std::vector<vertex_type> const& terminals() const noexcept {
      return _terminals;
    }
    std::vector<Edge> const& edges() const noexcept {
      return _edges;
    }

    bool is_terminal(vertex_type v) const noexcept {
      return std::binary_search(_terminals.begin(), _terminals.end(), v);
    }

    bool has_edge(Edge const& e) const noexcept {
      return std::binary_search(_edges.begin(), _edges.end(), e);
    }

    std::size_t out_degree(vertex_type v) const noexcept {
      return static_cast<std::size_t>(
          std::count_if(_edges.begin(), _edges.end(),
                        [v](Edge const& e) { return e.source == v; }));
    }

    //! |{q0} ∪ T|
    std::size_t base_and_terminal_count() const noexcept {
      return _terminals.size() + (is_terminal(_base) ? 0 : 1);
    }

    bool is_dual() const noexcept {
      for (auto const& e : _edges) {
        if (!has_edge(dual_edge(e))) {
          return false;
        }
      }
      return true;
    }

    bool is_deterministic() const noexcept {
      for (std::size_t i = 1; i < _edges.size(); ++i) {
        if (_edges[i].source == _edges[i - 1].source
            && _edges[i].label == _edges[i - 1].label) {
          return false;
        }
      }
      return true;
    }

    //! Every vertex lies on some path from the base to a terminal.
    bool is_trim() const {
      auto useful = useful_vertices();
      return std::all_of(useful.begin(), useful.end(), [](bool b) {
        return b;
      });
    }

    //! Dual, trim and deterministic.
    bool is_inverse() const {
      return is_dual() && is_trim() && is_deterministic();
    }

    //! Inverse, T = {q0}, and no vertex other than q0 has outdegree 1.
    bool is_stallings() const {
      if (_terminals.size() != 1 || _terminals[0] != _base || !is_inverse()) {
        return false;
      }
      for (vertex_type v = 0; v < _vertices; ++v) {
        if (v != _base && out_degree(v) < 2) {
          return false;
        }
      }
      return true;
    }

    //! useful[v] iff v is reachable from q0 and some terminal is reachable
    //! from v.
    std::vector<bool> useful_vertices() const {
      std::vector<bool> forward(_vertices, false), backward(_vertices, false);
      forward[_base] = true;
      for (auto t : _terminals) {
        backward[t] = true;
      }
      // Edge lists are small; iterate to a fixpoint.
      bool changed = true;
      while (changed) {
        changed = false;
        for (auto const& e : _edges) {
          if (forward[e.source] && !forward[e.target]) {
            forward[e.target] = true;
            changed           = true;
          }
          if (backward[e.target] && !backward[e.source]) {
            backward[e.source] = true;
            changed            = true;
          }
        }
      }
      std::vector<bool> useful(_vertices);
      for (std::size_t v = 0; v < _vertices; ++v) {
        useful[v] = forward[v] && backward[v];
      }
      return useful;
    }

    bool operator==(Automaton const&) const = default;

   private:
    std::size_t              _alphabet_size;
    std::size_t              _vertices;
    vertex_type              _base;
    std::vector<vertex_type> _terminals;
    std::vector<Edge>        _edges;
  };

  namespace detail {
    //! Keeps the vertices flagged in keep, renumbered in increasing order.
    //! Edges with a dropped endpoint are removed.
    inline Automaton induced(Automaton const&         a,
                             std::vector<bool> const& keep,
                             bool                     keep_terminals = true) {
      std::vector<vertex_type> relabel(a.number_of_vertices(), 0);
      vertex_type              n = 0;
      for (std::size_t v = 0; v < keep.size(); ++v) {
        if (keep[v]) {
          relabel[v] = n++;
        }
      }
      std::vector<vertex_type> terminals;
      if (keep_terminals) {
        for (auto t : a.terminals()) {
          if (keep[t]) {
            terminals.push_back(relabel[t]);
          }
        }
      }
      std::vector<Edge> edges;
      for (auto const& e : a.edges()) {
        if (keep[e.source] && keep[e.target]) {
          edges.push_back({relabel[e.source], e.label, relabel[e.target]});
        }
      }
      return Automaton(a.alphabet_size(), n, relabel[a.base()],
                       std::move(terminals), std::move(edges));
    }

    class UnionFind {
     public:
      explicit UnionFind(std::size_t n) : _parent(n) {
        std::iota(_parent.begin(), _parent.end(), 0);
      }
      vertex_type find(vertex_type x) {
        while (_parent[x] != x) {
          _parent[x] = _parent[_parent[x]];
          x          = _parent[x];
        }
        return x;
      }
      // The smaller representative survives, so the base vertex 0 stays 0.
      std::pair<vertex_type, vertex_type> unite(vertex_type x, vertex_type y) {
        x = find(x);
        y = find(y);
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = x;
        return {x, y};
      }

     private:
      std::vector<vertex_type> _parent;
    };
  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Trim, fold, prune
  ////////////////////////////////////////////////////////////////////////

  struct TrimResult {
    Automaton automaton;
    //! No successful path exists; automaton is ({q0}, q0, ∅, ∅).
    bool degenerate = false;
  };

  //! The subautomaton induced by the vertices on successful paths.
  inline TrimResult trim(Automaton const& a) {
    auto useful = a.useful_vertices();
    if (!useful[a.base()]) {
      return {Automaton(a.alphabet_size(), 1, 0, {}, {}), true};
    }
    return {detail::induced(a, useful), false};
  }

  //! Identifies every vertex of T with q0; the result has T = {q0}.
  inline Automaton merge_terminals(Automaton const& a) {
    std::vector<vertex_type> relabel(a.number_of_vertices());
    vertex_type              n = 0;
    for (vertex_type v = 0; v < a.number_of_vertices(); ++v) {
      if (v == a.base() || a.is_terminal(v)) {
        continue;
      }
      relabel[v] = ++n;  // 0 is reserved for the merged base
    }
    for (auto t : a.terminals()) {
      relabel[t] = 0;
    }
    relabel[a.base()] = 0;
    std::vector<Edge> edges;
    for (auto const& e : a.edges()) {
      edges.push_back({relabel[e.source], e.label, relabel[e.target]});
    }
    return Automaton(a.alphabet_size(), n + 1, 0, {0}, std::move(edges));
  }

  //! Adds p -a^-1-> q for every edge q -a-> p.
  inline Automaton dualize(Automaton const& a) {
    auto edges = a.edges();
    for (auto const& e : a.edges()) {
      edges.push_back(dual_edge(e));
    }
    return Automaton(a.alphabet_size(), a.number_of_vertices(), a.base(),
                     a.terminals(), std::move(edges));
  }

  //! Stallings foldings: identifies q <-a- p -a-> r until deterministic.
  //!
  //! Conflicting edges are resolved through a worklist with union-find
  //! vertex merging. When shuffle_seed is given the initial worklist is
  //! permuted, which changes the order in which folds happen but (as the
  //! tests check) not the result.
  inline Automaton fold(Automaton const&             a,
                        std::optional<std::uint64_t> shuffle_seed = {}) {
    std::size_t const n = a.number_of_vertices();
    detail::UnionFind uf(n);
    std::vector<std::map<letter_type, vertex_type>> out(n);
    std::deque<Edge> work(a.edges().begin(), a.edges().end());
    if (shuffle_seed) {
      std::vector<Edge> tmp(work.begin(), work.end());
      SplitMix64(*shuffle_seed).shuffle(tmp);
      work.assign(tmp.begin(), tmp.end());
    }
    while (!work.empty()) {
      Edge e = work.front();
      work.pop_front();
      vertex_type p  = uf.find(e.source);
      vertex_type q  = uf.find(e.target);
      auto [it, new_label] = out[p].emplace(e.label, q);
      if (new_label) {
        continue;
      }
      vertex_type r = uf.find(it->second);
      it->second    = r;
      if (r == q) {
        continue;
      }
      auto [keep, gone] = uf.unite(q, r);
      for (auto const& [label, target] : out[gone]) {
        work.push_back({keep, label, target});
      }
      out[gone].clear();
    }
    std::vector<bool> is_rep(n, false);
    for (vertex_type v = 0; v < n; ++v) {
      is_rep[v] = (uf.find(v) == v);
    }
    std::vector<vertex_type> relabel(n, 0);
    vertex_type              m = 0;
    for (vertex_type v = 0; v < n; ++v) {
      if (is_rep[v]) {
        relabel[v] = m++;
      }
    }
    std::vector<Edge> edges;
    for (vertex_type v = 0; v < n; ++v) {
      if (!is_rep[v]) {
        continue;
      }
      for (auto const& [label, target] : out[v]) {
        edges.push_back({relabel[v], label, relabel[uf.find(target)]});
      }
    }
    std::vector<vertex_type> terminals;
    for (auto t : a.terminals()) {
      terminals.push_back(relabel[uf.find(t)]);
    }
    return Automaton(a.alphabet_size(), m, relabel[uf.find(a.base())],
                     std::move(terminals), std::move(edges));
  }

  //! Successively removes every vertex other than q0 of outdegree <= 1.
  inline Automaton prune(Automaton const& a) {
    std::size_t const        n = a.number_of_vertices();
    std::vector<std::size_t> degree(n, 0);
    for (auto const& e : a.edges()) {
      ++degree[e.source];
    }
    std::vector<bool>        alive(n, true);
    std::vector<vertex_type> stack;
    for (vertex_type v = 0; v < n; ++v) {
      if (v != a.base() && degree[v] <= 1) {
        stack.push_back(v);
      }
    }
    while (!stack.empty()) {
      vertex_type v = stack.back();
      stack.pop_back();
      if (!alive[v]) {
        continue;
      }
      alive[v] = false;
      for (auto const& e : a.edges()) {
        // Only edges into v from live vertices change a live outdegree.
        if (e.target == v && e.source != v && alive[e.source]) {
          if (--degree[e.source] <= 1 && e.source != a.base()) {
            stack.push_back(e.source);
          }
        }
      }
    }
    return detail::induced(a, alive);
  }

  ////////////////////////////////////////////////////////////////////////
  // Stallings graphs
  ////////////////////////////////////////////////////////////////////////

  //! An automaton certified to be a Stallings automaton.
  class StallingsGraph {
   public:
    //! The trivial subgroup: one vertex, no edges.
    explicit StallingsGraph(std::size_t alphabet_size = 0)
        : _automaton(alphabet_size, 1, 0, {0}, {}) {}

    explicit StallingsGraph(Automaton a) : _automaton(std::move(a)) {
      if (!_automaton.is_stallings()) {
        detail::fail("automaton is not a Stallings automaton (needs T = {q0}, "
                     "dual, deterministic, trim, outdegree >= 2 off q0)");
      }
    }

    Automaton const& automaton() const noexcept {
      return _automaton;
    }

    std::size_t number_of_vertices() const noexcept {
      return _automaton.number_of_vertices();
    }

    std::size_t number_of_edges() const noexcept {
      return _automaton.number_of_edges();
    }

    //! |E|/2 - |Q| + 1
    std::size_t rank() const noexcept {
      return _automaton.number_of_edges() / 2 - number_of_vertices() + 1;
    }

    //! Target of the edge from v labelled x, if any.
    std::optional<vertex_type> follow(vertex_type v, letter_type x) const {
      auto const& edges = _automaton.edges();
      auto        it    = std::lower_bound(edges.begin(), edges.end(),
                                 Edge{v, x, 0});
      if (it != edges.end() && it->source == v && it->label == x) {
        return it->target;
      }
      return std::nullopt;
    }

    bool operator==(StallingsGraph const&) const = default;

   private:
    Automaton _automaton;
  };

  struct RankReport {
    std::size_t rank           = 0;
    std::size_t edge_count     = 0;
    std::size_t vertex_count   = 0;
    std::size_t terminal_count = 0;
  };

  inline RankReport rank_report(StallingsGraph const& g) {
    return {g.rank(), g.number_of_edges(), g.number_of_vertices(), 1};
  }

  struct PipelineResult {
    Automaton      merged;     // A1: T identified with q0
    Automaton      dualized;   // A2: dual and trim
    Automaton      folded;     // A3: inverse
    StallingsGraph stallings;  // A4
    RankReport     report;
  };

  //! Trim automaton -> A1 -> A2 -> A3 -> A4, keeping every stage.
  inline PipelineResult pipeline(Automaton const& a) {
    if (a.terminals().empty() || !a.is_trim()) {
      if (trim(a).degenerate) {
        detail::fail("pipeline: the automaton recognises the empty language");
      }
      detail::fail("pipeline: the automaton must be trim");
    }
    auto a1 = merge_terminals(a);
    auto a2 = dualize(a1);
    auto a3 = fold(a2);
    auto a4 = StallingsGraph(prune(a3));
    auto r  = rank_report(a4);
    return {std::move(a1), std::move(a2), std::move(a3), std::move(a4), r};
  }

  //! Bouquet of the generators, folded and pruned. Generators are freely
  //! reduced first; generators that reduce to the empty word are ignored.
  inline StallingsGraph subgroup(std::size_t                   alphabet_size,
                                 std::vector<word_type> const& generators) {
    std::vector<Edge> edges;
    vertex_type       next = 1;
    for (auto const& g : generators) {
      for (auto x : g) {
        if (x >= 2 * alphabet_size) {
          detail::fail("generator letter ", x, " not in A ∪ A^-1");
        }
      }
      auto w = free_reduce(g);
      if (w.empty()) {
        continue;
      }
      vertex_type prev = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        vertex_type to = (i + 1 == w.size()) ? 0 : next++;
        Edge        e{prev, w[i], to};
        edges.push_back(e);
        edges.push_back(dual_edge(e));
        prev = to;
      }
    }
    Automaton bouquet(alphabet_size, next, 0, {0}, std::move(edges));
    return StallingsGraph(prune(fold(bouquet)));
  }

  //! True iff the reduced form of w labels a loop at q0.
  inline bool membership(StallingsGraph const& g, word_type const& w) {
    vertex_type v = g.automaton().base();
    for (auto x : free_reduce(w)) {
      auto next = g.follow(v, x);
      if (!next) {
        return false;
      }
      v = *next;
    }
    return v == g.automaton().base();
  }

  //! |E| - |Q| + |{q0} ∪ T| for trim automata, |E| otherwise.
  inline std::int64_t ragr_bound(Automaton const& a) {
    auto e = static_cast<std::int64_t>(a.number_of_edges());
    if (!a.is_trim()) {
      return e;
    }
    return e - static_cast<std::int64_t>(a.number_of_vertices())
           + static_cast<std::int64_t>(a.base_and_terminal_count());
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical forms and bases
  ////////////////////////////////////////////////////////////////////////

  //! Vertices renumbered in BFS order from q0 (labels in increasing order),
  //! restricted to the part reachable from q0. Two deterministic based
  //! graphs are isomorphic iff their canonical forms are equal.
  struct CanonicalForm {
    std::size_t       vertices = 0;
    std::vector<Edge> edges;
    bool operator==(CanonicalForm const&) const = default;
  };

  inline CanonicalForm canonical_form(Automaton const& a) {
    if (!a.is_deterministic()) {
      detail::fail("canonical_form needs a deterministic automaton");
    }
    constexpr vertex_type    unseen = ~vertex_type(0);
    std::vector<vertex_type> order(a.number_of_vertices(), unseen);
    std::queue<vertex_type>  queue;
    order[a.base()] = 0;
    queue.push(a.base());
    vertex_type n = 1;
    // Edges are sorted by (source, label), so the outgoing edges of a
    // vertex form a contiguous run in label order.
    auto const& edges = a.edges();
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      auto it = std::lower_bound(edges.begin(), edges.end(), Edge{v, 0, 0});
      for (; it != edges.end() && it->source == v; ++it) {
        if (order[it->target] == unseen) {
          order[it->target] = n++;
          queue.push(it->target);
        }
      }
    }
    CanonicalForm cf;
    cf.vertices = n;
    for (auto const& e : edges) {
      if (order[e.source] != unseen) {
        cf.edges.push_back({order[e.source], e.label, order[e.target]});
      }
    }
    std::sort(cf.edges.begin(), cf.edges.end());
    return cf;
  }

  //! A free basis of the subgroup read off a BFS spanning tree: one reduced
  //! word per non-tree edge pair. Its size is rank().
  inline std::vector<word_type> basis(StallingsGraph const& g) {
    auto const&              a = g.automaton();
    std::size_t const        n = a.number_of_vertices();
    std::vector<word_type>   path(n);
    std::vector<bool>        seen(n, false);
    std::vector<bool>        tree_edge(a.number_of_edges(), false);
    std::queue<vertex_type>  queue;
    auto const&              edges = a.edges();
    seen[a.base()]                 = true;
    queue.push(a.base());
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (std::size_t i = 0; i < edges.size(); ++i) {
        auto const& e = edges[i];
        if (e.source == v && !seen[e.target]) {
          seen[e.target] = true;
          path[e.target] = path[v];
          path[e.target].push_back(e.label);
          tree_edge[i] = true;
          auto j = static_cast<std::size_t>(
              std::lower_bound(edges.begin(), edges.end(), dual_edge(e))
              - edges.begin());
          tree_edge[j] = true;
          queue.push(e.target);
        }
      }
    }
    std::vector<word_type> result;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto const& e = edges[i];
      if (tree_edge[i] || is_inverted(e.label)) {
        continue;
      }
      word_type w = path[e.source];
      w.push_back(e.label);
      auto back = invert(path[e.target]);
      w.insert(w.end(), back.begin(), back.end());
      result.push_back(free_reduce(w));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Ascending chains
  ////////////////////////////////////////////////////////////////////////

  struct ChainReport {
    std::vector<std::size_t> ranks;
    //! Least 1-based p with H_p = H_{p+1} = ... = H_n within the chain.
    std::size_t stabilization_index = 0;
    //! p < n, i.e. at least one repetition was actually observed.
    bool witnessed = false;
  };

  //! Checks H_1 ⊆ H_2 ⊆ ... via generator membership, reports ranks and the
  //! stabilisation index. Throws naming the first non-ascending pair.
  inline ChainReport
  chain_check(std::size_t                                alphabet_size,
              std::vector<std::vector<word_type>> const& chain) {
    if (chain.empty()) {
      detail::fail("chain_check: empty chain");
    }
    std::vector<StallingsGraph> graphs;
    for (auto const& gens : chain) {
      graphs.push_back(subgroup(alphabet_size, gens));
    }
    ChainReport report;
    for (std::size_t n = 0; n < graphs.size(); ++n) {
      report.ranks.push_back(graphs[n].rank());
      if (n + 1 < graphs.size()) {
        for (auto const& w : chain[n]) {
          if (!membership(graphs[n + 1], w)) {
            detail::fail("chain not ascending at pair (", n + 1, ",", n + 2,
                         "): a generator of H_", n + 1, " is not in H_",
                         n + 2);
          }
        }
      }
    }
    std::size_t p    = graphs.size();
    auto        last = canonical_form(graphs.back().automaton());
    while (p > 1 && canonical_form(graphs[p - 2].automaton()) == last) {
      --p;
    }
    report.stabilization_index = p;
    report.witnessed           = p < graphs.size();
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random automata and DOT output
  ////////////////////////////////////////////////////////////////////////

  //! Random automaton with between 1 and max_vertices vertices, at most
  //! max_edges edges, base 0 and a random nonempty terminal set.
  inline Automaton random_automaton(SplitMix64& rng,
                                    std::size_t max_vertices,
                                    std::size_t alphabet_size,
                                    std::size_t max_edges) {
    auto n = static_cast<std::size_t>(rng.between(1, max_vertices));
    auto m = static_cast<std::size_t>(rng.between(1, max_edges));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m; ++i) {
      edges.push_back({static_cast<vertex_type>(rng.below(n)),
                       static_cast<letter_type>(rng.below(2 * alphabet_size)),
                       static_cast<vertex_type>(rng.below(n))});
    }
    std::vector<vertex_type> terminals;
    for (vertex_type v = 0; v < n; ++v) {
      if (rng.below(3) == 0) {
        terminals.push_back(v);
      }
    }
    if (terminals.empty()) {
      terminals.push_back(static_cast<vertex_type>(rng.below(n)));
    }
    return Automaton(alphabet_size, n, 0, std::move(terminals),
                     std::move(edges));
  }

  //! Random dual automaton whose underlying graph is connected (a random
  //! spanning tree plus extra edges), T = {q0}.
  inline Automaton random_dual_automaton(SplitMix64& rng,
                                         std::size_t max_vertices,
                                         std::size_t alphabet_size,
                                         std::size_t extra_edges) {
    auto n = static_cast<std::size_t>(rng.between(1, max_vertices));
    std::vector<Edge> edges;
    auto              random_label = [&] {
      return static_cast<letter_type>(rng.below(2 * alphabet_size));
    };
    for (vertex_type v = 1; v < n; ++v) {
      Edge e{static_cast<vertex_type>(rng.below(v)), random_label(), v};
      edges.push_back(e);
      edges.push_back(dual_edge(e));
    }
    auto extra = rng.below(extra_edges + 1);
    for (std::size_t i = 0; i < extra; ++i) {
      Edge e{static_cast<vertex_type>(rng.below(n)), random_label(),
             static_cast<vertex_type>(rng.below(n))};
      edges.push_back(e);
      edges.push_back(dual_edge(e));
    }
    return Automaton(alphabet_size, n, 0, {0}, std::move(edges));
  }

  //! Graphviz rendering; inverse edges are drawn only if the automaton is
  //! not dual.
  inline std::string to_dot(Automaton const& a, Alphabet const& alphabet) {
    bool const         dual = a.is_dual();
    std::ostringstream os;
    os << "digraph automaton {\n  rankdir=LR;\n";
    for (vertex_type v = 0; v < a.number_of_vertices(); ++v) {
      os << "  " << v << " [shape="
         << (a.is_terminal(v) ? "doublecircle" : "circle")
         << (v == a.base() ? ", style=bold" : "") << "];\n";
    }
    for (auto const& e : a.edges()) {
      if (dual && is_inverted(e.label)) {
        continue;
      }
      os << "  " << e.source << " -> " << e.target << " [label=\""
         << alphabet.name(e.label) << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace takahasi

#endif  // TAKAHASI_STALLINGS_HPP_
