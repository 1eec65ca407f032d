#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace qgroups {

// Simple undirected graph on at most 64 vertices, adjacency as bit rows.
class Graph
{
public:
  using Bits = std::uint64_t;

  explicit Graph(std::size_t n = 0) : _adj(n, 0)
  {
    if (n > 64)
      throw CapacityError("graphs are limited to 64 vertices");
  }

  std::size_t size() const { return _adj.size(); }

  void add_edge(std::size_t u, std::size_t v)
  {
    if (u == v || u >= size() || v >= size())
      throw InvalidArgument("bad edge");
    _adj[u] |= Bits(1) << v;
    _adj[v] |= Bits(1) << u;
  }

  bool adjacent(std::size_t u, std::size_t v) const { return (_adj[u] >> v) & 1; }
  Bits neighbours(std::size_t u) const { return _adj[u]; }
  std::size_t degree(std::size_t u) const { return static_cast<std::size_t>(std::popcount(_adj[u])); }

  std::size_t edge_count() const
  {
    std::size_t e = 0;
    for (std::size_t u = 0; u < size(); ++u)
      e += degree(u);
    return e / 2;
  }

  Bits all() const { return size() == 64 ? ~Bits(0) : (Bits(1) << size()) - 1; }

  Graph induced(std::vector<std::size_t> const &vertices) const
  {
    Graph h(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
      for (std::size_t j = i + 1; j < vertices.size(); ++j)
        if (adjacent(vertices[i], vertices[j]))
          h.add_edge(i, j);
    return h;
  }

  Graph complement() const
  {
    Graph h(size());
    for (std::size_t u = 0; u < size(); ++u)
      for (std::size_t v = u + 1; v < size(); ++v)
        if (!adjacent(u, v))
          h.add_edge(u, v);
    return h;
  }

  // Length of a shortest cycle, 0 for a forest.
  std::size_t girth() const
  {
    std::size_t best = 0;
    for (std::size_t s = 0; s < size(); ++s) {
      std::vector<int> dist(size(), -1), parent(size(), -1);
      std::vector<std::size_t> queue{s};
      dist[s] = 0;
      for (std::size_t i = 0; i < queue.size(); ++i) {
        auto u = queue[i];
        for (std::size_t v = 0; v < size(); ++v) {
          if (!adjacent(u, v) || static_cast<int>(v) == parent[u])
            continue;
          if (dist[v] < 0) {
            dist[v] = dist[u] + 1;
            parent[v] = static_cast<int>(u);
            queue.push_back(v);
          } else {
            auto len = static_cast<std::size_t>(dist[u] + dist[v] + 1);
            if (best == 0 || len < best)
              best = len;
          }
        }
      }
    }
    return best;
  }

private:
  std::vector<Bits> _adj;
};

inline Graph complete_graph(std::size_t n)
{
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      g.add_edge(u, v);
  return g;
}

// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
inline Graph petersen_graph()
{
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b)
      pairs.emplace_back(a, b);
  Graph g(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[i];
      auto [c, d] = pairs[j];
      if (a != c && a != d && b != c && b != d)
        g.add_edge(i, j);
    }
  return g;
}

namespace detail {

// Upper bound on the independence number of `cand`: the number of cliques in
// a greedy clique cover.
inline std::size_t clique_cover_bound(Graph const &g, Graph::Bits cand)
{
  std::size_t cliques = 0;
  while (cand) {
    auto v = static_cast<std::size_t>(std::countr_zero(cand));
    auto clique = Graph::Bits(1) << v;
    auto common = g.neighbours(v) & cand;
    while (common) {
      auto w = static_cast<std::size_t>(std::countr_zero(common));
      clique |= Graph::Bits(1) << w;
      common &= g.neighbours(w);
    }
    cand &= ~clique;
    ++cliques;
  }
  return cliques;
}

struct IndependentSetSearch
{
  Graph const &g;
  std::size_t target = 0; // stop at the first set of this size (0: maximise)
  std::vector<std::size_t> current, best;

  // Vertices are tried in increasing order, including before excluding, so
  // among sets of one size the first found is lexicographically smallest.
  bool run(Graph::Bits cand)
  {
    if (target && current.size() == target) {
      best = current;
      return true;
    }
    if (!cand) {
      if (current.size() > best.size())
        best = current;
      return false;
    }
    auto goal = target ? target : best.size() + 1;
    if (current.size() + detail::clique_cover_bound(g, cand) < goal)
      return false;
    auto v = static_cast<std::size_t>(std::countr_zero(cand));
    auto rest = cand & ~(Graph::Bits(1) << v);
    current.push_back(v);
    if (run(rest & ~g.neighbours(v)))
      return true;
    current.pop_back();
    return run(rest);
  }
};

} // namespace detail

// A maximum independent set, the lexicographically smallest one as a sorted
// vertex list.
inline std::vector<std::size_t> max_independent_set(Graph const &g)
{
  detail::IndependentSetSearch size_search{g};
  size_search.run(g.all());
  auto size = size_search.best.size();
  if (size == 0)
    return {};
  detail::IndependentSetSearch pick{g, size};
  pick.run(g.all());
  return pick.best;
}

// All maximal cliques (Bron-Kerbosch with pivoting), each sorted, in
// lexicographic order.
inline std::vector<std::vector<std::size_t>> maximal_cliques(Graph const &g)
{
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> r;
  auto rec = [&](auto &&self, Graph::Bits p, Graph::Bits x) -> void {
    if (!p && !x) {
      out.push_back(r);
      return;
    }
    auto px = p | x;
    auto pivot = static_cast<std::size_t>(std::countr_zero(px));
    for (auto c = px; c; c &= c - 1) {
      auto u = static_cast<std::size_t>(std::countr_zero(c));
      if (std::popcount(p & g.neighbours(u)) > std::popcount(p & g.neighbours(pivot)))
        pivot = u;
    }
    for (auto c = p & ~g.neighbours(pivot); c; c &= c - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(c));
      auto bit = Graph::Bits(1) << v;
      r.push_back(v);
      self(self, p & g.neighbours(v), x & g.neighbours(v));
      r.pop_back();
      p &= ~bit;
      x |= bit;
    }
  };
  rec(rec, g.all(), 0);
  for (auto &c : out)
    std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Backtracking over adjacency-preserving bijections a -> b.
// Calls visit(map) for each; stops when visit returns false.
template <class Visit>
void graph_isomorphisms(Graph const &a, Graph const &b, Visit &&visit)
{
  auto n = a.size();
  if (b.size() != n || a.edge_count() != b.edge_count())
    return;
  std::vector<std::size_t> map(n), order(n);
  std::vector<char> used(n, 0);
  // vertex order: BFS-like, each next vertex has most mapped neighbours
  {
    std::vector<char> placed(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = n;
      int score = -1;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v])
          continue;
        int s = 0;
        for (std::size_t j = 0; j < i; ++j)
          s += a.adjacent(v, order[j]);
        if (s > score || (s == score && a.degree(v) > a.degree(best))) {
          score = s;
          best = v;
        }
      }
      order[i] = best;
      placed[best] = 1;
    }
  }
  bool stop = false;
  auto rec = [&](auto &&self, std::size_t i) -> void {
    if (stop)
      return;
    if (i == n) {
      stop = !visit(map);
      return;
    }
    auto v = order[i];
    for (std::size_t w = 0; w < n && !stop; ++w) {
      if (used[w] || a.degree(v) != b.degree(w))
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = a.adjacent(v, order[j]) == b.adjacent(w, map[order[j]]);
      if (!ok)
        continue;
      used[w] = 1;
      map[v] = w;
      self(self, i + 1);
      used[w] = 0;
    }
  };
  rec(rec, 0);
}

} // namespace detail

inline std::optional<std::vector<std::size_t>> graph_isomorphism(Graph const &a, Graph const &b)
{
  std::optional<std::vector<std::size_t>> found;
  detail::graph_isomorphisms(a, b, [&](std::vector<std::size_t> const &m) {
    found = m;
    return false;
  });
  return found;
}

inline std::uint64_t automorphism_count(Graph const &g)
{
  std::uint64_t count = 0;
  detail::graph_isomorphisms(g, g, [&](std::vector<std::size_t> const &) {
    ++count;
    return true;
  });
  return count;
}

// Graphviz text; labels[i] names vertex i.
inline std::string to_dot(Graph const &g, std::vector<std::string> const &labels, std::string const &name = "G")
{
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v)
    os << "  v" << v << " [label=\"" << labels[v] << "\"];\n";
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v))
        os << "  v" << u << " -- v" << v << ";\n";
  os << "}\n";
  return os.str();
}

} // namespace qgroups
