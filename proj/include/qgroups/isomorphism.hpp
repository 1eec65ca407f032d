#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "group_algorithms.hpp"
#include "limits.hpp"
#include "perm_group.hpp"
#include "stab_chain.hpp"

namespace qgroups {

// Per-element isomorphism invariants of a tabulated group.
struct ElementProfile
{
  std::vector<std::uint32_t> order;
  std::vector<std::uint64_t> class_size;
  std::vector<std::uint32_t> class_of;
  std::vector<ConjugacyClass> classes;

  explicit ElementProfile(CayleyTable const &t)
  {
    classes = conjugacy_classes(t, &class_of);
    order = t.element_orders();
    class_size.resize(t.size());
    for (Index x = 0; x < t.size(); ++x)
      class_size[x] = classes[class_of[x]].size;
  }

  bool same(Index x, ElementProfile const &other, Index y) const
  {
    return order[x] == other.order[y] && class_size[x] == other.class_size[y];
  }
};

// Greedy generating sequence: each step adds the element (one per conjugacy
// class) that enlarges the generated subgroup most, preferring small classes
// so that candidate lists stay short.
inline std::vector<Index> generating_sequence(CayleyTable const &t, ElementProfile const &p)
{
  std::vector<std::vector<Index>> members(p.classes.size());
  for (Index x = 0; x < t.size(); ++x)
    members[p.class_of[x]].push_back(x);
  std::vector<Index> gens;
  auto s = trivial_set(t);
  while (s.size() < t.size()) {
    std::optional<Index> best;
    std::size_t best_size = 0;
    for (std::size_t c = 0; c < members.size(); ++c) {
      Index x = 0;
      for (auto m : members[c]) {
        if (!s.contains(m)) {
          x = m;
          break;
        }
      }
      if (x == 0)
        continue;
      auto trial = s;
      extend(t, trial, x);
      auto better = [&] {
        if (!best || trial.size() != best_size)
          return !best || trial.size() > best_size;
        if (p.class_size[x] != p.class_size[*best])
          return p.class_size[x] < p.class_size[*best];
        return p.order[x] > p.order[*best];
      };
      if (better()) {
        best = x;
        best_size = trial.size();
      }
    }
    gens.push_back(*best);
    extend(t, s, *best);
  }
  return gens;
}

// Backtracking search for isomorphisms a -> b determined by the images of a
// generating sequence of a. Candidates must match the element profile, and
// every partial assignment must extend to an injective homomorphism on the
// subgroup generated so far (checked on the Cayley graph of that subgroup).
class HomSearch
{
public:
  HomSearch(CayleyTable const &a, ElementProfile const &pa, CayleyTable const &b,
            ElementProfile const &pb, std::vector<Index> gens)
  : _a(a), _b(b), _pa(pa), _pb(pb), _gens(std::move(gens))
  {
    for (auto g : _gens) {
      auto col = a.right_column_of(g);
      _columns.push_back(std::move(col));
      std::vector<Index> cands;
      for (Index y = 0; y < b.size(); ++y) {
        if (pa.same(g, pb, y))
          cands.push_back(y);
      }
      _candidates.push_back(std::move(cands));
    }
    _phi.assign(a.size(), 0);
    _stamp.assign(a.size(), 0);
    _used.assign(b.size(), 0);
  }

  std::vector<Index> const &generators() const { return _gens; }
  std::vector<Index> const &candidates(std::size_t level) const { return _candidates[level]; }
  std::uint64_t nodes() const { return _nodes; }

  // First isomorphism extending the given images of the leading generators,
  // as the full element map a -> b.
  std::optional<std::vector<Index>> find(std::vector<Index> prefix = {})
  {
    _images = std::move(prefix);
    if (_gens.empty())
      return std::vector<Index>{0};
    auto fixed = _images.size();
    for (std::size_t k = 0; k < fixed; ++k) {
      if (!consistent(k))
        return std::nullopt;
    }
    if (fixed == _gens.size())
      return map_for(fixed - 1);
    if (search(fixed))
      return map_for(_gens.size() - 1);
    return std::nullopt;
  }

private:
  bool search(std::size_t k)
  {
    for (auto y : _candidates[k]) {
      if (++_nodes > limits().search_nodes)
        throw BudgetExceeded("isomorphism search exceeded " +
                             std::to_string(limits().search_nodes) + " nodes");
      _images.push_back(y);
      if (consistent(k) && (k + 1 == _gens.size() || search(k + 1)))
        return true;
      _images.pop_back();
    }
    return false;
  }

  // Cheap relations first, then the full homomorphism check on <g_0..g_k>.
  bool consistent(std::size_t k)
  {
    auto gk = _gens[k], yk = _images[k];
    if (!_pa.same(gk, _pb, yk))
      return false;
    for (std::size_t j = 0; j < k; ++j) {
      auto p = _a.mul(_gens[j], gk), q = _b.mul(_images[j], yk);
      if (!_pa.same(p, _pb, q))
        return false;
    }
    return extend_map(k);
  }

  bool extend_map(std::size_t k)
  {
    ++_epoch;
    std::vector<std::vector<std::uint32_t>> words;
    for (std::size_t i = 0; i <= k; ++i)
      words.push_back(_b.word(_images[i]));
    _queue.assign(1, 0);
    _phi[0] = 0;
    _stamp[0] = _epoch;
    _used_list.clear();
    _used[0] = 1;
    _used_list.push_back(0);
    bool ok = true;
    for (std::size_t q = 0; ok && q < _queue.size(); ++q) {
      auto x = _queue[q];
      for (std::size_t i = 0; ok && i <= k; ++i) {
        auto y = _columns[i][x];
        auto z = _b.apply_word(_phi[x], words[i]);
        if (_stamp[y] == _epoch) {
          ok = _phi[y] == z;
        } else if (_used[z]) {
          ok = false;
        } else {
          _stamp[y] = _epoch;
          _phi[y] = z;
          _used[z] = 1;
          _used_list.push_back(z);
          _queue.push_back(y);
        }
      }
    }
    for (auto z : _used_list)
      _used[z] = 0;
    return ok;
  }

  std::vector<Index> map_for(std::size_t k)
  {
    extend_map(k);
    return _phi;
  }

  CayleyTable const &_a, &_b;
  ElementProfile const &_pa, &_pb;
  std::vector<Index> _gens;
  std::vector<std::vector<Index>> _columns;
  std::vector<std::vector<Index>> _candidates;
  std::vector<Index> _images;

  std::vector<Index> _phi, _queue, _used_list;
  std::vector<std::uint32_t> _stamp;
  std::vector<char> _used;
  std::uint32_t _epoch = 0;
  std::uint64_t _nodes = 0;
};

// True iff map is a bijective homomorphism a -> b; checking x*s for the
// table generators s is enough, by induction on word length.
inline bool verify_isomorphism(CayleyTable const &a, CayleyTable const &b, std::vector<Index> const &map)
{
  if (a.size() != b.size() || map.size() != a.size() || map[0] != 0)
    return false;
  std::vector<char> hit(b.size(), 0);
  for (auto y : map) {
    if (y >= b.size() || hit[y])
      return false;
    hit[y] = 1;
  }
  for (std::size_t s = 0; s < a.generator_count(); ++s) {
    auto img = map[a.generator(s)];
    auto col = b.right_column_of(img);
    for (Index x = 0; x < a.size(); ++x) {
      if (map[a.right(s, x)] != col[map[x]])
        return false;
    }
  }
  return true;
}

struct Isomorphism
{
  std::vector<Index> generators; // generating sequence of the first group
  std::vector<Index> images;     // their images in the second group
  std::vector<Index> map;        // full element map
};

inline std::optional<Isomorphism> find_isomorphism(CayleyTable const &a, CayleyTable const &b)
{
  if (a.size() != b.size())
    return std::nullopt;
  if (fingerprint(a) != fingerprint(b))
    return std::nullopt;
  ElementProfile pa(a), pb(b);
  HomSearch search(a, pa, b, pb, generating_sequence(a, pa));
  auto map = search.find();
  if (!map)
    return std::nullopt;
  if (!verify_isomorphism(a, b, *map))
    throw Error("internal: isomorphism witness failed verification");
  Isomorphism iso{search.generators(), {}, std::move(*map)};
  for (auto g : iso.generators)
    iso.images.push_back(iso.map[g]);
  return iso;
}

// Isomorphism test for permutation groups; the witness maps generating
// elements of g to elements of h (as permutations).
struct PermIsomorphism
{
  std::vector<Permutation> generators;
  std::vector<Permutation> images;
};

inline std::optional<PermIsomorphism> isomorphism(PermGroup const &g, PermGroup const &h)
{
  if (g.order() != h.order())
    return std::nullopt;
  if (g.order() > limits().isomorphism)
    throw CapacityError("isomorphism test above order " + std::to_string(limits().isomorphism));
  auto iso = find_isomorphism(g.table(), h.table());
  if (!iso)
    return std::nullopt;
  PermIsomorphism w;
  for (std::size_t i = 0; i < iso->generators.size(); ++i) {
    w.generators.push_back(g.element(iso->generators[i]));
    w.images.push_back(h.element(iso->images[i]));
  }
  return w;
}

inline bool isomorphic(PermGroup const &g, PermGroup const &h) { return isomorphism(g, h).has_value(); }

// Aut(G) as permutations of G's element indices, computed level by level:
// with a generating sequence g_0..g_{r-1}, |Aut| is the product over i of
// the number of possible images of g_i once g_0..g_{i-1} are fixed. Each
// level's candidates are split into orbits of the automorphisms found so
// far and one existence search is run per orbit.
struct AutomorphismGroup
{
  std::uint64_t order = 0;
  std::vector<std::uint64_t> level_sizes;
  std::vector<std::vector<Index>> generators; // element maps
  PermGroup group;                            // on |G| points
  PermGroup inner;
  std::uint64_t inner_order = 0;
  std::uint64_t central_quotient_order = 0;
};

inline AutomorphismGroup automorphism_group(CayleyTable const &t)
{
  auto const n = t.size();
  ElementProfile p(t);
  auto gens = generating_sequence(t, p);
  HomSearch search(t, p, t, p, gens);
  auto const r = gens.size();

  AutomorphismGroup result;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto root = [&](std::uint32_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  auto absorb = [&](std::vector<Index> const &map) {
    for (Index x = 0; x < n; ++x) {
      auto a = root(x), b = root(map[x]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  };

  result.level_sizes.assign(r, 0);
  for (std::size_t i = r; i-- > 0;) {
    std::vector<Index> prefix(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(i));
    // An orbit holding one impossible image holds only impossible images.
    std::vector<Index> rejected;
    for (auto c : search.candidates(i)) {
      if (root(c) == root(gens[i]))
        continue;
      bool known_bad = false;
      for (auto d : rejected)
        known_bad = known_bad || root(d) == root(c);
      if (known_bad)
        continue;
      auto trial = prefix;
      trial.push_back(c);
      if (auto map = search.find(trial)) {
        absorb(*map);
        result.generators.push_back(std::move(*map));
      } else {
        rejected.push_back(c);
      }
    }
    std::uint64_t count = 0;
    for (auto c : search.candidates(i))
      count += root(c) == root(gens[i]);
    result.level_sizes[i] = count;
  }
  result.order = 1;
  for (auto s : result.level_sizes)
    result.order *= s;

  std::vector<Permutation> perms;
  for (auto const &m : result.generators)
    perms.emplace_back(std::vector<std::uint32_t>(m.begin(), m.end()));
  if (perms.empty())
    perms.push_back(Permutation(n));
  StabChain chain(n, perms, std::vector<std::uint32_t>(gens.begin(), gens.end()));
  if (chain.order() != result.order)
    throw Error("internal: automorphism group order mismatch");
  result.group = PermGroup(n, perms);

  std::vector<Permutation> inner;
  for (std::size_t s = 0; s < t.generator_count(); ++s) {
    std::vector<std::uint32_t> img(n);
    for (Index x = 0; x < n; ++x)
      img[x] = t.conjugate_by_generator(x, s);
    inner.emplace_back(img);
  }
  if (inner.empty())
    inner.push_back(Permutation(n));
  result.inner = PermGroup(n, inner);
  result.inner_order = StabChain(n, inner, std::vector<std::uint32_t>(gens.begin(), gens.end())).order();
  result.central_quotient_order = n / center(t).size();
  return result;
}

// Permutation-group front end with the configured size tiers.
inline AutomorphismGroup automorphism_group(PermGroup const &g, bool extended = false)
{
  auto bound = extended ? limits().automorphism_extended : limits().automorphism;
  if (g.order() > bound)
    throw CapacityError("automorphism group above order " + std::to_string(bound));
  return automorphism_group(g.table());
}

} // namespace qgroups
