#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "errors.hpp"
#include "perm_group.hpp"

namespace qgroups {

using Index = CayleyTable::Index;

// A subgroup of a tabulated group, as a set of element indices together with
// the elements it was generated from.
struct ElementSet
{
  std::vector<Index> generators;
  std::vector<Index> elements; // discovery order, elements[0] == 0
  std::vector<char> member;

  std::size_t size() const { return elements.size(); }
  bool contains(Index x) const { return member[x] != 0; }

  std::vector<Index> sorted() const
  {
    auto s = elements;
    std::sort(s.begin(), s.end());
    return s;
  }
};

inline ElementSet trivial_set(CayleyTable const &t)
{
  ElementSet h;
  h.elements.push_back(0);
  h.member.assign(t.size(), 0);
  h.member[0] = 1;
  return h;
}

// Adds g to the generators of h and closes again. Old elements only need
// the new generator; new elements need all of them.
inline void extend(CayleyTable const &t, ElementSet &h, Index g)
{
  if (h.contains(g))
    return;
  h.generators.push_back(g);
  auto add = [&](Index y) {
    if (!h.member[y]) {
      h.member[y] = 1;
      h.elements.push_back(y);
    }
  };
  auto const old = h.elements.size();
  auto const word = t.word(g);
  for (std::size_t i = 0; i < old; ++i)
    add(t.apply_word(h.elements[i], word));
  std::vector<std::vector<std::uint32_t>> words;
  for (auto s : h.generators)
    words.push_back(t.word(s));
  for (std::size_t i = old; i < h.elements.size(); ++i) {
    for (auto const &w : words)
      add(t.apply_word(h.elements[i], w));
  }
}

inline ElementSet generate(CayleyTable const &t, std::vector<Index> const &seeds)
{
  auto h = trivial_set(t);
  for (auto s : seeds)
    extend(t, h, s);
  return h;
}

inline ElementSet whole_group(CayleyTable const &t)
{
  std::vector<Index> gens;
  for (std::size_t s = 0; s < t.generator_count(); ++s)
    gens.push_back(t.generator(s));
  return generate(t, gens);
}

// Smallest subgroup containing the seeds and closed under conjugation by the
// conjugators (by default the generators of the whole table).
inline ElementSet normal_closure(CayleyTable const &t, std::vector<Index> const &seeds,
                                 std::vector<Index> const *conjugators = nullptr)
{
  auto h = generate(t, seeds);
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    auto x = h.generators[i];
    if (conjugators) {
      for (auto g : *conjugators)
        extend(t, h, t.conjugate(x, g));
    } else {
      for (std::size_t s = 0; s < t.generator_count(); ++s)
        extend(t, h, t.conjugate_by_generator(x, s));
    }
  }
  return h;
}

inline bool is_normal(CayleyTable const &t, ElementSet const &h)
{
  for (auto x : h.generators) {
    for (std::size_t s = 0; s < t.generator_count(); ++s) {
      if (!h.contains(t.conjugate_by_generator(x, s)))
        return false;
    }
  }
  return true;
}

inline ElementSet center(CayleyTable const &t)
{
  auto z = trivial_set(t);
  for (Index x = 1; x < t.size(); ++x) {
    if (z.contains(x))
      continue;
    bool central = true;
    for (std::size_t s = 0; central && s < t.generator_count(); ++s)
      central = t.left(s, x) == t.right(s, x);
    if (central)
      extend(t, z, x);
  }
  return z;
}

// Derived subgroup of the subgroup h (the whole table when h is null).
inline ElementSet derived_subgroup(CayleyTable const &t, ElementSet const *h = nullptr)
{
  std::vector<Index> gens;
  if (h) {
    gens = h->generators;
  } else {
    for (std::size_t s = 0; s < t.generator_count(); ++s)
      gens.push_back(t.generator(s));
  }
  std::vector<Index> seeds;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      seeds.push_back(t.commutator(gens[i], gens[j]));
  }
  return h ? normal_closure(t, seeds, &gens) : normal_closure(t, seeds);
}

struct ConjugacyClass
{
  Index representative; // smallest index in the class
  std::uint64_t size;
  std::uint32_t element_order;
};

// Classes ordered by representative; class_of[x] indexes into the result.
inline std::vector<ConjugacyClass> conjugacy_classes(CayleyTable const &t,
                                                     std::vector<std::uint32_t> *class_of = nullptr)
{
  std::vector<std::uint32_t> label(t.size(), UINT32_MAX);
  std::vector<ConjugacyClass> classes;
  auto const &orders = t.element_orders();
  std::vector<Index> orbit;
  for (Index x = 0; x < t.size(); ++x) {
    if (label[x] != UINT32_MAX)
      continue;
    auto id = static_cast<std::uint32_t>(classes.size());
    orbit.assign(1, x);
    label[x] = id;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (std::size_t s = 0; s < t.generator_count(); ++s) {
        auto y = t.conjugate_by_generator(orbit[k], s);
        if (label[y] == UINT32_MAX) {
          label[y] = id;
          orbit.push_back(y);
        }
      }
    }
    classes.push_back({x, orbit.size(), orders[x]});
  }
  if (class_of)
    *class_of = std::move(label);
  return classes;
}

// Table of G/N for a normal subgroup N; label[x] is the quotient element
// (coset) containing x, and the quotient generators are the images of the
// table generators.
struct QuotientTable
{
  CayleyTable table;
  std::vector<Index> label;
};

inline QuotientTable quotient(CayleyTable const &t, ElementSet const &n)
{
  if (!is_normal(t, n))
    throw InvalidArgument("quotient by a subgroup that is not normal");
  constexpr Index none = UINT32_MAX;
  std::vector<Index> label(t.size(), none);
  std::vector<std::vector<Index>> cosets{n.elements};
  for (auto x : n.elements)
    label[x] = 0;
  std::vector<CayleyTable::Column> columns(t.generator_count());
  // Right multiplication by s maps the coset Nx onto Nxs.
  for (Index c = 0; c < cosets.size(); ++c) {
    for (std::size_t s = 0; s < t.generator_count(); ++s) {
      auto y = t.right(s, cosets[c][0]);
      if (label[y] == none) {
        auto d = static_cast<Index>(cosets.size());
        std::vector<Index> members;
        members.reserve(n.size());
        for (auto z : cosets[c]) {
          auto w = t.right(s, z);
          label[w] = d;
          members.push_back(w);
        }
        cosets.push_back(std::move(members));
      }
      columns[s].push_back(label[y]);
    }
    if (c > 0)
      std::vector<Index>().swap(cosets[c - 1]);
  }
  auto size = static_cast<Index>(cosets.size());
  return {CayleyTable(std::move(columns), size), std::move(label)};
}

// All normal subgroups: normal closures of single classes, closed under
// joins. Sorted by order, then by element list.
inline std::vector<ElementSet> normal_subgroups(CayleyTable const &t)
{
  auto classes = conjugacy_classes(t);
  std::vector<ElementSet> found;
  std::map<std::vector<Index>, std::size_t> seen;
  auto add = [&](ElementSet h) {
    auto key = h.sorted();
    if (seen.emplace(std::move(key), found.size()).second)
      found.push_back(std::move(h));
  };
  add(trivial_set(t));
  for (auto const &c : classes) {
    if (c.representative != 0)
      add(normal_closure(t, {c.representative}));
  }
  // Joins of pairs until nothing new appears; the join of two normal
  // subgroups is the normal closure of their union.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      auto inside = [](ElementSet const &a, ElementSet const &b) {
        for (auto g : a.generators) {
          if (!b.contains(g))
            return false;
        }
        return true;
      };
      if (inside(found[i], found[j]) || inside(found[j], found[i]))
        continue;
      auto seeds = found[i].generators;
      seeds.insert(seeds.end(), found[j].generators.begin(), found[j].generators.end());
      add(normal_closure(t, seeds));
    }
  }
  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::vector<std::vector<Index>> keys;
  for (auto const &h : found)
    keys.push_back(h.sorted());
  std::sort(order.begin(), order.end(), [&](auto a, auto b) {
    if (keys[a].size() != keys[b].size())
      return keys[a].size() < keys[b].size();
    return keys[a] < keys[b];
  });
  std::vector<ElementSet> result;
  for (auto i : order)
    result.push_back(std::move(found[i]));
  return result;
}

// Invariant factors d1 | d2 | ... of an abelian table, found by splitting
// off cyclic subgroups generated by elements of maximal order.
inline std::vector<std::uint64_t> abelian_group_invariants(CayleyTable const &abelian)
{
  std::vector<std::uint64_t> inv;
  QuotientTable current{CayleyTable(), {}};
  CayleyTable const *t = &abelian;
  while (t->size() > 1) {
    auto const &orders = t->element_orders();
    auto best = static_cast<Index>(std::max_element(orders.begin(), orders.end()) - orders.begin());
    inv.push_back(orders[best]);
    auto next = quotient(*t, generate(*t, {best}));
    current.table = std::move(next.table);
    t = &current.table;
  }
  std::reverse(inv.begin(), inv.end());
  return inv;
}

inline std::vector<std::uint64_t> abelian_invariants(CayleyTable const &t)
{
  auto q = quotient(t, derived_subgroup(t));
  return abelian_group_invariants(q.table);
}

// Orders along G > G' > G'' > ... until the series stabilizes.
inline std::vector<std::uint64_t> derived_series_orders(CayleyTable const &t)
{
  std::vector<std::uint64_t> orders{t.size()};
  auto h = derived_subgroup(t);
  while (h.size() != orders.back()) {
    orders.push_back(h.size());
    if (h.size() == 1)
      break;
    h = derived_subgroup(t, &h);
  }
  return orders;
}

struct GroupFingerprint
{
  std::uint64_t order = 0;
  std::map<std::uint32_t, std::uint64_t> order_histogram;
  std::vector<std::uint64_t> class_sizes; // sorted
  std::uint64_t center_order = 0;
  std::vector<std::uint64_t> derived_series;
  std::vector<std::uint64_t> abelian_invariants;

  friend bool operator==(GroupFingerprint const &, GroupFingerprint const &) = default;

  std::string str() const
  {
    std::ostringstream os;
    auto list = [&](auto const &v) {
      os << "[";
      for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
      os << "]";
    };
    os << "order=" << order << " orders={";
    bool first = true;
    for (auto [o, c] : order_histogram) {
      os << (first ? "" : ",") << o << ":" << c;
      first = false;
    }
    os << "} classes=";
    list(class_sizes);
    os << " center=" << center_order << " derived=";
    list(derived_series);
    os << " abelian=";
    list(abelian_invariants);
    return os.str();
  }
};

inline GroupFingerprint fingerprint(CayleyTable const &t)
{
  GroupFingerprint f;
  f.order = t.size();
  for (auto o : t.element_orders())
    ++f.order_histogram[o];
  for (auto const &c : conjugacy_classes(t))
    f.class_sizes.push_back(c.size);
  std::sort(f.class_sizes.begin(), f.class_sizes.end());
  f.center_order = center(t).size();
  f.derived_series = derived_series_orders(t);
  f.abelian_invariants = abelian_invariants(t);
  return f;
}

// ---------------------------------------------------------------------------
// The same operations on PermGroup values. Subgroups come back as PermGroups
// on the same points, generated by elements of the parent.

inline PermGroup to_group(PermGroup const &g, ElementSet const &h)
{
  return g.subgroup(h.generators);
}

// Element indices (in g's table) of a subgroup h given by generators.
inline ElementSet elements_in(PermGroup const &g, PermGroup const &h)
{
  auto const &t = g.table();
  std::vector<Index> seeds;
  for (auto const &p : h.generators()) {
    auto i = g.index_of(p);
    if (!i)
      throw InvalidArgument("subgroup generator " + p.str() + " is not in the group");
    seeds.push_back(*i);
  }
  return generate(t, seeds);
}

inline PermGroup center(PermGroup const &g) { return to_group(g, center(g.table())); }

inline PermGroup derived_subgroup(PermGroup const &g)
{
  return to_group(g, derived_subgroup(g.table()));
}

inline PermGroup normal_closure(PermGroup const &g, std::vector<Permutation> const &seeds)
{
  std::vector<Index> idx;
  for (auto const &p : seeds) {
    auto i = g.index_of(p);
    if (!i)
      throw InvalidArgument("seed " + p.str() + " is not in the group");
    idx.push_back(*i);
  }
  return to_group(g, normal_closure(g.table(), idx));
}

inline bool is_normal(PermGroup const &g, PermGroup const &n)
{
  for (auto const &x : n.generators()) {
    if (!g.contains(x))
      return false;
    for (auto const &s : g.generators()) {
      if (!n.contains(s.inverse() * x * s))
        return false;
    }
  }
  return true;
}

inline std::vector<ConjugacyClass> conjugacy_classes(PermGroup const &g)
{
  return conjugacy_classes(g.table());
}

// Action of g on the cosets of a normal subgroup n: a regular permutation
// representation of g/n. coset[x] is the point (coset) of g's element x.
struct CosetAction
{
  PermGroup image;
  std::vector<Index> coset;
};

inline CosetAction coset_action(PermGroup const &g, PermGroup const &n)
{
  auto const &t = g.table();
  auto sub = elements_in(g, n);
  if (!is_normal(t, sub))
    throw InvalidArgument("coset action needs a normal subgroup");
  if (t.size() / sub.size() > limits().enumeration)
    throw CapacityError("quotient exceeds the enumeration limit");
  auto q = quotient(t, sub);
  auto m = q.table.size();
  std::vector<Permutation> gens;
  for (std::size_t s = 0; s < q.table.generator_count(); ++s) {
    auto const &col = q.table.right_column(s);
    gens.emplace_back(std::vector<std::uint32_t>(col.begin(), col.end()));
  }
  return {PermGroup(m, std::move(gens), true), std::move(q.label)};
}

inline std::vector<PermGroup> normal_subgroups(PermGroup const &g)
{
  std::vector<PermGroup> out;
  for (auto const &h : normal_subgroups(g.table()))
    out.push_back(to_group(g, h));
  return out;
}

inline std::vector<std::uint64_t> abelian_invariants(PermGroup const &g)
{
  return abelian_invariants(g.table());
}

inline GroupFingerprint fingerprint(PermGroup const &g) { return fingerprint(g.table()); }

inline bool is_perfect(PermGroup const &g)
{
  return derived_subgroup(g.table()).size() == g.order();
}

} // namespace qgroups
