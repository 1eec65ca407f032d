#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "errors.hpp"
#include "group_algorithms.hpp"
#include "group_spec.hpp"
#include "isomorphism.hpp"
#include "limits.hpp"
#include "perm_group.hpp"

namespace qgroups {

// ---------------------------------------------------------------------------
// Commutator sets K(G) = { a b a^-1 b^-1 }.

// Every pair (a, b).
inline std::vector<char> commutator_set_all_pairs(CayleyTable const &t)
{
  t.enable_full_table(4096);
  std::vector<char> k(t.size(), 0);
  for (Index a = 0; a < t.size(); ++a) {
    for (Index b = 0; b < t.size(); ++b)
      k[t.commutator(a, b)] = 1;
  }
  return k;
}

// Pairs (a, b) with a a conjugacy class representative, then closed under
// conjugation: [a^g, b^g] = [a, b]^g, so nothing is lost.
inline std::vector<char> commutator_set_by_classes(CayleyTable const &t)
{
  t.enable_full_table(4096);
  std::vector<char> k(t.size(), 0);
  std::vector<Index> found;
  for (auto const &c : conjugacy_classes(t)) {
    for (Index b = 0; b < t.size(); ++b) {
      auto x = t.commutator(c.representative, b);
      if (!k[x]) {
        k[x] = 1;
        found.push_back(x);
      }
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t s = 0; s < t.generator_count(); ++s) {
      auto y = t.conjugate_by_generator(found[i], s);
      if (!k[y]) {
        k[y] = 1;
        found.push_back(y);
      }
    }
  }
  return k;
}

struct CommutatorReport
{
  std::uint64_t group_order = 0;
  std::uint64_t derived_order = 0;
  std::uint64_t commutators = 0; // |K(G)|
  bool subset_of_derived = true;
  bool generates_derived = true;
  std::vector<char> members;

  bool equals_derived() const { return commutators == derived_order; }
  std::uint64_t deficiency() const { return derived_order - commutators; }
};

enum class CommutatorPath
{
  all_pairs,
  class_representatives
};

inline CommutatorReport commutator_set(PermGroup const &g, CommutatorPath path = CommutatorPath::all_pairs)
{
  auto bound = path == CommutatorPath::all_pairs ? limits().commutator_pairs
                                                 : limits().commutator_extended;
  if (g.order() > bound)
    throw CapacityError("commutator set above order " + std::to_string(bound));
  auto const &t = g.table();
  CommutatorReport r;
  r.group_order = t.size();
  r.members = path == CommutatorPath::all_pairs ? commutator_set_all_pairs(t)
                                                : commutator_set_by_classes(t);
  auto d = derived_subgroup(t);
  r.derived_order = d.size();
  std::vector<Index> ks;
  for (Index x = 0; x < t.size(); ++x) {
    if (r.members[x]) {
      ++r.commutators;
      r.subset_of_derived = r.subset_of_derived && d.contains(x);
      ks.push_back(x);
    }
  }
  r.generates_derived = generate(t, ks).size() == d.size();
  return r;
}

// ---------------------------------------------------------------------------
// Complements of a normal subgroup.

// Subgroup generated by the seeds, or nothing once it grows past `limit`.
inline std::optional<ElementSet> bounded_generate(CayleyTable const &t, std::vector<Index> const &seeds,
                                                  std::size_t limit)
{
  auto h = trivial_set(t);
  std::vector<std::vector<Index>> columns;
  for (auto s : seeds)
    columns.push_back(t.right_column_of(s));
  h.generators = seeds;
  for (std::size_t i = 0; i < h.elements.size(); ++i) {
    for (auto const &col : columns) {
      auto y = col[h.elements[i]];
      if (!h.member[y]) {
        if (h.elements.size() == limit)
          return std::nullopt;
        h.member[y] = 1;
        h.elements.push_back(y);
      }
    }
  }
  return h;
}

struct ComplementResult
{
  std::optional<ElementSet> complement;
  bool exhaustive = false; // a miss is definitive only when true
  std::uint64_t nodes = 0;
};

// Depth-first search over lifts of a generating sequence q_1..q_r of G/N.
// A complement K maps isomorphically onto G/N, so it is generated by lifts
// x_i of the q_i with the same orders, and every partial choice generates a
// subgroup of the same size as <q_1..q_i>. Finishing without reaching the
// node budget therefore settles the question either way.
inline ComplementResult find_complement(CayleyTable const &t, ElementSet const &n, std::uint64_t budget = 0)
{
  if (!is_normal(t, n))
    throw InvalidArgument("complement search needs a normal subgroup");
  if (budget == 0)
    budget = limits().search_nodes;
  auto q = quotient(t, n);
  ElementProfile pq(q.table);
  auto qgens = generating_sequence(q.table, pq);
  auto const r = qgens.size();
  auto const &orders = t.element_orders();

  std::vector<std::size_t> target(r);
  std::vector<std::vector<Index>> lifts(r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Index> prefix(qgens.begin(), qgens.begin() + static_cast<std::ptrdiff_t>(i + 1));
    target[i] = generate(q.table, prefix).size();
    for (Index x = 0; x < t.size(); ++x) {
      if (q.label[x] == qgens[i] && orders[x] == pq.order[qgens[i]])
        lifts[i].push_back(x);
    }
  }

  ComplementResult result;
  if (r == 0) {
    result.complement = trivial_set(t);
    result.exhaustive = true;
    return result;
  }
  std::vector<Index> chosen;
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    for (auto x : lifts[k]) {
      if (++result.nodes > budget)
        return false;
      chosen.push_back(x);
      if (auto h = bounded_generate(t, chosen, target[k])) {
        if (k + 1 == r) {
          result.complement = std::move(*h);
          return true;
        }
        if (search(k + 1))
          return true;
      }
      chosen.pop_back();
      if (result.nodes > budget)
        return false;
    }
    return false;
  };
  search(0);
  result.exhaustive = result.complement || result.nodes <= budget;
  return result;
}

struct PermComplement
{
  std::optional<PermGroup> complement;
  bool exhaustive = false;
};

inline PermComplement find_complement(PermGroup const &g, PermGroup const &n, std::uint64_t budget = 0)
{
  auto const &t = g.table();
  auto sub = elements_in(g, n);
  auto r = find_complement(t, sub, budget);
  PermComplement out;
  out.exhaustive = r.exhaustive;
  if (r.complement)
    out.complement = to_group(g, *r.complement);
  return out;
}

} // namespace qgroups
