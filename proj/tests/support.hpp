#pragma once

#include <map>
#include <set>
#include <vector>

#include "qgroups/perm_group.hpp"

namespace testsupport {

using namespace qgroups;

inline Permutation perm(std::uint32_t degree, char const *cycles)
{
  return parse_permutation(cycles, degree);
}

inline PermGroup group(std::uint32_t degree, std::vector<char const *> gens)
{
  std::vector<Permutation> ps;
  for (auto g : gens)
    ps.push_back(perm(degree, g));
  return PermGroup(degree, ps);
}

// Brute-force closure on explicit permutations; shares nothing with the
// chain or the table code.
inline std::set<std::vector<std::uint32_t>> brute_elements(PermGroup const &g)
{
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<std::uint32_t>> queue;
  std::vector<std::uint32_t> id(g.degree());
  for (std::uint32_t i = 0; i < id.size(); ++i)
    id[i] = i;
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (auto const &s : g.generators()) {
      auto x = queue[k];
      for (auto &v : x)
        v = s[v];
      if (seen.insert(x).second)
        queue.push_back(x);
    }
  }
  return seen;
}

struct Named
{
  char const *name;
  PermGroup g;
};

inline std::vector<Named> corpus()
{
  return {
    {"trivial", PermGroup::trivial(3)},
    {"Z6", group(6, {"(1,2,3,4,5,6)"})},
    {"Z2xZ2", group(4, {"(1,2)", "(3,4)"})},
    {"Z4xZ2", group(6, {"(1,2,3,4)", "(5,6)"})},
    {"S3", group(3, {"(1,2)", "(1,2,3)"})},
    {"D8", group(4, {"(1,2,3,4)", "(1,3)"})},
    {"Q8", group(8, {"(1,2,5,6)(3,8,7,4)", "(1,3,5,7)(2,4,6,8)"})},
    {"D12", group(6, {"(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)"})},
    {"A4", group(4, {"(1,2,3)", "(2,3,4)"})},
    {"S4", group(4, {"(1,2)", "(1,2,3,4)"})},
    {"S3xS3", group(6, {"(1,2)", "(1,2,3)", "(4,5)", "(4,5,6)"})},
    {"A5", group(5, {"(1,2,3)", "(1,2,3,4,5)"})},
    {"S5", group(5, {"(1,2)", "(1,2,3,4,5)"})},
    {"Z2wrS3", group(6, {"(1,2)", "(1,3,5)(2,4,6)", "(1,3)(2,4)"})},
    {"PSL27", group(7, {"(1,2,3,4,5,6,7)", "(2,3,5)(4,7,6)"})},
    {"S6", group(6, {"(1,2)", "(1,2,3,4,5,6)"})},
    {"M", group(7, {"(1,2,3)(4,5)", "(3,4,5,6,7)", "(1,7)"})},
  };
}


// Raw multiplication table over brute_elements; index 0 is the identity.
struct BruteTable
{
  std::vector<std::vector<std::uint32_t>> elements;
  std::vector<std::uint32_t> mul; // mul[a * n + b] = a then b

  explicit BruteTable(PermGroup const &g)
  {
    auto set = brute_elements(g);
    std::vector<std::uint32_t> id(g.degree());
    for (std::uint32_t i = 0; i < id.size(); ++i)
      id[i] = i;
    elements.push_back(id);
    for (auto const &e : set)
      if (e != id)
        elements.push_back(e);
    std::map<std::vector<std::uint32_t>, std::uint32_t> index;
    for (std::uint32_t i = 0; i < elements.size(); ++i)
      index[elements[i]] = i;
    auto n = elements.size();
    mul.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        auto x = elements[a];
        for (auto &v : x)
          v = elements[b][v];
        mul[a * n + b] = index.at(x);
      }
  }

  std::size_t size() const { return elements.size(); }
  std::uint32_t operator()(std::uint32_t a, std::uint32_t b) const { return mul[a * size() + b]; }

  std::uint32_t inverse(std::uint32_t a) const
  {
    for (std::uint32_t b = 0; b < size(); ++b)
      if ((*this)(a, b) == 0)
        return b;
    return 0;
  }
};

// |Aut(G)| by trying every tuple of images for the given generators.
inline std::uint64_t brute_automorphism_count(PermGroup const &g)
{
  BruteTable t(g);
  auto n = t.size();
  std::vector<std::uint32_t> gens;
  for (auto const &s : g.generators())
    for (std::uint32_t i = 0; i < n; ++i)
      if (t.elements[i] == s.images())
        gens.push_back(i);
  auto k = gens.size();
  std::vector<std::uint32_t> img(k, 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<std::int64_t> phi(n, -1);
    std::vector<char> hit(n, 0);
    std::vector<std::uint32_t> queue{0};
    phi[0] = 0;
    bool ok = true;
    for (std::size_t q = 0; q < queue.size() && ok; ++q) {
      auto x = queue[q];
      for (std::size_t i = 0; i < k && ok; ++i) {
        auto y = t(x, gens[i]);
        auto z = t(static_cast<std::uint32_t>(phi[x]), img[i]);
        if (phi[y] < 0) {
          phi[y] = z;
          queue.push_back(y);
        } else {
          ok = phi[y] == z;
        }
      }
    }
    if (ok) {
      for (auto v : phi)
        hit[static_cast<std::size_t>(v)] = 1;
      bool bijective = true;
      for (auto h : hit)
        bijective = bijective && h;
      count += bijective;
    }
    std::size_t pos = 0;
    while (pos < k && ++img[pos] == n)
      img[pos++] = 0;
    if (pos == k)
      break;
  }
  return count;
}

// Indices (into BruteTable) of every a b a^-1 b^-1.
inline std::set<std::uint32_t> brute_commutators(BruteTable const &t)
{
  std::set<std::uint32_t> k;
  for (std::uint32_t a = 0; a < t.size(); ++a)
    for (std::uint32_t b = 0; b < t.size(); ++b)
      k.insert(t(t(t(a, b), t.inverse(a)), t.inverse(b)));
  return k;
}

} // namespace testsupport
