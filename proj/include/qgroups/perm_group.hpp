#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "cayley.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "permutation.hpp"
#include "stab_chain.hpp"

namespace qgroups {

// Permutation group on the points 0..degree-1 given by generators.
//
// The stabilizer chain and the element table are built lazily on first use
// and shared between copies; a PermGroup is otherwise an immutable value.
//
// Groups flagged semiregular (every non-identity element is fixed-point
// free) take a shortcut: their chain has a single level and elements are
// identified with the points of one orbit. Regular representations and
// their subgroups are the main source of such groups.
class PermGroup
{
public:
  using Index = CayleyTable::Index;

  PermGroup() : PermGroup(1, {}) {}

  PermGroup(std::uint32_t degree, std::vector<Permutation> generators, bool semiregular = false)
  : _degree(degree), _semiregular(semiregular)
  {
    if (degree == 0)
      throw InvalidArgument("permutation group degree must be positive");
    for (auto &g : generators) {
      if (g.degree() != degree)
        throw InvalidArgument("generator degree mismatch");
      if (!g.is_identity())
        _generators.push_back(std::move(g));
    }
  }

  static PermGroup trivial(std::uint32_t degree) { return PermGroup(degree, {}); }

  std::uint32_t degree() const { return _degree; }
  std::vector<Permutation> const &generators() const { return _generators; }
  bool is_semiregular() const { return _semiregular; }

  StabChain const &chain() const
  {
    std::call_once(_cache->chain_once, [this] {
      _cache->chain = _semiregular ? StabChain::semiregular(_degree, _generators)
                                   : StabChain(_degree, _generators);
    });
    return _cache->chain;
  }

  std::uint64_t order() const { return chain().order(); }

  bool contains(Permutation const &p) const { return chain().contains(p); }

  bool is_trivial() const { return _generators.empty(); }

  // Element table; throws CapacityError beyond the enumeration limit.
  CayleyTable const &table() const
  {
    std::call_once(_cache->table_once, [this] { build_table(); });
    if (!_cache->table)
      throw CapacityError("group of order " + std::to_string(order()) +
                          " exceeds the enumeration limit of " +
                          std::to_string(limits().enumeration));
    return *_cache->table;
  }

  bool enumerable() const
  {
    return order() <= limits().enumeration;
  }

  Permutation element(Index i) const
  {
    auto const &t = table();
    if (!_semiregular)
      return _cache->elements[i];
    Permutation p(_degree);
    for (auto s : t.word(i))
      p = p * _generators[s];
    return p;
  }

  std::optional<Index> index_of(Permutation const &p) const
  {
    table();
    if (p.degree() != _degree)
      return std::nullopt;
    if (!_semiregular) {
      auto it = _cache->lookup.find(p);
      if (it == _cache->lookup.end())
        return std::nullopt;
      return it->second;
    }
    if (_generators.empty())
      return p.is_identity() ? std::optional<Index>(0) : std::nullopt;
    auto pos = _cache->point_index[p[_cache->base_point]];
    if (pos < 0)
      return std::nullopt;
    auto i = static_cast<Index>(pos);
    if (element(i) != p)
      return std::nullopt;
    return i;
  }

  // Semiregular groups only: index of the element taking the base point to
  // `point`, if any.
  std::optional<Index> index_of_point(std::uint32_t point) const
  {
    if (!_semiregular)
      throw InvalidArgument("index_of_point needs a semiregular group");
    table();
    if (_generators.empty())
      return point == 0 ? std::optional<Index>(0) : std::nullopt;
    auto pos = _cache->point_index[point];
    if (pos < 0)
      return std::nullopt;
    return static_cast<Index>(pos);
  }

  std::uint32_t base_point() const
  {
    table();
    return _cache->base_point;
  }

  // Subgroup generated by the given element indices of this group.
  PermGroup subgroup(std::vector<Index> const &elements) const
  {
    std::vector<Permutation> gens;
    for (auto i : elements) {
      if (i != 0)
        gens.push_back(element(i));
    }
    return PermGroup(_degree, std::move(gens), _semiregular);
  }

  PermGroup with_generators(std::vector<Permutation> gens) const
  {
    return PermGroup(_degree, std::move(gens), _semiregular);
  }

  bool is_subgroup_of(PermGroup const &other) const
  {
    if (other._degree != _degree)
      return false;
    for (auto const &g : _generators) {
      if (!other.contains(g))
        return false;
    }
    return true;
  }

  // Same set of elements (as permutations of the same points).
  bool same_elements(PermGroup const &other) const
  {
    return order() == other.order() && is_subgroup_of(other);
  }

  // Group file: degree on the first line, then one generator per line.
  std::string str() const
  {
    std::ostringstream os;
    os << _degree << "\n";
    for (auto const &g : _generators)
      os << g.str() << "\n";
    return os.str();
  }

private:
  struct Cache
  {
    std::once_flag chain_once, table_once;
    StabChain chain;
    std::unique_ptr<CayleyTable> table;
    // general groups
    std::vector<Permutation> elements;
    std::unordered_map<Permutation, Index> lookup;
    // semiregular groups
    std::uint32_t base_point = 0;
    std::vector<std::int32_t> point_index;
  };

  void build_table() const
  {
    auto n = order();
    if (n > limits().enumeration)
      return;
    auto const k = _generators.size();
    std::vector<CayleyTable::Column> columns(k, CayleyTable::Column(n));

    if (_semiregular) {
      auto &c = *_cache;
      c.point_index.assign(_degree, -1);
      std::vector<std::uint32_t> points;
      c.base_point = chain().levels().empty() ? 0 : chain().levels()[0].base;
      points.push_back(c.base_point);
      c.point_index[c.base_point] = 0;
      for (std::size_t x = 0; x < points.size(); ++x) {
        for (std::size_t s = 0; s < k; ++s) {
          auto y = _generators[s][points[x]];
          if (c.point_index[y] < 0) {
            c.point_index[y] = static_cast<std::int32_t>(points.size());
            points.push_back(y);
          }
          columns[s][x] = static_cast<Index>(c.point_index[y]);
        }
      }
    } else {
      auto &c = *_cache;
      c.elements.reserve(n);
      c.elements.push_back(Permutation(_degree));
      c.lookup.emplace(c.elements.back(), 0);
      for (std::size_t x = 0; x < c.elements.size(); ++x) {
        for (std::size_t s = 0; s < k; ++s) {
          auto y = c.elements[x] * _generators[s];
          auto [it, inserted] = c.lookup.emplace(y, static_cast<Index>(c.elements.size()));
          if (inserted)
            c.elements.push_back(std::move(y));
          columns[s][x] = it->second;
        }
      }
    }
    _cache->table = std::make_unique<CayleyTable>(std::move(columns), static_cast<Index>(n));
  }

  std::uint32_t _degree;
  std::vector<Permutation> _generators;
  bool _semiregular;
  std::shared_ptr<Cache> _cache = std::make_shared<Cache>();
};

inline PermGroup parse_perm_group(std::string const &text)
{
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::uint32_t> degree;
  std::vector<Permutation> gens;
  while (std::getline(is, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    line = line.substr(first);
    if (!degree) {
      try {
        std::size_t used = 0;
        auto d = std::stoul(line, &used);
        if (d == 0 || line.find_first_not_of(" \t\r", used) != std::string::npos)
          throw std::invalid_argument("degree");
        degree = static_cast<std::uint32_t>(d);
      } catch (std::logic_error const &) {
        throw ParseError("expected the group degree", line_no);
      }
      continue;
    }
    try {
      gens.push_back(parse_permutation(line, *degree));
    } catch (ParseError const &e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!degree)
    throw ParseError("empty group file");
  return PermGroup(*degree, std::move(gens));
}

} // namespace qgroups
