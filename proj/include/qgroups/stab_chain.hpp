#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "permutation.hpp"

namespace qgroups {

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm. New base points are always the smallest point moved by the
// element that needs them, so the chain depends only on the generator list
// (and an optional base prefix).
class StabChain
{
public:
  struct Level
  {
    std::uint32_t base;
    std::vector<Permutation> generators; // fix all earlier base points
    std::vector<std::uint32_t> orbit;
    std::vector<std::int32_t> position;  // point -> index into orbit, or -1
    std::vector<Permutation> transversal; // maps base to orbit[k]
    // Schreier vector form, used instead of `transversal` for semiregular
    // groups: orbit[k] = orbit[parent[k]]^generators[label[k]].
    std::vector<std::uint32_t> parent;
    std::vector<std::uint32_t> label;
  };

  StabChain() = default;

  StabChain(std::uint32_t degree, std::vector<Permutation> const &generators,
            std::vector<std::uint32_t> const &base_prefix = {})
  : _degree(degree)
  {
    std::vector<Permutation> strong;
    for (auto const &g : generators) {
      if (g.degree() != degree)
        throw InvalidArgument("generator degree mismatch");
      if (!g.is_identity())
        strong.push_back(g);
    }
    std::vector<std::uint32_t> base = base_prefix;
    for (auto const &s : strong) {
      bool fixes_base = true;
      for (auto b : base)
        fixes_base = fixes_base && s[b] == b;
      if (fixes_base)
        base.push_back(*s.smallest_moved_point());
    }
    for (auto b : base) {
      Level level;
      level.base = b;
      _levels.push_back(std::move(level));
    }
    for (std::size_t i = 0; i < _levels.size(); ++i) {
      for (auto const &s : strong) {
        if (fixes_prefix(s, i))
          _levels[i].generators.push_back(s);
      }
      rebuild_orbit(i);
    }
    schreier_sims();
    drop_trivial_levels();
  }

  // Single-level chain of a group acting semiregularly: the stabilizer of any
  // moved point is trivial, so the orbit of that point is the whole chain.
  static StabChain semiregular(std::uint32_t degree, std::vector<Permutation> const &generators)
  {
    StabChain chain;
    chain._degree = degree;
    std::vector<Permutation> nontrivial;
    for (auto const &g : generators) {
      if (!g.is_identity())
        nontrivial.push_back(g);
    }
    if (nontrivial.empty())
      return chain;
    std::uint32_t base = std::numeric_limits<std::uint32_t>::max();
    for (auto const &g : nontrivial)
      base = std::min(base, *g.smallest_moved_point());

    Level level;
    level.base = base;
    level.generators = std::move(nontrivial);
    level.position.assign(degree, -1);
    level.orbit.push_back(base);
    level.position[base] = 0;
    level.parent.push_back(0);
    level.label.push_back(0);
    for (std::size_t k = 0; k < level.orbit.size(); ++k) {
      for (std::uint32_t s = 0; s < level.generators.size(); ++s) {
        auto y = level.generators[s][level.orbit[k]];
        if (level.position[y] < 0) {
          level.position[y] = static_cast<std::int32_t>(level.orbit.size());
          level.orbit.push_back(y);
          level.parent.push_back(static_cast<std::uint32_t>(k));
          level.label.push_back(s);
        }
      }
    }
    chain._levels.push_back(std::move(level));
    chain._schreier_vector = true;
    return chain;
  }

  std::uint32_t degree() const { return _degree; }
  std::vector<Level> const &levels() const { return _levels; }

  std::vector<std::uint32_t> base() const
  {
    std::vector<std::uint32_t> b;
    for (auto const &l : _levels)
      b.push_back(l.base);
    return b;
  }

  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    for (auto const &l : _levels) {
      if (result > std::numeric_limits<std::uint64_t>::max() / l.orbit.size())
        throw CapacityError("group order exceeds 64 bits");
      result *= l.orbit.size();
    }
    return result;
  }

  bool contains(Permutation const &g) const
  {
    if (g.degree() != _degree)
      return false;
    auto [residue, level] = strip(g, 0);
    return level == _levels.size() && residue.is_identity();
  }

  // Transversal element of level i mapping its base point to orbit[k].
  Permutation transversal(std::size_t i, std::size_t k) const
  {
    auto const &l = _levels[i];
    if (!_schreier_vector)
      return l.transversal[k];
    std::vector<std::uint32_t> word;
    for (auto j = k; j != 0; j = l.parent[j])
      word.push_back(l.label[j]);
    Permutation u(_degree);
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      u = u * l.generators[*it];
    return u;
  }

private:
  bool fixes_prefix(Permutation const &s, std::size_t level) const
  {
    for (std::size_t j = 0; j < level; ++j) {
      if (s[_levels[j].base] != _levels[j].base)
        return false;
    }
    return true;
  }

  void rebuild_orbit(std::size_t i)
  {
    auto &l = _levels[i];
    l.orbit.assign(1, l.base);
    l.position.assign(_degree, -1);
    l.position[l.base] = 0;
    l.transversal.assign(1, Permutation(_degree));
    for (std::size_t k = 0; k < l.orbit.size(); ++k) {
      for (auto const &s : l.generators) {
        auto y = s[l.orbit[k]];
        if (l.position[y] < 0) {
          l.position[y] = static_cast<std::int32_t>(l.orbit.size());
          l.orbit.push_back(y);
          l.transversal.push_back(l.transversal[k] * s);
        }
      }
    }
  }

  // Sifts g through levels from..end. Returns the residue and the level at
  // which sifting stopped (levels().size() if it went all the way).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const
  {
    for (std::size_t i = from; i < _levels.size(); ++i) {
      auto const &l = _levels[i];
      auto beta = g[l.base];
      auto pos = l.position[beta];
      if (pos < 0)
        return {std::move(g), i};
      g = g * transversal(i, static_cast<std::size_t>(pos)).inverse();
    }
    return {std::move(g), _levels.size()};
  }

  void schreier_sims()
  {
    auto i = static_cast<std::ptrdiff_t>(_levels.size()) - 1;
    while (i >= 0) {
      bool complete = true;
      auto const &level = _levels[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; complete && k < level.orbit.size(); ++k) {
        for (std::size_t s = 0; complete && s < level.generators.size(); ++s) {
          auto const &gen = level.generators[s];
          auto image = gen[level.orbit[k]];
          auto h = level.transversal[k] * gen *
                   level.transversal[static_cast<std::size_t>(level.position[image])].inverse();
          if (h.is_identity())
            continue;
          auto [residue, j] = strip(h, static_cast<std::size_t>(i) + 1);
          if (j == _levels.size() && residue.is_identity())
            continue;

          complete = false;
          if (j == _levels.size()) {
            Level fresh;
            fresh.base = *residue.smallest_moved_point();
            _levels.push_back(std::move(fresh));
          }
          for (auto l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
            _levels[l].generators.push_back(residue);
            rebuild_orbit(l);
          }
          i = static_cast<std::ptrdiff_t>(j);
        }
      }
      if (complete)
        --i;
    }
  }

  void drop_trivial_levels()
  {
    std::vector<Level> kept;
    for (auto &l : _levels) {
      if (l.orbit.size() > 1)
        kept.push_back(std::move(l));
    }
    _levels = std::move(kept);
  }

  std::uint32_t _degree = 0;
  std::vector<Level> _levels;
  bool _schreier_vector = false;
};

} // namespace qgroups
