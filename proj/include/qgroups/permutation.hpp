#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace qgroups {

// Permutation of the points 0 .. degree-1 acting from the right: the product
// p * q applies p first, then q. Text I/O uses 1-based cycle notation.
class Permutation
{
public:
  Permutation() = default;

  explicit Permutation(std::uint32_t degree) : _images(degree)
  {
    std::iota(_images.begin(), _images.end(), 0u);
  }

  explicit Permutation(std::vector<std::uint32_t> images) : _images(std::move(images))
  {
    std::vector<char> seen(_images.size(), 0);
    for (auto x : _images) {
      if (x >= _images.size() || seen[x])
        throw InvalidArgument("permutation images are not a bijection");
      seen[x] = 1;
    }
  }

  static Permutation identity(std::uint32_t degree) { return Permutation(degree); }

  // Builds a permutation from 0-based cycles.
  static Permutation from_cycles(std::uint32_t degree,
                                 std::vector<std::vector<std::uint32_t>> const &cycles)
  {
    std::vector<std::uint32_t> images(degree);
    std::iota(images.begin(), images.end(), 0u);
    std::vector<char> used(degree, 0);
    for (auto const &cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto x = cycle[i];
        if (x >= degree || used[x])
          throw InvalidArgument("invalid cycle");
        used[x] = 1;
        images[x] = cycle[(i + 1) % cycle.size()];
      }
    }
    return Permutation(std::move(images));
  }

  std::uint32_t degree() const { return static_cast<std::uint32_t>(_images.size()); }
  std::uint32_t operator[](std::uint32_t x) const { return _images[x]; }
  std::vector<std::uint32_t> const &images() const { return _images; }

  bool is_identity() const
  {
    for (std::uint32_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i)
        return false;
    }
    return true;
  }

  std::optional<std::uint32_t> smallest_moved_point() const
  {
    for (std::uint32_t i = 0; i < _images.size(); ++i) {
      if (_images[i] != i)
        return i;
    }
    return std::nullopt;
  }

  Permutation inverse() const
  {
    Permutation r;
    r._images.resize(_images.size());
    for (std::uint32_t i = 0; i < _images.size(); ++i)
      r._images[_images[i]] = i;
    return r;
  }

  friend Permutation operator*(Permutation const &p, Permutation const &q)
  {
    if (p.degree() != q.degree())
      throw InvalidArgument("permutation degree mismatch");
    Permutation r;
    r._images.resize(p._images.size());
    for (std::size_t i = 0; i < p._images.size(); ++i)
      r._images[i] = q._images[p._images[i]];
    return r;
  }

  Permutation pow(long e) const
  {
    if (e < 0)
      return inverse().pow(-e);
    Permutation result(degree()), base = *this;
    while (e) {
      if (e & 1)
        result = result * base;
      e >>= 1;
      if (e)
        base = base * base;
    }
    return result;
  }

  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    std::vector<char> seen(_images.size(), 0);
    for (std::uint32_t i = 0; i < _images.size(); ++i) {
      if (seen[i])
        continue;
      std::uint64_t len = 0;
      for (auto x = i; !seen[x]; x = _images[x]) {
        seen[x] = 1;
        ++len;
      }
      result = std::lcm(result, len);
    }
    return result;
  }

  friend bool operator==(Permutation const &a, Permutation const &b) = default;
  friend auto operator<=>(Permutation const &a, Permutation const &b) = default;

  std::size_t hash() const
  {
    std::size_t h = _images.size();
    for (auto x : _images)
      h = h * 0x100000001b3ULL ^ x;
    return h;
  }

  // Cycle notation with 1-based points, e.g. "(1,2)(3,4,5)"; "()" for the
  // identity.
  std::string str() const
  {
    std::string out;
    std::vector<char> seen(_images.size(), 0);
    for (std::uint32_t i = 0; i < _images.size(); ++i) {
      if (seen[i] || _images[i] == i)
        continue;
      out += "(";
      bool first = true;
      for (auto x = i; !seen[x]; x = _images[x]) {
        seen[x] = 1;
        if (!first)
          out += ",";
        out += std::to_string(x + 1);
        first = false;
      }
      out += ")";
    }
    return out.empty() ? "()" : out;
  }

  friend std::ostream &operator<<(std::ostream &os, Permutation const &p)
  {
    return os << p.str();
  }

private:
  std::vector<std::uint32_t> _images;
};

// Parses 1-based cycle notation such as "(1,2)(3,4,5)" into a permutation of
// the given degree.
inline Permutation parse_permutation(std::string_view text, std::uint32_t degree)
{
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto fail = [&](std::string const &msg) -> Permutation {
    throw ParseError("permutation '" + std::string(text) + "': " + msg);
  };

  skip();
  while (pos < text.size()) {
    if (text[pos] != '(')
      return fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      auto start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      if (start == pos)
        return fail("expected a point");
      auto point = std::stoul(std::string(text.substr(start, pos - start)));
      if (point == 0 || point > degree)
        return fail("point out of range");
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
      skip();
      if (pos < text.size() && text[pos] == ',')
        ++pos;
    }
    if (cycle.size() > 1)
      cycles.push_back(std::move(cycle));
    skip();
  }
  try {
    return Permutation::from_cycles(degree, cycles);
  } catch (InvalidArgument const &e) {
    return fail(e.what());
  }
}

} // namespace qgroups

template<>
struct std::hash<qgroups::Permutation>
{
  std::size_t operator()(qgroups::Permutation const &p) const { return p.hash(); }
};
