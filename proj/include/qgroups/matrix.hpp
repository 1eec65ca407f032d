#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclotomic.hpp"
#include "cyclotomic_io.hpp"
#include "errors.hpp"

namespace qgroups {

// Square matrix over Cyclotomic. Named for its use (gate matrices), but
// unitarity is only enforced when asked for.
class UnitaryMatrix
{
public:
  UnitaryMatrix() = default;

  explicit UnitaryMatrix(std::size_t dim) : _dim(dim), _entries(dim * dim) {}

  UnitaryMatrix(std::vector<std::vector<Cyclotomic>> const &rows, bool check_unitary = false)
  : _dim(rows.size())
  {
    for (auto const &r : rows) {
      if (r.size() != _dim)
        throw InvalidArgument("matrix rows must all have length " + std::to_string(_dim));
      _entries.insert(_entries.end(), r.begin(), r.end());
    }
    if (check_unitary && !is_unitary())
      throw InvalidArgument("matrix is not unitary");
  }

  static UnitaryMatrix identity(std::size_t dim)
  {
    UnitaryMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      m(i, i) = Cyclotomic(1L);
    return m;
  }

  static UnitaryMatrix diagonal(std::vector<Cyclotomic> const &d)
  {
    UnitaryMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
      m(i, i) = d[i];
    return m;
  }

  std::size_t dim() const { return _dim; }
  Cyclotomic &operator()(std::size_t i, std::size_t j) { return _entries[i * _dim + j]; }
  Cyclotomic const &operator()(std::size_t i, std::size_t j) const { return _entries[i * _dim + j]; }
  std::vector<Cyclotomic> const &entries() const { return _entries; }

  friend UnitaryMatrix operator*(UnitaryMatrix const &a, UnitaryMatrix const &b)
  {
    if (a._dim != b._dim)
      throw InvalidArgument("matrix dimension mismatch");
    UnitaryMatrix r(a._dim);
    for (std::size_t i = 0; i < a._dim; ++i) {
      for (std::size_t k = 0; k < a._dim; ++k) {
        auto const &x = a(i, k);
        if (x.is_zero())
          continue;
        for (std::size_t j = 0; j < a._dim; ++j) {
          if (!b(k, j).is_zero())
            r(i, j) += x * b(k, j);
        }
      }
    }
    return r;
  }

  friend UnitaryMatrix operator*(Cyclotomic const &c, UnitaryMatrix m)
  {
    for (auto &e : m._entries)
      e *= c;
    return m;
  }

  friend UnitaryMatrix operator-(UnitaryMatrix m)
  {
    for (auto &e : m._entries)
      e = -e;
    return m;
  }

  UnitaryMatrix dagger() const
  {
    UnitaryMatrix r(_dim);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j)
        r(j, i) = (*this)(i, j).conj();
    }
    return r;
  }

  bool is_identity() const { return *this == identity(_dim); }
  bool is_unitary() const { return (*this * dagger()).is_identity(); }

  UnitaryMatrix pow(unsigned long e) const
  {
    auto result = identity(_dim), base = *this;
    while (e) {
      if (e & 1)
        result = result * base;
      e >>= 1;
      if (e)
        base = base * base;
    }
    return result;
  }

  // Multiplicative order, or 0 if none is found up to `limit`.
  std::uint64_t order(std::uint64_t limit = 1u << 20) const
  {
    auto x = *this;
    for (std::uint64_t k = 1; k <= limit; ++k) {
      if (x.is_identity())
        return k;
      x = x * *this;
    }
    return 0;
  }

  friend bool operator==(UnitaryMatrix const &, UnitaryMatrix const &) = default;

  std::size_t hash() const
  {
    std::size_t h = _dim;
    for (auto const &e : _entries)
      detail::hash_combine(h, e.hash());
    return h;
  }

  // "[[a,b],[c,d]]" with entries in cyclotomic syntax.
  std::string str() const
  {
    std::string out = "[";
    for (std::size_t i = 0; i < _dim; ++i) {
      out += i ? ",[" : "[";
      for (std::size_t j = 0; j < _dim; ++j) {
        if (j)
          out += ",";
        out += (*this)(i, j).str();
      }
      out += "]";
    }
    return out + "]";
  }

private:
  std::size_t _dim = 0;
  std::vector<Cyclotomic> _entries;
};

// Kronecker product; the left factor indexes the most significant part of
// the combined basis (qubit order left to right).
inline UnitaryMatrix kron(UnitaryMatrix const &a, UnitaryMatrix const &b)
{
  auto const m = a.dim(), n = b.dim();
  UnitaryMatrix r(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (a(i, j).is_zero())
        continue;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          if (!b(k, l).is_zero())
            r(i * n + k, j * n + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return r;
}

inline UnitaryMatrix kron(std::vector<UnitaryMatrix> const &factors)
{
  if (factors.empty())
    return UnitaryMatrix::identity(1);
  auto r = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i)
    r = kron(r, factors[i]);
  return r;
}

inline UnitaryMatrix matmul(UnitaryMatrix const &a, UnitaryMatrix const &b) { return a * b; }
inline UnitaryMatrix dagger(UnitaryMatrix const &a) { return a.dagger(); }

inline UnitaryMatrix parse_matrix(std::string_view text)
{
  // Split "[[..],[..]]" at brackets and top-level commas; parentheses inside
  // entries (E(8), (1+E(4))) are left to the cyclotomic parser.
  std::vector<std::vector<Cyclotomic>> rows;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("matrix: expected '") + c + "'");
    ++pos;
  };
  expect('[');
  for (;;) {
    expect('[');
    std::vector<Cyclotomic> row;
    for (;;) {
      int depth = 0;
      auto start = pos;
      while (pos < text.size() && (depth > 0 || (text[pos] != ',' && text[pos] != ']'))) {
        if (text[pos] == '(')
          ++depth;
        else if (text[pos] == ')')
          --depth;
        ++pos;
      }
      if (pos >= text.size())
        throw ParseError("matrix: unterminated row");
      row.push_back(parse_cyclotomic(text.substr(start, pos - start)));
      if (text[pos++] == ']')
        break;
    }
    rows.push_back(std::move(row));
    skip();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (pos != text.size())
    throw ParseError("matrix: trailing text");
  try {
    return UnitaryMatrix(rows);
  } catch (InvalidArgument const &e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

} // namespace qgroups

template<>
struct std::hash<qgroups::UnitaryMatrix>
{
  std::size_t operator()(qgroups::UnitaryMatrix const &m) const { return m.hash(); }
};
