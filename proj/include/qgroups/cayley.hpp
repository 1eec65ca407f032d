#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace qgroups {

// Element-level model of a finite group: elements are indices 0..n-1 (0 is
// the identity) and each generator s is given by its right-multiplication
// column x -> x*s. This is exactly the right regular permutation
// representation, and it is the working representation for every algorithm
// that enumerates elements.
//
// A breadth-first spanning tree supplies a shortest word for every element,
// which is enough to multiply arbitrary elements without a full table.
class CayleyTable
{
public:
  using Index = std::uint32_t;
  using Column = std::vector<Index>;

  CayleyTable() : CayleyTable(std::vector<Column>{}, 1) {}
  CayleyTable(CayleyTable const &) = delete;
  CayleyTable &operator=(CayleyTable const &) = delete;
  CayleyTable(CayleyTable &&) = default;
  CayleyTable &operator=(CayleyTable &&) = default;

  // columns[s][x] = index of x * generator_s.
  CayleyTable(std::vector<Column> columns, Index size)
  : _size(size), _right(std::move(columns))
  {
    for (auto const &c : _right) {
      if (c.size() != _size)
        throw InvalidArgument("Cayley column has wrong length");
    }
    build_tree();
    build_inverse_columns();
    build_left_columns();
    build_inverses();
  }

  Index size() const { return _size; }
  std::size_t generator_count() const { return _right.size(); }
  Index identity() const { return 0; }

  // Element index of generator s.
  Index generator(std::size_t s) const { return _right[s][0]; }

  Index right(std::size_t s, Index x) const { return _right[s][x]; }
  Index right_inverse(std::size_t s, Index x) const { return _right_inv[s][x]; }
  Index left(std::size_t s, Index x) const { return _left[s][x]; }
  Index left_inverse(std::size_t s, Index x) const { return _left_inv[s][x]; }
  Column const &right_column(std::size_t s) const { return _right[s]; }

  // s^-1 x s
  Index conjugate_by_generator(Index x, std::size_t s) const
  {
    return _right[s][_left_inv[s][x]];
  }

  Index parent(Index x) const { return _parent[x]; }
  std::uint32_t parent_generator(Index x) const { return _parent_gen[x]; }
  std::uint32_t depth(Index x) const { return _depth[x]; }
  std::vector<Index> const &bfs_order() const { return _bfs; }

  // Generator indices s_1..s_m with x = s_1 * ... * s_m.
  std::vector<std::uint32_t> word(Index x) const
  {
    std::vector<std::uint32_t> w(_depth[x]);
    for (auto i = w.size(); i-- > 0; x = _parent[x])
      w[i] = _parent_gen[x];
    return w;
  }

  Index apply_word(Index x, std::vector<std::uint32_t> const &w) const
  {
    for (auto s : w)
      x = _right[s][x];
    return x;
  }

  Index mul(Index x, Index y) const
  {
    if (_table) {
      return (*_table)[static_cast<std::size_t>(x) * _size + y];
    }
    std::uint32_t stack[256];
    std::uint32_t len = 0;
    if (_depth[y] > 256)
      return apply_word(x, word(y));
    for (auto z = y; z != 0; z = _parent[z])
      stack[len++] = _parent_gen[z];
    while (len)
      x = _right[stack[--len]][x];
    return x;
  }

  Index inv(Index x) const { return _inverse[x]; }

  // [a, b] = a b a^-1 b^-1
  Index commutator(Index a, Index b) const
  {
    return mul(mul(a, b), inv(mul(b, a)));
  }

  Index conjugate(Index x, Index g) const { return mul(mul(inv(g), x), g); }

  // row[x] = y * x for all x
  Column left_row(Index y) const
  {
    Column row(_size);
    row[0] = y;
    for (auto x : _bfs) {
      if (x != 0)
        row[x] = _right[_parent_gen[x]][row[_parent[x]]];
    }
    return row;
  }

  // col[x] = x * y for all x
  Column right_column_of(Index y) const
  {
    Column col(_size);
    std::iota(col.begin(), col.end(), 0u);
    auto w = word(y);
    for (auto &c : col)
      c = apply_word(c, w);
    return col;
  }

  std::uint32_t order(Index x) const
  {
    if (_orders)
      return (*_orders)[x];
    std::uint32_t k = 1;
    auto w = word(x);
    for (auto y = x; y != 0; y = apply_word(y, w))
      ++k;
    return k;
  }

  std::vector<std::uint32_t> const &element_orders() const
  {
    std::call_once(_caches->orders_once, [this] {
      std::vector<std::uint32_t> o(_size);
      for (Index x = 0; x < _size; ++x)
        o[x] = order(x);
      _orders = std::make_shared<std::vector<std::uint32_t>>(std::move(o));
    });
    return *_orders;
  }

  // Precomputes the full multiplication table (n^2 entries); later mul()
  // calls become lookups. No-op above the size limit.
  void enable_full_table(Index max_size = 2048) const
  {
    if (_size > max_size)
      return;
    std::call_once(_caches->table_once, [this] {
      std::vector<Index> t(static_cast<std::size_t>(_size) * _size);
      for (Index y = 0; y < _size; ++y) {
        auto row = left_row(y);
        std::copy(row.begin(), row.end(), t.begin() + static_cast<std::size_t>(y) * _size);
      }
      _table = std::make_shared<std::vector<Index>>(std::move(t));
    });
  }

private:
  void build_tree()
  {
    _parent.assign(_size, 0);
    _parent_gen.assign(_size, 0);
    _depth.assign(_size, 0);
    std::vector<char> seen(_size, 0);
    seen[0] = 1;
    _bfs.reserve(_size);
    _bfs.push_back(0);
    for (std::size_t k = 0; k < _bfs.size(); ++k) {
      auto x = _bfs[k];
      for (std::uint32_t s = 0; s < _right.size(); ++s) {
        auto y = _right[s][x];
        if (!seen[y]) {
          seen[y] = 1;
          _parent[y] = x;
          _parent_gen[y] = s;
          _depth[y] = _depth[x] + 1;
          _bfs.push_back(y);
        }
      }
    }
    if (_bfs.size() != _size)
      throw InvalidArgument("Cayley columns do not generate the whole table");
  }

  void build_inverse_columns()
  {
    _right_inv.assign(_right.size(), Column(_size));
    for (std::size_t s = 0; s < _right.size(); ++s) {
      for (Index x = 0; x < _size; ++x)
        _right_inv[s][_right[s][x]] = x;
    }
  }

  void build_left_columns()
  {
    _left.clear();
    _left_inv.clear();
    for (std::size_t s = 0; s < _right.size(); ++s) {
      _left.push_back(left_row(generator(s)));
      _left_inv.push_back(left_row(_right_inv[s][0]));
    }
  }

  void build_inverses()
  {
    // x = p s  =>  x^-1 = s^-1 p^-1
    _inverse.assign(_size, 0);
    for (auto x : _bfs) {
      if (x != 0)
        _inverse[x] = _left_inv[_parent_gen[x]][_inverse[_parent[x]]];
    }
  }

  struct Caches
  {
    std::once_flag orders_once;
    std::once_flag table_once;
  };

  Index _size;
  std::vector<Column> _right, _right_inv, _left, _left_inv;
  std::vector<Index> _parent;
  std::vector<std::uint32_t> _parent_gen, _depth;
  std::vector<Index> _bfs;
  std::vector<Index> _inverse;

  std::shared_ptr<Caches> _caches = std::make_shared<Caches>();
  mutable std::shared_ptr<std::vector<std::uint32_t>> _orders;
  mutable std::shared_ptr<std::vector<Index>> _table;
};

} // namespace qgroups
