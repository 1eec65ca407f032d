#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "errors.hpp"
#include "limits.hpp"
#include "matrix.hpp"
#include "packed.hpp"
#include "perm_group.hpp"

namespace qgroups {

// Finite group of cyclotomic matrices with every element enumerated.
//
// Elements are numbered in the order Dimino's algorithm finds them for the
// given generator order; element 0 is the identity. The enumerated group is
// immutable and copies share it.
class MatrixGroup
{
public:
  using Index = CayleyTable::Index;

  MatrixGroup() : MatrixGroup(closure({UnitaryMatrix::identity(1)})) {}

  // Throws ClosureOverflow once more than `budget` elements appear
  // (0 means the configured closure limit).
  static MatrixGroup closure(std::vector<UnitaryMatrix> generators, std::size_t budget = 0)
  {
    if (generators.empty())
      throw InvalidArgument("closure needs at least one generator");
    if (budget == 0)
      budget = limits().closure;
    auto const dim = generators.front().dim();
    std::uint32_t conductor = 1;
    for (auto const &g : generators) {
      if (g.dim() != dim)
        throw InvalidArgument("generators have different dimensions");
      if (!g.is_unitary())
        throw InvalidArgument("generator is not unitary: " + g.str());
      for (auto const &e : g.entries())
        conductor = std::lcm(conductor, e.conductor());
    }
    auto state = std::make_shared<State>(PackedField(conductor, dim));
    state->generators = std::move(generators);
    state->run_closure(budget);
    return MatrixGroup(std::move(state));
  }

  std::size_t dim() const { return _s->field.dim(); }
  std::uint32_t conductor() const { return _s->field.conductor(); }
  std::vector<UnitaryMatrix> const &generators() const { return _s->generators; }
  std::uint64_t order() const { return _s->count; }

  UnitaryMatrix element(Index i) const { return _s->field.unpack(_s->at(i)); }

  std::optional<Index> index_of(UnitaryMatrix const &m) const
  {
    if (m.dim() != dim())
      return std::nullopt;
    std::vector<std::int64_t> buf(_s->stride);
    try {
      _s->field.pack(m, buf);
    } catch (Error const &) {
      return std::nullopt;
    }
    return _s->find(buf);
  }

  bool contains(UnitaryMatrix const &m) const { return index_of(m).has_value(); }

  // Right multiplication columns of the generators, in generator order.
  CayleyTable const &table() const { return *_s->table; }

  Index mul(Index a, Index b) const { return _s->table->mul(a, b); }

  // Right regular representation on the element indices: element x acts as
  // the permutation y -> y*x. Faithful, and semiregular by construction.
  PermGroup regular_perm_rep() const
  {
    std::call_once(_s->regular_once, [this] {
      std::vector<Permutation> gens;
      for (std::size_t s = 0; s < _s->generators.size(); ++s) {
        auto const &c = _s->table->right_column(s);
        gens.emplace_back(std::vector<std::uint32_t>(c.begin(), c.end()));
      }
      _s->regular = PermGroup(static_cast<std::uint32_t>(_s->count), std::move(gens), true);
    });
    return _s->regular;
  }

  Permutation perm_of(Index x) const
  {
    auto c = _s->table->right_column_of(x);
    return Permutation(std::vector<std::uint32_t>(c.begin(), c.end()));
  }

  // Image in regular_perm_rep() of the subgroup generated by the matrices.
  PermGroup image_of(std::vector<UnitaryMatrix> const &gens) const
  {
    std::vector<Permutation> perms;
    for (auto const &g : gens) {
      auto i = index_of(g);
      if (!i)
        throw InvalidArgument("matrix is not an element of the group: " + g.str());
      perms.push_back(perm_of(*i));
    }
    return regular_perm_rep().with_generators(std::move(perms));
  }

  PermGroup image_of(MatrixGroup const &sub) const { return image_of(sub.generators()); }

  // Element index in the regular representation's own table.
  Index perm_index(Index x) const { return *regular_perm_rep().index_of_point(x); }

  // Text export: dimension, tensor convention, generators and optionally
  // every element, one matrix per line.
  std::string str(bool with_elements = false) const
  {
    std::ostringstream os;
    os << "dim " << dim() << "\n";
    os << "tensor left-major\n";
    os << "generators " << _s->generators.size() << "\n";
    for (auto const &g : _s->generators)
      os << g.str() << "\n";
    if (with_elements) {
      os << "elements " << order() << "\n";
      for (Index i = 0; i < order(); ++i)
        os << element(i).str() << "\n";
    }
    return os.str();
  }

private:
  struct State
  {
    explicit State(PackedField f) : field(std::move(f)), stride(field.stride()) {}

    PackedField field;
    std::size_t stride;
    std::vector<UnitaryMatrix> generators;
    std::vector<std::int64_t> data;
    std::vector<std::uint64_t> hashes;
    std::vector<std::uint32_t> slots; // open addressing, UINT32_MAX = empty
    std::size_t count = 0;
    std::unique_ptr<CayleyTable> table;
    std::once_flag regular_once;
    PermGroup regular;

    std::span<std::int64_t const> at(std::size_t i) const
    {
      return {data.data() + i * stride, stride};
    }

    static std::uint64_t hash(std::span<std::int64_t const> m)
    {
      std::uint64_t h = 0xcbf29ce484222325ULL;
      for (auto v : m) {
        h ^= static_cast<std::uint64_t>(v);
        h *= 0x100000001b3ULL;
        h ^= h >> 29;
      }
      return h;
    }

    bool equal(std::size_t i, std::span<std::int64_t const> m) const
    {
      auto const *p = data.data() + i * stride;
      for (std::size_t k = 0; k < stride; ++k) {
        if (p[k] != m[k])
          return false;
      }
      return true;
    }

    std::optional<Index> find(std::span<std::int64_t const> m) const
    {
      auto h = hash(m);
      auto mask = slots.size() - 1;
      for (auto pos = h & mask;; pos = (pos + 1) & mask) {
        auto i = slots[pos];
        if (i == UINT32_MAX)
          return std::nullopt;
        if (hashes[i] == h && equal(i, m))
          return i;
      }
    }

    void place(std::uint32_t i)
    {
      auto mask = slots.size() - 1;
      auto pos = hashes[i] & mask;
      while (slots[pos] != UINT32_MAX)
        pos = (pos + 1) & mask;
      slots[pos] = i;
    }

    // Appends m if new; returns its index and whether it was inserted.
    std::pair<Index, bool> insert(std::span<std::int64_t const> m, std::size_t budget)
    {
      if (auto i = find(m))
        return {*i, false};
      if (count >= budget)
        throw ClosureOverflow("closure exceeded the budget of " + std::to_string(budget) +
                              " elements");
      auto i = static_cast<std::uint32_t>(count++);
      data.insert(data.end(), m.begin(), m.end());
      hashes.push_back(hash(m));
      if (2 * count > slots.size()) {
        slots.assign(slots.size() * 2, UINT32_MAX);
        for (std::uint32_t j = 0; j < count; ++j)
          place(j);
      } else {
        place(i);
      }
      return {i, true};
    }

    void run_closure(std::size_t budget)
    {
      slots.assign(1024, UINT32_MAX);
      auto const k = generators.size();
      std::vector<std::vector<std::int64_t>> gens(k, std::vector<std::int64_t>(stride));
      for (std::size_t s = 0; s < k; ++s)
        field.pack(generators[s], gens[s]);
      std::vector<std::int64_t> id(stride);
      field.pack(UnitaryMatrix::identity(field.dim()), id);
      insert(id, budget);

      std::vector<std::int64_t> x(stride), y(stride);
      std::vector<__int128> scratch;
      std::vector<std::size_t> used;
      // Dimino: with H = <g_1..g_{i-1}> closed, <H, g_i> is the union of
      // cosets H r, and the representatives r are closed under right
      // multiplication by the generators.
      for (std::size_t s = 0; s < k; ++s) {
        if (find(gens[s]))
          continue;
        used.push_back(s);
        auto const h_size = count;
        std::vector<Index> reps;
        auto add_coset = [&](std::vector<std::int64_t> const &r) {
          reps.push_back(static_cast<Index>(count));
          for (std::size_t h = 0; h < h_size; ++h) {
            field.multiply(at(h), r, y, scratch);
            insert(y, budget);
          }
        };
        add_coset(gens[s]);
        for (std::size_t r = 0; r < reps.size(); ++r) {
          for (auto t : used) {
            field.multiply(at(reps[r]), gens[t], x, scratch);
            if (!find(x))
              add_coset(x);
          }
        }
      }

      std::vector<CayleyTable::Column> columns(k, CayleyTable::Column(count));
      for (std::size_t e = 0; e < count; ++e) {
        for (std::size_t s = 0; s < k; ++s) {
          field.multiply(at(e), gens[s], x, scratch);
          columns[s][e] = *find(x);
        }
      }
      table = std::make_unique<CayleyTable>(std::move(columns), static_cast<Index>(count));
    }
  };

  explicit MatrixGroup(std::shared_ptr<State> s) : _s(std::move(s)) {}

  std::shared_ptr<State> _s;
};

// Reads the format written by MatrixGroup::str. A listed element table is
// checked against the closure of the generators.
inline MatrixGroup parse_matrix_group(std::string const &text)
{
  std::istringstream is(text);
  std::string line;
  std::size_t line_no = 0;
  auto next = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#')
        continue;
      line = line.substr(first);
      while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
        line.pop_back();
      return true;
    }
    return false;
  };
  auto keyword = [&](std::string const &key) -> std::size_t {
    if (!next() || line.rfind(key + " ", 0) != 0)
      throw ParseError("expected '" + key + "'", line_no);
    try {
      return std::stoul(line.substr(key.size() + 1));
    } catch (std::logic_error const &) {
      throw ParseError("bad number after '" + key + "'", line_no);
    }
  };
  auto matrix = [&]() {
    if (!next())
      throw ParseError("unexpected end of file", line_no);
    try {
      return parse_matrix(line);
    } catch (ParseError const &e) {
      throw ParseError(e.what(), line_no);
    }
  };

  auto dim = keyword("dim");
  if (!next() || line != "tensor left-major")
    throw ParseError("expected 'tensor left-major'", line_no);
  auto count = keyword("generators");
  std::vector<UnitaryMatrix> gens;
  for (std::size_t i = 0; i < count; ++i) {
    gens.push_back(matrix());
    if (gens.back().dim() != dim)
      throw ParseError("generator has the wrong dimension", line_no);
  }
  auto group = MatrixGroup::closure(std::move(gens));
  if (next()) {
    if (line.rfind("elements ", 0) != 0)
      throw ParseError("expected 'elements'", line_no);
    auto n = std::stoul(line.substr(9));
    if (n != group.order())
      throw ParseError("element count does not match the closure", line_no);
    for (std::size_t i = 0; i < n; ++i) {
      auto m = matrix();
      if (!group.contains(m))
        throw ParseError("listed element is not in the group", line_no);
    }
  }
  return group;
}

} // namespace qgroups
