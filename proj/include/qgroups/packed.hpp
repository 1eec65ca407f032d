#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "cyclotomic.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace qgroups {

// Fixed-conductor integer encoding of cyclotomic matrices, used where many
// products of matrices from one field are needed (group closure).
//
// A d x d matrix over Q(zeta_N) is stored as 1 + d*d*phi(N) int64 words: a
// positive common denominator followed by the integer numerators of every
// entry on the canonical basis. Numerators and denominator are coprime, so
// the encoding of a matrix is unique and can be hashed and compared word by
// word. Arithmetic that would leave int64 throws ArithmeticError.
class PackedField
{
public:
  PackedField() : PackedField(1, 1) {}

  PackedField(std::uint32_t conductor, std::size_t dim)
  : _n(conductor), _dim(dim), _coords(conductor)
  {
    _slot.assign(_n, -1);
    for (std::uint32_t e = 0; e < _n; ++e) {
      if (_coords.in_basis(e)) {
        _slot[e] = static_cast<std::int32_t>(_basis.size());
        _basis.push_back(e);
      }
    }
    auto const b = _basis.size();
    _products.resize(b * b);
    for (std::size_t u = 0; u < b; ++u) {
      for (std::size_t v = 0; v < b; ++v) {
        std::vector<long> dense(_n, 0);
        dense[(_basis[u] + _basis[v]) % _n] = 1;
        detail::reduce_to_basis(_coords, dense);
        for (std::uint32_t e = 0; e < _n; ++e) {
          if (dense[e] != 0)
            _products[u * b + v].push_back({static_cast<std::uint32_t>(_slot[e]), dense[e]});
        }
      }
    }
  }

  std::uint32_t conductor() const { return _n; }
  std::size_t dim() const { return _dim; }
  std::size_t basis_size() const { return _basis.size(); }
  std::size_t stride() const { return 1 + _dim * _dim * _basis.size(); }

  void pack(UnitaryMatrix const &m, std::span<std::int64_t> out) const
  {
    if (m.dim() != _dim)
      throw InvalidArgument("packed: dimension mismatch");
    auto const b = _basis.size();
    std::vector<Rational> coeffs(_dim * _dim * b);
    for (std::size_t k = 0; k < _dim * _dim; ++k) {
      auto const &c = m.entries()[k];
      if (_n % c.conductor() != 0)
        throw InvalidArgument("packed: entry " + c.str() + " is outside Q(E(" +
                              std::to_string(_n) + "))");
      auto dense = c.dense(_n);
      detail::reduce_to_basis(_coords, dense);
      for (std::uint32_t e = 0; e < _n; ++e) {
        if (dense[e] != 0)
          coeffs[k * b + static_cast<std::size_t>(_slot[e])] = dense[e];
      }
    }
    mpz_class den = 1;
    for (auto const &q : coeffs)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    if (!den.fits_slong_p())
      throw ArithmeticError("packed: denominator exceeds 64 bits");
    out[0] = den.get_si();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      mpz_class num = coeffs[k].get_num() * (den / coeffs[k].get_den());
      if (!num.fits_slong_p())
        throw ArithmeticError("packed: numerator exceeds 64 bits");
      out[1 + k] = num.get_si();
    }
  }

  UnitaryMatrix unpack(std::span<std::int64_t const> in) const
  {
    auto const b = _basis.size();
    UnitaryMatrix m(_dim);
    Rational den(in[0]);
    for (std::size_t i = 0; i < _dim; ++i) {
      for (std::size_t j = 0; j < _dim; ++j) {
        std::vector<Cyclotomic::Term> terms;
        for (std::size_t u = 0; u < b; ++u) {
          auto num = in[1 + (i * _dim + j) * b + u];
          if (num != 0) {
            Rational c(mpz_class(static_cast<long>(num)), den.get_num());
            c.canonicalize();
            terms.emplace_back(_basis[u], std::move(c));
          }
        }
        m(i, j) = Cyclotomic::from_basis_terms(_n, std::move(terms));
      }
    }
    return m;
  }

  // out = a * b; out must not alias a or b.
  void multiply(std::span<std::int64_t const> a, std::span<std::int64_t const> b,
                std::span<std::int64_t> out, std::vector<__int128> &scratch) const
  {
    auto const nb = _basis.size();
    auto const d = _dim;
    scratch.assign(d * d * nb, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        auto const *x = &a[1 + (i * d + k) * nb];
        for (std::size_t u = 0; u < nb; ++u) {
          if (x[u] == 0)
            continue;
          for (std::size_t j = 0; j < d; ++j) {
            auto const *y = &b[1 + (k * d + j) * nb];
            auto *acc = &scratch[(i * d + j) * nb];
            for (std::size_t v = 0; v < nb; ++v) {
              if (y[v] == 0)
                continue;
              __int128 p = static_cast<__int128>(x[u]) * y[v];
              for (auto const &[w, c] : _products[u * nb + v])
                acc[w] += p * c;
            }
          }
        }
      }
    }
    __int128 den = static_cast<__int128>(a[0]) * b[0];
    normalize(den, scratch, out);
  }

private:
  static __int128 gcd128(__int128 x, __int128 y)
  {
    if (x < 0)
      x = -x;
    if (y < 0)
      y = -y;
    while (y) {
      auto t = x % y;
      x = y;
      y = t;
    }
    return x;
  }

  static void normalize(__int128 den, std::vector<__int128> const &nums, std::span<std::int64_t> out)
  {
    __int128 g = den;
    for (auto v : nums) {
      if (g == 1)
        break;
      if (v != 0)
        g = gcd128(g, v);
    }
    constexpr __int128 lo = INT64_MIN, hi = INT64_MAX;
    den /= g;
    if (den > hi)
      throw ArithmeticError("packed: denominator overflow");
    out[0] = static_cast<std::int64_t>(den);
    for (std::size_t k = 0; k < nums.size(); ++k) {
      auto v = nums[k] / g;
      if (v < lo || v > hi)
        throw ArithmeticError("packed: numerator overflow");
      out[1 + k] = static_cast<std::int64_t>(v);
    }
  }

  struct Product
  {
    std::uint32_t slot;
    long coeff;
  };

  std::uint32_t _n;
  std::size_t _dim;
  detail::ExponentCoordinates _coords;
  std::vector<std::uint32_t> _basis;
  std::vector<std::int32_t> _slot;
  std::vector<std::vector<Product>> _products;
};

} // namespace qgroups
