#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "errors.hpp"
#include "number_theory.hpp"

namespace qgroups {

using Rational = mpq_class;

namespace detail {

inline std::size_t hash_mpz(mpz_class const &z)
{
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  auto const limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    auto limb = static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i));
    h ^= limb + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

inline void hash_combine(std::size_t &seed, std::size_t value)
{
  seed ^= value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

// Per-prime-power coordinates of an exponent of zeta_N. Writing
// N = prod q_i with coprime prime powers q_i, every exponent e decomposes
// uniquely as e = sum (N/q_i) a_i (mod N) and zeta_N^e = prod zeta_{q_i}^{a_i}.
class ExponentCoordinates
{
public:
  explicit ExponentCoordinates(std::uint32_t n)
  : _n(n), _factors(nt::factor(n))
  {
    for (auto const &pp : _factors) {
      auto cofactor = n / pp.value;
      _cofactors.push_back(cofactor);
      _cofactor_inverses.push_back(nt::mod_inverse(cofactor % pp.value, pp.value));
    }
  }

  std::uint32_t conductor() const { return _n; }
  std::vector<nt::PrimePower> const &factors() const { return _factors; }

  std::uint32_t coordinate(std::uint32_t e, std::size_t i) const
  {
    auto q = _factors[i].value;
    return static_cast<std::uint32_t>(
      static_cast<std::uint64_t>(e % q) * _cofactor_inverses[i] % q);
  }

  // Exponent obtained by changing coordinate i from `from` to `to`.
  std::uint32_t shift(std::uint32_t e, std::size_t i, std::int64_t from,
                      std::int64_t to) const
  {
    auto delta = static_cast<std::int64_t>(_cofactors[i]) * (to - from);
    return static_cast<std::uint32_t>(nt::mod(static_cast<std::int64_t>(e) + delta, _n));
  }

  // True iff zeta_N^e belongs to the canonical basis.
  bool in_basis(std::uint32_t e) const
  {
    for (std::size_t i = 0; i < _factors.size(); ++i) {
      auto const &pp = _factors[i];
      auto digit = coordinate(e, i) / (pp.value / pp.prime);
      if (pp.prime == 2 ? digit != 0 : digit == 0)
        return false;
    }
    return true;
  }

private:
  std::uint32_t _n;
  std::vector<nt::PrimePower> _factors;
  std::vector<std::uint32_t> _cofactors;
  std::vector<std::uint32_t> _cofactor_inverses;
};

// Rewrites a dense coefficient vector over zeta_N^0 .. zeta_N^{N-1} in place
// so that only canonical basis exponents carry nonzero coefficients.
//
// For a prime power q = p^k write a coordinate as a = i + j p^{k-1} with
// 0 <= i < p^{k-1}. The basis keeps j = 0 when p = 2 and 1 <= j <= p-1 when p
// is odd; the relations zeta_{2^k}^{2^{k-1}} = -1 and
// 1 + zeta_p + ... + zeta_p^{p-1} = 0 eliminate the rest.
template<typename Coeff>
void reduce_to_basis(ExponentCoordinates const &coords, std::vector<Coeff> &dense)
{
  auto const n = coords.conductor();
  auto const &factors = coords.factors();
  for (std::size_t f = 0; f < factors.size(); ++f) {
    auto const p = factors[f].prime;
    auto const step = factors[f].value / p;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (dense[e] == 0)
        continue;
      auto a = coords.coordinate(e, f);
      auto i = a % step, j = a / step;
      if (p == 2) {
        if (j == 1) {
          auto target = coords.shift(e, f, a, i);
          dense[target] -= dense[e];
          dense[e] = 0;
        }
      } else if (j == 0) {
        for (std::uint32_t jj = 1; jj < p; ++jj) {
          auto target = coords.shift(e, f, a, i + jj * step);
          dense[target] -= dense[e];
        }
        dense[e] = 0;
      }
    }
  }
}

} // namespace detail

// Exact element of a cyclotomic field Q(zeta_n).
//
// The value is stored as sum c_k zeta_n^k over the canonical (Zumbroich)
// basis of Q(zeta_n) with n the smallest conductor of any cyclotomic field
// containing the value, so equal numbers always have identical
// representations. Values are immutable.
class Cyclotomic
{
public:
  using Term = std::pair<std::uint32_t, Rational>;

  Cyclotomic() = default;

  Cyclotomic(long value)
  {
    if (value != 0)
      _terms.emplace_back(0, Rational(value));
  }

  Cyclotomic(Rational value)
  {
    value.canonicalize();
    if (value != 0)
      _terms.emplace_back(0, std::move(value));
  }

  static Cyclotomic root_of_unity(std::uint32_t n)
  {
    if (n == 0)
      throw InvalidArgument("root_of_unity: order must be positive");
    std::vector<Rational> dense(n);
    dense[n > 1 ? 1 : 0] = 1;
    return from_dense(n, std::move(dense));
  }

  // Positive square root of an integer (imaginary for negative input).
  static Cyclotomic sqrt(long n)
  {
    if (n == 0)
      return Cyclotomic();
    if (n < 0)
      return root_of_unity(4) * sqrt(-n);

    long square = 1, free_part = 1;
    long rest = n;
    for (long p = 2; p * p <= rest; ++p) {
      while (rest % (p * p) == 0) {
        rest /= p * p;
        square *= p;
      }
      if (rest % p == 0) {
        rest /= p;
        free_part *= p;
      }
    }
    free_part *= rest;

    Cyclotomic result(square);
    for (auto const &pp : nt::factor(static_cast<std::uint32_t>(free_part)))
      result = result * sqrt_prime(pp.prime);
    return result;
  }

  // Builds a value from coefficients over all powers zeta_n^0 .. zeta_n^{n-1}.
  static Cyclotomic from_dense(std::uint32_t n, std::vector<Rational> dense)
  {
    detail::ExponentCoordinates coords(n);
    detail::reduce_to_basis(coords, dense);
    std::vector<Term> terms;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (dense[e] != 0)
        terms.emplace_back(e, std::move(dense[e]));
    }
    return minimize(n, std::move(terms));
  }

  // Builds a value from coefficients on the canonical basis of conductor n.
  static Cyclotomic from_basis_terms(std::uint32_t n, std::vector<Term> terms)
  {
    std::sort(terms.begin(), terms.end(),
              [](Term const &a, Term const &b) { return a.first < b.first; });
    std::erase_if(terms, [](Term const &t) { return t.second == 0; });
    return minimize(n, std::move(terms));
  }

  std::uint32_t conductor() const { return _conductor; }
  std::vector<Term> const &terms() const { return _terms; }

  bool is_zero() const { return _terms.empty(); }
  bool is_rational() const { return _conductor == 1; }

  Rational rational_value() const
  {
    if (!is_rational())
      throw InvalidArgument("cyclotomic value is not rational");
    return _terms.empty() ? Rational(0) : _terms.front().second;
  }

  // Coefficients of this value over zeta_n^0 .. zeta_n^{n-1}; n must be a
  // multiple of the conductor.
  std::vector<Rational> dense(std::uint32_t n) const
  {
    if (n % _conductor != 0)
      throw InvalidArgument("dense: target conductor is not a multiple");
    std::vector<Rational> result(n);
    auto scale = n / _conductor;
    for (auto const &[e, c] : _terms)
      result[e * scale] += c;
    return result;
  }

  // Galois automorphism zeta -> zeta^k, k coprime to the conductor.
  Cyclotomic galois(long k) const
  {
    auto n = _conductor;
    auto kk = static_cast<std::uint32_t>(nt::mod(k, n));
    if (std::gcd(kk, n) != 1 && n > 1)
      throw InvalidArgument("galois: exponent not coprime to conductor");
    std::vector<Rational> d(n);
    for (auto const &[e, c] : _terms)
      d[static_cast<std::uint64_t>(e) * kk % n] += c;
    return from_dense(n, std::move(d));
  }

  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic inverse() const
  {
    if (is_zero())
      throw ArithmeticError("division by zero");
    if (is_rational())
      return Cyclotomic(Rational(1) / _terms.front().second);

    // a^{-1} = (prod_{k != 1} sigma_k(a)) / N(a)
    Cyclotomic others(1L);
    for (std::uint32_t k = 2; k < _conductor; ++k) {
      if (std::gcd(k, _conductor) == 1)
        others = others * galois(k);
    }
    auto norm = (*this * others).rational_value();
    return others * Cyclotomic(Rational(1) / norm);
  }

  Cyclotomic pow(long exponent) const
  {
    if (exponent < 0)
      return inverse().pow(-exponent);
    Cyclotomic result(1L), base = *this;
    while (exponent) {
      if (exponent & 1)
        result = result * base;
      exponent >>= 1;
      if (exponent)
        base = base * base;
    }
    return result;
  }

  std::complex<double> to_complex() const
  {
    std::complex<double> z;
    for (auto const &[e, c] : _terms) {
      double angle = 2.0 * std::numbers::pi * e / _conductor;
      z += c.get_d() * std::polar(1.0, angle);
    }
    return z;
  }

  std::size_t hash() const
  {
    std::size_t h = _conductor;
    for (auto const &[e, c] : _terms) {
      detail::hash_combine(h, e);
      detail::hash_combine(h, detail::hash_mpz(c.get_num()));
      detail::hash_combine(h, detail::hash_mpz(c.get_den()));
    }
    return h;
  }

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b)
  {
    return a._conductor == b._conductor && a._terms == b._terms;
  }

  // Total order on representations, used for deterministic sorting only.
  friend bool operator<(Cyclotomic const &a, Cyclotomic const &b)
  {
    if (a._conductor != b._conductor)
      return a._conductor < b._conductor;
    return std::lexicographical_compare(
      a._terms.begin(), a._terms.end(), b._terms.begin(), b._terms.end(),
      [](Term const &x, Term const &y) {
        return x.first != y.first ? x.first < y.first : x.second < y.second;
      });
  }

  friend Cyclotomic operator+(Cyclotomic const &a, Cyclotomic const &b)
  {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto n = nt::lcm(a._conductor, b._conductor);
    auto d = a.dense(n);
    auto scale = n / b._conductor;
    for (auto const &[e, c] : b._terms)
      d[e * scale] += c;
    return from_dense(n, std::move(d));
  }

  friend Cyclotomic operator-(Cyclotomic const &a)
  {
    Cyclotomic r = a;
    for (auto &t : r._terms)
      t.second = -t.second;
    return r;
  }

  friend Cyclotomic operator-(Cyclotomic const &a, Cyclotomic const &b)
  {
    return a + (-b);
  }

  friend Cyclotomic operator*(Cyclotomic const &a, Cyclotomic const &b)
  {
    if (a.is_zero() || b.is_zero())
      return Cyclotomic();
    if (a.is_rational())
      return b.scaled(a._terms.front().second);
    if (b.is_rational())
      return a.scaled(b._terms.front().second);

    auto n = nt::lcm(a._conductor, b._conductor);
    auto sa = n / a._conductor, sb = n / b._conductor;
    std::vector<Rational> d(n);
    for (auto const &[ea, ca] : a._terms) {
      for (auto const &[eb, cb] : b._terms)
        d[(ea * sa + eb * sb) % n] += ca * cb;
    }
    return from_dense(n, std::move(d));
  }

  friend Cyclotomic operator/(Cyclotomic const &a, Cyclotomic const &b)
  {
    return a * b.inverse();
  }

  Cyclotomic &operator+=(Cyclotomic const &o) { return *this = *this + o; }
  Cyclotomic &operator-=(Cyclotomic const &o) { return *this = *this - o; }
  Cyclotomic &operator*=(Cyclotomic const &o) { return *this = *this * o; }

  // GAP-style text: E(n) for zeta_n, rationals as p/q, terms joined by +/-.
  std::string str() const
  {
    if (_terms.empty())
      return "0";
    std::string out;
    bool first = true;
    for (auto const &[e, c] : _terms) {
      bool negative = c < 0;
      Rational magnitude = abs(c);
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? "-" : "+";
      first = false;

      if (e == 0) {
        out += magnitude.get_str();
        continue;
      }
      if (magnitude != 1)
        out += magnitude.get_str() + "*";
      out += "E(" + std::to_string(_conductor) + ")";
      if (e != 1)
        out += "^" + std::to_string(e);
    }
    return out;
  }

  friend std::ostream &operator<<(std::ostream &os, Cyclotomic const &c)
  {
    return os << c.str();
  }

private:
  Cyclotomic(std::uint32_t n, std::vector<Term> terms)
  : _conductor(n), _terms(std::move(terms))
  {}

  Cyclotomic scaled(Rational const &s) const
  {
    Cyclotomic r = *this;
    for (auto &t : r._terms)
      t.second *= s;
    return r;
  }

  static Cyclotomic sqrt_prime(std::uint32_t p)
  {
    if (p == 2)
      return root_of_unity(8) - root_of_unity(8).pow(3);
    std::vector<Rational> d(p);
    for (std::uint32_t k = 1; k < p; ++k)
      d[k] = nt::legendre(k, p);
    auto gauss = from_dense(p, std::move(d));
    return p % 4 == 1 ? gauss : -(root_of_unity(4) * gauss);
  }

  // Terms are on the canonical basis of conductor n; find the smallest
  // subfield containing the value and re-express it there.
  static Cyclotomic minimize(std::uint32_t n, std::vector<Term> terms)
  {
    if (terms.empty())
      return Cyclotomic();

    for (;;) {
      if (n == 1)
        break;
      detail::ExponentCoordinates coords(n);
      auto const &factors = coords.factors();
      bool reduced = false;

      for (std::size_t f = 0; f < factors.size() && !reduced; ++f) {
        auto const pp = factors[f];
        auto const new_n = n / pp.prime;
        auto const new_q = pp.value / pp.prime;
        // Maps exponent e of zeta_n to the exponent of zeta_{new_n} whose
        // coordinate f is replaced by `digit` (which lives mod new_q).
        auto recompose = [&](std::uint32_t e, std::uint32_t digit) {
          std::uint64_t r = 0;
          for (std::size_t g = 0; g < factors.size(); ++g) {
            auto q = g == f ? new_q : factors[g].value;
            if (q == 1)
              continue;
            auto a = g == f ? digit : coords.coordinate(e, g);
            auto cof = new_n / q;
            r += static_cast<std::uint64_t>(cof) * a;
          }
          return static_cast<std::uint32_t>(r % new_n);
        };

        if (pp.exponent >= 2 || pp.prime == 2) {
          // Either n = 2 mod 4 (every basis element has coordinate 0 at 2),
          // or the prime power subfield embeds into the basis directly.
          bool ok = std::all_of(terms.begin(), terms.end(), [&](Term const &t) {
            return coords.coordinate(t.first, f) % pp.prime == 0;
          });
          if (!ok)
            continue;
          for (auto &t : terms)
            t.first = recompose(t.first, coords.coordinate(t.first, f) / pp.prime);
          reduced = true;
        } else {
          // p exactly divides n: zeta_p, ..., zeta_p^{p-1} are linearly
          // independent over Q(zeta_{n/p}); the value lies in the subfield
          // iff their coefficients agree, and then it equals minus that.
          std::map<std::uint32_t, std::vector<Rational const *>> groups;
          for (auto const &t : terms) {
            auto a = coords.coordinate(t.first, f);
            auto key = coords.shift(t.first, f, a, 0);
            auto &slot = groups[key];
            slot.resize(pp.prime - 1, nullptr);
            slot[a - 1] = &t.second;
          }
          bool ok = std::all_of(groups.begin(), groups.end(), [](auto const &kv) {
            auto const &v = kv.second;
            return std::all_of(v.begin(), v.end(), [&](Rational const *c) {
              return c && *c == *v.front();
            });
          });
          if (!ok)
            continue;
          std::vector<Term> next;
          for (auto const &[key, coeffs] : groups)
            next.emplace_back(recompose(key, 0), -*coeffs.front());
          terms = std::move(next);
          reduced = true;
        }
        if (reduced)
          n = new_n;
      }
      if (!reduced)
        break;
    }

    std::sort(terms.begin(), terms.end(),
              [](Term const &a, Term const &b) { return a.first < b.first; });
    return Cyclotomic(n, std::move(terms));
  }

  std::uint32_t _conductor = 1;
  std::vector<Term> _terms;
};

// zeta_n, written E(n) in text form.
inline Cyclotomic root_of_unity(std::uint32_t n) { return Cyclotomic::root_of_unity(n); }

// The positive square root of two, zeta_8 - zeta_8^3.
inline Cyclotomic sqrt2() { return Cyclotomic::sqrt(2); }

inline Cyclotomic conj(Cyclotomic const &c) { return c.conj(); }

} // namespace qgroups

template<>
struct std::hash<qgroups::Cyclotomic>
{
  std::size_t operator()(qgroups::Cyclotomic const &c) const { return c.hash(); }
};
