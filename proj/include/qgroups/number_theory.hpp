#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace qgroups::nt {

struct PrimePower
{
  std::uint32_t prime;
  std::uint32_t exponent;
  std::uint32_t value; // prime^exponent
};

inline std::vector<PrimePower> factor(std::uint32_t n)
{
  std::vector<PrimePower> result;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0)
      continue;
    PrimePower pp{p, 0, 1};
    while (n % p == 0) {
      n /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    result.push_back(pp);
  }
  if (n > 1)
    result.push_back({n, 1, n});
  return result;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m)
{
  auto r = a % m;
  return r < 0 ? r + m : r;
}

// Inverse of a modulo m; a and m must be coprime.
inline std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t m)
{
  if (m == 1)
    return 0;
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = m, new_r = a % m;
  while (new_r != 0) {
    auto q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1)
    throw ArithmeticError("mod_inverse: arguments not coprime");
  return static_cast<std::uint32_t>(mod(t, m));
}

inline std::uint32_t lcm(std::uint32_t a, std::uint32_t b)
{
  return a / std::gcd(a, b) * b;
}

inline std::uint32_t euler_phi(std::uint32_t n)
{
  std::uint32_t result = n;
  for (auto const &pp : factor(n))
    result = result / pp.prime * (pp.prime - 1);
  return result;
}

// Legendre symbol (a/p) for an odd prime p.
inline int legendre(std::int64_t a, std::uint32_t p)
{
  a = mod(a, p);
  if (a == 0)
    return 0;
  std::uint64_t result = 1, base = static_cast<std::uint64_t>(a);
  std::uint64_t e = (p - 1) / 2;
  while (e) {
    if (e & 1)
      result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result == 1 ? 1 : -1;
}

} // namespace qgroups::nt
