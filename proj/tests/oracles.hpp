#pragma once
// Brute-force references used only by tests. Nothing here touches the
// bit-sliced arithmetic in the library.

#include <cstdint>
#include <vector>

#include "theta3/poly3.hpp"

namespace theta3::oracle {

using Coeffs = std::vector<int>;

inline Coeffs coeffs_of(const Poly3& p) { return Coeffs(p.coeffs().begin(), p.coeffs().end()); }

inline void trim(Coeffs& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

/// Remainder of a by a monic b, schoolbook long division.
inline Coeffs remainder(Coeffs a, const Coeffs& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const int c = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t k = 0; k <= db; ++k) a[shift + k] = ((a[shift + k] - c * b[k]) % 3 + 3) % 3;
    trim(a);
  }
  return a;
}

/// Exhaustive search for a monic factor of degree 1..n/2.
inline bool irreducible_by_factor_search(const Poly3& p) {
  const int n = p.degree();
  if (n < 1) return false;
  const Coeffs f = coeffs_of(p);
  for (int d = 1; d <= n / 2; ++d) {
    std::uint64_t combos = 1;
    for (int i = 0; i < d; ++i) combos *= 3;
    for (std::uint64_t code = 0; code < combos; ++code) {
      const Coeffs g = coeffs_of(Poly3::monic_from_code(d, code));
      if (remainder(f, g).empty()) return false;
    }
  }
  return true;
}

/// Product modulo a monic modulus via schoolbook multiplication and long division.
inline Coeffs mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& modulus) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % 3;
  }
  return remainder(prod, modulus);
}

/// Least k >= 1 with a^k = 1 (mod d), by direct powering.
inline std::uint64_t order_by_powering(std::int64_t a, std::uint64_t d) {
  const auto m = static_cast<std::int64_t>(d);
  const std::int64_t r = ((a % m) + m) % m;
  std::int64_t x = r % m;
  for (std::uint64_t k = 1; k <= d; ++k) {
    if (x == 1 % m) return k;
    x = x * r % m;
  }
  return 0;
}

/// phi(d) by counting units.
inline std::uint64_t phi_by_counting(std::uint64_t d) {
  std::uint64_t count = 0;
  for (std::uint64_t k = 1; k <= d; ++k) {
    std::uint64_t a = k, b = d;
    while (b) {
      const auto t = a % b;
      a = b;
      b = t;
    }
    if (a == 1) ++count;
  }
  return count;
}

}  // namespace theta3::oracle
