#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace theta3 {

/// Prime factorization: prime -> exponent, primes ascending.
struct Factorization {
  std::map<std::uint64_t, int> prime_powers;

  /// Product of p^e. Does not check for overflow; callers only build
  /// factorizations of values that fit.
  [[nodiscard]] std::uint64_t value() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

[[nodiscard]] std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
[[nodiscard]] std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// 3^n, or BudgetExceeded when it does not fit in 64 bits (n > 40).
[[nodiscard]] std::uint64_t pow3(int n);

/// Deterministic Miller-Rabin; the fixed base set is exact for every 64-bit input.
[[nodiscard]] bool is_prime(std::uint64_t m);

/// Trial division up to a fixed bound, then Pollard rho (Brent variant) with
/// increments c = 1, 2, 3, ... on failure. Deterministic. factorize(1) is empty.
[[nodiscard]] Factorization factorize(std::uint64_t m);

/// All positive divisors, ascending.
[[nodiscard]] std::vector<std::uint64_t> divisors(const Factorization& f);

/// Divisors of the odd part of f other than 1, ascending.
[[nodiscard]] std::vector<std::uint64_t> odd_divisors_gt1(const Factorization& f);

[[nodiscard]] std::uint64_t euler_phi(const Factorization& f);
[[nodiscard]] std::uint64_t euler_phi(std::uint64_t d);

/// Least k >= 1 with a^k = 1 (mod d). Strips the prime factors of phi(d)
/// rather than walking powers. Throws NotCoprime when gcd(a, d) != 1.
[[nodiscard]] std::uint64_t ord_mod(std::int64_t a, std::uint64_t d);

/// Order of an element of a group whose exponent divides `group_order`,
/// given `is_identity(k)` answering whether x^k == 1. Shared by the integer
/// and the field-side order computations.
template <typename IsIdentity>
[[nodiscard]] std::uint64_t order_by_prime_stripping(std::uint64_t group_order, const Factorization& factors,
                                                     IsIdentity&& is_identity) {
  std::uint64_t order = group_order;
  for (const auto& [p, e] : factors.prime_powers) {
    for (int i = 0; i < e; ++i) {
      if (order % p != 0 || !is_identity(order / p)) break;
      order /= p;
    }
  }
  return order;
}

/// Largest e with 2^e | m. Requires m >= 1.
[[nodiscard]] int two_adic_valuation(std::uint64_t m);

}  // namespace theta3
