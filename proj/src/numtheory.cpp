#include "theta3/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "theta3/error.hpp"

namespace theta3 {

namespace {

constexpr std::uint64_t kTrialDivisionBound = 10'000;

void pollard_split(std::uint64_t m, Factorization& out);

// Brent's cycle-finding variant of Pollard rho for the map x -> x^2 + c.
// Returns a nontrivial factor or m on failure.
std::uint64_t pollard_brent(std::uint64_t m, std::uint64_t c) {
  constexpr std::uint64_t kBatch = 128;
  auto step = [&](std::uint64_t x) { return (mul_mod(x, x, m) + c) % m; };
  std::uint64_t y = 2, x = 2, ys = 2, g = 1, q = 1;
  for (std::uint64_t r = 1; g == 1; r <<= 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    for (std::uint64_t k = 0; k < r && g == 1; k += kBatch) {
      ys = y;
      for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
        y = step(y);
        q = mul_mod(q, x > y ? x - y : y - x, m);
      }
      g = std::gcd(q, m);
    }
  }
  if (g == m) {
    // Batched gcd overshot; replay one step at a time.
    do {
      ys = step(ys);
      g = std::gcd(x > ys ? x - ys : ys - x, m);
    } while (g == 1);
  }
  return g;
}

void pollard_split(std::uint64_t m, Factorization& out) {
  if (m == 1) return;
  if (is_prime(m)) {
    ++out.prime_powers[m];
    return;
  }
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t d = pollard_brent(m, c);
    if (d != m && d != 1) {
      pollard_split(d, out);
      pollard_split(m / d, out);
      return;
    }
  }
}

}  // namespace

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : prime_powers) {
    for (int i = 0; i < e; ++i) v *= p;
  }
  return v;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t pow3(int n) {
  if (n < 0 || n > 40) {
    throw Error(ErrorCode::BudgetExceeded, "3^" + std::to_string(n) + " does not fit in 64 bits");
  }
  std::uint64_t v = 1;
  for (int i = 0; i < n; ++i) v *= 3;
  return v;
}

bool is_prime(std::uint64_t m) {
  if (m < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto p : kBases) {
    if (m % p == 0) return m == p;
  }
  std::uint64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : kBases) {
    std::uint64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t m) {
  Factorization out;
  if (m == 0) {
    throw Error(ErrorCode::InvariantViolation, "factorize requires m >= 1");
  }
  for (std::uint64_t p = 2; p <= kTrialDivisionBound && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++out.prime_powers[p];
      m /= p;
    }
  }
  if (m > 1 && m <= kTrialDivisionBound * kTrialDivisionBound) {
    // No factor below the bound, so what remains is prime.
    ++out.prime_powers[m];
    return out;
  }
  pollard_split(m, out);
  return out;
}

std::vector<std::uint64_t> divisors(const Factorization& f) {
  std::vector<std::uint64_t> result{1};
  for (const auto& [p, e] : f.prime_powers) {
    const std::size_t current = result.size();
    std::uint64_t pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < current; ++i) result.push_back(result[i] * pk);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<std::uint64_t> odd_divisors_gt1(const Factorization& f) {
  Factorization odd = f;
  odd.prime_powers.erase(2);
  auto all = divisors(odd);
  all.erase(all.begin());  // 1
  return all;
}

std::uint64_t euler_phi(const Factorization& f) {
  std::uint64_t phi = 1;
  for (const auto& [p, e] : f.prime_powers) {
    phi *= p - 1;
    for (int i = 1; i < e; ++i) phi *= p;
  }
  return phi;
}

std::uint64_t euler_phi(std::uint64_t d) { return euler_phi(factorize(d)); }

std::uint64_t ord_mod(std::int64_t a, std::uint64_t d) {
  if (d == 0) {
    throw Error(ErrorCode::InvariantViolation, "ord_mod requires d >= 1");
  }
  std::uint64_t residue;
  if (a >= 0) {
    residue = static_cast<std::uint64_t>(a) % d;
  } else {
    // |a| as unsigned, valid for INT64_MIN as well.
    std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
    residue = (d - mag % d) % d;
  }
  if (std::gcd(residue, d) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(a) + ", " + std::to_string(d) + ") != 1");
  }
  if (d == 1) return 1;
  const std::uint64_t phi = euler_phi(d);
  return order_by_prime_stripping(phi, factorize(phi),
                                  [&](std::uint64_t k) { return pow_mod(residue, k, d) == 1; });
}

int two_adic_valuation(std::uint64_t m) {
  if (m == 0) {
    throw Error(ErrorCode::InvariantViolation, "two_adic_valuation requires m >= 1");
  }
  return std::countr_zero(m);
}

}  // namespace theta3
