#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "theta3/numtheory.hpp"
#include "theta3/poly3.hpp"

namespace theta3 {

/// Largest supported extension degree: 3^40 - 1 is the largest group order
/// that fits in 64 bits.
inline constexpr int kMaxFieldDegree = 40;

/// Bit-sliced GF(3) coefficient vector. Bit i of `one` is set iff coefficient
/// i equals 1, bit i of `two` iff it equals 2. The two masks are disjoint.
struct Trits {
  std::uint64_t one = 0;
  std::uint64_t two = 0;

  friend constexpr bool operator==(Trits, Trits) = default;
};

namespace trits {

[[nodiscard]] constexpr bool is_zero(Trits a) noexcept { return (a.one | a.two) == 0; }

[[nodiscard]] constexpr Trits add(Trits a, Trits b) noexcept {
  const std::uint64_t a0 = ~(a.one | a.two);
  const std::uint64_t b0 = ~(b.one | b.two);
  return {(a0 & b.one) | (a.one & b0) | (a.two & b.two), (a0 & b.two) | (a.two & b0) | (a.one & b.one)};
}

[[nodiscard]] constexpr Trits neg(Trits a) noexcept { return {a.two, a.one}; }

[[nodiscard]] constexpr Trits sub(Trits a, Trits b) noexcept { return add(a, neg(b)); }

/// Multiplies by a scalar in {0,1,2}.
[[nodiscard]] constexpr Trits scale(Trits a, unsigned c) noexcept {
  return c == 0 ? Trits{} : (c == 1 ? a : neg(a));
}

[[nodiscard]] constexpr Trits shl(Trits a, int k) noexcept { return {a.one << k, a.two << k}; }

/// -1 for the zero vector.
[[nodiscard]] constexpr int degree(Trits a) noexcept { return 63 - std::countl_zero(a.one | a.two); }

[[nodiscard]] constexpr unsigned coeff(Trits a, int i) noexcept {
  return static_cast<unsigned>((a.one >> i) & 1U) | (static_cast<unsigned>((a.two >> i) & 1U) << 1);
}

[[nodiscard]] constexpr Trits constant(unsigned c) noexcept {
  return {c == 1 ? 1U : 0U, c == 2 ? 1U : 0U};
}

[[nodiscard]] Trits from_poly(const Poly3& p);
[[nodiscard]] Poly3 to_poly(Trits a);

/// Remainder of a modulo a monic modulus (arbitrary degrees below 64).
[[nodiscard]] Trits mod(Trits a, Trits modulus) noexcept;

/// Monic-normalized gcd.
[[nodiscard]] Trits gcd(Trits a, Trits b) noexcept;

}  // namespace trits

/// The field F_{3^n} = GF(3)[x]/(modulus). Immutable after construction and
/// shared by handle; FieldElement keeps a raw pointer, so the context must
/// outlive its elements.
class FieldCtx {
public:
  /// Validates a supplied modulus (DegreeMismatch, ReducibleModulus) or picks
  /// find_irreducible(n). Degrees outside [1, kMaxFieldDegree] raise BudgetExceeded.
  static std::shared_ptr<const FieldCtx> create(int n, std::optional<Poly3> modulus = std::nullopt);

  [[nodiscard]] int degree() const noexcept { return n_; }
  [[nodiscard]] const Poly3& modulus() const noexcept { return modulus_; }
  /// q = 3^n.
  [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
  /// q - 1.
  [[nodiscard]] std::uint64_t group_order() const noexcept { return size_ - 1; }
  [[nodiscard]] const Factorization& group_order_factorization() const noexcept { return factors_; }
  /// First element in index order with a^((q-1)/2) = -1.
  [[nodiscard]] Trits non_residue() const noexcept { return non_residue_; }

  // Raw arithmetic on canonical (degree < n) bit-sliced values.
  [[nodiscard]] Trits mul(Trits a, Trits b) const noexcept;
  /// Extended Euclid. Throws ZeroInverse for 0.
  [[nodiscard]] Trits inv(Trits a) const;
  [[nodiscard]] Trits pow(Trits a, std::uint64_t k) const noexcept;

  /// Point index of a finite element: sum of c_i 3^i.
  [[nodiscard]] std::uint64_t encode(Trits a) const noexcept;
  [[nodiscard]] Trits decode(std::uint64_t index) const noexcept;

  [[nodiscard]] bool contains(Trits a) const noexcept {
    return trits::degree(a) < n_ && (a.one & a.two) == 0;
  }

private:
  FieldCtx(int n, Poly3 modulus);

  int n_;
  Poly3 modulus_;
  Trits modulus_bits_;
  std::uint64_t size_;
  Factorization factors_;
  Trits non_residue_;
};

/// An element of F_{3^n} tied to its context.
class FieldElement {
public:
  /// Throws InvariantViolation if the value is not a canonical element of ctx.
  FieldElement(const FieldCtx& ctx, Trits value);

  static FieldElement zero(const FieldCtx& ctx) { return {ctx, Trits{}}; }
  static FieldElement one(const FieldCtx& ctx) { return {ctx, trits::constant(1)}; }
  /// Integer constant reduced mod 3.
  static FieldElement from_int(const FieldCtx& ctx, std::int64_t v);
  /// Throws DegreeMismatch if degree(p) >= n.
  static FieldElement from_poly(const FieldCtx& ctx, const Poly3& p);
  static FieldElement from_index(const FieldCtx& ctx, std::uint64_t index);

  [[nodiscard]] const FieldCtx& ctx() const noexcept { return *ctx_; }
  [[nodiscard]] Trits value() const noexcept { return value_; }
  [[nodiscard]] Poly3 to_poly() const { return trits::to_poly(value_); }
  [[nodiscard]] std::uint64_t index() const noexcept { return ctx_->encode(value_); }
  [[nodiscard]] bool is_zero() const noexcept { return trits::is_zero(value_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
    return a.ctx_ == b.ctx_ && a.value_ == b.value_;
  }

  FieldElement operator-() const { return {*ctx_, trits::neg(value_)}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

private:
  const FieldCtx* ctx_;
  Trits value_;
};

/// True iff p is monic-irreducible over GF(3) of positive degree
/// (x^(3^n) = x mod p and gcd(x^(3^(n/r)) - x, p) = 1 for each prime r | n).
[[nodiscard]] bool is_irreducible(const Poly3& p);

/// First monic irreducible of degree n, scanning the non-leading coefficients
/// by their base-3 encoding in ascending order.
[[nodiscard]] Poly3 find_irreducible(int n);

/// CtxMismatch if a and b live in different fields.
[[nodiscard]] FieldElement mul(const FieldElement& a, const FieldElement& b);
[[nodiscard]] FieldElement inv(const FieldElement& a);
/// a^k; negative k goes through inv. 0^0 = 1.
[[nodiscard]] FieldElement pow(const FieldElement& a, std::int64_t k);
/// Multiplicative order via prime stripping of q - 1. ZeroOrder for 0.
[[nodiscard]] std::uint64_t mult_order(const FieldElement& a);
/// v2(mult_order(a)) without the full order: the least j with a^(t 2^j) = 1,
/// where t is the odd part of q - 1. ZeroOrder for 0.
[[nodiscard]] int order_two_adic_valuation(const FieldElement& a);
/// First element in index order with order q - 1.
[[nodiscard]] FieldElement find_generator(const FieldCtx& ctx);

/// Default size limit for table-based logarithms: 3^12 = 531441 elements.
inline constexpr int kDefaultLogTableDegree = 12;

/// Least i >= 0 with g^i = a, by walking powers of g. ZeroLog for a = 0,
/// CtxTooLarge when the field degree exceeds max_degree.
[[nodiscard]] std::uint64_t discrete_log(const FieldElement& g, const FieldElement& a,
                                         int max_degree = kDefaultLogTableDegree);

/// Logarithm/antilogarithm tables for a generator of a small field.
class DiscreteLogTable {
public:
  DiscreteLogTable(const FieldElement& generator, int max_degree = kDefaultLogTableDegree);

  [[nodiscard]] const FieldElement& generator() const noexcept { return generator_; }
  /// Exponent of a; ZeroLog for 0.
  [[nodiscard]] std::uint64_t log(const FieldElement& a) const;
  /// log of the element with the given point index (index < q, nonzero).
  [[nodiscard]] std::uint64_t log_of_index(std::uint64_t index) const noexcept { return log_[index]; }
  [[nodiscard]] FieldElement exp(std::uint64_t k) const;

private:
  FieldElement generator_;
  std::vector<std::uint32_t> log_;  // by point index
  std::vector<std::uint32_t> exp_;  // point index of g^k
};

}  // namespace theta3
