#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "theta3/field.hpp"

namespace theta3 {

/// A point of the projective line P^1(F_{3^n}): a field element or infinity.
/// Both alternatives remember which line they live on.
class ProjPoint {
public:
  static ProjPoint infinity(const FieldCtx& ctx) noexcept { return ProjPoint(ctx, true, Trits{}); }
  static ProjPoint finite(const FieldElement& value) noexcept { return ProjPoint(value.ctx(), false, value.value()); }
  /// Point index: finite elements by coefficient encoding, infinity at 3^n.
  static ProjPoint from_index(const FieldCtx& ctx, std::uint64_t index);

  [[nodiscard]] const FieldCtx& ctx() const noexcept { return *ctx_; }
  [[nodiscard]] bool is_infinity() const noexcept { return infinity_; }
  /// InvariantViolation when called on infinity.
  [[nodiscard]] FieldElement value() const;
  [[nodiscard]] std::uint64_t index() const noexcept { return infinity_ ? ctx_->size() : ctx_->encode(value_); }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) noexcept {
    return a.ctx_ == b.ctx_ && a.infinity_ == b.infinity_ && a.value_ == b.value_;
  }

private:
  ProjPoint(const FieldCtx& ctx, bool infinity, Trits value) noexcept
      : ctx_(&ctx), infinity_(infinity), value_(value) {}

  const FieldCtx* ctx_;
  bool infinity_;
  Trits value_;
};

/// x + 1/x, with 0 and infinity both sent to infinity.
[[nodiscard]] ProjPoint theta(const ProjPoint& x);
/// x^-2 on nonzero elements; swaps 0 and infinity.
[[nodiscard]] ProjPoint s_map(const ProjPoint& x);
/// (x + 1)/(x - 1); infinity -> 1 and 1 -> infinity. An involution.
[[nodiscard]] ProjPoint psi(const ProjPoint& x);

/// theta on point indices; the kernel used to materialize the whole graph.
[[nodiscard]] std::uint64_t theta_index(const FieldCtx& ctx, std::uint64_t index);

struct OrbitRecord {
  ProjPoint start;
  std::uint64_t tail_length = 0;
  std::uint64_t cycle_length = 0;
  /// start, theta(start), ... covering the tail and one full turn of the cycle.
  std::optional<std::vector<ProjPoint>> trajectory;
};

/// Tail and minimal cycle length of the theta-orbit of x (Brent's algorithm).
[[nodiscard]] OrbitRecord orbit(const ProjPoint& x, bool record_trajectory = false);

/// Square roots {r, -r} of a nonzero element, ordered by point index, or
/// nothing for a non-residue. Tonelli-Shanks over F_{3^n}. ZeroInput for 0.
[[nodiscard]] std::optional<std::pair<FieldElement, FieldElement>> sqrt_in_field(const FieldElement& a);

/// Same contract, computed from a logarithm table: a = g^k is a square iff k is even.
[[nodiscard]] std::optional<std::pair<FieldElement, FieldElement>> sqrt_in_field(const FieldElement& a,
                                                                                const DiscreteLogTable& logs);

/// Every x with theta(x) = gamma, ordered by point index. Solved algebraically
/// through the conjugation theta = psi . s . psi; never scans the line.
[[nodiscard]] std::vector<ProjPoint> preimages(const ProjPoint& gamma);

}  // namespace theta3
