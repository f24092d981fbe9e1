#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace theta3 {

/// Largest degree accepted by predict: 3^40 - 1 is the largest group order in 64 bits.
inline constexpr int kMaxPredictDegree = 40;

struct DivisorRow {
  std::uint64_t d;
  std::uint64_t phi;
  std::uint64_t order_of_minus_two;

  friend bool operator==(const DivisorRow&, const DivisorRow&) = default;
};

/// The census of the theta-graph over P^1(F_{3^n}), from integer arithmetic only.
struct GraphPrediction {
  int n = 0;
  /// cycle length -> number of cycles, including the fixed point at infinity
  /// and the 2-cycle {1, -1}.
  std::map<std::uint64_t, std::uint64_t> cycle_census;
  /// The same two special cycles, kept apart: length -> count.
  std::map<std::uint64_t, std::uint64_t> special_cycles;
  std::uint64_t component_count = 0;
  /// e = v2(3^n - 1).
  int tree_depth = 0;
  /// Entry k-1 is the number of vertices at level k of every tree, 2^(k-1).
  std::vector<std::uint64_t> level_populations;
  std::uint64_t periodic_point_count = 0;
};

/// One row per odd divisor d > 1 of 3^n - 1, ascending: (d, phi(d), ord_d(-2)).
[[nodiscard]] std::vector<DivisorRow> divisor_table(int n);

/// BudgetExceeded for n outside [1, kMaxPredictDegree]. InvariantViolation if
/// some cycle count fails to come out as an exact integer.
[[nodiscard]] GraphPrediction predict(int n);

/// (periodic_point_count - 2) * 2^e + 2 == 3^n + 1, evaluated without overflow.
[[nodiscard]] bool conserves_points(const GraphPrediction& p);

}  // namespace theta3
