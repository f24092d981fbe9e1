#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "theta3/field.hpp"
#include "theta3/predictor.hpp"

namespace theta3 {

/// Point index on P^1(F_{3^n}): sum c_i 3^i for finite points, 3^n for infinity.
/// 32 bits cover every n <= kMaxEnumerationDegree.
using PointIndex = std::uint32_t;
using SuccessorTable = std::vector<PointIndex>;

inline constexpr int kMaxEnumerationDegree = 20;
/// Default cap on 3^n + 1; 3^16 + 1 is the largest line under it.
inline constexpr std::uint64_t kDefaultPointBudget = 50'000'000;
/// Per-node annotations are kept only up to this many points.
inline constexpr std::uint64_t kDefaultReportBound = 1'000'000;

/// table[i] = index of theta(point i). Index ranges are processed in parallel
/// (OpenMP). BudgetExceeded above kMaxEnumerationDegree or the point budget.
[[nodiscard]] SuccessorTable build_successor_table(const FieldCtx& ctx,
                                                   std::uint64_t point_budget = kDefaultPointBudget);

/// Single-threaded reference built through ProjPoint/theta rather than the raw
/// index kernel. Kept for tests and the benchmark.
[[nodiscard]] SuccessorTable build_successor_table_serial(const FieldCtx& ctx,
                                                          std::uint64_t point_budget = kDefaultPointBudget);

struct NodeInfo {
  std::uint32_t component = 0;
  /// Steps to reach the cycle; equals the level in the tree hanging off `root`.
  std::uint32_t tail_length = 0;
  /// The cyclic node where this node's orbit enters its cycle.
  PointIndex root = 0;
  /// Number of non-cyclic preimages.
  std::uint8_t tree_children = 0;
  bool cyclic = false;
};

struct TreeProfile {
  PointIndex root = 0;
  /// Entry k-1 counts the vertices at level k; size is the tree depth.
  std::vector<std::uint64_t> level_counts;
};

struct ParityReport {
  /// Cycle lengths outside the special cycles {infinity} and {1, -1}.
  std::map<std::uint64_t, std::uint64_t> lengths;
  std::uint64_t odd_count = 0;
  std::uint64_t even_count = 0;
  std::vector<std::uint64_t> even_lengths;
};

struct GraphReport {
  int n = 0;
  Poly3 modulus;
  std::uint64_t point_count = 0;
  std::map<std::uint64_t, std::uint64_t> cycle_census;
  std::uint64_t component_count = 0;
  /// Sum over components of cycle length plus tree sizes.
  std::uint64_t total_component_size = 0;

  /// Tree shape over roots outside {1, -1}. When every such root has the same
  /// profile, tree_depth/level_populations describe it; otherwise trees_uniform
  /// is false, tree_depth is the largest depth and level_populations is empty.
  bool trees_uniform = true;
  int tree_depth = 0;
  std::vector<std::uint64_t> level_populations;
  /// Level-count vector -> number of cyclic roots with that tree (all roots).
  std::map<std::vector<std::uint64_t>, std::uint64_t> tree_profile_histogram;

  ParityReport parity;

  /// Filled only when point_count <= the report bound.
  bool detailed = false;
  std::vector<NodeInfo> nodes;
  /// Each cycle in successor order, starting from its smallest index.
  std::vector<std::vector<PointIndex>> cycles;
  std::vector<TreeProfile> trees;
};

/// Colors every node by cycle membership, tail length and component, then
/// walks the reverse adjacency from each cyclic node to profile its tree.
[[nodiscard]] GraphReport analyze(const FieldCtx& ctx, std::span<const PointIndex> table,
                                  std::uint64_t report_bound = kDefaultReportBound);

/// Reverse adjacency in CSR form; the preimages of i are
/// sources[offsets[i] .. offsets[i+1]), ascending.
struct ReverseAdjacency {
  std::vector<std::uint32_t> offsets;
  std::vector<PointIndex> sources;

  [[nodiscard]] std::span<const PointIndex> of(std::size_t i) const {
    return std::span<const PointIndex>(sources).subspan(offsets[i], offsets[i + 1] - offsets[i]);
  }
};

[[nodiscard]] ReverseAdjacency reverse_adjacency(std::span<const PointIndex> table);

enum class ClaimStatus { Pass, Fail, Info };

struct Claim {
  std::string name;
  ClaimStatus status = ClaimStatus::Pass;
  std::string detail;
};

struct VerificationOutcome {
  GraphPrediction prediction;
  GraphReport report;
  std::vector<Claim> claims;

  /// Every claim other than the informational ones passed.
  [[nodiscard]] bool passed() const;
  [[nodiscard]] const Claim* find(std::string_view name) const;
};

struct VerifyOptions {
  std::uint64_t point_budget = kDefaultPointBudget;
  std::uint64_t report_bound = kDefaultReportBound;
};

/// Enumerates the whole graph and checks the predicted census and the
/// per-point structural claims against it. The enumeration is ground truth;
/// disagreements are reported as failed claims.
[[nodiscard]] VerificationOutcome verify(const FieldCtx& ctx, const VerifyOptions& options = {});
[[nodiscard]] VerificationOutcome verify(int n, std::optional<Poly3> modulus = std::nullopt,
                                         const VerifyOptions& options = {});

[[nodiscard]] std::string_view to_string(ClaimStatus status);

}  // namespace theta3
