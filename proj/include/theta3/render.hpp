#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>

#include <json.hpp>

#include "theta3/dynamics.hpp"
#include "theta3/enumerator.hpp"
#include "theta3/predictor.hpp"

namespace theta3 {

enum class LabelMode { Exponent, Coefficients };

/// Names points of one line, either as generator exponents or as coefficient
/// strings. Exponent mode needs a discrete-log table and therefore a small field.
class PointLabeler {
public:
  /// LabelModeUnavailable when exponent mode is requested above the log-table bound.
  PointLabeler(const FieldCtx& ctx, LabelMode mode);

  [[nodiscard]] LabelMode mode() const noexcept { return mode_; }
  [[nodiscard]] const DiscreteLogTable* logs() const noexcept { return logs_.get(); }

  /// Node label for DOT output: exponent mode gives "k" for g^k, "'0'" for
  /// zero and "∞"; coefficient mode gives "c0,...,c_{n-1}" and "∞".
  [[nodiscard]] std::string node_label(std::uint64_t index) const;

  /// A literal accepted back by parse_point: "a^k", "0" or "c0,...", and "inf".
  [[nodiscard]] std::string literal(const ProjPoint& p) const;

private:
  const FieldCtx* ctx_;
  LabelMode mode_;
  std::unique_ptr<DiscreteLogTable> logs_;
};

/// "inf" (or "∞"), "a^K" for a power of the labeler's generator, or a
/// coefficient list. ParseError on malformed input; LabelModeUnavailable for
/// "a^K" without a log table.
[[nodiscard]] ProjPoint parse_point(const FieldCtx& ctx, std::string_view text, const PointLabeler* labeler);

/// `digraph theta { ... }` with every node and then every edge in point-index order.
[[nodiscard]] std::string render_dot(std::span<const PointIndex> table, const PointLabeler& labeler);

[[nodiscard]] nlohmann::ordered_json prediction_json(const GraphPrediction& p, std::span<const DivisorRow> rows);

/// Report document: n, modulus, cycle_census, component_count, tree_depth,
/// level_populations, parity_report, claims.
[[nodiscard]] nlohmann::ordered_json report_json(const GraphReport& r, std::span<const Claim> claims = {});

[[nodiscard]] std::string prediction_text(const GraphPrediction& p, std::span<const DivisorRow> rows);
[[nodiscard]] std::string report_text(const GraphReport& r);
[[nodiscard]] std::string verification_text(const VerificationOutcome& v);

}  // namespace theta3
