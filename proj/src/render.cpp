#include "theta3/render.hpp"

#include <charconv>
#include <sstream>

#include "theta3/error.hpp"

namespace theta3 {

using nlohmann::ordered_json;

namespace {

constexpr const char* kInfinityLabel = "∞";

template <typename Map>
ordered_json pairs_json(const Map& m) {
  ordered_json out = ordered_json::array();
  for (const auto& [k, v] : m) out.push_back({k, v});
  return out;
}

template <typename Map>
std::string census_text(const Map& m) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, v] : m) {
    out << (first ? "" : "  ") << k << ':' << v;
    first = false;
  }
  return out.str();
}

template <typename Seq>
std::string list_text(const Seq& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& v : s) {
    out << (first ? "" : " ") << v;
    first = false;
  }
  return first ? std::string("(none)") : out.str();
}

}  // namespace

PointLabeler::PointLabeler(const FieldCtx& ctx, LabelMode mode) : ctx_(&ctx), mode_(mode) {
  if (mode == LabelMode::Exponent) {
    if (ctx.degree() > kDefaultLogTableDegree) {
      throw Error(ErrorCode::LabelModeUnavailable,
                  "exponent labels need n <= " + std::to_string(kDefaultLogTableDegree));
    }
    logs_ = std::make_unique<DiscreteLogTable>(find_generator(ctx));
  }
}

std::string PointLabeler::node_label(std::uint64_t index) const {
  if (index == ctx_->size()) return kInfinityLabel;
  if (mode_ == LabelMode::Exponent) {
    if (index == 0) return "'0'";
    return std::to_string(logs_->log_of_index(index));
  }
  return trits::to_poly(ctx_->decode(index)).to_string(ctx_->degree());
}

std::string PointLabeler::literal(const ProjPoint& p) const {
  if (p.is_infinity()) return "inf";
  const FieldElement v = p.value();
  if (v.is_zero()) return "0";
  if (mode_ == LabelMode::Exponent) return "a^" + std::to_string(logs_->log(v));
  return v.to_poly().to_string(ctx_->degree());
}

ProjPoint parse_point(const FieldCtx& ctx, std::string_view text, const PointLabeler* labeler) {
  if (text == "inf" || text == kInfinityLabel) return ProjPoint::infinity(ctx);
  if (text.starts_with("a^")) {
    if (!labeler || !labeler->logs()) {
      throw Error(ErrorCode::LabelModeUnavailable, "'" + std::string(text) + "' needs exponent labels");
    }
    auto digits = text.substr(2);
    std::int64_t k = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size()) {
      throw Error(ErrorCode::ParseError, "bad exponent literal '" + std::string(text) + "'");
    }
    return ProjPoint::finite(pow(labeler->logs()->generator(), k));
  }
  const Poly3 poly = Poly3::parse(text);
  if (poly.degree() >= ctx.degree()) {
    throw Error(ErrorCode::ParseError, "element '" + std::string(text) + "' has degree >= n");
  }
  return ProjPoint::finite(FieldElement::from_poly(ctx, poly));
}

std::string render_dot(std::span<const PointIndex> table, const PointLabeler& labeler) {
  std::ostringstream out;
  out << "digraph theta {\n";
  for (std::size_t i = 0; i < table.size(); ++i) out << "  \"" << labeler.node_label(i) << "\";\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << "  \"" << labeler.node_label(i) << "\" -> \"" << labeler.node_label(table[i]) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

ordered_json prediction_json(const GraphPrediction& p, std::span<const DivisorRow> rows) {
  ordered_json table = ordered_json::array();
  for (const auto& row : rows) table.push_back({row.d, row.phi, row.order_of_minus_two});
  return {
      {"n", p.n},
      {"cycle_census", pairs_json(p.cycle_census)},
      {"component_count", p.component_count},
      {"tree_depth", p.tree_depth},
      {"level_populations", p.level_populations},
      {"periodic_point_count", p.periodic_point_count},
      {"special_cycles", pairs_json(p.special_cycles)},
      {"divisor_table", table},
  };
}

ordered_json report_json(const GraphReport& r, std::span<const Claim> claims) {
  ordered_json claim_list = ordered_json::array();
  for (const auto& c : claims) {
    claim_list.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  }
  return {
      {"n", r.n},
      {"modulus", r.modulus.to_string()},
      {"cycle_census", pairs_json(r.cycle_census)},
      {"component_count", r.component_count},
      {"tree_depth", r.tree_depth},
      {"level_populations", r.level_populations},
      {"parity_report",
       {{"lengths", pairs_json(r.parity.lengths)},
        {"odd", r.parity.odd_count},
        {"even", r.parity.even_count},
        {"even_lengths", r.parity.even_lengths}}},
      {"claims", claim_list},
  };
}

std::string prediction_text(const GraphPrediction& p, std::span<const DivisorRow> rows) {
  std::ostringstream out;
  out << "n = " << p.n << ", 3^n - 1 = " << pow3(p.n) - 1 << "\n";
  out << "odd divisors d > 1 of 3^n - 1:";
  if (rows.empty()) {
    out << " none\n";
  } else {
    char header[96];
    std::snprintf(header, sizeof header, "\n  %15s %19s %10s\n", "d", "phi(d)", "ord_d(-2)");
    out << header;
    for (const auto& row : rows) {
      char line[96];
      std::snprintf(line, sizeof line, "  %15llu %19llu %10llu\n", static_cast<unsigned long long>(row.d),
                    static_cast<unsigned long long>(row.phi),
                    static_cast<unsigned long long>(row.order_of_minus_two));
      out << line;
    }
  }
  out << "cycles (length:count): " << census_text(p.cycle_census) << "\n";
  out << "components: " << p.component_count << "\n";
  out << "periodic points: " << p.periodic_point_count << "\n";
  out << "tree depth: " << p.tree_depth << "\n";
  out << "level populations: " << list_text(p.level_populations) << "\n";
  return out.str();
}

std::string report_text(const GraphReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << ", modulus " << r.modulus.to_string() << ", points " << r.point_count << "\n";
  out << "cycles (length:count): " << census_text(r.cycle_census) << "\n";
  out << "components: " << r.component_count << "\n";
  out << "tree depth: " << r.tree_depth << (r.trees_uniform ? "" : " (trees differ)") << "\n";
  out << "level populations: " << list_text(r.level_populations) << "\n";
  out << "non-special cycle parity: " << r.parity.odd_count << " odd, " << r.parity.even_count << " even";
  if (!r.parity.even_lengths.empty()) out << " (even lengths: " << list_text(r.parity.even_lengths) << ")";
  out << "\n";
  return out.str();
}

std::string verification_text(const VerificationOutcome& v) {
  std::ostringstream out;
  out << report_text(v.report);
  for (const auto& c : v.claims) {
    const char* tag = c.status == ClaimStatus::Pass ? "PASS" : (c.status == ClaimStatus::Fail ? "FAIL" : "INFO");
    out << tag << "  " << c.name << ": " << c.detail << "\n";
  }
  out << (v.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace theta3
