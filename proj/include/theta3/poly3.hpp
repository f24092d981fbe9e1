#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace theta3 {

/// Polynomial over GF(3), little-endian coefficients in {0,1,2}.
/// Always canonical: the last stored coefficient is nonzero, and the zero
/// polynomial has no coefficients.
class Poly3 {
public:
  Poly3() = default;

  /// Throws ParseError if any entry is outside {0,1,2}. Trailing zeros are trimmed.
  explicit Poly3(std::vector<std::uint8_t> coeffs);

  /// Parses "c0,c1,...,ck". Whitespace around entries is ignored.
  static Poly3 parse(std::string_view text);

  /// x^n + (non-leading coefficients given by the base-3 digits of code).
  static Poly3 monic_from_code(int degree, std::uint64_t code);

  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  [[nodiscard]] bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  [[nodiscard]] std::uint8_t coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<std::size_t>(i)] : 0;
  }
  [[nodiscard]] std::span<const std::uint8_t> coeffs() const noexcept { return coeffs_; }

  /// Comma-separated coefficients, zero-padded to at least min_width entries.
  [[nodiscard]] std::string to_string(int min_width = 1) const;

  friend auto operator<=>(const Poly3&, const Poly3&) = default;

private:
  std::vector<std::uint8_t> coeffs_;
};

}  // namespace theta3
