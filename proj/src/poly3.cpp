#include "theta3/poly3.hpp"

#include <algorithm>
#include <charconv>

#include "theta3/error.hpp"

namespace theta3 {

Poly3::Poly3(std::vector<std::uint8_t> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto c : coeffs_) {
    if (c > 2) {
      throw Error(ErrorCode::ParseError, "coefficient " + std::to_string(c) + " is not in {0,1,2}");
    }
  }
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

Poly3 Poly3::parse(std::string_view text) {
  std::vector<std::uint8_t> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = text.find(',', pos);
    auto item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) item.remove_prefix(1);
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) item.remove_suffix(1);
    unsigned value = 0;
    auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || end != item.data() + item.size() || value > 2) {
      throw Error(ErrorCode::ParseError, "bad coefficient list '" + std::string(text) + "'");
    }
    out.push_back(static_cast<std::uint8_t>(value));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Poly3(std::move(out));
}

Poly3 Poly3::monic_from_code(int degree, std::uint64_t code) {
  if (degree < 0) throw Error(ErrorCode::DegreeMismatch, "negative degree");
  std::vector<std::uint8_t> c(static_cast<std::size_t>(degree) + 1, 0);
  for (int i = 0; i < degree; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(code % 3);
    code /= 3;
  }
  c.back() = 1;
  return Poly3(std::move(c));
}

std::string Poly3::to_string(int min_width) const {
  std::string s;
  int width = std::max(min_width, static_cast<int>(coeffs_.size()));
  for (int i = 0; i < width; ++i) {
    if (i) s += ',';
    s += static_cast<char>('0' + coeff(i));
  }
  return s;
}

}  // namespace theta3
