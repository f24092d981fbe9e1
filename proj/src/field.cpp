#include "theta3/field.hpp"

#include <string>
#include <utility>

#include "theta3/error.hpp"

namespace theta3 {

namespace trits {

Trits from_poly(const Poly3& p) {
  Trits t;
  auto c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 1) t.one |= std::uint64_t{1} << i;
    if (c[i] == 2) t.two |= std::uint64_t{1} << i;
  }
  return t;
}

Poly3 to_poly(Trits a) {
  std::vector<std::uint8_t> c(static_cast<std::size_t>(degree(a) + 1));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = static_cast<std::uint8_t>(coeff(a, static_cast<int>(i)));
  return Poly3(std::move(c));
}

namespace {

// Remainder for a divisor with any nonzero leading coefficient.
Trits rem(Trits a, Trits b) noexcept {
  const int db = degree(b);
  const unsigned lead_b = coeff(b, db);
  for (int da = degree(a); da >= db; da = degree(a)) {
    const unsigned c = (coeff(a, da) * lead_b) % 3;
    a = sub(a, scale(shl(b, da - db), c));
  }
  return a;
}

}  // namespace

Trits mod(Trits a, Trits modulus) noexcept { return rem(a, modulus); }

Trits gcd(Trits a, Trits b) noexcept {
  while (!is_zero(b)) {
    a = rem(a, b);
    std::swap(a, b);
  }
  return is_zero(a) ? a : scale(a, coeff(a, degree(a)));
}

}  // namespace trits

namespace {

// a * c for the scalar c selected by two all-ones/all-zeros masks.
constexpr Trits select_scale(Trits a, std::uint64_t is_one, std::uint64_t is_two) noexcept {
  return {(a.one & is_one) | (a.two & is_two), (a.two & is_one) | (a.one & is_two)};
}

// Product modulo a monic polynomial of degree n (need not be irreducible).
// Branch-free Horner over the coefficients of b, highest first.
Trits mulmod(Trits a, Trits b, Trits modulus, int n) noexcept {
  Trits acc;
  for (int i = trits::degree(b); i >= 0; --i) {
    acc = trits::shl(acc, 1);
    const std::uint64_t top_one = 0 - ((acc.one >> n) & 1U);
    const std::uint64_t top_two = 0 - ((acc.two >> n) & 1U);
    acc = trits::sub(acc, select_scale(modulus, top_one, top_two));
    const std::uint64_t b_one = 0 - ((b.one >> i) & 1U);
    const std::uint64_t b_two = 0 - ((b.two >> i) & 1U);
    acc = trits::add(acc, select_scale(a, b_one, b_two));
  }
  return acc;
}

Trits frobenius_power_of_x(Trits modulus, int n, int k) {
  Trits y = trits::mod(trits::shl(trits::constant(1), 1), modulus);
  for (int i = 0; i < k; ++i) y = mulmod(mulmod(y, y, modulus, n), y, modulus, n);
  return y;
}

}  // namespace

bool is_irreducible(const Poly3& p) {
  const int n = p.degree();
  if (n < 1 || !p.is_monic() || n >= 63) return false;
  const Trits m = trits::from_poly(p);
  const Trits x = trits::mod(trits::shl(trits::constant(1), 1), m);
  if (frobenius_power_of_x(m, n, n) != x) return false;
  for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(n)).prime_powers) {
    const Trits y = trits::sub(frobenius_power_of_x(m, n, n / static_cast<int>(r)), x);
    if (trits::degree(trits::gcd(y, m)) != 0) return false;
  }
  return true;
}

Poly3 find_irreducible(int n) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw Error(ErrorCode::BudgetExceeded, "degree " + std::to_string(n) + " outside [1, 40]");
  }
  for (std::uint64_t code = 0;; ++code) {
    Poly3 candidate = Poly3::monic_from_code(n, code);
    if (is_irreducible(candidate)) return candidate;
  }
}

FieldCtx::FieldCtx(int n, Poly3 modulus)
    : n_(n),
      modulus_(std::move(modulus)),
      modulus_bits_(trits::from_poly(modulus_)),
      size_(pow3(n)),
      factors_(factorize(size_ - 1)) {
  const Trits minus_one = trits::constant(2);
  const std::uint64_t half = (size_ - 1) / 2;
  for (std::uint64_t i = 1; i < size_; ++i) {
    const Trits a = decode(i);
    if (pow(a, half) == minus_one) {
      non_residue_ = a;
      break;
    }
  }
}

std::shared_ptr<const FieldCtx> FieldCtx::create(int n, std::optional<Poly3> modulus) {
  if (n < 1 || n > kMaxFieldDegree) {
    throw Error(ErrorCode::BudgetExceeded, "field degree " + std::to_string(n) + " outside [1, 40]");
  }
  if (!modulus) {
    modulus = find_irreducible(n);
  } else {
    if (modulus->degree() != n || !modulus->is_monic()) {
      throw Error(ErrorCode::DegreeMismatch,
                  "modulus " + modulus->to_string() + " is not monic of degree " + std::to_string(n));
    }
    if (!is_irreducible(*modulus)) {
      throw Error(ErrorCode::ReducibleModulus, "modulus " + modulus->to_string() + " is reducible over GF(3)");
    }
  }
  return std::shared_ptr<const FieldCtx>(new FieldCtx(n, std::move(*modulus)));
}

Trits FieldCtx::mul(Trits a, Trits b) const noexcept { return mulmod(a, b, modulus_bits_, n_); }

Trits FieldCtx::inv(Trits a) const {
  if (trits::is_zero(a)) {
    throw Error(ErrorCode::ZeroInverse, "0 has no inverse");
  }
  // Invariants: g1 * a = u and g2 * a = v (mod modulus).
  Trits u = a, v = modulus_bits_;
  Trits g1 = trits::constant(1), g2{};
  while (trits::degree(u) != 0) {
    int j = trits::degree(u) - trits::degree(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    const unsigned c = (trits::coeff(u, trits::degree(u)) * trits::coeff(v, trits::degree(v))) % 3;
    u = trits::sub(u, trits::scale(trits::shl(v, j), c));
    g1 = trits::sub(g1, trits::scale(trits::shl(g2, j), c));
  }
  if (trits::degree(g1) >= n_) g1 = trits::mod(g1, modulus_bits_);
  return trits::scale(g1, trits::coeff(u, 0));
}

Trits FieldCtx::pow(Trits a, std::uint64_t k) const noexcept {
  Trits result = trits::constant(1);
  while (k) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

std::uint64_t FieldCtx::encode(Trits a) const noexcept {
  std::uint64_t index = 0;
  for (int i = n_ - 1; i >= 0; --i) index = index * 3 + trits::coeff(a, i);
  return index;
}

Trits FieldCtx::decode(std::uint64_t index) const noexcept {
  Trits t;
  for (int i = 0; i < n_; ++i) {
    const auto c = index % 3;
    index /= 3;
    if (c == 1) t.one |= std::uint64_t{1} << i;
    if (c == 2) t.two |= std::uint64_t{1} << i;
  }
  return t;
}

FieldElement::FieldElement(const FieldCtx& ctx, Trits value) : ctx_(&ctx), value_(value) {
  if (!ctx.contains(value)) {
    throw Error(ErrorCode::InvariantViolation, "value is not a canonical element of F_3^" +
                                                   std::to_string(ctx.degree()));
  }
}

FieldElement FieldElement::from_int(const FieldCtx& ctx, std::int64_t v) {
  const auto r = static_cast<unsigned>(((v % 3) + 3) % 3);
  return {ctx, trits::constant(r)};
}

FieldElement FieldElement::from_poly(const FieldCtx& ctx, const Poly3& p) {
  if (p.degree() >= ctx.degree()) {
    throw Error(ErrorCode::DegreeMismatch, "element " + p.to_string() + " has degree >= " +
                                               std::to_string(ctx.degree()));
  }
  return {ctx, trits::from_poly(p)};
}

FieldElement FieldElement::from_index(const FieldCtx& ctx, std::uint64_t index) {
  if (index >= ctx.size()) {
    throw Error(ErrorCode::InvariantViolation, "index " + std::to_string(index) + " is not a field element");
  }
  return {ctx, ctx.decode(index)};
}

namespace {

void require_same_ctx(const FieldElement& a, const FieldElement& b) {
  if (&a.ctx() != &b.ctx()) {
    throw Error(ErrorCode::CtxMismatch, "operands belong to different fields");
  }
}

}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_ctx(a, b);
  return {a.ctx(), trits::add(a.value(), b.value())};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_ctx(a, b);
  return {a.ctx(), trits::sub(a.value(), b.value())};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_ctx(a, b);
  return {a.ctx(), a.ctx().mul(a.value(), b.value())};
}

FieldElement inv(const FieldElement& a) { return {a.ctx(), a.ctx().inv(a.value())}; }

FieldElement pow(const FieldElement& a, std::int64_t k) {
  const FieldCtx& ctx = a.ctx();
  if (k == 0) return FieldElement::one(ctx);
  if (a.is_zero()) {
    if (k < 0) throw Error(ErrorCode::ZeroInverse, "0 raised to a negative power");
    return a;
  }
  // Nonzero elements satisfy a^(q-1) = 1, so reduce the exponent first.
  const auto order = static_cast<std::int64_t>(ctx.group_order());
  const std::int64_t r = ((k % order) + order) % order;
  return {ctx, ctx.pow(a.value(), static_cast<std::uint64_t>(r))};
}

std::uint64_t mult_order(const FieldElement& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::ZeroOrder, "0 has no multiplicative order");
  }
  const FieldCtx& ctx = a.ctx();
  const Trits one = trits::constant(1);
  return order_by_prime_stripping(ctx.group_order(), ctx.group_order_factorization(),
                                  [&](std::uint64_t k) { return ctx.pow(a.value(), k) == one; });
}

int order_two_adic_valuation(const FieldElement& a) {
  if (a.is_zero()) {
    throw Error(ErrorCode::ZeroOrder, "0 has no multiplicative order");
  }
  const FieldCtx& ctx = a.ctx();
  const Trits one = trits::constant(1);
  const std::uint64_t odd_part = ctx.group_order() >> std::countr_zero(ctx.group_order());
  int j = 0;
  for (Trits b = ctx.pow(a.value(), odd_part); b != one; b = ctx.mul(b, b)) ++j;
  return j;
}

FieldElement find_generator(const FieldCtx& ctx) {
  for (std::uint64_t i = 1;; ++i) {
    auto candidate = FieldElement::from_index(ctx, i);
    if (mult_order(candidate) == ctx.group_order()) return candidate;
  }
}

namespace {

void check_log_bound(const FieldCtx& ctx, int max_degree) {
  if (ctx.degree() > max_degree) {
    throw Error(ErrorCode::CtxTooLarge, "discrete logarithms limited to degree <= " + std::to_string(max_degree));
  }
}

}  // namespace

std::uint64_t discrete_log(const FieldElement& g, const FieldElement& a, int max_degree) {
  require_same_ctx(g, a);
  if (a.is_zero()) throw Error(ErrorCode::ZeroLog, "0 has no logarithm");
  const FieldCtx& ctx = g.ctx();
  check_log_bound(ctx, max_degree);
  Trits power = trits::constant(1);
  for (std::uint64_t i = 0; i < ctx.group_order(); ++i) {
    if (power == a.value()) return i;
    power = ctx.mul(power, g.value());
  }
  throw Error(ErrorCode::ZeroLog, "element is not a power of the given base");
}

DiscreteLogTable::DiscreteLogTable(const FieldElement& generator, int max_degree) : generator_(generator) {
  const FieldCtx& ctx = generator.ctx();
  check_log_bound(ctx, max_degree);
  if (mult_order(generator) != ctx.group_order()) {
    throw Error(ErrorCode::InvariantViolation, "log table base is not a generator");
  }
  log_.assign(ctx.size(), 0);
  exp_.resize(ctx.group_order());
  Trits power = trits::constant(1);
  for (std::uint64_t k = 0; k < ctx.group_order(); ++k) {
    const auto index = ctx.encode(power);
    exp_[k] = static_cast<std::uint32_t>(index);
    log_[index] = static_cast<std::uint32_t>(k);
    power = ctx.mul(power, generator.value());
  }
}

std::uint64_t DiscreteLogTable::log(const FieldElement& a) const {
  require_same_ctx(generator_, a);
  if (a.is_zero()) throw Error(ErrorCode::ZeroLog, "0 has no logarithm");
  return log_[a.index()];
}

FieldElement DiscreteLogTable::exp(std::uint64_t k) const {
  return FieldElement::from_index(generator_.ctx(), exp_[k % exp_.size()]);
}

}  // namespace theta3
