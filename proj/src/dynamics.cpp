#include "theta3/dynamics.hpp"

#include <string>

#include "theta3/error.hpp"

namespace theta3 {

ProjPoint ProjPoint::from_index(const FieldCtx& ctx, std::uint64_t index) {
  if (index == ctx.size()) return infinity(ctx);
  return finite(FieldElement::from_index(ctx, index));
}

FieldElement ProjPoint::value() const {
  if (infinity_) throw Error(ErrorCode::InvariantViolation, "infinity has no field value");
  return {*ctx_, value_};
}

ProjPoint theta(const ProjPoint& x) {
  if (x.is_infinity()) return x;
  const FieldElement v = x.value();
  if (v.is_zero()) return ProjPoint::infinity(x.ctx());
  return ProjPoint::finite(v + inv(v));
}

ProjPoint s_map(const ProjPoint& x) {
  if (x.is_infinity()) return ProjPoint::finite(FieldElement::zero(x.ctx()));
  const FieldElement v = x.value();
  if (v.is_zero()) return ProjPoint::infinity(x.ctx());
  const FieldElement w = inv(v);
  return ProjPoint::finite(w * w);
}

ProjPoint psi(const ProjPoint& x) {
  const FieldCtx& ctx = x.ctx();
  const FieldElement one = FieldElement::one(ctx);
  if (x.is_infinity()) return ProjPoint::finite(one);
  const FieldElement v = x.value();
  if (v == one) return ProjPoint::infinity(ctx);
  return ProjPoint::finite((v + one) * inv(v - one));
}

std::uint64_t theta_index(const FieldCtx& ctx, std::uint64_t index) {
  if (index == 0 || index >= ctx.size()) return ctx.size();
  const Trits a = ctx.decode(index);
  return ctx.encode(trits::add(a, ctx.inv(a)));
}

OrbitRecord orbit(const ProjPoint& x, bool record_trajectory) {
  // Brent: find the cycle length by doubling the tortoise's search window.
  std::uint64_t power = 1, lambda = 1;
  ProjPoint tortoise = x;
  ProjPoint hare = theta(x);
  while (!(tortoise == hare)) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = theta(hare);
    ++lambda;
  }
  // Tail: walk two pointers lambda apart until they meet.
  std::uint64_t mu = 0;
  tortoise = x;
  hare = x;
  for (std::uint64_t i = 0; i < lambda; ++i) hare = theta(hare);
  while (!(tortoise == hare)) {
    tortoise = theta(tortoise);
    hare = theta(hare);
    ++mu;
  }
  OrbitRecord record{x, mu, lambda, std::nullopt};
  if (record_trajectory) {
    std::vector<ProjPoint> path;
    path.reserve(mu + lambda);
    ProjPoint p = x;
    for (std::uint64_t i = 0; i < mu + lambda; ++i) {
      path.push_back(p);
      p = theta(p);
    }
    record.trajectory = std::move(path);
  }
  return record;
}

namespace {

std::pair<FieldElement, FieldElement> ordered_roots(const FieldElement& r) {
  FieldElement s = -r;
  if (s.index() < r.index()) return {s, r};
  return {r, s};
}

}  // namespace

std::optional<std::pair<FieldElement, FieldElement>> sqrt_in_field(const FieldElement& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "sqrt_in_field excludes 0");
  const FieldCtx& ctx = a.ctx();
  const Trits one = trits::constant(1);
  const std::uint64_t q1 = ctx.group_order();

  // q - 1 = 2^s * t with t odd; x = a^((t+1)/2) and b = a^t = x^2 / a.
  const int s = two_adic_valuation(q1);
  const std::uint64_t t = q1 >> s;
  Trits x = ctx.pow(a.value(), (t + 1) / 2);
  Trits b = ctx.mul(ctx.mul(x, x), ctx.inv(a.value()));
  // Euler's criterion: a is a square iff b^(2^(s-1)) = 1.
  Trits euler = b;
  for (int i = 1; i < s; ++i) euler = ctx.mul(euler, euler);
  if (euler != one) return std::nullopt;

  int m = s;
  Trits c = ctx.pow(ctx.non_residue(), t);
  while (b != one) {
    int i = 0;
    for (Trits b2 = b; b2 != one; b2 = ctx.mul(b2, b2)) ++i;
    Trits w = c;
    for (int j = 0; j < m - i - 1; ++j) w = ctx.mul(w, w);
    m = i;
    c = ctx.mul(w, w);
    b = ctx.mul(b, c);
    x = ctx.mul(x, w);
  }
  return ordered_roots(FieldElement(ctx, x));
}

std::optional<std::pair<FieldElement, FieldElement>> sqrt_in_field(const FieldElement& a,
                                                                   const DiscreteLogTable& logs) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroInput, "sqrt_in_field excludes 0");
  const std::uint64_t k = logs.log(a);
  if (k % 2 != 0) return std::nullopt;
  return ordered_roots(logs.exp(k / 2));
}

std::vector<ProjPoint> preimages(const ProjPoint& gamma) {
  const FieldCtx& ctx = gamma.ctx();
  const FieldElement one = FieldElement::one(ctx);
  if (gamma.is_infinity()) {
    return {ProjPoint::finite(FieldElement::zero(ctx)), ProjPoint::infinity(ctx)};
  }
  const FieldElement g = gamma.value();
  // theta(x) = +-1 reduces to (x -+ 1)^2 = 0 in characteristic 3.
  if (g == one) return {ProjPoint::finite(-one)};
  if (g == -one) return {ProjPoint::finite(one)};

  // theta(x) = gamma  <=>  psi(x)^2 = psi(gamma)^-1, and psi(gamma) is a
  // nonzero element here because gamma is finite and not -1.
  const FieldElement target = inv(psi(gamma).value());
  auto roots = sqrt_in_field(target);
  if (!roots) return {};
  std::vector<ProjPoint> result{psi(ProjPoint::finite(roots->first)), psi(ProjPoint::finite(roots->second))};
  if (result[1].index() < result[0].index()) std::swap(result[0], result[1]);
  return result;
}

}  // namespace theta3
