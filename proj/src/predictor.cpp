#include "theta3/predictor.hpp"

#include <string>

#include "theta3/error.hpp"
#include "theta3/numtheory.hpp"

namespace theta3 {

namespace {

void check_degree(int n) {
  if (n < 1 || n > kMaxPredictDegree) {
    throw Error(ErrorCode::BudgetExceeded, "predict supports 1 <= n <= " + std::to_string(kMaxPredictDegree));
  }
}

// The factorization of a divisor d of m, read off m's factorization.
Factorization restrict_to(const Factorization& f, std::uint64_t d) {
  Factorization out;
  for (const auto& [p, e] : f.prime_powers) {
    int k = 0;
    while (d % p == 0) {
      d /= p;
      ++k;
    }
    if (k) out.prime_powers[p] = k;
  }
  return out;
}

}  // namespace

std::vector<DivisorRow> divisor_table(int n) {
  check_degree(n);
  const Factorization f = factorize(pow3(n) - 1);
  std::vector<DivisorRow> rows;
  for (std::uint64_t d : odd_divisors_gt1(f)) {
    rows.push_back({d, euler_phi(restrict_to(f, d)), ord_mod(-2, d)});
  }
  return rows;
}

GraphPrediction predict(int n) {
  check_degree(n);
  GraphPrediction p;
  p.n = n;
  p.special_cycles = {{1, 1}, {2, 1}};

  // Group phi(d) by l(d) = ord_d(-2); each group contributes sum/l cycles.
  std::map<std::uint64_t, std::uint64_t> phi_by_length;
  std::uint64_t periodic = 3;  // infinity, 1, -1
  for (const auto& row : divisor_table(n)) {
    phi_by_length[row.order_of_minus_two] += row.phi;
    periodic += row.phi;
  }
  p.cycle_census = p.special_cycles;
  for (const auto& [length, phi_sum] : phi_by_length) {
    if (phi_sum % length != 0) {
      throw Error(ErrorCode::InvariantViolation, "cycle count " + std::to_string(phi_sum) + "/" +
                                                     std::to_string(length) + " is not an integer for n=" +
                                                     std::to_string(n));
    }
    p.cycle_census[length] += phi_sum / length;
  }
  for (const auto& [length, count] : p.cycle_census) p.component_count += count;
  p.periodic_point_count = periodic;
  p.tree_depth = two_adic_valuation(pow3(n) - 1);
  for (int k = 1; k <= p.tree_depth; ++k) p.level_populations.push_back(std::uint64_t{1} << (k - 1));
  return p;
}

bool conserves_points(const GraphPrediction& p) {
  using u128 = unsigned __int128;
  const u128 lhs = (static_cast<u128>(p.periodic_point_count) - 2) * (u128{1} << p.tree_depth) + 2;
  return lhs == static_cast<u128>(pow3(p.n)) + 1;
}

}  // namespace theta3
