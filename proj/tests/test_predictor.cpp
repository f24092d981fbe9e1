#include <gtest/gtest.h>

#include "theta3/enumerator.hpp"
#include "theta3/error.hpp"
#include "theta3/predictor.hpp"

namespace theta3 {
namespace {

using Census = std::map<std::uint64_t, std::uint64_t>;

TEST(Predict, DegreeThree) {
  const auto p = predict(3);
  EXPECT_EQ(p.cycle_census, (Census{{1, 1}, {2, 1}, {12, 1}}));
  EXPECT_EQ(p.component_count, 3u);
  EXPECT_EQ(p.tree_depth, 1);
  EXPECT_EQ(p.level_populations, (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(p.special_cycles, (Census{{1, 1}, {2, 1}}));
  EXPECT_EQ(p.periodic_point_count, 15u);
}

TEST(Predict, DegreeTwo) {
  const auto p = predict(2);
  EXPECT_EQ(p.cycle_census, (Census{{1, 1}, {2, 1}}));
  EXPECT_EQ(p.component_count, 2u);
  EXPECT_EQ(p.tree_depth, 3);
  EXPECT_EQ(p.level_populations, (std::vector<std::uint64_t>{1, 2, 4}));
}

TEST(Predict, DegreeFive) {
  // Frozen from brute-force enumeration of all 244 points; ord_11(-2) = 5, ord_121(-2) = 55.
  const auto p = predict(5);
  EXPECT_EQ(p.cycle_census, (Census{{1, 1}, {2, 1}, {5, 2}, {55, 2}}));
  EXPECT_EQ(p.component_count, 6u);
  EXPECT_EQ(p.tree_depth, 1);
}

TEST(Predict, DegreeOne) {
  const auto p = predict(1);
  EXPECT_EQ(p.component_count, 2u);
  EXPECT_EQ(p.tree_depth, 1);
}

TEST(Predict, Budget) {
  EXPECT_THROW((void)predict(0), Error);
  try {
    (void)predict(41);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_NO_THROW((void)predict(40));
}

TEST(DivisorTable, Examples) {
  EXPECT_EQ(divisor_table(3), (std::vector<DivisorRow>{{13, 12, 12}}));
  EXPECT_TRUE(divisor_table(2).empty());
  EXPECT_EQ(divisor_table(4), (std::vector<DivisorRow>{{5, 4, 4}}));
}

TEST(Predict, InvariantsUpToForty) {
  for (int n = 1; n <= 40; ++n) {
    const auto p = predict(n);
    std::uint64_t components = 0, periodic = 0;
    for (const auto& [len, count] : p.cycle_census) {
      EXPECT_GT(count, 0u);
      components += count;
      periodic += len * count;
    }
    EXPECT_EQ(components, p.component_count) << n;
    EXPECT_EQ(periodic, p.periodic_point_count) << n;
    EXPECT_EQ(p.cycle_census.at(1), 1u) << n;
    EXPECT_EQ(p.cycle_census.at(2), 1u) << n;
    for (const auto& row : divisor_table(n)) EXPECT_GT(row.order_of_minus_two, 2u) << n;
    EXPECT_TRUE(conserves_points(p)) << n;
    EXPECT_EQ(static_cast<std::size_t>(p.tree_depth), p.level_populations.size());
    for (std::size_t k = 0; k < p.level_populations.size(); ++k) {
      EXPECT_EQ(p.level_populations[k], std::uint64_t{1} << k);
    }
  }
}

TEST(Predict, MatchesEnumerationUpToEight) {
  for (int n = 1; n <= 8; ++n) {
    auto ctx = FieldCtx::create(n);
    const auto table = build_successor_table(*ctx);
    const auto report = analyze(*ctx, table);
    const auto p = predict(n);
    EXPECT_EQ(p.cycle_census, report.cycle_census) << n;
    EXPECT_EQ(p.component_count, report.component_count) << n;
    EXPECT_TRUE(report.trees_uniform) << n;
    EXPECT_EQ(p.tree_depth, report.tree_depth) << n;
    EXPECT_EQ(p.level_populations, report.level_populations) << n;
  }
}

}  // namespace
}  // namespace theta3
