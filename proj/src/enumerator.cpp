#include "theta3/enumerator.hpp"

#include <algorithm>
#include <sstream>

#include "theta3/dynamics.hpp"
#include "theta3/error.hpp"

namespace theta3 {

namespace {

std::uint64_t checked_point_count(const FieldCtx& ctx, std::uint64_t point_budget) {
  if (ctx.degree() > kMaxEnumerationDegree) {
    throw Error(ErrorCode::BudgetExceeded, "enumeration supports n <= " + std::to_string(kMaxEnumerationDegree));
  }
  const std::uint64_t points = ctx.size() + 1;
  if (points > point_budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(points) + " points exceed the budget of " +
                                               std::to_string(point_budget));
  }
  return points;
}

struct SpecialPoints {
  PointIndex infinity;
  PointIndex one;
  PointIndex minus_one;

  explicit SpecialPoints(const FieldCtx& ctx)
      : infinity(static_cast<PointIndex>(ctx.size())),
        one(static_cast<PointIndex>(FieldElement::one(ctx).index())),
        minus_one(static_cast<PointIndex>((-FieldElement::one(ctx)).index())) {}

  [[nodiscard]] bool plus_minus_one(std::uint64_t i) const { return i == one || i == minus_one; }
};

GraphReport analyze_all(const FieldCtx& ctx, std::span<const PointIndex> table) {
  const std::size_t count = table.size();
  if (count != ctx.size() + 1) {
    throw Error(ErrorCode::InvariantViolation, "table size does not match 3^n + 1");
  }
  for (auto next : table) {
    if (next >= count) throw Error(ErrorCode::InvariantViolation, "successor index out of range");
  }
  const SpecialPoints special(ctx);

  GraphReport report;
  report.n = ctx.degree();
  report.modulus = ctx.modulus();
  report.point_count = count;
  report.nodes.resize(count);
  auto& nodes = report.nodes;

  // Pass 1: three-color walk. While a node sits on the current path its
  // tail_length slot holds its position on that path.
  enum : std::uint8_t { kUnvisited, kOnPath, kDone };
  std::vector<std::uint8_t> color(count, kUnvisited);
  std::vector<PointIndex> path;
  std::vector<std::uint64_t> component_size;
  for (std::size_t start = 0; start < count; ++start) {
    if (color[start] != kUnvisited) continue;
    path.clear();
    PointIndex x = static_cast<PointIndex>(start);
    while (color[x] == kUnvisited) {
      color[x] = kOnPath;
      nodes[x].tail_length = static_cast<std::uint32_t>(path.size());
      path.push_back(x);
      x = table[x];
    }
    if (color[x] == kOnPath) {
      const std::size_t pos = nodes[x].tail_length;
      const auto id = static_cast<std::uint32_t>(component_size.size());
      std::vector<PointIndex> cycle(path.begin() + static_cast<std::ptrdiff_t>(pos), path.end());
      for (auto c : cycle) {
        nodes[c] = NodeInfo{id, 0, c, 0, true};
        color[c] = kDone;
      }
      component_size.push_back(cycle.size());
      ++report.cycle_census[cycle.size()];
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      report.cycles.push_back(std::move(cycle));
      path.resize(pos);
    }
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      const NodeInfo& next = nodes[table[*it]];
      nodes[*it] = NodeInfo{next.component, next.tail_length + 1, next.root, 0, false};
      color[*it] = kDone;
      ++component_size[next.component];
    }
  }
  report.component_count = component_size.size();
  for (auto s : component_size) report.total_component_size += s;

  for (std::size_t i = 0; i < count; ++i) {
    if (!nodes[i].cyclic) ++nodes[table[i]].tree_children;
  }

  // Pass 2: profile the tree under every cyclic node via the reverse adjacency.
  const ReverseAdjacency reverse = reverse_adjacency(table);
  std::vector<PointIndex> frontier, next_frontier;
  std::optional<std::vector<std::uint64_t>> common;
  int max_depth = 0;
  for (std::size_t r = 0; r < count; ++r) {
    if (!nodes[r].cyclic) continue;
    TreeProfile profile{static_cast<PointIndex>(r), {}};
    frontier.assign(1, static_cast<PointIndex>(r));
    while (true) {
      next_frontier.clear();
      for (auto v : frontier) {
        for (auto u : reverse.of(v)) {
          if (!nodes[u].cyclic) next_frontier.push_back(u);
        }
      }
      if (next_frontier.empty()) break;
      profile.level_counts.push_back(next_frontier.size());
      std::swap(frontier, next_frontier);
    }
    ++report.tree_profile_histogram[profile.level_counts];
    if (!special.plus_minus_one(r)) {
      max_depth = std::max(max_depth, static_cast<int>(profile.level_counts.size()));
      if (!common) {
        common = profile.level_counts;
      } else if (*common != profile.level_counts) {
        report.trees_uniform = false;
      }
    }
    report.trees.push_back(std::move(profile));
  }
  report.tree_depth = max_depth;
  if (report.trees_uniform && common) report.level_populations = *common;

  for (const auto& cycle : report.cycles) {
    const bool is_special = (cycle.size() == 1 && cycle[0] == special.infinity) ||
                            (cycle.size() == 2 && special.plus_minus_one(cycle[0]) &&
                             special.plus_minus_one(cycle[1]));
    if (is_special) continue;
    ++report.parity.lengths[cycle.size()];
    if (cycle.size() % 2 == 0) {
      ++report.parity.even_count;
    } else {
      ++report.parity.odd_count;
    }
  }
  for (const auto& [length, n] : report.parity.lengths) {
    if (length % 2 == 0) report.parity.even_lengths.push_back(length);
  }
  report.detailed = true;
  return report;
}

void trim_details(GraphReport& report, std::uint64_t report_bound) {
  if (report.point_count <= report_bound) return;
  report.detailed = false;
  report.nodes = {};
  report.cycles = {};
  report.trees = {};
}

template <typename Map>
std::string render_map(const Map& m) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [k, v] : m) {
    out << (first ? "" : ", ") << k << ':' << v;
    first = false;
  }
  out << '}';
  return out.str();
}

template <typename Seq>
std::string render_list(const Seq& s) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& v : s) {
    out << (first ? "" : ", ") << v;
    first = false;
  }
  out << ']';
  return out.str();
}

Claim compare_claim(std::string name, bool ok, const std::string& predicted, const std::string& measured) {
  return {std::move(name), ok ? ClaimStatus::Pass : ClaimStatus::Fail,
          "predicted " + predicted + ", measured " + measured};
}

// Counts failures and keeps the first few examples for the claim detail.
class FailureLog {
public:
  void add(const std::string& what) {
    if (count_++ < kExamples) examples_ += (examples_.empty() ? "" : "; ") + what;
  }
  [[nodiscard]] Claim claim(std::string name, const std::string& scope) const {
    if (count_ == 0) return {std::move(name), ClaimStatus::Pass, scope};
    return {std::move(name), ClaimStatus::Fail,
            std::to_string(count_) + " violations (" + scope + "), e.g. " + examples_};
  }

private:
  static constexpr std::uint64_t kExamples = 3;
  std::uint64_t count_ = 0;
  std::string examples_;
};

}  // namespace

SuccessorTable build_successor_table(const FieldCtx& ctx, std::uint64_t point_budget) {
  const auto count = static_cast<std::int64_t>(checked_point_count(ctx, point_budget));
  SuccessorTable table(static_cast<std::size_t>(count));
  const std::uint64_t q = ctx.size();
  table[q] = static_cast<PointIndex>(q);
  table[0] = static_cast<PointIndex>(q);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 1; i < count - 1; ++i) {
    const Trits a = ctx.decode(static_cast<std::uint64_t>(i));
    table[static_cast<std::size_t>(i)] = static_cast<PointIndex>(ctx.encode(trits::add(a, ctx.inv(a))));
  }
  return table;
}

SuccessorTable build_successor_table_serial(const FieldCtx& ctx, std::uint64_t point_budget) {
  const std::uint64_t count = checked_point_count(ctx, point_budget);
  SuccessorTable table(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    table[i] = static_cast<PointIndex>(theta(ProjPoint::from_index(ctx, i)).index());
  }
  return table;
}

ReverseAdjacency reverse_adjacency(std::span<const PointIndex> table) {
  ReverseAdjacency adj;
  adj.offsets.assign(table.size() + 1, 0);
  for (auto next : table) ++adj.offsets[next + 1];
  for (std::size_t i = 0; i < table.size(); ++i) adj.offsets[i + 1] += adj.offsets[i];
  adj.sources.resize(table.size());
  std::vector<std::uint32_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (std::size_t i = 0; i < table.size(); ++i) adj.sources[fill[table[i]]++] = static_cast<PointIndex>(i);
  return adj;
}

GraphReport analyze(const FieldCtx& ctx, std::span<const PointIndex> table, std::uint64_t report_bound) {
  GraphReport report = analyze_all(ctx, table);
  trim_details(report, report_bound);
  return report;
}

bool VerificationOutcome::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status == ClaimStatus::Fail; });
}

const Claim* VerificationOutcome::find(std::string_view name) const {
  auto it = std::find_if(claims.begin(), claims.end(), [&](const Claim& c) { return c.name == name; });
  return it == claims.end() ? nullptr : &*it;
}

std::string_view to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Info: return "info";
  }
  return "unknown";
}

VerificationOutcome verify(int n, std::optional<Poly3> modulus, const VerifyOptions& options) {
  auto ctx = FieldCtx::create(n, std::move(modulus));
  return verify(*ctx, options);
}

VerificationOutcome verify(const FieldCtx& ctx, const VerifyOptions& options) {
  VerificationOutcome out;
  const SuccessorTable table = build_successor_table(ctx, options.point_budget);
  out.prediction = predict(ctx.degree());
  out.report = analyze_all(ctx, table);
  const GraphPrediction& p = out.prediction;
  const GraphReport& r = out.report;
  const SpecialPoints special(ctx);
  const int e = p.tree_depth;
  auto& claims = out.claims;

  claims.push_back(compare_claim("cycle_census", p.cycle_census == r.cycle_census, render_map(p.cycle_census),
                                 render_map(r.cycle_census)));
  claims.push_back(compare_claim("component_count", p.component_count == r.component_count,
                                 std::to_string(p.component_count), std::to_string(r.component_count)));
  claims.push_back(compare_claim("tree_depth", r.trees_uniform && p.tree_depth == r.tree_depth,
                                 std::to_string(p.tree_depth),
                                 std::to_string(r.tree_depth) + (r.trees_uniform ? "" : " (trees differ)")));
  claims.push_back(compare_claim("level_populations", r.trees_uniform && p.level_populations == r.level_populations,
                                 render_list(p.level_populations), render_list(r.level_populations)));
  claims.push_back(compare_claim("point_conservation", r.total_component_size == ctx.size() + 1,
                                 std::to_string(ctx.size() + 1), std::to_string(r.total_component_size)));

  {
    // The only cycles of length 1 and 2 are {infinity} and {1, -1}.
    FailureLog log;
    for (const auto& cycle : r.cycles) {
      if (cycle.size() == 1 && cycle[0] != special.infinity) log.add("fixed point " + std::to_string(cycle[0]));
      if (cycle.size() == 2 && !(special.plus_minus_one(cycle[0]) && special.plus_minus_one(cycle[1]))) {
        log.add("2-cycle at " + std::to_string(cycle[0]));
      }
    }
    if (r.nodes[special.infinity].cyclic == false || table[special.infinity] != special.infinity) {
      log.add("infinity is not a fixed point");
    }
    if (table[special.one] != special.minus_one || table[special.minus_one] != special.one) {
      log.add("1 and -1 do not form a 2-cycle");
    }
    claims.push_back(log.claim("special_cycles", "only {inf} and {1,-1} have length <= 2"));
  }

  const Trits unit = trits::constant(1);
  // psi(x) = (x + 1)/(x - 1) for finite x != 1.
  auto psi_value = [&](std::uint64_t index) {
    const Trits x = ctx.decode(index);
    return FieldElement(ctx, ctx.mul(trits::add(x, unit), ctx.inv(trits::sub(x, unit))));
  };

  {
    // Period of a cyclic point outside {1,-1,inf} is ord_d(-2), d = ord(psi(x)) odd.
    FailureLog log;
    for (const auto& cycle : r.cycles) {
      const PointIndex x = cycle[0];
      if (x == special.infinity || special.plus_minus_one(x)) continue;
      const std::uint64_t d = mult_order(psi_value(x));
      if (d % 2 == 0) {
        log.add("point " + std::to_string(x) + " has ord(psi) = " + std::to_string(d));
      } else if (ord_mod(-2, d) != cycle.size()) {
        log.add("point " + std::to_string(x) + ": cycle length " + std::to_string(cycle.size()) +
                " but ord_" + std::to_string(d) + "(-2) = " + std::to_string(ord_mod(-2, d)));
      }
    }
    claims.push_back(log.claim("lemma1_period", "one point per cycle"));
  }

  {
    const ReverseAdjacency reverse = reverse_adjacency(table);
    FailureLog preimage_log, cardinality_log, strata_log, regularity_log;
    for (std::uint64_t g = 0; g < table.size(); ++g) {
      const auto expected = reverse.of(g);
      const auto algebraic = preimages(ProjPoint::from_index(ctx, g));
      const bool same = algebraic.size() == expected.size() &&
                        std::equal(algebraic.begin(), algebraic.end(), expected.begin(),
                                   [](const ProjPoint& a, PointIndex b) { return a.index() == b; });
      if (!same) preimage_log.add("gamma " + std::to_string(g));

      const NodeInfo& node = r.nodes[g];
      if (node.cyclic) {
        if (g != special.infinity && !special.plus_minus_one(g) && node.tree_children != 1) {
          regularity_log.add("root " + std::to_string(g) + " has " + std::to_string(node.tree_children) +
                             " children");
        }
        continue;
      }
      // Non-periodic points are always finite and never +-1.
      const int v = order_two_adic_valuation(psi_value(g));
      const bool two_preimages = v < e;
      if ((expected.size() == 2) != two_preimages || (expected.size() != 0 && expected.size() != 2)) {
        cardinality_log.add("gamma " + std::to_string(g) + " has " + std::to_string(expected.size()) +
                            " preimages, v2(ord(psi)) = " + std::to_string(v));
      }
      if (static_cast<std::uint32_t>(v) != node.tail_length) {
        strata_log.add("level " + std::to_string(node.tail_length) + " node " + std::to_string(g) +
                       " has v2(ord(psi)) = " + std::to_string(v));
      }
      const unsigned want_children = static_cast<int>(node.tail_length) < e ? 2 : 0;
      if (node.tree_children != want_children) {
        regularity_log.add("level " + std::to_string(node.tail_length) + " node " + std::to_string(g) + " has " +
                           std::to_string(node.tree_children) + " children");
      }
    }
    for (const auto& tree : r.trees) {
      if (special.plus_minus_one(tree.root)) continue;
      if (tree.level_counts != p.level_populations) {
        regularity_log.add("tree at " + std::to_string(tree.root) + " has levels " + render_list(tree.level_counts));
      }
    }
    claims.push_back(preimage_log.claim("preimage_oracle", "algebraic preimages vs table, all points"));
    claims.push_back(cardinality_log.claim("lemma4_cardinality", "non-periodic points"));
    claims.push_back(strata_log.claim("theorem3_stratification", "all tree nodes"));
    claims.push_back(regularity_log.claim("tree_regularity", "all roots and tree nodes"));
  }

  {
    const bool ok = r.nodes[special.one].tree_children == 0 && r.nodes[special.minus_one].tree_children == 0;
    claims.push_back({"plus_minus_one_no_tree", ok ? ClaimStatus::Pass : ClaimStatus::Fail,
                      "tree children of 1: " + std::to_string(r.nodes[special.one].tree_children) +
                          ", of -1: " + std::to_string(r.nodes[special.minus_one].tree_children)});
  }

  claims.push_back({"odd_period", ClaimStatus::Info,
                    r.parity.even_lengths.empty()
                        ? "all non-special cycle lengths are odd"
                        : "even non-special cycle lengths observed: " + render_list(r.parity.even_lengths)});

  trim_details(out.report, options.report_bound);
  return out;
}

}  // namespace theta3
