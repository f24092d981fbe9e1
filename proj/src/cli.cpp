#include "theta3/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "theta3/dynamics.hpp"
#include "theta3/enumerator.hpp"
#include "theta3/error.hpp"
#include "theta3/predictor.hpp"
#include "theta3/render.hpp"

namespace theta3 {

namespace {

enum class Format { Text, Json, Dot };

struct CliConfig {
  std::string command;
  int n = 0;
  std::optional<std::string> modulus;
  std::optional<std::string> element;
  std::optional<std::string> out_path;
  std::string format = "text";
  std::string labels = "auto";
};

Format parse_format(const CliConfig& cfg) {
  if (cfg.format == "json") return Format::Json;
  if (cfg.format == "dot") return Format::Dot;
  return Format::Text;
}

LabelMode resolve_labels(const CliConfig& cfg) {
  if (cfg.labels == "exponent") return LabelMode::Exponent;
  if (cfg.labels == "coeff") return LabelMode::Coefficients;
  return cfg.n <= kDefaultLogTableDegree ? LabelMode::Exponent : LabelMode::Coefficients;
}

std::shared_ptr<const FieldCtx> make_ctx(const CliConfig& cfg) {
  std::optional<Poly3> modulus;
  if (cfg.modulus) modulus = Poly3::parse(*cfg.modulus);
  return FieldCtx::create(cfg.n, std::move(modulus));
}

ProjPoint require_element(const CliConfig& cfg, const FieldCtx& ctx, const PointLabeler& labeler) {
  if (!cfg.element) throw Error(ErrorCode::ParseError, cfg.command + " needs an element literal");
  return parse_point(ctx, *cfg.element, &labeler);
}

int dispatch(const CliConfig& cfg, std::ostream& out) {
  const Format format = parse_format(cfg);

  if (cfg.command == "predict" || cfg.command == "divisors") {
    const auto rows = divisor_table(cfg.n);
    if (cfg.command == "divisors") {
      if (format == Format::Json) {
        nlohmann::ordered_json table = nlohmann::ordered_json::array();
        for (const auto& row : rows) table.push_back({row.d, row.phi, row.order_of_minus_two});
        out << nlohmann::ordered_json{{"n", cfg.n}, {"divisor_table", table}}.dump(2) << "\n";
      } else {
        out << "d phi(d) ord_d(-2)\n";
        for (const auto& row : rows) out << row.d << ' ' << row.phi << ' ' << row.order_of_minus_two << "\n";
      }
      return kExitOk;
    }
    const GraphPrediction p = predict(cfg.n);
    out << (format == Format::Json ? prediction_json(p, rows).dump(2) + "\n" : prediction_text(p, rows));
    return kExitOk;
  }

  const auto ctx = make_ctx(cfg);

  if (cfg.command == "enumerate") {
    const SuccessorTable table = build_successor_table(*ctx);
    const GraphReport report = analyze(*ctx, table);
    out << (format == Format::Json ? report_json(report).dump(2) + "\n" : report_text(report));
    return kExitOk;
  }

  if (cfg.command == "verify") {
    const VerificationOutcome outcome = verify(*ctx);
    out << (format == Format::Json ? report_json(outcome.report, outcome.claims).dump(2) + "\n"
                                   : verification_text(outcome));
    return outcome.passed() ? kExitOk : kExitMismatch;
  }

  if (cfg.command == "export-dot") {
    constexpr std::uint64_t kExportBound = 10'000;
    if (ctx->size() + 1 > kExportBound) {
      throw Error(ErrorCode::BudgetExceeded, "DOT export is limited to " + std::to_string(kExportBound) + " nodes");
    }
    const PointLabeler labeler(*ctx, resolve_labels(cfg));
    out << render_dot(build_successor_table(*ctx), labeler);
    return kExitOk;
  }

  // orbit / preimages: exponent literals are accepted whenever a log table fits.
  const PointLabeler labeler(*ctx, resolve_labels(cfg));
  const ProjPoint x = require_element(cfg, *ctx, labeler);
  if (cfg.command == "orbit") {
    const OrbitRecord rec = orbit(x, true);
    std::vector<std::string> path;
    for (const auto& p : *rec.trajectory) path.push_back(labeler.literal(p));
    if (format == Format::Json) {
      out << nlohmann::ordered_json{{"n", cfg.n},
                                    {"modulus", ctx->modulus().to_string()},
                                    {"start", labeler.literal(x)},
                                    {"tail_length", rec.tail_length},
                                    {"cycle_length", rec.cycle_length},
                                    {"trajectory", path}}
                 .dump(2)
          << "\n";
    } else {
      out << "start: " << labeler.literal(x) << "\n";
      out << "tail length: " << rec.tail_length << "\n";
      out << "cycle length: " << rec.cycle_length << "\n";
      out << "trajectory:";
      for (const auto& s : path) out << ' ' << s;
      out << "\n";
    }
    return kExitOk;
  }

  std::vector<std::string> pre;
  for (const auto& p : preimages(x)) pre.push_back(labeler.literal(p));
  if (format == Format::Json) {
    out << nlohmann::ordered_json{{"n", cfg.n},
                                  {"modulus", ctx->modulus().to_string()},
                                  {"point", labeler.literal(x)},
                                  {"preimages", pre}}
               .dump(2)
        << "\n";
  } else {
    out << "preimages of " << labeler.literal(x) << ":";
    if (pre.empty()) out << " none";
    for (const auto& s : pre) out << ' ' << s;
    out << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Iteration graphs of x -> x + 1/x on the projective line over F_{3^n}", "theta3"};
  app.require_subcommand(1);
  CliConfig cfg;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"predict", "Census predicted from the factorization of 3^n - 1"},
      {"divisors", "Odd divisors d > 1 of 3^n - 1 with phi(d) and ord_d(-2)"},
      {"enumerate", "Census measured by enumerating every point"},
      {"verify", "Compare prediction and enumeration; exit 1 on mismatch"},
      {"orbit", "Tail, cycle length and trajectory of one point"},
      {"preimages", "All x with theta(x) equal to the given point"},
      {"export-dot", "Graphviz DOT of the whole graph"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("n", cfg.n, "Extension degree")->required()->check(CLI::PositiveNumber);
    sub->add_option("--modulus", cfg.modulus, "Modulus coefficients c0,c1,...,1");
    sub->add_option(name == "orbit" || name == "preimages" ? "element,--element" : "--element", cfg.element,
                    "Point literal: inf, a^K or c0,c1,...");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember(name == "export-dot" ? std::vector<std::string>{"dot"}
                                                   : std::vector<std::string>{"text", "json"}));
    sub->add_option("--out", cfg.out_path, "Write output to this file");
    sub->add_option("--labels", cfg.labels, "Point labels")->check(CLI::IsMember({"auto", "exponent", "coeff"}));
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }
  if (cfg.command == "export-dot") cfg.format = "dot";

  try {
    std::ostringstream buffer;
    const int code = dispatch(cfg, buffer);
    if (cfg.out_path) {
      std::ofstream file(*cfg.out_path, std::ios::binary);
      if (!file) {
        err << "cannot open " << *cfg.out_path << "\n";
        return kExitUsage;
      }
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::BudgetExceeded ? kExitBudget : kExitUsage;
  }
}

}  // namespace theta3
