#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ostro/cli.hpp"
#include "ostro/verify.hpp"

namespace ostro::cli {
namespace {

[[noreturn]] void usage(const std::string& msg) { throw Error(ErrorCode::UsageError, msg); }

double parse_number(const std::string& flag, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !std::isfinite(v)) usage(flag + ": '" + text + "' is not a finite number");
  return v;
}

std::vector<std::string> split_list(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) out.push_back(part);
  }
  return out;
}

struct Raw {
  std::vector<std::string> rect, point, bounds, subdivide, lambdas, rules, expect_hold;
};

void add_output_flags(CLI::App* app, CliInvocation& inv) {
  app->add_flag_callback("--json", [&inv] { inv.output_mode = OutputMode::Json; },
                         "Write one JSON document to standard output");
  app->add_option_function<std::string>("--out", [&inv](const std::string& p) { inv.out_path = p; },
                                        "Also write the JSON document to PATH");
  app->add_flag("--no-timestamp", inv.no_timestamp, "Report runtime_ms as null");
  app->add_option("--gl-order", inv.quad.gl_order, "Gauss-Legendre points per panel (2..64)");
  app->add_option("--panels", inv.quad.panels, "Panels per axis");
}

void add_geometry(CLI::App* app, CliInvocation& inv, Raw& raw) {
  app->add_option("--f", inv.f, "Expression in t and s")->required();
  app->add_option("--rect", raw.rect, "a b c d")->expected(4)->required()->allow_extra_args(false);
  app->add_option("--point", raw.point, "x y (default: midpoint)")->expected(2)->allow_extra_args(false);
}

void add_bounds(CLI::App* app, CliInvocation& inv, Raw& raw) {
  app->add_option("--bounds", raw.bounds, "gamma Gamma, or auto")->expected(1, 2)->allow_extra_args(false);
  app->add_option("--grid", inv.grid, "Samples per axis for --bounds auto");
  app->add_option("--pad", inv.pad_rel, "Relative widening for --bounds auto");
}

void check_subset(const std::string& flag, const std::vector<std::string>& names) {
  for (const auto& n : names)
    if (!is_rule_name(n)) usage(flag + ": unknown rule '" + n + "'");
}

void finish(CliInvocation& inv, const Raw& raw) {
  if (!raw.rect.empty()) {
    std::array<double, 4> r{};
    for (int i = 0; i < 4; ++i) r[i] = parse_number("--rect", raw.rect[i]);
    if (!(r[0] < r[1])) usage("--rect: need a < b");
    if (!(r[2] < r[3])) usage("--rect: need c < d");
    inv.rect = r;
  }
  if (!raw.point.empty()) {
    std::array<double, 2> p{parse_number("--point", raw.point[0]), parse_number("--point", raw.point[1])};
    const auto& r = *inv.rect;
    if (p[0] < r[0] || p[0] > r[1] || p[1] < r[2] || p[1] > r[3])
      usage("--point: (x, y) must lie in the rectangle");
    inv.point = p;
  }
  if (!raw.bounds.empty()) {
    if (raw.bounds.size() == 1) {
      if (raw.bounds[0] != "auto") usage("--bounds: expected 'auto' or two numbers");
    } else {
      std::array<double, 2> b{parse_number("--bounds", raw.bounds[0]),
                              parse_number("--bounds", raw.bounds[1])};
      if (b[0] > b[1]) usage("--bounds: need gamma <= Gamma");
      inv.bounds = b;
    }
  }
  if (!raw.subdivide.empty()) {
    for (int i = 0; i < 2; ++i) {
      const double v = parse_number("--subdivide", raw.subdivide[i]);
      if (v != std::floor(v) || v < 1 || v > 4096) usage("--subdivide: m and n must be integers in [1, 4096]");
      inv.subdivide[i] = static_cast<int>(v);
    }
    if (inv.point && (inv.subdivide[0] > 1 || inv.subdivide[1] > 1))
      usage("--point: only meaningful with --subdivide 1 1 (cells use their midpoints)");
  }
  for (const auto& text : split_list(raw.lambdas)) {
    const double v = parse_number("--lambda", text);
    if (v < 0.0 || v > 1.0) usage("--lambda: values must lie in [0, 1]");
    inv.lambdas.push_back(v);
  }
  inv.rules = split_list(raw.rules);
  check_subset("--rules", inv.rules);
  inv.expect_hold = split_list(raw.expect_hold);
  check_subset("--expect-hold", inv.expect_hold);

  if (inv.quad.gl_order < 2 || inv.quad.gl_order > 64) usage("--gl-order: must lie in [2, 64]");
  if (inv.quad.panels < 1 || inv.quad.panels > 4096) usage("--panels: must lie in [1, 4096]");
  if (inv.grid < 2 || inv.grid > 4097) usage("--grid: must lie in [2, 4097]");
  if (!(inv.pad_rel >= 0.0) || !std::isfinite(inv.pad_rel)) usage("--pad: must be >= 0");
  if (inv.trials < 0 || inv.trials > 10000000) usage("--trials: must lie in [0, 10^7]");
  if (inv.degree < 0 || inv.degree > 12) usage("--degree: must lie in [0, 12]");
  if (inv.tol && !(*inv.tol > 0.0 && std::isfinite(*inv.tol))) usage("--tol: must be positive");
  if (inv.threads < 0) usage("--threads: must be >= 0");

  if (inv.subcommand == Subcommand::Compare && inv.lambdas.size() > 1)
    usage("--lambda: compare takes a single value");
  if (inv.subcommand == Subcommand::Verify) {
    if (inv.rules.empty()) inv.rules = kRuleNames;
    if (inv.lambdas.empty()) inv.lambdas = {0.0, 0.25, 0.5, 1.0};
    for (const auto& n : inv.expect_hold)
      if (std::find(inv.rules.begin(), inv.rules.end(), n) == inv.rules.end())
        usage("--expect-hold: rule '" + n + "' is not among --rules");
  }
  if (inv.subcommand == Subcommand::Compare && inv.lambdas.empty()) inv.lambdas = {0.0};
}

}  // namespace

std::string_view to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::Enclose: return "enclose";
    case Subcommand::Verify: return "verify";
    case Subcommand::Identity: return "identity";
    case Subcommand::Compare: return "compare";
  }
  return "?";
}

CliInvocation parse_args(const std::vector<std::string>& args) {
  CliInvocation inv;
  Raw raw;
  CLI::App app{"Certified enclosures and rule audits for double integrals", "ostro"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", tool_version());

  CLI::App* enclose = app.add_subcommand("enclose", "Enclose the double integral of f over a rectangle");
  add_geometry(enclose, inv, raw);
  add_bounds(enclose, inv, raw);
  enclose->add_option("--subdivide", raw.subdivide, "m n (default 1 1)")->expected(2)->allow_extra_args(false);
  add_output_flags(enclose, inv);

  CLI::App* identity = app.add_subcommand("identity", "Audit the kernel identity at a point");
  add_geometry(identity, inv, raw);
  identity->add_option("--tol", inv.tol, "Relative agreement tolerance");
  add_output_flags(identity, inv);

  CLI::App* compare = app.add_subcommand("compare", "Compare the two-dimensional rules at a point");
  add_geometry(compare, inv, raw);
  add_bounds(compare, inv, raw);
  compare->add_option("--lambda", raw.lambdas, "lambda in [0, 1] (default 0)")->allow_extra_args(false);
  add_output_flags(compare, inv);

  CLI::App* verify = app.add_subcommand("verify", "Randomised audit of every rule");
  verify->add_option("--trials", inv.trials, "Number of random trials");
  verify->add_option("--seed", inv.seed, "Corpus seed");
  verify->add_option("--rules", raw.rules, "Subset of t1,t2,t3,t4,t5,corrected");
  verify->add_option("--degree", inv.degree, "Maximum degree per variable");
  verify->add_option("--lambda", raw.lambdas, "lambda values for t4 (default 0,0.25,0.5,1)");
  verify->add_option("--tol", inv.tol, "Relative slack of each inequality");
  verify->add_option("--expect-hold", raw.expect_hold, "Rules whose violations give exit code 3");
  verify->add_option("--threads", inv.threads, "Worker threads (0: automatic)");
  add_output_flags(verify, inv);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help()};
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested{tool_version() + "\n"};
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }

  if (enclose->parsed()) inv.subcommand = Subcommand::Enclose;
  if (identity->parsed()) inv.subcommand = Subcommand::Identity;
  if (compare->parsed()) inv.subcommand = Subcommand::Compare;
  if (verify->parsed()) inv.subcommand = Subcommand::Verify;
  finish(inv, raw);
  return inv;
}

}  // namespace ostro::cli
