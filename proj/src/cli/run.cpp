#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "ostro/cli.hpp"
#include "ostro/enclosure.hpp"
#include "ostro/expr.hpp"
#include "ostro/identity.hpp"
#include "ostro/quadrature.hpp"
#include "ostro/report_json.hpp"
#include "ostro/verify.hpp"

namespace ostro::cli {
namespace {

struct Outcome {
  Json results;
  bool rigorous = false;
  long violations = 0;
  int exit_code = 0;
};

Rectangle rect_of(const CliInvocation& inv) {
  const auto& r = *inv.rect;
  return make_rectangle(r[0], r[1], r[2], r[3]);
}

EvalPoint point_of(const CliInvocation& inv, const Rectangle& r) {
  return inv.point ? make_point(r, (*inv.point)[0], (*inv.point)[1]) : midpoint(r);
}

Json inputs_of(const CliInvocation& inv) {
  Json j;
  const Json quad = {{"gl_order", inv.quad.gl_order}, {"panels", inv.quad.panels}};
  if (inv.subcommand == Subcommand::Verify) {
    j["trials"] = inv.trials;
    j["seed"] = inv.seed;
    j["rules"] = inv.rules;
    j["degree"] = inv.degree;
    j["lambda"] = inv.lambdas;
    j["tol"] = inv.tol.value_or(kDefaultSlackRel);
    j["expect_hold"] = inv.expect_hold;
    j["quadrature"] = quad;
    return j;
  }
  j["f"] = inv.f;
  j["rect"] = *inv.rect;
  j["point"] = inv.point ? Json(*inv.point) : Json(nullptr);
  if (inv.subcommand != Subcommand::Identity) {
    j["bounds"] = inv.bounds ? Json(*inv.bounds) : Json("auto");
    if (!inv.bounds) j["auto_bounds"] = {{"grid", inv.grid}, {"pad_rel", inv.pad_rel}};
  }
  if (inv.subcommand == Subcommand::Enclose) j["subdivide"] = inv.subdivide;
  if (inv.subcommand == Subcommand::Compare) j["lambda"] = inv.lambdas.front();
  if (inv.subcommand == Subcommand::Identity) j["tol"] = inv.tol.value_or(kDefaultIdentityTol);
  j["quadrature"] = quad;
  return j;
}

struct ResolvedBounds {
  DerivativeBounds bounds;
  bool estimated;
};

ResolvedBounds resolve_bounds(const CliInvocation& inv, const BivariateFunction& f,
                              const Rectangle& r) {
  if (inv.bounds) return {DerivativeBounds((*inv.bounds)[0], (*inv.bounds)[1]), false};
  return {estimate_bounds(f, r, inv.grid, inv.pad_rel).bounds, true};
}

Outcome run_enclose(const CliInvocation& inv) {
  const BivariateFunction f = expr::to_bivariate(expr::parse(inv.f));
  const Rectangle r = rect_of(inv);
  if (inv.subdivide[0] == 1 && inv.subdivide[1] == 1) {
    const ResolvedBounds rb = resolve_bounds(inv, f, r);
    EnclosureReport rep = single_cell_enclosure(f, r, point_of(inv, r), rb.bounds, inv.quad);
    if (rb.estimated) {
      rep.bounds_estimated = true;
      rep.rigorous = false;
    }
    return {to_json(rep), rep.rigorous, 0, 0};
  }
  const BoundsStrategy strategy =
      inv.bounds ? BoundsStrategy(DerivativeBounds((*inv.bounds)[0], (*inv.bounds)[1]))
                 : BoundsStrategy(PerCellEstimated{inv.grid, inv.pad_rel});
  const EnclosureReport rep =
      composite_enclosure(f, r, strategy, inv.subdivide[0], inv.subdivide[1], inv.quad);
  return {to_json(rep), rep.rigorous, 0, 0};
}

Outcome run_identity(const CliInvocation& inv, std::ostream& err) {
  const BivariateFunction f = expr::to_bivariate(expr::parse(inv.f));
  const Rectangle r = rect_of(inv);
  const IdentityReport rep =
      identity_report(f, r, point_of(inv, r), inv.quad, inv.tol.value_or(kDefaultIdentityTol));
  // Violations count the verbatim values (assembled and per quadrant) that
  // miss the oracle.
  auto misses = [&rep](double v, double oracle) {
    return std::abs(v - oracle) > rep.tol * (1.0 + std::abs(oracle));
  };
  long violations = misses(rep.verbatim_value, rep.oracle_value) ? 1 : 0;
  for (const auto& q : rep.per_quadrant) violations += misses(q.verbatim, q.oracle) ? 1 : 0;
  Outcome o{to_json(rep), rep.ok, violations, 0};
  if (!rep.ok) {
    err << "derived expansion disagrees with the oracle beyond tol\n";
    o.exit_code = 1;
  }
  return o;
}

Outcome run_compare(const CliInvocation& inv) {
  const BivariateFunction f = expr::to_bivariate(expr::parse(inv.f));
  const Rectangle r = rect_of(inv);
  const ResolvedBounds rb = resolve_bounds(inv, f, r);
  const ComparisonReport rep =
      compare_bounds(f, r, point_of(inv, r), rb.bounds, Lambda(inv.lambdas.front()), inv.quad);
  long violations = 0;
  for (const auto& row : rep.rows) violations += row.violated ? 1 : 0;
  Json results = to_json(rep);
  results["bounds_used"] = {rb.bounds.lower(), rb.bounds.upper()};
  results["bounds_estimated"] = rb.estimated;
  return {results, !rb.estimated && f.has_exact_mixed(), violations, 0};
}

Outcome run_verify_cmd(const CliInvocation& inv, std::ostream& err) {
  VerifyOptions o;
  o.trials = inv.trials;
  o.seed = inv.seed;
  o.rules = inv.rules;
  o.degree = inv.degree;
  o.lambdas = inv.lambdas;
  o.slack_rel = inv.tol.value_or(kDefaultSlackRel);
  o.quad = inv.quad;
  o.threads = inv.threads;
  const VerifyReport rep = run_verify(o);
  Outcome out{to_json(rep), false, rep.total_violations(), 0};
  for (const auto& rule : inv.expect_hold) {
    const long v = rep.violations_for(rule);
    if (v > 0) {
      err << "rule " << rule << " expected to hold but has " << v << " violation(s)\n";
      out.exit_code = 3;
    }
  }
  return out;
}

void render_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      render_text(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_object()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    return;
  }
  out << prefix << " = " << j.dump() << '\n';
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteSample:
    case ErrorCode::DomainError:
    case ErrorCode::MissingMixedPartial:
    case ErrorCode::UnsupportedDerivative:
      return 1;
    default:
      return 2;
  }
}

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["subcommand"] = std::string(to_string(inv.subcommand));
  doc["inputs"] = inputs_of(inv);

  int code = 0;
  try {
    Outcome o;
    switch (inv.subcommand) {
      case Subcommand::Enclose: o = run_enclose(inv); break;
      case Subcommand::Identity: o = run_identity(inv, err); break;
      case Subcommand::Compare: o = run_compare(inv); break;
      case Subcommand::Verify: o = run_verify_cmd(inv, err); break;
    }
    doc["results"] = std::move(o.results);
    doc["flags"] = {{"rigorous", o.rigorous}, {"violations", o.violations}};
    code = o.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    doc["results"] = nullptr;
    doc["error"] = {{"code", std::string(to_string(e.code()))},
                    {"message", e.what()},
                    {"position", e.position() ? Json(*e.position()) : Json(nullptr)}};
    doc["flags"] = {{"rigorous", false}, {"violations", 0}};
    code = exit_code_for(e.code());
  }

  if (inv.no_timestamp) {
    doc["runtime_ms"] = nullptr;
  } else {
    doc["runtime_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }

  const std::string text = doc.dump(2) + "\n";
  if (inv.out_path) {
    std::ofstream file(*inv.out_path, std::ios::binary);
    file << text;
    if (!file) {
      err << "error: cannot write " << *inv.out_path << '\n';
      if (code == 0) code = 1;
    }
  }
  if (inv.output_mode == OutputMode::Json) {
    out << text;
  } else {
    out << "ostro " << to_string(inv.subcommand) << " (schema " << kSchemaVersion << ")\n";
    Json body = doc;
    body.erase("schema_version");
    body.erase("subcommand");
    render_text(body, "", out);
  }
  return code;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliInvocation inv;
  try {
    inv = parse_args(args);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 2;
  }
  return run(inv, out, err);
}

}  // namespace ostro::cli
