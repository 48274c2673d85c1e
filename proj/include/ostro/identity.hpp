#pragma once

#include <array>
#include <string_view>

#include "ostro/core.hpp"

// The integration-by-parts identity behind the main rule,
//
//   I(f) = integral over [a,b]x[c,d] of p(x,t) q(y,s) d2f/dtds,
//
// computed three ways: by quadrature of the kernel-weighted mixed partial
// (the oracle), by the verbatim quadrant and assembled expansions, and by the
// boundary-functional expansion obtained from one-dimensional integration by
// parts,
//
//   Lambda_t g = 3(b-a)/4 g(x) + (x-a)/4 g(a) + (b-x)/4 g(b) - int_a^b g,
//   I(f)       = (Lambda_t (x) Lambda_s) f.
namespace ostro {

enum class Quadrant { LL, LU, RL, RU };  // [a,x]x[c,y], [a,x]x[y,d], [x,b]x[c,y], [x,b]x[y,d]

inline constexpr std::array<Quadrant, 4> kQuadrants = {Quadrant::LL, Quadrant::LU, Quadrant::RL,
                                                       Quadrant::RU};

std::string_view to_string(Quadrant q) noexcept;

enum class MixedSource {
  ExactOnly,              // MissingMixedPartial without an exact mixed partial
  AllowFiniteDifference,  // cross-stencil fallback
};

double quadrant_kernel_weighted_integral(const BivariateFunction& f, const Rectangle& r,
                                         const EvalPoint& pt, Quadrant quad,
                                         const QuadConfig& q = {},
                                         MixedSource src = MixedSource::AllowFiniteDifference);

/// Sum over the four quadrants in LL, LU, RL, RU order; the kernels are
/// smooth inside each.
double kernel_weighted_integral(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const QuadConfig& q = {},
                                MixedSource src = MixedSource::AllowFiniteDifference);

/// The stated right-hand side for one quadrant, with t0 < t1 and s0 < s1 the
/// quadrant's sides:
///   (t1-t0)(s1-s0)/16 [9 f(t1,s1) - 3 f(t1,s0) - 3 f(t0,s1) + f(t0,s0)]
///   - (t1-t0)/4 int [3 f(t1,s) - f(t0,s)] ds - (s1-s0)/4 int [3 f(t,s1) - f(t,s0)] dt
///   + double integral over the quadrant.
double quadrant_expansion_verbatim(const BivariateFunction& f, const Rectangle& r,
                                   const EvalPoint& pt, Quadrant quad, const QuadConfig& q = {});

/// Point terms by which the assembled verbatim expansion differs from the
/// sum of the four verbatim quadrant expansions:
///   (b-x)(y-c)/8 f(b,c) - 3(b-x)(d-y)/8 f(b,d).
double verbatim_reassembly_terms(const BivariateFunction& f, const Rectangle& r,
                                 const EvalPoint& pt);

/// The assembled verbatim expansion (not divided by the area).
double full_expansion_verbatim(const BivariateFunction& f, const Rectangle& r,
                               const EvalPoint& pt, const QuadConfig& q = {});

/// Pieces of a tensor-product boundary functional: value = nodes - lines + area_integral.
struct ExpansionParts {
  double node_terms = 0.0;
  double line_terms = 0.0;
  double double_integral = 0.0;
  /// Sum of |coefficient * (I_q - I_refined)| over the line integrals; only
  /// filled when requested.
  double line_noise = 0.0;
  /// Sum of |term| over node and line contributions, for rounding budgets.
  double magnitude = 0.0;

  double value() const noexcept { return node_terms - line_terms + double_integral; }
};

ExpansionParts derived_expansion_parts(const BivariateFunction& f, const Rectangle& r,
                                       const EvalPoint& pt, const QuadConfig& q,
                                       bool include_double_integral, bool estimate_line_noise);

double full_expansion_derived(const BivariateFunction& f, const Rectangle& r,
                              const EvalPoint& pt, const QuadConfig& q = {});

/// The derived expansion restricted to one quadrant; the four sum to
/// full_expansion_derived.
double quadrant_expansion_derived(const BivariateFunction& f, const Rectangle& r,
                                  const EvalPoint& pt, Quadrant quad, const QuadConfig& q = {});

struct QuadrantAudit {
  Quadrant quadrant;
  double verbatim;
  double derived;
  double oracle;
};

struct IdentityReport {
  double oracle_value;
  double verbatim_value;
  double derived_value;
  std::array<QuadrantAudit, 4> per_quadrant;
  /// Largest |verbatim - oracle| over the assembled value and the quadrants.
  double max_abs_discrepancy_verbatim;
  /// Same for the derived expansion.
  double max_abs_discrepancy_derived;
  double tol;
  /// |derived - oracle| <= tol (1 + |oracle|)
  bool ok;
};

inline constexpr double kDefaultIdentityTol = 1e-9;

/// Requires an exact mixed partial (MissingMixedPartial otherwise).
IdentityReport identity_report(const BivariateFunction& f, const Rectangle& r,
                               const EvalPoint& pt, const QuadConfig& q = {},
                               double tol = kDefaultIdentityTol);

}  // namespace ostro
