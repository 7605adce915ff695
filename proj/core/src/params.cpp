#include "hybridom/params.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hybridom/errors.hpp"

namespace hybridom {
namespace {

void require_positive(double v, const char* field) {
  if (!std::isfinite(v) || v <= 0.0) {
    std::ostringstream os;
    os << "must be finite and > 0, got " << v;
    throw InvalidParameter(field, os.str());
  }
}

void require_non_negative(double v, const char* field) {
  if (!std::isfinite(v) || v < 0.0) {
    std::ostringstream os;
    os << "must be finite and >= 0, got " << v;
    throw InvalidParameter(field, os.str());
  }
}

constexpr double kMarginalTol = 1e-12;

ModeMargin margin_for(double xi, double xi_max) {
  ModeMargin m;
  if (!(xi_max > 0.0) || !std::isfinite(xi_max)) {
    m.ratio = std::numeric_limits<double>::infinity();
    m.margin = -std::numeric_limits<double>::infinity();
    m.status = BoundStatus::Unstable;
    return m;
  }
  m.ratio = xi / xi_max;
  m.margin = 1.0 - m.ratio;
  if (std::abs(m.margin) <= kMarginalTol)
    m.status = BoundStatus::Marginal;
  else if (m.margin < 0.0)
    m.status = BoundStatus::Unstable;
  else
    m.status = BoundStatus::Stable;
  return m;
}

// C_own * (1 + C_other - xi_other^2) / ((1 + C_other - xi_other^2)^2 - xi_other^2 C_other^2)
double collective(double c_own, double c_other, double xi_other, const char* which) {
  const double u = 1.0 + c_other - xi_other * xi_other;
  const double den = u * u - xi_other * xi_other * c_other * c_other;
  if (den == 0.0 || std::abs(den) <= 1e-14 * (u * u + xi_other * xi_other * c_other * c_other)) {
    throw SingularConfiguration(std::string("collective cooperativity ") + which +
                                " has a vanishing denominator");
  }
  return c_own * u / den;
}

}  // namespace

double DimensionlessParams::g() const { return std::sqrt(C0 * kappa * gamma_m / 4.0); }
double DimensionlessParams::G() const { return std::sqrt(C1 * kappa * gamma_d / 4.0); }

void validate(const PhysicalParams& p) {
  require_positive(p.kappa, "kappa");
  require_positive(p.gamma_m, "gamma_m");
  require_positive(p.gamma_d, "gamma_d");
  require_non_negative(p.g, "g");
  require_non_negative(p.G, "G");
  require_non_negative(p.lambda_m, "lambda_m");
  require_non_negative(p.lambda_d, "lambda_d");
  require_non_negative(p.n_a, "n_a");
  require_non_negative(p.n_m, "n_m");
  require_non_negative(p.n_d, "n_d");
}

void validate(const DimensionlessParams& d) {
  require_positive(d.kappa, "kappa");
  require_positive(d.gamma_m, "gamma_m");
  require_positive(d.gamma_d, "gamma_d");
  require_non_negative(d.C0, "C0");
  require_non_negative(d.C1, "C1");
  require_non_negative(d.xi_m, "xi_m");
  require_non_negative(d.xi_d, "xi_d");
  require_non_negative(d.n_a, "n_a");
  require_non_negative(d.n_m, "n_m");
  require_non_negative(d.n_d, "n_d");
}

namespace {
std::vector<std::string> coupling_warnings(double g, double G, double kappa) {
  std::vector<std::string> out;
  if (g >= kappa) {
    std::ostringstream os;
    os << "g = " << g << " >= kappa = " << kappa << ": outside the weak-coupling regime";
    out.push_back(os.str());
  }
  if (G >= kappa) {
    std::ostringstream os;
    os << "G = " << G << " >= kappa = " << kappa << ": outside the weak-coupling regime";
    out.push_back(os.str());
  }
  return out;
}
}  // namespace

std::vector<std::string> regime_warnings(const PhysicalParams& p) { return coupling_warnings(p.g, p.G, p.kappa); }

std::vector<std::string> regime_warnings(const DimensionlessParams& d) {
  return coupling_warnings(d.g(), d.G(), d.kappa);
}

DimensionlessParams derive_dimensionless(const PhysicalParams& p) {
  validate(p);
  DimensionlessParams d;
  d.C0 = 4.0 * p.g * p.g / (p.kappa * p.gamma_m);
  d.C1 = 4.0 * p.G * p.G / (p.kappa * p.gamma_d);
  d.xi_m = 2.0 * p.lambda_m / p.gamma_m;
  d.xi_d = 2.0 * p.lambda_d / p.gamma_d;
  d.kappa = p.kappa / p.gamma_m;
  d.gamma_m = 1.0;
  d.gamma_d = p.gamma_d / p.gamma_m;
  d.n_a = p.n_a;
  d.n_m = p.n_m;
  d.n_d = p.n_d;
  return d;
}

PhysicalParams to_physical(const DimensionlessParams& d, double gamma_m) {
  validate(d);
  require_positive(gamma_m, "gamma_m");
  const double scale = gamma_m / d.gamma_m;
  PhysicalParams p;
  p.kappa = d.kappa * scale;
  p.gamma_m = gamma_m;
  p.gamma_d = d.gamma_d * scale;
  p.g = d.g() * scale;
  p.G = d.G() * scale;
  p.lambda_m = d.lambda_m() * scale;
  p.lambda_d = d.lambda_d() * scale;
  p.n_a = d.n_a;
  p.n_m = d.n_m;
  p.n_d = d.n_d;
  return p;
}

StabilityBounds collective_cooperativities(const DimensionlessParams& d) {
  StabilityBounds b;
  b.C_m = collective(d.C0, d.C1, d.xi_d, "C_m");
  b.C_d = collective(d.C1, d.C0, d.xi_m, "C_d");
  b.xi_m_max = 1.0 + b.C_m;
  b.xi_d_max = 1.0 + b.C_d;
  return b;
}

MarginReport validate_stability_inputs(const DimensionlessParams& d, double xi_m, double xi_d) {
  DimensionlessParams at = d;
  at.xi_m = xi_m;
  at.xi_d = xi_d;
  MarginReport r;
  constexpr double inf = std::numeric_limits<double>::infinity();
  try {
    r.bounds.C_m = collective(at.C0, at.C1, at.xi_d, "C_m");
    r.bounds.xi_m_max = 1.0 + r.bounds.C_m;
  } catch (const SingularConfiguration&) {
    r.bounds.C_m = inf;
    r.bounds.xi_m_max = -inf;
  }
  try {
    r.bounds.C_d = collective(at.C1, at.C0, at.xi_m, "C_d");
    r.bounds.xi_d_max = 1.0 + r.bounds.C_d;
  } catch (const SingularConfiguration&) {
    r.bounds.C_d = inf;
    r.bounds.xi_d_max = -inf;
  }
  r.mech = margin_for(xi_m, r.bounds.xi_m_max);
  r.bog = margin_for(xi_d, r.bounds.xi_d_max);
  return r;
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Stable:
      return "stable";
    case BoundStatus::Marginal:
      return "marginal";
    case BoundStatus::Unstable:
      return "unstable";
  }
  return "?";
}

}  // namespace hybridom
