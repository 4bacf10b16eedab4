#include "qwalk/densities.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

OddCoefficients odd_coefficients(double abs_a, double nu, double alpha, SignConvention signs) {
  if (signs == SignConvention::Printed) return {2.0 * abs_a * nu - alpha, nu};
  return {2.0 * abs_a * nu + alpha, -nu};
}

namespace {

void require_positive_time(long t, const char* what) {
  if (t < 1) throw DomainError(std::string(what) + ": t must be >= 1");
}

}  // namespace

ComponentDensities component_densities(const WalkSpec& spec, long t) {
  if (t < 0) throw DomainError("component_densities: t must be >= 0");
  const EffectiveParams eff = derive_effective(spec);
  const FoundationWindow w = foundation_window(eff.abs_a, t);
  const double c0sq = std::norm(spec.c0()), c1sq = std::norm(spec.c1()), bsq = std::norm(spec.b());
  const double abs_a = eff.abs_a, alpha = eff.alpha;
  ComponentDensities out{t, std::vector<double>(static_cast<std::size_t>(2 * t + 1)), {}};
  out.rho1.resize(out.rho0.size());
  const long n = 2 * t + 1;
#pragma omp parallel for schedule(static) if (n > 2048)
  for (long i = 0; i < n; ++i) {
    const long x = i - t;
    const double g = w.utm1(x - 1), k = w.utm1(x + 1);
    const double f = w.ut(x) - abs_a * k;  // f_t(x)
    const double h = w.ut(x) - abs_a * g;  // f_t(-x)
    out.rho0[i] = c0sq * f * f + alpha * f * g + bsq * c1sq * g * g;
    out.rho1[i] = c1sq * h * h - alpha * h * k + bsq * c0sq * k * k;
  }
  return out;
}

std::vector<double> even_density(const FoundationWindow& w) {
  require_positive_time(w.t, "even_density");
  const long t = w.t, n = 2 * t + 1;
  std::vector<double> out(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(static) if (n > 2048)
  for (long i = 0; i < n; ++i) {
    const long x = i - t;
    const double l = w.utm1(x - 1), r = w.utm1(x + 1);
    out[i] = 0.5 * (l * l + r * r) - w.ut(x) * w.utm2(x);
  }
  return out;
}

std::vector<double> even_density(double abs_a, long t) {
  require_positive_time(t, "even_density");
  return even_density(foundation_window(abs_a, t));
}

OddBasis odd_components(const FoundationWindow& w) {
  require_positive_time(w.t, "odd_components");
  const long t = w.t, n = 2 * t + 1;
  OddBasis out{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n))};
#pragma omp parallel for schedule(static) if (n > 2048)
  for (long i = 0; i < n; ++i) {
    const long x = i - t;
    const double l = w.utm1(x - 1), r = w.utm1(x + 1);
    out.rho_sq[i] = l * l - r * r;
    out.rho_mi[i] = w.ut(x) * (l - r);
  }
  return out;
}

OddBasis odd_components(double abs_a, long t) {
  require_positive_time(t, "odd_components");
  return odd_components(foundation_window(abs_a, t));
}

DensityProfile total_density(const EffectiveParams& eff, long t, SignConvention signs) {
  require_feasible(eff.nu, eff.alpha, eff.abs_a);
  require_positive_time(t, "total_density");
  const FoundationWindow w = foundation_window(eff.abs_a, t);
  DensityProfile p;
  p.t = t;
  p.rho_even = even_density(w);
  OddBasis basis = odd_components(w);
  p.rho_sq = std::move(basis.rho_sq);
  p.rho_mi = std::move(basis.rho_mi);
  const OddCoefficients c = odd_coefficients(eff.abs_a, eff.nu, eff.alpha, signs);
  const std::size_t n = p.rho_even.size();
  p.rho_odd.resize(n);
  p.rho.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    p.rho_odd[i] = c.mi * p.rho_mi[i] + c.sq * p.rho_sq[i];
    p.rho[i] = p.rho_even[i] + p.rho_odd[i];
  }
  return p;
}

DensityProfile density_profile(const WalkSpec& spec, long t, SignConvention signs) {
  if (t < 0) throw DomainError("density_profile: t must be >= 0");
  if (t == 0) {
    DensityProfile p;
    p.t = 0;
    p.rho = {1.0};
    p.rho0 = {std::norm(spec.c0())};
    p.rho1 = {std::norm(spec.c1())};
    p.rho_even = {1.0};
    p.rho_odd = p.rho_mi = p.rho_sq = {0.0};
    return p;
  }
  DensityProfile p = total_density(derive_effective(spec), t, signs);
  ComponentDensities c = component_densities(spec, t);
  p.rho0 = std::move(c.rho0);
  p.rho1 = std::move(c.rho1);
  return p;
}

std::vector<double> density_of(const WaveField& field) {
  std::vector<double> rho(field.psi0.size());
  for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = std::norm(field.psi0[i]) + std::norm(field.psi1[i]);
  return rho;
}

}  // namespace qwalk
