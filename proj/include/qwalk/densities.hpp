#pragma once

#include <vector>

#include "qwalk/foundation.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// Which coefficients multiply the odd basis arrays.
///  Resolved: rho_odd = (2|a| nu + alpha) rho_mi - nu rho_sq (matches the
///            direct evolution).
///  Printed:  rho_odd = nu rho_sq + (2|a| nu - alpha) rho_mi, kept only to
///            reproduce the erratum. Moment sums under Printed use
///            (2|a| nu - alpha, -nu), the form printed for the moments.
enum class SignConvention { Resolved, Printed };

struct OddCoefficients {
  double mi;
  double sq;
};
OddCoefficients odd_coefficients(double abs_a, double nu, double alpha,
                                 SignConvention signs = SignConvention::Resolved);

/// Real arrays over x in [-t, t], index x + t.
struct DensityProfile {
  long t = 0;
  std::vector<double> rho, rho0, rho1, rho_even, rho_odd, rho_mi, rho_sq;

  double at(const std::vector<double>& v, long x) const {
    return (x < -t || x > t) ? 0.0 : v[static_cast<std::size_t>(x + t)];
  }
  long size() const { return 2 * t + 1; }
};

struct ComponentDensities {
  long t = 0;
  std::vector<double> rho0, rho1;
};

/// Per-component densities from foundation functions and (|a|, |b|, |c0|,
/// |c1|, alpha). t = 0 gives the initial spinor.
ComponentDensities component_densities(const WalkSpec& spec, long t);

/// rho_even(x) = 1/2 [u_{t-1}^2(x-1) + u_{t-1}^2(x+1)] - u_t(x) u_{t-2}(x).
std::vector<double> even_density(double abs_a, long t);
std::vector<double> even_density(const FoundationWindow& w);

struct OddBasis {
  std::vector<double> rho_sq;  // u_{t-1}^2(x-1) - u_{t-1}^2(x+1)
  std::vector<double> rho_mi;  // u_t(x) [u_{t-1}(x-1) - u_{t-1}(x+1)]
};
OddBasis odd_components(double abs_a, long t);
OddBasis odd_components(const FoundationWindow& w);

/// Full decomposition from effective parameters. rho0/rho1 are left empty
/// (they need the phases in WalkSpec; see density_profile).
/// Throws DomainError for infeasible (nu, alpha, |a|) and for t < 1.
DensityProfile total_density(const EffectiveParams& eff, long t,
                             SignConvention signs = SignConvention::Resolved);

/// total_density plus component densities, for a concrete spec. t = 0 is
/// allowed here and yields the initial delta.
DensityProfile density_profile(const WalkSpec& spec, long t,
                               SignConvention signs = SignConvention::Resolved);

/// |psi0|^2 + |psi1|^2 of a wave field, indexed x + t.
std::vector<double> density_of(const WaveField& field);

}  // namespace qwalk
