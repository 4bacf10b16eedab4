#pragma once

#include "qwalk/densities.hpp"
#include "qwalk/exact_poly.hpp"

namespace qwalk {

struct MomentReport {
  long t = 0;
  double abs_a = 0.0, nu = 0.0, alpha = 0.0;
  double mean = 0.0;
  double second = 0.0;
  double variance = 0.0;
  double normalized_second = 0.0;
};

/// sum_x x^n rho(x).
double moment_from_density(const DensityProfile& profile, int n);
double moment_from_density(const std::vector<double>& rho, long t, int n);

/// |sum_x u_{t-1}^2 - sum_x u_t u_{t-2} - 1|. Requires t >= 2.
double normalization_identity(double abs_a, long t);

/// The same identity as an exact polynomial equation in |a|:
/// sum_j (P^{t-1}_{t-2j-1})^2 - sum_j P^t_{t-2j-2} P^{t-2}_{t-2j-2} == 1.
bool normalization_identity_exact(long t);

/// <x^2>_t = sum x^2 u_{t-1}^2 - sum x^2 u_t u_{t-2} + sum u_{t-1}^2.
/// Depends on |a| only. Requires t >= 1.
double second_moment(double abs_a, long t);

/// Exact second-moment polynomial in |a|.
IntPoly second_moment_polynomial(long t);

/// Odd moment <x^(2n+1)> from the foundation double sums
///   c_mi * 2 sum_j u_t(t-2j) u_{t-1}(t-2j-1) (t-2j)^(2n+1)
/// + c_sq * 2 sum_j u_{t-1}(t-2j-1)^2 (t-2j)^(2n+1)
/// with (c_mi, c_sq) from odd_coefficients. Throws DomainError when
/// infeasible.
double odd_moment(double abs_a, double nu, double alpha, long t, int n,
                  SignConvention signs = SignConvention::Resolved);

double first_moment_table(double abs_a, double nu, double alpha, long t,
                          SignConvention signs = SignConvention::Resolved);

/// <x>_t = nu * nu_part(|a|) + alpha * alpha_part(|a|), exactly.
struct FirstMomentPolynomials {
  IntPoly nu_part;
  IntPoly alpha_part;
};
FirstMomentPolynomials first_moment_polynomials(long t);

double variance(double abs_a, double nu, double alpha, long t,
                SignConvention signs = SignConvention::Resolved);

/// M_t = <x^2>_t / t^2.
double normalized_second(double abs_a, long t);

MomentReport moment_report(double abs_a, double nu, double alpha, long t,
                           SignConvention signs = SignConvention::Resolved);

}  // namespace qwalk
