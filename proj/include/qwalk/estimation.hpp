#pragma once

#include <map>
#include <vector>

namespace qwalk {

/// Observed distribution at a known time t. probabilities() is indexed
/// x + t over [-t, t].
class EmpiricalHistogram {
 public:
  /// Counts keyed by site. Throws InvalidInput on negative counts, sites
  /// outside [-t, t], or an all-zero histogram.
  EmpiricalHistogram(long t, const std::map<long, double>& counts);
  /// Probability vector indexed x + t (length 2t+1); renormalized.
  static EmpiricalHistogram from_probabilities(long t, const std::vector<double>& p);

  long t() const { return t_; }
  double total_count() const { return total_; }
  const std::vector<double>& probabilities() const { return p_; }

 private:
  EmpiricalHistogram() = default;
  long t_ = 0;
  double total_ = 0.0;
  std::vector<double> p_;
};

struct FitOptions {
  /// Weight each site by 1/max(p_hat, floor) (Poisson-style) instead of
  /// plain least squares.
  bool poisson_weighted = false;
  double weight_floor = 1e-6;
  int coarse_grid = 201;
  /// Outer |a| refinement tolerance.
  double abs_a_tolerance = 1e-10;
};

struct SymmetryFit {
  double nu = 0.0;
  double alpha = 0.0;
  double residual = 0.0;
  bool clipped = false;  // unconstrained optimum was infeasible
};

/// Linear least squares for (nu, alpha) at fixed |a|; the model is
/// rho_even + nu (2|a| rho_mi - rho_sq) + alpha rho_mi. Infeasible optima are
/// replaced by the best point on the feasible boundary.
SymmetryFit fit_symmetry_params(const EmpiricalHistogram& hist, double abs_a,
                                const FitOptions& opts = {});

struct FitResult {
  double abs_a_hat = 0.0;
  double nu_hat = 0.0;
  double alpha_hat = 0.0;
  double residual = 0.0;
  bool feasible = false;
};

/// Coarse |a| grid then bracketed refinement around the best grid point.
/// Requires t >= 2.
FitResult fit_walk(const EmpiricalHistogram& hist, const FitOptions& opts = {});

}  // namespace qwalk
