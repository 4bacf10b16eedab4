#include "qwalk/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/tools/minima.hpp>

#include "qwalk/densities.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/foundation.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

EmpiricalHistogram::EmpiricalHistogram(long t, const std::map<long, double>& counts) : t_(t) {
  if (t < 0) throw InvalidInput("histogram: t must be >= 0");
  p_.assign(static_cast<std::size_t>(2 * t + 1), 0.0);
  for (const auto& [x, c] : counts) {
    if (x < -t || x > t) throw InvalidInput("histogram: site " + std::to_string(x) + " lies outside [-t, t]");
    if (!(c >= 0.0) || !std::isfinite(c)) throw InvalidInput("histogram: counts must be finite and non-negative");
    p_[static_cast<std::size_t>(x + t)] += c;
    total_ += c;
  }
  if (total_ <= 0.0) throw InvalidInput("histogram: total count is zero");
  for (auto& v : p_) v /= total_;
}

EmpiricalHistogram EmpiricalHistogram::from_probabilities(long t, const std::vector<double>& p) {
  if (t < 0 || p.size() != static_cast<std::size_t>(2 * t + 1)) {
    throw InvalidInput("histogram: probability vector must have length 2t+1");
  }
  std::map<long, double> counts;
  for (long x = -t; x <= t; ++x) counts[x] = p[static_cast<std::size_t>(x + t)];
  return EmpiricalHistogram(t, counts);
}

namespace {

struct LinearModel {
  Eigen::VectorXd r;       // p_hat - rho_even, weighted
  Eigen::MatrixXd basis;   // columns: nu basis, alpha basis, weighted
  double objective(double nu, double alpha) const {
    return (r - nu * basis.col(0) - alpha * basis.col(1)).squaredNorm();
  }
};

LinearModel build_model(const EmpiricalHistogram& hist, double abs_a, const FitOptions& opts) {
  const long t = hist.t();
  const FoundationWindow w = foundation_window(abs_a, t);
  const std::vector<double> even = even_density(w);
  const OddBasis odd = odd_components(w);
  const auto& p = hist.probabilities();
  const long n = 2 * t + 1;
  LinearModel m{Eigen::VectorXd(n), Eigen::MatrixXd(n, 2)};
  for (long i = 0; i < n; ++i) {
    const double sw =
        opts.poisson_weighted ? 1.0 / std::sqrt(std::max(p[static_cast<std::size_t>(i)], opts.weight_floor)) : 1.0;
    m.r(i) = sw * (p[static_cast<std::size_t>(i)] - even[static_cast<std::size_t>(i)]);
    m.basis(i, 0) = sw * (2.0 * abs_a * odd.rho_mi[static_cast<std::size_t>(i)] - odd.rho_sq[static_cast<std::size_t>(i)]);
    m.basis(i, 1) = sw * odd.rho_mi[static_cast<std::size_t>(i)];
  }
  return m;
}

template <class F>
std::pair<double, double> minimize_1d(F f, double lo, double hi, double tol) {
  const int bits = std::clamp(static_cast<int>(std::ceil(1.0 - std::log2(tol))), 8,
                              std::numeric_limits<double>::digits / 2 + 8);
  std::uintmax_t max_iter = 500;
  return boost::math::tools::brent_find_minima(f, lo, hi, bits, max_iter);
}

// Feasible set boundary: nu = cos(theta)/2, alpha = sqrt(1-|a|^2) sin(theta).
SymmetryFit best_on_boundary(const LinearModel& m, double abs_a) {
  const double amax = std::sqrt(std::max(0.0, 1.0 - abs_a * abs_a));
  auto f = [&](double th) { return m.objective(0.5 * std::cos(th), amax * std::sin(th)); };
  constexpr int kSamples = 720;
  const double step = 2.0 * std::numbers::pi / kSamples;
  double best_th = 0.0, best = f(0.0);
  for (int i = 1; i < kSamples; ++i) {
    const double v = f(i * step);
    if (v < best) {
      best = v;
      best_th = i * step;
    }
  }
  auto [th, val] = minimize_1d(f, best_th - step, best_th + step, 1e-12);
  if (val > best) th = best_th;
  SymmetryFit fit;
  fit.nu = 0.5 * std::cos(th);
  fit.alpha = amax * std::sin(th);
  fit.residual = m.objective(fit.nu, fit.alpha);
  fit.clipped = true;
  return fit;
}

}  // namespace

SymmetryFit fit_symmetry_params(const EmpiricalHistogram& hist, double abs_a, const FitOptions& opts) {
  if (hist.t() < 1) {
    throw UnderdeterminedError("fit: t = 0 leaves a single site; the symmetry parameters are not identifiable");
  }
  if (!(abs_a >= 0.0 && abs_a <= 1.0)) throw DomainError("fit: |a| must lie in [0, 1]");
  const LinearModel m = build_model(hist, abs_a, opts);
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(m.basis);
  cod.setThreshold(1e-12);
  const Eigen::Vector2d sol = cod.solve(m.r);
  SymmetryFit fit{sol(0), sol(1), 0.0, false};
  if (!validate_effective(fit.nu, fit.alpha, abs_a)) return best_on_boundary(m, abs_a);
  fit.residual = m.objective(fit.nu, fit.alpha);
  return fit;
}

FitResult fit_walk(const EmpiricalHistogram& hist, const FitOptions& opts) {
  if (hist.t() < 2) throw UnderdeterminedError("fit_walk: t must be >= 2");
  const int n = std::max(opts.coarse_grid, 3);
  std::vector<double> grid(static_cast<std::size_t>(n)), res(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) grid[i] = static_cast<double>(i) / static_cast<double>(n - 1);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < n; ++i) res[i] = fit_symmetry_params(hist, grid[i], opts).residual;

  // Strict < keeps the smallest |a| on ties.
  int best = 0;
  for (int i = 1; i < n; ++i) {
    if (res[i] < res[best]) best = i;
  }
  const double lo = grid[std::max(best - 1, 0)], hi = grid[std::min(best + 1, n - 1)];
  auto f = [&](double a) { return fit_symmetry_params(hist, a, opts).residual; };
  auto [a_ref, r_ref] = minimize_1d(f, lo, hi, opts.abs_a_tolerance);
  double a_hat = r_ref < res[best] ? a_ref : grid[best];
  double r_hat = std::min(r_ref, res[best]);

  // Brent stops at about half the mantissa relative to |a|; a second pass
  // in an offset variable centred on the estimate reaches tol absolutely.
  const double h = std::max(4.0 * std::ldexp(1.0, -std::numeric_limits<double>::digits / 2) * a_hat, 1e-12);
  if (h > opts.abs_a_tolerance) {
    const double c = a_hat;
    const double s_lo = (std::max(lo, c - h) - c) / h, s_hi = (std::min(hi, c + h) - c) / h;
    auto g = [&](double s) { return f(c + s * h); };
    auto [s_ref, r_pol] = minimize_1d(g, s_lo, s_hi, opts.abs_a_tolerance / h);
    if (r_pol < r_hat) a_hat = c + s_ref * h;
  }

  const SymmetryFit inner = fit_symmetry_params(hist, a_hat, opts);
  FitResult out;
  out.abs_a_hat = a_hat;
  out.nu_hat = inner.nu;
  out.alpha_hat = inner.alpha;
  out.residual = inner.residual;
  out.feasible = validate_effective(inner.nu, inner.alpha, a_hat);
  return out;
}

}  // namespace qwalk
