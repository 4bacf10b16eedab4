#include "qwalk/moments.hpp"

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/foundation.hpp"

namespace qwalk {

namespace {

double ipow(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}


// Exact P^t_x as a polynomial, zero off the support.
class ExactLayers {
 public:
  explicit ExactLayers(long t_top) {
    for (long t = std::max(0L, t_top - 2); t <= t_top; ++t) layers_.emplace_back(t, foundation_layer(t));
  }
  IntPoly operator()(long t, long x) const {
    if (t < 0 || x < -t || x > t || ((x + t) % 2) != 0) return {};
    for (const auto& [lt, layer] : layers_) {
      if (lt == t) return layer[static_cast<std::size_t>((x + t) / 2)].as_poly();
    }
    throw DomainError("exact layer not cached");
  }

 private:
  std::vector<std::pair<long, PolynomialLayer>> layers_;
};

}  // namespace

double moment_from_density(const std::vector<double>& rho, long t, int n) {
  if (n < 0) throw DomainError("moment order must be >= 0");
  double s = 0.0;
  for (long x = -t; x <= t; ++x) s += ipow(static_cast<double>(x), n) * rho[static_cast<std::size_t>(x + t)];
  return s;
}

double moment_from_density(const DensityProfile& profile, int n) {
  return moment_from_density(profile.rho, profile.t, n);
}

double normalization_identity(double abs_a, long t) {
  if (t < 2) throw DomainError("normalization_identity: t must be >= 2");
  const FoundationWindow w = foundation_window(abs_a, t);
  double sq = 0.0, cross = 0.0;
  for (long x = -t; x <= t; ++x) {
    sq += w.utm1(x) * w.utm1(x);
    cross += w.ut(x) * w.utm2(x);
  }
  return std::abs(sq - cross - 1.0);
}

bool normalization_identity_exact(long t) {
  if (t < 2) throw DomainError("normalization_identity_exact: t must be >= 2");
  const ExactLayers P(t);
  IntPoly lhs, rhs;
  for (long x = -t; x <= t; ++x) {
    const IntPoly a = P(t - 1, x);
    lhs = lhs + a * a;
    rhs = rhs + P(t, x) * P(t - 2, x);
  }
  return lhs - rhs == IntPoly::constant(1);
}

double second_moment(double abs_a, long t) {
  if (t < 1) throw DomainError("second_moment: t must be >= 1");
  const FoundationWindow w = foundation_window(abs_a, t);
  double s = 0.0;
  for (long x = -t; x <= t; ++x) {
    const double x2 = static_cast<double>(x) * static_cast<double>(x);
    const double u1 = w.utm1(x);
    s += x2 * u1 * u1 - x2 * w.ut(x) * w.utm2(x) + u1 * u1;
  }
  return s;
}

IntPoly second_moment_polynomial(long t) {
  if (t < 1) throw DomainError("second_moment_polynomial: t must be >= 1");
  const ExactLayers P(t);
  IntPoly s;
  for (long x = -t; x <= t; ++x) {
    const IntPoly u1 = P(t - 1, x);
    const IntPoly sq = u1 * u1;
    s = s + (sq - P(t, x) * P(t - 2, x)).scaled(x * x) + sq;
  }
  return s;
}

namespace {

// Coefficients of the two odd sums. The printed moment formula keeps
// -nu on the squared term but flips the alpha sign.
OddCoefficients moment_coefficients(double abs_a, double nu, double alpha, SignConvention signs) {
  if (signs == SignConvention::Printed) return {2.0 * abs_a * nu - alpha, -nu};
  return odd_coefficients(abs_a, nu, alpha, SignConvention::Resolved);
}

}  // namespace

double odd_moment(double abs_a, double nu, double alpha, long t, int n, SignConvention signs) {
  require_feasible(nu, alpha, abs_a);
  if (t < 1) throw DomainError("odd_moment: t must be >= 1");
  if (n < 0) throw DomainError("odd_moment: n must be >= 0");
  const FoundationWindow w = foundation_window(abs_a, t);
  double s_mi = 0.0, s_sq = 0.0;
  for (long j = 0; j <= t - 1; ++j) {
    const long x = t - 2 * j;
    const double xp = ipow(static_cast<double>(x), 2 * n + 1);
    const double v = w.utm1(x - 1);
    s_mi += w.ut(x) * v * xp;
    s_sq += v * v * xp;
  }
  const OddCoefficients c = moment_coefficients(abs_a, nu, alpha, signs);
  return c.mi * 2.0 * s_mi + c.sq * 2.0 * s_sq;
}

double first_moment_table(double abs_a, double nu, double alpha, long t, SignConvention signs) {
  return odd_moment(abs_a, nu, alpha, t, 0, signs);
}

FirstMomentPolynomials first_moment_polynomials(long t) {
  if (t < 1) throw DomainError("first_moment_polynomials: t must be >= 1");
  const ExactLayers P(t);
  IntPoly s_mi, s_sq;
  for (long j = 0; j <= t - 1; ++j) {
    const long x = t - 2 * j;
    const IntPoly v = P(t - 1, x - 1);
    s_mi = s_mi + (P(t, x) * v).scaled(x);
    s_sq = s_sq + (v * v).scaled(x);
  }
  // <x> = (2|a| nu + alpha) 2 s_mi - nu 2 s_sq
  return {s_mi.shifted(1).scaled(4) - s_sq.scaled(2), s_mi.scaled(2)};
}

double variance(double abs_a, double nu, double alpha, long t, SignConvention signs) {
  const double mean = first_moment_table(abs_a, nu, alpha, t, signs);
  return second_moment(abs_a, t) - mean * mean;
}

double normalized_second(double abs_a, long t) {
  const double td = static_cast<double>(t);
  return second_moment(abs_a, t) / (td * td);
}

MomentReport moment_report(double abs_a, double nu, double alpha, long t, SignConvention signs) {
  MomentReport r;
  r.t = t;
  r.abs_a = abs_a;
  r.nu = nu;
  r.alpha = alpha;
  r.mean = first_moment_table(abs_a, nu, alpha, t, signs);
  r.second = second_moment(abs_a, t);
  r.variance = r.second - r.mean * r.mean;
  const double td = static_cast<double>(t);
  r.normalized_second = r.second / (td * td);
  return r;
}

}  // namespace qwalk
