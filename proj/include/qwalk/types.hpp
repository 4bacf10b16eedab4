#pragma once

#include <complex>
#include <string>

namespace qwalk {

using cplx = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;

/// Full physical parameterization of a translation-invariant coined walk
/// started at the origin: coin (a, b), per-step phase k, initial spinor
/// (c0, c1). Construct through make() so the unitarity constraints hold.
class WalkSpec {
 public:
  /// Throws InvalidInput when |a|^2+|b|^2 or |c0|^2+|c1|^2 deviates from 1
  /// by more than kNormTolerance, unless renormalize is set, in which case
  /// each pair is rescaled to unit norm.
  static WalkSpec make(cplx a, cplx b, double k, cplx c0, cplx c1,
                       bool renormalize = false);

  /// Polar form used by the spec-file format; |b| and |c1| are implied.
  static WalkSpec from_polar(double a_abs, double a_arg, double b_arg, double k,
                             double c0_abs, double c0_arg, double c1_arg);

  /// a = b = 1/sqrt(2), k = 0, c0 = 1, c1 = 0.
  static WalkSpec hadamard();

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  double k() const { return k_; }
  cplx c0() const { return c0_; }
  cplx c1() const { return c1_; }

 private:
  WalkSpec(cplx a, cplx b, double k, cplx c0, cplx c1)
      : a_(a), b_(b), k_(k), c0_(c0), c1_(c1) {}

  cplx a_, b_;
  double k_;
  cplx c0_, c1_;
};

/// The reduced parameters that determine the probability density:
/// |a| controls the spreading, nu and alpha only the symmetry.
struct EffectiveParams {
  double abs_a = 0.0;
  double d = 0.0;  // arg a
  cplx beta{};     // b * exp(-i d)
  double nu = 0.0;
  double alpha = 0.0;
  double delta = 0.0;
};

struct LatticeIndex {
  long x = 0;
  long t = 0;

  /// Site reachable from the origin after t steps.
  bool reachable() const { return t >= 0 && (x >= -t && x <= t) && ((x + t) % 2 == 0); }
};

EffectiveParams derive_effective(const WalkSpec& spec);

/// Feasibility of (nu, alpha) for a given |a|:
/// nu in [-1/2, 1/2], |a| in [0, 1], alpha^2 <= (1-|a|^2)(1-4nu^2) + 1e-12.
bool validate_effective(double nu, double alpha, double abs_a);

/// Throws DomainError when validate_effective fails.
void require_feasible(double nu, double alpha, double abs_a);

/// Walk-spec JSON object with keys a_abs, a_arg, b_arg, k, c0_abs, c0_arg,
/// c1_arg (angles in radians; all keys except a_abs and c0_abs default to 0).
WalkSpec spec_from_json(const std::string& text);
std::string spec_to_json(const WalkSpec& spec);

}  // namespace qwalk
