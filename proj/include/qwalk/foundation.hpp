#pragma once

// Foundation functions u_t(|a|:x): the lattice Fourier coefficients of
// U_t(|a| cos p). Three independent constructions live here (three-term
// lattice recursion, exact integer power series, periodic quadrature) so
// each can be checked against the others.

#include <cstddef>
#include <span>
#include <vector>

#include "qwalk/exact_poly.hpp"

namespace qwalk {

/// Chebyshev polynomial of the second kind by forward recursion;
/// U_{-1} = 0, U_0 = 1. Requires n >= -1.
double chebyshev_u(long n, double y);

/// U_{n}(y) and U_{n-1}(y) from one recursion pass.
struct ChebyshevPair {
  double u_n;
  double u_nm1;
};
ChebyshevPair chebyshev_u_pair(long n, double y);

/// u_t(|a|:x) for 0 <= t <= t_max, stored row by row; row t covers
/// x in [-t, t] and starts at offset t^2. Out-of-range lookups (including
/// t = -1) return 0.
class FoundationTable {
 public:
  FoundationTable(double abs_a, long t_max);

  double abs_a() const { return abs_a_; }
  long t_max() const { return t_max_; }

  double operator()(long t, long x) const {
    if (t < 0 || t > t_max_ || x < -t || x > t) return 0.0;
    return values_[static_cast<std::size_t>(t * t + x + t)];
  }
  std::span<const double> row(long t) const;

 private:
  friend FoundationTable foundation_table(double, long);
  friend FoundationTable foundation_table_serial(double, long);

  double abs_a_;
  long t_max_;
  std::vector<double> values_;
};

/// Fills every row via u_{t+1}(x) = |a|[u_t(x+1) + u_t(x-1)] - u_{t-1}(x).
/// The per-row update is parallel over x.
FoundationTable foundation_table(double abs_a, long t_max);
FoundationTable foundation_table_serial(double abs_a, long t_max);

/// Rows t, t-1, t-2 only, with O(t) memory. Each row is indexed x + t
/// over the common range [-t, t].
struct FoundationWindow {
  long t = 0;
  double abs_a = 0.0;
  std::vector<double> u_t, u_tm1, u_tm2;

  double at(const std::vector<double>& row, long x) const {
    return (x < -t || x > t) ? 0.0 : row[static_cast<std::size_t>(x + t)];
  }
  double ut(long x) const { return at(u_t, x); }
  double utm1(long x) const { return at(u_tm1, x); }
  double utm2(long x) const { return at(u_tm2, x); }
};
FoundationWindow foundation_window(double abs_a, long t);

/// Exact coefficients of P^t_k(|a|) = sum_m coeffs[m] |a|^(t-2m),
/// m = 0 .. floor(t/2).
struct PolynomialRow {
  long t = 0;
  long k = 0;
  std::vector<int128> coeffs;

  IntPoly as_poly() const;
  double evaluate(double abs_a) const { return as_poly().evaluate(abs_a); }
};

/// Largest t for which every P^t_k is representable; beyond it
/// foundation_polynomial throws OverflowError.
long exact_row_ceiling();

/// Power-series construction:
/// P^t_{t-2j} = sum_m (-1)^m C(t-m, m) C(t-2m, j-m).
/// Throws DomainError when |k| > t or k and t differ in parity.
PolynomialRow foundation_polynomial(long t, long k);

/// All P^t_k for k = -t, -t+2, ..., t.
using PolynomialLayer = std::vector<PolynomialRow>;
PolynomialLayer foundation_layer(long t);

/// P^{t+1}_k = |a| P^t_{k+1} + |a| P^t_{k-1} - P^{t-1}_k on the exact
/// coefficient vectors. Layers must hold complete rows for t and t-1
/// (t-1 may be the empty layer when t = 0).
PolynomialLayer polynomial_row_recursion(const PolynomialLayer& row_t,
                                         const PolynomialLayer& row_tm1);

/// Layers 0..t_max built purely from the recursion seeded P^0_0 = 1.
std::vector<PolynomialLayer> polynomial_layers_by_recursion(long t_max);

/// Trapezoid rule for (1/2pi) int U_t(|a| cos p) e^{ixp} dp on a uniform
/// periodic grid; exact when n_points > t + |x|.
struct QuadratureResult {
  double value;
  bool precision_warning;  // n_points below 2t+2
};
QuadratureResult u_by_quadrature(double abs_a, long t, long x, long n_points = 0);

}  // namespace qwalk
