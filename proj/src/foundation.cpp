#include "qwalk/foundation.hpp"

#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk {

double chebyshev_u(long n, double y) {
  if (n < -1) throw DomainError("chebyshev_u: degree must be >= -1");
  return chebyshev_u_pair(n, y).u_n;
}

ChebyshevPair chebyshev_u_pair(long n, double y) {
  if (n < 0) return {0.0, 0.0};  // U_{-1} = 0, U_{-2} unused
  double prev = 0.0, cur = 1.0;
  for (long i = 0; i < n; ++i) {
    const double next = 2.0 * y * cur - prev;
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

FoundationTable::FoundationTable(double abs_a, long t_max) : abs_a_(abs_a), t_max_(t_max) {
  if (!(abs_a >= 0.0 && abs_a <= 1.0)) throw DomainError("foundation table: |a| must lie in [0, 1]");
  if (t_max < 0) throw DomainError("foundation table: t_max must be >= 0");
  values_.assign(static_cast<std::size_t>((t_max + 1) * (t_max + 1)), 0.0);
  values_[0] = 1.0;
}

std::span<const double> FoundationTable::row(long t) const {
  if (t < 0 || t > t_max_) return {};
  return {values_.data() + t * t, static_cast<std::size_t>(2 * t + 1)};
}

namespace {

// Row t+1 from rows t and t-1; `cur` covers [-t, t], `prev` covers [-t+1, t-1].
inline double next_value(double abs_a, const double* cur, const double* prev, long t, long x) {
  auto cur_at = [&](long y) { return (y < -t || y > t) ? 0.0 : cur[y + t]; };
  const long tp = t - 1;
  const double pv = (prev == nullptr || x < -tp || x > tp) ? 0.0 : prev[x + tp];
  return abs_a * (cur_at(x + 1) + cur_at(x - 1)) - pv;
}

constexpr long kParallelRowThreshold = 2048;

}  // namespace

FoundationTable foundation_table(double abs_a, long t_max) {
  FoundationTable table(abs_a, t_max);
  double* v = table.values_.data();
  for (long t = 0; t < t_max; ++t) {
    const double* cur = v + t * t;
    const double* prev = t >= 1 ? v + (t - 1) * (t - 1) : nullptr;
    double* out = v + (t + 1) * (t + 1);
    const long n = 2 * (t + 1) + 1;
#pragma omp parallel for schedule(static) if (n > kParallelRowThreshold)
    for (long i = 0; i < n; ++i) out[i] = next_value(abs_a, cur, prev, t, i - (t + 1));
  }
  return table;
}

FoundationTable foundation_table_serial(double abs_a, long t_max) {
  FoundationTable table(abs_a, t_max);
  double* v = table.values_.data();
  for (long t = 0; t < t_max; ++t) {
    const double* cur = v + t * t;
    const double* prev = t >= 1 ? v + (t - 1) * (t - 1) : nullptr;
    double* out = v + (t + 1) * (t + 1);
    for (long i = 0; i < 2 * (t + 1) + 1; ++i) out[i] = next_value(abs_a, cur, prev, t, i - (t + 1));
  }
  return table;
}

FoundationWindow foundation_window(double abs_a, long t) {
  if (!(abs_a >= 0.0 && abs_a <= 1.0)) throw DomainError("foundation window: |a| must lie in [0, 1]");
  if (t < 0) throw DomainError("foundation window: t must be >= 0");
  const std::size_t width = static_cast<std::size_t>(2 * t + 1);
  // All rows laid out over [-t, t]. The scratch row always holds u_{s-2},
  // whose support sits inside the range written for u_{s+1}.
  std::vector<double> older(width, 0.0), prev(width, 0.0), cur(width, 0.0);
  cur[static_cast<std::size_t>(t)] = 1.0;
  for (long s = 0; s < t; ++s) {
    const long n = 2 * (s + 1) + 1;
    const double* c = cur.data();
    const double* p = prev.data();
    double* out = older.data();
#pragma omp parallel for schedule(static) if (n > kParallelRowThreshold)
    for (long i = 0; i < n; ++i) {
      const long x = i - (s + 1);
      const double left = (x - 1 >= -s) ? c[x - 1 + t] : 0.0;
      const double right = (x + 1 <= s) ? c[x + 1 + t] : 0.0;
      out[x + t] = abs_a * (left + right) - p[x + t];
    }
    std::swap(older, prev);  // older = u_{s-1}, prev = u_{s+1}
    std::swap(prev, cur);    // prev = u_s, cur = u_{s+1}
  }
  FoundationWindow w;
  w.t = t;
  w.abs_a = abs_a;
  w.u_t = std::move(cur);
  w.u_tm1 = std::move(prev);
  w.u_tm2 = std::move(older);
  return w;
}

IntPoly PolynomialRow::as_poly() const {
  IntPoly p;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (coeffs[m] != 0) p = p + IntPoly::monomial(coeffs[m], static_cast<std::size_t>(t - 2 * static_cast<long>(m)));
  }
  return p;
}

namespace {

void check_row_index(long t, long k) {
  if (t < 0) throw DomainError("foundation polynomial: t must be >= 0");
  if (k < -t || k > t) throw DomainError("foundation polynomial: |k| must not exceed t");
  if (((t - k) % 2 + 2) % 2 != 0) throw DomainError("foundation polynomial: k and t must share parity");
}

PolynomialRow series_row(long t, long k) {
  const long j = (t - k) / 2;
  PolynomialRow row{t, k, std::vector<int128>(static_cast<std::size_t>(t / 2 + 1), 0)};
  for (long m = 0; m <= t / 2; ++m) {
    const int128 c = checked_mul(binomial(t - m, m), binomial(t - 2 * m, j - m));
    row.coeffs[static_cast<std::size_t>(m)] = (m % 2 == 0) ? c : -c;
  }
  return row;
}

}  // namespace

long exact_row_ceiling() {
  static const long ceiling = [] {
    long t = 0;
    try {
      for (;; ++t) {
        for (long k = -t; k <= t; k += 2) (void)series_row(t, k);
      }
    } catch (const OverflowError&) {
    }
    return t - 1;
  }();
  return ceiling;
}

PolynomialRow foundation_polynomial(long t, long k) {
  check_row_index(t, k);
  try {
    return series_row(t, k);
  } catch (const OverflowError&) {
    throw OverflowError("foundation polynomial P^" + std::to_string(t) + "_" + std::to_string(k) +
                        " overflows exact 128-bit arithmetic; use foundation_table instead");
  }
}

PolynomialLayer foundation_layer(long t) {
  PolynomialLayer layer;
  for (long k = -t; k <= t; k += 2) layer.push_back(foundation_polynomial(t, k));
  return layer;
}

namespace {

IntPoly layer_poly(const PolynomialLayer& layer, long t, long k) {
  if (t < 0 || k < -t || k > t) return {};
  const auto idx = static_cast<std::size_t>((k + t) / 2);
  if (idx >= layer.size() || layer[idx].k != k) throw DomainError("polynomial layer is inconsistent");
  return layer[idx].as_poly();
}

}  // namespace

PolynomialLayer polynomial_row_recursion(const PolynomialLayer& row_t, const PolynomialLayer& row_tm1) {
  if (row_t.empty()) throw DomainError("polynomial recursion: row t is empty");
  const long t = row_t.front().t;
  if (static_cast<long>(row_t.size()) != t + 1) throw DomainError("polynomial recursion: row t is incomplete");
  if (t >= 1 && static_cast<long>(row_tm1.size()) != t) throw DomainError("polynomial recursion: row t-1 is incomplete");
  if (t == 0 && !row_tm1.empty()) throw DomainError("polynomial recursion: row -1 must be empty");
  for (const auto& r : row_tm1) {
    if (r.t != t - 1) throw DomainError("polynomial recursion: rows are not adjacent");
  }
  const long tn = t + 1;
  PolynomialLayer out;
  for (long k = -tn; k <= tn; k += 2) {
    IntPoly p = (layer_poly(row_t, t, k + 1) + layer_poly(row_t, t, k - 1)).shifted(1) -
                layer_poly(row_tm1, t - 1, k);
    PolynomialRow row{tn, k, std::vector<int128>(static_cast<std::size_t>(tn / 2 + 1), 0)};
    for (long m = 0; m <= tn / 2; ++m) row.coeffs[static_cast<std::size_t>(m)] = p.coeff(static_cast<std::size_t>(tn - 2 * m));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<PolynomialLayer> polynomial_layers_by_recursion(long t_max) {
  std::vector<PolynomialLayer> layers;
  layers.push_back({PolynomialRow{0, 0, {1}}});
  PolynomialLayer empty;
  for (long t = 0; t < t_max; ++t) {
    const PolynomialLayer& prev = t >= 1 ? layers[static_cast<std::size_t>(t - 1)] : empty;
    layers.push_back(polynomial_row_recursion(layers[static_cast<std::size_t>(t)], prev));
  }
  return layers;
}

QuadratureResult u_by_quadrature(double abs_a, long t, long x, long n_points) {
  if (t < 0) throw DomainError("quadrature: t must be >= 0");
  if (n_points <= 0) n_points = 4 * t + 4;
  const bool warn = n_points < 2 * t + 2;
  const double pi = std::numbers::pi;
  double sum = 0.0;
  for (long j = 0; j < n_points; ++j) {
    const double p = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(n_points);
    sum += chebyshev_u(t, abs_a * std::cos(p)) * std::cos(static_cast<double>(x) * p);
  }
  return {sum / static_cast<double>(n_points), warn};
}

}  // namespace qwalk
