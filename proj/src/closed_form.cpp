#include "qwalk/closed_form.hpp"

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/foundation.hpp"

namespace qwalk {

Matrix2c step_matrix(const WalkSpec& spec, double p) {
  const cplx em = std::polar(1.0, -p), ep = std::polar(1.0, p);
  Matrix2c s;
  s << spec.a() * em, spec.b() * em, -std::conj(spec.b()) * ep, std::conj(spec.a()) * ep;
  return s;
}

double step_half_trace(const WalkSpec& spec, double p) {
  return 0.5 * step_matrix(spec, p).trace().real();
}

EvolutionOperatorSample evolution_operator(const WalkSpec& spec, double p, long t) {
  if (t < 1) throw DomainError("evolution_operator: t must be >= 1");
  const EffectiveParams eff = derive_effective(spec);
  const double y = eff.abs_a * std::cos(p - eff.d);
  const ChebyshevPair u = chebyshev_u_pair(t, y);
  const Matrix2c s_inv = step_matrix(spec, p).adjoint();
  const cplx phase = std::polar(1.0, static_cast<double>(t) * spec.k());
  Matrix2c m = phase * (u.u_n * Matrix2c::Identity() - u.u_nm1 * s_inv);
  return {p, t, m};
}

MomentumSamples momentum_wavefunction(const WalkSpec& spec, long t, long grid_size) {
  if (t < 0) throw DomainError("momentum_wavefunction: t must be >= 0");
  if (grid_size < 2 * t + 1) {
    throw AliasingError("momentum grid of size " + std::to_string(grid_size) +
                        " aliases a position support of width " + std::to_string(2 * t + 1));
  }
  const EffectiveParams eff = derive_effective(spec);
  MomentumSamples out{t, momentum_grid(grid_size), {}, {}};
  out.phi0.resize(out.p.size());
  out.phi1.resize(out.p.size());
  const cplx phase = std::polar(1.0, static_cast<double>(t) * spec.k());
  const cplx c0 = spec.c0(), c1 = spec.c1(), beta = eff.beta;
#pragma omp parallel for schedule(static)
  for (long j = 0; j < grid_size; ++j) {
    const double q = out.p[j] - eff.d;
    const ChebyshevPair u = chebyshev_u_pair(t, eff.abs_a * std::cos(q));
    const cplx ep = std::polar(1.0, q), em = std::polar(1.0, -q);
    out.phi0[j] = phase * (u.u_n * c0 - u.u_nm1 * (eff.abs_a * ep * c0 - beta * em * c1));
    out.phi1[j] = phase * (u.u_n * c1 - u.u_nm1 * (std::conj(beta) * ep * c0 + eff.abs_a * em * c1));
  }
  return out;
}

WaveField position_wavefunction(const WalkSpec& spec, long t) {
  if (t < 0) throw DomainError("position_wavefunction: t must be >= 0");
  const EffectiveParams eff = derive_effective(spec);
  const FoundationWindow w = foundation_window(eff.abs_a, t);
  WaveField out;
  out.t = t;
  out.psi0.resize(static_cast<std::size_t>(2 * t + 1));
  out.psi1.resize(out.psi0.size());
  const cplx c0 = spec.c0(), c1 = spec.c1(), beta = eff.beta;
  const double abs_a = eff.abs_a;
  const long n = 2 * t + 1;
#pragma omp parallel for schedule(static) if (n > 2048)
  for (long i = 0; i < n; ++i) {
    const long x = i - t;
    const cplx phase = std::polar(1.0, static_cast<double>(x) * eff.d + static_cast<double>(t) * spec.k());
    const double f_pos = w.ut(x) - abs_a * w.utm1(x + 1);  // f_t(x)
    const double f_neg = w.ut(x) - abs_a * w.utm1(x - 1);  // f_t(-x), u even
    out.psi0[i] = phase * (c0 * f_pos + beta * c1 * w.utm1(x - 1));
    out.psi1[i] = phase * (c1 * f_neg - std::conj(beta) * c0 * w.utm1(x + 1));
  }
  return out;
}

}  // namespace qwalk
