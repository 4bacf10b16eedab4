#include "qwalk/oracle.hpp"

#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"

namespace qwalk {

WaveField WaveField::initial(const WalkSpec& spec) {
  return WaveField{0, {spec.c0()}, {spec.c1()}};
}

double WaveField::total_probability() const {
  double s = 0.0;
  for (std::size_t i = 0; i < psi0.size(); ++i) s += std::norm(psi0[i]) + std::norm(psi1[i]);
  return s;
}

namespace {

constexpr long kParallelSiteThreshold = 2048;

// psi0(x) = e^{ik}[a psi0(x-1) + b psi1(x-1)]
// psi1(x) = e^{ik}[-b* psi0(x+1) + a* psi1(x+1)]
inline void step_site(const WaveField& in, const cplx& a, const cplx& b, const cplx& phase,
                      long x, cplx& out0, cplx& out1) {
  out0 = phase * (a * in.at0(x - 1) + b * in.at1(x - 1));
  out1 = phase * (-std::conj(b) * in.at0(x + 1) + std::conj(a) * in.at1(x + 1));
}

WaveField empty_successor(const WaveField& field) {
  WaveField out;
  out.t = field.t + 1;
  out.psi0.assign(static_cast<std::size_t>(2 * out.t + 1), cplx{});
  out.psi1.assign(out.psi0.size(), cplx{});
  return out;
}

}  // namespace

WaveField step(const WaveField& field, const WalkSpec& spec) {
  WaveField out = empty_successor(field);
  const cplx a = spec.a(), b = spec.b(), phase = std::polar(1.0, spec.k());
  const long n = static_cast<long>(out.psi0.size());
#pragma omp parallel for schedule(static) if (n > kParallelSiteThreshold)
  for (long i = 0; i < n; ++i) step_site(field, a, b, phase, i - out.t, out.psi0[i], out.psi1[i]);
  return out;
}

namespace reference {

WaveField step(const WaveField& field, const WalkSpec& spec) {
  WaveField out = empty_successor(field);
  const cplx a = spec.a(), b = spec.b(), phase = std::polar(1.0, spec.k());
  for (long x = -out.t; x <= out.t; ++x) {
    step_site(field, a, b, phase, x, out.psi0[out.index(x)], out.psi1[out.index(x)]);
  }
  return out;
}

}  // namespace reference

WaveField evolve_direct(const WalkSpec& spec, long t, const EvolveOptions& opts) {
  if (t < 0) throw DomainError("evolve_direct: t must be >= 0");
  if (t > opts.max_steps) {
    throw ResourceLimit("evolve_direct: t = " + std::to_string(t) + " exceeds the configured maximum " +
                        std::to_string(opts.max_steps));
  }
  WaveField field = WaveField::initial(spec);
  for (long s = 0; s < t; ++s) field = step(field, spec);
  return field;
}

std::vector<double> momentum_grid(long grid_size) {
  std::vector<double> p(static_cast<std::size_t>(grid_size));
  const double pi = std::numbers::pi;
  for (long j = 0; j < grid_size; ++j) p[j] = -pi + 2.0 * pi * static_cast<double>(j) / static_cast<double>(grid_size);
  return p;
}

namespace {

void require_grid(long t, long grid_size) {
  if (t < 0) throw DomainError("momentum evolution: t must be >= 0");
  if (grid_size < 2 * t + 1) {
    throw AliasingError("momentum grid of size " + std::to_string(grid_size) +
                        " aliases a position support of width " + std::to_string(2 * t + 1));
  }
}

}  // namespace

MomentumSamples evolve_momentum_direct(const WalkSpec& spec, long t, long grid_size) {
  require_grid(t, grid_size);
  MomentumSamples out{t, momentum_grid(grid_size), {}, {}};
  out.phi0.resize(out.p.size());
  out.phi1.resize(out.p.size());
  const cplx a = spec.a(), b = spec.b(), phase = std::polar(1.0, spec.k());
#pragma omp parallel for schedule(static)
  for (long j = 0; j < grid_size; ++j) {
    const cplx em = std::polar(1.0, -out.p[j]), ep = std::polar(1.0, out.p[j]);
    const cplx s00 = phase * a * em, s01 = phase * b * em;
    const cplx s10 = -phase * std::conj(b) * ep, s11 = phase * std::conj(a) * ep;
    cplx f0 = spec.c0(), f1 = spec.c1();
    for (long s = 0; s < t; ++s) {
      const cplx n0 = s00 * f0 + s01 * f1;
      const cplx n1 = s10 * f0 + s11 * f1;
      f0 = n0;
      f1 = n1;
    }
    out.phi0[j] = f0;
    out.phi1[j] = f1;
  }
  return out;
}

MomentumSamples fourier_transform(const WaveField& field, long grid_size) {
  require_grid(field.t, grid_size);
  MomentumSamples out{field.t, momentum_grid(grid_size), {}, {}};
  out.phi0.assign(out.p.size(), cplx{});
  out.phi1.assign(out.p.size(), cplx{});
#pragma omp parallel for schedule(static)
  for (long j = 0; j < grid_size; ++j) {
    cplx s0{}, s1{};
    for (long x = -field.t; x <= field.t; ++x) {
      const cplx e = std::polar(1.0, -static_cast<double>(x) * out.p[j]);
      s0 += field.psi0[field.index(x)] * e;
      s1 += field.psi1[field.index(x)] * e;
    }
    out.phi0[j] = s0;
    out.phi1[j] = s1;
  }
  return out;
}

}  // namespace qwalk
