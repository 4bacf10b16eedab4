#pragma once

// Direct evolution of the walk, kept deliberately literal: it is the
// ground truth every closed form is checked against.

#include <cstddef>
#include <vector>

#include "qwalk/types.hpp"

namespace qwalk {

/// Spinor amplitudes over x in [-t, t]; index i holds site x = i - t.
struct WaveField {
  long t = 0;
  std::vector<cplx> psi0;
  std::vector<cplx> psi1;

  static WaveField initial(const WalkSpec& spec);

  std::size_t index(long x) const { return static_cast<std::size_t>(x + t); }
  bool in_support(long x) const { return x >= -t && x <= t; }
  cplx at0(long x) const { return in_support(x) ? psi0[index(x)] : cplx{}; }
  cplx at1(long x) const { return in_support(x) ? psi1[index(x)] : cplx{}; }

  double total_probability() const;
};

struct EvolveOptions {
  long max_steps = 100000;
};

/// One application of the coin-and-shift rule. Parallel over sites.
WaveField step(const WaveField& field, const WalkSpec& spec);

WaveField evolve_direct(const WalkSpec& spec, long t, const EvolveOptions& opts = {});

/// Spinor samples on p_j = -pi + 2 pi j / n.
struct MomentumSamples {
  long t = 0;
  std::vector<double> p;
  std::vector<cplx> phi0;
  std::vector<cplx> phi1;
};

std::vector<double> momentum_grid(long grid_size);

/// Repeated multiplication by exp(ik) S(p) at each grid point.
/// Throws AliasingError when grid_size < 2t+1.
MomentumSamples evolve_momentum_direct(const WalkSpec& spec, long t, long grid_size);

/// phi(p) = sum_x psi(x) exp(-i x p) sampled on momentum_grid(grid_size).
MomentumSamples fourier_transform(const WaveField& field, long grid_size);

namespace reference {
/// Single-threaded step, bit-identical to qwalk::step.
WaveField step(const WaveField& field, const WalkSpec& spec);
}  // namespace reference

}  // namespace qwalk
