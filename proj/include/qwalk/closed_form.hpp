#pragma once

#include <Eigen/Core>

#include "qwalk/oracle.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

using Matrix2c = Eigen::Matrix2cd;

/// One-step momentum-space matrix S(p) (unimodular, unitary).
Matrix2c step_matrix(const WalkSpec& spec, double p);

/// Half-trace of S(p); equals cos of the rotation angle, |a| cos(p - d).
double step_half_trace(const WalkSpec& spec, double p);

struct EvolutionOperatorSample {
  double p = 0.0;
  long t = 0;
  Matrix2c matrix;
};

/// T(t,0)(p) = e^{itk} [U_t(y) I - U_{t-1}(y) S^{-1}(p)], y = |a| cos(p - d).
/// S^{-1} is taken as the adjoint of S. Requires t >= 1.
EvolutionOperatorSample evolution_operator(const WalkSpec& spec, double p, long t);

/// Closed-form momentum spinor on momentum_grid(grid_size).
/// Throws AliasingError when grid_size < 2t+1.
MomentumSamples momentum_wavefunction(const WalkSpec& spec, long t, long grid_size);

/// Closed-form position amplitudes assembled from foundation functions:
///   psi0(x) = e^{i(xd+tk)} [c0 f_t(x)  + beta  c1 u_{t-1}(x-1)]
///   psi1(x) = e^{i(xd+tk)} [c1 f_t(-x) - beta* c0 u_{t-1}(x+1)]
/// with f_t(x) = u_t(x) - |a| u_{t-1}(x+1).
WaveField position_wavefunction(const WalkSpec& spec, long t);

}  // namespace qwalk
