#include <Eigen/LU>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qwalk/closed_form.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/verify.hpp"
#include "test_support.hpp"

using namespace qwalk;
using qwalk::testing::kInvSqrt2;
using qwalk::testing::max_amp_diff;

namespace {

double max_entry(const Matrix2c& m) { return m.cwiseAbs().maxCoeff(); }

Matrix2c matrix_power_oracle(const WalkSpec& s, double p, long t) {
  Matrix2c m = Matrix2c::Identity();
  const Matrix2c step = std::polar(1.0, s.k()) * step_matrix(s, p);
  for (long i = 0; i < t; ++i) m = step * m;
  return m;
}

}  // namespace

TEST_CASE("evolution operator at t = 1 reproduces one step") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (const WalkSpec& s : random_specs(5, 99)) {
    const EffectiveParams e = derive_effective(s);
    for (int i = 0; i < 10; ++i) {
      const double p = ang(rng);
      const Matrix2c S = step_matrix(s, p);
      const double y = e.abs_a * std::cos(p - e.d);
      // Cayley-Hamilton for a unimodular matrix
      CHECK(max_entry(S + S.adjoint() - 2.0 * y * Matrix2c::Identity()) <= 1e-14);
      CHECK(std::abs(S.determinant() - cplx(1.0, 0.0)) <= 1e-14);
      const Matrix2c t1 = evolution_operator(s, p, 1).matrix;
      CHECK(max_entry(t1 - std::polar(1.0, s.k()) * S) <= 1e-14);
      CHECK(std::abs(step_half_trace(s, p) - y) <= 1e-13);
    }
  }
}

TEST_CASE("evolution operator equals the matrix power") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(-std::numbers::pi, std::numbers::pi);
  for (const WalkSpec& s : random_specs(8, 123)) {
    for (long t : {1L, 2L, 3L, 10L, 57L, 128L}) {
      const double p = ang(rng);
      const Matrix2c m = evolution_operator(s, p, t).matrix;
      CHECK(max_entry(m - matrix_power_oracle(s, p, t)) <= 1e-11);
      CHECK(max_entry(m * m.adjoint() - Matrix2c::Identity()) <= 1e-12);
    }
  }
  const WalkSpec id = WalkSpec::make({1, 0}, {0, 0}, 0.4, {1, 0}, {0, 0});
  const Matrix2c m = evolution_operator(id, 0.0, 6).matrix;
  const cplx ph = std::polar(1.0, 6 * 0.4);
  CHECK(std::abs(m(0, 0) - ph) <= 1e-14);
  CHECK(std::abs(m(1, 1) - ph) <= 1e-14);
  CHECK(std::abs(m(0, 1)) <= 1e-14);
  CHECK_THROWS_AS(evolution_operator(id, 0.0, 0), DomainError);
}

TEST_CASE("momentum closed form") {
  const WalkSpec s = WalkSpec::from_polar(0.3, 0.2, 0.1, 0.7, 0.4, -0.5, 1.5);
  const MomentumSamples m0 = momentum_wavefunction(s, 0, 5);
  for (std::size_t j = 0; j < m0.p.size(); ++j) {
    CHECK(std::abs(m0.phi0[j] - s.c0()) <= 1e-15);
    CHECK(std::abs(m0.phi1[j] - s.c1()) <= 1e-15);
  }
  const MomentumSamples cf = momentum_wavefunction(WalkSpec::hadamard(), 64, 129);
  const MomentumSamples dir = evolve_momentum_direct(WalkSpec::hadamard(), 64, 129);
  double m = 0.0;
  for (std::size_t j = 0; j < cf.p.size(); ++j) {
    m = std::max({m, std::abs(cf.phi0[j] - dir.phi0[j]), std::abs(cf.phi1[j] - dir.phi1[j])});
  }
  CHECK(m <= 1e-11);
  for (const WalkSpec& r : random_specs(10, 17)) {
    const MomentumSamples w = momentum_wavefunction(r, 17, 64);
    for (std::size_t j = 0; j < w.p.size(); ++j) {
      CHECK(std::norm(w.phi0[j]) + std::norm(w.phi1[j]) == doctest::Approx(1.0).epsilon(1e-13));
    }
  }
  CHECK_THROWS_AS(momentum_wavefunction(s, 10, 20), AliasingError);
}

TEST_CASE("position closed form by hand") {
  const WalkSpec s = WalkSpec::from_polar(0.3, 0.2, 0.1, 0.7, 0.4, -0.5, 1.5);
  const WaveField f0 = position_wavefunction(s, 0);
  CHECK(f0.psi0[0] == s.c0());
  CHECK(f0.psi1[0] == s.c1());
  const WaveField h = position_wavefunction(WalkSpec::hadamard(), 1);
  CHECK(std::abs(h.at0(1) - cplx(kInvSqrt2, 0)) <= 1e-15);
  CHECK(std::abs(h.at1(-1) - cplx(-kInvSqrt2, 0)) <= 1e-15);
  CHECK(std::abs(h.at0(-1)) <= 1e-15);
  CHECK(std::abs(h.at1(1)) <= 1e-15);
}

TEST_CASE("position closed form matches direct evolution") {
  double m = 0.0;
  for (const WalkSpec& s : random_specs(50, 2024)) {
    for (long t : {1L, 2L, 3L, 8L, 31L, 64L, 128L}) {
      m = std::max(m, max_amp_diff(position_wavefunction(s, t), evolve_direct(s, t)));
    }
  }
  CHECK(m <= 1e-11);
}

TEST_CASE("overall phase is exp(i(xd + tk))") {
  for (const WalkSpec& s : random_specs(10, 8)) {
    const EffectiveParams e = derive_effective(s);
    const WalkSpec stripped = WalkSpec::make({e.abs_a, 0.0}, e.beta, 0.0, s.c0(), s.c1());
    const long t = 21;
    const WaveField full = position_wavefunction(s, t), bare = position_wavefunction(stripped, t);
    for (long x = -t; x <= t; ++x) {
      const cplx ph = std::polar(1.0, x * e.d + t * s.k());
      CHECK(std::abs(full.at0(x) - ph * bare.at0(x)) <= 1e-13);
      CHECK(std::abs(full.at1(x) - ph * bare.at1(x)) <= 1e-13);
      CHECK(std::abs(std::abs(full.at0(x)) - std::abs(bare.at0(x))) <= 1e-13);
    }
    // stripped amplitudes are real combinations of u-values times {c0, c1, beta}
    const EffectiveParams eb = derive_effective(stripped);
    CHECK(eb.d == 0.0);
    CHECK(std::abs(eb.beta - e.beta) <= 1e-15);
  }
}

TEST_CASE("position and momentum closed forms are Fourier pairs") {
  for (const WalkSpec& s : random_specs(6, 31)) {
    for (long t : {1L, 5L, 40L}) {
      const long n = 2 * t + 1;
      const MomentumSamples ft = fourier_transform(position_wavefunction(s, t), n);
      const MomentumSamples cf = momentum_wavefunction(s, t, n);
      double m = 0.0;
      for (std::size_t j = 0; j < ft.p.size(); ++j) {
        m = std::max({m, std::abs(ft.phi0[j] - cf.phi0[j]), std::abs(ft.phi1[j] - cf.phi1[j])});
      }
      CHECK(m <= 1e-10);
    }
  }
}
