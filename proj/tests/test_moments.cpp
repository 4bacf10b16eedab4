#include <cmath>
#include <random>

#include "doctest.h"
#include "qwalk/densities.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/moments.hpp"
#include "test_support.hpp"

using namespace qwalk;
using qwalk::testing::kInvSqrt2;
using qwalk::testing::spec_for;

namespace {

IntPoly poly(std::initializer_list<std::pair<int, long>> terms) {
  IntPoly p;
  for (const auto& [power, c] : terms) p = p + IntPoly::monomial(c, static_cast<std::size_t>(power));
  return p;
}

std::vector<double> sample_abs_a(int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(static_cast<double>(i) / (n - 1));
  return v;
}

}  // namespace

TEST_CASE("moment_from_density") {
  const WalkSpec h = WalkSpec::hadamard();
  const std::vector<double> rho = density_of(evolve_direct(h, 2));
  CHECK(moment_from_density(rho, 2, 0) == doctest::Approx(1.0));
  CHECK(std::abs(moment_from_density(rho, 2, 1)) <= 1e-15);
  CHECK(moment_from_density(rho, 2, 2) == doctest::Approx(2.0));
  CHECK_THROWS_AS(moment_from_density(rho, 2, -1), DomainError);

  EffectiveParams e;
  e.abs_a = 0.33;
  const DensityProfile even = total_density(e, 21);
  for (int n : {1, 3, 5}) CHECK(std::abs(moment_from_density(even, n)) <= 1e-12);
}

TEST_CASE("normalization identity") {
  CHECK(normalization_identity(kInvSqrt2, 3) <= 1e-13);
  for (long t = 2; t <= 100; ++t) CHECK(normalization_identity(1.0, t) <= 1e-12);
  for (long t = 2; t <= 100; t += 2) CHECK(normalization_identity(0.0, t) <= 1e-13);
  for (long t = 2; t <= 40; ++t) CHECK(normalization_identity_exact(t));
  CHECK_THROWS_AS(normalization_identity(0.5, 1), DomainError);
}

TEST_CASE("second-moment polynomials as printed") {
  const std::vector<IntPoly> printed = {
      poly({{0, 1}}),
      poly({{2, 4}}),
      poly({{4, 8}, {0, 1}}),
      poly({{6, 24}, {4, -24}, {2, 16}}),
      poly({{8, 80}, {6, -128}, {4, 72}, {0, 1}}),
      poly({{10, 280}, {8, -600}, {6, 464}, {4, -144}, {2, 36}}),
  };
  for (long t = 1; t <= 6; ++t) {
    const IntPoly& p = printed[static_cast<std::size_t>(t - 1)];
    CAPTURE(t);
    CHECK(second_moment_polynomial(t) == p);
    CHECK(p.at_one() == t * t);
    for (double a : sample_abs_a(20)) CHECK(std::abs(second_moment(a, t) - p.evaluate(a)) <= 1e-12);
  }
  CHECK(second_moment(kInvSqrt2, 4) == doctest::Approx(5.0).epsilon(1e-14));
}

TEST_CASE("second moment boundary and oracle agreement") {
  for (long t = 1; t <= 100; ++t) {
    const double td = static_cast<double>(t);
    CHECK(std::abs(second_moment(1.0, t) - td * td) <= 1e-12 * td * td);
    CHECK(normalized_second(1.0, t) == doctest::Approx(1.0).epsilon(1e-12));
    if (t % 2 == 1) CHECK(normalized_second(0.0, t) == doctest::Approx(1.0 / (td * td)));
  }
  for (long t = 1; t <= 40; ++t) CHECK(second_moment_polynomial(t).at_one() == t * t);
  // at interior |a|, M_t decreases from t = 1 to t = 2
  for (double a : {0.3, 0.5, 0.7}) CHECK(normalized_second(a, 2) < normalized_second(a, 1));
  // second moment never reads nu or alpha
  const WalkSpec s1 = spec_for(0.42, 0.1, 0.2), s2 = spec_for(0.42, -0.3, -0.5);
  const double m1 = moment_from_density(density_of(evolve_direct(s1, 64)), 64, 2);
  const double m2 = moment_from_density(density_of(evolve_direct(s2, 64)), 64, 2);
  CHECK(std::abs(m1 - second_moment(0.42, 64)) <= 1e-10);
  CHECK(std::abs(m2 - second_moment(0.42, 64)) <= 1e-10);
}

TEST_CASE("first-moment polynomials") {
  // nu parts as printed; alpha parts follow from the oracle
  const std::vector<std::pair<long, IntPoly>> nu_parts = {
      {2, poly({{4, 8}, {2, -4}})},
      {3, poly({{6, 24}, {4, -32}, {2, 16}, {0, -2}})},
      {4, poly({{8, 80}, {6, -152}, {4, 96}, {2, -16}})},
      {5, poly({{10, 280}, {8, -680}, {6, 592}, {4, -216}, {2, 36}, {0, -2}})},
  };
  for (const auto& [t, p] : nu_parts) {
    CAPTURE(t);
    const FirstMomentPolynomials f = first_moment_polynomials(t);
    CHECK(f.nu_part == p);
    CHECK(p.at_one() == 2 * t);
    for (double a : sample_abs_a(20)) {
      CHECK(std::abs(first_moment_table(a, 0.5, 0.0, t) - 0.5 * p.evaluate(a)) <= 1e-12);
    }
  }
  const FirstMomentPolynomials f1 = first_moment_polynomials(1);
  CHECK(f1.nu_part == poly({{2, 4}, {0, -2}}));
  CHECK(f1.alpha_part == poly({{1, 2}}));
}

TEST_CASE("first-moment examples") {
  for (long t = 1; t <= 100; ++t) {
    const double td = static_cast<double>(t);
    for (double nu : {-0.5, -0.1, 0.25, 0.5}) {
      CHECK(std::abs(first_moment_table(1.0, nu, 0.0, t) - 2.0 * nu * td) <= 1e-12 * td);
    }
  }
  CHECK(first_moment_table(1.0, 0.5, 0.0, 5) == doctest::Approx(5.0));
  CHECK(std::abs(first_moment_table(kInvSqrt2, 0.5, 0.0, 1)) <= 1e-15);
  CHECK(first_moment_table(kInvSqrt2, 0.0, kInvSqrt2, 1) == doctest::Approx(1.0));
  CHECK(first_moment_table(kInvSqrt2, 0.0, kInvSqrt2, 1, SignConvention::Printed) == doctest::Approx(-1.0));
  for (long t = 1; t <= 20; ++t) {
    for (int n = 0; n <= 3; ++n) CHECK(odd_moment(0.6, 0.0, 0.0, t, n) == 0.0);
  }
  CHECK_THROWS_AS(odd_moment(0.9, 0.0, 0.9, 3, 0), DomainError);
  CHECK_THROWS_AS(odd_moment(0.5, 0.0, 0.0, 3, -1), DomainError);
}

TEST_CASE("odd moments against oracle densities") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = qwalk::testing::random_feasible(rng);
    const long t = 1 + trial % 64;
    const WalkSpec s = spec_for(p.abs_a, p.nu, p.alpha, 0.3 * trial, 0.1, -0.7);
    const std::vector<double> rho = density_of(evolve_direct(s, t));
    CAPTURE(trial);
    CHECK(std::abs(first_moment_table(p.abs_a, p.nu, p.alpha, t) - moment_from_density(rho, t, 1)) <= 1e-10);
    CHECK(std::abs(second_moment(p.abs_a, t) - moment_from_density(rho, t, 2)) <= 1e-10);
    if (t <= 16) {
      const double scale = std::pow(static_cast<double>(t), 3);
      CHECK(std::abs(odd_moment(p.abs_a, p.nu, p.alpha, t, 1) - moment_from_density(rho, t, 3)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("variance") {
  for (long t = 1; t <= 60; ++t) {
    CHECK(std::abs(variance(0.0, 0.5, 0.0, t)) <= 1e-10);
    CHECK(std::abs(variance(1.0, 0.5, 0.0, t)) <= 1e-10 * static_cast<double>(t * t));
  }
  const WalkSpec h = WalkSpec::hadamard();
  const std::vector<double> rho = density_of(evolve_direct(h, 4));
  const double mean = moment_from_density(rho, 4, 1);
  CHECK(std::abs(variance(kInvSqrt2, 0.5, 0.0, 4) - (5.0 - mean * mean)) <= 1e-10);
  const MomentReport r = moment_report(0.5, 0.2, -0.1, 10);
  CHECK(r.variance == doctest::Approx(r.second - r.mean * r.mean));
  CHECK(r.second <= 100.0);
  CHECK(std::abs(r.mean) <= 10.0);
  CHECK(r.normalized_second == doctest::Approx(r.second / 100.0));
}

TEST_CASE("regimes") {
  for (double a : {0.0, 0.05, 0.1}) {
    for (long t = 1; t <= 30; ++t) {
      const double m = first_moment_table(a, 0.5, 0.0, t);
      CHECK(m >= -1.01);
      CHECK(m <= 0.01);
    }
  }
  for (double a : {0.8, 0.9, 1.0}) {
    for (long t = 2; t <= 30; ++t) CHECK(first_moment_table(a, 0.5, 0.0, t) > first_moment_table(a, 0.5, 0.0, t - 1));
  }
}
