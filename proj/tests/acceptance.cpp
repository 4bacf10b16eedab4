// Acceptance run: one PASS/FAIL line per criterion.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/closed_form.hpp"
#include "qwalk/densities.hpp"
#include "qwalk/errata.hpp"
#include "qwalk/estimation.hpp"
#include "qwalk/foundation.hpp"
#include "qwalk/moments.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/verify.hpp"

using namespace qwalk;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

double amp_diff(const WaveField& x, const WaveField& y) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.psi0.size(); ++i) {
    m = std::max({m, std::abs(x.psi0[i] - y.psi0[i]), std::abs(x.psi1[i] - y.psi1[i])});
  }
  return m;
}

IntPoly poly(std::initializer_list<std::pair<int, long>> terms) {
  IntPoly p;
  for (const auto& [power, c] : terms) p = p + IntPoly::monomial(c, static_cast<std::size_t>(power));
  return p;
}

EffectiveParams effective(double a, double nu, double alpha) {
  EffectiveParams e;
  e.abs_a = a;
  e.nu = nu;
  e.alpha = alpha;
  return e;
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(QWALK_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void amplitudes(Outcome& o) {
  const auto t0 = Clock::now();
  double m = 0.0;
  for (const WalkSpec& s : random_specs(50, 1001)) {
    for (long t : {1L, 2L, 5L, 16L, 64L, 128L}) m = std::max(m, amp_diff(position_wavefunction(s, t), evolve_direct(s, t)));
  }
  const double dt = seconds_since(t0);
  o.detail << "max |psi_closed - psi_direct| = " << m << ", " << dt << " s";
  o.require(m <= 1e-11, "amplitude tolerance 1e-11");
  o.require(dt <= 60.0, "runtime 60 s");
}

void second_moments(Outcome& o) {
  const std::vector<IntPoly> printed = {
      poly({{0, 1}}),
      poly({{2, 4}}),
      poly({{4, 8}, {0, 1}}),
      poly({{6, 24}, {4, -24}, {2, 16}}),
      poly({{8, 80}, {6, -128}, {4, 72}, {0, 1}}),
      poly({{10, 280}, {8, -600}, {6, 464}, {4, -144}, {2, 36}}),
  };
  double m_poly = 0.0;
  for (long t = 1; t <= 6; ++t) {
    for (int i = 0; i < 20; ++i) {
      const double a = i / 19.0;
      m_poly = std::max(m_poly, std::abs(second_moment(a, t) - printed[static_cast<std::size_t>(t - 1)].evaluate(a)));
    }
  }
  double m_oracle = 0.0;
  for (const WalkSpec& s : random_specs(20, 1002)) {
    const double a = std::abs(s.a());
    for (long t : {1L, 2L, 5L, 16L, 40L, 64L}) {
      const double direct = moment_from_density(density_of(evolve_direct(s, t)), t, 2);
      m_oracle = std::max(m_oracle, std::abs(direct - second_moment(a, t)));
    }
  }
  o.detail << "printed polynomials max residual " << m_poly << ", oracle max residual " << m_oracle;
  o.require(m_poly <= 1e-12, "polynomial tolerance 1e-12");
  o.require(m_oracle <= 1e-10, "oracle tolerance 1e-10");
}

void boundary_law(Outcome& o) {
  double m2 = 0.0, m1 = 0.0;
  for (long t = 1; t <= 100; ++t) {
    const double td = static_cast<double>(t);
    m2 = std::max(m2, std::abs(second_moment(1.0, t) - td * td) / (td * td));
    for (double nu : {-0.5, -0.3, 0.0, 0.2, 0.5}) {
      m1 = std::max(m1, std::abs(first_moment_table(1.0, nu, 0.0, t) - 2.0 * nu * td) / td);
    }
  }
  o.detail << "max |<x^2> - t^2| / t^2 = " << m2 << ", max |<x> - 2 nu t| / t = " << m1;
  o.require(m2 <= 1e-12, "second moment");
  o.require(m1 <= 1e-12, "first moment");
}

void exact_identities(Outcome& o) {
  bool unit = true, same = true;
  const auto rec = polynomial_layers_by_recursion(40);
  for (long t = 0; t <= 40; ++t) {
    const PolynomialLayer series = foundation_layer(t);
    for (std::size_t i = 0; i < series.size(); ++i) {
      unit = unit && series[i].as_poly().at_one() == 1;
      same = same && series[i].as_poly() == rec[static_cast<std::size_t>(t)][i].as_poly();
    }
  }
  double m = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double a = 0.05 + 0.1 * i;
    for (long t = 2; t <= 60; ++t) m = std::max(m, normalization_identity(a, t));
  }
  o.detail << "P^t_k(1) = 1 for t <= 40: " << (unit ? "yes" : "no") << ", series == recursion: " << (same ? "yes" : "no")
           << ", normalization max residual " << m;
  o.require(unit, "unit value");
  o.require(same, "series vs recursion");
  o.require(m <= 1e-12, "normalization 1e-12");
}

void decomposition(Outcome& o) {
  double rec = 0.0, sym = 0.0;
  for (const WalkSpec& s : random_specs(25, 1005)) {
    for (long t : {1L, 3L, 16L, 64L}) {
      const DensityProfile p = density_profile(s, t);
      const std::vector<double> rho = density_of(evolve_direct(s, t));
      for (long i = 0; i <= 2 * t; ++i) {
        const long j = 2 * t - i;
        rec = std::max(rec, std::abs(p.rho_even[i] + p.rho_odd[i] - rho[i]));
        sym = std::max({sym, std::abs(p.rho_even[i] - p.rho_even[j]), std::abs(p.rho_odd[i] + p.rho_odd[j])});
      }
    }
  }
  std::mt19937_64 rng(1006);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double four = 0.0;
  for (int k = 0; k < 25; ++k) {
    const double a = u(rng), n1 = u(rng) - 0.5, n2 = u(rng) - 0.5;
    const double amax = std::sqrt((1 - a * a) * (1 - 4 * std::max(n1 * n1, n2 * n2)));
    const double a1 = (2 * u(rng) - 1) * amax, a2 = (2 * u(rng) - 1) * amax;
    const long t = 1 + k * 3;
    const auto r11 = total_density(effective(a, n1, a1), t).rho, r22 = total_density(effective(a, n2, a2), t).rho;
    const auto r12 = total_density(effective(a, n1, a2), t).rho, r21 = total_density(effective(a, n2, a1), t).rho;
    for (std::size_t i = 0; i < r11.size(); ++i) four = std::max(four, std::abs(r11[i] + r22[i] - r12[i] - r21[i]));
  }
  o.detail << "reconstruction " << rec << ", parity " << sym << ", four-point " << four;
  o.require(rec <= 1e-11, "reconstruction 1e-11");
  o.require(sym <= 1e-12, "parity 1e-12");
  o.require(four <= 1e-12, "four-point 1e-12");
}

void figures(Outcome& o) {
  const double h = 1.0 / std::numbers::sqrt2;
  const WalkSpec even = WalkSpec::make({h, 0}, {h, 0}, 0.0, {h, 0}, {0, h});
  const long t = 100;
  const DensityProfile p = density_profile(even, t);
  double sym = 0.0, sum = 0.0;
  long arg_pos = 0, arg_neg = 0;
  for (long x = -t; x <= t; ++x) {
    sum += p.at(p.rho, x);
    sym = std::max(sym, std::abs(p.at(p.rho, x) - p.at(p.rho, -x)));
    if (x > 0 && p.at(p.rho, x) > p.at(p.rho, arg_pos)) arg_pos = x;
    if (x < 0 && p.at(p.rho, x) > p.at(p.rho, arg_neg)) arg_neg = x;
  }
  const double norm_err = std::abs(sum - 1.0);
  o.detail << "even walk t=100: symmetry " << sym << ", norm " << norm_err << ", peaks at " << arg_neg << " and "
           << arg_pos;
  o.require(sym <= 1e-12, "symmetric");
  o.require(norm_err <= 1e-12, "normalized");
  o.require(arg_pos >= 60 && arg_pos <= 80 && -arg_neg >= 60 && -arg_neg <= 80, "peaks in [60, 80]");

  const std::vector<std::string> grids = {
      "sweep --kind density --t 100 --nus 0.5",           // odd component
      "sweep --kind density --t 100 --nus 0,0.25,0.5",    // nu family
      "sweep --kind foundation --t 99",                   // u_99, square, smoothed square
      "sweep --kind second --t-range 1:6 --grid 101",     // M_t
      "sweep --kind first --t-range 1:5 --grid 101",      // first moments
      "sweep --kind variance --t-range 1:5 --grid 101",   // normalized variance
  };
  int bad = 0;
  for (const auto& g : grids) bad += run_cli(g) != 0;
  o.require(bad == 0, std::to_string(bad) + " grid commands failed");

  double v_end = 0.0;
  for (long s = 1; s <= 100; ++s) {
    v_end = std::max({v_end, std::abs(variance(0.0, 0.5, 0.0, s)), std::abs(variance(1.0, 0.5, 0.0, s))});
  }
  o.detail << ", grids emitted " << grids.size() - bad << "/" << grids.size() << ", endpoint variance " << v_end;
  o.require(v_end <= 1e-10, "endpoint variance 1e-10");
}

void errata_values(Outcome& o) {
  const DivergenceCheck p4 = run_divergence_check("foundation-p4-0-unit-value");
  const DivergenceCheck m1 = run_divergence_check("first-moment-alpha-sign");
  const double h = 1.0 / std::numbers::sqrt2;
  const WalkSpec spec = WalkSpec::make({h, 0}, {h, 0}, 0.0, {h, 0}, {h, 0});
  const double oracle_mean = moment_from_density(density_of(evolve_direct(spec, 1)), 1, 1);
  const long p4_default = static_cast<long>(foundation_polynomial(4, 0).as_poly().at_one());
  o.detail << "P^4_0(1): printed " << p4.printed << ", default " << p4_default << "; <x>_1: printed " << m1.printed
           << ", default " << m1.resolved << ", oracle " << oracle_mean;
  o.require(p4.printed == 19.0 && p4_default == 1, "P^4_0");
  o.require(std::abs(m1.printed + 1.0) <= 1e-12, "printed first moment -1");
  o.require(std::abs(m1.resolved - oracle_mean) <= 1e-12 && std::abs(oracle_mean - 1.0) <= 1e-12, "default +1");

  VerifyConfig cfg;
  cfg.paper_signs = true;
  o.require(run_verification(cfg).all_pass(), "printed-sign verification run");
}

void estimation(Outcome& o) {
  const auto t0 = Clock::now();
  const std::vector<double> as = {0.2137, 0.3861, 0.5519, 0.7023, 0.8642};
  const std::vector<double> nus = {-0.4, -0.2, 0.0, 0.2, 0.4};
  const std::vector<double> fracs = {-0.8, -0.4, 0.0, 0.4, 0.8};
  double ea = 0.0, en = 0.0, eal = 0.0;
  int n = 0;
  for (double a : as) {
    for (double nu : nus) {
      for (double f : fracs) {
        const double alpha = f * std::sqrt((1 - a * a) * (1 - 4 * nu * nu));
        const auto h = EmpiricalHistogram::from_probabilities(50, total_density(effective(a, nu, alpha), 50).rho);
        const FitResult r = fit_walk(h);
        ea = std::max(ea, std::abs(r.abs_a_hat - a));
        en = std::max(en, std::abs(r.nu_hat - nu));
        eal = std::max(eal, std::abs(r.alpha_hat - alpha));
        ++n;
      }
    }
  }
  const double dt = seconds_since(t0);
  o.detail << n << " fits: max error |a| " << ea << ", nu " << en << ", alpha " << eal << ", " << dt << " s";
  o.require(ea <= 1e-3, "|a| 1e-3");
  o.require(en <= 1e-6, "nu 1e-6");
  o.require(eal <= 1e-6, "alpha 1e-6");
  o.require(dt <= 120.0, "runtime 120 s");
}

void regimes(Outcome& o) {
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i <= 10; ++i) {
    const double a = 0.01 * i;
    for (long t = 1; t <= 30; ++t) {
      const double m = first_moment_table(a, 0.5, 0.0, t);
      lo = std::min(lo, m);
      hi = std::max(hi, m);
    }
  }
  bool increasing = true;
  for (int i = 0; i <= 20; ++i) {
    const double a = 0.8 + 0.01 * i;
    for (long t = 2; t <= 30; ++t) {
      increasing = increasing && first_moment_table(a, 0.5, 0.0, t) > first_moment_table(a, 0.5, 0.0, t - 1);
    }
  }
  o.detail << "|a| <= 0.1: mean in [" << lo << ", " << hi << "]; |a| >= 0.8 strictly increasing: "
           << (increasing ? "yes" : "no");
  o.require(lo >= -1.01 && hi <= 0.01, "oscillatory bounds");
  o.require(increasing, "ballistic monotonicity");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
      {"oracle equivalence (amplitudes)", amplitudes},
      {"second-moment polynomials", second_moments},
      {"boundary law at |a| = 1", boundary_law},
      {"exact identities", exact_identities},
      {"density decomposition", decomposition},
      {"figure properties", figures},
      {"errata reproduction", errata_values},
      {"estimation round trip", estimation},
      {"regime properties", regimes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    o.detail.precision(3);
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.str().c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
