// qwalk: command-line front end for the walk library.

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qwalk/closed_form.hpp"
#include "qwalk/densities.hpp"
#include "qwalk/errata.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/estimation.hpp"
#include "qwalk/foundation.hpp"
#include "qwalk/io.hpp"
#include "qwalk/moments.hpp"
#include "qwalk/oracle.hpp"
#include "qwalk/verify.hpp"

using namespace qwalk;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitResource = 3;

struct SpecFlags {
  bool hadamard = false;
  std::string spec_file;
  std::optional<double> a_abs, b_abs, c0_abs, c1_abs;
  double a_arg = 0.0, b_arg = 0.0, k = 0.0, c0_arg = 0.0, c1_arg = 0.0;
  bool renormalize = false;
  std::vector<CLI::Option*> flag_opts;

  void attach(CLI::App* app) {
    auto* h = app->add_flag("--hadamard", hadamard, "Hadamard coin with c0 = 1");
    auto* f = app->add_option("--spec", spec_file, "Walk spec as a JSON file")->check(CLI::ExistingFile);
    flag_opts = {
        app->add_option("--a-abs", a_abs, "|a|"),
        app->add_option("--a-arg", a_arg, "arg a"),
        app->add_option("--b-abs", b_abs, "|b| (default sqrt(1 - |a|^2))"),
        app->add_option("--b-arg", b_arg, "arg b"),
        app->add_option("--k", k, "phase per step"),
        app->add_option("--c0-abs", c0_abs, "|c0| (default 1)"),
        app->add_option("--c0-arg", c0_arg, "arg c0"),
        app->add_option("--c1-abs", c1_abs, "|c1| (default sqrt(1 - |c0|^2))"),
        app->add_option("--c1-arg", c1_arg, "arg c1"),
    };
    app->add_flag("--renormalize", renormalize, "Rescale (a, b) and (c0, c1) to unit norm");
    h->excludes(f);
    for (auto* o : flag_opts) {
      h->excludes(o);
      f->excludes(o);
    }
  }

  bool any_flag() const {
    for (auto* o : flag_opts) {
      if (o->count() > 0) return true;
    }
    return false;
  }

  bool given() const { return hadamard || !spec_file.empty() || any_flag(); }

  WalkSpec build() const {
    if (hadamard) return WalkSpec::hadamard();
    if (!spec_file.empty()) return spec_from_json(read_file(spec_file));
    if (!a_abs) throw InvalidInput("no walk spec: use --hadamard, --spec or --a-abs");
    const double aa = *a_abs;
    const double ca = c0_abs.value_or(1.0);
    if (!(aa >= 0.0) || (!renormalize && aa > 1.0)) throw InvalidInput("--a-abs must lie in [0, 1]");
    if (!(ca >= 0.0) || (!renormalize && ca > 1.0)) throw InvalidInput("--c0-abs must lie in [0, 1]");
    const double ba = b_abs.value_or(std::sqrt(std::max(0.0, 1.0 - aa * aa)));
    const double c1 = c1_abs.value_or(std::sqrt(std::max(0.0, 1.0 - ca * ca)));
    return WalkSpec::make(std::polar(aa, a_arg), std::polar(ba, b_arg), k, std::polar(ca, c0_arg),
                          std::polar(c1, c1_arg), renormalize);
  }
};

struct TimeFlags {
  std::optional<long> t;
  std::string range;

  void attach(CLI::App* app, bool allow_range) {
    auto* o = app->add_option("--t", t, "Time step");
    if (allow_range) app->add_option("--t-range", range, "Inclusive range a:b")->excludes(o);
  }

  std::vector<long> values(long min_t) const {
    std::vector<long> out;
    if (!range.empty()) {
      const auto colon = range.find(':');
      if (colon == std::string::npos) throw InvalidInput("--t-range must look like a:b");
      long lo = 0, hi = 0;
      try {
        std::size_t p1 = 0, p2 = 0;
        lo = std::stol(range.substr(0, colon), &p1);
        hi = std::stol(range.substr(colon + 1), &p2);
        if (p1 != colon || p2 != range.size() - colon - 1) throw std::invalid_argument("trailing");
      } catch (const std::logic_error&) {
        throw InvalidInput("--t-range must look like a:b with integers");
      }
      if (hi < lo) throw InvalidInput("--t-range is empty");
      for (long v = lo; v <= hi; ++v) out.push_back(v);
    } else if (t) {
      out.push_back(*t);
    } else {
      throw InvalidInput("--t or --t-range is required");
    }
    for (long v : out) {
      if (v < min_t) throw InvalidInput("t must be >= " + std::to_string(min_t));
    }
    return out;
  }
};

struct Format {
  std::optional<int> round;
  std::string num(double v) const { return round ? format_fixed(v, *round) : format_double(v); }
};

std::vector<double> abs_grid(int n) {
  if (n < 2) throw InvalidInput("--grid must be >= 2");
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g[static_cast<std::size_t>(i)] = static_cast<double>(i) / (n - 1);
  return g;
}

void configure_threads() {
  const char* env = std::getenv("QWALK_THREADS");
  if (!env || !*env) return;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1) throw InvalidInput("QWALK_THREADS must be a positive integer");
  omp_set_num_threads(static_cast<int>(n));
}

// Rows are computed in parallel into slots, then joined in order.
template <class F>
std::string parallel_rows(long n, F&& row) {
  std::vector<std::string> rows(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = row(i);
  std::string out;
  for (auto& r : rows) out += r;
  return out;
}

std::string cmd_evolve(const WalkSpec& spec, long t, const std::string& method, const Format& fmt) {
  const WaveField w = method == "closed" ? position_wavefunction(spec, t) : evolve_direct(spec, t);
  std::ostringstream os;
  os << "x,re_psi0,im_psi0,re_psi1,im_psi1,prob\n";
  for (long x = -t; x <= t; ++x) {
    const cplx p0 = w.at0(x), p1 = w.at1(x);
    os << x << ',' << fmt.num(p0.real()) << ',' << fmt.num(p0.imag()) << ',' << fmt.num(p1.real()) << ','
       << fmt.num(p1.imag()) << ',' << fmt.num(std::norm(p0) + std::norm(p1)) << '\n';
  }
  return os.str();
}

std::string cmd_density(const WalkSpec& spec, long t, bool dense, bool printed, const Format& fmt) {
  const DensityProfile p = density_profile(spec, t, printed ? SignConvention::Printed : SignConvention::Resolved);
  std::ostringstream os;
  os << "x,rho,rho0,rho1,rho_even,rho_odd\n";
  for (long x = -t; x <= t; ++x) {
    if (!dense && ((x + t) % 2) != 0) continue;
    os << x << ',' << fmt.num(p.at(p.rho, x)) << ',' << fmt.num(p.at(p.rho0, x)) << ',' << fmt.num(p.at(p.rho1, x))
       << ',' << fmt.num(p.at(p.rho_even, x)) << ',' << fmt.num(p.at(p.rho_odd, x)) << '\n';
  }
  return os.str();
}

std::string moment_row(const MomentReport& r, const Format& fmt) {
  std::ostringstream os;
  os << r.t << ',' << fmt.num(r.abs_a) << ',' << fmt.num(r.nu) << ',' << fmt.num(r.alpha) << ',' << fmt.num(r.mean)
     << ',' << fmt.num(r.second) << ',' << fmt.num(r.variance) << ',' << fmt.num(r.normalized_second) << '\n';
  return os.str();
}

std::string poly_json(const PolynomialRow& row) {
  // Hand-written so 128-bit coefficients print exactly.
  const long j = (row.t - row.k) / 2;
  const long m_max = std::min(j, row.t - j);
  std::string c = "[", p = "[";
  for (long m = 0; m <= m_max && m < static_cast<long>(row.coeffs.size()); ++m) {
    if (m > 0) {
      c += ", ";
      p += ", ";
    }
    c += to_string(row.coeffs[static_cast<std::size_t>(m)]);
    p += std::to_string(row.t - 2 * m);
  }
  return "{\"t\": " + std::to_string(row.t) + ", \"k\": " + std::to_string(row.k) + ", \"coeffs\": " + c +
         "], \"powers\": " + p + "]}";
}

EmpiricalHistogram read_histogram(const std::string& path, long t) {
  std::istringstream in(read_file(path));
  std::map<long, double> counts;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.find_first_of("0123456789") != 0 && line[0] != '-') continue;  // header
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected x,count");
    try {
      std::size_t p1 = 0, p2 = 0;
      const long x = std::stol(line.substr(0, comma), &p1);
      const double c = std::stod(line.substr(comma + 1), &p2);
      if (p1 != comma || comma + 1 + p2 != line.size()) throw std::invalid_argument("trailing");
      counts[x] += c;
    } catch (const std::logic_error&) {
      throw InvalidInput(path + ":" + std::to_string(lineno) + ": expected x,count");
    }
  }
  return EmpiricalHistogram(t, counts);
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t p = 0;
      out.push_back(std::stod(item, &p));
      if (p != item.size()) throw std::invalid_argument("trailing");
    } catch (const std::logic_error&) {
      throw InvalidInput("bad number '" + item + "' in list");
    }
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time coined quantum walks on the line"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qwalk 1.0");

  std::string out_path = "-";
  Format fmt;
  bool dense = false, paper_signs = false, weighted = false;
  std::string method = "direct";

  auto common = [&](CLI::App* s) {
    s->add_option("--out", out_path, "Output path ('-' for stdout)");
    s->add_option("--round", fmt.round, "Fixed decimals instead of 17 significant digits")->check(CLI::Range(0, 17));
  };

  SpecFlags spec_evolve, spec_density, spec_moments, spec_sweep;
  TimeFlags time_evolve, time_density, time_moments, time_sweep, time_poly, time_fit;

  auto* evolve = app.add_subcommand("evolve", "Amplitudes at time t");
  spec_evolve.attach(evolve);
  time_evolve.attach(evolve, false);
  evolve->add_option("--method", method, "direct | closed")->check(CLI::IsMember({"direct", "closed"}));
  common(evolve);

  auto* density = app.add_subcommand("density", "Densities and their even/odd split");
  spec_density.attach(density);
  time_density.attach(density, false);
  density->add_flag("--dense", dense, "Include zero-mass parity sites");
  density->add_flag("--paper-signs", paper_signs, "Evaluate the odd part with the printed signs");
  common(density);

  std::optional<double> nu_override, alpha_override;
  auto* moments = app.add_subcommand("moments", "Closed-form first and second moments");
  spec_moments.attach(moments);
  time_moments.attach(moments, true);
  moments->add_option("--nu", nu_override, "Override nu");
  moments->add_option("--alpha", alpha_override, "Override alpha");
  moments->add_flag("--paper-signs", paper_signs, "Use the printed alpha sign");
  common(moments);

  std::optional<long> poly_k;
  std::string poly_method = "series";
  auto* poly = app.add_subcommand("poly", "Exact foundation polynomial coefficients");
  time_poly.attach(poly, false);
  poly->add_option("--k", poly_k, "Site index (default: whole layer)");
  poly->add_option("--method", poly_method, "series | recursion")->check(CLI::IsMember({"series", "recursion"}));
  poly->add_option("--out", out_path, "Output path");

  std::string hist_path;
  auto* fit = app.add_subcommand("fit", "Estimate (|a|, nu, alpha) from a histogram");
  fit->add_option("--input", hist_path, "CSV with columns x,count")->required()->check(CLI::ExistingFile);
  time_fit.attach(fit, false);
  fit->add_flag("--weighted", weighted, "Poisson-style weights");
  fit->add_option("--out", out_path, "Output path");

  VerifyConfig vcfg;
  auto* verify = app.add_subcommand("verify", "Run the identity and oracle checks");
  verify->add_option("--tmax", vcfg.t_max, "Largest t")->check(CLI::Range(2L, 4096L));
  verify->add_option("--specs", vcfg.n_specs, "Random specs")->check(CLI::Range(1, 10000));
  verify->add_option("--seed", vcfg.seed, "RNG seed");
  verify->add_flag("--paper-signs", vcfg.paper_signs, "Only the documented divergences");
  verify->add_option("--out", out_path, "Output path");

  std::string kind = "second", nus_text = "0.5";
  int grid_n = 101;
  double sweep_alpha = 0.0;
  auto* sweep = app.add_subcommand("sweep", "Grids for plotting");
  sweep->add_option("--kind", kind, "second | first | variance | density | foundation")
      ->check(CLI::IsMember({"second", "first", "variance", "density", "foundation"}));
  time_sweep.attach(sweep, true);
  sweep->add_option("--grid", grid_n, "Points on the |a| grid over [0, 1]");
  sweep->add_option("--nus", nus_text, "Comma-separated nu values");
  sweep->add_option("--alpha", sweep_alpha, "alpha for first/variance/density");
  spec_sweep.attach(sweep);
  common(sweep);

  std::string errata_path;
  auto* errata = app.add_subcommand("errata", "Render the errata ledger");
  errata->add_option("--data", errata_path, "Structured errata file")->required()->check(CLI::ExistingFile);
  errata->add_option("--out", out_path, "Output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    configure_threads();
    std::string output;
    int status = 0;

    if (*evolve) {
      output = cmd_evolve(spec_evolve.build(), time_evolve.values(0).front(), method, fmt);
    } else if (*density) {
      output = cmd_density(spec_density.build(), time_density.values(0).front(), dense, paper_signs, fmt);
    } else if (*moments) {
      double abs_a = 0.0, nu = 0.0, alpha = 0.0;
      if (spec_moments.given()) {
        if ((nu_override || alpha_override) && !spec_moments.hadamard && spec_moments.spec_file.empty() &&
            spec_moments.a_abs) {
          abs_a = *spec_moments.a_abs;  // only |a| is needed with explicit overrides
        } else {
          const EffectiveParams e = derive_effective(spec_moments.build());
          abs_a = e.abs_a;
          nu = e.nu;
          alpha = e.alpha;
        }
      } else {
        throw InvalidInput("no walk spec: use --hadamard, --spec or --a-abs");
      }
      if (!(abs_a >= 0.0 && abs_a <= 1.0)) throw InvalidInput("|a| must lie in [0, 1]");
      nu = nu_override.value_or(nu);
      alpha = alpha_override.value_or(alpha);
      if (!validate_effective(nu, alpha, abs_a)) throw DomainError("infeasible (|a|, nu, alpha)");
      const auto ts = time_moments.values(1);
      const auto signs = paper_signs ? SignConvention::Printed : SignConvention::Resolved;
      output = "t,abs_a,nu,alpha,mean,second,variance,normalized_second\n";
      output += parallel_rows(static_cast<long>(ts.size()), [&](long i) {
        return moment_row(moment_report(abs_a, nu, alpha, ts[static_cast<std::size_t>(i)], signs), fmt);
      });
    } else if (*poly) {
      const long t = time_poly.values(0).front();
      if (t > exact_row_ceiling()) {
        throw OverflowError("t = " + std::to_string(t) + " exceeds the exact coefficient ceiling " +
                            std::to_string(exact_row_ceiling()));
      }
      PolynomialLayer layer;
      if (poly_method == "recursion") {
        layer = polynomial_layers_by_recursion(t).back();
      } else if (poly_k) {
        layer.push_back(foundation_polynomial(t, *poly_k));
      } else {
        layer = foundation_layer(t);
      }
      if (poly_k && poly_method == "recursion") {
        if (*poly_k < -t || *poly_k > t || ((*poly_k + t) % 2) != 0) {
          throw DomainError("k must satisfy |k| <= t with the parity of t");
        }
        layer = {layer[static_cast<std::size_t>((*poly_k + t) / 2)]};
      }
      if (layer.size() == 1) {
        output = poly_json(layer.front()) + "\n";
      } else {
        output = "[\n";
        for (std::size_t i = 0; i < layer.size(); ++i) {
          output += "  " + poly_json(layer[i]) + (i + 1 < layer.size() ? ",\n" : "\n");
        }
        output += "]\n";
      }
    } else if (*fit) {
      const long t = time_fit.values(0).front();
      FitOptions o;
      o.poisson_weighted = weighted;
      const FitResult r = fit_walk(read_histogram(hist_path, t), o);
      nlohmann::ordered_json j = {{"t", t},
                                  {"abs_a_hat", r.abs_a_hat},
                                  {"nu_hat", r.nu_hat},
                                  {"alpha_hat", r.alpha_hat},
                                  {"residual", r.residual},
                                  {"feasible", r.feasible}};
      output = j.dump(2) + "\n";
    } else if (*verify) {
      const VerifyReport rep = run_verification(vcfg);
      output = rep.to_json();
      if (!rep.all_pass()) status = kExitVerifyFailed;
    } else if (*sweep) {
      const std::vector<double> nus = parse_list(nus_text);
      if (kind == "second") {
        const auto ts = time_sweep.values(1);
        const auto g = abs_grid(grid_n);
        output = "t,abs_a,second,normalized_second\n";
        const long n = static_cast<long>(ts.size() * g.size());
        output += parallel_rows(n, [&](long i) {
          const long t = ts[static_cast<std::size_t>(i) / g.size()];
          const double a = g[static_cast<std::size_t>(i) % g.size()];
          const double s = second_moment(a, t);
          return std::to_string(t) + ',' + fmt.num(a) + ',' + fmt.num(s) + ',' +
                 fmt.num(s / static_cast<double>(t * t)) + '\n';
        });
      } else if (kind == "first" || kind == "variance") {
        const auto ts = time_sweep.values(1);
        const auto g = abs_grid(grid_n);
        const bool var = kind == "variance";
        output = var ? "t,abs_a,nu,alpha,variance,normalized_variance\n" : "t,abs_a,nu,alpha,mean\n";
        const std::size_t per_nu = ts.size() * g.size();
        const long n = static_cast<long>(nus.size() * per_nu);
        output += parallel_rows(n, [&](long i) {
          const std::size_t u = static_cast<std::size_t>(i);
          const double nu = nus[u / per_nu];
          const long t = ts[(u % per_nu) / g.size()];
          const double a = g[u % g.size()];
          std::string row = std::to_string(t) + ',' + fmt.num(a) + ',' + fmt.num(nu) + ',' + fmt.num(sweep_alpha);
          if (!validate_effective(nu, sweep_alpha, a)) return row + (var ? ",nan,nan\n" : ",nan\n");
          if (var) {
            const double v = variance(a, nu, sweep_alpha, t);
            return row + ',' + fmt.num(v) + ',' + fmt.num(v / static_cast<double>(t * t)) + '\n';
          }
          return row + ',' + fmt.num(first_moment_table(a, nu, sweep_alpha, t)) + '\n';
        });
      } else if (kind == "density") {
        const long t = time_sweep.values(1).front();
        const double a = spec_sweep.given() ? derive_effective(spec_sweep.build()).abs_a : 1.0 / std::sqrt(2.0);
        output = "x,nu,alpha,rho,rho_even,rho_odd\n";
        for (double nu : nus) {
          EffectiveParams e;
          e.abs_a = a;
          e.nu = nu;
          e.alpha = sweep_alpha;
          const DensityProfile p = total_density(e, t);
          for (long x = -t; x <= t; ++x) {
            if (((x + t) % 2) != 0) continue;
            output += std::to_string(x) + ',' + fmt.num(nu) + ',' + fmt.num(sweep_alpha) + ',' +
                      fmt.num(p.at(p.rho, x)) + ',' + fmt.num(p.at(p.rho_even, x)) + ',' +
                      fmt.num(p.at(p.rho_odd, x)) + '\n';
          }
        }
      } else {  // foundation
        const long t = time_sweep.values(0).front();
        const double a = spec_sweep.given() ? derive_effective(spec_sweep.build()).abs_a : 1.0 / std::sqrt(2.0);
        const FoundationWindow w = foundation_window(a, t);
        output = "x,u,u_sq,smoothed_sq\n";
        for (long x = -t - 1; x <= t + 1; ++x) {
          const double u = w.ut(x);
          const double sm = 0.5 * (w.ut(x - 1) * w.ut(x - 1) + w.ut(x + 1) * w.ut(x + 1));
          output += std::to_string(x) + ',' + fmt.num(u) + ',' + fmt.num(u * u) + ',' + fmt.num(sm) + '\n';
        }
      }
    } else if (*errata) {
      output = emit_errata(load_errata(errata_path));
    }

    write_output(out_path, output);
    return status;
  } catch (const InvalidInput& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const ResourceLimit& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}
