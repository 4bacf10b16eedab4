#include "qwalk/types.hpp"

#include <cmath>

#include "json.hpp"

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void check_pair(cplx& x, cplx& y, bool renormalize, const char* what) {
  const double n2 = std::norm(x) + std::norm(y);
  if (!std::isfinite(n2)) throw InvalidInput(std::string(what) + " is not finite");
  if (std::abs(n2 - 1.0) <= kNormTolerance) return;
  if (!renormalize || n2 == 0.0) {
    throw InvalidInput(std::string(what) + " not normalized: |.|^2 sum = " + std::to_string(n2));
  }
  const double s = 1.0 / std::sqrt(n2);
  x *= s;
  y *= s;
}

}  // namespace

WalkSpec WalkSpec::make(cplx a, cplx b, double k, cplx c0, cplx c1, bool renormalize) {
  if (!std::isfinite(k)) throw InvalidInput("phase k is not finite");
  check_pair(a, b, renormalize, "coin (a, b)");
  check_pair(c0, c1, renormalize, "initial spinor (c0, c1)");
  return WalkSpec(a, b, k, c0, c1);
}

WalkSpec WalkSpec::from_polar(double a_abs, double a_arg, double b_arg, double k,
                              double c0_abs, double c0_arg, double c1_arg) {
  if (!(a_abs >= 0.0 && a_abs <= 1.0)) throw InvalidInput("a_abs must lie in [0, 1]");
  if (!(c0_abs >= 0.0 && c0_abs <= 1.0)) throw InvalidInput("c0_abs must lie in [0, 1]");
  const double b_abs = std::sqrt(std::max(0.0, 1.0 - a_abs * a_abs));
  const double c1_abs = std::sqrt(std::max(0.0, 1.0 - c0_abs * c0_abs));
  return make(std::polar(a_abs, a_arg), std::polar(b_abs, b_arg), k,
              std::polar(c0_abs, c0_arg), std::polar(c1_abs, c1_arg));
}

WalkSpec WalkSpec::hadamard() {
  const double h = 1.0 / std::sqrt(2.0);
  return make({h, 0.0}, {h, 0.0}, 0.0, {1.0, 0.0}, {0.0, 0.0});
}

EffectiveParams derive_effective(const WalkSpec& spec) {
  EffectiveParams e;
  e.abs_a = std::min(1.0, std::abs(spec.a()));
  e.d = std::arg(spec.a());
  e.beta = spec.b() * std::polar(1.0, -e.d);
  const double c0_abs = std::abs(spec.c0());
  e.nu = c0_abs * c0_abs - 0.5;
  const double modulus = 2.0 * std::abs(spec.b()) * c0_abs * std::abs(spec.c1());
  if (spec.b() == cplx{} || spec.c0() == cplx{} || spec.c1() == cplx{}) {
    e.delta = 0.0;
    e.alpha = 0.0;
  } else {
    e.delta = std::arg(spec.a()) - std::arg(spec.b()) + std::arg(spec.c0()) - std::arg(spec.c1());
    e.alpha = modulus * std::cos(e.delta);
  }
  return e;
}

bool validate_effective(double nu, double alpha, double abs_a) {
  if (!(nu >= -0.5 && nu <= 0.5)) return false;
  if (!(abs_a >= 0.0 && abs_a <= 1.0)) return false;
  if (!std::isfinite(alpha)) return false;
  return alpha * alpha <= (1.0 - abs_a * abs_a) * (1.0 - 4.0 * nu * nu) + 1e-12;
}

void require_feasible(double nu, double alpha, double abs_a) {
  if (!validate_effective(nu, alpha, abs_a)) {
    throw DomainError("infeasible effective parameters (|a|=" + std::to_string(abs_a) +
                      ", nu=" + std::to_string(nu) + ", alpha=" + std::to_string(alpha) + ")");
  }
}

WalkSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("walk spec: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("walk spec must be a JSON object");
  static const char* known[] = {"a_abs", "a_arg", "b_arg", "k", "c0_abs", "c0_arg", "c1_arg"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* key : known) ok = ok || it.key() == key;
    if (!ok) throw InvalidInput("walk spec: unknown key '" + it.key() + "'");
    if (!it->is_number()) throw InvalidInput("walk spec: '" + it.key() + "' must be a number");
  }
  if (!j.contains("a_abs") || !j.contains("c0_abs")) {
    throw InvalidInput("walk spec: 'a_abs' and 'c0_abs' are required");
  }
  auto get = [&](const char* key) { return j.value(key, 0.0); };
  return WalkSpec::from_polar(get("a_abs"), get("a_arg"), get("b_arg"), get("k"),
                              get("c0_abs"), get("c0_arg"), get("c1_arg"));
}

std::string spec_to_json(const WalkSpec& spec) {
  nlohmann::json j = {
      {"a_abs", std::abs(spec.a())},   {"a_arg", std::arg(spec.a())},
      {"b_arg", std::arg(spec.b())},   {"k", spec.k()},
      {"c0_abs", std::abs(spec.c0())}, {"c0_arg", std::arg(spec.c0())},
      {"c1_arg", std::arg(spec.c1())},
  };
  return j.dump();
}

}  // namespace qwalk
