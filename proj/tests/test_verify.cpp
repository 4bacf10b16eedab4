#include "doctest.h"
#include "json.hpp"
#include "qwalk/verify.hpp"

using namespace qwalk;

TEST_CASE("random specs are reproducible and valid") {
  const auto a = random_specs(10, 7), b = random_specs(10, 7), c = random_specs(10, 8);
  REQUIRE(a.size() == 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].a() == b[i].a());
    CHECK(a[i].c0() == b[i].c0());
    CHECK(std::norm(a[i].a()) + std::norm(a[i].b()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::norm(a[i].c0()) + std::norm(a[i].c1()) == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(a[0].a() != c[0].a());
}

TEST_CASE("small verification run passes") {
  VerifyConfig cfg;
  cfg.t_max = 24;
  cfg.n_specs = 6;
  const VerifyReport rep = run_verification(cfg);
  CHECK(rep.checks.size() > 10);
  for (const auto& c : rep.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.pass);
  }
  const auto j = nlohmann::json::parse(rep.to_json());
  CHECK(j.at("all_pass").get<bool>());
  CHECK(j.at("checks").size() == rep.checks.size());
}
