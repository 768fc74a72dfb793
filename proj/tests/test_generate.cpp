#include <doctest.h>

#include "lppgames/generate.hpp"
#include "lppgames/json_io.hpp"
#include "support.hpp"

using lpp::Coalition;
using lpp::DemandProfile;
using lpp::GeneratorConfig;
using lpp::Rational;
using lpp::Regime;

TEST_CASE("same seed, same bytes") {
  GeneratorConfig config;
  config.n = 3;
  config.q = 2;
  config.g = 2;
  config.seed = 424242;
  config.regime = Regime::Unconstrained;
  const lpp::LPPInstance a = lpp::generate_instance(config);
  const lpp::LPPInstance b = lpp::generate_instance(config);
  CHECK(a == b);
  CHECK(lpp::instance_to_json(a).dump(2) == lpp::instance_to_json(b).dump(2));
  config.seed = 424243;
  CHECK_FALSE(lpp::generate_instance(config) == a);
}

TEST_CASE("requested regimes are hit and instances validate") {
  for (const Regime regime : {Regime::Unconstrained, Regime::GrandOnly, Regime::General}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      GeneratorConfig config;
      config.n = 3;
      config.q = 2;
      config.g = 2;
      config.seed = seed;
      config.regime = regime;
      const lpp::LPPInstance instance = lpp::generate_instance(config);
      CHECK(lpp::validate(instance).empty());
      DemandProfile profile(instance);
      CHECK(lpp::classify_regime(profile).regime == regime);
    }
  }
}

TEST_CASE("grand-only with two producers needs a sub-additive pooling") {
  GeneratorConfig config;
  config.n = 2;
  config.q = 2;
  config.g = 3;
  config.seed = 9;
  config.regime = Regime::GrandOnly;
  const lpp::LPPInstance instance = lpp::generate_instance(config);
  DemandProfile profile(instance);
  CHECK(profile.demand(Coalition::full(2)) > instance.r);
  CHECK(profile.demand(Coalition::single(0)) + profile.demand(Coalition::single(1)) <=
        instance.r);
}

TEST_CASE("an exhausted budget is refused with the regime named") {
  GeneratorConfig config;
  config.n = 2;
  config.q = 2;
  config.g = 2;
  config.seed = 1;
  config.regime = Regime::GrandOnly;
  config.attempts = 0;
  try {
    lpp::generate_instance(config);
    FAIL("expected a refusal");
  } catch (const lpp::PreconditionError& error) {
    CHECK(std::string(error.what()).find("grand-only") != std::string::npos);
  }
}

TEST_CASE("structures are valid across dimensions") {
  for (int n = 1; n <= 4; ++n) {
    for (int q = 1; q <= 3; ++q) {
      for (int g = 1; g <= 3; ++g) {
        const lpp::LPPInstance instance = lpp::generate_structure(n, q, g, 77 + n * 100 + q * 10 + g);
        CHECK(lpp::validate(instance).empty());
        CHECK(instance.n == n);
        CHECK(instance.q == q);
        CHECK(instance.g == g);
      }
    }
  }
  CHECK_THROWS_AS(lpp::generate_structure(0, 1, 1, 1), std::invalid_argument);
}
