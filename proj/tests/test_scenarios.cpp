#include <cmath>
#include <string>

#include <doctest.h>

#include "capprox/scenarios.hpp"

using namespace capprox;

TEST_CASE("arc targets are equispaced with boundary values") {
  TargetSpec spec;
  spec.kind = "arc";
  spec.from = 0.0;
  spec.to = kPi;
  spec.count = 3;
  TargetSet t = build_target_set(spec, [](double theta) {
    return std::polar(1.0, theta);
  });
  REQUIRE(t.angles.size() == 3);
  CHECK(t.angles[0] == 0.0);
  CHECK(t.angles[1] == doctest::Approx(kPi / 2.0).epsilon(1e-15));
  CHECK(t.angles[2] == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(std::abs(t.values[0] - cplx(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(t.values[1] - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(t.values[2] - cplx(-1.0, 0.0)) < 1e-15);

  spec.count = 1;
  spec.from = 0.75;
  TargetSet single = build_target_set(spec, [](double) { return cplx{}; });
  REQUIRE(single.angles.size() == 1);
  CHECK(single.angles[0] == 0.75);
}

TEST_CASE("cantor targets keep the surviving endpoints") {
  double len = kTwoPi / 3.0;
  TargetSpec spec;
  spec.kind = "cantor";
  spec.from = 0.0;
  spec.to = len;
  spec.depth = 2;
  TargetSet t = build_target_set(spec, [](double) { return cplx(1.0, 0.0); });
  REQUIRE(t.angles.size() == 8);
  double expect[] = {0.0,           len / 9.0,       2.0 * len / 9.0, len / 3.0,
                     2.0 * len / 3.0, 7.0 * len / 9.0, 8.0 * len / 9.0, len};
  for (int i = 0; i < 8; ++i)
    CHECK(t.angles[static_cast<size_t>(i)] ==
          doctest::Approx(expect[i]).epsilon(1e-12));

  spec.depth = 0;
  TargetSet ends = build_target_set(spec, [](double) { return cplx(1.0, 0.0); });
  REQUIRE(ends.angles.size() == 2);
  CHECK(ends.angles[0] == 0.0);
  CHECK(ends.angles[1] == doctest::Approx(len).epsilon(1e-15));
}

TEST_CASE("finite targets normalize their angles") {
  TargetSpec spec;
  spec.kind = "finite";
  spec.angles = {-kPi / 2.0};
  TargetSet t = build_target_set(spec, [](double) { return cplx(1.0, 0.0); });
  CHECK(t.angles[0] == doctest::Approx(3.0 * kPi / 2.0).epsilon(1e-15));

  spec.angles = {0.0, kTwoPi};  // collide after normalization
  CHECK_THROWS_AS(build_target_set(spec, [](double) { return cplx(1.0, 0.0); }),
                  ConfigError);
}

TEST_CASE("target spec validation") {
  TargetSpec spec;
  spec.kind = "square";
  CHECK_THROWS_AS(spec.validate(), ConfigError);

  spec.kind = "arc";
  spec.count = 0;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.count = 5;
  spec.to = spec.from;
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  spec.to = spec.from + 3.0 * kPi;
  CHECK_THROWS_AS(spec.validate(), ConfigError);

  spec = TargetSpec{};
  spec.kind = "cantor";
  spec.depth = 13;
  CHECK_THROWS_AS(spec.validate(), ConfigError);

  spec = TargetSpec{};
  spec.kind = "finite";
  CHECK_THROWS_AS(spec.validate(), ConfigError);
}

TEST_CASE("negative witness repeats the conjugate") {
  GridPtr grid = make_grid(128);
  SequenceProvider seq = build_negative_witness(grid);
  CHECK(seq.descriptor == "conjugate");
  CHECK(seq.uniform_bound == 1.0);
  SampledFunction f1 = seq.at(1);
  SampledFunction f7 = seq.at(7);
  CHECK(*f1.claimed_bound == 1.0);
  CHECK(*f1.band_limit == 1);
  for (int j = 0; j < 128; ++j) {
    CHECK(f1.values[static_cast<size_t>(j)] ==
          std::conj(grid->point(j)));
    CHECK(f7.values[static_cast<size_t>(j)] == f1.values[static_cast<size_t>(j)]);
  }
}

TEST_CASE("builtin scenario catalog") {
  const std::vector<ScenarioSpec>& all = builtin_scenarios();
  REQUIRE(all.size() == 4);
  CHECK(all[0].name == "blaschke-arc");
  CHECK(all[1].name == "identity-arc");
  CHECK(all[2].name == "blaschke-pair");
  CHECK(all[3].name == "negative-conjugate");
  for (size_t i = 0; i < 3; ++i) {
    CHECK(all[i].expected == "positive");
    CHECK(all[i].witness.has_value());
    CHECK_FALSE(all[i].override_weak_star);
  }
  CHECK(all[3].expected == "negative");
  CHECK_FALSE(all[3].witness.has_value());
  CHECK(all[3].override_weak_star);

  CHECK(find_scenario("blaschke-pair").witness->zeros().size() == 2);
  try {
    find_scenario("no-such-thing");
    FAIL("expected a config error");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("known:") != std::string::npos);
  }
}

TEST_CASE("scenario sequences and targets") {
  GridPtr grid = make_grid(256);
  const ScenarioSpec& arc = find_scenario("blaschke-arc");
  SequenceProvider dil = scenario_sequence(arc, grid);
  CHECK(dil.descriptor == "dilates");
  CHECK(dil.length == 52);
  CHECK(dil.uniform_bound == 1.0);

  TargetSet t = scenario_targets(arc);
  REQUIRE(t.angles.size() == 101);
  CHECK(std::abs(t.values[0] - cplx(-1.0, 0.0)) < 1e-12);  // g(1) = -1

  const ScenarioSpec& neg = find_scenario("negative-conjugate");
  SequenceProvider conj = scenario_sequence(neg, grid);
  CHECK(conj.descriptor == "conjugate");
  TargetSet nt = scenario_targets(neg);
  for (size_t s = 0; s < nt.angles.size(); ++s)
    CHECK(std::abs(nt.values[s] - std::polar(1.0, -nt.angles[s])) < 1e-15);
}

TEST_CASE("explicit radius list bounds the prefix") {
  GridPtr grid = make_grid(64);
  BoundedAnalyticWitness g =
      BoundedAnalyticWitness::blaschke({cplx(0.5, 0.0)}, cplx(1.0, 0.0));
  SequenceProvider seq = build_corollary1_sequence(
      g, RadialSchedule::from_values({0.25, 0.5}), grid);
  CHECK(seq.length == 2);
  SampledFunction f1 = seq.at(1);
  for (int j = 0; j < 64; ++j)
    CHECK(std::abs(f1.values[static_cast<size_t>(j)] -
                   g.evaluate(0.25 * grid->point(j))) < 1e-15);
  CHECK_THROWS_AS(seq.at(3), ConfigError);
}

TEST_CASE("calibration catalog") {
  CHECK(calibration_names() ==
        std::vector<std::string>{"dilates", "alternating", "slow-shrink"});

  GridPtr grid = make_grid(128);
  Calibration dil = build_calibration("dilates", grid);
  CHECK(dil.expected == Verdict::converged);
  CHECK(*dil.limit.claimed_bound == 1.0);

  Calibration slow = build_calibration("slow-shrink", grid);
  CHECK(slow.expected == Verdict::inconclusive);
  CHECK(*slow.limit.claimed_bound == 0.0);
  CHECK(*slow.limit.band_limit == 0);
  for (const cplx& v : slow.limit.values) CHECK(v == cplx{});

  CHECK_THROWS_AS(build_calibration("nope", grid), ConfigError);
  CHECK_THROWS_AS(build_calibration("dilates", nullptr), GridError);
}
