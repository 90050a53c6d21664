#include <cmath>
#include <cstdlib>

#include <doctest.h>

#include "capprox/pipeline.hpp"
#include "capprox/scenarios.hpp"
#include "capprox/serialize.hpp"

using namespace capprox;

TEST_CASE("target set validation") {
  TargetSet t;
  CHECK_THROWS_AS(t.validate(), ConfigError);

  t.angles = {0.0, 1.0};
  t.values = {cplx(1.0, 0.0)};
  CHECK_THROWS_AS(t.validate(), ConfigError);

  t.values = {cplx(1.0, 0.0), cplx(2.0, 0.0)};
  CHECK_NOTHROW(t.validate());

  t.angles = {0.0, kTwoPi};
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t.angles = {-0.5, 1.0};
  CHECK_THROWS_AS(t.validate(), ConfigError);
  t.angles = {1.0, 1.0};
  CHECK_THROWS_AS(t.validate(), ConfigError);
}

TEST_CASE("pipeline config validation and derived values") {
  PipelineConfig cfg;
  CHECK(cfg.max_degree() == 256);
  CHECK(cfg.effective_verify_tol() == doctest::Approx(0.3).epsilon(1e-12));
  cfg.verify_tol = 0.05;
  CHECK(cfg.effective_verify_tol() == 0.05);
  cfg.verify_tol = 0.0;
  CHECK_NOTHROW(cfg.validate());

  PipelineConfig bad = cfg;
  bad.bound = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.steps = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.tail_factor = 0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.degree_factor = -1;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.grid_n = 4;
  CHECK_THROWS_AS(bad.validate(), ConfigError);
  bad = cfg;
  bad.precheck.tol = 0.0;
  CHECK_THROWS_AS(bad.validate(), ConfigError);

  // grid big enough for the window but too coarse for the top degree
  bad = cfg;
  bad.grid_n = 64;
  bad.steps = 2;
  bad.window = 8;
  bad.precheck.window = 8;
  bad.degree_factor = 32;
  CHECK_THROWS_AS(bad.validate(), GridError);
}

TEST_CASE("rescale keeps the certified bound") {
  AnalyticPolynomial five({cplx(5.0, 0.0)});
  AnalyticPolynomial p = rescale_to_bound(five, 3.0, 1, 512);
  CHECK(p.coefficient(0).real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(certified_sup_norm(p, 512) <= 3.0);

  AnalyticPolynomial two({cplx(2.0, 0.0)});
  AnalyticPolynomial q = rescale_to_bound(two, 1.0, 2, 512);
  CHECK(q.coefficient(0).real() == doctest::Approx(1.0).epsilon(1e-14));

  AnalyticPolynomial loud({cplx(5.1, 0.0)});
  CHECK_THROWS_AS(rescale_to_bound(loud, 3.0, 1, 512), PreconditionError);

  AnalyticPolynomial slope({cplx{}, cplx(2.2, 0.0)});
  AnalyticPolynomial r = rescale_to_bound(slope, 1.0, 1, 512);
  CHECK(certified_sup_norm(r, 512) <= 1.0);

  CHECK_THROWS_AS(rescale_to_bound(five, 0.0, 1, 512), ConfigError);
  CHECK_THROWS_AS(rescale_to_bound(five, 1.0, 0, 512), ConfigError);
}

namespace {

PipelineConfig smoke_config(int grid_n, int steps, int degree_factor, int window) {
  PipelineConfig cfg;
  cfg.bound = 1.0;
  cfg.grid_n = grid_n;
  cfg.steps = steps;
  cfg.window = window;
  cfg.tail_factor = 4;
  cfg.degree_factor = degree_factor;
  cfg.precheck = WeakStarPrecheck{16, 1e-2, 8};
  return cfg;
}

}  // namespace

TEST_CASE("dilate scenario runs positive end to end") {
  const ScenarioSpec& spec = find_scenario("blaschke-arc");
  GridPtr grid = make_grid(1024);
  SequenceProvider seq = scenario_sequence(spec, grid);
  TargetSet targets = scenario_targets(spec);
  PipelineConfig cfg = smoke_config(1024, 3, 24, 16);

  PipelineReport report = run_sufficiency(seq, targets, spec.witness, cfg);
  CHECK(report.verdict == "positive");
  CHECK(report.precheck_ran);
  CHECK(report.precheck_verdict == Verdict::converged);
  REQUIRE(report.records.size() == 3);
  for (const StepRecord& rec : report.records) {
    CHECK(rec.success);
    CHECK(rec.achieved < rec.target);
    CHECK(rec.p_sup <= cfg.bound);
    CHECK(rec.weights.step == rec.m);
    REQUIRE(rec.fourier_dev.has_value());
    CHECK_FALSE(rec.lower_witness.has_value());
  }
  CHECK(report.records[0].rescale_factor == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // later steps track the limit more closely
  CHECK(*report.records[2].fourier_dev < *report.records[0].fourier_dev);
  CHECK(report.emitted().size() == 3);

  SUBCASE("emitted family passes the theorem conditions") {
    // the last step still carries its rescale factor 3/5, so the boundary
    // error at theta = 0 sits at 0.6; verify with room above that
    SampledFunction gb = boundary_samples(*spec.witness, grid);
    ConditionsVerdict v =
        verify_conditions(report.emitted(), targets, cfg.bound, gb, 16, 0.7);
    CHECK(v.bound_ok);
    CHECK(v.pointwise_ok);
    CHECK(v.weakstar == Verdict::converged);
    CHECK(v.pass());
  }
}

TEST_CASE("conjugate scenario fails every step") {
  const ScenarioSpec& spec = find_scenario("negative-conjugate");
  GridPtr grid = make_grid(512);
  SequenceProvider seq = scenario_sequence(spec, grid);
  TargetSet targets = scenario_targets(spec);
  PipelineConfig cfg = smoke_config(512, 2, 16, 8);
  cfg.override_weak_star = true;  // no witness to check against

  PipelineReport report = run_sufficiency(seq, targets, std::nullopt, cfg);
  CHECK(report.verdict == "negative");
  CHECK_FALSE(report.precheck_ran);
  CHECK(report.emitted().empty());
  for (const StepRecord& rec : report.records) {
    CHECK_FALSE(rec.success);
    CHECK(rec.achieved >= 1.0);
    REQUIRE(rec.lower_witness.has_value());
    CHECK(*rec.lower_witness >= 1.0 - 1e-6);
    CHECK_FALSE(rec.fourier_dev.has_value());
  }
}

TEST_CASE("weak-star gate blocks a refuted run") {
  GridPtr grid = make_grid(512);
  Calibration alt = build_calibration("alternating", grid);
  TargetSet targets;
  targets.angles = {0.1, 0.2};
  targets.values = {cplx(1.0, 0.0), cplx(1.0, 0.0)};
  PipelineConfig cfg = smoke_config(512, 1, 8, 8);
  cfg.precheck = WeakStarPrecheck{8, 1e-2, 8};

  BoundedAnalyticWitness ident = BoundedAnalyticWitness::polynomial(
      AnalyticPolynomial({cplx{}, cplx(1.0, 0.0)}), 1.0);
  CHECK_THROWS_AS(run_sufficiency(alt.sequence, targets, ident, cfg),
                  PreconditionError);
  CHECK_THROWS_AS(run_sufficiency(alt.sequence, targets, std::nullopt, cfg),
                  ConfigError);

  const ScenarioSpec& spec = find_scenario("blaschke-arc");
  SequenceProvider seq = scenario_sequence(spec, grid);
  PipelineConfig tight = smoke_config(512, 1, 8, 8);
  tight.bound = 0.5;  // below the sequence's uniform bound
  CHECK_THROWS_AS(run_sufficiency(seq, scenario_targets(spec), spec.witness, tight),
                  PreconditionError);

  PipelineConfig long_run = smoke_config(512, 14, 8, 8);
  CHECK_THROWS_AS(
      run_sufficiency(seq, scenario_targets(spec), spec.witness, long_run),
      ConfigError);
}

TEST_CASE("cesaro path emits certified smoothed steps") {
  const ScenarioSpec& spec = find_scenario("identity-arc");
  GridPtr grid = make_grid(512);
  SequenceProvider seq = scenario_sequence(spec, grid);
  TargetSet targets = scenario_targets(spec);
  PipelineConfig cfg = smoke_config(512, 2, 8, 8);
  cfg.fejer_path = true;

  PipelineReport report = run_sufficiency(seq, targets, spec.witness, cfg);
  CHECK(report.verdict == "positive");
  for (const StepRecord& rec : report.records) {
    CHECK(rec.success);
    CHECK(rec.note.rfind("cesaro", 0) == 0);
    CHECK(rec.p_sup <= cfg.bound);
  }
}

TEST_CASE("sampled verify separates bounds from the moment condition") {
  GridPtr grid = make_grid(1024);
  SampledFunction conj;
  conj.grid = grid;
  conj.values.resize(1024);
  for (int j = 0; j < 1024; ++j)
    conj.values[static_cast<size_t>(j)] = std::conj(grid->point(j));
  conj.claimed_bound = 1.0;
  conj.band_limit = 1;
  std::vector<SampledFunction> family(8, conj);

  SampledFunction gz = sample_polynomial(
      AnalyticPolynomial({cplx{}, cplx(1.0, 0.0)}), grid);
  gz.claimed_bound = 1.0;

  TargetSet targets;
  for (int s = 0; s <= 20; ++s) {
    double theta = kPi * static_cast<double>(s) / 20.0;
    targets.angles.push_back(theta);
    targets.values.push_back(std::polar(1.0, -theta));
  }

  ConditionsVerdict v = verify_conditions(family, targets, 1.0, gz, 8, 1e-2);
  CHECK(v.bound_ok);
  CHECK(v.pointwise_ok);  // the members really do hit the conjugate targets
  CHECK(v.weakstar == Verdict::not_converged);
  CHECK_FALSE(v.pass());
}

TEST_CASE("oscillating family fails pointwise and weak-star") {
  GridPtr grid = make_grid(512);
  std::vector<SampledFunction> family;
  for (int n = 1; n <= 8; ++n) {
    double sign = n % 2 == 0 ? 0.9 : -0.9;
    SampledFunction f;
    f.grid = grid;
    f.values.resize(512);
    for (int j = 0; j < 512; ++j)
      f.values[static_cast<size_t>(j)] = sign * grid->point(j);
    f.claimed_bound = 0.9;
    f.band_limit = 1;
    family.push_back(std::move(f));
  }

  SampledFunction limit = sample_polynomial(
      AnalyticPolynomial({cplx{}, cplx(0.9, 0.0)}), grid);
  limit.claimed_bound = 0.9;

  TargetSet targets;
  for (int k : {0, 64, 128}) {
    double theta = kTwoPi * static_cast<double>(k) / 512.0;
    targets.angles.push_back(theta);
    targets.values.push_back(0.9 * std::polar(1.0, theta));
  }

  ConditionsVerdict v = verify_conditions(family, targets, 1.0, limit, 8, 0.1);
  CHECK(v.bound_ok);
  CHECK_FALSE(v.pointwise_ok);
  CHECK(v.tail_max_err == doctest::Approx(1.8).epsilon(1e-12));
  CHECK(v.weakstar == Verdict::not_converged);
}

TEST_CASE("results do not depend on the thread cap") {
  const ScenarioSpec& spec = find_scenario("blaschke-arc");
  GridPtr grid = make_grid(512);
  SequenceProvider seq = scenario_sequence(spec, grid);
  TargetSet targets = scenario_targets(spec);
  PipelineConfig cfg = smoke_config(512, 3, 12, 8);

  setenv("APPROX_THREADS", "1", 1);
  PipelineReport serial = run_sufficiency(seq, targets, spec.witness, cfg);
  setenv("APPROX_THREADS", "3", 1);
  PipelineReport threaded = run_sufficiency(seq, targets, spec.witness, cfg);
  unsetenv("APPROX_THREADS");

  CHECK(to_json(serial).dump() == to_json(threaded).dump());
}
