#include <cmath>

#include <doctest.h>

#include "capprox/mazur.hpp"
#include "capprox/scenarios.hpp"

using namespace capprox;

namespace {

SampledFunction conj_samples(const GridPtr& grid) {
  SampledFunction f;
  f.grid = grid;
  f.values.resize(static_cast<size_t>(grid->size()));
  for (int j = 0; j < grid->size(); ++j)
    f.values[static_cast<size_t>(j)] = std::conj(grid->point(j));
  f.claimed_bound = 1.0;
  f.band_limit = 1;
  return f;
}

}  // namespace

TEST_CASE("simplex weights validation") {
  SimplexWeights w;
  w.step = 2;
  w.tail_start = 2;
  w.alpha = {0.25, 0.75};
  CHECK_NOTHROW(w.validate());
  CHECK(w.tail_end() == 3);

  w.alpha = {0.5, 0.4};
  CHECK_THROWS_AS(w.validate(), PreconditionError);
  w.alpha = {1.5, -0.5};
  CHECK_THROWS_AS(w.validate(), PreconditionError);
  w.alpha = {};
  CHECK_THROWS_AS(w.validate(), PreconditionError);
  w.alpha = {1.0};
  w.tail_start = 0;
  CHECK_THROWS_AS(w.validate(), PreconditionError);
}

TEST_CASE("conjugate tail refuses every target below one") {
  GridPtr grid = make_grid(512);
  std::vector<SampledFunction> tail(5, conj_samples(grid));
  CombinationResult out = find_convex_combination(tail, 16, 0.5, {}, 2, 3);

  CHECK_FALSE(out.success);
  CHECK(out.achieved >= 1.0 - 1e-3);
  CHECK(out.achieved_grid == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(out.error_degree == 1);
  CHECK(out.inflation == doctest::Approx(1.0 / (1.0 - kPi / 512.0)).epsilon(1e-12));
  CHECK(out.u_bound < 1e-9);       // the approximant trims away entirely
  CHECK(out.u_grid_max < 1e-9);
  REQUIRE(out.lower_witness.has_value());
  CHECK(*out.lower_witness >= 1.0 - 1e-6);

  CHECK(out.weights.step == 2);
  CHECK(out.weights.tail_start == 3);
  CHECK(out.weights.alpha.size() == 5);
  double sum = 0.0;
  for (double a : out.weights.alpha) sum += a;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dilated tail meets its target") {
  GridPtr grid = make_grid(1024);
  BoundedAnalyticWitness g =
      BoundedAnalyticWitness::blaschke({cplx(0.5, 0.0)}, cplx(1.0, 0.0));
  SequenceProvider seq =
      build_corollary1_sequence(g, RadialSchedule::geometric(), grid);

  std::vector<SampledFunction> tail;
  for (int n = 6; n <= 12; ++n) tail.push_back(seq.at(n));
  CombinationResult out = find_convex_combination(tail, 48, 0.25, {}, 6, 6);

  CHECK(out.success);
  CHECK(out.achieved < 0.25);
  CHECK(out.achieved == doctest::Approx(out.achieved_grid * out.inflation)
                            .epsilon(1e-12));
  CHECK(out.error_degree >= out.u.effective_degree());
  CHECK(out.u_grid_max <= 1.0 + out.achieved_grid + 1e-9);
  CHECK(out.u_bound >= out.u_grid_max - 1e-12);
  CHECK_FALSE(out.lower_witness.has_value());
  // ties break toward the earliest member, which is fitted exactly
  CHECK(out.weights.alpha[0] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("identical representable members pick the first vertex") {
  GridPtr grid = make_grid(256);
  SampledFunction a =
      sample_polynomial(AnalyticPolynomial({cplx{}, cplx(1.0, 0.0)}), grid);
  a.claimed_bound = 1.0;
  std::vector<SampledFunction> tail(4, a);
  CombinationResult out = find_convex_combination(tail, 8, 0.5, {}, 1, 1);
  CHECK(out.success);
  CHECK(out.weights.alpha[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(out.weights.alpha[3] == 0.0);
  CHECK(std::abs(out.u.coefficient(1) - cplx(1.0, 0.0)) < 1e-9);
}

TEST_CASE("grid optimum does not grow with the degree budget") {
  GridPtr grid = make_grid(256);
  SampledFunction f;
  f.grid = grid;
  f.values.resize(256);
  for (int j = 0; j < 256; ++j) {
    double theta = grid->angle(j);
    f.values[static_cast<size_t>(j)] = std::polar(1.0, -theta) +
                                       0.3 * std::polar(1.0, -2.0 * theta) +
                                       0.2 * std::polar(1.0, 3.0 * theta);
  }
  f.claimed_bound = 1.5;
  f.band_limit = 3;
  std::vector<SampledFunction> tail{f};

  double a0 = find_convex_combination(tail, 0, 10.0, {}, 1, 1).achieved_grid;
  double a3 = find_convex_combination(tail, 3, 10.0, {}, 1, 1).achieved_grid;
  double a16 = find_convex_combination(tail, 16, 10.0, {}, 1, 1).achieved_grid;
  CHECK(a3 <= a0 + 1e-9);
  CHECK(a16 <= a3 + 1e-3);
  CHECK(a16 >= 1.0);  // the antianalytic part cannot be removed
}

TEST_CASE("tail schedule bookkeeping") {
  SequenceProvider seq;
  seq.grid = make_grid(64);
  seq.uniform_bound = 1.0;
  seq.length = 12;
  seq.generator = [grid = seq.grid](int) { return conj_samples(grid); };

  TailSchedule sched = greedy_tail_schedule(seq, 3, 4, 32);
  CHECK(sched.start == 3);
  CHECK(sched.end == 12);
  CHECK(sched.degree == 96);

  seq.length = 11;
  CHECK_THROWS_AS(greedy_tail_schedule(seq, 3, 4, 32), ConfigError);
  CHECK_THROWS_AS(greedy_tail_schedule(seq, 0, 4, 32), ConfigError);
  CHECK_THROWS_AS(greedy_tail_schedule(seq, 2, 0, 32), ConfigError);
  CHECK_THROWS_AS(greedy_tail_schedule(seq, 2, 4, -1), ConfigError);
}

TEST_CASE("combination argument validation") {
  GridPtr grid = make_grid(128);
  std::vector<SampledFunction> empty;
  CHECK_THROWS_AS(find_convex_combination(empty, 4, 0.5, {}, 1, 1),
                  PreconditionError);

  SampledFunction unbounded = conj_samples(grid);
  unbounded.claimed_bound.reset();
  std::vector<SampledFunction> tail{unbounded};
  CHECK_THROWS_AS(find_convex_combination(tail, 4, 0.5, {}, 1, 1),
                  PreconditionError);

  std::vector<SampledFunction> ok{conj_samples(grid)};
  CHECK_THROWS_AS(find_convex_combination(ok, 4, 0.0, {}, 1, 1), ConfigError);
}
