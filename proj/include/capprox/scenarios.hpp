#pragma once

#include <functional>
#include <optional>

#include "capprox/pipeline.hpp"

namespace capprox {

struct TargetSpec {
  std::string kind = "arc";  // "arc" | "cantor" | "finite"
  double from = 0.0;
  double to = kPi / 2.0;
  int count = 101;              // arc only
  int depth = 2;                // cantor only
  std::vector<double> angles;   // finite only

  void validate() const;
};

struct ScenarioSpec {
  std::string name;
  std::string summary;
  std::string expected;  // "positive" | "negative"
  std::optional<BoundedAnalyticWitness> witness;
  RadialSchedule schedule;
  TargetSpec target;
  bool override_weak_star = false;
};

// Dilates f_n = g(r_n z) restricted to the boundary grid, bounded by bound(g).
SequenceProvider build_corollary1_sequence(const BoundedAnalyticWitness& g,
                                           const RadialSchedule& schedule,
                                           const GridPtr& grid);

// Target angles by spec, values from the supplied boundary function.
TargetSet build_target_set(const TargetSpec& spec,
                           const std::function<cplx(double)>& f_source);

// The obstruction sequence: every member is conj(z) on the grid.
SequenceProvider build_negative_witness(const GridPtr& grid);

const std::vector<ScenarioSpec>& builtin_scenarios();
const ScenarioSpec& find_scenario(const std::string& name);

SequenceProvider scenario_sequence(const ScenarioSpec& spec, const GridPtr& grid);
TargetSet scenario_targets(const ScenarioSpec& spec);

// Known-answer sequences for calibrating the weak-star verdicts:
// "dilates" converges, "alternating" does not, "slow-shrink" is inconclusive
// at the default tolerance. Each comes with the limit it is tested against.
struct Calibration {
  std::string name;
  SequenceProvider sequence;
  SampledFunction limit;
  Verdict expected = Verdict::inconclusive;
};
Calibration build_calibration(const std::string& name, const GridPtr& grid);
std::vector<std::string> calibration_names();

}  // namespace capprox
