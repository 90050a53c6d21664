#pragma once

#include <optional>

#include "capprox/mazur.hpp"

namespace capprox {

// Target points e^{i theta_s} with the values the emitted polynomials should
// approach there.
struct TargetSet {
  std::vector<double> angles;  // in [0, 2 pi), distinct
  std::vector<cplx> values;
  std::string descriptor;

  void validate() const;
};

struct WeakStarPrecheck {
  int window = 32;
  double tol = 1e-2;
  int prefix = 16;
};

struct PipelineConfig {
  double bound = 1.0;  // M
  int grid_n = 4096;
  int steps = 8;
  int window = 32;  // reporting window for Fourier deviations
  int tail_factor = 4;
  int degree_factor = 32;
  WeakStarPrecheck precheck;
  MazurConfig mazur;
  bool override_weak_star = false;
  bool fejer_path = false;
  double verify_tol = 0.0;  // 0 picks 3 * bound / (steps + 2)

  int max_degree() const { return degree_factor * steps; }
  double effective_verify_tol() const;
  void validate() const;
};

struct StepRecord {
  int m = 0;
  bool success = false;
  double target = 0.0;
  double achieved = 0.0;
  double achieved_grid = 0.0;
  double u_bound = 0.0;
  double u_grid_max = 0.0;
  double rescale_factor = 0.0;
  double p_sup = 0.0;  // certified sup of the emitted polynomial
  double max_err = 0.0;
  double median_err = 0.0;
  std::optional<double> fourier_dev;  // max_k |c_k(P_m) - c_k(g)|
  std::optional<double> lower_witness;
  std::string note;
  SimplexWeights weights;
  AnalyticPolynomial p;
};

struct PipelineReport {
  double bound = 0.0;
  int grid_n = 0;
  int steps = 0;
  int window = 0;
  std::string verdict;  // "positive" | "negative" | "mixed"
  bool precheck_ran = false;
  Verdict precheck_verdict = Verdict::inconclusive;
  std::vector<StepRecord> records;

  std::vector<AnalyticPolynomial> emitted() const;  // successful steps, in order
};

// The scaling step P = M / (M + 2/m) * Q, with a certified-bound precondition
// and a final enforcement pass so that certified sup |P| <= M holds exactly.
AnalyticPolynomial rescale_to_bound(const AnalyticPolynomial& q, double bound,
                                    int m, int grid_n = 4096);

// Full sufficiency run: for each step m, a convex combination of the tail
// within 1/m, then the bounded rescale, then errors at the targets. The
// weak-star precondition against g is checked first unless overridden.
PipelineReport run_sufficiency(const SequenceProvider& seq, const TargetSet& targets,
                               const std::optional<BoundedAnalyticWitness>& g,
                               const PipelineConfig& cfg);

struct ConditionsVerdict {
  bool bound_ok = false;
  double worst_bound = 0.0;
  bool pointwise_ok = false;
  double tail_max_err = 0.0;
  Verdict weakstar = Verdict::inconclusive;

  bool pass() const {
    return bound_ok && pointwise_ok && weakstar == Verdict::converged;
  }
};

// Checks the two theorem conditions on a finished family: uniform certified
// bounds plus pointwise convergence at the targets, and the boundary moment
// condition against g.
ConditionsVerdict verify_conditions(const std::vector<AnalyticPolynomial>& family,
                                    const TargetSet& targets, double bound,
                                    const SampledFunction& g_boundary, int window,
                                    double tol);

// Sampled variant: members are boundary samples; the pointwise check snaps
// each target angle to the nearest grid point.
ConditionsVerdict verify_conditions(const std::vector<SampledFunction>& family,
                                    const TargetSet& targets, double bound,
                                    const SampledFunction& g_boundary, int window,
                                    double tol);

}  // namespace capprox
