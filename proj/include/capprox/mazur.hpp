#pragma once

#include <optional>

#include "capprox/minimax.hpp"
#include "capprox/weakstar.hpp"

namespace capprox {

// Convex weights over a contiguous tail f_{start}, ..., f_{start + k - 1}.
struct SimplexWeights {
  int step = 1;        // index m of the step that produced the weights
  int tail_start = 1;  // sequence index of the first weight
  std::vector<double> alpha;

  int tail_end() const { return tail_start + static_cast<int>(alpha.size()) - 1; }
  void validate() const;  // nonnegative, sums to 1 within 1e-12
};

struct MazurConfig {
  double trim_rel = 1e-12;
  double band_rel = 1e-12;
  double tie_break_rel = 1e-9;  // scaled by M^2 before reaching the solver
  int hankel_size = 16;         // for the failure witness
  MinimaxOptions solver;
};

struct CombinationResult {
  SimplexWeights weights;
  AnalyticPolynomial u;
  bool success = false;
  double target = 0.0;
  double achieved = 0.0;       // certified sup of (combination - u)
  double achieved_grid = 0.0;  // same residual, max on the grid
  double inflation = 1.0;
  int error_degree = 0;
  double u_bound = 0.0;        // certified sup of u
  double u_grid_max = 0.0;
  std::optional<double> lower_witness;  // Hankel bound of the combination, on failure
};

// One Mazur step: find convex weights over the tail and a polynomial u with
// certified sup of (sum alpha_n f_n - u) below target. Members must share a
// grid and carry claimed bounds. Ties between equally good combinations are
// broken toward the earliest tail element.
CombinationResult find_convex_combination(const std::vector<SampledFunction>& tail,
                                          int degree, double target,
                                          const MazurConfig& cfg = {},
                                          int step = 1, int tail_start = 1);

struct TailSchedule {
  int start = 1;
  int end = 4;
  int degree = 32;
};

// Default schedule for step m: tail f_m..f_{tail_factor * m}, degree
// degree_factor * m. Checks the provider holds the whole tail.
TailSchedule greedy_tail_schedule(const SequenceProvider& seq, int m,
                                  int tail_factor = 4, int degree_factor = 32);

}  // namespace capprox
