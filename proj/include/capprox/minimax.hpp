#pragma once

#include <vector>

#include "capprox/circle.hpp"

namespace capprox {

// Discrete Chebyshev fit on the grid by iteratively reweighted least squares,
// jointly over a simplex combination of the members and a polynomial of the
// given degree:
//
//   min over (alpha in simplex, deg u <= d) of
//   max_j | sum_n alpha_n F_n(theta_j) - u(e^{i theta_j}) |.
//
// With a single member the simplex is trivial and this is plain polynomial
// minimax. tie_break > 0 adds a linear preference toward early members when
// several combinations are equally good; it must carry the square of the
// data scale to be dimensionally consistent.
struct MinimaxOptions {
  int max_iters = 150;
  int stall_iters = 12;
  double stall_rel = 1e-9;
  double floor_rel = 1e-13;
  double tie_break = 0.0;
  int simplex_iters = 300;
};

struct MinimaxSolution {
  AnalyticPolynomial u;
  std::vector<double> alpha;
  double grid_value = 0.0;  // max_j |residual| for the returned iterate
  double dual_value = 0.0;  // certified grid lower bound (single member only)
  int iterations = 0;
  bool hit_floor = false;
};

MinimaxSolution minimax_fit(const std::vector<const SampledFunction*>& members,
                            int degree, const MinimaxOptions& opt);
MinimaxSolution minimax_fit(const SampledFunction& f, int degree,
                            const MinimaxOptions& opt);

// Euclidean projection onto the probability simplex.
std::vector<double> project_simplex(std::vector<double> v);

}  // namespace capprox
