#pragma once

#include <functional>
#include <string>
#include <vector>

#include "capprox/circle.hpp"
#include "capprox/hardy.hpp"

namespace capprox {

// Lazily generated sequence f_1, f_2, ... of boundary samples sharing one
// grid and one uniform sup-norm bound. length is the available prefix.
struct SequenceProvider {
  std::function<SampledFunction(int)> generator;  // index n >= 1
  GridPtr grid;
  double uniform_bound = 1.0;
  int length = 0;
  std::string descriptor;

  SampledFunction at(int n) const;
  void validate() const;
};

enum class Verdict { converged, not_converged, inconclusive };

const char* to_string(Verdict v);

struct WeakStarReport {
  int window = 0;  // K
  int prefix = 0;  // L
  double tol = 0.0;
  // deviations[n-1][k + window] = |c_k(f_n) - c_k(g)|
  std::vector<std::vector<double>> deviations;
  Verdict verdict = Verdict::inconclusive;
  int worst_k = 0;
  int worst_n = 0;
  double worst_deviation = 0.0;
  double final_deviation = 0.0;  // D(L) = max_k deviation of the last member

  double deviation_max(int n) const;  // D(n), n >= 1
};

// Tests the moment condition against every monomial in the window: converged
// when D(L) <= tol and the tail is not increasing beyond 2*tol; not_converged
// when the tail is flat or growing above tol; inconclusive otherwise.
WeakStarReport check_weak_star(const SequenceProvider& seq, const SampledFunction& g,
                               int window, double tol, int prefix);

struct KhavinsonReport {
  bool bounds_ok = false;
  bool pointwise_ok = false;
  double max_interior_error = 0.0;         // last member, max over samples
  std::vector<double> interior_errors;     // per member
  WeakStarReport boundary;
  bool theorem_violation = false;          // interior ok, boundary refuted

  bool pass() const { return bounds_ok && pointwise_ok && boundary.verdict == Verdict::converged; }
};

// Checks a uniformly bounded polynomial family against its putative limit:
// certified sup-norm bounds, pointwise convergence at interior samples, and
// the boundary moment condition.
KhavinsonReport verify_khavinson(const std::vector<AnalyticPolynomial>& family,
                                 double bound, const std::vector<cplx>& interior_samples,
                                 const BoundedAnalyticWitness& g, const GridPtr& grid,
                                 int window, double tol, double bound_slack = 1e-3);

// 16 equispaced points on |z| = radius; handy interior sample set.
std::vector<cplx> interior_ring(double radius, int count = 16);

}  // namespace capprox
