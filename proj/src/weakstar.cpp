#include "capprox/weakstar.hpp"

#include <algorithm>
#include <cmath>

namespace capprox {

SampledFunction SequenceProvider::at(int n) const {
  if (n < 1) throw ConfigError("sequence: index must be >= 1");
  if (n > length) throw ConfigError("sequence: index beyond available prefix");
  if (!generator) throw ConfigError("sequence: missing generator");
  SampledFunction f = generator(n);
  if (!f.claimed_bound) f.claimed_bound = uniform_bound;
  f.validate();
  if (grid && f.grid->size() != grid->size())
    throw GridError("sequence: member grid does not match");
  if (*f.claimed_bound > uniform_bound * (1.0 + 1e-12) + 1e-15)
    throw BoundViolationError("sequence: member claims more than the uniform bound");
  return f;
}

void SequenceProvider::validate() const {
  if (!grid) throw ConfigError("sequence: missing grid");
  if (length < 0) throw ConfigError("sequence: negative length");
  if (uniform_bound < 0.0) throw ConfigError("sequence: negative bound");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::not_converged: return "not-converged";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

double WeakStarReport::deviation_max(int n) const {
  const std::vector<double>& row = deviations.at(static_cast<size_t>(n - 1));
  double m = 0.0;
  for (double d : row) m = std::max(m, d);
  return m;
}

WeakStarReport check_weak_star(const SequenceProvider& seq, const SampledFunction& g,
                               int window, double tol, int prefix) {
  seq.validate();
  g.validate();
  if (prefix < 1) throw ConfigError("weak-star: prefix must be >= 1");
  if (prefix > seq.length)
    throw ConfigError("weak-star: prefix beyond available sequence");
  if (tol <= 0.0) throw ConfigError("weak-star: tolerance must be positive");
  if (g.grid->size() != seq.grid->size())
    throw GridError("weak-star: limit sampled on a different grid");

  TrigCoefficients cg = fourier_window(g, window);

  WeakStarReport report;
  report.window = window;
  report.prefix = prefix;
  report.tol = tol;
  report.deviations.resize(static_cast<size_t>(prefix));

  for (int n = 1; n <= prefix; ++n) {
    TrigCoefficients cn = fourier_window(seq.at(n), window);
    std::vector<double>& row = report.deviations[static_cast<size_t>(n - 1)];
    row.resize(static_cast<size_t>(2 * window + 1));
    for (int k = -window; k <= window; ++k)
      row[static_cast<size_t>(k + window)] = std::abs(cn.at(k) - cg.at(k));
  }

  report.final_deviation = report.deviation_max(prefix);

  int tail_len = (prefix + 3) / 4;
  int tail_first = prefix - tail_len + 1;
  double tail_max = 0.0;
  for (int n = tail_first; n <= prefix; ++n) {
    const std::vector<double>& row = report.deviations[static_cast<size_t>(n - 1)];
    for (int k = -window; k <= window; ++k) {
      double d = row[static_cast<size_t>(k + window)];
      if (d > tail_max) {
        tail_max = d;
        report.worst_n = n;
        report.worst_k = k;
        report.worst_deviation = d;
      }
    }
  }
  if (report.worst_n == 0) {  // all-zero tail
    report.worst_n = tail_first;
    report.worst_k = -window;
  }

  if (report.final_deviation <= tol && tail_max <= 3.0 * tol) {
    report.verdict = Verdict::converged;
    return report;
  }

  int half = prefix / 2;
  double head_max = 0.0, back_max = 0.0;
  for (int n = 1; n <= half; ++n) head_max = std::max(head_max, report.deviation_max(n));
  for (int n = half + 1; n <= prefix; ++n)
    back_max = std::max(back_max, report.deviation_max(n));
  if (half >= 1 && back_max <= head_max - 2.0 * tol)
    report.verdict = Verdict::inconclusive;
  else
    report.verdict = Verdict::not_converged;
  return report;
}

std::vector<cplx> interior_ring(double radius, int count) {
  if (radius <= 0.0 || radius >= 1.0)
    throw DomainError("interior_ring: radius must lie in (0, 1)");
  if (count < 1) throw ConfigError("interior_ring: count must be >= 1");
  std::vector<cplx> pts(static_cast<size_t>(count));
  for (int j = 0; j < count; ++j)
    pts[static_cast<size_t>(j)] =
        std::polar(radius, kTwoPi * static_cast<double>(j) / static_cast<double>(count));
  return pts;
}

KhavinsonReport verify_khavinson(const std::vector<AnalyticPolynomial>& family,
                                 double bound, const std::vector<cplx>& interior_samples,
                                 const BoundedAnalyticWitness& g, const GridPtr& grid,
                                 int window, double tol, double bound_slack) {
  if (family.empty()) throw ConfigError("verify: empty family");
  if (interior_samples.empty()) throw ConfigError("verify: no interior samples");
  if (!grid) throw GridError("verify: missing grid");
  for (cplx z : interior_samples)
    if (std::abs(z) >= 1.0)
      throw DomainError("verify: interior sample outside the open disk");

  KhavinsonReport report;

  report.bounds_ok = true;
  double worst_certified = 0.0;
  for (const AnalyticPolynomial& p : family) {
    double certified = adaptive_sup_norm(p, bound_slack);
    worst_certified = std::max(worst_certified, certified);
    if (certified > bound * (1.0 + bound_slack) + 1e-15) report.bounds_ok = false;
  }

  int prefix = static_cast<int>(family.size());
  report.interior_errors.resize(static_cast<size_t>(prefix));
  for (int n = 0; n < prefix; ++n) {
    double err = 0.0;
    for (cplx z : interior_samples)
      err = std::max(err, std::abs(family[static_cast<size_t>(n)].evaluate(z) -
                                   g.evaluate(z)));
    report.interior_errors[static_cast<size_t>(n)] = err;
  }
  report.max_interior_error = report.interior_errors.back();
  report.pointwise_ok = report.max_interior_error <= tol;

  SequenceProvider provider;
  provider.grid = grid;
  provider.length = prefix;
  // carry the measured bound so the moment check still runs on a family
  // that violates the declared one; bounds_ok reports the violation
  provider.uniform_bound = std::max(bound * (1.0 + bound_slack), worst_certified);
  provider.descriptor = "polynomial-family";
  provider.generator = [&family, grid](int n) {
    return sample_polynomial(family[static_cast<size_t>(n - 1)], grid);
  };
  report.boundary = check_weak_star(provider, boundary_samples(g, grid), window,
                                    tol, prefix);

  report.theorem_violation = report.bounds_ok && report.pointwise_ok &&
                             report.boundary.verdict == Verdict::not_converged;
  return report;
}

}  // namespace capprox
