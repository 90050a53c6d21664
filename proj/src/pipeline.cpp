#include "capprox/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace capprox {

namespace {

int thread_cap() {
  const char* env = std::getenv("APPROX_THREADS");
  long cap = 0;
  if (env && *env) cap = std::strtol(env, nullptr, 10);
  if (cap < 1) {
    unsigned hw = std::thread::hardware_concurrency();
    cap = hw ? static_cast<long>(hw) : 1;
  }
  return static_cast<int>(std::min<long>(cap, 64));
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  size_t n = v.size();
  if (n == 0) return 0.0;
  if (n % 2 == 1) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

}  // namespace

void TargetSet::validate() const {
  if (angles.empty()) throw ConfigError("targets: empty");
  if (values.size() != angles.size())
    throw ConfigError("targets: angle/value count mismatch");
  for (double a : angles)
    if (!std::isfinite(a) || a < 0.0 || a >= kTwoPi)
      throw ConfigError("targets: angle outside [0, 2 pi)");
  std::vector<double> sorted = angles;
  std::sort(sorted.begin(), sorted.end());
  for (size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw ConfigError("targets: duplicate angle");
}

double PipelineConfig::effective_verify_tol() const {
  if (verify_tol > 0.0) return verify_tol;
  return 3.0 * bound / static_cast<double>(steps + 2);
}

void PipelineConfig::validate() const {
  if (bound <= 0.0) throw ConfigError("pipeline: bound must be positive");
  if (grid_n < 8) throw ConfigError("pipeline: grid too small");
  if (steps < 1) throw ConfigError("pipeline: need at least one step");
  if (window < 0 || 2 * window + 1 > grid_n)
    throw ConfigError("pipeline: reporting window does not fit the grid");
  if (tail_factor < 1) throw ConfigError("pipeline: tail factor must be >= 1");
  if (degree_factor < 0) throw ConfigError("pipeline: negative degree factor");
  if (static_cast<double>(grid_n) <= kPi * static_cast<double>(max_degree()))
    throw GridError("pipeline: grid too coarse for the top step degree");
  if (precheck.tol <= 0.0) throw ConfigError("pipeline: precheck tolerance must be positive");
  if (precheck.prefix < 1) throw ConfigError("pipeline: precheck prefix must be >= 1");
  if (2 * precheck.window + 1 > grid_n)
    throw ConfigError("pipeline: precheck window does not fit the grid");
}

std::vector<AnalyticPolynomial> PipelineReport::emitted() const {
  std::vector<AnalyticPolynomial> out;
  for (const StepRecord& rec : records)
    if (rec.success) out.push_back(rec.p);
  return out;
}

AnalyticPolynomial rescale_to_bound(const AnalyticPolynomial& q, double bound,
                                    int m, int grid_n) {
  if (bound <= 0.0) throw ConfigError("rescale: bound must be positive");
  if (m < 1) throw ConfigError("rescale: step must be >= 1");
  double margin = 2.0 / static_cast<double>(m);
  double certified = certified_sup_norm(q, grid_n);
  if (certified > bound + margin + 1e-9 * std::max(1.0, bound))
    throw PreconditionError("rescale: certified sup exceeds bound + 2/m");

  AnalyticPolynomial p = q.scaled(bound / (bound + margin));
  for (int pass = 0; pass < 4; ++pass) {
    double b = certified_sup_norm(p, grid_n);
    if (b <= bound) return p;
    p = p.scaled((bound / b) * (1.0 - 1e-14));
  }
  throw SolverError("rescale: could not enforce the bound");
}

namespace {

// One doubling pass of Cesaro smoothing, used when the combination is to be
// treated as a general sampled function rather than a polynomial.
AnalyticPolynomial cesaro_smooth(const AnalyticPolynomial& u, const GridPtr& grid,
                                 int m, double bound, StepRecord& rec) {
  SampledFunction su = sample_polynomial(u, grid);
  int n = grid->size();
  int du = u.effective_degree();
  int wmax = n / 2 - 1;
  int win = std::min(wmax, std::max(2 * du, 8));
  TrigCoefficients cu = fourier_window(su, win);

  int order = std::min(std::max(du, 1), win);
  for (;;) {
    TrigCoefficients sig = fejer_mean(cu, order);
    double dev = 0.0;
    for (int j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(sig.evaluate(grid->angle(j)) -
                                   su.values[static_cast<size_t>(j)]));
    double certified = dev * bernstein_inflation(std::max(order, du), n);
    if (certified < 1.0 / static_cast<double>(m) || order == win) {
      rec.note = certified < 1.0 / static_cast<double>(m) ? "cesaro"
                                                          : "cesaro-uncertified";
      return analytic_part(sig, 1e-9 * std::max(1.0, bound));
    }
    order = std::min(2 * order, win);
  }
}

StepRecord run_step(const SequenceProvider& seq, const TargetSet& targets,
                    const TrigCoefficients* cg, const PipelineConfig& cfg, int m) {
  StepRecord rec;
  rec.m = m;
  rec.target = 1.0 / static_cast<double>(m);

  TailSchedule sched = greedy_tail_schedule(seq, m, cfg.tail_factor, cfg.degree_factor);
  std::vector<SampledFunction> tail;
  tail.reserve(static_cast<size_t>(sched.end - sched.start + 1));
  for (int n = sched.start; n <= sched.end; ++n) tail.push_back(seq.at(n));

  CombinationResult comb = find_convex_combination(tail, sched.degree, rec.target,
                                                   cfg.mazur, m, sched.start);
  rec.weights = comb.weights;
  rec.achieved = comb.achieved;
  rec.achieved_grid = comb.achieved_grid;
  rec.u_bound = comb.u_bound;
  rec.u_grid_max = comb.u_grid_max;
  rec.lower_witness = comb.lower_witness;
  rec.success = comb.success;
  if (!rec.success) return rec;

  AnalyticPolynomial q = comb.u;
  if (cfg.fejer_path) q = cesaro_smooth(comb.u, seq.grid, m, cfg.bound, rec);

  try {
    AnalyticPolynomial p = rescale_to_bound(q, cfg.bound, m, cfg.grid_n);
    rec.rescale_factor = cfg.bound / (cfg.bound + 2.0 / static_cast<double>(m));
    rec.p_sup = certified_sup_norm(p, cfg.grid_n);
    rec.p = std::move(p);
  } catch (const PreconditionError&) {
    rec.success = false;
    rec.note = "rescale precondition failed";
    return rec;
  }

  std::vector<double> errs;
  errs.reserve(targets.angles.size());
  double max_err = 0.0;
  for (size_t s = 0; s < targets.angles.size(); ++s) {
    cplx z = std::polar(1.0, targets.angles[s]);
    double e = std::abs(rec.p.evaluate(z) - targets.values[s]);
    errs.push_back(e);
    max_err = std::max(max_err, e);
  }
  rec.max_err = max_err;
  rec.median_err = median_of(std::move(errs));

  if (cg) {
    SampledFunction ps = sample_polynomial(rec.p, seq.grid);
    TrigCoefficients cp = fourier_window(ps, cfg.window);
    double dev = 0.0;
    for (int k = -cfg.window; k <= cfg.window; ++k)
      dev = std::max(dev, std::abs(cp.at(k) - cg->at(k)));
    rec.fourier_dev = dev;
  }
  return rec;
}

}  // namespace

PipelineReport run_sufficiency(const SequenceProvider& seq, const TargetSet& targets,
                               const std::optional<BoundedAnalyticWitness>& g,
                               const PipelineConfig& cfg) {
  cfg.validate();
  seq.validate();
  targets.validate();
  if (seq.uniform_bound > cfg.bound * (1.0 + 1e-12) + 1e-15)
    throw PreconditionError("pipeline: sequence bound exceeds the target bound");
  if (seq.length < cfg.tail_factor * cfg.steps)
    throw ConfigError("pipeline: sequence prefix too short for the step count");

  PipelineReport report;
  report.bound = cfg.bound;
  report.grid_n = cfg.grid_n;
  report.steps = cfg.steps;
  report.window = cfg.window;

  std::optional<TrigCoefficients> cg;
  SampledFunction gb;
  if (g) {
    gb = boundary_samples(*g, seq.grid);
    cg = fourier_window(gb, cfg.window);
  }

  if (!cfg.override_weak_star) {
    if (!g)
      throw ConfigError("pipeline: no witness to check against; set the override to proceed");
    int pre = std::min(cfg.precheck.prefix, seq.length);
    WeakStarReport ws =
        check_weak_star(seq, gb, cfg.precheck.window, cfg.precheck.tol, pre);
    report.precheck_ran = true;
    report.precheck_verdict = ws.verdict;
    if (ws.verdict == Verdict::not_converged)
      throw PreconditionError("pipeline: sequence refutes the weak-star precondition");
  }

  int steps = cfg.steps;
  report.records.resize(static_cast<size_t>(steps));
  const TrigCoefficients* cgp = cg ? &*cg : nullptr;

  int cap = std::min(thread_cap(), steps);
  if (cap <= 1) {
    for (int m = 1; m <= steps; ++m)
      report.records[static_cast<size_t>(m - 1)] =
          run_step(seq, targets, cgp, cfg, m);
  } else {
    std::vector<std::exception_ptr> errors(static_cast<size_t>(steps));
    std::atomic<int> next{1};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(cap));
    for (int w = 0; w < cap; ++w) {
      workers.emplace_back([&]() {
        for (;;) {
          int m = next.fetch_add(1);
          if (m > steps) return;
          try {
            report.records[static_cast<size_t>(m - 1)] =
                run_step(seq, targets, cgp, cfg, m);
          } catch (...) {
            errors[static_cast<size_t>(m - 1)] = std::current_exception();
          }
        }
      });
    }
    for (std::thread& t : workers) t.join();
    for (const std::exception_ptr& e : errors)
      if (e) std::rethrow_exception(e);
  }

  int successes = 0;
  for (const StepRecord& rec : report.records) successes += rec.success ? 1 : 0;
  report.verdict = successes == steps ? "positive"
                   : successes == 0   ? "negative"
                                      : "mixed";
  return report;
}

namespace {

ConditionsVerdict verify_core(
    const std::vector<double>& certified_bounds,
    const std::vector<std::vector<double>>& target_errors,
    const SequenceProvider& provider, const SampledFunction& g_boundary,
    double bound, int window, double tol) {
  ConditionsVerdict v;
  v.bound_ok = true;
  for (double b : certified_bounds) {
    v.worst_bound = std::max(v.worst_bound, b);
    if (b > bound + tol) v.bound_ok = false;
  }

  int prefix = static_cast<int>(target_errors.size());
  int tail_len = (prefix + 3) / 4;
  for (int n = prefix - tail_len + 1; n <= prefix; ++n)
    for (double e : target_errors[static_cast<size_t>(n - 1)])
      v.tail_max_err = std::max(v.tail_max_err, e);
  v.pointwise_ok = v.tail_max_err <= tol;

  WeakStarReport ws = check_weak_star(provider, g_boundary, window, tol, prefix);
  v.weakstar = ws.verdict;
  return v;
}

}  // namespace

ConditionsVerdict verify_conditions(const std::vector<AnalyticPolynomial>& family,
                                    const TargetSet& targets, double bound,
                                    const SampledFunction& g_boundary, int window,
                                    double tol) {
  if (family.empty()) throw ConfigError("verify: empty family");
  if (tol <= 0.0) throw ConfigError("verify: tolerance must be positive");
  targets.validate();
  g_boundary.validate();

  std::vector<double> bounds;
  bounds.reserve(family.size());
  for (const AnalyticPolynomial& p : family)
    bounds.push_back(adaptive_sup_norm(p, 1e-3));

  std::vector<std::vector<double>> errors(family.size());
  for (size_t n = 0; n < family.size(); ++n) {
    errors[n].reserve(targets.angles.size());
    for (size_t s = 0; s < targets.angles.size(); ++s) {
      cplx z = std::polar(1.0, targets.angles[s]);
      errors[n].push_back(std::abs(family[n].evaluate(z) - targets.values[s]));
    }
  }

  double worst = 0.0;
  for (double b : bounds) worst = std::max(worst, b);
  SequenceProvider provider;
  provider.grid = g_boundary.grid;
  provider.length = static_cast<int>(family.size());
  provider.uniform_bound = std::max(bound + tol, worst) * (1.0 + 1e-9);
  provider.descriptor = "verify-family";
  GridPtr grid = g_boundary.grid;
  provider.generator = [&family, grid](int n) {
    return sample_polynomial(family[static_cast<size_t>(n - 1)], grid);
  };

  return verify_core(bounds, errors, provider, g_boundary, bound, window, tol);
}

ConditionsVerdict verify_conditions(const std::vector<SampledFunction>& family,
                                    const TargetSet& targets, double bound,
                                    const SampledFunction& g_boundary, int window,
                                    double tol) {
  if (family.empty()) throw ConfigError("verify: empty family");
  if (tol <= 0.0) throw ConfigError("verify: tolerance must be positive");
  targets.validate();
  g_boundary.validate();

  int n_grid = g_boundary.grid->size();
  std::vector<double> bounds;
  bounds.reserve(family.size());
  for (const SampledFunction& f : family) {
    f.validate();
    if (f.grid->size() != n_grid)
      throw GridError("verify: member grid does not match the limit");
    bounds.push_back(f.grid_max());
  }

  // Pointwise errors at the grid points nearest to the target angles.
  std::vector<size_t> snap(targets.angles.size());
  for (size_t s = 0; s < targets.angles.size(); ++s) {
    double pos = targets.angles[s] / kTwoPi * static_cast<double>(n_grid);
    long j = std::lround(pos);
    snap[s] = static_cast<size_t>(((j % n_grid) + n_grid) % n_grid);
  }
  std::vector<std::vector<double>> errors(family.size());
  for (size_t n = 0; n < family.size(); ++n) {
    errors[n].reserve(targets.angles.size());
    for (size_t s = 0; s < targets.angles.size(); ++s)
      errors[n].push_back(std::abs(family[n].values[snap[s]] - targets.values[s]));
  }

  double worst = 0.0;
  for (double b : bounds) worst = std::max(worst, b);
  SequenceProvider provider;
  provider.grid = g_boundary.grid;
  provider.length = static_cast<int>(family.size());
  provider.uniform_bound = std::max(bound + tol, worst) * (1.0 + 1e-9);
  provider.descriptor = "verify-samples";
  provider.generator = [&family](int n) {
    return family[static_cast<size_t>(n - 1)];
  };

  return verify_core(bounds, errors, provider, g_boundary, bound, window, tol);
}

}  // namespace capprox
