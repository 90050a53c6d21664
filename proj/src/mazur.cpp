#include "capprox/mazur.hpp"

#include <algorithm>
#include <cmath>

#include "capprox/nehari.hpp"

namespace capprox {

void SimplexWeights::validate() const {
  if (alpha.empty()) throw PreconditionError("weights: empty");
  if (step < 1 || tail_start < 1) throw PreconditionError("weights: bad indices");
  double sum = 0.0;
  for (double a : alpha) {
    if (a < 0.0) throw PreconditionError("weights: negative entry");
    sum += a;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw PreconditionError("weights: sum differs from 1");
}

CombinationResult find_convex_combination(const std::vector<SampledFunction>& tail,
                                          int degree, double target,
                                          const MazurConfig& cfg, int step,
                                          int tail_start) {
  if (tail.empty()) throw PreconditionError("mazur: empty tail");
  if (target <= 0.0) throw ConfigError("mazur: target must be positive");

  double bound = 0.0;
  for (const SampledFunction& f : tail) {
    f.validate();
    if (!f.claimed_bound)
      throw PreconditionError("mazur: tail member lacks a claimed bound");
    bound = std::max(bound, *f.claimed_bound);
  }

  MinimaxOptions opt = cfg.solver;
  opt.tie_break = cfg.tie_break_rel * bound * bound;

  std::vector<const SampledFunction*> members;
  members.reserve(tail.size());
  for (const SampledFunction& f : tail) members.push_back(&f);
  MinimaxSolution sol = minimax_fit(members, degree, opt);

  CombinationResult out;
  out.weights.step = step;
  out.weights.tail_start = tail_start;
  out.weights.alpha = sol.alpha;
  out.weights.validate();
  out.target = target;

  double trim_abs = cfg.trim_rel * std::max(sol.u.max_coefficient(), bound);
  out.u = sol.u.trimmed(trim_abs);

  const GridPtr& grid = tail.front().grid;
  int n = grid->size();
  size_t un = static_cast<size_t>(n);

  SampledFunction combo;
  combo.grid = grid;
  combo.values.assign(un, cplx{});
  std::optional<int> combo_band = 0;
  for (size_t m = 0; m < tail.size(); ++m) {
    double am = out.weights.alpha[m];
    if (combo_band) {
      if (tail[m].band_limit)
        combo_band = std::max(*combo_band, *tail[m].band_limit);
      else
        combo_band.reset();
    }
    if (am == 0.0) continue;
    for (size_t j = 0; j < un; ++j) combo.values[j] += am * tail[m].values[j];
  }
  combo.claimed_bound = bound;
  combo.band_limit = combo_band;

  SampledFunction residual;
  residual.grid = grid;
  residual.values.resize(un);
  double grid_res = 0.0;
  double u_grid_max = 0.0;
  for (int j = 0; j < n; ++j) {
    cplx uv = out.u.evaluate(grid->point(j));
    u_grid_max = std::max(u_grid_max, std::abs(uv));
    cplx r = combo.values[static_cast<size_t>(j)] - uv;
    residual.values[static_cast<size_t>(j)] = r;
    grid_res = std::max(grid_res, std::abs(r));
  }

  double scale = std::max(bound, 1e-300);
  int band;
  if (grid_res <= 1e-12 * scale) {
    band = out.u.effective_degree();
  } else if (combo_band) {
    band = std::max(*combo_band, out.u.effective_degree());
  } else {
    double thr = std::max(cfg.band_rel * grid_res, 1e-13 * scale);
    band = std::max(measured_band(residual, thr), out.u.effective_degree());
  }

  out.achieved_grid = grid_res;
  out.error_degree = band;
  out.inflation = bernstein_inflation(band, n);
  out.achieved = grid_res * out.inflation;
  out.success = out.achieved < target;
  out.u_grid_max = u_grid_max;
  out.u_bound = certified_sup_norm(out.u, n);

  // Grid form of the triangle bound |u| <= M + residual; a violation means
  // the solver or the claimed bounds are inconsistent.
  if (u_grid_max > bound + grid_res + 1e-9 * std::max(1.0, bound))
    throw SolverError("mazur: combination exceeds its bound on the grid");

  if (!out.success) {
    TrigCoefficients c = fourier_window(combo, 2 * cfg.hankel_size - 1);
    out.lower_witness = hankel_lower_bound(c, cfg.hankel_size);
  }
  return out;
}

TailSchedule greedy_tail_schedule(const SequenceProvider& seq, int m,
                                  int tail_factor, int degree_factor) {
  if (m < 1) throw ConfigError("tail schedule: step must be >= 1");
  if (tail_factor < 1) throw ConfigError("tail schedule: tail factor must be >= 1");
  if (degree_factor < 0) throw ConfigError("tail schedule: negative degree factor");
  TailSchedule sched;
  sched.start = m;
  sched.end = tail_factor * m;
  sched.degree = degree_factor * m;
  if (seq.length < sched.end)
    throw ConfigError("tail schedule: sequence prefix too short for step " +
                      std::to_string(m));
  return sched;
}

}  // namespace capprox
