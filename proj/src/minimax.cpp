#include "capprox/minimax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace capprox {

namespace {

constexpr int kPhaseRefresh = 64;

// In-place Cholesky of a Hermitian matrix (row-major, lower triangle used).
bool cholesky(std::vector<cplx>& a, int n) {
  for (int k = 0; k < n; ++k) {
    double diag = a[static_cast<size_t>(k) * n + k].real();
    for (int m = 0; m < k; ++m) diag -= std::norm(a[static_cast<size_t>(k) * n + m]);
    if (!(diag > 0.0) || !std::isfinite(diag)) return false;
    double lkk = std::sqrt(diag);
    a[static_cast<size_t>(k) * n + k] = lkk;
    for (int i = k + 1; i < n; ++i) {
      cplx s = a[static_cast<size_t>(i) * n + k];
      for (int m = 0; m < k; ++m)
        s -= a[static_cast<size_t>(i) * n + m] *
             std::conj(a[static_cast<size_t>(k) * n + m]);
      a[static_cast<size_t>(i) * n + k] = s / lkk;
    }
  }
  return true;
}

void chol_solve(const std::vector<cplx>& l, int n, std::vector<cplx>& b) {
  for (int i = 0; i < n; ++i) {
    cplx s = b[static_cast<size_t>(i)];
    for (int m = 0; m < i; ++m)
      s -= l[static_cast<size_t>(i) * n + m] * b[static_cast<size_t>(m)];
    b[static_cast<size_t>(i)] = s / l[static_cast<size_t>(i) * n + i].real();
  }
  for (int i = n - 1; i >= 0; --i) {
    cplx s = b[static_cast<size_t>(i)];
    for (int m = i + 1; m < n; ++m)
      s -= std::conj(l[static_cast<size_t>(m) * n + i]) * b[static_cast<size_t>(m)];
    b[static_cast<size_t>(i)] = s / l[static_cast<size_t>(i) * n + i].real();
  }
}

// Minimize alpha^T S alpha + tie * c^T alpha over the simplex (FISTA).
std::vector<double> fista_simplex(const std::vector<double>& s_mat,
                                  const std::vector<double>& c, double tie,
                                  std::vector<double> alpha, int iters) {
  int t = static_cast<int>(alpha.size());
  double maxrow = 0.0;
  for (int i = 0; i < t; ++i) {
    double row = 0.0;
    for (int m = 0; m < t; ++m)
      row += std::abs(s_mat[static_cast<size_t>(i) * t + m]);
    maxrow = std::max(maxrow, row);
  }
  double lip = 2.0 * maxrow;
  if (lip <= tie * 1e-6) {
    // Quadratic part is negligible: the linear preference picks a vertex.
    if (tie > 0.0) {
      int best = 0;
      for (int i = 1; i < t; ++i)
        if (c[static_cast<size_t>(i)] < c[static_cast<size_t>(best)]) best = i;
      std::vector<double> vertex(static_cast<size_t>(t), 0.0);
      vertex[static_cast<size_t>(best)] = 1.0;
      return vertex;
    }
    return project_simplex(std::move(alpha));
  }

  std::vector<double> x = project_simplex(std::move(alpha));
  std::vector<double> y = x;
  std::vector<double> grad(static_cast<size_t>(t));
  std::vector<double> xn(static_cast<size_t>(t));
  double mom = 1.0;
  for (int it = 0; it < iters; ++it) {
    for (int i = 0; i < t; ++i) {
      double g = tie * c[static_cast<size_t>(i)];
      for (int m = 0; m < t; ++m)
        g += 2.0 * s_mat[static_cast<size_t>(i) * t + m] * y[static_cast<size_t>(m)];
      grad[static_cast<size_t>(i)] = g;
    }
    for (int i = 0; i < t; ++i)
      xn[static_cast<size_t>(i)] = y[static_cast<size_t>(i)] -
                                   grad[static_cast<size_t>(i)] / lip;
    xn = project_simplex(std::move(xn));
    double mom_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * mom * mom));
    for (int i = 0; i < t; ++i)
      y[static_cast<size_t>(i)] = xn[static_cast<size_t>(i)] +
                                  (mom - 1.0) / mom_next *
                                      (xn[static_cast<size_t>(i)] - x[static_cast<size_t>(i)]);
    x = xn;
    xn.resize(static_cast<size_t>(t));
    mom = mom_next;
  }
  return x;
}

}  // namespace

std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> u = v;
  std::sort(u.begin(), u.end(), std::greater<double>());
  double css = 0.0, tau = 0.0;
  int rho = 0;
  for (size_t i = 0; i < u.size(); ++i) {
    css += u[i];
    double ti = (css - 1.0) / static_cast<double>(i + 1);
    if (u[i] - ti > 0.0) {
      rho = static_cast<int>(i + 1);
      tau = ti;
    }
  }
  if (rho == 0) {
    // All mass clipped; fall back to uniform.
    std::fill(v.begin(), v.end(), 1.0 / static_cast<double>(v.size()));
    return v;
  }
  for (double& x : v) x = std::max(0.0, x - tau);
  return v;
}

MinimaxSolution minimax_fit(const std::vector<const SampledFunction*>& members,
                            int degree, const MinimaxOptions& opt) {
  if (members.empty()) throw PreconditionError("minimax_fit: no members");
  if (degree < 0) throw ConfigError("minimax_fit: negative degree");
  const GridPtr& grid = members.front()->grid;
  for (const SampledFunction* f : members) {
    if (!f) throw PreconditionError("minimax_fit: null member");
    f->validate();
    if (f->grid->size() != grid->size())
      throw GridError("minimax_fit: members on different grids");
  }
  int n = grid->size();
  if (static_cast<double>(n) <= kPi * static_cast<double>(degree))
    throw GridError("minimax_fit: grid too coarse for degree");

  int t = static_cast<int>(members.size());
  int dim = degree + 1;
  size_t un = static_cast<size_t>(n);

  double scale = 0.0;
  for (const SampledFunction* f : members) scale = std::max(scale, f->grid_max());

  MinimaxSolution best;
  best.u = AnalyticPolynomial::zero(degree);
  best.alpha.assign(static_cast<size_t>(t), 1.0 / static_cast<double>(t));
  best.grid_value = std::numeric_limits<double>::infinity();

  if (scale == 0.0) {
    best.grid_value = 0.0;
    best.hit_floor = true;
    return best;
  }
  double floor_abs = opt.floor_rel * scale;

  const std::vector<double>& angles = grid->angles();
  const std::vector<cplx>& zs = grid->points();

  std::vector<double> w(un, 1.0 / static_cast<double>(n));
  std::vector<double> alpha(static_cast<size_t>(t), 1.0 / static_cast<double>(t));
  std::vector<double> tie_cost(static_cast<size_t>(t), 0.0);
  for (int i = 0; i < t; ++i)
    tie_cost[static_cast<size_t>(i)] =
        static_cast<double>(i) / static_cast<double>(std::max(1, t - 1));

  std::vector<cplx> tau(static_cast<size_t>(dim));
  std::vector<cplx> phase(un);
  std::vector<cplx> gram(static_cast<size_t>(dim) * dim);
  std::vector<std::vector<cplx>> rhs(static_cast<size_t>(t));
  std::vector<std::vector<cplx>> resid(static_cast<size_t>(t),
                                       std::vector<cplx>(un));
  std::vector<double> s_mat(static_cast<size_t>(t) * t);
  std::vector<cplx> combined(un);
  int stall = 0;

  for (int iter = 1; iter <= opt.max_iters; ++iter) {
    // Normal equations: gram is Hermitian Toeplitz in tau, one RHS per member.
    for (auto& r : rhs) r.assign(static_cast<size_t>(dim), cplx{});
    std::fill(phase.begin(), phase.end(), cplx(1.0, 0.0));
    for (int k = 0; k < dim; ++k) {
      if (k > 0) {
        if (k % kPhaseRefresh == 0) {
          for (size_t j = 0; j < un; ++j)
            phase[j] = std::polar(1.0, -static_cast<double>(k) * angles[j]);
        } else {
          for (size_t j = 0; j < un; ++j) phase[j] *= std::conj(zs[j]);
        }
      }
      cplx tk{};
      for (size_t j = 0; j < un; ++j) tk += w[j] * phase[j];
      tau[static_cast<size_t>(k)] = std::conj(tk);
      for (int m = 0; m < t; ++m) {
        const std::vector<cplx>& fv = members[static_cast<size_t>(m)]->values;
        cplx bk{};
        for (size_t j = 0; j < un; ++j) bk += w[j] * fv[j] * phase[j];
        rhs[static_cast<size_t>(m)][static_cast<size_t>(k)] = bk;
      }
    }

    bool factored = false;
    double t0 = tau[0].real();
    for (double ridge : {1e-14, 1e-11, 1e-8, 1e-5}) {
      for (int i = 0; i < dim; ++i)
        for (int m = 0; m <= i; ++m)
          gram[static_cast<size_t>(i) * dim + m] = std::conj(tau[static_cast<size_t>(i - m)]);
      for (int i = 0; i < dim; ++i)
        gram[static_cast<size_t>(i) * dim + i] += ridge * t0;
      if (cholesky(gram, dim)) {
        factored = true;
        break;
      }
    }
    if (!factored) throw SolverError("minimax_fit: normal equations not factorable");

    for (int m = 0; m < t; ++m) chol_solve(gram, dim, rhs[static_cast<size_t>(m)]);

    for (int m = 0; m < t; ++m) {
      const std::vector<cplx>& coeff = rhs[static_cast<size_t>(m)];
      const std::vector<cplx>& fv = members[static_cast<size_t>(m)]->values;
      std::vector<cplx>& rm = resid[static_cast<size_t>(m)];
      for (size_t j = 0; j < un; ++j) {
        cplx acc = coeff[static_cast<size_t>(dim - 1)];
        for (int k = dim - 2; k >= 0; --k)
          acc = acc * zs[j] + coeff[static_cast<size_t>(k)];
        rm[j] = fv[j] - acc;
      }
    }

    if (t > 1) {
      for (int a = 0; a < t; ++a)
        for (int b = a; b < t; ++b) {
          double s = 0.0;
          const std::vector<cplx>& ra = resid[static_cast<size_t>(a)];
          const std::vector<cplx>& rb = resid[static_cast<size_t>(b)];
          for (size_t j = 0; j < un; ++j)
            s += w[j] * (ra[j].real() * rb[j].real() + ra[j].imag() * rb[j].imag());
          s_mat[static_cast<size_t>(a) * t + b] = s;
          s_mat[static_cast<size_t>(b) * t + a] = s;
        }
      alpha = fista_simplex(s_mat, tie_cost, opt.tie_break, std::move(alpha),
                            opt.simplex_iters);
    }

    std::fill(combined.begin(), combined.end(), cplx{});
    for (int m = 0; m < t; ++m) {
      double am = alpha[static_cast<size_t>(m)];
      if (am == 0.0) continue;
      const std::vector<cplx>& rm = resid[static_cast<size_t>(m)];
      for (size_t j = 0; j < un; ++j) combined[j] += am * rm[j];
    }
    double gv = 0.0;
    for (size_t j = 0; j < un; ++j) gv = std::max(gv, std::abs(combined[j]));

    if (t == 1) {
      double dv = 0.0;
      for (size_t j = 0; j < un; ++j) dv += w[j] * std::norm(combined[j]);
      best.dual_value = std::max(best.dual_value, std::sqrt(dv));
    }

    if (gv < best.grid_value) {
      bool significant = gv < best.grid_value * (1.0 - opt.stall_rel);
      best.grid_value = gv;
      best.alpha = alpha;
      std::vector<cplx> uc(static_cast<size_t>(dim));
      for (int m = 0; m < t; ++m) {
        double am = alpha[static_cast<size_t>(m)];
        if (am == 0.0) continue;
        for (int k = 0; k < dim; ++k)
          uc[static_cast<size_t>(k)] += am * rhs[static_cast<size_t>(m)][static_cast<size_t>(k)];
      }
      best.u = AnalyticPolynomial(std::move(uc));
      best.iterations = iter;
      stall = significant ? 0 : stall + 1;
    } else {
      ++stall;
    }

    if (gv <= floor_abs) {
      best.hit_floor = true;
      break;
    }
    if (stall >= opt.stall_iters) break;

    double delta = 1e-12 * std::max(gv, floor_abs);
    double wsum = 0.0;
    for (size_t j = 0; j < un; ++j) {
      w[j] *= std::abs(combined[j]) + delta;
      wsum += w[j];
    }
    if (!(wsum > 0.0) || !std::isfinite(wsum))
      throw SolverError("minimax_fit: weight collapse");
    for (size_t j = 0; j < un; ++j) w[j] /= wsum;
  }

  double asum = 0.0;
  for (double a : best.alpha) asum += a;
  if (asum > 0.0)
    for (double& a : best.alpha) a /= asum;
  return best;
}

MinimaxSolution minimax_fit(const SampledFunction& f, int degree,
                            const MinimaxOptions& opt) {
  std::vector<const SampledFunction*> members{&f};
  return minimax_fit(members, degree, opt);
}

}  // namespace capprox
