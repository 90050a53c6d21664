#include "capprox/circle.hpp"

#include <algorithm>
#include <cmath>

namespace capprox {

namespace {

constexpr int kPhaseRefresh = 64;  // resync recurrence phases this often

}  // namespace

CircleGrid::CircleGrid(int n) : n_(n) {
  if (n < 1) throw GridError("CircleGrid: size must be positive");
  angles_.resize(static_cast<size_t>(n));
  points_.resize(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
    angles_[static_cast<size_t>(j)] = theta;
    points_[static_cast<size_t>(j)] = std::polar(1.0, theta);
  }
}

GridPtr make_grid(int n) { return std::make_shared<const CircleGrid>(n); }

double SampledFunction::grid_max() const {
  double m = 0.0;
  for (const cplx& v : values) m = std::max(m, std::abs(v));
  return m;
}

void SampledFunction::validate() const {
  if (!grid) throw GridError("SampledFunction: missing grid");
  if (values.size() != static_cast<size_t>(grid->size()))
    throw GridError("SampledFunction: value count does not match grid");
  if (claimed_bound) {
    if (*claimed_bound < 0.0)
      throw BoundViolationError("SampledFunction: negative claimed bound");
    double slack = 1e-9 * std::max(1.0, *claimed_bound);
    if (grid_max() > *claimed_bound + slack)
      throw BoundViolationError("SampledFunction: samples exceed claimed bound");
  }
  if (band_limit && *band_limit < 0)
    throw GridError("SampledFunction: negative band limit");
}

cplx TrigCoefficients::evaluate(double theta) const {
  cplx z = std::polar(1.0, theta);
  cplx zb = std::conj(z);
  cplx pos = at(window);
  for (int k = window - 1; k >= 0; --k) pos = pos * z + at(k);
  cplx neg = at(-window);
  for (int k = window - 1; k >= 1; --k) neg = neg * zb + at(-k);
  if (window >= 1) neg *= zb;
  return pos + (window >= 1 ? neg : cplx{});
}

double TrigCoefficients::negative_mass() const {
  double m = 0.0;
  for (int k = 1; k <= window; ++k) m += std::abs(at(-k));
  return m;
}

AnalyticPolynomial::AnalyticPolynomial(std::vector<cplx> coeff)
    : coeff_(std::move(coeff)) {
  if (coeff_.empty()) coeff_.assign(1, cplx{});
}

AnalyticPolynomial AnalyticPolynomial::zero(int degree) {
  if (degree < 0) degree = 0;
  return AnalyticPolynomial(std::vector<cplx>(static_cast<size_t>(degree) + 1));
}

int AnalyticPolynomial::effective_degree() const {
  for (int k = degree(); k >= 1; --k)
    if (coeff_[static_cast<size_t>(k)] != cplx{}) return k;
  return 0;
}

cplx AnalyticPolynomial::evaluate(cplx z) const {
  cplx acc = coeff_.back();
  for (size_t k = coeff_.size() - 1; k-- > 0;) acc = acc * z + coeff_[k];
  return acc;
}

double AnalyticPolynomial::max_coefficient() const {
  double m = 0.0;
  for (const cplx& c : coeff_) m = std::max(m, std::abs(c));
  return m;
}

AnalyticPolynomial AnalyticPolynomial::trimmed(double tol_abs) const {
  std::vector<cplx> out = coeff_;
  for (cplx& c : out)
    if (std::abs(c) <= tol_abs) c = cplx{};
  while (out.size() > 1 && out.back() == cplx{}) out.pop_back();
  return AnalyticPolynomial(std::move(out));
}

AnalyticPolynomial AnalyticPolynomial::scaled(cplx factor) const {
  std::vector<cplx> out = coeff_;
  for (cplx& c : out) c *= factor;
  return AnalyticPolynomial(std::move(out));
}

TrigCoefficients fourier_window(const SampledFunction& f, int window) {
  f.validate();
  int n = f.grid->size();
  if (window < 0) throw WindowError("fourier_window: negative window");
  if (2 * window + 1 > n)
    throw WindowError("fourier_window: window does not fit grid");

  TrigCoefficients out(window);
  const std::vector<cplx>& zs = f.grid->points();
  const std::vector<double>& angles = f.grid->angles();
  size_t un = static_cast<size_t>(n);
  double inv_n = 1.0 / static_cast<double>(n);

  cplx c0{};
  for (size_t j = 0; j < un; ++j) c0 += f.values[j];
  out.ref(0) = c0 * inv_n;

  // w[j] tracks e^{-ik theta_j}; c_{-k} reuses its conjugate.
  std::vector<cplx> w(un, cplx(1.0, 0.0));
  for (int k = 1; k <= window; ++k) {
    if (k % kPhaseRefresh == 0) {
      for (size_t j = 0; j < un; ++j)
        w[j] = std::polar(1.0, -static_cast<double>(k) * angles[j]);
    } else {
      for (size_t j = 0; j < un; ++j) w[j] *= std::conj(zs[j]);
    }
    cplx pos{}, neg{};
    for (size_t j = 0; j < un; ++j) {
      pos += f.values[j] * w[j];
      neg += f.values[j] * std::conj(w[j]);
    }
    out.ref(k) = pos * inv_n;
    out.ref(-k) = neg * inv_n;
  }
  return out;
}

cplx evaluate_poly(const AnalyticPolynomial& p, cplx z) { return p.evaluate(z); }

double bernstein_inflation(int trig_degree, int grid_n) {
  if (trig_degree < 0) throw GridError("bernstein_inflation: negative degree");
  if (trig_degree == 0) return 1.0;
  double ratio = kPi * static_cast<double>(trig_degree) / static_cast<double>(grid_n);
  if (ratio >= 1.0)
    throw GridError("bernstein_inflation: grid too coarse for degree " +
                    std::to_string(trig_degree));
  return 1.0 / (1.0 - ratio);
}

namespace {

double grid_max_of_poly(const AnalyticPolynomial& p, int grid_n) {
  double m = 0.0;
  for (int j = 0; j < grid_n; ++j) {
    double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(grid_n);
    m = std::max(m, std::abs(p.evaluate(std::polar(1.0, theta))));
  }
  return m;
}

}  // namespace

double certified_sup_norm(const AnalyticPolynomial& p, int grid_n) {
  int d = p.effective_degree();
  if (d == 0) return std::abs(p.coefficient(0));
  if (grid_n < 1) throw GridError("certified_sup_norm: empty grid");
  double factor = bernstein_inflation(d, grid_n);
  return grid_max_of_poly(p, grid_n) * factor;
}

double adaptive_sup_norm(const AnalyticPolynomial& p, double slack) {
  if (slack <= 0.0) throw ConfigError("adaptive_sup_norm: slack must be positive");
  int d = p.effective_degree();
  if (d == 0) return std::abs(p.coefficient(0));
  double need = kPi * static_cast<double>(d) * (1.0 + 1.0 / slack);
  int n = 64;
  while (static_cast<double>(n) < need) n *= 2;
  return certified_sup_norm(p, n);
}

TrigCoefficients fejer_mean(const TrigCoefficients& c, int n) {
  if (n < 0) throw WindowError("fejer_mean: negative order");
  if (n > c.window) throw WindowError("fejer_mean: order exceeds window");
  TrigCoefficients out(n);
  for (int k = -n; k <= n; ++k) {
    double weight = 1.0 - std::abs(static_cast<double>(k)) / (static_cast<double>(n) + 1.0);
    out.ref(k) = c.at(k) * weight;
  }
  return out;
}

AnalyticPolynomial analytic_part(const TrigCoefficients& c, double tol_abs) {
  if (c.negative_mass() > tol_abs)
    throw PreconditionError("analytic_part: negative-frequency mass above tolerance");
  std::vector<cplx> coeff(static_cast<size_t>(c.window) + 1);
  for (int k = 0; k <= c.window; ++k) coeff[static_cast<size_t>(k)] = c.at(k);
  return AnalyticPolynomial(std::move(coeff));
}

SampledFunction sample_polynomial(const AnalyticPolynomial& p, const GridPtr& grid) {
  if (!grid) throw GridError("sample_polynomial: missing grid");
  SampledFunction f;
  f.grid = grid;
  f.values.resize(static_cast<size_t>(grid->size()));
  for (int j = 0; j < grid->size(); ++j)
    f.values[static_cast<size_t>(j)] = p.evaluate(grid->point(j));
  f.band_limit = p.effective_degree();
  return f;
}

SampledFunction sample_trig(const TrigCoefficients& c, const GridPtr& grid) {
  if (!grid) throw GridError("sample_trig: missing grid");
  SampledFunction f;
  f.grid = grid;
  f.values.resize(static_cast<size_t>(grid->size()));
  for (int j = 0; j < grid->size(); ++j)
    f.values[static_cast<size_t>(j)] = c.evaluate(grid->angle(j));
  f.band_limit = c.window;
  return f;
}

int measured_band(const SampledFunction& f, double tol_abs) {
  f.validate();
  int n = f.grid->size();
  int kmax = n / 2 - 1;
  if (kmax < 1) return 0;

  const std::vector<cplx>& zs = f.grid->points();
  const std::vector<double>& angles = f.grid->angles();
  size_t un = static_cast<size_t>(n);
  double inv_n = 1.0 / static_cast<double>(n);

  // Scan from the top so the first exceedance is the band.
  std::vector<cplx> w(un);
  for (size_t j = 0; j < un; ++j)
    w[j] = std::polar(1.0, -static_cast<double>(kmax) * angles[j]);
  for (int k = kmax; k >= 1; --k) {
    cplx pos{}, neg{};
    for (size_t j = 0; j < un; ++j) {
      pos += f.values[j] * w[j];
      neg += f.values[j] * std::conj(w[j]);
    }
    if (std::max(std::abs(pos), std::abs(neg)) * inv_n > tol_abs) return k;
    if (k % kPhaseRefresh == 0) {
      for (size_t j = 0; j < un; ++j)
        w[j] = std::polar(1.0, -static_cast<double>(k - 1) * angles[j]);
    } else {
      for (size_t j = 0; j < un; ++j) w[j] *= zs[j];
    }
  }
  return 0;
}

}  // namespace capprox
