#include "capprox/nehari.hpp"

#include <algorithm>
#include <cmath>

namespace capprox {

HankelTruncation HankelTruncation::from_coefficients(const TrigCoefficients& c,
                                                     int s) {
  if (s < 1) throw WindowError("hankel: size must be positive");
  if (2 * s - 1 > c.window)
    throw WindowError("hankel: window too small, need coefficients down to -(2s-1)");
  HankelTruncation h;
  h.size = s;
  h.entries.resize(static_cast<size_t>(s) * s);
  for (int j = 0; j < s; ++j)
    for (int k = 0; k < s; ++k)
      h.entries[static_cast<size_t>(j) * s + k] = c.at(-(j + k + 1));
  return h;
}

double HankelTruncation::frobenius() const {
  double f = 0.0;
  for (const cplx& e : entries) f += std::norm(e);
  return std::sqrt(f);
}

bool HankelTruncation::is_hankel(double tol) const {
  for (int j = 0; j < size; ++j)
    for (int k = 0; k < size; ++k) {
      if (j + 1 < size && k > 0) {
        if (std::abs(at(j, k) - at(j + 1, k - 1)) > tol) return false;
      }
    }
  return true;
}

double largest_singular_value(const HankelTruncation& h) {
  int s = h.size;
  if (h.frobenius() == 0.0) return 0.0;

  std::vector<cplx> v(static_cast<size_t>(s));
  std::vector<cplx> hv(static_cast<size_t>(s));
  std::vector<cplx> mv(static_cast<size_t>(s));

  auto seed = [&](int variant) {
    for (int j = 0; j < s; ++j)
      v[static_cast<size_t>(j)] =
          variant == 0 ? cplx(1.0 / static_cast<double>(j + 1), 0.0)
                       : cplx(std::cos(static_cast<double>(j + 1)), 0.2);
    double norm = 0.0;
    for (const cplx& x : v) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (cplx& x : v) x /= norm;
  };

  for (int variant = 0; variant < 2; ++variant) {
    seed(variant);
    double sigma = 0.0;
    for (int it = 0; it < 1000; ++it) {
      for (int j = 0; j < s; ++j) {
        cplx acc{};
        for (int k = 0; k < s; ++k) acc += h.at(j, k) * v[static_cast<size_t>(k)];
        hv[static_cast<size_t>(j)] = acc;
      }
      double hv_norm = 0.0;
      for (const cplx& x : hv) hv_norm += std::norm(x);
      hv_norm = std::sqrt(hv_norm);
      if (hv_norm == 0.0) break;  // orthogonal start; try the other seed
      double sigma_next = hv_norm;
      for (int k = 0; k < s; ++k) {
        cplx acc{};
        for (int j = 0; j < s; ++j)
          acc += std::conj(h.at(j, k)) * hv[static_cast<size_t>(j)];
        mv[static_cast<size_t>(k)] = acc;
      }
      double mv_norm = 0.0;
      for (const cplx& x : mv) mv_norm += std::norm(x);
      mv_norm = std::sqrt(mv_norm);
      if (mv_norm == 0.0) return sigma_next;
      for (int k = 0; k < s; ++k) v[static_cast<size_t>(k)] = mv[static_cast<size_t>(k)] / mv_norm;
      if (std::abs(sigma_next - sigma) <= 1e-10 * std::max(sigma_next, 1e-300))
        return sigma_next;
      sigma = sigma_next;
    }
    if (sigma > 0.0) return sigma;
  }
  return 0.0;
}

double hankel_lower_bound(const TrigCoefficients& c, int s) {
  return largest_singular_value(HankelTruncation::from_coefficients(c, s));
}

UpperBound chebyshev_upper_bound(const SampledFunction& h, int degree,
                                 const NehariConfig& cfg) {
  h.validate();
  MinimaxSolution sol = minimax_fit(h, degree, cfg.solver);

  double scale = std::max(h.grid_max(), 1e-300);
  double trim_abs = cfg.trim_rel * std::max(sol.u.max_coefficient(), scale);
  AnalyticPolynomial u = sol.u.trimmed(trim_abs);

  int n = h.grid->size();
  SampledFunction residual;
  residual.grid = h.grid;
  residual.values.resize(static_cast<size_t>(n));
  double grid_opt = 0.0;
  for (int j = 0; j < n; ++j) {
    cplx r = h.values[static_cast<size_t>(j)] - u.evaluate(h.grid->point(j));
    residual.values[static_cast<size_t>(j)] = r;
    grid_opt = std::max(grid_opt, std::abs(r));
  }

  int band;
  if (grid_opt <= 1e-12 * scale) {
    band = u.effective_degree();
  } else if (h.band_limit) {
    band = std::max(*h.band_limit, u.effective_degree());
  } else {
    double thr = std::max(cfg.band_rel * grid_opt, 1e-13 * scale);
    band = std::max(measured_band(residual, thr), u.effective_degree());
  }

  UpperBound out;
  out.grid_optimum = grid_opt;
  out.error_degree = band;
  out.inflation = bernstein_inflation(band, n);
  out.value = grid_opt * out.inflation;
  out.approximant = std::move(u);
  return out;
}

void DistanceCertificate::validate(double tol_cert) const {
  if (lower < 0.0 || upper < 0.0 || inflation < 1.0)
    throw CertificateError("distance certificate: malformed fields");
  if (lower > upper + tol_cert)
    throw CertificateError("distance certificate: lower bound exceeds upper bound");
}

DistanceCertificate distance_to_disk_algebra(const SampledFunction& h,
                                             const NehariConfig& cfg) {
  if (cfg.hankel_size < 1) throw ConfigError("distance: hankel size must be >= 1");
  if (cfg.degree < 0) throw ConfigError("distance: negative degree");

  TrigCoefficients c = fourier_window(h, 2 * cfg.hankel_size - 1);
  double lower = hankel_lower_bound(c, cfg.hankel_size);
  UpperBound ub = chebyshev_upper_bound(h, cfg.degree, cfg);

  DistanceCertificate cert;
  cert.lower = lower;
  cert.upper = ub.value;
  cert.grid_optimum = ub.grid_optimum;
  cert.inflation = ub.inflation;
  cert.error_degree = ub.error_degree;
  cert.grid_n = h.grid->size();
  cert.approximant = std::move(ub.approximant);
  cert.validate(cfg.tol_cert_abs + cfg.tol_cert_rel * cert.upper);
  return cert;
}

}  // namespace capprox
