#pragma once

#include "capprox/circle.hpp"
#include "capprox/minimax.hpp"

namespace capprox {

// s x s truncation H[j][k] = c_{-(j+k+1)} of the Hankel operator built from
// the negative-frequency coefficients of a symbol.
struct HankelTruncation {
  int size = 0;
  std::vector<cplx> entries;  // row-major

  static HankelTruncation from_coefficients(const TrigCoefficients& c, int s);

  cplx at(int j, int k) const {
    return entries[static_cast<size_t>(j) * size + k];
  }
  double frobenius() const;
  bool is_hankel(double tol) const;
};

// Largest singular value of the truncation by power iteration on H^H H
// (relative tolerance 1e-10, at most 1000 iterations). A valid lower bound
// for the quotient distance of the symbol to the disk algebra.
double hankel_lower_bound(const TrigCoefficients& c, int s);
double largest_singular_value(const HankelTruncation& h);

struct NehariConfig {
  int degree = 32;
  int hankel_size = 16;
  double tol_cert_abs = 1e-6;
  double tol_cert_rel = 1e-2;
  double trim_rel = 1e-12;  // coefficient trim, relative to the largest
  double band_rel = 1e-12;  // band measurement threshold, relative
  MinimaxOptions solver;
};

struct UpperBound {
  double value = 0.0;         // certified: grid_optimum * inflation
  double grid_optimum = 0.0;  // max residual on the grid
  double inflation = 1.0;
  int error_degree = 0;
  AnalyticPolynomial approximant;
};

// Discrete Chebyshev fit plus a Bernstein certificate. The inflation factor
// is taken at the measured band of the residual, not the budget degree.
UpperBound chebyshev_upper_bound(const SampledFunction& h, int degree,
                                 const NehariConfig& cfg = {});

struct DistanceCertificate {
  double lower = 0.0;
  double upper = 0.0;
  double grid_optimum = 0.0;
  double inflation = 1.0;
  int error_degree = 0;
  int grid_n = 0;
  AnalyticPolynomial approximant;

  void validate(double tol_cert) const;
};

DistanceCertificate distance_to_disk_algebra(const SampledFunction& h,
                                             const NehariConfig& cfg = {});

}  // namespace capprox
