#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <vector>

#include "capprox/errors.hpp"

namespace capprox {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;

// Uniform grid theta_j = 2*pi*j/N on the unit circle.
class CircleGrid {
 public:
  explicit CircleGrid(int n);

  int size() const { return n_; }
  double angle(int j) const { return angles_[j]; }
  cplx point(int j) const { return points_[j]; }
  const std::vector<double>& angles() const { return angles_; }
  const std::vector<cplx>& points() const { return points_; }

 private:
  int n_;
  std::vector<double> angles_;
  std::vector<cplx> points_;
};

using GridPtr = std::shared_ptr<const CircleGrid>;

GridPtr make_grid(int n);

// Boundary samples of a function on a CircleGrid. The optional claimed_bound
// is a promise |f| <= bound that downstream code may rely on; band_limit is a
// known trigonometric degree of the samples, when the source has one.
struct SampledFunction {
  GridPtr grid;
  std::vector<cplx> values;
  std::optional<double> claimed_bound;
  std::optional<int> band_limit;

  double grid_max() const;
  void validate() const;
};

// Two-sided Fourier window c_{-K}..c_{K}.
struct TrigCoefficients {
  int window = 0;
  std::vector<cplx> coeff;  // size 2*window + 1, index k + window

  TrigCoefficients() : coeff(1) {}
  explicit TrigCoefficients(int k) : window(k), coeff(2 * k + 1) {}

  cplx at(int k) const {
    if (k < -window || k > window) return {};
    return coeff[static_cast<size_t>(k + window)];
  }
  cplx& ref(int k) { return coeff[static_cast<size_t>(k + window)]; }

  cplx evaluate(double theta) const;
  double negative_mass() const;  // sum of |c_k| over k < 0
};

// Polynomial in z with complex coefficients, constant term first. The stored
// degree is an upper bound; effective_degree() reports the last nonzero entry.
class AnalyticPolynomial {
 public:
  AnalyticPolynomial() : coeff_(1) {}
  explicit AnalyticPolynomial(std::vector<cplx> coeff);

  static AnalyticPolynomial zero(int degree = 0);

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  int effective_degree() const;
  const std::vector<cplx>& coefficients() const { return coeff_; }
  cplx coefficient(int k) const {
    if (k < 0 || k > degree()) return {};
    return coeff_[static_cast<size_t>(k)];
  }

  cplx evaluate(cplx z) const;
  double max_coefficient() const;

  // Drops trailing and interior coefficients with |a_k| <= tol_abs. Keeps at
  // least the constant term so the result is well formed.
  AnalyticPolynomial trimmed(double tol_abs) const;
  AnalyticPolynomial scaled(cplx factor) const;

 private:
  std::vector<cplx> coeff_;
};

// c_k = (1/N) sum_j f(theta_j) e^{-ik theta_j} for |k| <= window.
// Requires 2*window + 1 <= N.
TrigCoefficients fourier_window(const SampledFunction& f, int window);

cplx evaluate_poly(const AnalyticPolynomial& p, cplx z);

// 1 / (1 - pi * d / N); throws GridError unless N > pi * d.
double bernstein_inflation(int trig_degree, int grid_n);

// Certified sup-norm bound: grid max on a fresh N-point grid times the
// Bernstein factor at the effective degree.
double certified_sup_norm(const AnalyticPolynomial& p, int grid_n);

// Certified sup-norm within a relative slack: picks the smallest power-of-two
// grid with pi * d / N small enough that the bound is <= sup * (1 + slack).
double adaptive_sup_norm(const AnalyticPolynomial& p, double slack);

// Cesaro mean sigma_n: weights 1 - |k|/(n+1) applied to the window. Requires
// n <= c.window.
TrigCoefficients fejer_mean(const TrigCoefficients& c, int n);

// Analytic part of a window as a polynomial; throws PreconditionError when
// the negative-frequency mass exceeds tol_abs.
AnalyticPolynomial analytic_part(const TrigCoefficients& c, double tol_abs);

SampledFunction sample_polynomial(const AnalyticPolynomial& p, const GridPtr& grid);
SampledFunction sample_trig(const TrigCoefficients& c, const GridPtr& grid);

// Largest |k| with |c_k| > tol_abs, scanning the full representable window
// |k| <= N/2 - 1. Returns 0 for (numerically) constant samples.
int measured_band(const SampledFunction& f, double tol_abs);

}  // namespace capprox
