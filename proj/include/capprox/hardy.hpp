#pragma once

#include <string>
#include <vector>

#include "capprox/circle.hpp"

namespace capprox {

enum class WitnessKind { polynomial, blaschke, scaled };

const char* to_string(WitnessKind k);
WitnessKind witness_kind_from_string(const std::string& s);

// A bounded analytic function on the disk with a continuous boundary
// extension, given in one of three closed forms. bound() is a certified
// sup-norm bound over the closed disk.
class BoundedAnalyticWitness {
 public:
  static BoundedAnalyticWitness polynomial(AnalyticPolynomial p, double bound);
  static BoundedAnalyticWitness blaschke(std::vector<cplx> zeros, cplx unimodular);
  static BoundedAnalyticWitness scaled(BoundedAnalyticWitness inner, cplx scalar);

  WitnessKind kind() const { return kind_; }
  double bound() const { return bound_; }
  cplx evaluate(cplx z) const;

  const AnalyticPolynomial& poly() const { return poly_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  cplx unimodular() const { return unimodular_; }
  cplx scalar() const { return scalar_; }
  const BoundedAnalyticWitness& inner() const;

 private:
  BoundedAnalyticWitness() = default;

  WitnessKind kind_ = WitnessKind::polynomial;
  double bound_ = 0.0;
  AnalyticPolynomial poly_;
  std::vector<cplx> zeros_;
  cplx unimodular_{1.0, 0.0};
  cplx scalar_{1.0, 0.0};
  std::shared_ptr<const BoundedAnalyticWitness> inner_;
};

// Samples g(r e^{i theta_j}) on the grid; requires 0 <= r <= 1.
SampledFunction radial_boundary_samples(const BoundedAnalyticWitness& g,
                                        const GridPtr& grid, double r);

// r = 1 samples; all shipped witness kinds extend continuously.
SampledFunction boundary_samples(const BoundedAnalyticWitness& g, const GridPtr& grid);

// Radii approaching 1. The default rule is r_n = 1 - 2^{-n}; an explicit
// prefix may be supplied instead (values in [0, 1), strictly increasing).
struct RadialSchedule {
  std::string rule = "pow2";  // "pow2" | "list"
  std::vector<double> radii;

  static RadialSchedule geometric();
  static RadialSchedule from_values(std::vector<double> values);

  double radius(int n) const;  // n >= 1
  void validate() const;
};

// Quadrature form of the boundary pairing: i * (2 pi / N) *
// sum_j f(theta_j) G(e^{i theta_j}) e^{i theta_j}.
cplx cauchy_pairing(const SampledFunction& f, const AnalyticPolynomial& g);

}  // namespace capprox
