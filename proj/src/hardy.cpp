#include "capprox/hardy.hpp"

#include <cmath>

namespace capprox {

const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::polynomial: return "polynomial";
    case WitnessKind::blaschke: return "blaschke";
    case WitnessKind::scaled: return "scaled";
  }
  return "unknown";
}

WitnessKind witness_kind_from_string(const std::string& s) {
  if (s == "polynomial") return WitnessKind::polynomial;
  if (s == "blaschke") return WitnessKind::blaschke;
  if (s == "scaled") return WitnessKind::scaled;
  throw ParseError("unknown witness kind: " + s);
}

BoundedAnalyticWitness BoundedAnalyticWitness::polynomial(AnalyticPolynomial p,
                                                          double bound) {
  if (bound < 0.0)
    throw BoundViolationError("witness: negative bound");
  double certified = adaptive_sup_norm(p, 1e-6);
  if (certified > bound * (1.0 + 2e-6) + 1e-15)
    throw BoundViolationError("witness: polynomial exceeds claimed bound");
  BoundedAnalyticWitness w;
  w.kind_ = WitnessKind::polynomial;
  w.bound_ = bound;
  w.poly_ = std::move(p);
  return w;
}

BoundedAnalyticWitness BoundedAnalyticWitness::blaschke(std::vector<cplx> zeros,
                                                        cplx unimodular) {
  for (const cplx& a : zeros)
    if (std::abs(a) >= 1.0)
      throw DomainError("witness: Blaschke zero outside the open disk");
  if (std::abs(std::abs(unimodular) - 1.0) > 1e-12)
    throw DomainError("witness: front factor is not unimodular");
  BoundedAnalyticWitness w;
  w.kind_ = WitnessKind::blaschke;
  w.bound_ = 1.0;
  w.zeros_ = std::move(zeros);
  w.unimodular_ = unimodular;
  return w;
}

BoundedAnalyticWitness BoundedAnalyticWitness::scaled(BoundedAnalyticWitness inner,
                                                      cplx scalar) {
  BoundedAnalyticWitness w;
  w.kind_ = WitnessKind::scaled;
  w.bound_ = std::abs(scalar) * inner.bound();
  w.scalar_ = scalar;
  w.inner_ = std::make_shared<const BoundedAnalyticWitness>(std::move(inner));
  return w;
}

const BoundedAnalyticWitness& BoundedAnalyticWitness::inner() const {
  if (!inner_) throw PreconditionError("witness: no inner factor");
  return *inner_;
}

cplx BoundedAnalyticWitness::evaluate(cplx z) const {
  if (std::abs(z) > 1.0 + 1e-12)
    throw DomainError("witness: evaluation outside the closed disk");
  switch (kind_) {
    case WitnessKind::polynomial:
      return poly_.evaluate(z);
    case WitnessKind::blaschke: {
      cplx acc = unimodular_;
      for (const cplx& a : zeros_)
        acc *= (a - z) / (1.0 - std::conj(a) * z);
      return acc;
    }
    case WitnessKind::scaled:
      return scalar_ * inner().evaluate(z);
  }
  return {};
}

namespace {

// Band limit of g(r z) on the circle, when one exists in closed form.
std::optional<int> witness_band(const BoundedAnalyticWitness& g) {
  switch (g.kind()) {
    case WitnessKind::polynomial:
      return g.poly().effective_degree();
    case WitnessKind::blaschke:
      return g.zeros().empty() ? std::optional<int>(0) : std::nullopt;
    case WitnessKind::scaled:
      return witness_band(g.inner());
  }
  return std::nullopt;
}

}  // namespace

SampledFunction radial_boundary_samples(const BoundedAnalyticWitness& g,
                                        const GridPtr& grid, double r) {
  if (!grid) throw GridError("radial_boundary_samples: missing grid");
  if (r < 0.0 || r > 1.0)
    throw DomainError("radial_boundary_samples: radius outside [0, 1]");
  SampledFunction f;
  f.grid = grid;
  f.values.resize(static_cast<size_t>(grid->size()));
  for (int j = 0; j < grid->size(); ++j)
    f.values[static_cast<size_t>(j)] = g.evaluate(r * grid->point(j));
  f.claimed_bound = g.bound();
  f.band_limit = witness_band(g);
  return f;
}

SampledFunction boundary_samples(const BoundedAnalyticWitness& g, const GridPtr& grid) {
  return radial_boundary_samples(g, grid, 1.0);
}

RadialSchedule RadialSchedule::geometric() { return RadialSchedule{}; }

RadialSchedule RadialSchedule::from_values(std::vector<double> values) {
  RadialSchedule s;
  s.rule = "list";
  s.radii = std::move(values);
  s.validate();
  return s;
}

void RadialSchedule::validate() const {
  if (rule != "pow2" && rule != "list")
    throw ConfigError("radial schedule: unknown rule " + rule);
  if (rule == "list" && radii.empty())
    throw ConfigError("radial schedule: empty radius list");
  double prev = -1.0;
  for (double r : radii) {
    if (r < 0.0 || r >= 1.0)
      throw ConfigError("radial schedule: radius outside [0, 1)");
    if (r <= prev) throw ConfigError("radial schedule: radii must increase");
    prev = r;
  }
}

double RadialSchedule::radius(int n) const {
  if (n < 1) throw ConfigError("radial schedule: index must be >= 1");
  if (rule == "list") {
    if (static_cast<size_t>(n) > radii.size())
      throw ConfigError("radial schedule: index beyond supplied list");
    return radii[static_cast<size_t>(n - 1)];
  }
  double r = 1.0 - std::exp2(-static_cast<double>(n));
  if (r >= 1.0) throw ConfigError("radial schedule: index too large");
  return r;
}

cplx cauchy_pairing(const SampledFunction& f, const AnalyticPolynomial& g) {
  f.validate();
  int n = f.grid->size();
  cplx acc{};
  for (int j = 0; j < n; ++j) {
    cplx z = f.grid->point(j);
    acc += f.values[static_cast<size_t>(j)] * g.evaluate(z) * z;
  }
  return cplx(0.0, 1.0) * (kTwoPi / static_cast<double>(n)) * acc;
}

}  // namespace capprox
