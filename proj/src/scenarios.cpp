#include "capprox/scenarios.hpp"

#include <cmath>
#include <cstdio>

namespace capprox {

namespace {

double norm_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

std::string format_target(const TargetSpec& spec) {
  char buf[96];
  if (spec.kind == "arc")
    std::snprintf(buf, sizeof buf, "arc[%.6g,%.6g;%d]", spec.from, spec.to, spec.count);
  else if (spec.kind == "cantor")
    std::snprintf(buf, sizeof buf, "cantor[%.6g,%.6g;depth=%d]", spec.from, spec.to,
                  spec.depth);
  else
    std::snprintf(buf, sizeof buf, "finite[%d]", static_cast<int>(spec.angles.size()));
  return buf;
}

}  // namespace

void TargetSpec::validate() const {
  if (kind == "arc") {
    if (count < 1) throw ConfigError("target: arc needs at least one point");
    if (!(to > from)) throw ConfigError("target: arc must have positive length");
    if (to - from > kTwoPi + 1e-12)
      throw ConfigError("target: arc longer than the whole circle");
  } else if (kind == "cantor") {
    if (depth < 0 || depth > 12) throw ConfigError("target: cantor depth outside [0, 12]");
    if (!(to > from)) throw ConfigError("target: cantor arc must have positive length");
    if (to - from > kTwoPi + 1e-12)
      throw ConfigError("target: cantor arc longer than the whole circle");
  } else if (kind == "finite") {
    if (angles.empty()) throw ConfigError("target: finite set needs angles");
  } else {
    throw ConfigError("target: unknown kind " + kind);
  }
}

SequenceProvider build_corollary1_sequence(const BoundedAnalyticWitness& g,
                                           const RadialSchedule& schedule,
                                           const GridPtr& grid) {
  if (!grid) throw GridError("corollary sequence: missing grid");
  schedule.validate();
  SequenceProvider seq;
  seq.grid = grid;
  seq.uniform_bound = g.bound();
  seq.length = schedule.rule == "list" ? static_cast<int>(schedule.radii.size()) : 52;
  seq.descriptor = "dilates";
  BoundedAnalyticWitness wit = g;
  RadialSchedule sched = schedule;
  seq.generator = [wit, sched, grid](int n) {
    return radial_boundary_samples(wit, grid, sched.radius(n));
  };
  return seq;
}

TargetSet build_target_set(const TargetSpec& spec,
                           const std::function<cplx(double)>& f_source) {
  spec.validate();
  if (!f_source) throw ConfigError("target: missing boundary function");

  std::vector<double> raw;
  if (spec.kind == "arc") {
    raw.reserve(static_cast<size_t>(spec.count));
    if (spec.count == 1) {
      raw.push_back(spec.from);
    } else {
      double step = (spec.to - spec.from) / static_cast<double>(spec.count - 1);
      for (int s = 0; s < spec.count; ++s)
        raw.push_back(spec.from + step * static_cast<double>(s));
    }
  } else if (spec.kind == "cantor") {
    std::vector<std::pair<double, double>> intervals{{spec.from, spec.to}};
    for (int d = 0; d < spec.depth; ++d) {
      std::vector<std::pair<double, double>> next;
      next.reserve(intervals.size() * 2);
      for (const auto& [a, b] : intervals) {
        double len = (b - a) / 3.0;
        next.emplace_back(a, a + len);
        next.emplace_back(b - len, b);
      }
      intervals = std::move(next);
    }
    raw.reserve(intervals.size() * 2);
    for (const auto& [a, b] : intervals) {
      raw.push_back(a);
      raw.push_back(b);
    }
  } else {
    raw = spec.angles;
  }

  TargetSet out;
  out.descriptor = format_target(spec);
  out.angles.reserve(raw.size());
  out.values.reserve(raw.size());
  for (double a : raw) {
    double theta = norm_angle(a);
    out.angles.push_back(theta);
    out.values.push_back(f_source(theta));
  }
  out.validate();
  return out;
}

SequenceProvider build_negative_witness(const GridPtr& grid) {
  if (!grid) throw GridError("negative witness: missing grid");
  SequenceProvider seq;
  seq.grid = grid;
  seq.uniform_bound = 1.0;
  seq.length = 1 << 20;
  seq.descriptor = "conjugate";
  seq.generator = [grid](int) {
    SampledFunction f;
    f.grid = grid;
    f.values.resize(static_cast<size_t>(grid->size()));
    for (int j = 0; j < grid->size(); ++j)
      f.values[static_cast<size_t>(j)] = std::conj(grid->point(j));
    f.claimed_bound = 1.0;
    f.band_limit = 1;
    return f;
  };
  return seq;
}

const std::vector<ScenarioSpec>& builtin_scenarios() {
  static const std::vector<ScenarioSpec> scenarios = [] {
    std::vector<ScenarioSpec> out;

    ScenarioSpec arc;
    arc.name = "blaschke-arc";
    arc.summary = "single Blaschke factor, targets on a quarter arc";
    arc.expected = "positive";
    arc.witness = BoundedAnalyticWitness::blaschke({cplx(0.5, 0.0)}, cplx(1.0, 0.0));
    arc.schedule = RadialSchedule::geometric();
    arc.target = TargetSpec{"arc", 0.0, kPi / 2.0, 101, 0, {}};
    out.push_back(arc);

    ScenarioSpec ident;
    ident.name = "identity-arc";
    ident.summary = "g(z) = z, targets on a half arc";
    ident.expected = "positive";
    ident.witness = BoundedAnalyticWitness::polynomial(
        AnalyticPolynomial({cplx(0.0, 0.0), cplx(1.0, 0.0)}), 1.0);
    ident.schedule = RadialSchedule::geometric();
    ident.target = TargetSpec{"arc", 0.0, kPi, 64, 0, {}};
    out.push_back(ident);

    ScenarioSpec pair;
    pair.name = "blaschke-pair";
    pair.summary = "two Blaschke factors, targets on a middle arc";
    pair.expected = "positive";
    pair.witness = BoundedAnalyticWitness::blaschke(
        {cplx(0.5, 0.0), cplx(-0.3, 0.2)}, cplx(1.0, 0.0));
    pair.schedule = RadialSchedule::geometric();
    pair.target = TargetSpec{"arc", kPi / 4.0, 3.0 * kPi / 4.0, 64, 0, {}};
    out.push_back(pair);

    ScenarioSpec neg;
    neg.name = "negative-conjugate";
    neg.summary = "constant conjugate sequence, no analytic limit";
    neg.expected = "negative";
    neg.schedule = RadialSchedule::geometric();
    neg.target = TargetSpec{"arc", 0.0, kPi, 101, 0, {}};
    neg.override_weak_star = true;
    out.push_back(neg);

    return out;
  }();
  return scenarios;
}

const ScenarioSpec& find_scenario(const std::string& name) {
  for (const ScenarioSpec& s : builtin_scenarios())
    if (s.name == name) return s;
  std::string known;
  for (const ScenarioSpec& s : builtin_scenarios()) {
    if (!known.empty()) known += ", ";
    known += s.name;
  }
  throw ConfigError("unknown scenario " + name + " (known: " + known + ")");
}

SequenceProvider scenario_sequence(const ScenarioSpec& spec, const GridPtr& grid) {
  if (spec.witness) return build_corollary1_sequence(*spec.witness, spec.schedule, grid);
  return build_negative_witness(grid);
}

TargetSet scenario_targets(const ScenarioSpec& spec) {
  if (spec.witness) {
    const BoundedAnalyticWitness& g = *spec.witness;
    return build_target_set(spec.target, [g](double theta) {
      return g.evaluate(std::polar(1.0, theta));
    });
  }
  return build_target_set(spec.target,
                          [](double theta) { return std::polar(1.0, -theta); });
}

std::vector<std::string> calibration_names() {
  return {"dilates", "alternating", "slow-shrink"};
}

Calibration build_calibration(const std::string& name, const GridPtr& grid) {
  if (!grid) throw GridError("calibration: missing grid");
  Calibration cal;
  cal.name = name;

  if (name == "dilates") {
    BoundedAnalyticWitness g =
        BoundedAnalyticWitness::blaschke({cplx(0.5, 0.0)}, cplx(1.0, 0.0));
    cal.sequence = build_corollary1_sequence(g, RadialSchedule::geometric(), grid);
    cal.limit = boundary_samples(g, grid);
    cal.expected = Verdict::converged;
    return cal;
  }

  if (name == "alternating") {
    cal.sequence.grid = grid;
    cal.sequence.uniform_bound = 1.0;
    cal.sequence.length = 1 << 20;
    cal.sequence.descriptor = "alternating";
    cal.sequence.generator = [grid](int n) {
      SampledFunction f;
      f.grid = grid;
      f.values.resize(static_cast<size_t>(grid->size()));
      double sign = n % 2 == 0 ? 1.0 : -1.0;
      for (int j = 0; j < grid->size(); ++j)
        f.values[static_cast<size_t>(j)] = sign * grid->point(j);
      f.claimed_bound = 1.0;
      f.band_limit = 1;
      return f;
    };
    cal.limit = sample_polynomial(
        AnalyticPolynomial({cplx(0.0, 0.0), cplx(1.0, 0.0)}), grid);
    cal.limit.claimed_bound = 1.0;
    cal.expected = Verdict::not_converged;
    return cal;
  }

  if (name == "slow-shrink") {
    cal.sequence.grid = grid;
    cal.sequence.uniform_bound = 1.0;
    cal.sequence.length = 1 << 20;
    cal.sequence.descriptor = "slow-shrink";
    cal.sequence.generator = [grid](int n) {
      SampledFunction f;
      f.grid = grid;
      f.values.resize(static_cast<size_t>(grid->size()));
      double scale = 1.0 / static_cast<double>(n);
      for (int j = 0; j < grid->size(); ++j)
        f.values[static_cast<size_t>(j)] = scale * std::conj(grid->point(j));
      f.claimed_bound = scale;
      f.band_limit = 1;
      return f;
    };
    cal.limit.grid = grid;
    cal.limit.values.assign(static_cast<size_t>(grid->size()), cplx{});
    cal.limit.claimed_bound = 0.0;
    cal.limit.band_limit = 0;
    cal.expected = Verdict::inconclusive;
    return cal;
  }

  throw ConfigError("unknown calibration " + name);
}

}  // namespace capprox
