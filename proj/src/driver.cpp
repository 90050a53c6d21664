#include "capprox/driver.hpp"

#include <ostream>

#include "capprox/serialize.hpp"

namespace capprox {

namespace {

SampledFunction builtin_symbol(const std::string& name, int grid_n) {
  if (name != "conjugate")
    throw ConfigError("unknown builtin symbol " + name + " (known: conjugate)");
  GridPtr grid = make_grid(grid_n);
  SampledFunction f;
  f.grid = grid;
  f.values.resize(static_cast<size_t>(grid_n));
  for (int j = 0; j < grid_n; ++j)
    f.values[static_cast<size_t>(j)] = std::conj(grid->point(j));
  f.claimed_bound = 1.0;
  f.band_limit = 1;
  return f;
}

}  // namespace

int cmd_pipeline(const PipelineCommand& cmd, std::ostream& out) {
  const ScenarioSpec& spec = find_scenario(cmd.scenario);
  GridPtr grid = make_grid(cmd.grid_n);
  SequenceProvider seq = scenario_sequence(spec, grid);
  TargetSet targets = scenario_targets(spec);

  PipelineConfig cfg;
  cfg.bound = cmd.bound > 0.0
                  ? cmd.bound
                  : (spec.witness ? spec.witness->bound() : seq.uniform_bound);
  cfg.grid_n = cmd.grid_n;
  cfg.steps = cmd.steps;
  cfg.window = cmd.window;
  cfg.fejer_path = cmd.fejer;
  cfg.override_weak_star = cmd.override_weak_star || spec.override_weak_star;

  PipelineReport report = run_sufficiency(
      seq, targets, spec.witness,
      cfg);

  out << "scenario " << spec.name << " on " << targets.descriptor << ", M = "
      << format_double(cfg.bound) << ", grid " << cfg.grid_n << "\n";
  for (const StepRecord& rec : report.records) {
    out << "  m=" << rec.m << (rec.success ? "  ok " : "  fail ")
        << " achieved=" << format_double(rec.achieved);
    if (rec.success)
      out << " sup=" << format_double(rec.p_sup)
          << " max_err=" << format_double(rec.max_err)
          << " median_err=" << format_double(rec.median_err);
    if (rec.lower_witness)
      out << " lower_witness=" << format_double(*rec.lower_witness);
    if (!rec.note.empty()) out << " note=" << rec.note;
    out << "\n";
  }
  out << "verdict: " << report.verdict << "\n";

  if (!cmd.out_json.empty())
    write_text_file(cmd.out_json, to_json(report).dump(2) + "\n");
  if (!cmd.out_csv.empty()) write_text_file(cmd.out_csv, pipeline_csv(report));

  if (!cmd.expect.empty() && cmd.expect != report.verdict) {
    out << "expected " << cmd.expect << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_nehari(const NehariCommand& cmd, std::ostream& out) {
  SampledFunction symbol;
  if (!cmd.builtin.empty())
    symbol = builtin_symbol(cmd.builtin, cmd.grid_n);
  else if (!cmd.symbol_path.empty())
    symbol = sampled_from_json(read_json_file(cmd.symbol_path));
  else
    throw ConfigError("nehari: need a symbol file or a builtin name");

  NehariConfig cfg;
  cfg.degree = cmd.degree;
  cfg.hankel_size = cmd.hankel_size;
  DistanceCertificate cert = distance_to_disk_algebra(symbol, cfg);

  out << "distance to the disk algebra on grid " << cert.grid_n << "\n"
      << "  lower = " << format_double(cert.lower) << "\n"
      << "  upper = " << format_double(cert.upper) << " (grid optimum "
      << format_double(cert.grid_optimum) << ", inflation "
      << format_double(cert.inflation) << " at degree " << cert.error_degree
      << ")\n"
      << "  approximant degree " << cert.approximant.effective_degree() << "\n";

  if (!cmd.out_json.empty())
    write_text_file(cmd.out_json, to_json(cert).dump(2) + "\n");
  return kExitOk;
}

int cmd_weakstar(const WeakstarCommand& cmd, std::ostream& out) {
  SequenceProvider seq;
  SampledFunction limit;
  std::string expect = cmd.expect;

  if (!cmd.calibration.empty()) {
    Calibration cal = build_calibration(cmd.calibration, make_grid(cmd.grid_n));
    seq = std::move(cal.sequence);
    limit = std::move(cal.limit);
    if (expect.empty()) expect = to_string(cal.expected);
  } else if (!cmd.sequence_path.empty() && !cmd.limit_path.empty()) {
    seq = sequence_from_json(read_json_file(cmd.sequence_path));
    limit = sampled_from_json(read_json_file(cmd.limit_path));
  } else {
    throw ConfigError("weakstar: need a calibration name or sequence and limit files");
  }

  int prefix = std::min(cmd.prefix, seq.length);
  WeakStarReport report = check_weak_star(seq, limit, cmd.window, cmd.tol, prefix);

  out << "weak-star check, window " << report.window << ", prefix "
      << report.prefix << ", tol " << format_double(report.tol) << "\n"
      << "  final deviation " << format_double(report.final_deviation)
      << ", worst " << format_double(report.worst_deviation) << " at (n="
      << report.worst_n << ", k=" << report.worst_k << ")\n"
      << "verdict: " << to_string(report.verdict) << "\n";

  if (!cmd.out_json.empty())
    write_text_file(cmd.out_json, to_json(report).dump(2) + "\n");
  if (!cmd.out_csv.empty()) write_text_file(cmd.out_csv, weakstar_csv(report));

  if (!expect.empty() && expect != to_string(report.verdict)) {
    out << "expected " << expect << "\n";
    return kExitMismatch;
  }
  return kExitOk;
}

int cmd_scenario_list(std::ostream& out) {
  out << "scenarios:\n";
  for (const ScenarioSpec& s : builtin_scenarios())
    out << "  " << s.name << "  (" << s.expected << ")  " << s.summary << "\n";
  out << "weak-star calibrations:\n";
  for (const std::string& name : calibration_names()) out << "  " << name << "\n";
  return kExitOk;
}

}  // namespace capprox
