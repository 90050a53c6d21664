#include <iostream>

#include <CLI11.hpp>

#include "capprox/driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bounded polynomial approximation on the unit circle"};
  app.require_subcommand(1);

  capprox::PipelineCommand pipe;
  CLI::App* sub_pipe = app.add_subcommand("pipeline", "run a sufficiency scenario");
  sub_pipe->add_option("--scenario", pipe.scenario, "built-in scenario name");
  sub_pipe->add_option("--grid", pipe.grid_n, "boundary grid size");
  sub_pipe->add_option("--steps", pipe.steps, "number of steps");
  sub_pipe->add_option("--window", pipe.window, "reporting Fourier window");
  sub_pipe->add_option("--bound", pipe.bound, "sup-norm bound M");
  sub_pipe->add_flag("--fejer", pipe.fejer, "smooth combinations by Cesaro means");
  sub_pipe->add_flag("--override-weakstar", pipe.override_weak_star,
                     "skip the weak-star precheck");
  sub_pipe->add_option("--expect", pipe.expect, "fail with exit 2 unless this verdict");
  sub_pipe->add_option("--out", pipe.out_json, "write the JSON report here");
  sub_pipe->add_option("--csv", pipe.out_csv, "write the CSV report here");

  capprox::NehariCommand neh;
  CLI::App* sub_neh = app.add_subcommand("nehari", "two-sided distance to the disk algebra");
  sub_neh->add_option("--symbol", neh.symbol_path, "JSON sampled function");
  sub_neh->add_option("--builtin", neh.builtin, "built-in symbol (conjugate)");
  sub_neh->add_option("--grid", neh.grid_n, "grid size for the builtin symbol");
  sub_neh->add_option("--degree", neh.degree, "approximant degree budget");
  sub_neh->add_option("--hankel", neh.hankel_size, "Hankel truncation size");
  sub_neh->add_option("--out", neh.out_json, "write the JSON certificate here");

  capprox::WeakstarCommand ws;
  CLI::App* sub_ws = app.add_subcommand("weakstar", "weak-star convergence check");
  sub_ws->add_option("--calibration", ws.calibration, "known-answer sequence name");
  sub_ws->add_option("--sequence", ws.sequence_path, "JSON sequence file");
  sub_ws->add_option("--limit", ws.limit_path, "JSON sampled limit file");
  sub_ws->add_option("--grid", ws.grid_n, "grid size for calibrations");
  sub_ws->add_option("--window", ws.window, "Fourier window");
  sub_ws->add_option("--tol", ws.tol, "deviation tolerance");
  sub_ws->add_option("--prefix", ws.prefix, "number of members to examine");
  sub_ws->add_option("--expect", ws.expect, "fail with exit 2 unless this verdict");
  sub_ws->add_option("--out", ws.out_json, "write the JSON report here");
  sub_ws->add_option("--csv", ws.out_csv, "write the CSV table here");

  CLI::App* sub_list = app.add_subcommand("scenario-list", "list scenarios and calibrations");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? capprox::kExitOk : capprox::kExitConfig;
  }

  try {
    if (sub_pipe->parsed()) return capprox::cmd_pipeline(pipe, std::cout);
    if (sub_neh->parsed()) return capprox::cmd_nehari(neh, std::cout);
    if (sub_ws->parsed()) return capprox::cmd_weakstar(ws, std::cout);
    if (sub_list->parsed()) return capprox::cmd_scenario_list(std::cout);
  } catch (const capprox::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return capprox::kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return capprox::kExitConfig;
  }
  return capprox::kExitConfig;
}
