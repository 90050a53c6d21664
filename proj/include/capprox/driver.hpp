#pragma once

#include <iosfwd>
#include <string>

#include "capprox/scenarios.hpp"

namespace capprox {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitMismatch = 2;

struct PipelineCommand {
  std::string scenario = "blaschke-arc";
  int grid_n = 4096;
  int steps = 8;
  int window = 32;
  double bound = 0.0;  // 0 keeps the scenario's natural bound
  bool fejer = false;
  bool override_weak_star = false;
  std::string expect;  // "", "positive", "negative", "mixed"
  std::string out_json;
  std::string out_csv;
};

struct NehariCommand {
  std::string symbol_path;  // JSON sampled function
  std::string builtin;     // "conjugate" builds the standard example
  int grid_n = 1024;       // builtin symbol only
  int degree = 32;
  int hankel_size = 16;
  std::string out_json;
};

struct WeakstarCommand {
  std::string calibration;  // named known-answer sequence
  std::string sequence_path;
  std::string limit_path;
  int grid_n = 4096;  // calibration only
  int window = 32;
  double tol = 1e-2;
  int prefix = 16;
  std::string expect;  // "", "converged", "not-converged", "inconclusive"
  std::string out_json;
  std::string out_csv;
};

int cmd_pipeline(const PipelineCommand& cmd, std::ostream& out);
int cmd_nehari(const NehariCommand& cmd, std::ostream& out);
int cmd_weakstar(const WeakstarCommand& cmd, std::ostream& out);
int cmd_scenario_list(std::ostream& out);

}  // namespace capprox
