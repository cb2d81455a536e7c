#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgsize/optimize/grid_search.hpp"

namespace mgsize::cli {

enum class Command { Validate, Evaluate, Search, Refine, RlSearch, Pareto, Sensitivity, LcoeSweep };

std::string_view to_string(Command c);
std::optional<Command> command_from_string(std::string_view name);

inline constexpr std::uint64_t kDefaultSeed = 42;

struct RunConfig {
  Command command = Command::Validate;
  std::filesystem::path scenario_path;  // empty: bundled scenario
  std::optional<std::string> design;    // "pv=418,wt=123,dg=0,bess=704,conv=255"
  std::optional<std::string> space;     // "pv=0:600:25,..."
  std::string weights = "0.25,0.25,0.25,0.25";
  std::filesystem::path output_dir = "mgsize-out";
  std::uint64_t seed = kDefaultSeed;
  unsigned jobs = 1;
  std::optional<double> budget_usd;
  std::filesystem::path results_path;   // input for pareto, bounds for refine
  int episodes = 2000;
  double learning_rate = 0.1;
  std::optional<std::size_t> max_evaluations;
  std::optional<std::string> sweep_parameter;  // all four when empty
  std::vector<double> multipliers;             // defaults when empty
  std::filesystem::path export_dir;            // validate: write the scenario out
  bool write_trace = true;                     // evaluate: hourly trace file
};

// Parses argv. Flags win over MGSIZE_* environment variables. Returns the
// exit code to use when parsing ends the program (help, usage errors).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = 0;
};
ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Runs one command. 0 on success, 2 for configuration errors, 1 otherwise.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// All points with a 0/1 nondominated column. Throws EmptyInput.
void emit_pareto_plotdata(std::ostream& out, std::span<const EvaluatedDesign> evaluations);
void emit_pareto_plotdata(const std::filesystem::path& path,
                          std::span<const EvaluatedDesign> evaluations);

}  // namespace mgsize::cli
