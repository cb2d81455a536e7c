#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mgsize/error.hpp"
#include "mgsize/metrics.hpp"
#include "mgsize/optimize/pareto.hpp"
#include "mgsize/optimize/policy_gradient.hpp"
#include "mgsize/optimize/refine.hpp"
#include "mgsize/optimize/results_io.hpp"
#include "mgsize/optimize/scalarize.hpp"
#include "mgsize/scenario_io.hpp"
#include "mgsize/sensitivity.hpp"

namespace mgsize::cli {

namespace {

constexpr std::array<std::pair<Command, std::string_view>, 8> kCommands = {{
    {Command::Validate, "validate"},
    {Command::Evaluate, "evaluate"},
    {Command::Search, "search"},
    {Command::Refine, "refine"},
    {Command::RlSearch, "rl-search"},
    {Command::Pareto, "pareto"},
    {Command::Sensitivity, "sensitivity"},
    {Command::LcoeSweep, "lcoe-sweep"},
}};

Scenario load(const RunConfig& c) {
  return c.scenario_path.empty() ? validate_scenario(bundled_scenario())
                                 : load_scenario(c.scenario_path);
}

Design require_design(const RunConfig& c, const Scenario& s) {
  if (!c.design) throw ConfigError(fmt::format("{} needs --design", to_string(c.command)));
  return parse_design(*c.design, s.tariff.max_import_kw);
}

SearchSpace space_of(const RunConfig& c) {
  return c.space ? parse_search_space(*c.space) : SearchSpace::default_space();
}

std::filesystem::path prepare_out(const RunConfig& c) {
  std::filesystem::create_directories(c.output_dir);
  return c.output_dir;
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

void print_metrics(std::ostream& out, const MetricVector& m) {
  const auto names = metric_field_names();
  const auto values = metric_field_values(m);
  for (std::size_t i = 0; i < names.size(); ++i) {
    fmt::print(out, "  {:<22}{:.10g}\n", names[i], values[i]);
  }
}

void print_row(std::ostream& out, const EvaluatedDesign& e) {
  const MetricVector& m = e.metrics;
  fmt::print(out, "  {:<48} npc={:>12.0f} R={:.4f} eff={:6.2f}% co2={:>10.0f}\n",
             format_design(e.design), m.npc_usd, m.reliability, m.efficiency_pct,
             m.co2_kg_per_yr);
}

// Pareto subset of `pool` in pool order, ranked by scalarized score.
void write_front(const std::filesystem::path& dir, const std::vector<EvaluatedDesign>& pool,
                 const Weights& w, std::ostream& out) {
  const auto metrics = metrics_of(pool);
  std::vector<EvaluatedDesign> front;
  for (std::size_t i : pareto_indices(metrics)) front.push_back(pool[i]);
  const auto ranks = score_ranks(metrics_of(front), w);
  write_pareto_csv(dir / "pareto.csv", front, ranks);
  emit_pareto_plotdata(dir / "plotdata.csv", pool);

  fmt::print(out, "{} non-dominated of {}\n", front.size(), pool.size());
  if (!front.empty()) {
    const auto best = static_cast<std::size_t>(
        std::find(ranks.begin(), ranks.end(), std::size_t{1}) - ranks.begin());
    fmt::print(out, "best by weighted score:\n");
    print_row(out, front[best]);
  }
}

int cmd_validate(const RunConfig& c, std::ostream& out) {
  const Scenario s = load(c);
  fmt::print(out, "scenario {}: {} h, load {:.1f} MWh (peak {:.1f} kW)\n", s.name, s.load.size(),
             s.load.sum() / 1000.0, s.load.max());
  if (!c.export_dir.empty()) {
    fmt::print(out, "wrote {}\n", save_scenario(s, c.export_dir).string());
  }
  fmt::print(out, "scenario OK\n");
  return 0;
}

int cmd_evaluate(const RunConfig& c, std::ostream& out) {
  const Scenario s = load(c);
  const Design d = require_design(c, s);
  const Evaluation e = evaluate_detailed(d, s);
  const auto dir = prepare_out(c);
  EvaluatedDesign row{d, e.metrics, true, {}, 0};
  check_feasibility(row, std::nullopt);
  write_results_csv(dir / "evaluation.csv", std::span(&row, 1));
  if (c.write_trace) {
    auto trace = open_for_write(dir / "trace.csv");
    write_trace_csv(trace, e.trace);
  }
  fmt::print(out, "design {}\n", format_design(d));
  print_metrics(out, e.metrics);
  return 0;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  const Scenario s = load(c);
  const SearchSpace space = space_of(c);
  const Weights w = Weights::parse(c.weights);
  GridSearchOptions opt;
  opt.budget_usd = c.budget_usd;
  opt.jobs = c.jobs;
  const auto results = grid_search(s, space, opt);
  const auto dir = prepare_out(c);
  write_results_csv(dir / "results.csv", results);
  fmt::print(out, "{} lattice points, {} feasible\n", space.size(), results.size());
  if (results.empty()) return 0;
  fmt::print(out, "lowest npc:\n");
  for (std::size_t i = 0; i < std::min<std::size_t>(5, results.size()); ++i) {
    print_row(out, results[i]);
  }
  write_front(dir, results, w, out);
  return 0;
}

int cmd_refine(const RunConfig& c, std::ostream& out) {
  const Scenario s = load(c);
  const Design start = require_design(c, s);
  const Weights w = Weights::parse(c.weights);
  const StepSchedule schedule;

  // Normalization pool: a previous results file, or the start's lattice neighbours.
  std::vector<MetricVector> pool;
  if (!c.results_path.empty()) {
    pool = metrics_of(read_results_csv(c.results_path));
  } else {
    pool.push_back(evaluate(start, s));
    for (std::size_t i = 0; i < kDimensions.size(); ++i) {
      for (double sign : {1.0, -1.0}) {
        Design n = start;
        const double v = capacity(start, kDimensions[i]) + sign * schedule.initial_step[i];
        if (v < 0.0) continue;
        set_capacity(n, kDimensions[i], v);
        pool.push_back(evaluate(n, s));
      }
    }
  }
  const auto bounds = NormalizationBounds::from_pool(pool);
  const RefinedDesign r = refine(start, s, w, bounds, schedule);

  EvaluatedDesign before{start, evaluate(start, s), true, {}, 0};
  check_feasibility(before, std::nullopt);
  const std::vector<EvaluatedDesign> rows{before, r.result};
  const auto dir = prepare_out(c);
  write_results_csv(dir / "refined.csv", rows);

  fmt::print(out, "start   score {:.6f}\n", r.search.start_score);
  print_row(out, before);
  fmt::print(out, "refined score {:.6f} after {} cycles, {} evaluations{}\n", r.search.score,
             r.search.iterations, r.search.evaluations, r.search.converged ? "" : " (cap hit)");
  print_row(out, r.result);
  return 0;
}

int cmd_rl_search(const RunConfig& c, std::ostream& out) {
  const Scenario s = load(c);
  const SearchSpace space = space_of(c);
  const Weights w = Weights::parse(c.weights);
  PolicyGradientConfig cfg;
  cfg.max_episodes = c.episodes;
  cfg.learning_rate = c.learning_rate;
  cfg.max_evaluations = c.max_evaluations;
  const auto result = policy_gradient_search(s, space, cfg, c.seed);
  const auto dir = prepare_out(c);
  write_results_csv(dir / "archive.csv", result.archive);
  fmt::print(out, "{} episodes, {} distinct designs{}{}\n", result.episodes,
             result.archive.size(), result.converged ? ", policy converged" : "",
             result.budget_exhausted ? ", evaluation budget exhausted" : "");
  const auto mode = space.design_at(result.policy.mode());
  fmt::print(out, "policy mode {}\n", format_design(mode));
  write_front(dir, result.archive, w, out);
  return 0;
}

int cmd_pareto(const RunConfig& c, std::ostream& out) {
  if (c.results_path.empty()) throw ConfigError("pareto needs --results");
  const auto pool = read_results_csv(c.results_path);
  if (pool.empty()) throw EmptyInput("results file has no rows: " + c.results_path.string());
  const Weights w = Weights::parse(c.weights);
  write_front(prepare_out(c), pool, w, out);
  return 0;
}

int cmd_sensitivity(const RunConfig& c, std::ostream& out) {
  const Scenario s = load(c);
  const Design d = require_design(c, s);
  const auto perturbations = standard_perturbations();
  const auto report = run_sensitivity(s, d, perturbations, c.jobs);
  write_deviation_csv(prepare_out(c) / "sensitivity.csv", report);
  fmt::print(out, "{:<12}{:>8}{:>10}{:>10}{:>10}{:>10}\n", "parameter", "delta%", "npc%", "R%",
             "eff%", "co2%");
  for (const auto& r : report.rows) {
    fmt::print(out, "{:<12}{:>8.0f}{:>10.2f}{:>10.2f}{:>10.2f}{:>10.2f}\n",
               to_string(r.perturbation.target), 100.0 * r.perturbation.delta, r.npc_pct,
               r.reliability_pct, r.efficiency_pct, r.co2_pct);
  }
  return 0;
}

int cmd_lcoe_sweep(const RunConfig& c, std::ostream& out) {
  const Scenario s = load(c);
  const Design d = require_design(c, s);
  std::vector<SweepParameter> params(kSweepParameters.begin(), kSweepParameters.end());
  if (c.sweep_parameter) params = {sweep_parameter_from_string(*c.sweep_parameter)};
  const auto multipliers = c.multipliers.empty() ? default_sweep_multipliers() : c.multipliers;
  const auto dir = prepare_out(c);
  for (auto p : params) {
    const auto curve = lcoe_sweep(s, d, p, multipliers, c.jobs);
    write_sweep_csv(dir / fmt::format("lcoe_{}.csv", to_string(p)), curve);
    fmt::print(out, "{}:", to_string(p));
    for (const auto& pt : curve) fmt::print(out, " {}x={:.4f}", pt.multiplier, pt.lcoe_usd_per_kwh);
    fmt::print(out, "\n");
  }
  return 0;
}

}  // namespace

std::string_view to_string(Command c) {
  for (const auto& [cmd, name] : kCommands) {
    if (cmd == c) return name;
  }
  return "?";
}

std::optional<Command> command_from_string(std::string_view name) {
  for (const auto& [cmd, n] : kCommands) {
    if (n == name) return cmd;
  }
  return std::nullopt;
}

ParseOutcome parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Microgrid sizing: simulate, search and analyse PV/wind/diesel/battery designs",
               "mgsize"};
  RunConfig c;
  std::string command;
  std::vector<std::string> names;
  for (const auto& [cmd, name] : kCommands) names.emplace_back(name);

  std::string scenario, out_dir, results, export_dir;
  std::string design, space, sweep;
  double budget = 0.0;
  std::size_t max_evals = 0;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));
  app.add_option("--scenario", scenario, "Scenario JSON (bundled scenario when omitted)")
      ->envname("MGSIZE_SCENARIO");
  app.add_option("--design", design, "pv=..,wt=..,dg=..,bess=..,conv=..[,grid=..]")
      ->envname("MGSIZE_DESIGN");
  app.add_option("--space", space, "pv=min:max:step,...,grid=<kW>|maxdg")
      ->envname("MGSIZE_SPACE");
  app.add_option("--weights", c.weights, "npc,reliability,efficiency,co2 weights")
      ->envname("MGSIZE_WEIGHTS");
  app.add_option("--seed", c.seed, "Random seed")->envname("MGSIZE_SEED");
  app.add_option("--out", out_dir, "Output directory")->envname("MGSIZE_OUT");
  app.add_option("--jobs", c.jobs, "Worker threads")->envname("MGSIZE_JOBS")
      ->check(CLI::PositiveNumber);
  auto* budget_opt = app.add_option("--budget", budget, "Capital plus yearly operating cost limit, $")
                         ->envname("MGSIZE_BUDGET");
  app.add_option("--results", results, "Results CSV (pareto input, refine normalization)")
      ->envname("MGSIZE_RESULTS");
  app.add_option("--episodes", c.episodes, "Policy-gradient episodes")
      ->envname("MGSIZE_EPISODES")->check(CLI::NonNegativeNumber);
  app.add_option("--learning-rate", c.learning_rate, "Policy-gradient step size")
      ->envname("MGSIZE_LEARNING_RATE");
  auto* evals_opt = app.add_option("--max-evaluations", max_evals,
                                   "Distinct designs the policy search may simulate")
                        ->envname("MGSIZE_MAX_EVALUATIONS");
  app.add_option("--parameter", sweep,
                 "purchase_price, sellback_price, battery_capital_cost or pv_capital_cost")
      ->envname("MGSIZE_PARAMETER");
  app.add_option("--multipliers", c.multipliers, "Sweep multipliers")->delimiter(',');
  app.add_option("--export", export_dir, "validate: write the scenario and its series here");
  bool no_trace = false;
  app.add_flag("--no-trace", no_trace, "evaluate: skip the hourly trace file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return {std::nullopt, app.exit(e, out, err)};
  }

  c.command = *command_from_string(command);
  c.scenario_path = scenario;
  if (!design.empty()) c.design = design;
  if (!space.empty()) c.space = space;
  if (!out_dir.empty()) c.output_dir = out_dir;
  if (budget_opt->count() > 0 || std::getenv("MGSIZE_BUDGET")) c.budget_usd = budget;
  if (evals_opt->count() > 0 || std::getenv("MGSIZE_MAX_EVALUATIONS")) c.max_evaluations = max_evals;
  c.results_path = results;
  if (!sweep.empty()) c.sweep_parameter = sweep;
  c.export_dir = export_dir;
  c.write_trace = !no_trace;
  return {c, 0};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Validate: return cmd_validate(config, out);
      case Command::Evaluate: return cmd_evaluate(config, out);
      case Command::Search: return cmd_search(config, out);
      case Command::Refine: return cmd_refine(config, out);
      case Command::RlSearch: return cmd_rl_search(config, out);
      case Command::Pareto: return cmd_pareto(config, out);
      case Command::Sensitivity: return cmd_sensitivity(config, out);
      case Command::LcoeSweep: return cmd_lcoe_sweep(config, out);
    }
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 2;
  } catch (const InvalidWeights& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return 1;
  }
  return 1;
}

void emit_pareto_plotdata(std::ostream& out, std::span<const EvaluatedDesign> evaluations) {
  if (evaluations.empty()) throw EmptyInput("no evaluations to plot");
  std::vector<MetricVector> metrics;
  metrics.reserve(evaluations.size());
  for (const auto& e : evaluations) metrics.push_back(e.metrics);
  std::vector<bool> front(evaluations.size(), false);
  for (std::size_t i : pareto_indices(metrics)) front[i] = true;

  std::ostringstream table;
  write_results_csv(table, evaluations);
  std::istringstream lines(table.str());
  std::string line;
  std::getline(lines, line);
  out << line << ",nondominated\n";
  for (std::size_t i = 0; std::getline(lines, line); ++i) {
    out << line << ',' << (front[i] ? 1 : 0) << '\n';
  }
}

void emit_pareto_plotdata(const std::filesystem::path& path,
                          std::span<const EvaluatedDesign> evaluations) {
  if (evaluations.empty()) throw EmptyInput("no evaluations to plot");
  auto out = open_for_write(path);
  emit_pareto_plotdata(out, evaluations);
}

}  // namespace mgsize::cli
