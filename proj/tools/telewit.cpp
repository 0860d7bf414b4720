// telewit -- command-line front end: state generation, witness evaluation,
// fully-entangled-fraction estimation, shot-noise simulation and parameter
// sweeps. Every command prints one JSON report on stdout; sweeps additionally
// write a CSV. Exit codes: 0 success, 2 invalid input, 3 internal failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "telewit/fef.hpp"
#include "telewit/io.hpp"
#include "telewit/shots.hpp"
#include "telewit/util.hpp"
#include "telewit/witness_eval.hpp"

namespace tw = telewit;
using tw::Json;

namespace {

std::string format_g17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct UnitaryChoice {
  std::string name = "identity";  // identity | pauli-x
  std::string file;
  std::string theta_csv;

  Json echo() const {
    Json j;
    if (!file.empty()) {
      j["unitary_file"] = file;
    } else if (!theta_csv.empty()) {
      j["theta"] = theta_csv;
    } else {
      j["unitary"] = name;
    }
    return j;
  }
};

std::vector<double> parse_csv_doubles(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(item, &pos);
      while (pos < item.size() && std::isspace(static_cast<unsigned char>(item[pos]))) {
        ++pos;
      }
      if (pos != item.size()) {
        throw std::invalid_argument(item);
      }
      values.push_back(v);
    } catch (const std::exception&) {
      throw tw::ValidationError("cannot parse '" + item + "' as a number in '" +
                                text + "'");
    }
  }
  if (values.empty()) {
    throw tw::ValidationError("empty coefficient list '" + text + "'");
  }
  return values;
}

tw::UnitaryMatrix resolve_unitary(const UnitaryChoice& choice, int dim) {
  if (!choice.file.empty()) {
    tw::UnitaryMatrix u = tw::read_unitary_file(choice.file);
    if (u.dim() != dim) {
      throw tw::ValidationError("unitary file is " + std::to_string(u.dim()) + "x" +
                                std::to_string(u.dim()) + " but the state needs " +
                                std::to_string(dim) + "x" + std::to_string(dim));
    }
    return u;
  }
  if (!choice.theta_csv.empty()) {
    const std::vector<double> values = parse_csv_doubles(choice.theta_csv);
    tw::RealVector theta(static_cast<long>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
      theta(static_cast<long>(i)) = values[i];
    }
    return tw::unitary_from_params(tw::UnitaryParams{dim, theta});
  }
  if (choice.name == "identity") {
    return tw::UnitaryMatrix::identity(dim);
  }
  if (choice.name == "pauli-x") {
    if (dim != 2) {
      throw tw::ValidationError("the pauli-x unitary needs a two-qubit state, got n = " +
                                std::to_string(dim));
    }
    return tw::UnitaryMatrix(tw::generators(2).symmetric[0]);
  }
  throw tw::ValidationError("unknown unitary '" + choice.name +
                            "' (expected identity or pauli-x)");
}

void print_report(const std::string& command, const Json& inputs, const Json& outputs,
                  std::chrono::steady_clock::time_point started) {
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  Json report;
  report["command"] = command;
  report["inputs"] = inputs;
  report["outputs"] = outputs;
  report["timing_s"] = seconds;
  std::cout << report.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// gen-state

struct GenStateArgs {
  std::string family;
  double a = 0.0;
  double p = 0.0;
  int n = 2;
  int rank = 1;
  std::uint64_t seed = 0;
  std::string out;
};

int run_gen_state(const GenStateArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  tw::StateFamilySpec spec;
  spec.family = tw::parse_family(args.family);
  spec.a = args.a;
  spec.p = args.p;
  spec.dim = args.n;
  spec.rank = args.rank;
  spec.seed = args.seed;
  const tw::DensityMatrix rho = tw::make_state(spec);
  tw::write_state_file(rho, args.out);

  const tw::EigResult eig = tw::hermitian_eig(rho.matrix());
  const double purity = tw::trace_product(rho.matrix(), rho.matrix()).real();

  Json inputs;
  inputs["family"] = args.family;
  switch (spec.family) {
    case tw::StateFamily::example:
      inputs["a"] = args.a;
      break;
    case tw::StateFamily::isotropic:
      inputs["n"] = args.n;
      inputs["p"] = args.p;
      break;
    case tw::StateFamily::werner_qubit:
      inputs["p"] = args.p;
      break;
    case tw::StateFamily::pure:
      inputs["n"] = args.n;
      break;
    case tw::StateFamily::random_mixed:
      inputs["n"] = args.n;
      inputs["rank"] = args.rank;
      break;
  }
  inputs["seed"] = args.seed;

  Json outputs;
  outputs["path"] = args.out;
  outputs["n"] = rho.local_dim();
  outputs["trace"] = rho.matrix().trace().real();
  outputs["min_eigenvalue"] = eig.eigenvalues.minCoeff();
  outputs["max_eigenvalue"] = eig.eigenvalues.maxCoeff();
  outputs["purity"] = purity;
  outputs["valid"] = true;
  print_report("gen-state", inputs, outputs, started);
  return 0;
}

// ---------------------------------------------------------------------------
// eval-witness

struct EvalWitnessArgs {
  std::string state_path;
  UnitaryChoice unitary;
  double margin = 0.0;
};

int run_eval_witness(const EvalWitnessArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const tw::DensityMatrix rho = tw::read_state_file(args.state_path);
  const int n = rho.local_dim();
  const tw::UnitaryMatrix u = resolve_unitary(args.unitary, n);
  const tw::WitnessOperator w = tw::witness(n, u);
  const tw::WitnessVerdict verdict = tw::decide(w, rho, args.margin);

  Json inputs = args.unitary.echo();
  inputs["state"] = args.state_path;
  inputs["margin"] = args.margin;

  Json outputs;
  outputs["n"] = n;
  outputs["expectation"] = verdict.expectation;
  outputs["threshold"] = verdict.threshold;
  outputs["detected"] = verdict.detected;
  if (n == 2) {
    const double eq5 = tw::qubit_witness_value(u, rho);
    outputs["eq5_value"] = eq5;
    outputs["eq5_minus_1"] = eq5 - 1.0;
  }
  print_report("eval-witness", inputs, outputs, started);
  return 0;
}

// ---------------------------------------------------------------------------
// estimate-fef

struct EstimateFefArgs {
  std::string state_path;
  int restarts = 20;
  int budget = 5000;
  double tolerance = 1e-9;
  double margin = 1e-9;
  std::uint64_t seed = 0;
  std::string certificate_out;
};

int run_estimate_fef(const EstimateFefArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const tw::DensityMatrix rho = tw::read_state_file(args.state_path);
  tw::OptimizerConfig cfg;
  cfg.restarts = args.restarts;
  cfg.max_evaluations = args.budget;
  cfg.step_tolerance = args.tolerance;
  cfg.seed = args.seed;
  cfg.usefulness_margin = args.margin;
  const auto [verdict, estimate] = tw::is_useful(rho, cfg);

  const double clamped = std::min(std::max(estimate.value, 0.0), 1.0);
  const double fidelity = tw::fidelity_from_fef(clamped, rho.local_dim());

  if (!args.certificate_out.empty()) {
    tw::write_unitary_file(estimate.certificate, args.certificate_out);
  }

  Json inputs;
  inputs["state"] = args.state_path;
  inputs["restarts"] = args.restarts;
  inputs["budget"] = args.budget;
  inputs["tolerance"] = args.tolerance;
  inputs["margin"] = args.margin;
  inputs["seed"] = args.seed;

  Json outputs;
  outputs["n"] = rho.local_dim();
  outputs["fef"] = estimate.value;
  outputs["fidelity"] = fidelity;
  outputs["verdict"] = tw::to_string(verdict);
  outputs["witness_expectation"] = rho.local_dim() * estimate.value;
  outputs["restarts_used"] = estimate.restarts_used;
  outputs["evaluations"] = estimate.evaluations;
  outputs["converged"] = estimate.converged;
  if (!args.certificate_out.empty()) {
    outputs["certificate_path"] = args.certificate_out;
  }
  print_report("estimate-fef", inputs, outputs, started);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate-shots

struct SimulateShotsArgs {
  std::string state_path;
  UnitaryChoice unitary;
  long shots = 100000;
  std::string allocation = "proportional";
  double sigmas = 3.0;
  std::uint64_t seed = 0;
};

int run_simulate_shots(const SimulateShotsArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const tw::DensityMatrix rho = tw::read_state_file(args.state_path);
  const int n = rho.local_dim();
  const tw::UnitaryMatrix u = resolve_unitary(args.unitary, n);
  tw::ShotPlan plan;
  plan.total_shots = args.shots;
  plan.allocation = tw::parse_allocation(args.allocation);
  plan.seed = args.seed;
  const tw::EstimationResult result = tw::estimate_witness_mean(n, u, rho, plan);
  const tw::Confidence verdict = tw::detect_with_confidence(result, args.sigmas);

  Json inputs = args.unitary.echo();
  inputs["state"] = args.state_path;
  inputs["shots"] = args.shots;
  inputs["allocation"] = args.allocation;
  inputs["sigmas"] = args.sigmas;
  inputs["seed"] = args.seed;

  Json outputs;
  outputs["n"] = n;
  outputs["mean"] = result.mean;
  outputs["standard_error"] = result.standard_error;
  outputs["verdict"] = tw::to_string(verdict);
  Json terms = Json::array();
  for (const tw::TermStats& t : result.per_term) {
    Json item;
    item["coefficient"] = t.coefficient;
    item["mean"] = t.mean;
    item["shots"] = t.shots;
    item["variance"] = t.variance;
    terms.push_back(std::move(item));
  }
  outputs["per_term"] = std::move(terms);
  print_report("simulate-shots", inputs, outputs, started);
  return 0;
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  std::string family;
  double start = 0.0;
  double stop = 1.0;
  double step = 0.05;
  std::string evaluator = "exact";
  int n = 2;
  UnitaryChoice unitary;
  long shots = 100000;
  std::string allocation = "proportional";
  double sigmas = 3.0;
  int restarts = 20;
  int budget = 5000;
  double margin = 1e-9;
  std::uint64_t seed = 0;
  std::string out;
};

std::vector<double> build_grid(double start, double stop, double step) {
  if (!(step > 0.0) || stop < start) {
    throw tw::ValidationError("empty parameter grid: start " + std::to_string(start) +
                              ", stop " + std::to_string(stop) + ", step " +
                              std::to_string(step));
  }
  std::vector<double> grid;
  for (long k = 0;; ++k) {
    const double value = start + static_cast<double>(k) * step;
    if (value > stop + 1e-12) {
      break;
    }
    grid.push_back(value);
  }
  if (grid.empty()) {
    throw tw::ValidationError("empty parameter grid");
  }
  return grid;
}

tw::DensityMatrix sweep_state(tw::StateFamily family, int n, double param) {
  tw::StateFamilySpec spec;
  spec.family = family;
  spec.dim = n;
  switch (family) {
    case tw::StateFamily::example:
      spec.a = param;
      break;
    case tw::StateFamily::isotropic:
    case tw::StateFamily::werner_qubit:
      spec.p = param;
      break;
    default:
      throw tw::ValidationError("family '" + std::string(tw::to_string(family)) +
                                "' has no sweepable parameter");
  }
  return tw::make_state(spec);
}

int run_sweep(const SweepArgs& args) {
  const auto started = std::chrono::steady_clock::now();
  const tw::StateFamily family = tw::parse_family(args.family);
  if (family != tw::StateFamily::example &&
      family != tw::StateFamily::isotropic &&
      family != tw::StateFamily::werner_qubit) {
    throw tw::ValidationError("family '" + args.family +
                              "' has no sweepable parameter");
  }
  const std::vector<double> grid = build_grid(args.start, args.stop, args.step);
  const int n = family == tw::StateFamily::isotropic ? args.n : 2;

  if (args.evaluator != "exact" && args.evaluator != "shots" &&
      args.evaluator != "fef") {
    throw tw::ValidationError("unknown evaluator '" + args.evaluator +
                              "' (expected exact, shots or fef)");
  }

  std::string header;
  if (args.evaluator == "exact") {
    header = n == 2 ? "param,witness_expectation,eq5_value,eq5_minus_1,detected"
                    : "param,witness_expectation,detected";
  } else if (args.evaluator == "shots") {
    header = "param,witness_mean,standard_error,verdict";
  } else {
    header = "param,fef_value,witness_expectation,fidelity,verdict";
  }

  std::vector<std::string> rows(grid.size());
  tw::run_indexed(static_cast<int>(grid.size()), tw::env_worker_count(), [&](int k) {
    const double param = grid[static_cast<std::size_t>(k)];
    const tw::DensityMatrix rho = sweep_state(family, n, param);
    std::ostringstream row;
    row << format_g17(param);
    if (args.evaluator == "exact") {
      const tw::UnitaryMatrix u = resolve_unitary(args.unitary, n);
      const tw::WitnessVerdict verdict = tw::decide(tw::witness(n, u), rho);
      row << "," << format_g17(verdict.expectation);
      if (n == 2) {
        const double eq5 = tw::qubit_witness_value(u, rho);
        row << "," << format_g17(eq5) << "," << format_g17(eq5 - 1.0);
      }
      row << "," << (verdict.detected ? 1 : 0);
    } else if (args.evaluator == "shots") {
      const tw::UnitaryMatrix u = resolve_unitary(args.unitary, n);
      tw::ShotPlan plan;
      plan.total_shots = args.shots;
      plan.allocation = tw::parse_allocation(args.allocation);
      plan.seed = tw::mix_seed(args.seed, static_cast<std::uint64_t>(k));
      const tw::EstimationResult result = tw::estimate_witness_mean(n, u, rho, plan);
      row << "," << format_g17(result.mean) << ","
          << format_g17(result.standard_error) << ","
          << tw::to_string(tw::detect_with_confidence(result, args.sigmas));
    } else {
      tw::OptimizerConfig cfg;
      cfg.restarts = args.restarts;
      cfg.max_evaluations = args.budget;
      cfg.seed = tw::mix_seed(args.seed, static_cast<std::uint64_t>(k));
      cfg.usefulness_margin = args.margin;
      const auto [verdict, estimate] = tw::is_useful(rho, cfg);
      const double clamped = std::min(std::max(estimate.value, 0.0), 1.0);
      row << "," << format_g17(estimate.value) << ","
          << format_g17(n * estimate.value) << ","
          << format_g17(tw::fidelity_from_fef(clamped, n)) << ","
          << tw::to_string(verdict);
    }
    rows[static_cast<std::size_t>(k)] = row.str();
  });

  std::ofstream csv(args.out);
  if (!csv) {
    throw tw::ValidationError("cannot write CSV file '" + args.out + "'");
  }
  csv << header << "\n";
  for (const std::string& row : rows) {
    csv << row << "\n";
  }
  csv.close();

  Json inputs = args.unitary.echo();
  inputs["family"] = args.family;
  inputs["start"] = args.start;
  inputs["stop"] = args.stop;
  inputs["step"] = args.step;
  inputs["evaluator"] = args.evaluator;
  inputs["n"] = n;
  inputs["seed"] = args.seed;
  if (args.evaluator == "shots") {
    inputs["shots"] = args.shots;
    inputs["allocation"] = args.allocation;
    inputs["sigmas"] = args.sigmas;
  }
  if (args.evaluator == "fef") {
    inputs["restarts"] = args.restarts;
    inputs["budget"] = args.budget;
  }

  Json outputs;
  outputs["csv"] = args.out;
  outputs["rows"] = rows.size();
  outputs["header"] = header;
  print_report("sweep", inputs, outputs, started);
  return 0;
}

void add_unitary_flags(CLI::App* cmd, UnitaryChoice& choice) {
  cmd->add_option("--unitary", choice.name,
                  "named unitary: identity or pauli-x (default identity)");
  cmd->add_option("--unitary-file", choice.file, "JSON unitary file");
  cmd->add_option("--theta", choice.theta_csv,
                  "comma-separated exponential-map coefficients (n² values)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"telewit: teleportation-resource witnesses, fully entangled "
               "fraction estimation and shot-noise simulation"};
  app.require_subcommand(1);

  GenStateArgs gen;
  CLI::App* cmd_gen = app.add_subcommand("gen-state", "construct a state file");
  cmd_gen->add_option("--family", gen.family,
                      "example | isotropic | werner_qubit | pure | random_mixed")
      ->required();
  cmd_gen->add_option("--a", gen.a, "example family weight, in [0, 1]");
  cmd_gen->add_option("--p", gen.p, "isotropic/werner mixing parameter");
  cmd_gen->add_option("--n", gen.n, "local dimension (default 2)");
  cmd_gen->add_option("--rank", gen.rank, "random_mixed rank (default 1)");
  cmd_gen->add_option("--seed", gen.seed, "random seed (default 0)");
  cmd_gen->add_option("--out", gen.out, "output state JSON path")->required();

  EvalWitnessArgs eval;
  CLI::App* cmd_eval = app.add_subcommand("eval-witness",
                                          "exact witness expectation and verdict");
  cmd_eval->add_option("--state", eval.state_path, "state JSON path")->required();
  add_unitary_flags(cmd_eval, eval.unitary);
  cmd_eval->add_option("--margin", eval.margin,
                       "require expectation > 1 + margin (default 0)");

  EstimateFefArgs fef;
  CLI::App* cmd_fef = app.add_subcommand("estimate-fef",
                                         "maximize the fully entangled fraction");
  cmd_fef->add_option("--state", fef.state_path, "state JSON path")->required();
  cmd_fef->add_option("--restarts", fef.restarts, "optimizer restarts (default 20)");
  cmd_fef->add_option("--budget", fef.budget,
                      "objective evaluations per restart (default 5000)");
  cmd_fef->add_option("--tolerance", fef.tolerance,
                      "simplex tolerance (default 1e-9)");
  cmd_fef->add_option("--margin", fef.margin,
                      "usefulness margin over 1/n (default 1e-9)");
  cmd_fef->add_option("--seed", fef.seed, "random seed (default 0)");
  cmd_fef->add_option("--certificate-out", fef.certificate_out,
                      "write the certificate unitary to this JSON path");

  SimulateShotsArgs sim;
  CLI::App* cmd_sim = app.add_subcommand("simulate-shots",
                                         "finite-statistics witness estimation");
  cmd_sim->add_option("--state", sim.state_path, "state JSON path")->required();
  add_unitary_flags(cmd_sim, sim.unitary);
  cmd_sim->add_option("--shots", sim.shots, "total shot budget (default 100000)");
  cmd_sim->add_option("--allocation", sim.allocation,
                      "uniform | proportional (default proportional)");
  cmd_sim->add_option("--sigmas", sim.sigmas, "confidence width (default 3)");
  cmd_sim->add_option("--seed", sim.seed, "random seed (default 0)");

  SweepArgs sweep;
  CLI::App* cmd_sweep = app.add_subcommand("sweep",
                                           "evaluate a family over a parameter grid");
  cmd_sweep->add_option("--family", sweep.family,
                        "example | isotropic | werner_qubit")->required();
  cmd_sweep->add_option("--start", sweep.start, "grid start (default 0)");
  cmd_sweep->add_option("--stop", sweep.stop, "grid stop (default 1)");
  cmd_sweep->add_option("--step", sweep.step, "grid step (default 0.05)");
  cmd_sweep->add_option("--evaluator", sweep.evaluator,
                        "exact | shots | fef (default exact)");
  cmd_sweep->add_option("--n", sweep.n, "isotropic local dimension (default 2)");
  add_unitary_flags(cmd_sweep, sweep.unitary);
  cmd_sweep->add_option("--shots", sweep.shots, "shots per row (shots mode)");
  cmd_sweep->add_option("--allocation", sweep.allocation, "uniform | proportional");
  cmd_sweep->add_option("--sigmas", sweep.sigmas, "confidence width (default 3)");
  cmd_sweep->add_option("--restarts", sweep.restarts, "restarts per row (fef mode)");
  cmd_sweep->add_option("--budget", sweep.budget, "evaluations per restart (fef mode)");
  cmd_sweep->add_option("--seed", sweep.seed, "base seed; rows derive their own");
  cmd_sweep->add_option("--out", sweep.out, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_gen->parsed()) return run_gen_state(gen);
    if (cmd_eval->parsed()) return run_eval_witness(eval);
    if (cmd_fef->parsed()) return run_estimate_fef(fef);
    if (cmd_sim->parsed()) return run_simulate_shots(sim);
    if (cmd_sweep->parsed()) return run_sweep(sweep);
  } catch (const tw::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const tw::ConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
