#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quboc/errors.hpp"
#include "quboc/pipeline.hpp"
#include "quboc/problem.hpp"
#include "quboc/serialize.hpp"
#include "quboc/version.hpp"

namespace {

struct InputOptions {
  std::string path;
  std::string format = "auto";
  bool strict = false;
};

struct CompileOptions {
  std::string strategy = "rosenberg";
  std::string penalty = "auto";
};

struct SolveOptions {
  std::string backend = "sa";
  std::uint64_t seed = 0;
  std::uint64_t reads = 1000;
  std::size_t layers = 2;
  std::uint64_t shots = 1000;
  std::uint64_t budget = 200;
  bool json = false;
};

void add_input_options(CLI::App* app, InputOptions& options) {
  app->add_option("input", options.path, "problem file (JSON or DIMACS CNF)")
      ->required();
  app->add_option("--format", options.format,
                  "input format; auto picks cnf for .cnf files")
      ->check(CLI::IsMember({"auto", "json", "cnf"}));
  app->add_flag("--strict", options.strict,
                "promote CNF clause-count mismatches to errors");
}

void add_compile_options(CLI::App* app, CompileOptions& options) {
  app->add_option("--strategy", options.strategy, "quadratization strategy")
      ->check(CLI::IsMember({"rosenberg", "local", "hybrid"}));
  app->add_option("--penalty", options.penalty,
                  "shared penalty weight (rational) or 'auto'");
}

quboc::ProblemSpec load_problem(const InputOptions& options) {
  std::string format = options.format;
  if (format == "auto") {
    const bool cnf = options.path.size() >= 4 &&
                     options.path.compare(options.path.size() - 4, 4,
                                          ".cnf") == 0;
    format = cnf ? "cnf" : "json";
  }
  if (format == "cnf") {
    const quboc::DimacsInstance instance =
        quboc::parse_dimacs_file(options.path, options.strict);
    for (const std::string& warning : instance.warnings) {
      std::cerr << "warning: " << warning << "\n";
    }
    return quboc::problem_from_dimacs(instance);
  }
  return quboc::parse_problem_file(options.path);
}

quboc::CompileFlags make_flags(const CompileOptions& options) {
  quboc::CompileFlags flags;
  if (options.strategy == "local") {
    flags.strategy = quboc::QuadratizationStrategy::Local;
  } else if (options.strategy == "hybrid") {
    flags.strategy = quboc::QuadratizationStrategy::Hybrid;
  }
  if (options.penalty != "auto") {
    try {
      flags.penalty = quboc::rational_from_string(options.penalty);
    } catch (const std::invalid_argument& error) {
      throw quboc::ParseError(std::string("--penalty: ") + error.what());
    }
  }
  return flags;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw quboc::BackendError("cannot open output file: " + path);
  file << text;
}

std::string emit_stage(const quboc::CompileOutput& output,
                       const std::string& stage) {
  if (stage == "all") return quboc::compile_output_to_json_text(output);
  if (stage == "problem") return quboc::print_problem(output.problem);
  if (stage == "objective") {
    return quboc::polynomial_to_json_text(output.objective);
  }
  if (stage == "penalized") {
    return quboc::polynomial_to_json_text(output.penalized.assembled);
  }
  if (stage == "quadratized") {
    return quboc::polynomial_to_json_text(output.quadratization.output);
  }
  if (stage == "qubo") return quboc::qubo_to_json_text(output.qubo);
  if (stage == "ising") return quboc::ising_to_json_text(output.ising);
  return quboc::ising_polynomial_to_json_text(output.hamiltonian);
}

std::string matrix_text(const std::vector<std::string>& variables,
                        const std::vector<std::vector<quboc::Rational>>& matrix) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (const std::string& name : variables) header.push_back(name);
  cells.push_back(header);
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    std::vector<std::string> row{variables[j]};
    for (const quboc::Rational& value : matrix[j]) {
      row.push_back(quboc::to_string(value));
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t column = 0; column < row.size(); ++column) {
      widths[column] = std::max(widths[column], row[column].size());
    }
  }
  std::ostringstream text;
  for (const auto& row : cells) {
    for (std::size_t column = 0; column < row.size(); ++column) {
      if (column > 0) text << "  ";
      text << std::string(widths[column] - row[column].size(), ' ')
           << row[column];
    }
    text << "\n";
  }
  return text.str();
}

std::string spin_polynomial_text(const quboc::IsingPolynomial& hp) {
  std::ostringstream text;
  text << "constant: " << quboc::to_string(hp.constant()) << "\n";
  for (const auto& [key, coefficient] : hp.terms()) {
    if (key.empty()) continue;
    text << quboc::to_string(coefficient);
    for (const std::size_t index : key) {
      text << " " << hp.variables()[index];
    }
    text << "\n";
  }
  return text.str();
}

std::string inspect_stage(const quboc::CompileOutput& output,
                          const std::string& stage) {
  std::ostringstream text;
  if (stage == "problem") return quboc::print_problem(output.problem);
  if (stage == "objective") return output.objective.to_string() + "\n";
  if (stage == "penalized") {
    for (const quboc::PenaltyTerm& term : output.penalized.penalties) {
      text << term.id << ": " << quboc::to_string(term.constant) << " * ("
           << term.polynomial.to_string() << ")\n";
    }
    text << output.penalized.assembled.to_string() << "\n";
    return text.str();
  }
  if (stage == "quadratized") {
    for (const quboc::PairSubstitution& sub :
         output.quadratization.substitutions) {
      text << sub.aux << " = " << sub.x << " * " << sub.y << " (weight "
           << quboc::to_string(sub.constant) << ")\n";
    }
    for (const quboc::LocalSubstitution& sub : output.quadratization.locals) {
      text << sub.aux << " replaces " << quboc::to_string(sub.coefficient);
      for (const std::string& name : sub.monomial) text << " " << name;
      text << "\n";
    }
    text << output.quadratization.output.to_string() << "\n";
    return text.str();
  }
  if (stage == "qubo") {
    text << "constant: " << quboc::to_string(output.qubo.constant) << "\n";
    text << matrix_text(output.qubo.variables, output.qubo.Q);
    return text.str();
  }
  if (stage == "ising") {
    text << "offset: " << quboc::to_string(output.ising.offset) << "\n";
    for (std::size_t j = 0; j < output.ising.variables.size(); ++j) {
      text << "h[" << output.ising.variables[j]
           << "] = " << quboc::to_string(output.ising.h[j]) << "\n";
    }
    text << matrix_text(output.ising.variables, output.ising.J);
    return text.str();
  }
  return spin_polynomial_text(output.hamiltonian);
}

quboc::SolveFlags make_solve_flags(const SolveOptions& options) {
  quboc::SolveFlags flags;
  if (options.backend == "qaoa") {
    flags.backend = quboc::SolveBackend::Qaoa;
  } else if (options.backend == "brute") {
    flags.backend = quboc::SolveBackend::BruteForce;
  }
  flags.seed = options.seed;
  flags.reads = options.reads;
  flags.layers = options.layers;
  flags.shots = options.shots;
  flags.budget = options.budget;
  return flags;
}

std::string run_and_render(const quboc::CompileOutput& output,
                           const SolveOptions& options) {
  const quboc::SolveReport report =
      quboc::run_solve(output, make_solve_flags(options));
  if (options.json) return quboc::solve_report_to_json_text(report, output);
  return quboc::solve_report_table(report, output);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QUBO/Ising compiler and solver toolkit"};
  app.set_version_flag("--version", quboc::kVersion);
  app.require_subcommand(1);

  InputOptions input;
  CompileOptions compile_options;
  SolveOptions solve_options;
  std::string output_path;
  std::string emit = "all";
  std::string stage = "problem";

  const std::vector<std::string> stages = {
      "all",  "problem", "objective",   "penalized",
      "qubo", "ising",   "quadratized", "hamiltonian"};
  const std::vector<std::string> inspect_stages = {
      "problem", "objective", "penalized",  "quadratized",
      "qubo",    "ising",     "hamiltonian"};

  CLI::App* cmd_compile =
      app.add_subcommand("compile", "lower a problem to QUBO/Ising form");
  add_input_options(cmd_compile, input);
  add_compile_options(cmd_compile, compile_options);
  cmd_compile->add_option("--emit", emit, "stage to emit as JSON")
      ->check(CLI::IsMember(stages));
  cmd_compile->add_option("-o,--output", output_path, "output file");

  CLI::App* cmd_solve =
      app.add_subcommand("solve", "compile and run a solver backend");
  add_input_options(cmd_solve, input);
  add_compile_options(cmd_solve, compile_options);
  cmd_solve->add_option("--backend", solve_options.backend, "solver backend")
      ->check(CLI::IsMember({"sa", "qaoa", "brute"}));
  cmd_solve->add_option("--seed", solve_options.seed, "random seed");
  cmd_solve->add_option("--reads", solve_options.reads, "annealer restarts");
  cmd_solve->add_option("--layers", solve_options.layers, "qaoa depth");
  cmd_solve->add_option("--shots", solve_options.shots, "qaoa measurements");
  cmd_solve->add_option("--budget", solve_options.budget,
                        "qaoa optimizer evaluations");
  cmd_solve->add_flag("--json", solve_options.json,
                      "emit a JSON report instead of a table");
  cmd_solve->add_option("-o,--output", output_path, "output file");

  CLI::App* cmd_brute = app.add_subcommand(
      "brute-force", "compile and enumerate the exact optimum set");
  add_input_options(cmd_brute, input);
  add_compile_options(cmd_brute, compile_options);
  cmd_brute->add_flag("--json", solve_options.json,
                      "emit a JSON report instead of a table");
  cmd_brute->add_option("-o,--output", output_path, "output file");

  CLI::App* cmd_inspect = app.add_subcommand(
      "inspect", "print one compilation stage in readable form");
  add_input_options(cmd_inspect, input);
  add_compile_options(cmd_inspect, compile_options);
  cmd_inspect->add_option("--stage", stage, "stage to print")
      ->check(CLI::IsMember(inspect_stages));
  cmd_inspect->add_option("-o,--output", output_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 2;
  }

  try {
    const quboc::ProblemSpec spec = load_problem(input);
    const quboc::CompileOutput compiled =
        quboc::compile(spec, make_flags(compile_options));
    if (app.got_subcommand(cmd_compile)) {
      write_output(output_path, emit_stage(compiled, emit));
    } else if (app.got_subcommand(cmd_solve)) {
      write_output(output_path, run_and_render(compiled, solve_options));
    } else if (app.got_subcommand(cmd_brute)) {
      solve_options.backend = "brute";
      write_output(output_path, run_and_render(compiled, solve_options));
    } else {
      write_output(output_path, inspect_stage(compiled, stage));
    }
  } catch (const quboc::ParseError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const quboc::CompileError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 3;
  } catch (const quboc::BackendError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 4;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
