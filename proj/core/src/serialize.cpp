#include "quboc/serialize.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "quboc/problem.hpp"
#include "quboc/version.hpp"

namespace quboc {
namespace {

using ordered_json = nlohmann::ordered_json;

/// Matrices larger than this render as sparse entry lists.
constexpr std::size_t kDenseMatrixLimit = 32;

ordered_json document(const char* type) {
  ordered_json body;
  body["format_version"] = kFormatVersion;
  body["type"] = type;
  return body;
}

ordered_json with_header(const char* type, ordered_json inner) {
  ordered_json body = document(type);
  for (auto& [key, value] : inner.items()) {
    body[key] = std::move(value);
  }
  return body;
}

std::string dump(const ordered_json& body) { return body.dump(2) + "\n"; }

ordered_json pb_terms(const PseudoBooleanPolynomial& f) {
  ordered_json terms = ordered_json::array();
  for (const auto& [key, coefficient] : f.terms()) {
    ordered_json term;
    term["variables"] = key;
    term["coefficient"] = to_string(coefficient);
    terms.push_back(std::move(term));
  }
  return terms;
}

ordered_json pb_body(const PseudoBooleanPolynomial& f) {
  ordered_json body;
  body["terms"] = pb_terms(f);
  body["degree"] = f.degree();
  return body;
}

ordered_json matrix_body(const std::vector<std::vector<Rational>>& matrix) {
  if (matrix.size() <= kDenseMatrixLimit) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : matrix) {
      ordered_json cells = ordered_json::array();
      for (const Rational& value : row) {
        cells.push_back(to_string(value));
      }
      rows.push_back(std::move(cells));
    }
    ordered_json body;
    body["layout"] = "dense";
    body["rows"] = std::move(rows);
    return body;
  }
  ordered_json entries = ordered_json::array();
  for (std::size_t j = 0; j < matrix.size(); ++j) {
    for (std::size_t k = 0; k < matrix[j].size(); ++k) {
      if (matrix[j][k] == 0) continue;
      ordered_json entry;
      entry["row"] = j;
      entry["col"] = k;
      entry["value"] = to_string(matrix[j][k]);
      entries.push_back(std::move(entry));
    }
  }
  ordered_json body;
  body["layout"] = "sparse";
  body["entries"] = std::move(entries);
  return body;
}

ordered_json qubo_body(const QuboModel& model) {
  ordered_json body;
  body["variables"] = model.variables;
  body["constant"] = to_string(model.constant);
  body["Q"] = matrix_body(model.Q);
  return body;
}

ordered_json ising_body(const IsingModel& model) {
  ordered_json body;
  body["variables"] = model.variables;
  body["offset"] = to_string(model.offset);
  ordered_json h = ordered_json::array();
  for (const Rational& value : model.h) {
    h.push_back(to_string(value));
  }
  body["h"] = std::move(h);
  body["J"] = matrix_body(model.J);
  return body;
}

ordered_json ising_polynomial_body(const IsingPolynomial& hp) {
  ordered_json body;
  body["variables"] = hp.variables();
  ordered_json terms = ordered_json::array();
  for (const auto& [key, coefficient] : hp.terms()) {
    ordered_json term;
    term["spins"] = key;
    term["coefficient"] = to_string(coefficient);
    terms.push_back(std::move(term));
  }
  body["terms"] = std::move(terms);
  return body;
}

ordered_json circuit_body(const GateCircuit& circuit) {
  ordered_json body;
  body["qubits"] = circuit.qubit_count;
  ordered_json gates = ordered_json::array();
  for (const Gate& gate : circuit.gates) {
    ordered_json entry;
    switch (gate.kind) {
      case Gate::Kind::H:
        entry["gate"] = "h";
        entry["qubit"] = gate.qubit;
        break;
      case Gate::Kind::RZ:
        entry["gate"] = "rz";
        entry["qubit"] = gate.qubit;
        entry["angle"] = gate.angle;
        break;
      case Gate::Kind::RX:
        entry["gate"] = "rx";
        entry["qubit"] = gate.qubit;
        entry["angle"] = gate.angle;
        break;
      case Gate::Kind::CNOT:
        entry["gate"] = "cx";
        entry["control"] = gate.control;
        entry["target"] = gate.qubit;
        break;
    }
    gates.push_back(std::move(entry));
  }
  body["gates"] = std::move(gates);
  return body;
}

ordered_json assignment_body(const Assignment& bits) {
  ordered_json body = ordered_json::object();
  for (const auto& [name, value] : bits) {
    body[name] = value ? 1 : 0;
  }
  return body;
}

ordered_json samples_body(const SampleSet& set) {
  ordered_json body;
  body["total_reads"] = set.total_reads();
  ordered_json records = ordered_json::array();
  for (const SampleRecord& record : set.records()) {
    ordered_json entry;
    entry["assignment"] = assignment_body(record.assignment);
    entry["energy"] = to_string(record.energy);
    entry["occurrences"] = record.occurrences;
    records.push_back(std::move(entry));
  }
  body["records"] = std::move(records);
  return body;
}

ordered_json decoded_values_body(const DecodedValues& values) {
  ordered_json body = ordered_json::object();
  for (const auto& [name, value] : values.booleans) {
    body[name] = value;
  }
  for (const auto& [name, value] : values.integers) {
    body[name] = value.str();
  }
  for (const auto& [name, level] : values.categories) {
    body[name] = level;
  }
  for (const auto& [name, order] : values.permutations) {
    body[name] = order;
  }
  return body;
}

ordered_json registry_body(const VariableRegistry& registry) {
  ordered_json body;
  body["binary"] = registry.binary_variables();
  body["auxiliary"] =
      std::vector<std::string>(registry.auxiliary_variables().begin(),
                               registry.auxiliary_variables().end());
  ordered_json integers = ordered_json::array();
  for (const IntegerEncoding& encoding : registry.integer_encodings()) {
    ordered_json entry;
    entry["name"] = encoding.source;
    entry["lower"] = encoding.lower.str();
    entry["upper"] = encoding.upper.str();
    entry["bits"] = encoding.bits;
    entry["decode"] = pb_body(encoding.decode);
    integers.push_back(std::move(entry));
  }
  body["integers"] = std::move(integers);
  ordered_json categoricals = ordered_json::array();
  for (const OneHotEncoding& encoding : registry.categorical_encodings()) {
    ordered_json entry;
    entry["name"] = encoding.source;
    entry["levels"] = encoding.levels;
    entry["indicators"] = encoding.indicators;
    categoricals.push_back(std::move(entry));
  }
  body["categoricals"] = std::move(categoricals);
  ordered_json permutations = ordered_json::array();
  for (const PermutationEncoding& encoding :
       registry.permutation_encodings()) {
    ordered_json entry;
    entry["name"] = encoding.source;
    entry["size"] = encoding.size;
    entry["cells"] = encoding.vars;
    permutations.push_back(std::move(entry));
  }
  body["permutations"] = std::move(permutations);
  ordered_json slacks = ordered_json::array();
  for (const IntegerEncoding& encoding : registry.slack_encodings()) {
    ordered_json entry;
    entry["name"] = encoding.source;
    entry["lower"] = encoding.lower.str();
    entry["upper"] = encoding.upper.str();
    entry["bits"] = encoding.bits;
    slacks.push_back(std::move(entry));
  }
  body["slacks"] = std::move(slacks);
  return body;
}

std::string strategy_name(QuadratizationStrategy strategy) {
  switch (strategy) {
    case QuadratizationStrategy::Rosenberg:
      return "rosenberg";
    case QuadratizationStrategy::Local:
      return "local";
    case QuadratizationStrategy::Hybrid:
      return "hybrid";
  }
  std::abort();
}

ordered_json quadratization_body(const QuadratizationReport& report) {
  ordered_json body;
  ordered_json substitutions = ordered_json::array();
  for (const PairSubstitution& sub : report.substitutions) {
    ordered_json entry;
    entry["x"] = sub.x;
    entry["y"] = sub.y;
    entry["aux"] = sub.aux;
    entry["constant"] = to_string(sub.constant);
    substitutions.push_back(std::move(entry));
  }
  body["substitutions"] = std::move(substitutions);
  ordered_json locals = ordered_json::array();
  for (const LocalSubstitution& sub : report.locals) {
    ordered_json entry;
    entry["monomial"] = sub.monomial;
    entry["coefficient"] = to_string(sub.coefficient);
    entry["aux"] = sub.aux;
    locals.push_back(std::move(entry));
  }
  body["locals"] = std::move(locals);
  body["output"] = pb_body(report.output);
  return body;
}

ordered_json compile_body(const CompileOutput& output) {
  ordered_json body = document("compile_output");
  body["tool_version"] = output.tool_version;
  ordered_json flags;
  flags["strategy"] = strategy_name(output.flags.strategy);
  flags["penalty"] = output.flags.penalty.has_value()
                         ? to_string(*output.flags.penalty)
                         : std::string("auto");
  body["flags"] = std::move(flags);
  body["problem"] = ordered_json::parse(print_problem(output.problem));
  body["registry"] = registry_body(output.registry);
  body["objective"] = pb_body(output.objective);
  ordered_json penalties = ordered_json::array();
  for (const PenaltyTerm& term : output.penalized.penalties) {
    ordered_json entry;
    entry["id"] = term.id;
    entry["constant"] = to_string(term.constant);
    entry["polynomial"] = pb_body(term.polynomial);
    penalties.push_back(std::move(entry));
  }
  body["penalties"] = std::move(penalties);
  body["penalized"] = pb_body(output.penalized.assembled);
  body["logical_variables"] = output.logical_variables;
  body["quadratization"] = quadratization_body(output.quadratization);
  body["qubo"] = qubo_body(output.qubo);
  body["ising"] = ising_body(output.ising);
  body["hamiltonian"] = ising_polynomial_body(output.hamiltonian);
  return body;
}

std::string backend_name(SolveBackend backend) {
  switch (backend) {
    case SolveBackend::Annealer:
      return "sa";
    case SolveBackend::Qaoa:
      return "qaoa";
    case SolveBackend::BruteForce:
      return "brute";
  }
  std::abort();
}

ordered_json report_body(const SolveReport& report,
                         const CompileOutput& output) {
  ordered_json body = document("solve_report");
  body["tool_version"] = output.tool_version;
  body["backend"] = backend_name(report.backend);
  body["total_reads"] = report.samples.total_reads();
  if (report.qaoa.has_value()) {
    ordered_json qaoa;
    qaoa["gamma"] = report.qaoa->params.gamma;
    qaoa["beta"] = report.qaoa->params.beta;
    qaoa["expectation"] = report.qaoa->expectation;
    body["qaoa"] = std::move(qaoa);
  }
  ordered_json records = ordered_json::array();
  for (const DecodedSample& sample : report.decoded) {
    ordered_json entry;
    entry["values"] = decoded_values_body(sample.values);
    entry["energy"] = to_string(sample.energy);
    entry["occurrences"] = sample.occurrences;
    entry["feasible"] = sample.feasible;
    entry["bits"] = assignment_body(sample.bits);
    records.push_back(std::move(entry));
  }
  body["records"] = std::move(records);
  return body;
}

std::string value_cell(const std::string& name, const DecodedValues& values) {
  if (const auto it = values.booleans.find(name);
      it != values.booleans.end()) {
    return it->second ? "1" : "0";
  }
  if (const auto it = values.integers.find(name);
      it != values.integers.end()) {
    return it->second.str();
  }
  if (const auto it = values.categories.find(name);
      it != values.categories.end()) {
    return it->second;
  }
  if (const auto it = values.permutations.find(name);
      it != values.permutations.end()) {
    std::ostringstream cell;
    cell << "(";
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      if (i > 0) cell << ",";
      cell << it->second[i];
    }
    cell << ")";
    return cell.str();
  }
  return "-";
}

}  // namespace

std::string polynomial_to_json_text(const PseudoBooleanPolynomial& f) {
  ordered_json body = document("polynomial");
  body["terms"] = pb_terms(f);
  body["degree"] = f.degree();
  return dump(body);
}

std::string qubo_to_json_text(const QuboModel& model) {
  return dump(with_header("qubo", qubo_body(model)));
}

std::string ising_to_json_text(const IsingModel& model) {
  return dump(with_header("ising", ising_body(model)));
}

std::string ising_polynomial_to_json_text(const IsingPolynomial& hp) {
  return dump(with_header("ising_polynomial", ising_polynomial_body(hp)));
}

std::string circuit_to_json_text(const GateCircuit& circuit) {
  return dump(with_header("circuit", circuit_body(circuit)));
}

std::string samples_to_json_text(const SampleSet& set) {
  return dump(with_header("samples", samples_body(set)));
}

std::string compile_output_to_json_text(const CompileOutput& output) {
  return dump(compile_body(output));
}

std::string solve_report_to_json_text(const SolveReport& report,
                                      const CompileOutput& output) {
  return dump(report_body(report, output));
}

std::string solve_report_table(const SolveReport& report,
                               const CompileOutput& output) {
  std::vector<std::string> headers;
  for (const VariableDecl& decl : output.problem.variables) {
    headers.push_back(decl.name);
  }
  headers.push_back("energy");
  headers.push_back("occurrences");
  headers.push_back("feasible");

  std::vector<std::vector<std::string>> rows;
  for (const DecodedSample& sample : report.decoded) {
    std::vector<std::string> row;
    for (const VariableDecl& decl : output.problem.variables) {
      row.push_back(value_cell(decl.name, sample.values));
    }
    row.push_back(to_string(sample.energy));
    row.push_back(std::to_string(sample.occurrences));
    row.push_back(sample.feasible ? "yes" : "no");
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> widths;
  for (std::size_t column = 0; column < headers.size(); ++column) {
    std::size_t width = headers[column].size();
    for (const auto& row : rows) {
      width = std::max(width, row[column].size());
    }
    widths.push_back(width);
  }

  std::ostringstream table;
  const auto emit_row = [&](const std::vector<std::string>& cells) {
    for (std::size_t column = 0; column < cells.size(); ++column) {
      if (column > 0) table << "  ";
      table << std::string(widths[column] - cells[column].size(), ' ')
            << cells[column];
    }
    table << "\n";
  };
  emit_row(headers);
  for (const auto& row : rows) {
    emit_row(row);
  }
  return table.str();
}

}  // namespace quboc
