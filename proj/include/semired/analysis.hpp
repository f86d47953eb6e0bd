#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semired/dual.hpp"
#include "semired/lifting.hpp"

namespace semired {

enum class AnalysisMode { representation, order, cluster };

std::string to_string(AnalysisMode m);

struct AnalysisInput {
  std::uint64_t p = 0;
  int n = 0;
  AnalysisMode mode = AnalysisMode::representation;
  std::vector<RatMat> generators;            // representation mode
  std::optional<RatMat> v_lattice_basis;     // representation mode, optional
  std::vector<RatMat> order_basis;           // order mode
  std::vector<Rat> chars;                    // cluster mode
  int max_level = 3;                         // cluster mode
  long precision = 64;
  int max_steps = 64;
};

// Parses and validates an input document; throws InputError with positional
// context on malformed data. The schema is documented in docs/format.md.
AnalysisInput parse_input(const nlohmann::json& doc);
AnalysisInput input_from_file(const std::string& path);

// Canonicalised echo of the input: defaults filled in, rationals rendered
// in lowest terms. Parsing the echo reproduces it.
nlohmann::json canonical_input_json(const AnalysisInput& in);

struct AnalysisOutput {
  AnalysisInput input;
  std::vector<int> alpha_dims;
  int stabilized_at = -1;
  StructureReport reduced;
  std::optional<DecompositionReport> decomposition;  // representation mode
  std::optional<CompareResult> cluster_result;       // cluster mode
  std::vector<std::string> warnings;
};

AnalysisOutput run_analysis(const AnalysisInput& in);

enum class ReportFormat { text, machine };

// Byte-deterministic report. The machine format is JSON with sorted keys
// and rationals as strings.
std::string emit_report(const AnalysisOutput& out, ReportFormat format);

}  // namespace semired
