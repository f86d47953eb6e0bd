#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semired/analysis.hpp"
#include "semired/errors.hpp"

namespace {

using semired::AnalysisInput;
using semired::AnalysisMode;
using semired::ReportFormat;

ReportFormat parse_format(const std::string& fmt) {
  if (fmt == "text") return ReportFormat::text;
  if (fmt == "json") return ReportFormat::machine;
  throw semired::InputError("--format must be text or json");
}

int run(const AnalysisInput& input, const std::string& fmt) {
  semired::AnalysisOutput out = semired::run_analysis(input);
  std::cout << semired::emit_report(out, parse_format(fmt));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semired: semisimplicity of p-adic unitary representations via reduction of "
               "the operator algebra"};
  app.require_subcommand(1);

  std::string file;
  std::string fmt = "text";
  long precision = -1;
  int max_steps = -1;

  CLI::App* analyze = app.add_subcommand("analyze", "run an analysis input file");
  analyze->add_option("file", file, "input JSON file")->required();
  analyze->add_option("--format", fmt, "text or json");
  analyze->add_option("--precision", precision, "target idempotent precision N");
  analyze->add_option("--max-steps", max_steps, "saturation step bound");

  CLI::App* order = app.add_subcommand("order-reduce", "reduce an integral order mod p");
  order->add_option("file", file, "input JSON file (order mode)")->required();
  order->add_option("--format", fmt, "text or json");

  std::uint64_t cluster_p = 0;
  std::string chars_csv;
  int max_level = 3;
  CLI::App* cluster = app.add_subcommand("cluster", "cluster characters of Z_p by level");
  cluster->add_option("--p", cluster_p, "prime p")->required();
  cluster->add_option("--chars", chars_csv, "comma-separated character values at 1")->required();
  cluster->add_option("--max-level", max_level, "deepest level to compare");
  cluster->add_option("--format", fmt, "text or json");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed() || order->parsed()) {
      AnalysisInput input = semired::input_from_file(file);
      if (order->parsed() && input.mode != AnalysisMode::order) {
        throw semired::InputError("order-reduce expects an input file with mode \"order\"");
      }
      if (precision > 0) input.precision = precision;
      if (max_steps > 0) input.max_steps = max_steps;
      return run(input, fmt);
    }
    AnalysisInput input;
    input.mode = AnalysisMode::cluster;
    input.p = cluster_p;
    if (!semired::is_prime(input.p)) throw semired::InputError("p must be prime");
    std::stringstream ss(chars_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) input.chars.push_back(semired::parse_rational(item));
    }
    if (input.chars.empty()) throw semired::InputError("no characters given");
    input.n = static_cast<int>(input.chars.size());
    if (max_level < 0) throw semired::InputError("max_level must be >= 0");
    input.max_level = max_level;
    return run(input, fmt);
  } catch (const semired::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
