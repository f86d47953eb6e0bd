#include "semired/analysis.hpp"

#include <fstream>
#include <sstream>

#include "semired/errors.hpp"

namespace semired {

namespace {

using nlohmann::json;

Rat entry_from_json(const json& v, const std::string& where) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rat(Int(v.get<long long>()));
  throw InputError(where + ": matrix entries must be rational strings or integers");
}

RatMat matrix_from_json(const json& v, int n, const std::string& where) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    throw InputError(where + ": expected " + std::to_string(n) + " rows");
  }
  RatMat m(n);
  for (int i = 0; i < n; ++i) {
    const json& row = v[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      throw InputError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(n) +
                       " entries");
    }
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = entry_from_json(row[static_cast<std::size_t>(j)],
                                   where + "[" + std::to_string(i) + "][" + std::to_string(j) +
                                       "]");
    }
  }
  return m;
}

json matrix_to_json(const RatMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.n(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json partition_to_json(const Partition& part) {
  // Blocks carry 1-based indices in reports.
  json blocks = json::array();
  for (const auto& block : part) {
    json b = json::array();
    for (int idx : block) b.push_back(idx + 1);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::string partition_to_text(const Partition& part) {
  std::ostringstream os;
  for (std::size_t b = 0; b < part.size(); ++b) {
    os << (b ? " " : "") << "{";
    for (std::size_t i = 0; i < part[b].size(); ++i) os << (i ? "," : "") << part[b][i] + 1;
    os << "}";
  }
  return os.str();
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(const std::string& data) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(data);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

json defect_to_json(long v) {
  if (v == kValInfinity) return json("inf");
  return json(v);
}

std::string defect_to_text(long v) {
  return v == kValInfinity ? std::string("inf") : std::to_string(v);
}

json report_to_json(const StructureReport& r) {
  json components = json::array();
  for (const auto& c : r.components) {
    components.push_back(
        json{{"dim", c.dim}, {"center_degree", c.center_degree}, {"matrix_size", c.matrix_size}});
  }
  json idems = json::array();
  for (const auto& e : r.primitive_central_idempotents) {
    json coords = json::array();
    for (FpScalar x : e) coords.push_back(x);
    idems.push_back(std::move(coords));
  }
  return json{{"radical_dim", r.radical_dim},
              {"semisimple", r.semisimple},
              {"simple", r.simple},
              {"components", std::move(components)},
              {"primitive_central_idempotents", std::move(idems)}};
}

}  // namespace

std::string to_string(AnalysisMode m) {
  switch (m) {
    case AnalysisMode::representation:
      return "representation";
    case AnalysisMode::order:
      return "order";
    case AnalysisMode::cluster:
      return "cluster";
  }
  return "unknown";
}

AnalysisInput parse_input(const json& doc) {
  if (!doc.is_object()) throw InputError("input document must be a JSON object");
  AnalysisInput in;
  if (!doc.contains("p")) throw InputError("missing field: p");
  if (doc["p"].is_number_unsigned() || doc["p"].is_number_integer()) {
    long long p = doc["p"].get<long long>();
    if (p < 2) throw InputError("p must be a prime >= 2");
    in.p = static_cast<std::uint64_t>(p);
  } else if (doc["p"].is_string()) {
    in.p = static_cast<std::uint64_t>(std::stoull(doc["p"].get<std::string>()));
  } else {
    throw InputError("p: expected an integer");
  }
  if (!is_prime(in.p)) throw InputError("p = " + std::to_string(in.p) + " is not prime");

  std::string mode = doc.value("mode", std::string("representation"));
  if (mode == "representation") {
    in.mode = AnalysisMode::representation;
  } else if (mode == "order") {
    in.mode = AnalysisMode::order;
  } else if (mode == "cluster") {
    in.mode = AnalysisMode::cluster;
  } else {
    throw InputError("mode: expected one of representation|order|cluster");
  }

  if (doc.contains("precision")) {
    long prec = doc["precision"].get<long>();
    if (prec < 1) throw InputError("precision must be >= 1");
    in.precision = prec;
  }
  if (doc.contains("max_steps")) {
    int ms = doc["max_steps"].get<int>();
    if (ms < 1) throw InputError("max_steps must be >= 1");
    in.max_steps = ms;
  }

  const auto forbid = [&](const char* field) {
    if (doc.contains(field)) {
      throw InputError(std::string(field) + " is not a valid field in mode " + mode);
    }
  };

  if (in.mode == AnalysisMode::cluster) {
    forbid("generators");
    forbid("order_basis");
    forbid("v_lattice_basis");
    forbid("n");
    if (!doc.contains("chars") || !doc["chars"].is_array() || doc["chars"].empty()) {
      throw InputError("cluster mode requires a non-empty chars array");
    }
    for (std::size_t i = 0; i < doc["chars"].size(); ++i) {
      in.chars.push_back(entry_from_json(doc["chars"][i], "chars[" + std::to_string(i) + "]"));
    }
    in.n = static_cast<int>(in.chars.size());
    if (doc.contains("max_level")) {
      int ml = doc["max_level"].get<int>();
      if (ml < 0) throw InputError("max_level must be >= 0");
      in.max_level = ml;
    }
    return in;
  }

  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw InputError("missing field: n");
  }
  in.n = doc["n"].get<int>();
  if (in.n < 1) throw InputError("n must be >= 1");

  if (in.mode == AnalysisMode::representation) {
    forbid("order_basis");
    forbid("chars");
    forbid("max_level");
    if (!doc.contains("generators") || !doc["generators"].is_array() ||
        doc["generators"].empty()) {
      throw InputError("representation mode requires a non-empty generators array");
    }
    for (std::size_t i = 0; i < doc["generators"].size(); ++i) {
      in.generators.push_back(matrix_from_json(doc["generators"][i], in.n,
                                               "generators[" + std::to_string(i) + "]"));
    }
    if (doc.contains("v_lattice_basis")) {
      in.v_lattice_basis = matrix_from_json(doc["v_lattice_basis"], in.n, "v_lattice_basis");
    }
  } else {
    forbid("generators");
    forbid("v_lattice_basis");
    forbid("chars");
    forbid("max_level");
    if (!doc.contains("order_basis") || !doc["order_basis"].is_array() ||
        doc["order_basis"].empty()) {
      throw InputError("order mode requires a non-empty order_basis array");
    }
    for (std::size_t i = 0; i < doc["order_basis"].size(); ++i) {
      in.order_basis.push_back(matrix_from_json(doc["order_basis"][i], in.n,
                                                "order_basis[" + std::to_string(i) + "]"));
    }
  }
  return in;
}

AnalysisInput input_from_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open input file: " + path);
  json doc;
  try {
    f >> doc;
  } catch (const json::parse_error& e) {
    throw InputError("JSON parse error in " + path + ": " + e.what());
  }
  return parse_input(doc);
}

json canonical_input_json(const AnalysisInput& in) {
  json doc;
  doc["p"] = in.p;
  doc["mode"] = to_string(in.mode);
  doc["precision"] = in.precision;
  doc["max_steps"] = in.max_steps;
  if (in.mode == AnalysisMode::cluster) {
    json chars = json::array();
    for (const auto& a : in.chars) chars.push_back(rat_to_string(a));
    doc["chars"] = std::move(chars);
    doc["max_level"] = in.max_level;
    return doc;
  }
  doc["n"] = in.n;
  if (in.mode == AnalysisMode::representation) {
    json gens = json::array();
    for (const auto& g : in.generators) gens.push_back(matrix_to_json(g));
    doc["generators"] = std::move(gens);
    if (in.v_lattice_basis) doc["v_lattice_basis"] = matrix_to_json(*in.v_lattice_basis);
  } else {
    json basis = json::array();
    for (const auto& b : in.order_basis) basis.push_back(matrix_to_json(b));
    doc["order_basis"] = std::move(basis);
  }
  return doc;
}

AnalysisOutput run_analysis(const AnalysisInput& in) {
  AnalysisOutput out;
  out.input = in;
  switch (in.mode) {
    case AnalysisMode::representation: {
      std::vector<RatMat> gens = in.generators;
      if (in.v_lattice_basis) {
        gens = conjugate_to_lattice_basis(gens, *in.v_lattice_basis, in.p);
      }
      OperatorLattice l0 = algebra_closure(in.p, in.n, gens, in.max_steps);
      ReductionChain chain = saturate(l0, in.max_steps);
      out.alpha_dims = chain.alpha_dims();
      out.stabilized_at = chain.stabilized_at;
      const OperatorLattice& fixpoint = chain.final_level().lattice;
      FpAlgebra reduced = from_matrix_span(in.p, chain.final_level().alpha);
      out.reduced = wedderburn_components(reduced);
      DecompositionReport rep;
      rep.reduced_report = out.reduced;
      rep.verdict = decide_verdict(in.n, out.reduced);
      if (out.reduced.semisimple) {
        for (const auto& coords : out.reduced.primitive_central_idempotents) {
          rep.idempotent_lifts.push_back(lift_central_idempotent(
              reduced.model_matrix(coords), fixpoint, in.precision));
        }
        rep.component_dims = split_representation(fixpoint, rep.idempotent_lifts, in.precision);
      } else {
        out.warnings.push_back(
            "the reduced operator algebra is not semisimple; this proves nothing about the "
            "representation itself (the criterion is one-directional), so the verdict is "
            "inconclusive");
      }
      out.decomposition = std::move(rep);
      break;
    }
    case AnalysisMode::order: {
      FpAlgebra reduced = order_reduction(in.p, in.n, in.order_basis);
      out.reduced = wedderburn_components(reduced);
      break;
    }
    case AnalysisMode::cluster: {
      out.cluster_result = compare(CharacterSet{in.p, in.chars}, in.max_level, in.max_steps);
      if (!out.cluster_result->all_match) {
        out.warnings.push_back(
            "computed cluster partition deviates from the mod-p^(level+1) congruence "
            "partition at some level; this is unexpected and worth reporting");
      }
      break;
    }
  }
  return out;
}

std::string emit_report(const AnalysisOutput& out, ReportFormat format) {
  const json input_echo = canonical_input_json(out.input);
  const std::string input_dump = input_echo.dump();
  const std::string hash = hash_hex(input_dump);

  if (format == ReportFormat::machine) {
    json doc;
    doc["input"] = input_echo;
    doc["input_hash"] = "fnv1a64:" + hash;
    doc["mode"] = to_string(out.input.mode);
    json warnings = json::array();
    for (const auto& w : out.warnings) warnings.push_back(w);
    doc["warnings"] = std::move(warnings);
    if (out.input.mode == AnalysisMode::cluster) {
      const CompareResult& cr = *out.cluster_result;
      json levels = json::array();
      for (std::size_t i = 0; i < cr.level_match.size(); ++i) {
        levels.push_back(json{{"level", i},
                              {"computed", partition_to_json(cr.computed.levels[i])},
                              {"predicted", partition_to_json(cr.expected[i])},
                              {"match", static_cast<bool>(cr.level_match[i])}});
      }
      doc["levels"] = std::move(levels);
      doc["all_match"] = out.cluster_result->all_match;
      return doc.dump(2) + "\n";
    }
    doc["reduced"] = report_to_json(out.reduced);
    if (out.input.mode == AnalysisMode::representation) {
      doc["alpha_dims"] = out.alpha_dims;
      doc["stabilized_at"] = out.stabilized_at;
      const DecompositionReport& rep = *out.decomposition;
      doc["verdict"] = to_string(rep.verdict);
      doc["component_dims"] = rep.component_dims;
      json lifts = json::array();
      for (std::size_t i = 0; i < rep.idempotent_lifts.size(); ++i) {
        const IdempotentLift& l = rep.idempotent_lifts[i];
        lifts.push_back(json{{"steps", l.steps},
                             {"defect_valuation", defect_to_json(l.defect_valuation)},
                             {"component_dim", rep.component_dims[i]}});
      }
      doc["lifts"] = std::move(lifts);
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  os << "semired analysis report\n";
  os << "  mode:           " << to_string(out.input.mode) << "\n";
  os << "  p:              " << out.input.p << "\n";
  os << "  input hash:     fnv1a64:" << hash << "\n";
  if (out.input.mode == AnalysisMode::cluster) {
    const CompareResult& cr = *out.cluster_result;
    for (std::size_t i = 0; i < cr.level_match.size(); ++i) {
      os << "  level " << i << ": computed " << partition_to_text(cr.computed.levels[i])
         << " | predicted " << partition_to_text(cr.expected[i]) << " | "
         << (cr.level_match[i] ? "match" : "MISMATCH") << "\n";
    }
    os << "  all levels match: " << (cr.all_match ? "yes" : "no") << "\n";
  } else {
    const int reduced_dim = out.input.mode == AnalysisMode::order
                                ? static_cast<int>(out.input.order_basis.size())
                                : (out.alpha_dims.empty() ? 0 : out.alpha_dims.back());
    os << "  reduced:        dim=" << reduced_dim << " radical_dim=" << out.reduced.radical_dim
       << " semisimple=" << (out.reduced.semisimple ? "yes" : "no") << " simple="
       << (out.reduced.simple ? "yes" : "no") << "\n";
    for (const auto& c : out.reduced.components) {
      os << "  component:      M_" << c.matrix_size << "(F_{" << out.input.p << "^"
         << c.center_degree << "}), dim " << c.dim << "\n";
    }
    if (out.input.mode == AnalysisMode::representation) {
      os << "  alpha dims:     [";
      for (std::size_t i = 0; i < out.alpha_dims.size(); ++i) {
        os << (i ? ", " : "") << out.alpha_dims[i];
      }
      os << "]\n";
      os << "  stabilized at:  " << out.stabilized_at << "\n";
      const DecompositionReport& rep = *out.decomposition;
      os << "  verdict:        " << to_string(rep.verdict) << "\n";
      if (!rep.component_dims.empty()) {
        os << "  component dims: [";
        for (std::size_t i = 0; i < rep.component_dims.size(); ++i) {
          os << (i ? ", " : "") << rep.component_dims[i];
        }
        os << "]\n";
      }
      for (const auto& l : rep.idempotent_lifts) {
        os << "  lift:           steps=" << l.steps
           << " defect_valuation=" << defect_to_text(l.defect_valuation) << "\n";
      }
    }
  }
  for (const auto& w : out.warnings) os << "  warning:        " << w << "\n";
  return os.str();
}

}  // namespace semired
