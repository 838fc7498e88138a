// zhdd: command-line front end for the zhdd library.
//
// Exit status: 0 success, 1 inequivalent diagrams or a failing claim,
// 2 malformed input, 3 a resource cap was hit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <algorithm>

#include "zhdd/dot.hpp"
#include "zhdd/json_io.hpp"
#include "zhdd/semantics.hpp"
#include "zhdd/sqmdd.hpp"
#include "zhdd/translator.hpp"
#include "zhdd/verifier.hpp"

namespace {

using namespace zhdd;

constexpr int kOk = 0;
constexpr int kInequivalent = 1;
constexpr int kMalformed = 2;
constexpr int kResource = 3;

struct Globals {
  double tolerance = 1e-9;
  std::size_t max_qubits = 16;
  bool assert_stages = false;

  Tolerance tol() const { return Tolerance{tolerance}; }
  InterpretOptions interp() const {
    InterpretOptions o;
    o.max_qubits = max_qubits;
    o.max_workspace_qubits = std::max(o.max_workspace_qubits, max_qubits);
    return o;
  }
  TranslateOptions translate() const {
    TranslateOptions o;
    o.assert_stages = assert_stages;
    o.tol = tol();
    o.interp = interp();
    return o;
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Sqmdd read_sqmdd(const std::string& path) {
  const Json j = read_json_file(path);
  if (detect_document(j) != DocumentKind::Sqmdd) throw ParseError(path + ": expected an SQMDD document");
  return sqmdd_from_json(j);
}

ZhTerm read_term(const std::string& path) {
  const Json j = read_json_file(path);
  if (detect_document(j) != DocumentKind::Term) throw ParseError(path + ": expected a ZH term document");
  return term_from_json(j);
}

/// Canonical SQMDD of whatever the file holds (term, SQMDD or state vector).
Sqmdd canonical_of(const std::string& path, const Globals& g) {
  const Json j = read_json_file(path);
  switch (detect_document(j)) {
    case DocumentKind::Term:
      return zh_to_sqmdd(term_from_json(j), g.translate());
    case DocumentKind::Sqmdd:
      return reduce(sqmdd_from_json(j), g.tol()).diagram;
    case DocumentKind::Vector:
      return canonical_from_vector(vector_from_json(j), g.tol());
    case DocumentKind::Matrix:
      break;
  }
  throw ParseError(path + ": matrices cannot be compared; give the ZH term instead");
}

Json trace_to_json(const std::vector<RewriteStep>& trace) {
  Json out = Json::array();
  auto id = [](NodeId n) { return n == kTerminal ? Json("t") : Json(n); };
  for (const auto& step : trace) {
    out.push_back({{"rule", to_string(step.redex.rule)},
                   {"node", id(step.redex.node)},
                   {"other", id(step.redex.other)},
                   {"measure_before", step.before.components},
                   {"measure_after", step.after.components}});
  }
  return out;
}

Sqmdd without_scalar(Sqmdd d) {
  if (std::abs(d.scalar) > 0.0) d.scalar = 1.0;
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ZH-calculus diagrams and state decision diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--tolerance", g.tolerance, "Numerical tolerance")->capture_default_str();
  app.add_option("--max-qubits", g.max_qubits, "Largest boundary the dense evaluator accepts")->capture_default_str();
  app.add_flag("--assert-stages", g.assert_stages, "Check every translation stage against dense semantics");

  std::string in_a;
  std::string in_b;
  std::string out_path;
  std::string trace_path;

  auto* interpret = app.add_subcommand("interpret", "Dense vector or matrix of a term or SQMDD");
  interpret->add_option("file", in_a)->required();
  interpret->add_option("-o,--output", out_path);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an SQMDD to its canonical form");
  reduce_cmd->add_option("file", in_a)->required();
  reduce_cmd->add_option("-o,--output", out_path);
  reduce_cmd->add_option("--trace", trace_path, "Write the rewrite trace as JSON ('-' for stderr)");

  auto* to_zh = app.add_subcommand("to-zh", "Translate an SQMDD to a ZH term");
  to_zh->add_option("file", in_a)->required();
  to_zh->add_option("-o,--output", out_path);

  auto* to_sq = app.add_subcommand("to-sqmdd", "Translate a ZH term to its reduced SQMDD normal form");
  to_sq->add_option("file", in_a)->required();
  to_sq->add_option("-o,--output", out_path);

  auto* canonical = app.add_subcommand("canonical", "Canonical SQMDD of a state vector");
  canonical->add_option("file", in_a)->required();
  canonical->add_option("-o,--output", out_path);

  bool up_to_scalar = false;
  auto* equiv = app.add_subcommand("check-equiv", "Compare two terms, SQMDDs or vectors");
  equiv->add_option("a", in_a)->required();
  equiv->add_option("b", in_b)->required();
  equiv->add_flag("--up-to-scalar", up_to_scalar, "Accept a nonzero global factor");

  std::string filter;
  bool as_json = false;
  std::size_t samples = 20;
  std::size_t max_arity = 3;
  auto* verify = app.add_subcommand("verify", "Check the built-in equational claims");
  verify->add_option("--filter", filter, "Only claims whose name contains this");
  verify->add_flag("--json", as_json, "Print the report as JSON");
  verify->add_option("--samples", samples)->capture_default_str();
  verify->add_option("--max-arity", max_arity)->capture_default_str();

  auto* dot = app.add_subcommand("export-dot", "Graphviz rendering of a term or SQMDD");
  dot->add_option("file", in_a)->required();
  dot->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kMalformed;
  }

  try {
    if (*interpret) {
      const Json j = read_json_file(in_a);
      switch (detect_document(j)) {
        case DocumentKind::Term: {
          const DenseMatrix m = interpret_zh(term_from_json(j), g.interp());
          emit(dump(m.cols() == 1 ? vector_to_json(as_vector(m)) : matrix_to_json(m)), out_path);
          break;
        }
        case DocumentKind::Sqmdd:
          emit(dump(vector_to_json(interpret_sqmdd(sqmdd_from_json(j), g.interp()))), out_path);
          break;
        default:
          throw ParseError(in_a + ": expected a ZH term or SQMDD document");
      }
    } else if (*reduce_cmd) {
      const ReductionResult r = reduce(read_sqmdd(in_a), g.tol());
      emit(dump(sqmdd_to_json(r.diagram)), out_path);
      if (trace_path == "-") {
        std::cerr << dump(trace_to_json(r.trace));
      } else if (!trace_path.empty()) {
        emit(dump(trace_to_json(r.trace)), trace_path);
      } else {
        std::cerr << r.trace.size() << " rewrite steps\n";
      }
    } else if (*to_zh) {
      emit(dump(term_to_json(sqmdd_to_zh(read_sqmdd(in_a)))), out_path);
    } else if (*to_sq) {
      emit(dump(sqmdd_to_json(zh_to_sqmdd(read_term(in_a), g.translate()))), out_path);
    } else if (*canonical) {
      const Json j = read_json_file(in_a);
      if (detect_document(j) != DocumentKind::Vector) throw ParseError(in_a + ": expected a vector document");
      emit(dump(sqmdd_to_json(canonical_from_vector(vector_from_json(j), g.tol()))), out_path);
    } else if (*equiv) {
      Sqmdd a = canonical_of(in_a, g);
      Sqmdd b = canonical_of(in_b, g);
      if (up_to_scalar) {
        a = without_scalar(a);
        b = without_scalar(b);
      }
      if (iso_equal(a, b, g.tol())) {
        std::cout << "equivalent\n";
        return kOk;
      }
      std::cout << "not equivalent\n";
      return kInequivalent;
    } else if (*verify) {
      VerifyOptions opts;
      opts.tol = g.tol();
      opts.max_arity = max_arity;
      opts.interp = g.interp();
      std::vector<ClaimReport> reports;
      for (const Claim& c : builtin_suite()) {
        if (!filter.empty() && c.name.find(filter) == std::string::npos) continue;
        reports.push_back(verify_claim(c, samples, opts));
      }
      bool ok = true;
      for (const auto& r : reports) {
        ok = ok && (r.status == ClaimStatus::Pass || r.status == ClaimStatus::Skipped);
      }
      if (as_json) {
        Json out = Json::array();
        for (const auto& r : reports) {
          out.push_back({{"name", r.name},
                         {"anchor", r.anchor},
                         {"status", to_string(r.status)},
                         {"samples", r.samples},
                         {"max_deviation", r.max_deviation},
                         {"detail", r.detail}});
        }
        std::cout << dump(out);
      } else {
        std::cout << format_reports(reports);
      }
      return ok ? kOk : kInequivalent;
    } else if (*dot) {
      const Json j = read_json_file(in_a);
      switch (detect_document(j)) {
        case DocumentKind::Term:
          emit(term_to_dot(term_from_json(j)), out_path);
          break;
        case DocumentKind::Sqmdd:
          emit(sqmdd_to_dot(sqmdd_from_json(j)), out_path);
          break;
        default:
          throw ParseError(in_a + ": expected a ZH term or SQMDD document");
      }
    }
  } catch (const ResourceError& e) {
    std::cerr << "zhdd: " << e.what() << "\n";
    return kResource;
  } catch (const StageCheckError& e) {
    std::cerr << "zhdd: stage check failed: " << e.what() << "\n";
    return kInequivalent;
  } catch (const Error& e) {
    std::cerr << "zhdd: " << e.what() << "\n";
    return kMalformed;
  }
  return kOk;
}
