#include "zhdd/json_io.hpp"

#include <fstream>

namespace zhdd {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

std::size_t count_field(const Json& params, const char* key, std::size_t fallback) {
  if (!params.contains(key)) return fallback;
  const Json& v = params.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string("param '") + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::size_t required_count(const Json& params, const char* key, const std::string& kind) {
  if (!params.contains(key)) bad(kind + " needs param '" + key + "'");
  return count_field(params, key, 0);
}

Json node_ref(NodeId id) { return id == kTerminal ? Json("t") : Json(id); }

NodeId node_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "t") return kTerminal;
    bad("vertex reference must be an id or \"t\"");
  }
  if (!j.is_number_integer() || j.get<long long>() <= 0) bad("vertex id must be a positive integer");
  return j.get<NodeId>();
}

}  // namespace

Json amplitude_to_json(Amplitude a) { return Json::array({a.real(), a.imag()}); }

Amplitude amplitude_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    bad("amplitude must be [re, im]");
  }
  const Amplitude a{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(a)) bad("amplitude must be finite");
  return a;
}

Json term_to_json(const ZhTerm& t) {
  switch (t.op()) {
    case ZhTerm::Op::Seq:
      return {{"kind", "seq"}, {"children", {term_to_json(t.first()), term_to_json(t.second())}}};
    case ZhTerm::Op::Par:
      return {{"kind", "par"}, {"children", {term_to_json(t.first()), term_to_json(t.second())}}};
    case ZhTerm::Op::Gen:
      break;
  }
  const Generator& g = t.gen();
  Json params = Json::object();
  switch (g.kind) {
    case GeneratorKind::ZSpider:
    case GeneratorKind::XSpider:
    case GeneratorKind::NotXSpider:
      params = {{"inputs", g.inputs}, {"outputs", g.outputs}};
      break;
    case GeneratorKind::HBox:
      params = {{"inputs", g.inputs}, {"outputs", g.outputs}, {"label", amplitude_to_json(g.label)}};
      break;
    case GeneratorKind::Monoid:
      params = {{"inputs", g.inputs}};
      break;
    case GeneratorKind::WeightBox:
      params = {{"weight", amplitude_to_json(g.label)}};
      break;
    default:
      break;
  }
  return {{"kind", to_string(g.kind)}, {"params", params}};
}

ZhTerm term_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    bad("term must be an object with a string 'kind'");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "seq" || kind == "par") {
    if (!j.contains("children") || !j.at("children").is_array() || j.at("children").empty()) {
      bad(kind + " needs a non-empty 'children' array");
    }
    std::vector<ZhTerm> kids;
    for (const Json& c : j.at("children")) kids.push_back(term_from_json(c));
    try {
      return kind == "seq" ? seq_all(kids) : par_all(kids);
    } catch (const ConstructionError& e) {
      bad(std::string("ill-formed composition: ") + e.what());
    }
  }
  const auto gk = generator_kind_from_string(kind);
  if (!gk) bad("unknown term kind '" + kind + "'");
  const Json params = j.contains("params") ? j.at("params") : Json::object();
  if (!params.is_object()) bad("'params' must be an object");
  try {
    switch (*gk) {
      case GeneratorKind::ZSpider:
        return make_term(Generator::z_spider(required_count(params, "inputs", kind),
                                             required_count(params, "outputs", kind)));
      case GeneratorKind::XSpider:
        return make_term(Generator::x_spider(required_count(params, "inputs", kind),
                                             required_count(params, "outputs", kind)));
      case GeneratorKind::NotXSpider:
        return make_term(Generator::not_x_spider(required_count(params, "inputs", kind),
                                                 required_count(params, "outputs", kind)));
      case GeneratorKind::HBox: {
        const Amplitude r =
            params.contains("label") ? amplitude_from_json(params.at("label")) : Amplitude{-1.0, 0.0};
        return make_term(Generator::h_box(required_count(params, "inputs", kind),
                                          required_count(params, "outputs", kind), r));
      }
      case GeneratorKind::Monoid:
        return make_term(Generator::monoid(required_count(params, "inputs", kind)));
      case GeneratorKind::WeightBox:
        if (!params.contains("weight")) bad("weight needs param 'weight'");
        return make_term(Generator::weight(amplitude_from_json(params.at("weight"))));
      case GeneratorKind::Identity: return make_term(Generator::identity());
      case GeneratorKind::Swap: return make_term(Generator::swap());
      case GeneratorKind::Cap: return make_term(Generator::cap());
      case GeneratorKind::Cup: return make_term(Generator::cup());
      case GeneratorKind::Gadget: return make_term(Generator::gadget());
      case GeneratorKind::KetZero: return make_term(Generator::ket_zero());
      case GeneratorKind::KetOne: return make_term(Generator::ket_one());
      case GeneratorKind::KetPlus: return make_term(Generator::ket_plus());
      case GeneratorKind::BraPlus: return make_term(Generator::bra_plus());
    }
  } catch (const ConstructionError& e) {
    bad(kind + ": " + e.what());
  }
  bad("unknown term kind '" + kind + "'");
}

Json sqmdd_to_json(const Sqmdd& d) {
  const Sqmdd r = renumber(d);
  Json nodes = Json::array();
  for (const auto& [id, n] : r.nodes) {
    nodes.push_back({{"id", id},
                     {"h", n.height},
                     {"c0", node_ref(n.child0)},
                     {"w0", amplitude_to_json(n.w0)},
                     {"c1", node_ref(n.child1)},
                     {"w1", amplitude_to_json(n.w1)}});
  }
  Json root = r.root == kTerminal ? Json("t") : Json(r.root);
  return {{"scalar", amplitude_to_json(r.scalar)}, {"height", r.height}, {"root", root}, {"nodes", nodes}};
}

Sqmdd sqmdd_from_json(const Json& j) {
  if (!j.is_object()) bad("diagram must be an object");
  Sqmdd d;
  d.scalar = j.contains("scalar") ? amplitude_from_json(j.at("scalar")) : Amplitude{1.0, 0.0};
  if (!j.contains("height")) bad("diagram needs 'height'");
  d.height = count_field(j, "height", 0);
  d.root = j.contains("root") ? node_from_json(j.at("root")) : kTerminal;
  if (j.contains("nodes")) {
    if (!j.at("nodes").is_array()) bad("'nodes' must be an array");
    for (const Json& n : j.at("nodes")) {
      if (!n.is_object()) bad("vertex entries must be objects");
      for (const char* key : {"id", "h", "c0", "w0", "c1", "w1"}) {
        if (!n.contains(key)) bad(std::string("vertex entry lacks '") + key + "'");
      }
      const NodeId id = node_from_json(n.at("id"));
      if (id == kTerminal) bad("the terminal cannot be listed as a vertex");
      SqmddNode node{count_field(n, "h", 0), node_from_json(n.at("c0")),
                     amplitude_from_json(n.at("w0")), node_from_json(n.at("c1")),
                     amplitude_from_json(n.at("w1"))};
      if (!d.nodes.emplace(id, node).second) bad("duplicate vertex id " + std::to_string(id));
    }
  }
  const auto problems = validate(d);
  if (!problems.empty()) bad("invalid diagram: " + problems.front());
  return d;
}

Json vector_to_json(std::span<const Amplitude> v) {
  Json out = Json::array();
  for (Amplitude a : v) out.push_back(amplitude_to_json(a));
  return out;
}

DenseVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("vector must be an array of [re, im] pairs");
  DenseVector v;
  for (const Json& a : j) v.push_back(amplitude_from_json(a));
  if (!is_power_of_two(v.size())) bad("vector length " + std::to_string(v.size()) + " is not a power of two");
  return v;
}

Json matrix_to_json(const DenseMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(amplitude_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

DenseMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (!is_power_of_two(rows) || !is_power_of_two(cols)) bad("matrix dimensions must be powers of two");
  std::vector<Amplitude> entries;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != cols) bad("matrix rows must have equal length");
    for (const Json& a : row) entries.push_back(amplitude_from_json(a));
  }
  return DenseMatrix(rows, cols, std::move(entries));
}

DocumentKind detect_document(const Json& j) {
  if (j.is_object()) {
    if (j.contains("kind")) return DocumentKind::Term;
    if (j.contains("nodes") || j.contains("scalar")) return DocumentKind::Sqmdd;
    bad("object is neither a term nor a diagram");
  }
  if (j.is_array() && !j.empty()) {
    // A matrix row is an array of pairs; a vector entry is a pair of numbers.
    const Json& first = j[0];
    if (first.is_array() && !first.empty() && first[0].is_array()) return DocumentKind::Matrix;
    return DocumentKind::Vector;
  }
  bad("unrecognised document");
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

}  // namespace zhdd
