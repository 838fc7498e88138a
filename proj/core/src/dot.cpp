#include "zhdd/dot.hpp"

#include <sstream>

#include "zhdd/port_graph.hpp"

namespace zhdd {

namespace {

std::string format_amplitude(Amplitude a) {
  std::ostringstream s;
  s.precision(6);
  if (a.imag() == 0.0) {
    s << a.real();
  } else if (a.real() == 0.0) {
    s << a.imag() << "i";
  } else {
    s << a.real() << (a.imag() < 0 ? "-" : "+") << std::abs(a.imag()) << "i";
  }
  return s.str();
}

std::string vertex_name(NodeId id) { return id == kTerminal ? "t" : "n" + std::to_string(id); }

}  // namespace

std::string sqmdd_to_dot(const Sqmdd& d) {
  require_valid(d);
  std::ostringstream out;
  out << "digraph sqmdd {\n";
  out << "  start [shape=point, style=invis];\n";
  out << "  t [shape=box, label=\"1\"];\n";
  for (const auto& [id, n] : d.nodes) {
    out << "  " << vertex_name(id) << " [shape=circle, label=\"" << n.height << "\"];\n";
  }
  out << "  start -> " << vertex_name(d.root) << " [label=\"" << format_amplitude(d.scalar) << "\"];\n";
  for (const auto& [id, n] : d.nodes) {
    auto edge = [&](NodeId child, Amplitude w, bool zero_edge) {
      out << "  " << vertex_name(id) << " -> " << vertex_name(child) << " [";
      if (zero_edge) out << "style=dashed";
      if (w != Amplitude{1.0, 0.0}) out << (zero_edge ? ", " : "") << "label=\"" << format_amplitude(w) << "\"";
      out << "];\n";
    };
    edge(n.child0, n.w0, true);
    edge(n.child1, n.w1, false);
  }
  if (d.node_height(d.root) < d.height) {
    out << "  label=\"H = " << d.height << "\";\n";
  }
  out << "}\n";
  return out.str();
}

std::string term_to_dot(const ZhTerm& t) {
  const PortGraph g = to_port_graph(t);
  std::ostringstream out;
  out << "graph zh {\n";
  for (std::size_t j = 0; j < g.inputs; ++j) out << "  in" << j << " [shape=none, label=\"in " << j << "\"];\n";
  for (std::size_t j = 0; j < g.outputs; ++j) out << "  out" << j << " [shape=none, label=\"out " << j << "\"];\n";
  for (std::size_t i = 0; i < g.instances.size(); ++i) {
    const Generator& gen = g.instances[i];
    std::string shape = "ellipse";
    std::string label = to_string(gen.kind);
    if (gen.kind == GeneratorKind::ZSpider) {
      shape = "circle";
      label = "Z";
    } else if (gen.kind == GeneratorKind::HBox) {
      shape = "box";
      label = gen.label == Amplitude{-1.0, 0.0} ? "" : format_amplitude(gen.label);
    } else if (gen.kind == GeneratorKind::WeightBox) {
      label = "w=" + format_amplitude(gen.label);
    }
    out << "  g" << i << " [shape=" << shape << ", label=\"" << label << "\"];\n";
  }
  auto name = [](const Port& p) {
    switch (p.kind) {
      case Port::Kind::BoundaryIn: return "in" + std::to_string(p.index);
      case Port::Kind::BoundaryOut: return "out" + std::to_string(p.index);
      default: return "g" + std::to_string(p.inst);
    }
  };
  for (const auto& [p, q] : g.partner) {
    if (q < p) continue;
    out << "  " << name(p) << " -- " << name(q) << ";\n";
  }
  if (g.scalar != Amplitude{1.0, 0.0}) out << "  label=\"x " << format_amplitude(g.scalar) << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace zhdd
