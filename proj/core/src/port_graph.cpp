#include "zhdd/port_graph.hpp"

#include <algorithm>

namespace zhdd {

std::vector<Port> PortGraph::ports_of(std::size_t inst) const {
  std::vector<Port> out;
  const Generator& g = instances.at(inst);
  for (std::size_t i = 0; i < g.inputs; ++i) out.push_back({Port::Kind::In, inst, i});
  for (std::size_t j = 0; j < g.outputs; ++j) out.push_back({Port::Kind::Out, inst, j});
  return out;
}

namespace {

class GraphBuilder {
 public:
  std::vector<Generator> instances;
  std::map<Port, Port> partner;

  void link(const Port& a, const Port& b) {
    partner[a] = b;
    partner[b] = a;
  }

  // `sources` are the ports feeding the term's inputs; returns the ports that
  // carry its outputs.
  std::vector<Port> walk(const ZhTerm& t, std::vector<Port> sources) {
    if (t.is_wiring()) {
      const auto& perm = t.permutation();
      std::vector<Port> out(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) out[i] = sources[perm[i]];
      return out;
    }
    switch (t.op()) {
      case ZhTerm::Op::Seq:
        return walk(t.second(), walk(t.first(), std::move(sources)));
      case ZhTerm::Op::Par: {
        const std::size_t na = t.first().inputs();
        std::vector<Port> left(sources.begin(), sources.begin() + static_cast<long>(na));
        std::vector<Port> right(sources.begin() + static_cast<long>(na), sources.end());
        auto out = walk(t.first(), std::move(left));
        auto rest = walk(t.second(), std::move(right));
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
      }
      case ZhTerm::Op::Gen:
        break;
    }
    const Generator& g = t.gen();
    const std::size_t inst = instances.size();
    instances.push_back(g);
    for (std::size_t i = 0; i < g.inputs; ++i) link(sources[i], {Port::Kind::In, inst, i});
    std::vector<Port> out;
    for (std::size_t j = 0; j < g.outputs; ++j) out.push_back({Port::Kind::Out, inst, j});
    return out;
  }
};

bool is_bend(const Generator& g) {
  return g.kind == GeneratorKind::Cap || g.kind == GeneratorKind::Cup;
}

}  // namespace

PortGraph to_port_graph(const ZhTerm& t) {
  GraphBuilder b;
  std::vector<Port> sources;
  for (std::size_t i = 0; i < t.inputs(); ++i) sources.push_back({Port::Kind::BoundaryIn, 0, i});
  const auto outs = b.walk(t, sources);
  for (std::size_t j = 0; j < outs.size(); ++j) b.link(outs[j], {Port::Kind::BoundaryOut, 0, j});

  PortGraph g;
  g.inputs = t.inputs();
  g.outputs = t.outputs();

  // Splice out caps and cups.
  std::size_t loops = 0;
  for (std::size_t inst = 0; inst < b.instances.size(); ++inst) {
    if (!is_bend(b.instances[inst])) continue;
    const auto kind = b.instances[inst].kind == GeneratorKind::Cap ? Port::Kind::Out : Port::Kind::In;
    const Port p0{kind, inst, 0};
    const Port p1{kind, inst, 1};
    const Port a = b.partner.at(p0);
    const Port c = b.partner.at(p1);
    b.partner.erase(p0);
    b.partner.erase(p1);
    if (a == p1) {
      ++loops;
      continue;
    }
    b.link(a, c);
  }
  for (std::size_t i = 0; i < loops; ++i) g.scalar *= 2.0;

  // Renumber the remaining instances densely.
  std::vector<std::size_t> new_id(b.instances.size(), 0);
  for (std::size_t inst = 0; inst < b.instances.size(); ++inst) {
    if (is_bend(b.instances[inst])) continue;
    new_id[inst] = g.instances.size();
    g.instances.push_back(b.instances[inst]);
  }
  auto remap = [&](Port p) {
    if (!p.is_boundary()) p.inst = new_id[p.inst];
    return p;
  };
  for (const auto& [p, q] : b.partner) g.partner[remap(p)] = remap(q);
  return g;
}

}  // namespace zhdd
