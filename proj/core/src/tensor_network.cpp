#include "zhdd/tensor_network.hpp"

#include <map>
#include <set>

#include "zhdd/port_graph.hpp"

namespace zhdd {

void TensorNetwork::check() const {
  std::set<LegRef> seen;
  auto see = [&](const LegRef& r) {
    if (r.inst >= instances.size() || r.leg >= instances[r.inst].legs) {
      throw ShapeError("network references a missing leg");
    }
    if (!seen.insert(r).second) throw ShapeError("network leg used twice");
  };
  for (const auto& [a, b] : internal_edges) {
    see(a);
    see(b);
  }
  for (const auto& r : outputs) see(r);
  std::size_t total = 0;
  for (const auto& inst : instances) total += inst.legs;
  if (seen.size() != total) throw ShapeError("network has a dangling leg");
  if (bent.size() != outputs.size()) throw ShapeError("network bent flags mismatch");
}

TensorNetwork flatten_to_network(const ZhTerm& t) {
  if (!t.is_sugar_free()) throw ShapeError("flatten_to_network expects a sugar-free term");
  const PortGraph g = to_port_graph(t);
  TensorNetwork net;
  net.scalar = g.scalar;

  // Instance legs are the generator's inputs followed by its outputs.
  std::vector<std::size_t> index(g.instances.size(), 0);
  for (std::size_t i = 0; i < g.instances.size(); ++i) {
    const Generator& gen = g.instances[i];
    const std::size_t legs = gen.inputs + gen.outputs;
    if (legs == 0) {
      net.scalar *= gen.kind == GeneratorKind::ZSpider ? Amplitude{2.0, 0.0} : gen.label;
      continue;
    }
    index[i] = net.instances.size();
    net.instances.push_back({gen.kind, legs, gen.label});
  }
  auto leg_of = [&](const Port& p) {
    const Generator& gen = g.instances[p.inst];
    return LegRef{index[p.inst], p.kind == Port::Kind::In ? p.index : gen.inputs + p.index};
  };

  // Boundary slot j in duality order.
  const auto order = state_leg_order(g.inputs, g.outputs);
  std::map<Port, std::size_t> slot;
  for (std::size_t j = 0; j < order.size(); ++j) {
    slot[{order[j].is_input ? Port::Kind::BoundaryIn : Port::Kind::BoundaryOut, 0,
          order[j].index}] = j;
  }
  net.outputs.resize(order.size());
  net.bent.resize(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) net.bent[j] = order[j].is_input;

  for (const auto& [p, q] : g.partner) {
    if (q < p) continue;
    if (!p.is_boundary() && !q.is_boundary()) {
      net.internal_edges.emplace_back(leg_of(p), leg_of(q));
    } else if (p.is_boundary() && q.is_boundary()) {
      const std::size_t inst = net.instances.size();
      net.instances.push_back({GeneratorKind::ZSpider, 2, {-1.0, 0.0}});
      net.outputs[slot.at(p)] = {inst, 0};
      net.outputs[slot.at(q)] = {inst, 1};
    } else {
      const Port& b = p.is_boundary() ? p : q;
      const Port& inner = p.is_boundary() ? q : p;
      net.outputs[slot.at(b)] = leg_of(inner);
    }
  }
  return net;
}

}  // namespace zhdd
