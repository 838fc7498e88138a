#include "zhdd/translator.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "sqmdd_builder.hpp"
#include "zhdd/port_graph.hpp"
#include "zhdd/tensor_network.hpp"

namespace zhdd {

// ---------------------------------------------------------------------------
// Diagram -> layered ZH state

ZhTerm sqmdd_to_zh(const Sqmdd& d) {
  require_valid(d);
  using Wire = DiagramBuilder::Wire;
  DiagramBuilder b;
  b.add(Generator::scalar(d.scalar));
  std::map<NodeId, std::vector<Wire>> pending;
  pending[d.root].push_back(b.add1(Generator::ket_one()));

  std::map<std::size_t, std::vector<NodeId>> by_height;
  for (const auto& [id, n] : d.nodes) by_height[n.height].push_back(id);

  auto fan_in = [&](NodeId u) {
    const auto& wires = pending.at(u);
    if (wires.size() == 1) return wires.front();
    return b.add(Generator::monoid(wires.size()), wires).front();
  };

  std::vector<Wire> outputs(d.height);
  for (std::size_t h = d.height; h >= 1; --h) {
    const std::size_t pos = d.height - h;
    auto it = by_height.find(h);
    if (it == by_height.end()) {
      outputs[pos] = b.add1(Generator::ket_plus());
      continue;
    }
    Wire eff = b.add1(Generator::z_spider(0, 1));
    for (NodeId u : it->second) {
      const auto copy = b.add(Generator::z_spider(1, 2), {eff});
      eff = copy[0];
      const Wire act = fan_in(u);
      const auto legs = b.add(Generator::gadget(), {copy[1], act});
      const SqmddNode& n = d.nodes.at(u);
      pending[n.child0].push_back(b.add1(Generator::weight(n.w0), {legs[0]}));
      pending[n.child1].push_back(b.add1(Generator::weight(n.w1), {legs[1]}));
    }
    outputs[pos] = eff;
  }
  const Wire last = fan_in(kTerminal);
  b.add(Generator::not_x_spider(1, 0), {last});
  return b.finish(outputs);
}

// ---------------------------------------------------------------------------
// Generators in diagram form

Sqmdd generator_state_sqmdd(GeneratorKind kind, std::size_t legs, Amplitude label) {
  using detail::Edge;
  checked_amplitude(label);
  detail::Builder b;
  const Edge zero{{0.0, 0.0}, kTerminal};
  const Edge one{{1.0, 0.0}, kTerminal};
  switch (kind) {
    case GeneratorKind::ZSpider: {
      if (legs == 0) return Sqmdd::terminal({2.0, 0.0}, 0);
      Edge zeros = one;
      Edge ones = one;
      for (std::size_t h = 1; h < legs; ++h) {
        zeros = b.make(h, zeros, zero);
        ones = b.make(h, zero, ones);
      }
      return b.extract(b.make(legs, zeros, ones), legs);
    }
    case GeneratorKind::HBox: {
      Edge e{label, kTerminal};
      for (std::size_t h = 1; h <= legs; ++h) e = b.make(h, one, e);
      return b.extract(e, legs);
    }
    default:
      throw ConstructionError("generator_state_sqmdd: only Z-spiders and H-boxes have a state form");
  }
}

// ---------------------------------------------------------------------------
// ZH term -> diagram

namespace {

// ψ applied to a dense matrix, using the same leg order as to_state_form.
DenseVector dense_state_form(const DenseMatrix& m, std::size_t n, std::size_t k) {
  const auto order = state_leg_order(n, k);
  const std::size_t legs = order.size();
  DenseVector v(std::size_t{1} << legs);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    std::size_t x = 0;
    std::size_t y = 0;
    for (std::size_t j = 0; j < legs; ++j) {
      const std::size_t bit = (idx >> (legs - 1 - j)) & 1U;
      if (order[j].is_input) {
        x |= bit << (n - 1 - order[j].index);
      } else {
        y |= bit << (k - 1 - order[j].index);
      }
    }
    v[idx] = m(y, x);
  }
  return v;
}

void stage_check(bool ok, const std::string& stage) {
  if (!ok) throw StageCheckError("stage check failed after " + stage);
}

}  // namespace

Sqmdd zh_to_sqmdd(const ZhTerm& t, const TranslateOptions& opts) {
  if (!t.valid()) throw ConstructionError("zh_to_sqmdd on an empty term");
  const Tolerance& tol = opts.tol;
  const ZhTerm core = expand_sugar(t);
  const ZhTerm state = to_state_form(core);
  const TensorNetwork net = flatten_to_network(state);

  std::optional<DenseVector> expected;
  if (opts.assert_stages) {
    const DenseMatrix m = interpret_zh(t, opts.interp);
    stage_check(matrices_equal(interpret_zh(core, opts.interp), m, tol), "expand_sugar");
    expected = dense_state_form(m, t.inputs(), t.outputs());
    stage_check(vectors_equal(as_vector(interpret_zh(state, opts.interp)), *expected, tol),
                "to_state_form");
    stage_check(vectors_equal(contract_network_dense(net, opts.interp), *expected, tol),
                "flatten_to_network");
  }

  // Instances are added one at a time; an edge is contracted as soon as both
  // of its ends are present, which keeps the diagram narrow.
  Sqmdd cur = Sqmdd::terminal(net.scalar, 0);
  std::vector<LegRef> legs;
  std::optional<DenseVector> shadow;
  if (opts.assert_stages) shadow = DenseVector{net.scalar};
  auto position = [&](const LegRef& r) {
    return static_cast<std::size_t>(std::find(legs.begin(), legs.end(), r) - legs.begin());
  };
  auto check_shadow = [&](const std::string& stage) {
    if (shadow) stage_check(vectors_equal(interpret_sqmdd(cur, opts.interp), *shadow, tol), stage);
  };

  std::vector<std::vector<std::size_t>> edges_of(net.instances.size());
  for (std::size_t e = 0; e < net.internal_edges.size(); ++e) {
    const auto& [a, c] = net.internal_edges[e];
    edges_of[std::max(a.inst, c.inst)].push_back(e);
  }

  for (std::size_t inst = 0; inst < net.instances.size(); ++inst) {
    const StateInstance& s = net.instances[inst];
    if (legs.size() + s.legs > opts.max_height) {
      throw ResourceError("contraction needs more than " + std::to_string(opts.max_height) +
                          " open legs");
    }
    const Sqmdd gen = generator_state_sqmdd(s.kind, s.legs, s.label);
    cur = tensor(cur, gen);
    for (std::size_t l = 0; l < s.legs; ++l) legs.push_back({inst, l});
    if (shadow) {
      *shadow = kron(*shadow, interpret_sqmdd(gen, opts.interp));
      check_shadow("tensor of instance " + std::to_string(inst));
    }
    for (std::size_t e : edges_of[inst]) {
      const auto& [a, c] = net.internal_edges[e];
      const std::size_t i = position(a);
      const std::size_t j = position(c);
      const std::size_t lo = std::min(i, j);
      cur = z_merge_outputs(cur, i, j);
      legs.erase(legs.begin() + static_cast<long>(std::max(i, j)));
      cur = plug_bra_plus(cur, lo);
      legs.erase(legs.begin() + static_cast<long>(lo));
      if (shadow) {
        *shadow = dense::sum_out(dense::diagonal_merge(*shadow, i, j), lo);
        check_shadow("contraction of edge " + std::to_string(e));
      }
    }
  }

  std::vector<std::size_t> src;
  for (const LegRef& r : net.outputs) src.push_back(position(r));
  cur = permute_outputs(cur, src);
  Sqmdd result = reduce(cur, tol).diagram;
  if (expected) {
    stage_check(vectors_equal(interpret_sqmdd(result, opts.interp), *expected, tol),
                "final permutation and reduction");
  }
  return result;
}

// ---------------------------------------------------------------------------
// Layered ZH state -> diagram

namespace {

constexpr NodeId kRootSource = static_cast<NodeId>(-1);

struct Source {
  NodeId node = kRootSource;
  int branch = 0;
  Amplitude weight{1.0, 0.0};
};

struct LayeredForm {
  Sqmdd diagram;
  std::optional<int> plug;
};

bool is_basis_state(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::KetZero:
    case GeneratorKind::KetOne:
      return true;
    case GeneratorKind::XSpider:
    case GeneratorKind::NotXSpider:
      return g.inputs == 0 && g.outputs == 1;
    default:
      return false;
  }
}

int basis_bit(const Generator& g) {
  return g.kind == GeneratorKind::KetOne || g.kind == GeneratorKind::NotXSpider ? 1 : 0;
}

class LayerParser {
 public:
  explicit LayerParser(const PortGraph& g) : g_(g), used_(g.instances.size(), false) {}

  LayeredForm parse(bool allow_plug) {
    if (g_.inputs != 0) throw ShapeError("layered form must be a state (no inputs)");
    LayeredForm out;
    // Anchors: the port each layer's wire ends on, top first.
    std::vector<Port> anchors;
    if (allow_plug) {
      for (std::size_t i = 0; i < g_.instances.size(); ++i) {
        if (!is_basis_state(g_.instances[i])) continue;
        const Port p{Port::Kind::Out, i, 0};
        const Port q = g_.other(p);
        if (q.is_boundary() || !lands_on_layer(q)) continue;
        if (out.plug) fail(i, "second basis state plugged on a layer");
        out.plug = basis_bit(g_.instances[i]);
        used_[i] = true;
        anchors.push_back(p);
      }
    }
    for (std::size_t j = 0; j < g_.outputs; ++j) anchors.push_back({Port::Kind::BoundaryOut, 0, j});

    Sqmdd& d = out.diagram;
    d.height = anchors.size();
    d.scalar = g_.scalar;
    for (std::size_t p = 0; p < anchors.size(); ++p) parse_layer(anchors[p], d.height - p);

    for (const auto& [gadget, id] : node_of_) d.nodes[id] = SqmddNode{height_.at(id), kTerminal, {}, kTerminal, {}};

    std::map<std::pair<NodeId, int>, bool> routed;
    std::optional<NodeId> root;
    auto connect = [&](const std::vector<Source>& srcs, NodeId child) {
      for (const Source& s : srcs) {
        if (s.node == kRootSource) {
          if (root) throw ShapeError("root activation reaches two vertices");
          root = child;
          d.scalar *= s.weight;
          continue;
        }
        if (routed[{s.node, s.branch}]) throw ShapeError("gadget leg routed twice");
        routed[{s.node, s.branch}] = true;
        SqmddNode& n = d.nodes.at(s.node);
        (s.branch == 0 ? n.child0 : n.child1) = child;
        (s.branch == 0 ? n.w0 : n.w1) = s.weight;
      }
    };
    for (const auto& [gadget, id] : node_of_) connect(sources({Port::Kind::In, gadget, 1}), id);

    std::optional<std::size_t> terminal;
    for (std::size_t i = 0; i < g_.instances.size(); ++i) {
      const Generator& gen = g_.instances[i];
      if (gen.kind == GeneratorKind::NotXSpider && gen.inputs == 1 && gen.outputs == 0) {
        if (terminal) fail(i, "second terminal effect");
        terminal = i;
        used_[i] = true;
      }
    }
    if (!terminal) throw ShapeError("no terminal effect (not-X spider 1 -> 0) found");
    connect(sources({Port::Kind::In, *terminal, 0}), kTerminal);

    for (const auto& [gadget, id] : node_of_) {
      for (int branch : {0, 1}) {
        if (!routed[{id, branch}]) fail(gadget, "gadget leg " + std::to_string(branch) + " is not routed");
      }
    }
    if (!root) throw ShapeError("no root activation (|1> state) found");
    d.root = *root;

    for (std::size_t i = 0; i < g_.instances.size(); ++i) {
      if (used_[i]) continue;
      const Generator& gen = g_.instances[i];
      if (gen.inputs == 0 && gen.outputs == 0 && gen.kind == GeneratorKind::HBox) {
        d.scalar *= gen.label;
      } else if (gen.inputs == 0 && gen.outputs == 0 && gen.kind == GeneratorKind::ZSpider) {
        d.scalar *= 2.0;
      } else {
        fail(i, "does not belong to the layered form");
      }
      used_[i] = true;
    }
    require_valid(d);
    return out;
  }

 private:
  [[noreturn]] void fail(std::size_t inst, const std::string& why) const {
    const Generator& g = g_.instances.at(inst);
    std::ostringstream msg;
    msg << "instance #" << inst << " (" << to_string(g.kind) << " " << g.inputs << "->"
        << g.outputs << "): " << why;
    throw ShapeError(msg.str());
  }

  bool lands_on_layer(const Port& q) const {
    const GeneratorKind k = g_.instances[q.inst].kind;
    return k == GeneratorKind::ZSpider || k == GeneratorKind::KetPlus;
  }

  void parse_layer(const Port& anchor, std::size_t h) {
    const Port top = g_.other(anchor);
    if (top.is_boundary()) throw ShapeError("output wire is not attached to any layer");
    const Generator& first = g_.instances[top.inst];
    if (first.kind == GeneratorKind::KetPlus) {
      used_[top.inst] = true;
      return;
    }
    if (first.kind != GeneratorKind::ZSpider) fail(top.inst, "output wire must end on a Z-spider or |+>");
    // Fused Z cluster: every port is an inner Z-Z link, this layer's anchor
    // or a gadget control.
    std::vector<std::size_t> stack{top.inst};
    std::set<std::size_t> cluster{top.inst};
    while (!stack.empty()) {
      const std::size_t z = stack.back();
      stack.pop_back();
      if (used_[z]) fail(z, "Z-spider shared by two layers");
      used_[z] = true;
      for (const Port& q : g_.ports_of(z)) {
        const Port r = g_.other(q);
        if (r == anchor) continue;
        if (r.is_boundary()) fail(z, "layer wire reaches a second output");
        const Generator& peer = g_.instances[r.inst];
        if (peer.kind == GeneratorKind::ZSpider) {
          if (cluster.insert(r.inst).second) stack.push_back(r.inst);
        } else if (peer.kind == GeneratorKind::Gadget && r.kind == Port::Kind::In && r.index == 0) {
          if (node_of_.contains(r.inst)) fail(r.inst, "gadget controlled twice");
          const auto id = static_cast<NodeId>(node_of_.size() + 1);
          node_of_[r.inst] = id;
          height_[id] = h;
          used_[r.inst] = true;
        } else {
          fail(r.inst, "attached to a layer wire but is not a gadget control");
        }
      }
    }
  }

  // Activation sources feeding the input port p.
  std::vector<Source> sources(const Port& p) {
    const Port r = g_.other(p);
    if (r.is_boundary() || r.kind != Port::Kind::Out) {
      throw ShapeError("activation wire does not come from an instance output");
    }
    const Generator& gen = g_.instances[r.inst];
    switch (gen.kind) {
      case GeneratorKind::Gadget: {
        auto it = node_of_.find(r.inst);
        if (it == node_of_.end()) fail(r.inst, "gadget without a layer control");
        return {Source{it->second, static_cast<int>(r.index), {1.0, 0.0}}};
      }
      case GeneratorKind::WeightBox: {
        claim(r.inst);
        auto srcs = sources({Port::Kind::In, r.inst, 0});
        for (auto& s : srcs) s.weight *= gen.label;
        return srcs;
      }
      case GeneratorKind::Monoid:
      case GeneratorKind::XSpider: {
        if (gen.outputs != 1 || gen.inputs == 0) fail(r.inst, "fan-in must be k -> 1");
        claim(r.inst);
        std::vector<Source> all;
        for (std::size_t i = 0; i < gen.inputs; ++i) {
          auto srcs = sources({Port::Kind::In, r.inst, i});
          all.insert(all.end(), srcs.begin(), srcs.end());
        }
        return all;
      }
      case GeneratorKind::KetOne:
        claim(r.inst);
        return {Source{}};
      default:
        fail(r.inst, "unexpected on an activation wire");
    }
  }

  void claim(std::size_t inst) {
    if (used_[inst]) fail(inst, "reached twice");
    used_[inst] = true;
  }

  const PortGraph& g_;
  std::vector<bool> used_;
  std::map<std::size_t, NodeId> node_of_;
  std::map<NodeId, std::size_t> height_;
};

}  // namespace

Sqmdd sqmdd_read_back(const ZhTerm& t) {
  const PortGraph g = to_port_graph(t);
  LayeredForm form = LayerParser(g).parse(false);
  return reduce(form.diagram).diagram;
}

ZhTerm plug_top_output(const ZhTerm& state, int bit) {
  if (state.inputs() != 0 || state.outputs() == 0) {
    throw ConstructionError("plug_top_output needs a state with at least one output");
  }
  const ZhTerm ket = make_term(bit == 0 ? Generator::ket_zero() : Generator::ket_one());
  ZhTerm bend = make_term(Generator::cup());
  if (state.outputs() > 1) bend = par(bend, ZhTerm::identity(state.outputs() - 1));
  return seq(par(ket, state), bend);
}

Propagation ket0_propagate(const ZhTerm& plugged) {
  const PortGraph g = to_port_graph(plugged);
  Propagation out;

  // A basis state entering a lone weight box.
  if (g.instances.size() == 2 && g.inputs == 0 && g.outputs == 1) {
    for (std::size_t k = 0; k < 2; ++k) {
      const Generator& ket = g.instances[k];
      const Generator& box = g.instances[1 - k];
      if (!is_basis_state(ket) || box.kind != GeneratorKind::WeightBox) continue;
      const int bit = basis_bit(ket);
      const Amplitude s = g.scalar;
      const ZhTerm basis = make_term(bit == 0 ? Generator::ket_zero() : Generator::ket_one());
      if (bit == 0) {
        out.trace.emplace_back("|0> passes the weight box unchanged");
        out.term = s == Amplitude{1.0, 0.0} ? basis : par(make_term(Generator::scalar(s)), basis);
      } else {
        out.trace.emplace_back("|1> through the weight box: weight moved into the scalar");
        out.term = par(make_term(Generator::scalar(s * box.label)), basis);
      }
      return out;
    }
  }

  LayeredForm form = LayerParser(g).parse(true);
  if (!form.plug) throw ShapeError("no basis state plugged on the top wire");
  const Sqmdd& d = form.diagram;
  const int bit = *form.plug;
  const Sqmdd next = bit == 0 ? left_cofactor(d) : right_cofactor(d);

  if (d.node_height(d.root) < d.height) {
    out.trace.emplace_back("top layer is |+>: <" + std::to_string(bit) + "|+> = 1 removes it");
  } else {
    const SqmddNode& r = d.node(d.root);
    const Amplitude w = bit == 0 ? r.w0 : r.w1;
    std::ostringstream msg;
    msg << "gadget of the root routes the activation to leg " << bit;
    out.trace.push_back(msg.str());
    msg.str("");
    msg << "weight (" << w.real() << "," << w.imag() << ") on leg " << bit
        << " absorbed into the scalar";
    out.trace.push_back(msg.str());
    out.trace.push_back("leg " + std::to_string(1 - bit) + " carries |0> into its child");
    std::map<NodeId, std::size_t> parents_before;
    std::map<NodeId, std::size_t> parents_after;
    for (const auto& [id, n] : d.nodes) {
      ++parents_before[n.child0];
      ++parents_before[n.child1];
    }
    for (const auto& [id, n] : next.nodes) {
      ++parents_after[n.child0];
      ++parents_after[n.child1];
    }
    for (const auto& [id, n] : d.nodes) {
      if (id == d.root) continue;
      if (!next.nodes.contains(id)) {
        out.trace.push_back("vertex " + std::to_string(id) + " destroyed by |0> on all its inputs");
      } else if (parents_after[id] < parents_before[id] && id != next.root) {
        out.trace.push_back("monoid unit drops a |0> input of vertex " + std::to_string(id));
      }
    }
  }
  out.term = sqmdd_to_zh(next);
  return out;
}

}  // namespace zhdd
