#include "zhdd/zh_term.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

namespace zhdd {

namespace {

struct KindName {
  GeneratorKind kind;
  const char* name;
};

constexpr std::array<KindName, 15> kKindNames{{
    {GeneratorKind::ZSpider, "z_spider"},
    {GeneratorKind::HBox, "h_box"},
    {GeneratorKind::Identity, "identity"},
    {GeneratorKind::Swap, "swap"},
    {GeneratorKind::Cap, "cap"},
    {GeneratorKind::Cup, "cup"},
    {GeneratorKind::XSpider, "x_spider"},
    {GeneratorKind::NotXSpider, "not_x_spider"},
    {GeneratorKind::Monoid, "monoid"},
    {GeneratorKind::Gadget, "gadget"},
    {GeneratorKind::WeightBox, "weight"},
    {GeneratorKind::KetZero, "ket_zero"},
    {GeneratorKind::KetOne, "ket_one"},
    {GeneratorKind::KetPlus, "ket_plus"},
    {GeneratorKind::BraPlus, "bra_plus"},
}};

}  // namespace

std::string to_string(GeneratorKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

std::optional<GeneratorKind> generator_kind_from_string(const std::string& name) {
  for (const auto& entry : kKindNames) {
    if (name == entry.name) return entry.kind;
  }
  return std::nullopt;
}

bool is_core(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::ZSpider:
    case GeneratorKind::HBox:
    case GeneratorKind::Identity:
    case GeneratorKind::Swap:
    case GeneratorKind::Cap:
    case GeneratorKind::Cup:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Generator

namespace {
Generator make_gen(GeneratorKind kind, std::size_t n, std::size_t m,
                   Amplitude label = {-1.0, 0.0}) {
  Generator g;
  g.kind = kind;
  g.inputs = n;
  g.outputs = m;
  g.label = label;
  g.validate();
  return g;
}
}  // namespace

Generator Generator::z_spider(std::size_t n, std::size_t m) {
  return make_gen(GeneratorKind::ZSpider, n, m);
}
Generator Generator::h_box(std::size_t n, std::size_t m, Amplitude r) {
  return make_gen(GeneratorKind::HBox, n, m, r);
}
Generator Generator::identity() { return make_gen(GeneratorKind::Identity, 1, 1); }
Generator Generator::swap() { return make_gen(GeneratorKind::Swap, 2, 2); }
Generator Generator::cap() { return make_gen(GeneratorKind::Cap, 0, 2); }
Generator Generator::cup() { return make_gen(GeneratorKind::Cup, 2, 0); }
Generator Generator::x_spider(std::size_t n, std::size_t m) {
  return make_gen(GeneratorKind::XSpider, n, m);
}
Generator Generator::not_x_spider(std::size_t n, std::size_t m) {
  return make_gen(GeneratorKind::NotXSpider, n, m);
}
Generator Generator::monoid(std::size_t k) { return make_gen(GeneratorKind::Monoid, k, 1); }
Generator Generator::gadget() { return make_gen(GeneratorKind::Gadget, 2, 2); }
Generator Generator::weight(Amplitude w) { return make_gen(GeneratorKind::WeightBox, 1, 1, w); }
Generator Generator::ket_zero() { return make_gen(GeneratorKind::KetZero, 0, 1); }
Generator Generator::ket_one() { return make_gen(GeneratorKind::KetOne, 0, 1); }
Generator Generator::ket_plus() { return make_gen(GeneratorKind::KetPlus, 0, 1); }
Generator Generator::bra_plus() { return make_gen(GeneratorKind::BraPlus, 1, 0); }
Generator Generator::scalar(Amplitude r) { return h_box(0, 0, r); }

void Generator::validate() const {
  auto expect = [&](std::size_t n, std::size_t m) {
    if (inputs != n || outputs != m) {
      throw ConstructionError(to_string(kind) + " must have arity " + std::to_string(n) +
                              "->" + std::to_string(m) + ", got " + std::to_string(inputs) +
                              "->" + std::to_string(outputs));
    }
  };
  switch (kind) {
    case GeneratorKind::ZSpider:
    case GeneratorKind::XSpider:
    case GeneratorKind::NotXSpider:
      break;
    case GeneratorKind::HBox:
    case GeneratorKind::WeightBox:
      if (!is_finite(label)) throw ConstructionError(to_string(kind) + " label must be finite");
      if (kind == GeneratorKind::WeightBox) expect(1, 1);
      break;
    case GeneratorKind::Identity:
      expect(1, 1);
      break;
    case GeneratorKind::Swap:
    case GeneratorKind::Gadget:
      expect(2, 2);
      break;
    case GeneratorKind::Cap:
      expect(0, 2);
      break;
    case GeneratorKind::Cup:
      expect(2, 0);
      break;
    case GeneratorKind::Monoid:
      if (inputs < 1) throw ConstructionError("monoid needs at least one input");
      if (outputs != 1) throw ConstructionError("monoid has exactly one output");
      break;
    case GeneratorKind::KetZero:
    case GeneratorKind::KetOne:
    case GeneratorKind::KetPlus:
      expect(0, 1);
      break;
    case GeneratorKind::BraPlus:
      expect(1, 0);
      break;
  }
}

// ---------------------------------------------------------------------------
// ZhTerm

struct ZhTerm::Node {
  Op op = Op::Gen;
  Generator gen;
  ZhTerm a;
  ZhTerm b;
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  bool wiring = false;
  std::vector<std::size_t> perm;
  std::size_t gen_count = 0;
  bool sugar_free = true;
};

ZhTerm ZhTerm::generator(const Generator& g) {
  g.validate();
  auto node = std::make_shared<Node>();
  node->op = Op::Gen;
  node->gen = g;
  node->inputs = g.inputs;
  node->outputs = g.outputs;
  node->gen_count = 1;
  node->sugar_free = is_core(g.kind);
  if (g.kind == GeneratorKind::Identity) {
    node->wiring = true;
    node->perm = {0};
  } else if (g.kind == GeneratorKind::Swap) {
    node->wiring = true;
    node->perm = {1, 0};
  }
  ZhTerm t;
  t.node_ = std::move(node);
  return t;
}

ZhTerm ZhTerm::seq(const ZhTerm& top, const ZhTerm& bottom) {
  if (!top.valid() || !bottom.valid()) throw ConstructionError("seq of an empty term");
  if (top.outputs() != bottom.inputs()) {
    throw ConstructionError("seq arity mismatch: top has " + std::to_string(top.outputs()) +
                            " outputs, bottom has " + std::to_string(bottom.inputs()) +
                            " inputs");
  }
  auto node = std::make_shared<Node>();
  node->op = Op::Seq;
  node->a = top;
  node->b = bottom;
  node->inputs = top.inputs();
  node->outputs = bottom.outputs();
  node->gen_count = top.generator_count() + bottom.generator_count();
  node->sugar_free = top.is_sugar_free() && bottom.is_sugar_free();
  if (top.is_wiring() && bottom.is_wiring()) {
    node->wiring = true;
    const auto& pa = top.permutation();
    const auto& pb = bottom.permutation();
    node->perm.resize(pb.size());
    for (std::size_t i = 0; i < pb.size(); ++i) node->perm[i] = pa[pb[i]];
  }
  ZhTerm t;
  t.node_ = std::move(node);
  return t;
}

ZhTerm ZhTerm::par(const ZhTerm& left, const ZhTerm& right) {
  if (!left.valid() || !right.valid()) throw ConstructionError("par of an empty term");
  auto node = std::make_shared<Node>();
  node->op = Op::Par;
  node->a = left;
  node->b = right;
  node->inputs = left.inputs() + right.inputs();
  node->outputs = left.outputs() + right.outputs();
  node->gen_count = left.generator_count() + right.generator_count();
  node->sugar_free = left.is_sugar_free() && right.is_sugar_free();
  if (left.is_wiring() && right.is_wiring()) {
    node->wiring = true;
    node->perm = left.permutation();
    for (std::size_t p : right.permutation()) node->perm.push_back(p + left.inputs());
  }
  ZhTerm t;
  t.node_ = std::move(node);
  return t;
}

ZhTerm::Op ZhTerm::op() const { return node_->op; }
std::size_t ZhTerm::inputs() const { return node_->inputs; }
std::size_t ZhTerm::outputs() const { return node_->outputs; }
const Generator& ZhTerm::gen() const { return node_->gen; }
const ZhTerm& ZhTerm::first() const { return node_->a; }
const ZhTerm& ZhTerm::second() const { return node_->b; }
bool ZhTerm::is_wiring() const { return node_->wiring; }
const std::vector<std::size_t>& ZhTerm::permutation() const { return node_->perm; }
std::size_t ZhTerm::generator_count() const { return node_->gen_count; }
bool ZhTerm::is_sugar_free() const { return node_->sugar_free; }

ZhTerm ZhTerm::identity(std::size_t k) {
  if (k == 0) throw ConstructionError("identity on zero wires");
  ZhTerm id = generator(Generator::identity());
  ZhTerm acc = id;
  for (std::size_t i = 1; i < k; ++i) acc = par(acc, id);
  return acc;
}

ZhTerm ZhTerm::permutation_term(std::span<const std::size_t> src) {
  const std::size_t n = src.size();
  if (n == 0) throw ConstructionError("permutation on zero wires");
  std::vector<std::size_t> check(src.begin(), src.end());
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (check[i] != i) throw ConstructionError("not a permutation");
  }
  // Bubble the required input into each position with adjacent swaps.
  std::vector<std::size_t> arrangement(n);
  std::iota(arrangement.begin(), arrangement.end(), 0);
  std::vector<ZhTerm> layers;
  const ZhTerm swap_gen = generator(Generator::swap());
  for (std::size_t i = 0; i < n; ++i) {
    auto j = static_cast<std::size_t>(
        std::find(arrangement.begin() + static_cast<std::ptrdiff_t>(i), arrangement.end(),
                  src[i]) -
        arrangement.begin());
    while (j > i) {
      std::swap(arrangement[j - 1], arrangement[j]);
      ZhTerm layer = swap_gen;
      if (j - 1 > 0) layer = par(identity(j - 1), layer);
      if (j + 1 < n) layer = par(layer, identity(n - j - 1));
      layers.push_back(layer);
      --j;
    }
  }
  if (layers.empty()) return identity(n);
  return seq_all(layers);
}

ZhTerm make_term(const Generator& g) { return ZhTerm::generator(g); }
ZhTerm seq(const ZhTerm& top, const ZhTerm& bottom) { return ZhTerm::seq(top, bottom); }
ZhTerm par(const ZhTerm& left, const ZhTerm& right) { return ZhTerm::par(left, right); }

ZhTerm par_all(std::span<const ZhTerm> terms) {
  if (terms.empty()) throw ConstructionError("par_all of an empty list");
  ZhTerm acc = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) acc = par(acc, terms[i]);
  return acc;
}

ZhTerm seq_all(std::span<const ZhTerm> terms) {
  if (terms.empty()) throw ConstructionError("seq_all of an empty list");
  ZhTerm acc = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) acc = seq(acc, terms[i]);
  return acc;
}

// ---------------------------------------------------------------------------
// DiagramBuilder

DiagramBuilder::DiagramBuilder(std::size_t inputs) {
  for (std::size_t i = 0; i < inputs; ++i) {
    inputs_.push_back(next_);
    open_.push_back(next_);
    ++next_;
  }
  if (inputs > 0) current_ = ZhTerm::identity(inputs);
}

void DiagramBuilder::apply(const ZhTerm& t, std::span<const Wire> on) {
  if (on.size() != t.inputs()) {
    throw ConstructionError("builder: term expects " + std::to_string(t.inputs()) +
                            " wires, got " + std::to_string(on.size()));
  }
  std::vector<std::size_t> positions;
  for (Wire w : on) {
    auto it = std::find(open_.begin(), open_.end(), w);
    if (it == open_.end()) throw ConstructionError("builder: wire is not open");
    auto pos = static_cast<std::size_t>(it - open_.begin());
    if (std::find(positions.begin(), positions.end(), pos) != positions.end()) {
      throw ConstructionError("builder: wire used twice");
    }
    positions.push_back(pos);
  }

  if (!current_) {
    current_ = t;
    return;
  }
  if (on.empty()) {
    current_ = par(*current_, t);
    return;
  }
  // Route the consumed wires to the end, keeping the others in order.
  std::vector<std::size_t> src;
  std::vector<Wire> rest;
  for (std::size_t p = 0; p < open_.size(); ++p) {
    if (std::find(positions.begin(), positions.end(), p) == positions.end()) {
      src.push_back(p);
      rest.push_back(open_[p]);
    }
  }
  for (std::size_t p : positions) src.push_back(p);
  bool trivial = true;
  for (std::size_t i = 0; i < src.size(); ++i) trivial = trivial && src[i] == i;
  ZhTerm next = *current_;
  if (!trivial) next = seq(next, ZhTerm::permutation_term(src));
  ZhTerm layer = rest.empty() ? t : par(ZhTerm::identity(rest.size()), t);
  current_ = seq(next, layer);
}

std::vector<DiagramBuilder::Wire> DiagramBuilder::add(const ZhTerm& t,
                                                      std::span<const Wire> on) {
  apply(t, on);
  std::vector<Wire> kept;
  for (Wire w : open_) {
    if (std::find(on.begin(), on.end(), w) == on.end()) kept.push_back(w);
  }
  std::vector<Wire> fresh;
  for (std::size_t i = 0; i < t.outputs(); ++i) fresh.push_back(next_++);
  kept.insert(kept.end(), fresh.begin(), fresh.end());
  open_ = std::move(kept);
  return fresh;
}

std::vector<DiagramBuilder::Wire> DiagramBuilder::add(const Generator& g,
                                                      std::span<const Wire> on) {
  return add(make_term(g), on);
}

std::vector<DiagramBuilder::Wire> DiagramBuilder::add(const Generator& g,
                                                      std::initializer_list<Wire> on) {
  return add(make_term(g), std::span<const Wire>(on.begin(), on.size()));
}

std::vector<DiagramBuilder::Wire> DiagramBuilder::add(const ZhTerm& t,
                                                      std::initializer_list<Wire> on) {
  return add(t, std::span<const Wire>(on.begin(), on.size()));
}

DiagramBuilder::Wire DiagramBuilder::add1(const Generator& g, std::initializer_list<Wire> on) {
  auto out = add(g, on);
  if (out.size() != 1) throw ConstructionError("add1 needs a single-output generator");
  return out.front();
}

ZhTerm DiagramBuilder::finish(std::span<const Wire> outputs) const {
  if (outputs.size() != open_.size()) {
    throw ConstructionError("builder: finish must list every open wire");
  }
  if (!current_) return make_term(Generator::scalar({1.0, 0.0}));
  std::vector<std::size_t> src;
  for (Wire w : outputs) {
    auto it = std::find(open_.begin(), open_.end(), w);
    if (it == open_.end()) throw ConstructionError("builder: unknown output wire");
    src.push_back(static_cast<std::size_t>(it - open_.begin()));
  }
  bool trivial = true;
  for (std::size_t i = 0; i < src.size(); ++i) trivial = trivial && src[i] == i;
  if (trivial) return *current_;
  return seq(*current_, ZhTerm::permutation_term(src));
}

ZhTerm DiagramBuilder::finish(std::initializer_list<Wire> outputs) const {
  return finish(std::span<const Wire>(outputs.begin(), outputs.size()));
}

// ---------------------------------------------------------------------------
// Sugar

namespace {

using Wire = DiagramBuilder::Wire;

ZhTerm hadamard() { return make_term(Generator::h_box(1, 1)); }

// 1/2 * H * Z(0,1) = |0>.
ZhTerm ket_zero_core() {
  return par(make_term(Generator::scalar({0.5, 0.0})),
             seq(make_term(Generator::z_spider(0, 1)), hadamard()));
}

// 1/2 * H * (1, -1)^T = |1>.
ZhTerm ket_one_core() {
  return par(make_term(Generator::scalar({0.5, 0.0})),
             seq(make_term(Generator::h_box(0, 1)), hadamard()));
}

// Parity tensor: 1/2 * Z-spider with a Hadamard box on every leg.
ZhTerm x_spider_core(std::size_t n, std::size_t m) {
  DiagramBuilder b(n);
  std::vector<Wire> legs;
  for (Wire w : b.inputs()) legs.push_back(b.add1(Generator::h_box(1, 1), {w}));
  b.add(Generator::scalar({0.5, 0.0}));
  auto outs = b.add(Generator::z_spider(n, m), legs);
  std::vector<Wire> finals;
  for (Wire w : outs) finals.push_back(b.add1(Generator::h_box(1, 1), {w}));
  return b.finish(finals);
}

// Odd parity: an extra input fixed to |1>.
ZhTerm not_x_spider_core(std::size_t n, std::size_t m) {
  DiagramBuilder b(n);
  std::vector<Wire> legs;
  legs.push_back(b.add(ket_one_core()).front());
  for (Wire w : b.inputs()) legs.push_back(w);
  auto outs = b.add(x_spider_core(n + 1, m), legs);
  return b.finish(outs);
}

// Classical AND k -> 1: 1/2 * H * H-box(k, 1).
ZhTerm and_core(std::size_t k) {
  return par(make_term(Generator::scalar({0.5, 0.0})),
             seq(make_term(Generator::h_box(k, 1)), hadamard()));
}

// W fan-in 2 -> 1: output is the XOR of the inputs, restricted to not both 1.
ZhTerm monoid2_core() {
  DiagramBuilder b(2);
  const Wire a = b.inputs()[0];
  const Wire c = b.inputs()[1];
  auto ac = b.add(Generator::z_spider(1, 2), {a});
  auto cc = b.add(Generator::z_spider(1, 2), {c});
  const Wire out = b.add(x_spider_core(2, 1), {ac[0], cc[0]}).front();
  b.add(Generator::h_box(2, 0, {0.0, 0.0}), {ac[1], cc[1]});
  return b.finish({out});
}

ZhTerm monoid_core(std::size_t k) {
  if (k == 1) return ZhTerm::identity(1);
  ZhTerm m2 = monoid2_core();
  ZhTerm acc = m2;
  for (std::size_t i = 3; i <= k; ++i) acc = seq(par(acc, ZhTerm::identity(1)), m2);
  return acc;
}

// Inputs (control, x); x is routed to output 0 when the control is 0 and to
// output 1 when it is 1, the other output carrying 0.
ZhTerm gadget_core() {
  DiagramBuilder b(2);
  const Wire c = b.inputs()[0];
  const Wire x = b.inputs()[1];
  auto cc = b.add(Generator::z_spider(1, 2), {c});
  auto xc = b.add(Generator::z_spider(1, 2), {x});
  const Wire not_c = b.add(not_x_spider_core(1, 1), {cc[0]}).front();
  const Wire o0 = b.add(and_core(2), {xc[0], not_c}).front();
  const Wire o1 = b.add(and_core(2), {xc[1], cc[1]}).front();
  return b.finish({o0, o1});
}

// diag(1, w): copy, one branch absorbed by a 1 -> 0 H-box labelled w.
ZhTerm weight_core(Amplitude w) {
  DiagramBuilder b(1);
  auto copies = b.add(Generator::z_spider(1, 2), {b.inputs()[0]});
  b.add(Generator::h_box(1, 0, w), {copies[1]});
  return b.finish({copies[0]});
}

ZhTerm expand_generator(const Generator& g) {
  switch (g.kind) {
    case GeneratorKind::ZSpider:
    case GeneratorKind::HBox:
    case GeneratorKind::Identity:
    case GeneratorKind::Swap:
    case GeneratorKind::Cap:
    case GeneratorKind::Cup:
      return make_term(g);
    case GeneratorKind::XSpider:
      return x_spider_core(g.inputs, g.outputs);
    case GeneratorKind::NotXSpider:
      return not_x_spider_core(g.inputs, g.outputs);
    case GeneratorKind::Monoid:
      return monoid_core(g.inputs);
    case GeneratorKind::Gadget:
      return gadget_core();
    case GeneratorKind::WeightBox:
      return weight_core(g.label);
    case GeneratorKind::KetZero:
      return ket_zero_core();
    case GeneratorKind::KetOne:
      return ket_one_core();
    case GeneratorKind::KetPlus:
      return make_term(Generator::z_spider(0, 1));
    case GeneratorKind::BraPlus:
      return make_term(Generator::z_spider(1, 0));
  }
  throw ConstructionError("unknown generator kind");
}

}  // namespace

ZhTerm expand_sugar(const ZhTerm& t) {
  if (t.is_sugar_free()) return t;
  switch (t.op()) {
    case ZhTerm::Op::Gen:
      return expand_generator(t.gen());
    case ZhTerm::Op::Seq:
      return seq(expand_sugar(t.first()), expand_sugar(t.second()));
    case ZhTerm::Op::Par:
      return par(expand_sugar(t.first()), expand_sugar(t.second()));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Map/state duality

std::vector<StateLeg> state_leg_order(std::size_t inputs, std::size_t outputs) {
  std::vector<StateLeg> order;
  const std::size_t common = std::min(inputs, outputs);
  for (std::size_t i = 0; i < common; ++i) {
    order.push_back({true, i});
    order.push_back({false, i});
  }
  for (std::size_t i = common; i < inputs; ++i) order.push_back({true, i});
  for (std::size_t i = common; i < outputs; ++i) order.push_back({false, i});
  return order;
}

ZhTerm to_state_form(const ZhTerm& t) {
  if (t.inputs() == 0) return t;
  DiagramBuilder b;
  std::vector<Wire> bent;
  std::vector<Wire> fed;
  for (std::size_t i = 0; i < t.inputs(); ++i) {
    auto legs = b.add(Generator::cap());
    bent.push_back(legs[0]);
    fed.push_back(legs[1]);
  }
  auto outs = b.add(t, fed);
  std::vector<Wire> order;
  for (const StateLeg& leg : state_leg_order(t.inputs(), t.outputs())) {
    order.push_back(leg.is_input ? bent[leg.index] : outs[leg.index]);
  }
  return b.finish(order);
}

ZhTerm from_state_form(const ZhTerm& state, std::size_t inputs) {
  if (state.inputs() != 0) throw ConstructionError("from_state_form expects a state (0 inputs)");
  if (inputs > state.outputs()) {
    throw ConstructionError("from_state_form: " + std::to_string(inputs) +
                            " inputs exceed the state's " + std::to_string(state.outputs()) +
                            " legs");
  }
  const std::size_t outputs = state.outputs() - inputs;
  DiagramBuilder b(inputs);
  const std::vector<Wire> ins = b.inputs();
  auto legs = b.add(state, std::span<const Wire>{});
  const auto order = state_leg_order(inputs, outputs);
  std::vector<Wire> outs(outputs);
  for (std::size_t j = 0; j < order.size(); ++j) {
    if (order[j].is_input) {
      b.add(Generator::cup(), {ins[order[j].index], legs[j]});
    } else {
      outs[order[j].index] = legs[j];
    }
  }
  return b.finish(outs);
}

}  // namespace zhdd
