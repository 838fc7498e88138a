#include "zhdd/random_sqmdd.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <vector>

namespace zhdd {

namespace {

constexpr std::array<Amplitude, 8> kSpecialWeights = {
    Amplitude{0.0, 0.0}, Amplitude{1.0, 0.0},  Amplitude{-1.0, 0.0}, Amplitude{0.0, 1.0},
    Amplitude{0.0, -1.0}, Amplitude{0.5, 0.0}, Amplitude{-0.5, 0.0}, Amplitude{1.0, 1.0}};

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <typename T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

NodeId next_id(const Sqmdd& d) { return d.nodes.empty() ? 1 : d.nodes.rbegin()->first + 1; }

// Every edge of the diagram, the root edge included (parent kTerminal).
struct EdgeRef {
  NodeId parent = kTerminal;
  int branch = 0;
};

std::vector<EdgeRef> all_edges(const Sqmdd& d) {
  std::vector<EdgeRef> out{{kTerminal, 0}};
  for (const auto& [id, n] : d.nodes) {
    out.push_back({id, 0});
    out.push_back({id, 1});
  }
  return out;
}

NodeId& target(Sqmdd& d, const EdgeRef& e) {
  if (e.parent == kTerminal) return d.root;
  auto& n = d.nodes.at(e.parent);
  return e.branch == 0 ? n.child0 : n.child1;
}

Amplitude& weight(Sqmdd& d, const EdgeRef& e) {
  if (e.parent == kTerminal) return d.scalar;
  auto& n = d.nodes.at(e.parent);
  return e.branch == 0 ? n.w0 : n.w1;
}

std::size_t source_height(const Sqmdd& d, const EdgeRef& e) {
  return e.parent == kTerminal ? d.height + 1 : d.node(e.parent).height;
}

std::vector<EdgeRef> incoming(Sqmdd& d, NodeId u) {
  std::vector<EdgeRef> out;
  for (const EdgeRef& e : all_edges(d)) {
    if (target(d, e) == u) out.push_back(e);
  }
  return out;
}

std::vector<NodeId> ids_of(const Sqmdd& d) {
  std::vector<NodeId> ids;
  for (const auto& [id, n] : d.nodes) ids.push_back(id);
  return ids;
}

// Any vertex strictly below height h, or the terminal.
NodeId random_below(const Sqmdd& d, std::mt19937_64& rng, std::size_t h) {
  std::vector<NodeId> ids{kTerminal};
  for (const auto& [id, n] : d.nodes) {
    if (n.height < h) ids.push_back(id);
  }
  return pick(rng, ids);
}

// A fresh vertex at height h with random children below it.
NodeId fresh_node(Sqmdd& d, std::mt19937_64& rng, std::size_t h) {
  SqmddNode n;
  n.height = h;
  n.child0 = random_below(d, rng, h);
  n.child1 = random_below(d, rng, h);
  n.w0 = random_nonzero_weight(rng);
  n.w1 = random_nonzero_weight(rng);
  const NodeId id = next_id(d);
  d.nodes[id] = n;
  return id;
}

Amplitude non_trivial_factor(std::mt19937_64& rng) {
  Amplitude c = random_nonzero_weight(rng);
  if (near_one(c)) c = {2.0, 0.0};
  return c;
}

bool push_weight(Sqmdd& d, std::mt19937_64& rng) {
  if (d.nodes.empty()) return false;
  const NodeId u = pick(rng, ids_of(d));
  const Amplitude c = non_trivial_factor(rng);
  auto& n = d.nodes.at(u);
  n.w0 *= c;
  n.w1 *= c;
  for (const EdgeRef& e : incoming(d, u)) weight(d, e) /= c;
  return true;
}

bool duplicate(Sqmdd& d, std::mt19937_64& rng) {
  std::vector<NodeId> shared;
  for (NodeId u : ids_of(d)) {
    if (incoming(d, u).size() >= 2) shared.push_back(u);
  }
  if (shared.empty()) return false;
  const NodeId u = pick(rng, shared);
  const NodeId copy = next_id(d);
  d.nodes[copy] = d.nodes.at(u);
  target(d, pick(rng, incoming(d, u))) = copy;
  return true;
}

bool insert_redundant(Sqmdd& d, std::mt19937_64& rng) {
  std::vector<EdgeRef> gaps;
  for (const EdgeRef& e : all_edges(d)) {
    if (d.node_height(target(d, e)) + 1 < source_height(d, e)) gaps.push_back(e);
  }
  if (gaps.empty()) return false;
  const EdgeRef e = pick(rng, gaps);
  const NodeId c = target(d, e);
  const std::size_t lo = d.node_height(c) + 1;
  const std::size_t hi = source_height(d, e) - 1;
  SqmddNode n;
  n.height = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  n.child0 = n.child1 = c;
  const NodeId id = next_id(d);
  d.nodes[id] = n;
  target(d, e) = id;
  return true;
}

std::vector<EdgeRef> zero_edges(Sqmdd& d) {
  std::vector<EdgeRef> out;
  for (const EdgeRef& e : all_edges(d)) {
    // Only zero edges into the terminal, so retargeting never orphans a vertex.
    if (e.parent != kTerminal && weight(d, e) == Amplitude{} && target(d, e) == kTerminal) {
      out.push_back(e);
    }
  }
  return out;
}

bool retarget_zero_edge(Sqmdd& d, std::mt19937_64& rng) {
  auto zeros = zero_edges(d);
  if (zeros.empty()) return false;
  const EdgeRef e = pick(rng, zeros);
  const std::size_t h = source_height(d, e);
  if (h >= 2 && coin(rng, 0.5)) {
    target(d, e) = fresh_node(d, rng, std::uniform_int_distribution<std::size_t>(1, h - 1)(rng));
  } else {
    target(d, e) = random_below(d, rng, h);
  }
  return true;
}

bool insert_zero_node(Sqmdd& d, std::mt19937_64& rng) {
  if (d.root == kTerminal && d.scalar == Amplitude{} && d.height > 0) {
    // A zero diagram with real structure under it.
    const NodeId r = fresh_node(d, rng, d.height);
    d.root = r;
    return true;
  }
  std::vector<EdgeRef> zeros;
  for (const EdgeRef& e : zero_edges(d)) {
    if (source_height(d, e) >= 2) zeros.push_back(e);
  }
  if (zeros.empty()) return false;
  const EdgeRef e = pick(rng, zeros);
  const std::size_t h = std::uniform_int_distribution<std::size_t>(1, source_height(d, e) - 1)(rng);
  const NodeId z = fresh_node(d, rng, h);
  d.nodes.at(z).w0 = d.nodes.at(z).w1 = {0.0, 0.0};
  target(d, e) = z;
  weight(d, e) = random_nonzero_weight(rng);
  return true;
}

// Random diagram whose root sits at height >= 2.
Sqmdd tall_base(std::mt19937_64& rng, std::size_t height) {
  if (height < 2) throw ConstructionError("targeted instances need height >= 2");
  for (;;) {
    RandomSqmddOptions opts;
    opts.height = height;
    Sqmdd d = random_sqmdd(rng, opts);
    if (d.node_height(d.root) >= 2) return d;
  }
}

NodeId node_at_least(Sqmdd& d, std::mt19937_64& rng, std::size_t h) {
  std::vector<NodeId> ids;
  for (const auto& [id, n] : d.nodes) {
    if (n.height >= h) ids.push_back(id);
  }
  return pick(rng, ids);
}

}  // namespace

Amplitude random_weight(std::mt19937_64& rng) {
  if (coin(rng, 0.25)) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    return {u(rng), u(rng)};
  }
  return kSpecialWeights[std::uniform_int_distribution<std::size_t>(0, kSpecialWeights.size() - 1)(rng)];
}

Amplitude random_nonzero_weight(std::mt19937_64& rng) {
  for (;;) {
    const Amplitude w = random_weight(rng);
    if (w != Amplitude{}) return w;
  }
}

Sqmdd random_sqmdd(std::mt19937_64& rng, const RandomSqmddOptions& opts) {
  const std::size_t H = opts.height;
  Sqmdd d = Sqmdd::terminal(random_nonzero_weight(rng), H);
  if (H == 0) return d;
  const std::size_t root_height =
      coin(rng, 0.8) ? H : std::uniform_int_distribution<std::size_t>(1, H)(rng);
  std::vector<std::vector<NodeId>> at(H + 1);
  at[0] = {kTerminal};
  std::size_t last_filled = 0;
  for (std::size_t h = 1; h <= root_height; ++h) {
    std::size_t width = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(opts.max_width, 1))(rng);
    if (h == root_height) {
      width = 1;
    } else if (coin(rng, opts.skip_probability)) {
      continue;
    }
    for (std::size_t k = 0; k < width; ++k) {
      SqmddNode n;
      n.height = h;
      auto choose = [&]() {
        std::size_t level = last_filled;
        if (coin(rng, 0.3)) {
          std::vector<std::size_t> filled;
          for (std::size_t l = 0; l < h; ++l) {
            if (!at[l].empty()) filled.push_back(l);
          }
          level = pick(rng, filled);
        }
        return pick(rng, at[level]);
      };
      n.w0 = random_weight(rng);
      n.w1 = random_weight(rng);
      n.child0 = n.w0 == Amplitude{} ? kTerminal : choose();
      n.child1 = n.w1 == Amplitude{} ? kTerminal : choose();
      const NodeId id = next_id(d);
      d.nodes[id] = n;
      at[h].push_back(id);
    }
    last_filled = h;
  }
  d.root = at[root_height].front();
  // Drop vertices nobody points to.
  for (;;) {
    std::set<NodeId> referenced{d.root};
    for (const auto& [id, n] : d.nodes) {
      referenced.insert(n.child0);
      referenced.insert(n.child1);
    }
    const auto before = d.nodes.size();
    std::erase_if(d.nodes, [&](const auto& kv) { return !referenced.contains(kv.first); });
    if (d.nodes.size() == before) break;
  }
  return d;
}

Sqmdd naive_tree(std::span<const Amplitude> v) {
  const std::size_t H = log2_exact(v.size());
  if (H == 0) return Sqmdd::terminal(v[0], 0);
  Sqmdd d = Sqmdd::terminal({1.0, 0.0}, H);
  NodeId next = 1;
  auto build = [&](auto& self, std::size_t offset, std::size_t level) -> NodeId {
    SqmddNode n;
    n.height = level;
    if (level == 1) {
      n.w0 = v[offset];
      n.w1 = v[offset + 1];
    } else {
      const std::size_t half = std::size_t{1} << (level - 1);
      n.child0 = self(self, offset, level - 1);
      n.child1 = self(self, offset + half, level - 1);
    }
    const NodeId id = next++;
    d.nodes[id] = n;
    return id;
  };
  d.root = build(build, 0, H);
  return d;
}

Sqmdd denormalize(const Sqmdd& d, std::mt19937_64& rng, std::size_t steps) {
  require_valid(d);
  Sqmdd out = d;
  using Op = bool (*)(Sqmdd&, std::mt19937_64&);
  const std::array<Op, 5> ops = {push_weight, duplicate, insert_redundant, retarget_zero_edge,
                                 insert_zero_node};
  for (std::size_t s = 0; s < steps; ++s) {
    for (int attempt = 0; attempt < 8; ++attempt) {
      const Op op = ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)];
      if (op(out, rng)) break;
    }
  }
  require_valid(out);
  return out;
}

Sqmdd targeted_instance(ReductionRule rule, std::mt19937_64& rng, std::size_t height) {
  Sqmdd d = tall_base(rng, height);
  switch (rule) {
    case ReductionRule::NormalizeLeft: {
      auto& n = d.nodes.at(pick(rng, ids_of(d)));
      if (n.w0 == Amplitude{}) n.child0 = random_below(d, rng, n.height);
      n.w0 = non_trivial_factor(rng);
      break;
    }
    case ReductionRule::NormalizeRight: {
      const NodeId u = pick(rng, ids_of(d));
      auto& n = d.nodes.at(u);
      const NodeId old = n.child0;
      n.child0 = kTerminal;
      n.w0 = {0.0, 0.0};
      n.w1 = non_trivial_factor(rng);
      if (old != kTerminal && incoming(d, old).empty()) n.child1 = old;
      break;
    }
    case ReductionRule::ZeroToTerminal:
    case ReductionRule::RemoveUnreachable: {
      // A zero edge into a vertex whose only parent is that edge.
      const NodeId u = node_at_least(d, rng, 2);
      const std::size_t h = d.node(u).height;
      const NodeId v = fresh_node(d, rng, std::uniform_int_distribution<std::size_t>(1, h - 1)(rng));
      auto& n = d.nodes.at(u);
      const NodeId old = n.child1;
      n.child1 = v;
      n.w1 = {0.0, 0.0};
      if (old != kTerminal && incoming(d, old).empty()) {
        d.nodes.at(u).child0 = old;
        d.nodes.at(u).w0 = random_nonzero_weight(rng);
      }
      break;
    }
    case ReductionRule::SkipVariable: {
      if (!insert_redundant(d, rng)) {
        d.height += 1;
        insert_redundant(d, rng);
      }
      break;
    }
    case ReductionRule::Merge: {
      const NodeId u = node_at_least(d, rng, 2);
      const std::size_t h = std::uniform_int_distribution<std::size_t>(1, d.node(u).height - 1)(rng);
      const NodeId a = fresh_node(d, rng, h);
      const NodeId b = next_id(d);
      d.nodes[b] = d.nodes.at(a);
      auto& n = d.nodes.at(u);
      const NodeId old0 = n.child0;
      const NodeId old1 = n.child1;
      n.child0 = a;
      n.child1 = b;
      n.w0 = random_nonzero_weight(rng);
      n.w1 = random_nonzero_weight(rng);
      // Keep former children reachable through the copies if they lost their parent.
      for (NodeId old : {old0, old1}) {
        if (old != kTerminal && incoming(d, old).empty() && d.node(old).height < h) {
          d.nodes.at(a).child0 = d.nodes.at(b).child0 = old;
        }
      }
      break;
    }
  }
  // Vertices that lost their last parent are removed so the result is valid.
  for (;;) {
    std::vector<NodeId> orphans;
    for (NodeId id : ids_of(d)) {
      if (id != d.root && incoming(d, id).empty()) orphans.push_back(id);
    }
    if (orphans.empty()) break;
    for (NodeId id : orphans) d.nodes.erase(id);
  }
  require_valid(d);
  return d;
}

ZhTerm random_zh_term(std::mt19937_64& rng, const RandomTermOptions& opts) {
  auto pick = [&](std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  };
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  const std::size_t inputs = pick(0, std::min<std::size_t>(3, opts.max_boundary));
  DiagramBuilder b(inputs);
  // Room left for open wires once the inputs are accounted for.
  const std::size_t room = opts.max_boundary - inputs;
  const std::size_t count = pick(1, std::max<std::size_t>(1, opts.max_generators));
  for (std::size_t step = 0; step < count; ++step) {
    std::vector<DiagramBuilder::Wire> open(b.open_wires());
    std::shuffle(open.begin(), open.end(), rng);
    const std::size_t k = pick(0, std::min<std::size_t>(3, open.size()));
    const std::size_t after_consume = open.size() - k;
    if (after_consume > room) continue;
    const std::size_t m = pick(0, std::min<std::size_t>(3, room - after_consume));
    open.resize(k);
    Generator g = Generator::z_spider(k, m);
    switch (pick(0, 5)) {
      case 0:
      case 1:
        break;
      case 2:
      case 3:
        g = Generator::h_box(k, m, pick(0, 1) ? random_weight(rng) : Amplitude{coord(rng), coord(rng)});
        break;
      case 4:
        if (k == 2 && m == 2) g = Generator::swap();
        if (k == 2 && m == 0) g = Generator::cup();
        break;
      default:
        if (k == 0 && m == 2) g = Generator::cap();
        break;
    }
    b.add(g, open);
  }
  const std::vector<DiagramBuilder::Wire> outs(b.open_wires());
  return b.finish(outs);
}

}  // namespace zhdd
