#include "zhdd/sqmdd.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "sqmdd_builder.hpp"

namespace zhdd {

Sqmdd Sqmdd::terminal(Amplitude s, std::size_t height) {
  Sqmdd d;
  d.scalar = s;
  d.height = height;
  return d;
}

std::size_t Sqmdd::node_height(NodeId id) const {
  if (id == kTerminal) return 0;
  return node(id).height;
}

const SqmddNode& Sqmdd::node(NodeId id) const {
  auto it = nodes.find(id);
  if (it == nodes.end()) throw ShapeError("unknown vertex " + std::to_string(id));
  return it->second;
}

namespace {

bool known(const Sqmdd& d, NodeId id) { return id == kTerminal || d.nodes.contains(id); }

std::set<NodeId> reachable(const Sqmdd& d) {
  std::set<NodeId> seen;
  if (d.root == kTerminal || !d.nodes.contains(d.root)) return seen;
  std::vector<NodeId> stack{d.root};
  seen.insert(d.root);
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    const SqmddNode& n = d.nodes.at(u);
    for (NodeId c : {n.child0, n.child1}) {
      if (c != kTerminal && d.nodes.contains(c) && seen.insert(c).second) stack.push_back(c);
    }
  }
  return seen;
}

}  // namespace

std::vector<std::string> validate(const Sqmdd& d) {
  std::vector<std::string> out;
  if (!is_finite(d.scalar)) out.emplace_back("scalar is not finite");
  if (d.root == kTerminal && !d.nodes.empty()) {
    out.emplace_back("root is the terminal but other vertices exist");
  }
  if (!known(d, d.root)) out.emplace_back("root references an unknown vertex");
  std::set<NodeId> has_parent;
  for (const auto& [id, n] : d.nodes) {
    const std::string tag = "vertex " + std::to_string(id) + ": ";
    if (id == kTerminal) out.push_back(tag + "id 0 is reserved for the terminal");
    if (n.height == 0) out.push_back(tag + "height 0 is reserved for the terminal");
    if (n.height > d.height) out.push_back(tag + "height exceeds the diagram height");
    if (!is_finite(n.w0) || !is_finite(n.w1)) out.push_back(tag + "weight is not finite");
    for (NodeId c : {n.child0, n.child1}) {
      if (!known(d, c)) {
        out.push_back(tag + "child " + std::to_string(c) + " does not exist");
        continue;
      }
      if (d.node_height(c) >= n.height) out.push_back(tag + "edge does not decrease height");
      has_parent.insert(c);
    }
  }
  for (const auto& [id, n] : d.nodes) {
    if (id != d.root && !has_parent.contains(id)) {
      out.push_back("vertex " + std::to_string(id) + " has no parent");
    }
  }
  return out;
}

void require_valid(const Sqmdd& d) {
  const auto problems = validate(d);
  if (problems.empty()) return;
  std::ostringstream msg;
  msg << "invalid SQMDD:";
  for (const auto& p : problems) msg << "\n  " << p;
  throw ShapeError(msg.str());
}

namespace {

Sqmdd drop_unreachable(Sqmdd d) {
  if (d.root == kTerminal) {
    d.nodes.clear();
    return d;
  }
  const auto keep = reachable(d);
  std::erase_if(d.nodes, [&](const auto& kv) { return !keep.contains(kv.first); });
  return d;
}

Sqmdd cofactor(const Sqmdd& d, int bit) {
  require_valid(d);
  if (d.height == 0) throw ShapeError("cofactor of a diagram with no qubits");
  Sqmdd out = d;
  out.height = d.height - 1;
  if (d.node_height(d.root) == d.height) {
    const SqmddNode& n = d.node(d.root);
    out.scalar = d.scalar * (bit == 0 ? n.w0 : n.w1);
    out.root = bit == 0 ? n.child0 : n.child1;
  }
  return drop_unreachable(std::move(out));
}

}  // namespace

Sqmdd left_cofactor(const Sqmdd& d) { return cofactor(d, 0); }
Sqmdd right_cofactor(const Sqmdd& d) { return cofactor(d, 1); }

// ---------------------------------------------------------------------------
// Reduction

std::string to_string(ReductionRule rule) {
  switch (rule) {
    case ReductionRule::NormalizeLeft: return "R1";
    case ReductionRule::NormalizeRight: return "R2";
    case ReductionRule::ZeroToTerminal: return "R3";
    case ReductionRule::RemoveUnreachable: return "R4";
    case ReductionRule::SkipVariable: return "R5";
    case ReductionRule::Merge: return "R6";
  }
  return "?";
}

ReductionMeasure measure(const Sqmdd& d, const Tolerance& tol) {
  const double eps = tol.eps;
  ReductionMeasure m;
  const std::size_t v = d.size();
  std::size_t deg_t = 0;
  std::vector<std::size_t> delta(d.height, 0);
  for (const auto& [id, n] : d.nodes) {
    deg_t += (n.child0 == kTerminal) + (n.child1 == kTerminal);
    const bool normal =
        near_one(n.w0, eps) || (near_zero(n.w0, eps) && (near_zero(n.w1, eps) || near_one(n.w1, eps)));
    if (!normal && n.height >= 1 && n.height <= d.height) ++delta[n.height - 1];
  }
  m.components.push_back(v);
  m.components.push_back(2 * v - deg_t);
  m.components.insert(m.components.end(), delta.begin(), delta.end());
  return m;
}

namespace {

std::vector<Redex> collect_redexes(const Sqmdd& d, const Tolerance& tol, bool first_only) {
  const double eps = tol.eps;
  std::vector<Redex> out;
  auto push = [&](Redex r) {
    out.push_back(r);
    return first_only;
  };
  if (near_zero(d.scalar, eps) && d.root != kTerminal) {
    if (push({ReductionRule::ZeroToTerminal, kTerminal, 0})) return out;
  }
  const auto live = reachable(d);
  for (const auto& [id, n] : d.nodes) {
    if (!live.contains(id) && push({ReductionRule::RemoveUnreachable, id, 0})) return out;
  }
  std::map<std::size_t, std::vector<NodeId>> by_height;
  for (const auto& [id, n] : d.nodes) by_height[n.height].push_back(id);
  for (const auto& [h, ids] : by_height) {
    std::map<detail::NodeKey, NodeId> first_with_key;
    for (NodeId id : ids) {
      const SqmddNode& n = d.nodes.at(id);
      const bool z0 = near_zero(n.w0, eps);
      const bool z1 = near_zero(n.w1, eps);
      if (z0 && n.child0 != kTerminal && push({ReductionRule::ZeroToTerminal, id, 0})) return out;
      if (z1 && n.child1 != kTerminal && push({ReductionRule::ZeroToTerminal, id, 1})) return out;
      if (z0 && z1) {
        if (push({ReductionRule::NormalizeRight, id, 0})) return out;
      } else if (!z0 && !near_one(n.w0, eps)) {
        if (push({ReductionRule::NormalizeLeft, id, 0})) return out;
      } else if (z0 && !near_one(n.w1, eps)) {
        if (push({ReductionRule::NormalizeRight, id, 0})) return out;
      }
      if (near_one(n.w0, eps) && near_one(n.w1, eps) && n.child0 == n.child1) {
        if (push({ReductionRule::SkipVariable, id, 0})) return out;
      }
      const auto key = detail::make_key(n, eps);
      auto [it, fresh] = first_with_key.emplace(key, id);
      if (!fresh && push({ReductionRule::Merge, id, it->second})) return out;
    }
  }
  return out;
}

// Applies f to every edge (including the root edge) that points at `target`.
template <typename F>
void for_each_incoming(Sqmdd& d, NodeId target, F f) {
  for (auto& [id, n] : d.nodes) {
    if (n.child0 == target) f(n.child0, n.w0);
    if (n.child1 == target) f(n.child1, n.w1);
  }
  if (d.root == target) f(d.root, d.scalar);
}

Sqmdd collapse_to_zero(const Sqmdd& d) { return Sqmdd::zero(d.height); }

}  // namespace

std::vector<Redex> find_redexes(const Sqmdd& d, const Tolerance& tol) {
  return collect_redexes(d, tol, false);
}

Sqmdd apply_rewrite(const Sqmdd& d, const Redex& r, const Tolerance& tol) {
  const double eps = tol.eps;
  Sqmdd out = d;
  if (r.rule == ReductionRule::ZeroToTerminal && r.node == kTerminal) return collapse_to_zero(d);
  if (!out.nodes.contains(r.node)) throw ShapeError("redex names an unknown vertex");
  SqmddNode& n = out.nodes.at(r.node);
  switch (r.rule) {
    case ReductionRule::ZeroToTerminal:
      if (r.other == 0) {
        n.child0 = kTerminal;
        n.w0 = {0.0, 0.0};
      } else {
        n.child1 = kTerminal;
        n.w1 = {0.0, 0.0};
      }
      break;
    case ReductionRule::RemoveUnreachable:
      out.nodes.erase(r.node);
      break;
    case ReductionRule::NormalizeLeft: {
      const Amplitude a = n.w0;
      n.w0 = {1.0, 0.0};
      n.w1 = snap(n.w1 / a, eps);
      for_each_incoming(out, r.node, [&](NodeId&, Amplitude& w) { w *= a; });
      break;
    }
    case ReductionRule::NormalizeRight: {
      if (near_zero(n.w1, eps)) {
        // A node denoting zero: every edge into it becomes a zero edge.
        if (out.root == r.node) return collapse_to_zero(d);
        for_each_incoming(out, r.node, [&](NodeId& c, Amplitude& w) {
          c = kTerminal;
          w = {0.0, 0.0};
        });
        out.nodes.erase(r.node);
        break;
      }
      const Amplitude b = n.w1;
      n.w0 = {0.0, 0.0};
      n.w1 = {1.0, 0.0};
      for_each_incoming(out, r.node, [&](NodeId&, Amplitude& w) { w *= b; });
      break;
    }
    case ReductionRule::SkipVariable: {
      const NodeId child = n.child0;
      for_each_incoming(out, r.node, [&](NodeId& c, Amplitude&) { c = child; });
      out.nodes.erase(r.node);
      if (out.root == kTerminal) out.nodes.clear();
      break;
    }
    case ReductionRule::Merge: {
      const NodeId keep = r.other;
      for_each_incoming(out, r.node, [&](NodeId& c, Amplitude&) { c = keep; });
      out.nodes.erase(r.node);
      break;
    }
  }
  return out;
}

namespace {

constexpr std::size_t kMaxRewrites = 50'000'000;

template <typename Pick>
ReductionResult run_reduction(const Sqmdd& d, const Tolerance& tol, bool first_only, Pick pick) {
  require_valid(d);
  ReductionResult res{d, {}};
  ReductionMeasure current = measure(d, tol);
  for (std::size_t step = 0; step < kMaxRewrites; ++step) {
    const auto redexes = collect_redexes(res.diagram, tol, first_only);
    if (redexes.empty()) return res;
    const Redex r = pick(redexes);
    res.diagram = apply_rewrite(res.diagram, r, tol);
    ReductionMeasure next = measure(res.diagram, tol);
    res.trace.push_back({r, current, next});
    current = std::move(next);
  }
  throw ResourceError("reduction did not terminate within the rewrite budget");
}

}  // namespace

ReductionResult reduce(const Sqmdd& d, const Tolerance& tol) {
  return run_reduction(d, tol, true, [](const std::vector<Redex>& rs) { return rs.front(); });
}

ReductionResult reduce_randomized(const Sqmdd& d, std::mt19937_64& rng, const Tolerance& tol) {
  return run_reduction(d, tol, false, [&](const std::vector<Redex>& rs) {
    std::uniform_int_distribution<std::size_t> pick(0, rs.size() - 1);
    return rs[pick(rng)];
  });
}

bool is_irreducible(const Sqmdd& d, const Tolerance& tol) {
  return collect_redexes(d, tol, true).empty();
}

Sqmdd canonical_from_vector(std::span<const Amplitude> v, const Tolerance& tol) {
  if (!is_power_of_two(v.size())) {
    throw ConstructionError("vector length " + std::to_string(v.size()) +
                            " is not a power of two");
  }
  for (Amplitude a : v) checked_amplitude(a);
  const std::size_t n = log2_exact(v.size());
  detail::Builder b(tol);
  auto build = [&](auto& self, std::size_t offset, std::size_t len,
                   std::size_t level) -> detail::Edge {
    if (level == 0) return b.snap_edge(detail::Edge{v[offset], kTerminal});
    const std::size_t half = len / 2;
    const detail::Edge lo = self(self, offset, half, level - 1);
    const detail::Edge hi = self(self, offset + half, half, level - 1);
    return b.make(level, lo, hi);
  };
  return b.extract(build(build, 0, v.size(), n), n);
}

bool iso_equal(const Sqmdd& a, const Sqmdd& b, const Tolerance& tol) {
  require_valid(a);
  require_valid(b);
  if (!is_irreducible(a, tol) || !is_irreducible(b, tol)) {
    throw ShapeError("iso_equal requires irreducible diagrams");
  }
  if (a.height != b.height || !near(a.scalar, b.scalar, tol.eps)) return false;
  std::set<std::pair<NodeId, NodeId>> done;
  std::map<NodeId, NodeId> forward;
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root, b.root}};
  while (!stack.empty()) {
    const auto [u, v] = stack.back();
    stack.pop_back();
    if (!done.insert({u, v}).second) continue;
    if ((u == kTerminal) != (v == kTerminal)) return false;
    if (u == kTerminal) continue;
    if (auto [it, fresh] = forward.emplace(u, v); !fresh && it->second != v) return false;
    const SqmddNode& x = a.node(u);
    const SqmddNode& y = b.node(v);
    if (x.height != y.height || !near(x.w0, y.w0, tol.eps) || !near(x.w1, y.w1, tol.eps)) {
      return false;
    }
    stack.emplace_back(x.child0, y.child0);
    stack.emplace_back(x.child1, y.child1);
  }
  return a.nodes.size() == b.nodes.size();
}

Sqmdd renumber(const Sqmdd& d) {
  Sqmdd out = Sqmdd::terminal(d.scalar, d.height);
  if (d.root == kTerminal) return out;
  std::map<NodeId, NodeId> ids{{d.root, 1}};
  std::deque<NodeId> queue{d.root};
  std::vector<NodeId> order;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    order.push_back(u);
    const SqmddNode& n = d.node(u);
    for (NodeId c : {n.child0, n.child1}) {
      if (c != kTerminal && !ids.contains(c)) {
        ids[c] = static_cast<NodeId>(ids.size() + 1);
        queue.push_back(c);
      }
    }
  }
  for (NodeId u : order) {
    SqmddNode n = d.node(u);
    if (n.child0 != kTerminal) n.child0 = ids.at(n.child0);
    if (n.child1 != kTerminal) n.child1 = ids.at(n.child1);
    out.nodes[ids.at(u)] = n;
  }
  out.root = 1;
  return out;
}

}  // namespace zhdd
