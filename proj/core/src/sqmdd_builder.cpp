#include "sqmdd_builder.hpp"

#include <algorithm>
#include <bit>
#include <deque>

namespace zhdd::detail {

NodeKey make_key(const SqmddNode& n, double eps) {
  return NodeKey{n.height, n.child0, to_grid(n.w0, eps), n.child1, to_grid(n.w1, eps)};
}

Edge Builder::snap_edge(Edge e) const {
  if (near_zero(e.w, eps_)) return Edge{{0.0, 0.0}, kTerminal};
  return e;
}

Edge Builder::scaled(Edge e, Amplitude c) const { return snap_edge(Edge{e.w * c, e.n}); }

bool Builder::same(Edge a, Edge b) const { return a.n == b.n && near(a.w, b.w, eps_); }

Edge Builder::make(std::size_t h, Edge e0, Edge e1) {
  e0 = snap_edge(e0);
  e1 = snap_edge(e1);
  if (height(e0.n) >= h || height(e1.n) >= h) {
    throw ShapeError("edge must decrease height");
  }
  if (same(e0, e1)) return e0;

  SqmddNode n;
  n.height = h;
  Amplitude factor;
  if (e0.w != Amplitude{}) {
    factor = e0.w;
    n.child0 = e0.n;
    n.w0 = {1.0, 0.0};
    n.w1 = snap(e1.w / factor, eps_);
    n.child1 = n.w1 == Amplitude{} ? kTerminal : e1.n;
  } else {
    factor = e1.w;
    n.child0 = kTerminal;
    n.w0 = {0.0, 0.0};
    n.child1 = e1.n;
    n.w1 = {1.0, 0.0};
  }
  const NodeKey key = make_key(n, eps_);
  auto it = unique_.find(key);
  if (it != unique_.end()) return Edge{factor, it->second};
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(n);
  unique_.emplace(key, id);
  return Edge{factor, id};
}

Edge Builder::import(const Sqmdd& d) {
  std::vector<std::pair<std::size_t, NodeId>> order;
  order.reserve(d.nodes.size());
  for (const auto& [id, n] : d.nodes) order.emplace_back(n.height, id);
  std::sort(order.begin(), order.end());
  std::map<NodeId, Edge> mapped;
  mapped[kTerminal] = Edge{};
  for (const auto& [h, id] : order) {
    const SqmddNode& n = d.nodes.at(id);
    const Edge e0 = scaled(mapped.at(n.child0), n.w0);
    const Edge e1 = scaled(mapped.at(n.child1), n.w1);
    mapped[id] = make(h, e0, e1);
  }
  return scaled(mapped.at(d.root), d.scalar);
}

Sqmdd Builder::extract(Edge root, std::size_t height_total) const {
  root = snap_edge(root);
  Sqmdd out = Sqmdd::terminal(root.w, height_total);
  if (root.n == kTerminal) return out;
  if (height(root.n) > height_total) throw ShapeError("root above the diagram height");
  std::map<NodeId, NodeId> ids;
  std::deque<NodeId> queue{root.n};
  ids[root.n] = 1;
  std::vector<NodeId> visit;
  while (!queue.empty()) {
    const NodeId u = queue.front();
    queue.pop_front();
    visit.push_back(u);
    for (NodeId c : {nodes_[u].child0, nodes_[u].child1}) {
      if (c != kTerminal && !ids.contains(c)) {
        ids[c] = static_cast<NodeId>(ids.size() + 1);
        queue.push_back(c);
      }
    }
  }
  auto remap = [&](NodeId c) { return c == kTerminal ? kTerminal : ids.at(c); };
  for (NodeId u : visit) {
    SqmddNode n = nodes_[u];
    n.child0 = remap(n.child0);
    n.child1 = remap(n.child1);
    out.nodes[ids.at(u)] = n;
  }
  out.root = 1;
  return out;
}

std::pair<Edge, Edge> Builder::cofactors(Edge e, std::size_t level) const {
  if (e.n == kTerminal || height(e.n) < level) return {e, e};
  const SqmddNode& n = nodes_[e.n];
  return {snap_edge(Edge{e.w * n.w0, n.child0}), snap_edge(Edge{e.w * n.w1, n.child1})};
}

Edge Builder::add(Edge a, Edge b, std::size_t level) { return add_rec(a, b, level); }

Edge Builder::add_rec(Edge a, Edge b, std::size_t level) {
  a = snap_edge(a);
  b = snap_edge(b);
  if (a.w == Amplitude{}) return b;
  if (b.w == Amplitude{}) return a;
  if (a.n == b.n) return snap_edge(Edge{a.w + b.w, a.n});
  if (a.n > b.n) std::swap(a, b);
  const Amplitude ratio = b.w / a.w;
  // Keyed on the exact ratio so the memo never introduces rounding.
  const auto key = std::make_tuple(a.n, b.n, level,
                                   GridPoint{std::bit_cast<std::int64_t>(ratio.real()),
                                             std::bit_cast<std::int64_t>(ratio.imag())});
  if (auto it = add_memo_.find(key); it != add_memo_.end()) return scaled(it->second, a.w);
  const auto [a0, a1] = cofactors(Edge{{1.0, 0.0}, a.n}, level);
  const auto [b0, b1] = cofactors(Edge{ratio, b.n}, level);
  const Edge r0 = add_rec(a0, b0, level - 1);
  const Edge r1 = add_rec(a1, b1, level - 1);
  const Edge r = make(level, r0, r1);
  add_memo_[key] = r;
  return scaled(r, a.w);
}

Edge Builder::restrict(Edge e, std::size_t level, std::size_t depth, int bit) {
  e = snap_edge(e);
  if (e.w == Amplitude{}) return e;
  std::map<LevelKey, Edge> memo;
  return scaled(restrict_rec(e.n, level, depth, bit, memo), e.w);
}

Edge Builder::restrict_rec(NodeId n, std::size_t level, std::size_t depth, int bit,
                           std::map<LevelKey, Edge>& memo) {
  // Below the removed qubit nothing changes.
  if (n == kTerminal || height(n) < level - depth) return Edge{{1.0, 0.0}, n};
  const auto [c0, c1] = cofactors(Edge{{1.0, 0.0}, n}, level);
  if (depth == 0) return bit == 0 ? c0 : c1;
  if (auto it = memo.find({n, level}); it != memo.end()) return it->second;
  auto sub = [&](Edge c) {
    if (c.w == Amplitude{}) return c;
    return scaled(restrict_rec(c.n, level - 1, depth - 1, bit, memo), c.w);
  };
  const Edge r = make(level - 1, sub(c0), sub(c1));
  memo[{n, level}] = r;
  return r;
}

Edge Builder::swap_with_next(Edge e, std::size_t level, std::size_t depth) {
  e = snap_edge(e);
  if (e.w == Amplitude{}) return e;
  std::map<LevelKey, Edge> memo;
  return scaled(swap_rec(e.n, level, depth, memo), e.w);
}

Edge Builder::swap_rec(NodeId n, std::size_t level, std::size_t depth,
                       std::map<LevelKey, Edge>& memo) {
  if (n == kTerminal || height(n) + depth + 1 < level) return Edge{{1.0, 0.0}, n};
  if (auto it = memo.find({n, level}); it != memo.end()) return it->second;
  const auto [f0, f1] = cofactors(Edge{{1.0, 0.0}, n}, level);
  Edge r;
  if (depth > 0) {
    auto sub = [&](Edge c) {
      if (c.w == Amplitude{}) return c;
      return scaled(swap_rec(c.n, level - 1, depth - 1, memo), c.w);
    };
    r = make(level, sub(f0), sub(f1));
  } else {
    const auto [f00, f01] = cofactors(f0, level - 1);
    const auto [f10, f11] = cofactors(f1, level - 1);
    r = make(level, make(level - 1, f00, f10), make(level - 1, f01, f11));
  }
  memo[{n, level}] = r;
  return r;
}

Edge Builder::diagonal(Edge e, std::size_t level, std::size_t i, std::size_t j) {
  e = snap_edge(e);
  if (e.w == Amplitude{}) return e;
  std::map<LevelKey, Edge> memo;
  return scaled(diagonal_rec(e.n, level, i, j, memo), e.w);
}

Edge Builder::diagonal_rec(NodeId n, std::size_t level, std::size_t i, std::size_t j,
                           std::map<LevelKey, Edge>& memo) {
  // Independent of both merged qubits: only the lower one disappears.
  if (n == kTerminal || height(n) < level - j) return Edge{{1.0, 0.0}, n};
  if (auto it = memo.find({n, level}); it != memo.end()) return it->second;
  const auto [f0, f1] = cofactors(Edge{{1.0, 0.0}, n}, level);
  Edge r;
  if (i > 0) {
    auto sub = [&](Edge c) {
      if (c.w == Amplitude{}) return c;
      return scaled(diagonal_rec(c.n, level - 1, i - 1, j - 1, memo), c.w);
    };
    r = make(level - 1, sub(f0), sub(f1));
  } else {
    r = make(level - 1, restrict(f0, level - 1, j - 1, 0), restrict(f1, level - 1, j - 1, 1));
  }
  memo[{n, level}] = r;
  return r;
}

Edge Builder::plus_sum(Edge e, std::size_t level, std::size_t depth) {
  const Edge lo = restrict(e, level, depth, 0);
  const Edge hi = restrict(e, level, depth, 1);
  return add(lo, hi, level - 1);
}

}  // namespace zhdd::detail
