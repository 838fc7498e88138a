#pragma once

// Hash-consed node store shared by the diagram algorithms. Not installed.

#include <cstddef>
#include <map>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "zhdd/sqmdd.hpp"

namespace zhdd::detail {

/// Weighted reference to a vertex of the builder.
struct Edge {
  Amplitude w{1.0, 0.0};
  NodeId n = kTerminal;
};

/// Unique-table key: weights are compared on the tolerance grid.
struct NodeKey {
  std::size_t height = 0;
  NodeId child0 = kTerminal;
  GridPoint w0;
  NodeId child1 = kTerminal;
  GridPoint w1;
  friend auto operator<=>(const NodeKey&, const NodeKey&) = default;
};

NodeKey make_key(const SqmddNode& n, double eps);

class Builder {
 public:
  explicit Builder(const Tolerance& tol = {}) : eps_(tol.eps) {
    nodes_.push_back(SqmddNode{0, kTerminal, {}, kTerminal, {}});
  }

  double eps() const { return eps_; }
  std::size_t height(NodeId n) const { return nodes_[n].height; }
  const SqmddNode& node(NodeId n) const { return nodes_[n]; }

  /// Normalized, hash-consed node of height h with the given out-edges.
  /// Returns an edge carrying the factor pulled out of the node. Redundant
  /// nodes are skipped and zero edges point at the terminal.
  Edge make(std::size_t h, Edge e0, Edge e1);

  Edge scaled(Edge e, Amplitude c) const;
  Edge snap_edge(Edge e) const;
  bool same(Edge a, Edge b) const;

  /// Rebuilds a diagram inside this store; returns its root edge.
  Edge import(const Sqmdd& d);
  /// Extracts the sub-diagram under `root` as a diagram of height H.
  Sqmdd extract(Edge root, std::size_t height) const;

  /// Cofactors of the top qubit of `e` viewed at `level` remaining qubits.
  std::pair<Edge, Edge> cofactors(Edge e, std::size_t level) const;

  // Operations on edges at a given level (number of qubits below and
  // including the current one).
  Edge add(Edge a, Edge b, std::size_t level);
  Edge restrict(Edge e, std::size_t level, std::size_t depth, int bit);
  Edge swap_with_next(Edge e, std::size_t level, std::size_t depth);
  Edge diagonal(Edge e, std::size_t level, std::size_t i, std::size_t j);
  Edge plus_sum(Edge e, std::size_t level, std::size_t depth);

 private:
  using LevelKey = std::pair<NodeId, std::size_t>;

  Edge restrict_rec(NodeId n, std::size_t level, std::size_t depth, int bit,
                    std::map<LevelKey, Edge>& memo);
  Edge swap_rec(NodeId n, std::size_t level, std::size_t depth, std::map<LevelKey, Edge>& memo);
  Edge diagonal_rec(NodeId n, std::size_t level, std::size_t i, std::size_t j,
                    std::map<LevelKey, Edge>& memo);
  Edge add_rec(Edge a, Edge b, std::size_t level);

  double eps_;
  std::vector<SqmddNode> nodes_;
  std::map<NodeKey, NodeId> unique_;
  std::map<std::tuple<NodeId, NodeId, std::size_t, GridPoint>, Edge> add_memo_;
};

}  // namespace zhdd::detail
