#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "zhdd/amplitude.hpp"
#include "zhdd/dense.hpp"

namespace zhdd {

using NodeId = std::uint32_t;
/// Id of the terminal node in every diagram.
inline constexpr NodeId kTerminal = 0;

/// Non-terminal vertex: its height and the two weighted out-edges.
struct SqmddNode {
  std::size_t height = 1;
  NodeId child0 = kTerminal;
  Amplitude w0{1.0, 0.0};
  NodeId child1 = kTerminal;
  Amplitude w1{1.0, 0.0};
};

/// State decision diagram: overall scalar, vertex table, root and height.
///
/// The terminal is implicit (id kTerminal, height 0); `nodes` holds the
/// non-terminal vertices only. Position 0 of the denoted vector is the
/// qubit at height `height`, i.e. the most significant index bit.
struct Sqmdd {
  Amplitude scalar{1.0, 0.0};
  std::size_t height = 0;
  NodeId root = kTerminal;
  std::map<NodeId, SqmddNode> nodes;

  /// The diagram whose only vertex is the terminal.
  static Sqmdd terminal(Amplitude s, std::size_t height);
  /// Canonical form of the zero vector on `height` qubits.
  static Sqmdd zero(std::size_t height) { return terminal({0.0, 0.0}, height); }

  std::size_t node_height(NodeId id) const;
  const SqmddNode& node(NodeId id) const;
  std::size_t size() const { return nodes.size() + 1; }
};

/// validate() -> empty when every structural invariant holds.
std::vector<std::string> validate(const Sqmdd& d);
/// Throws ShapeError listing the violations, if any.
void require_valid(const Sqmdd& d);

/// Cofactors of the first qubit; the weight of the chosen edge is folded into
/// the scalar and unreachable vertices are dropped.
Sqmdd left_cofactor(const Sqmdd& d);
Sqmdd right_cofactor(const Sqmdd& d);

// ---------------------------------------------------------------------------
// Reduction system

enum class ReductionRule {
  /// Pull a non-trivial left weight a out of a node (a != 0, a != 1).
  NormalizeLeft,
  /// Left weight 0: pull the right weight b out (b != 1).
  NormalizeRight,
  /// A zero-weight edge is redirected to the terminal.
  ZeroToTerminal,
  /// A vertex that cannot be reached from the root is removed.
  RemoveUnreachable,
  /// A node with two unit edges into the same child is bypassed.
  SkipVariable,
  /// Two equal nodes of the same height are merged.
  Merge,
};

std::string to_string(ReductionRule rule);

/// Lexicographic termination measure:
/// (|V|, 2|V| - deg(t), sum of delta at height 1, ..., at height H).
struct ReductionMeasure {
  std::vector<std::size_t> components;
  friend auto operator<=>(const ReductionMeasure&, const ReductionMeasure&) = default;
  friend bool operator==(const ReductionMeasure&, const ReductionMeasure&) = default;
};

ReductionMeasure measure(const Sqmdd& d, const Tolerance& tol = {});

/// One place a reduction rule applies.
struct Redex {
  ReductionRule rule = ReductionRule::Merge;
  NodeId node = kTerminal;
  /// Second node for Merge (the surviving one); the edge index for
  /// ZeroToTerminal.
  NodeId other = kTerminal;
};

struct RewriteStep {
  Redex redex;
  ReductionMeasure before;
  ReductionMeasure after;
};

struct ReductionResult {
  Sqmdd diagram;
  std::vector<RewriteStep> trace;
};

/// All redexes, ordered bottom-up (the order reduce() applies them in).
std::vector<Redex> find_redexes(const Sqmdd& d, const Tolerance& tol = {});
/// Applies one rewrite. The redex must come from find_redexes(d).
Sqmdd apply_rewrite(const Sqmdd& d, const Redex& r, const Tolerance& tol = {});

/// Rewrites to the irreducible form, applying the first redex each time.
ReductionResult reduce(const Sqmdd& d, const Tolerance& tol = {});
/// Same fixpoint reached by applying uniformly random redexes.
ReductionResult reduce_randomized(const Sqmdd& d, std::mt19937_64& rng,
                                  const Tolerance& tol = {});

bool is_irreducible(const Sqmdd& d, const Tolerance& tol = {});

/// Unique irreducible diagram denoting v (length must be a power of two).
Sqmdd canonical_from_vector(std::span<const Amplitude> v, const Tolerance& tol = {});

/// Structural equality of irreducible diagrams. Throws ShapeError when either
/// side is reducible.
bool iso_equal(const Sqmdd& a, const Sqmdd& b, const Tolerance& tol = {});

/// Renumbers vertices 1..n in breadth-first order from the root (0-edge
/// first) and drops unreachable ones.
Sqmdd renumber(const Sqmdd& d);

// ---------------------------------------------------------------------------
// Algebra. Every operation returns an irreducible diagram.

Sqmdd tensor(const Sqmdd& a, const Sqmdd& b);
Sqmdd scale(const Sqmdd& d, Amplitude c);
Sqmdd add(const Sqmdd& a, const Sqmdd& b);
/// Exchanges qubits k-1 and k (levels k and k+1, counted from 1 at the top).
Sqmdd swap_adjacent_levels(const Sqmdd& d, std::size_t k);
/// Output i of the result is output src[i] of d.
Sqmdd permute_outputs(const Sqmdd& d, std::span<const std::size_t> src);
/// f'(.., y at min(i,j), ..) = f(x_i = x_j = y); the other qubit is removed.
Sqmdd z_merge_outputs(const Sqmdd& d, std::size_t i, std::size_t j);
/// Sums the two cofactors of output i.
Sqmdd plug_bra_plus(const Sqmdd& d, std::size_t i);
/// Cofactor of output i fixed to `bit`.
Sqmdd restrict_output(const Sqmdd& d, std::size_t i, int bit);

}  // namespace zhdd
