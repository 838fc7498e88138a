#pragma once

// Independent helpers shared by the tests: hand-built diagrams, the
// worked example state and dense reference implementations of the contraction
// primitives.

#include <algorithm>
#include <cmath>
#include <vector>

#include "zhdd/dense.hpp"
#include "zhdd/sqmdd.hpp"
#include "zhdd/zh_term.hpp"

namespace zhdd::testing {

inline const double kRt2 = std::sqrt(2.0);

/// The 16-entry worked example state: (3/sqrt2) * (1,0,0,0, 1/sqrt2 x4, -1/sqrt2,0,0,0, -i,0,-i,0).
inline DenseVector worked_example_vector() {
  const Amplitude p = 3.0 / kRt2;
  const Amplitude a = 1.0 / kRt2;
  const Amplitude mi{0.0, -1.0};
  return {p, 0, 0, 0, p * a, p * a, p * a, p * a, -p * a, 0, 0, 0, p * mi, 0, p * mi, 0};
}

/// A height-1 diagram with one vertex (a, b).
inline Sqmdd single_node(Amplitude a, Amplitude b, Amplitude s = 1.0) {
  Sqmdd d;
  d.scalar = s;
  d.height = 1;
  d.root = 1;
  d.nodes[1] = SqmddNode{1, kTerminal, a, kTerminal, b};
  return d;
}

inline DenseVector basis(std::size_t qubits, std::size_t index) {
  DenseVector v(std::size_t{1} << qubits, 0.0);
  v[index] = 1.0;
  return v;
}

/// Restriction of v to x_i = x_j; the later of the two qubits is removed
/// (qubit 0 most significant).
inline DenseVector dense_diagonal(const DenseVector& v, std::size_t qubits, std::size_t i, std::size_t j) {
  const std::size_t drop = std::max(i, j);
  DenseVector out(v.size() / 2, 0.0);
  for (std::size_t x = 0; x < v.size(); ++x) {
    const auto bit = [&](std::size_t q) { return (x >> (qubits - 1 - q)) & 1U; };
    if (bit(i) != bit(j)) continue;
    std::size_t y = 0;
    for (std::size_t q = 0; q < qubits; ++q) {
      if (q != drop) y = (y << 1) | bit(q);
    }
    out[y] += v[x];
  }
  return out;
}

/// Sum of the two cofactors of v along qubit i.
inline DenseVector dense_cofactor_sum(const DenseVector& v, std::size_t qubits, std::size_t i) {
  DenseVector out(v.size() / 2, 0.0);
  for (std::size_t x = 0; x < v.size(); ++x) {
    std::size_t y = 0;
    for (std::size_t q = 0; q < qubits; ++q) {
      if (q != i) y = (y << 1) | ((x >> (qubits - 1 - q)) & 1U);
    }
    out[y] += v[x];
  }
  return out;
}

/// Number of non-wiring generators in a term.
inline std::size_t box_count(const ZhTerm& t) {
  if (t.op() != ZhTerm::Op::Gen) return box_count(t.first()) + box_count(t.second());
  switch (t.gen().kind) {
    case GeneratorKind::Identity:
    case GeneratorKind::Swap:
    case GeneratorKind::Cap:
    case GeneratorKind::Cup:
      return 0;
    default:
      return 1;
  }
}

}  // namespace zhdd::testing
