#pragma once

#include <cstddef>

#include "zhdd/dense.hpp"
#include "zhdd/sqmdd.hpp"
#include "zhdd/tensor_network.hpp"
#include "zhdd/zh_term.hpp"

namespace zhdd {

struct InterpretOptions {
  /// Cap on inputs + outputs of the interpreted term (or on H for diagrams).
  std::size_t max_qubits = 16;
  /// Cap on open wires plus inputs at any point of the evaluation.
  std::size_t max_workspace_qubits = 24;
};

/// Matrix of a single generator (sugar included), 2^outputs x 2^inputs.
DenseMatrix generator_matrix(const Generator& g);

/// Standard interpretation of a term. Throws ResourceError above the caps.
DenseMatrix interpret_zh(const ZhTerm& t, const InterpretOptions& opts = {});

/// Vector denoted by a diagram, length 2^H.
DenseVector interpret_sqmdd(const Sqmdd& d, const InterpretOptions& opts = {});

/// Dense contraction of a network: the state on its output legs.
DenseVector contract_network_dense(const TensorNetwork& net, const InterpretOptions& opts = {});

/// Column vector view of a 2^m x 1 matrix.
DenseVector as_vector(const DenseMatrix& m);

}  // namespace zhdd
