#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "zhdd/amplitude.hpp"

namespace zhdd {

/// Row-major complex matrix of shape 2^m x 2^n.
class DenseMatrix {
 public:
  DenseMatrix() : DenseMatrix(1, 1) {}
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Amplitude> entries);

  static DenseMatrix identity(std::size_t dim);
  /// Column vector.
  static DenseMatrix column(std::vector<Amplitude> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t row_qubits() const;
  std::size_t col_qubits() const;

  Amplitude& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Amplitude operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Amplitude> entries() const { return data_; }
  std::span<Amplitude> entries() { return data_; }

  DenseMatrix adjoint() const;
  DenseMatrix scaled(Amplitude c) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Amplitude> data_;
};

/// State vectors are single-column matrices.
using DenseVector = std::vector<Amplitude>;

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
DenseVector kron(const DenseVector& a, const DenseVector& b);

/// Max-norm distance; infinity when the shapes differ.
double max_deviation(const DenseMatrix& a, const DenseMatrix& b);
double max_deviation(std::span<const Amplitude> a, std::span<const Amplitude> b);

bool matrices_equal(const DenseMatrix& a, const DenseMatrix& b, const Tolerance& tol = {});
bool vectors_equal(std::span<const Amplitude> a, std::span<const Amplitude> b,
                   const Tolerance& tol = {});

/// Returns lambda with a = lambda * b, when it exists. lambda is read off the
/// largest-magnitude entry of b. Two zero matrices are colinear with 1.
std::optional<Amplitude> colinear(const DenseMatrix& a, const DenseMatrix& b,
                                  const Tolerance& tol = {});

std::size_t log2_exact(std::size_t n);
bool is_power_of_two(std::size_t n);

/// Dense reference implementations of the state operations performed on
/// decision diagrams. Qubit 0 is the most significant index bit.
namespace dense {

DenseVector swap_qubits(const DenseVector& v, std::size_t i, std::size_t j);
/// out[k] = v[index with qubit k moved from position src[k]].
DenseVector permute_qubits(const DenseVector& v, std::span<const std::size_t> src);
/// Diagonal restriction: the new qubit sits at min(i, j), the other is removed.
DenseVector diagonal_merge(const DenseVector& v, std::size_t i, std::size_t j);
/// Sum of the two cofactors of qubit i.
DenseVector sum_out(const DenseVector& v, std::size_t i);
/// Cofactor of qubit i fixed to `bit`.
DenseVector restrict_qubit(const DenseVector& v, std::size_t i, int bit);

}  // namespace dense

}  // namespace zhdd
