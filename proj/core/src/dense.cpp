#include "zhdd/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace zhdd {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t log2_exact(std::size_t n) {
  if (!is_power_of_two(n)) throw ConstructionError("size is not a power of two");
  std::size_t k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {
  if (!is_power_of_two(rows) || !is_power_of_two(cols)) {
    throw ConstructionError("matrix dimensions must be powers of two");
  }
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Amplitude> entries)
    : DenseMatrix(rows, cols) {
  if (entries.size() != rows * cols) throw ConstructionError("entry count mismatch");
  data_ = std::move(entries);
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::column(std::vector<Amplitude> entries) {
  const std::size_t n = entries.size();
  return DenseMatrix(n, 1, std::move(entries));
}

std::size_t DenseMatrix::row_qubits() const { return log2_exact(rows_); }
std::size_t DenseMatrix::col_qubits() const { return log2_exact(cols_); }

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

DenseMatrix DenseMatrix::scaled(Amplitude c) const {
  DenseMatrix out = *this;
  for (auto& x : out.data_) x *= c;
  return out;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw ConstructionError("multiply: shape mismatch");
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Amplitude x = a(i, k);
      if (x == Amplitude{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const Amplitude x = a(ar, ac);
      if (x == Amplitude{}) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          out(ar * b.rows() + br, ac * b.cols() + bc) = x * b(br, bc);
        }
      }
    }
  }
  return out;
}

DenseVector kron(const DenseVector& a, const DenseVector& b) {
  DenseVector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

double max_deviation(std::span<const Amplitude> a, std::span<const Amplitude> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double dev = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dev = std::max({dev, std::abs(a[i].real() - b[i].real()),
                    std::abs(a[i].imag() - b[i].imag())});
  }
  return dev;
}

double max_deviation(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return std::numeric_limits<double>::infinity();
  }
  return max_deviation(a.entries(), b.entries());
}

bool matrices_equal(const DenseMatrix& a, const DenseMatrix& b, const Tolerance& tol) {
  return max_deviation(a, b) <= tol.eps;
}

bool vectors_equal(std::span<const Amplitude> a, std::span<const Amplitude> b,
                   const Tolerance& tol) {
  return max_deviation(a, b) <= tol.eps;
}

std::optional<Amplitude> colinear(const DenseMatrix& a, const DenseMatrix& b,
                                  const Tolerance& tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const auto eb = b.entries();
  std::size_t pivot = 0;
  for (std::size_t i = 1; i < eb.size(); ++i) {
    if (std::abs(eb[i]) > std::abs(eb[pivot])) pivot = i;
  }
  if (near_zero(eb[pivot], tol.eps)) {
    // b vanishes: only the zero matrix is a multiple of it.
    for (Amplitude x : a.entries()) {
      if (!near_zero(x, tol.eps)) return std::nullopt;
    }
    return Amplitude{1.0, 0.0};
  }
  const Amplitude lambda = a.entries()[pivot] / eb[pivot];
  if (!matrices_equal(a, b.scaled(lambda), tol)) return std::nullopt;
  return lambda;
}

namespace dense {

namespace {
std::size_t qubits_of(const DenseVector& v) { return log2_exact(v.size()); }

std::size_t bit_of(std::size_t index, std::size_t qubit, std::size_t n) {
  return (index >> (n - 1 - qubit)) & 1U;
}
}  // namespace

DenseVector permute_qubits(const DenseVector& v, std::span<const std::size_t> src) {
  const std::size_t n = qubits_of(v);
  if (src.size() != n) throw ConstructionError("permute_qubits: size mismatch");
  DenseVector out(v.size());
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    std::size_t old = 0;
    for (std::size_t k = 0; k < n; ++k) {
      old |= bit_of(idx, k, n) << (n - 1 - src[k]);
    }
    out[idx] = v[old];
  }
  return out;
}

DenseVector swap_qubits(const DenseVector& v, std::size_t i, std::size_t j) {
  const std::size_t n = qubits_of(v);
  if (i >= n || j >= n) throw ConstructionError("swap_qubits: index out of range");
  std::vector<std::size_t> src(n);
  for (std::size_t k = 0; k < n; ++k) src[k] = k;
  std::swap(src[i], src[j]);
  return permute_qubits(v, src);
}

DenseVector restrict_qubit(const DenseVector& v, std::size_t i, int bit) {
  const std::size_t n = qubits_of(v);
  if (i >= n) throw ConstructionError("restrict_qubit: index out of range");
  DenseVector out(v.size() / 2);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    // Insert `bit` at position i of the (n-1)-bit index.
    const std::size_t low_bits = n - 1 - i;
    const std::size_t high = idx >> low_bits;
    const std::size_t low = idx & ((std::size_t{1} << low_bits) - 1);
    const std::size_t full = (((high << 1) | static_cast<std::size_t>(bit)) << low_bits) | low;
    out[idx] = v[full];
  }
  return out;
}

DenseVector sum_out(const DenseVector& v, std::size_t i) {
  DenseVector a = restrict_qubit(v, i, 0);
  const DenseVector b = restrict_qubit(v, i, 1);
  for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}

DenseVector diagonal_merge(const DenseVector& v, std::size_t i, std::size_t j) {
  const std::size_t n = qubits_of(v);
  if (i == j || i >= n || j >= n) throw ConstructionError("diagonal_merge: bad indices");
  const std::size_t keep = std::min(i, j);
  const std::size_t drop = std::max(i, j);
  DenseVector out(v.size() / 2);
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    // idx enumerates n-1 qubits; re-insert the dropped qubit equal to `keep`.
    const std::size_t m = n - 1;
    std::size_t full = 0;
    std::size_t src_pos = 0;
    const std::size_t y = bit_of(idx, keep, m);
    for (std::size_t q = 0; q < n; ++q) {
      std::size_t b = 0;
      if (q == drop) {
        b = y;
      } else {
        b = bit_of(idx, src_pos, m);
        ++src_pos;
      }
      full |= b << (n - 1 - q);
    }
    out[idx] = v[full];
  }
  return out;
}

}  // namespace dense

}  // namespace zhdd
