#include "zhdd/semantics.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace zhdd {

namespace {

std::size_t bit_at(std::size_t index, std::size_t pos, std::size_t width) {
  return (index >> (width - 1 - pos)) & 1U;
}

}  // namespace

DenseMatrix generator_matrix(const Generator& g) {
  g.validate();
  const std::size_t n = g.inputs;
  const std::size_t m = g.outputs;
  DenseMatrix out(std::size_t{1} << m, std::size_t{1} << n);
  const std::size_t rows = out.rows();
  const std::size_t cols = out.cols();
  switch (g.kind) {
    case GeneratorKind::ZSpider:
      out(0, 0) = 1.0;
      out(rows - 1, cols - 1) += 1.0;
      break;
    case GeneratorKind::HBox:
      for (auto& x : out.entries()) x = 1.0;
      out(rows - 1, cols - 1) = g.label;
      break;
    case GeneratorKind::Identity:
      out = DenseMatrix::identity(2);
      break;
    case GeneratorKind::Swap:
      out(0, 0) = out(1, 2) = out(2, 1) = out(3, 3) = 1.0;
      break;
    case GeneratorKind::Cap:
      out(0, 0) = out(3, 0) = 1.0;
      break;
    case GeneratorKind::Cup:
      out(0, 0) = out(0, 3) = 1.0;
      break;
    case GeneratorKind::XSpider:
    case GeneratorKind::NotXSpider: {
      const std::size_t want = g.kind == GeneratorKind::XSpider ? 0 : 1;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          const auto parity = static_cast<std::size_t>(std::popcount(r) + std::popcount(c)) & 1U;
          if (parity == want) out(r, c) = 1.0;
        }
      }
      break;
    }
    case GeneratorKind::Monoid:
      for (std::size_t c = 0; c < cols; ++c) {
        if (c == 0) out(0, c) = 1.0;
        if (std::popcount(c) == 1) out(1, c) = 1.0;
      }
      break;
    case GeneratorKind::Gadget:
      // Inputs (control, x); control 0 routes x to output 0, control 1 to output 1.
      out = DenseMatrix(4, 4, {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0});
      break;
    case GeneratorKind::WeightBox:
      out(0, 0) = 1.0;
      out(1, 1) = g.label;
      break;
    case GeneratorKind::KetZero:
      out(0, 0) = 1.0;
      break;
    case GeneratorKind::KetOne:
      out(1, 0) = 1.0;
      break;
    case GeneratorKind::KetPlus:
      out(0, 0) = out(1, 0) = 1.0;
      break;
    case GeneratorKind::BraPlus:
      out(0, 0) = out(0, 1) = 1.0;
      break;
  }
  return out;
}

namespace {

// Tensor over (open wires, term inputs): index = wires * 2^n + x.
class Evaluator {
 public:
  Evaluator(std::size_t inputs, const InterpretOptions& opts)
      : n_(inputs), opts_(opts), wires_(inputs), data_(std::size_t{1} << (2 * inputs)) {
    check_width(2 * inputs);
    const std::size_t dim = std::size_t{1} << inputs;
    for (std::size_t x = 0; x < dim; ++x) data_[x * dim + x] = 1.0;
  }

  void apply(const ZhTerm& t, std::size_t offset) {
    if (t.is_wiring()) {
      permute(t.permutation(), offset);
      return;
    }
    switch (t.op()) {
      case ZhTerm::Op::Seq:
        apply(t.first(), offset);
        apply(t.second(), offset);
        return;
      case ZhTerm::Op::Par:
        apply(t.first(), offset);
        apply(t.second(), offset + t.first().outputs());
        return;
      case ZhTerm::Op::Gen:
        apply_matrix(generator_matrix(t.gen()), t.gen().inputs, t.gen().outputs, offset);
        return;
    }
  }

  DenseMatrix result() const {
    const std::size_t rows = std::size_t{1} << wires_;
    const std::size_t cols = std::size_t{1} << n_;
    return DenseMatrix(rows, cols, data_);
  }

 private:
  void check_width(std::size_t width) const {
    if (width > opts_.max_workspace_qubits) {
      throw ResourceError("interpretation needs " + std::to_string(width) +
                          " qubits of workspace, above the cap of " +
                          std::to_string(opts_.max_workspace_qubits));
    }
  }

  void permute(const std::vector<std::size_t>& perm, std::size_t offset) {
    const std::size_t k = perm.size();
    bool trivial = true;
    for (std::size_t i = 0; i < k; ++i) trivial = trivial && perm[i] == i;
    if (trivial) return;
    const std::size_t cols = std::size_t{1} << n_;
    std::vector<Amplitude> out(data_.size());
    const std::size_t rows = std::size_t{1} << wires_;
    for (std::size_t w = 0; w < rows; ++w) {
      std::size_t src = w;
      for (std::size_t i = 0; i < k; ++i) {
        const std::size_t pos_new = offset + i;
        const std::size_t pos_old = offset + perm[i];
        const std::size_t shift = wires_ - 1 - pos_old;
        src &= ~(std::size_t{1} << shift);
        src |= bit_at(w, pos_new, wires_) << shift;
      }
      std::copy_n(data_.begin() + static_cast<long>(src * cols), cols,
                  out.begin() + static_cast<long>(w * cols));
    }
    data_ = std::move(out);
  }

  void apply_matrix(const DenseMatrix& g, std::size_t a, std::size_t b, std::size_t offset) {
    const std::size_t k2 = wires_ - a + b;
    check_width(k2 + n_);
    const std::size_t cols = std::size_t{1} << n_;
    const std::size_t post = wires_ - offset - a;
    const std::size_t pre_dim = std::size_t{1} << offset;
    const std::size_t post_dim = std::size_t{1} << post;
    const std::size_t in_dim = std::size_t{1} << a;
    const std::size_t out_dim = std::size_t{1} << b;
    std::vector<Amplitude> out((std::size_t{1} << k2) * cols);
    for (std::size_t pre = 0; pre < pre_dim; ++pre) {
      for (std::size_t i = 0; i < in_dim; ++i) {
        for (std::size_t p = 0; p < post_dim; ++p) {
          const std::size_t src_row = ((pre * in_dim + i) * post_dim + p) * cols;
          for (std::size_t o = 0; o < out_dim; ++o) {
            const Amplitude c = g(o, i);
            if (c == Amplitude{}) continue;
            const std::size_t dst_row = ((pre * out_dim + o) * post_dim + p) * cols;
            for (std::size_t x = 0; x < cols; ++x) out[dst_row + x] += c * data_[src_row + x];
          }
        }
      }
    }
    data_ = std::move(out);
    wires_ = k2;
  }

  std::size_t n_;
  InterpretOptions opts_;
  std::size_t wires_;
  std::vector<Amplitude> data_;
};

}  // namespace

DenseMatrix interpret_zh(const ZhTerm& t, const InterpretOptions& opts) {
  if (!t.valid()) throw ConstructionError("interpret_zh on an empty term");
  if (t.inputs() + t.outputs() > opts.max_qubits) {
    throw ResourceError("term has " + std::to_string(t.inputs() + t.outputs()) +
                        " boundary wires, above the cap of " + std::to_string(opts.max_qubits));
  }
  Evaluator ev(t.inputs(), opts);
  ev.apply(t, 0);
  return ev.result();
}

DenseVector interpret_sqmdd(const Sqmdd& d, const InterpretOptions& opts) {
  require_valid(d);
  if (d.height > opts.max_qubits) {
    throw ResourceError("diagram height " + std::to_string(d.height) + " above the cap of " +
                        std::to_string(opts.max_qubits));
  }
  DenseVector out(std::size_t{1} << d.height);
  auto fill = [&](auto& self, NodeId u, std::size_t level, std::size_t offset,
                  Amplitude factor) -> void {
    if (factor == Amplitude{}) return;
    if (level == 0) {
      out[offset] = factor;
      return;
    }
    const std::size_t half = std::size_t{1} << (level - 1);
    if (d.node_height(u) < level) {
      self(self, u, level - 1, offset, factor);
      std::copy_n(out.begin() + static_cast<long>(offset), half,
                  out.begin() + static_cast<long>(offset + half));
      return;
    }
    const SqmddNode& n = d.node(u);
    self(self, n.child0, level - 1, offset, factor * n.w0);
    self(self, n.child1, level - 1, offset + half, factor * n.w1);
  };
  fill(fill, d.root, d.height, 0, d.scalar);
  return out;
}

DenseVector contract_network_dense(const TensorNetwork& net, const InterpretOptions& opts) {
  net.check();
  DenseVector v{net.scalar};
  std::vector<LegRef> legs;
  auto find = [&](const LegRef& r) {
    return static_cast<std::size_t>(std::find(legs.begin(), legs.end(), r) - legs.begin());
  };
  auto contract = [&](const LegRef& a, const LegRef& b) {
    std::size_t i = find(a);
    std::size_t j = find(b);
    v = dense::diagonal_merge(v, i, j);
    const std::size_t keep = std::min(i, j);
    legs.erase(legs.begin() + static_cast<long>(std::max(i, j)));
    v = dense::sum_out(v, keep);
    legs.erase(legs.begin() + static_cast<long>(keep));
  };
  std::set<std::size_t> placed;
  for (std::size_t inst = 0; inst < net.instances.size(); ++inst) {
    const StateInstance& s = net.instances[inst];
    if (legs.size() + s.legs > opts.max_workspace_qubits) {
      throw ResourceError("network contraction exceeds the workspace cap");
    }
    const Generator g = s.kind == GeneratorKind::ZSpider ? Generator::z_spider(0, s.legs)
                                                         : Generator::h_box(0, s.legs, s.label);
    v = kron(v, as_vector(generator_matrix(g)));
    for (std::size_t l = 0; l < s.legs; ++l) legs.push_back({inst, l});
    placed.insert(inst);
    for (const auto& [a, b] : net.internal_edges) {
      const bool ready = placed.contains(a.inst) && placed.contains(b.inst);
      const bool fresh = a.inst == inst || b.inst == inst;
      if (ready && fresh) contract(a, b);
    }
  }
  std::vector<std::size_t> src;
  for (const auto& r : net.outputs) src.push_back(find(r));
  if (src.empty()) return v;
  return dense::permute_qubits(v, src);
}

DenseVector as_vector(const DenseMatrix& m) {
  if (m.cols() != 1) throw ShapeError("expected a state (single column)");
  return DenseVector(m.entries().begin(), m.entries().end());
}

}  // namespace zhdd
