#include <algorithm>
#include <numeric>

#include "sqmdd_builder.hpp"
#include "zhdd/sqmdd.hpp"

namespace zhdd {

using detail::Builder;
using detail::Edge;

namespace {

void check_output(const Sqmdd& d, std::size_t i, const char* op) {
  if (i >= d.height) {
    throw ShapeError(std::string(op) + ": output " + std::to_string(i) + " out of range for " +
                     std::to_string(d.height) + " qubits");
  }
}

}  // namespace

Sqmdd tensor(const Sqmdd& a, const Sqmdd& b) {
  require_valid(a);
  require_valid(b);
  Builder bld;
  const Edge eb = bld.import(b);
  std::vector<std::pair<std::size_t, NodeId>> order;
  for (const auto& [id, n] : a.nodes) order.emplace_back(n.height, id);
  std::sort(order.begin(), order.end());
  std::map<NodeId, Edge> mapped{{kTerminal, eb}};
  for (const auto& [h, id] : order) {
    const SqmddNode& n = a.nodes.at(id);
    mapped[id] = bld.make(h + b.height, bld.scaled(mapped.at(n.child0), n.w0),
                          bld.scaled(mapped.at(n.child1), n.w1));
  }
  return bld.extract(bld.scaled(mapped.at(a.root), a.scalar), a.height + b.height);
}

Sqmdd scale(const Sqmdd& d, Amplitude c) {
  require_valid(d);
  Builder bld;
  return bld.extract(bld.scaled(bld.import(d), checked_amplitude(c)), d.height);
}

Sqmdd add(const Sqmdd& a, const Sqmdd& b) {
  require_valid(a);
  require_valid(b);
  if (a.height != b.height) throw ShapeError("add: diagrams of different height");
  Builder bld;
  const Edge ea = bld.import(a);
  const Edge eb = bld.import(b);
  return bld.extract(bld.add(ea, eb, a.height), a.height);
}

Sqmdd swap_adjacent_levels(const Sqmdd& d, std::size_t k) {
  require_valid(d);
  if (k == 0 || k >= d.height) throw ShapeError("swap_adjacent_levels: level out of range");
  Builder bld;
  return bld.extract(bld.swap_with_next(bld.import(d), d.height, k - 1), d.height);
}

Sqmdd permute_outputs(const Sqmdd& d, std::span<const std::size_t> src) {
  require_valid(d);
  if (src.size() != d.height) throw ShapeError("permute_outputs: permutation size mismatch");
  std::vector<bool> seen(src.size(), false);
  for (std::size_t s : src) {
    if (s >= src.size() || seen[s]) throw ShapeError("permute_outputs: not a permutation");
    seen[s] = true;
  }
  Builder bld;
  Edge e = bld.import(d);
  std::vector<std::size_t> at(src.size());
  std::iota(at.begin(), at.end(), 0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    std::size_t j = static_cast<std::size_t>(std::find(at.begin(), at.end(), src[i]) - at.begin());
    for (; j > i; --j) {
      e = bld.swap_with_next(e, d.height, j - 1);
      std::swap(at[j - 1], at[j]);
    }
  }
  return bld.extract(e, d.height);
}

Sqmdd z_merge_outputs(const Sqmdd& d, std::size_t i, std::size_t j) {
  require_valid(d);
  check_output(d, i, "z_merge_outputs");
  check_output(d, j, "z_merge_outputs");
  if (i == j) throw ShapeError("z_merge_outputs: outputs must differ");
  Builder bld;
  return bld.extract(bld.diagonal(bld.import(d), d.height, std::min(i, j), std::max(i, j)),
                     d.height - 1);
}

Sqmdd plug_bra_plus(const Sqmdd& d, std::size_t i) {
  require_valid(d);
  check_output(d, i, "plug_bra_plus");
  Builder bld;
  return bld.extract(bld.plus_sum(bld.import(d), d.height, i), d.height - 1);
}

Sqmdd restrict_output(const Sqmdd& d, std::size_t i, int bit) {
  require_valid(d);
  check_output(d, i, "restrict_output");
  Builder bld;
  return bld.extract(bld.restrict(bld.import(d), d.height, i, bit), d.height - 1);
}

}  // namespace zhdd
