#pragma once

#include <cstddef>
#include <vector>

#include "zhdd/zh_term.hpp"

namespace zhdd {

/// A generator in state form: a Z-spider or H-box with `legs` outputs.
struct StateInstance {
  GeneratorKind kind = GeneratorKind::ZSpider;
  std::size_t legs = 0;
  Amplitude label{-1.0, 0.0};
};

/// Leg `leg` of instance `inst`.
struct LegRef {
  std::size_t inst = 0;
  std::size_t leg = 0;
  friend auto operator<=>(const LegRef&, const LegRef&) = default;
};

/// State-form network of a sugar-free term.
///
/// Every leg appears either in exactly one internal edge or exactly once in
/// `outputs`. The outputs follow the map/state duality order of the source
/// term; `bent[j]` marks the ones that came from term inputs.
struct TensorNetwork {
  std::vector<StateInstance> instances;
  std::vector<std::pair<LegRef, LegRef>> internal_edges;
  std::vector<LegRef> outputs;
  std::vector<bool> bent;
  Amplitude scalar{1.0, 0.0};

  /// Throws ShapeError when the leg bookkeeping is inconsistent.
  void check() const;
};

/// Flattens a sugar-free term (ShapeError otherwise). Identity and Swap
/// disappear, Cap and Cup become links, 0-leg generators fold into the scalar
/// and a wire running straight from a term input to a term output becomes a
/// two-legged Z instance.
TensorNetwork flatten_to_network(const ZhTerm& t);

}  // namespace zhdd
