#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "zhdd/semantics.hpp"
#include "zhdd/sqmdd.hpp"
#include "zhdd/zh_term.hpp"

namespace zhdd {

/// Layered ZH state denoting the same vector as d.
///
/// Each layer is one output wire, Z-copied into one gadget per node of that
/// height (control), the root is activated by |1>, gadget legs carry weight
/// boxes into the fan-in of the child, and the terminal's fan-in is closed by
/// the <1| effect. A layer without nodes is a |+> state.
ZhTerm sqmdd_to_zh(const Sqmdd& d);

/// State of a Z-spider or H-box with k legs, as an irreducible diagram.
Sqmdd generator_state_sqmdd(GeneratorKind kind, std::size_t legs, Amplitude label = {-1.0, 0.0});

struct TranslateOptions {
  /// Compare every pipeline step against the dense interpretation.
  bool assert_stages = false;
  Tolerance tol;
  InterpretOptions interp;
  /// Cap on the number of open legs during contraction.
  std::size_t max_height = 64;
};

/// Normal form of the state ψ(t): an irreducible diagram whose vector is the
/// interpretation of to_state_form(t).
Sqmdd zh_to_sqmdd(const ZhTerm& t, const TranslateOptions& opts = {});

/// Inverse of sqmdd_to_zh. Fan-ins may also be X-spiders k -> 1. Throws
/// ShapeError naming the first instance that does not fit.
Sqmdd sqmdd_read_back(const ZhTerm& t);

/// Plugs |bit> onto output 0 of a state.
ZhTerm plug_top_output(const ZhTerm& state, int bit);

struct Propagation {
  ZhTerm term;
  /// One line per rewrite applied.
  std::vector<std::string> trace;
};

/// Pushes a basis state plugged on the top wire of a layered state through
/// the diagram, giving the layered form of the corresponding cofactor. A
/// basis state entering a single weight box is also accepted.
Propagation ket0_propagate(const ZhTerm& plugged);

}  // namespace zhdd
