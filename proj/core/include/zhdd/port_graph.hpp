#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <vector>

#include "zhdd/zh_term.hpp"

namespace zhdd {

/// One end of a wire in the open graph of a term.
struct Port {
  enum class Kind { In, Out, BoundaryIn, BoundaryOut };
  Kind kind = Kind::In;
  /// Instance index for In/Out; unused for boundary ports.
  std::size_t inst = 0;
  std::size_t index = 0;

  bool is_boundary() const { return kind == Kind::BoundaryIn || kind == Kind::BoundaryOut; }
  friend auto operator<=>(const Port&, const Port&) = default;
};

/// The open graph of a term: generator instances and the wires between their
/// ports. Identity and Swap are dissolved into plain links; Cap and Cup are
/// resolved into direct links, every closed loop contributing a factor 2.
struct PortGraph {
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::vector<Generator> instances;
  /// Symmetric: partner.at(p) is the port wired to p.
  std::map<Port, Port> partner;
  Amplitude scalar{1.0, 0.0};

  const Port& other(const Port& p) const { return partner.at(p); }
  /// All ports of an instance, inputs first.
  std::vector<Port> ports_of(std::size_t inst) const;
};

PortGraph to_port_graph(const ZhTerm& t);

}  // namespace zhdd
