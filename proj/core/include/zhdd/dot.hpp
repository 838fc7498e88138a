#pragma once

#include <string>

#include "zhdd/sqmdd.hpp"
#include "zhdd/zh_term.hpp"

namespace zhdd {

/// Graphviz rendering of a diagram: the terminal is a box, 0-edges are
/// dashed, weights label the edges (1 is omitted) and the scalar sits on an
/// edge into the root. H is noted when the root sits below it.
std::string sqmdd_to_dot(const Sqmdd& d);

/// Graphviz rendering of the open graph of a term.
std::string term_to_dot(const ZhTerm& t);

}  // namespace zhdd
