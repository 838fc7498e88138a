#pragma once

#include <cstddef>
#include <random>
#include <span>

#include "zhdd/sqmdd.hpp"
#include "zhdd/zh_term.hpp"

namespace zhdd {

/// Weight drawn from {0, +-1, +-i, +-1/2, 1+i} or, one time in four, a
/// random complex number.
Amplitude random_weight(std::mt19937_64& rng);
/// Same distribution without 0.
Amplitude random_nonzero_weight(std::mt19937_64& rng);

struct RandomSqmddOptions {
  std::size_t height = 4;
  /// Maximum number of vertices per height.
  std::size_t max_width = 3;
  /// Probability that a height gets no vertex (a skipped level).
  double skip_probability = 0.15;
};

/// Valid, generally non-canonical diagram.
Sqmdd random_sqmdd(std::mt19937_64& rng, const RandomSqmddOptions& opts = {});

/// Complete unshared binary tree denoting v.
Sqmdd naive_tree(std::span<const Amplitude> v);

/// Applies `steps` random semantics-preserving de-reductions: weight
/// pushes, vertex duplication, redundant vertices on long edges, zero edges
/// pointing at real vertices and zero vertices.
Sqmdd denormalize(const Sqmdd& d, std::mt19937_64& rng, std::size_t steps);

/// A diagram with at least one redex of `rule`, of the given height.
Sqmdd targeted_instance(ReductionRule rule, std::mt19937_64& rng, std::size_t height);

struct RandomTermOptions {
  std::size_t max_generators = 12;
  /// Bound on inputs + outputs of the result.
  std::size_t max_boundary = 8;
};

/// Random core term built from Z-spiders, H-boxes with random labels, swaps,
/// caps and cups.
ZhTerm random_zh_term(std::mt19937_64& rng, const RandomTermOptions& opts = {});

}  // namespace zhdd
