#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>

#include "zhdd/error.hpp"

namespace zhdd {

using Amplitude = std::complex<double>;

inline constexpr double kDefaultEpsilon = 1e-9;

/// Comparison tolerance (max-norm).
struct Tolerance {
  double eps = kDefaultEpsilon;

  constexpr Tolerance() = default;
  explicit Tolerance(double e) : eps(e) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw ConstructionError("tolerance must be a positive finite number");
    }
  }
};

inline bool is_finite(Amplitude a) {
  return std::isfinite(a.real()) && std::isfinite(a.imag());
}

/// Throws ConstructionError unless `a` is finite.
inline Amplitude checked_amplitude(Amplitude a) {
  if (!is_finite(a)) throw ConstructionError("amplitude must be finite");
  return a;
}

inline bool near(Amplitude a, Amplitude b, double eps = kDefaultEpsilon) {
  return std::abs(a.real() - b.real()) <= eps &&
         std::abs(a.imag() - b.imag()) <= eps;
}

inline bool near_zero(Amplitude a, double eps = kDefaultEpsilon) {
  return near(a, Amplitude{0.0, 0.0}, eps);
}

inline bool near_one(Amplitude a, double eps = kDefaultEpsilon) {
  return near(a, Amplitude{1.0, 0.0}, eps);
}

/// Snaps values within eps of 0 or 1 to exactly 0 or 1.
inline Amplitude snap(Amplitude a, double eps = kDefaultEpsilon) {
  if (near_zero(a, eps)) return {0.0, 0.0};
  if (near_one(a, eps)) return {1.0, 0.0};
  return a;
}

/// Integer grid coordinates of an amplitude, used for hashing weights.
struct GridPoint {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline GridPoint to_grid(Amplitude a, double eps = kDefaultEpsilon) {
  return {static_cast<std::int64_t>(std::llround(a.real() / eps)),
          static_cast<std::int64_t>(std::llround(a.imag() / eps))};
}

}  // namespace zhdd
