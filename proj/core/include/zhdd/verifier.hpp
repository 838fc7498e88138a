#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "zhdd/semantics.hpp"
#include "zhdd/zh_term.hpp"

namespace zhdd {

/// Parameters a claim is instantiated with.
struct ClaimParams {
  std::size_t n = 0;
  std::size_t m = 0;
  Amplitude r1{-1.0, 0.0};
  Amplitude r2{-1.0, 0.0};
  std::uint64_t seed = 0;
};

/// An equation between two terms, checked on their interpretations.
struct Claim {
  std::string name;
  /// Where the statement comes from, e.g. "lemma ket-0-monoid".
  std::string anchor;
  std::string note;
  std::function<std::pair<ZhTerm, ZhTerm>(const ClaimParams&)> build;
  /// Arities (n, m) the claim is stated for. Empty means arity-free: the claim
  /// runs once per sample with n = m = 0.
  std::function<bool(std::size_t, std::size_t)> admits;
  /// Non-empty for statements that cannot be checked (reported, not run).
  std::string skip_reason;
};

enum class ClaimStatus { Pass, Fail, Skipped, Malformed };

std::string to_string(ClaimStatus s);

struct ClaimReport {
  std::string name;
  std::string anchor;
  ClaimStatus status = ClaimStatus::Pass;
  std::size_t samples = 0;
  double max_deviation = 0.0;
  std::string detail;
};

struct VerifyOptions {
  Tolerance tol;
  /// Largest arity tried for parametric claims.
  std::size_t max_arity = 3;
  InterpretOptions interp;
};

/// Evaluates both sides over every admitted arity up to max_arity and
/// `samples` label draws each. Passes when every deviation is below eps.
ClaimReport verify_claim(const Claim& c, std::size_t samples, const VerifyOptions& opts = {});

/// The built-in claims, in a fixed order with stable names.
std::vector<Claim> builtin_suite();

/// Deliberately wrong variants of some claims (label r against r + 1).
std::vector<Claim> negative_controls();

/// Fixed-width table of reports.
std::string format_reports(const std::vector<ClaimReport>& reports);

}  // namespace zhdd
