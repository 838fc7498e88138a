// Acceptance run: seven end-to-end properties, each with a time budget.
// Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "support.hpp"
#include "zhdd/random_sqmdd.hpp"
#include "zhdd/semantics.hpp"
#include "zhdd/translator.hpp"
#include "zhdd/verifier.hpp"

using namespace zhdd;
using namespace zhdd::testing;

namespace {

constexpr double kEps = 1e-9;

struct Outcome {
  bool ok = true;
  std::string detail;
};

/// Records the first failure; later ones are only counted.
class Checker {
 public:
  void expect(bool cond, const std::function<std::string()>& what) {
    if (cond) return;
    if (failures_++ == 0) first_ = what();
  }
  Outcome outcome(std::string summary) const {
    if (failures_ == 0) return {true, std::move(summary)};
    std::ostringstream s;
    s << failures_ << " failure(s); first: " << first_;
    return {false, s.str()};
  }

 private:
  std::size_t failures_ = 0;
  std::string first_;
};

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Sqmdd random_diagram(std::mt19937_64& rng, std::size_t min_height, std::size_t max_height) {
  RandomSqmddOptions o;
  o.height = std::uniform_int_distribution<std::size_t>(min_height, max_height)(rng);
  return random_sqmdd(rng, o);
}

/// Semantics of the part reachable from the root. Mid-reduction diagrams may
/// carry unreachable vertices, which do not contribute.
DenseVector live_semantics(const Sqmdd& d) {
  Sqmdd live = d;
  live.nodes.clear();
  std::vector<NodeId> stack{d.root};
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (u == kTerminal || live.nodes.count(u)) continue;
    const SqmddNode& n = d.node(u);
    live.nodes[u] = n;
    stack.push_back(n.child0);
    stack.push_back(n.child1);
  }
  return interpret_sqmdd(live);
}

// --- 1 ---------------------------------------------------------------------

Outcome translation_soundness() {
  std::mt19937_64 rng(1001);
  Checker c;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Sqmdd d = random_diagram(rng, 0, 6);
    const double dev = max_deviation(as_vector(interpret_zh(sqmdd_to_zh(d))), interpret_sqmdd(d));
    worst = std::max(worst, dev);
    c.expect(dev <= kEps, [&] { return "diagram " + std::to_string(i) + " deviates by " + fmt(dev); });
  }
  return c.outcome("200 diagrams, max deviation " + fmt(worst));
}

// --- 2 ---------------------------------------------------------------------

DenseVector shared_vector(std::mt19937_64& rng) {
  const std::size_t h = std::uniform_int_distribution<std::size_t>(3, 6)(rng);
  const std::size_t b = std::uniform_int_distribution<std::size_t>(1, h - 2)(rng);
  const std::size_t block = std::size_t{1} << b;
  std::vector<DenseVector> pool(2, DenseVector(block));
  for (auto& p : pool) {
    for (auto& x : p) x = random_weight(rng);
  }
  const Amplitude factors[] = {1.0, -1.0, 0.0, {0.0, 1.0}, 2.0};
  DenseVector v;
  for (std::size_t k = 0; k < (std::size_t{1} << h) / block; ++k) {
    const auto& p = pool[rng() % 2];
    const Amplitude f = factors[rng() % 5];
    for (Amplitude x : p) v.push_back(f * x);
  }
  return v;
}

Outcome canonicity() {
  std::mt19937_64 rng(2002);
  std::vector<DenseVector> vectors;
  vectors.push_back(DenseVector(16, 0.0));
  for (int i = 0; i < 40; ++i) vectors.push_back(shared_vector(rng));
  while (vectors.size() < 200) {
    const std::size_t h = std::uniform_int_distribution<std::size_t>(0, 6)(rng);
    DenseVector v(std::size_t{1} << h);
    for (auto& x : v) x = random_weight(rng);
    vectors.push_back(std::move(v));
  }
  Checker c;
  std::size_t steps = 0;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const DenseVector& v = vectors[i];
    const Sqmdd canon = canonical_from_vector(v);
    c.expect(max_deviation(interpret_sqmdd(canon), v) <= kEps, [&] { return "canonical form of vector " + std::to_string(i) + " is wrong"; });
    const Sqmdd variants[] = {naive_tree(v), denormalize(canon, rng, 8), denormalize(naive_tree(v), rng, 8)};
    std::vector<Sqmdd> reduced;
    for (std::size_t k = 0; k < 3; ++k) {
      const ReductionResult r = k == 0 ? reduce(variants[k]) : reduce_randomized(variants[k], rng);
      steps += r.trace.size();
      reduced.push_back(r.diagram);
    }
    for (std::size_t a = 0; a < 3; ++a) {
      c.expect(iso_equal(reduced[a], canon),
               [&] { return "variant " + std::to_string(a) + " of vector " + std::to_string(i) + " differs"; });
      for (std::size_t b = a + 1; b < 3; ++b) {
        c.expect(iso_equal(reduced[a], reduced[b]), [&] { return "variants disagree on vector " + std::to_string(i); });
      }
    }
  }
  return c.outcome("200 vectors (41 with heavy sharing or zero), 600 reductions, " + std::to_string(steps) + " rewrites");
}

// --- 3 ---------------------------------------------------------------------

Outcome normal_form_pipeline() {
  std::mt19937_64 rng(3003);
  Checker c;
  double worst = 0.0;
  std::size_t boxes = 0;
  for (int i = 0; i < 100; ++i) {
    const ZhTerm t = random_zh_term(rng);
    boxes = std::max(boxes, box_count(t));
    c.expect(box_count(t) <= 12 && t.inputs() + t.outputs() <= 8, [&] { return "term " + std::to_string(i) + " is too large"; });
    const Sqmdd d = zh_to_sqmdd(t);
    c.expect(is_irreducible(d), [&] { return "result for term " + std::to_string(i) + " is reducible"; });
    const double dev = max_deviation(interpret_sqmdd(d), as_vector(interpret_zh(to_state_form(t))));
    worst = std::max(worst, dev);
    c.expect(dev <= kEps, [&] { return "term " + std::to_string(i) + " deviates by " + fmt(dev); });
  }
  return c.outcome("100 terms (up to " + std::to_string(boxes) + " boxes), max deviation " + fmt(worst));
}

// --- 4 ---------------------------------------------------------------------

Outcome reduction_system() {
  std::mt19937_64 rng(4004);
  Checker c;
  std::size_t applied = 0;
  for (ReductionRule rule : {ReductionRule::NormalizeLeft, ReductionRule::NormalizeRight, ReductionRule::ZeroToTerminal,
                             ReductionRule::RemoveUnreachable, ReductionRule::SkipVariable, ReductionRule::Merge}) {
    const std::string name = to_string(rule);
    for (int i = 0; i < 50; ++i) {
      const Sqmdd start = targeted_instance(rule, rng, 2 + i % 5);
      const DenseVector want = interpret_sqmdd(start);
      Sqmdd d = start;
      bool seen = false;
      // Rewrite to a fixpoint, always preferring the targeted rule. Unreachable
      // vertices only appear once a zero edge has been redirected, so that
      // rewrite comes next in line when they are the target.
      std::vector<ReductionRule> preferred{rule};
      if (rule == ReductionRule::RemoveUnreachable) preferred.push_back(ReductionRule::ZeroToTerminal);
      for (std::size_t guard = 0; guard < 10000; ++guard) {
        const auto redexes = find_redexes(d);
        if (redexes.empty()) break;
        const Redex* pick = &redexes.front();
        for (auto it = preferred.rbegin(); it != preferred.rend(); ++it) {
          for (const Redex& r : redexes) {
            if (r.rule == *it && !(r.rule == ReductionRule::ZeroToTerminal && r.node == kTerminal)) pick = &r;
          }
        }
        seen = seen || pick->rule == rule;
        const Sqmdd next = apply_rewrite(d, *pick);
        ++applied;
        c.expect(measure(next) < measure(d), [&] { return name + " instance " + std::to_string(i) + ": measure did not drop at " + to_string(pick->rule); });
        const double dev = max_deviation(live_semantics(next), want);
        c.expect(dev <= kEps, [&] { return name + " instance " + std::to_string(i) + ": " + to_string(pick->rule) + " changed semantics by " + fmt(dev); });
        d = next;
      }
      c.expect(seen, [&] { return name + " instance " + std::to_string(i) + " never exposed its redex"; });
      c.expect(is_irreducible(d), [&] { return name + " instance " + std::to_string(i) + " did not reach a fixpoint"; });
      const ReductionResult r = reduce(start);
      for (const auto& s : r.trace) {
        c.expect(s.after < s.before, [&] { return name + " instance " + std::to_string(i) + ": reduce trace not decreasing"; });
      }
      c.expect(is_irreducible(r.diagram) && iso_equal(r.diagram, d),
               [&] { return name + " instance " + std::to_string(i) + ": reduce disagrees with the manual fixpoint"; });
    }
  }
  return c.outcome("300 instances, " + std::to_string(applied) + " rewrites checked");
}

// --- 5 ---------------------------------------------------------------------

Outcome worked_example() {
  const DenseVector v = worked_example_vector();
  const Sqmdd d = canonical_from_vector(v);
  const double a = max_deviation(interpret_sqmdd(d), v);
  const double b = max_deviation(as_vector(interpret_zh(sqmdd_to_zh(d))), v);
  Checker c;
  c.expect(a <= kEps, [&] { return "canonical form deviates by " + fmt(a); });
  c.expect(b <= kEps, [&] { return "ZH translation deviates by " + fmt(b); });
  return c.outcome(std::to_string(d.size()) + " vertices, deviations " + fmt(a) + " / " + fmt(b));
}

// --- 6 ---------------------------------------------------------------------

Outcome equational_suite() {
  Checker c;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  for (const Claim& claim : builtin_suite()) {
    const ClaimReport r = verify_claim(claim, 20, {});
    if (r.status == ClaimStatus::Skipped) {
      ++skipped;
      c.expect(!r.detail.empty(), [&] { return claim.name + " skipped without a reason"; });
      continue;
    }
    c.expect(r.status == ClaimStatus::Pass, [&] { return claim.name + ": " + to_string(r.status) + " " + r.detail; });
    passed += r.status == ClaimStatus::Pass;
  }
  std::size_t controls = 0;
  for (const Claim& claim : negative_controls()) {
    ++controls;
    const ClaimReport r = verify_claim(claim, 20, {});
    c.expect(r.status == ClaimStatus::Fail, [&] { return "negative control " + claim.name + " did not fail"; });
  }
  return c.outcome(std::to_string(passed) + " claims pass, " + std::to_string(skipped) + " skipped with reasons, " +
                   std::to_string(controls) + " controls fail");
}

// --- 7 ---------------------------------------------------------------------

Outcome contraction_primitives() {
  std::mt19937_64 rng(7007);
  Checker c;
  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const Sqmdd d = random_diagram(rng, 2, 6);
    const DenseVector v = interpret_sqmdd(d);
    std::uniform_int_distribution<std::size_t> pos(0, d.height - 1);
    const std::size_t i = pos(rng);
    std::size_t j = pos(rng);
    while (j == i) j = pos(rng);
    const double a = max_deviation(interpret_sqmdd(z_merge_outputs(d, i, j)), dense_diagonal(v, d.height, i, j));
    const double b = max_deviation(interpret_sqmdd(plug_bra_plus(d, i)), dense_cofactor_sum(v, d.height, i));
    worst = std::max({worst, a, b});
    c.expect(a <= kEps, [&] { return "z-merge on diagram " + std::to_string(k) + " deviates by " + fmt(a); });
    c.expect(b <= kEps, [&] { return "<+| plug on diagram " + std::to_string(k) + " deviates by " + fmt(b); });
  }
  return c.outcome("200 diagrams, max deviation " + fmt(worst));
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"translation soundness", 60, translation_soundness},
      {"canonicity", 60, canonicity},
      {"normal-form pipeline", 120, normal_form_pipeline},
      {"reduction system", 30, reduction_system},
      {"worked example", 1, worked_example},
      {"equational suite", 60, equational_suite},
      {"contraction primitives", 30, contraction_primitives},
  };
  int failures = 0;
  int index = 0;
  for (const Criterion& c : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.budget_seconds) {
      o.ok = false;
      o.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
    }
    failures += !o.ok;
    std::printf("[%s] criterion %d, %s: %s (%.2f s)\n", o.ok ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
