#include "zhdd/verifier.hpp"

#include <cstdio>
#include <random>
#include <sstream>

#include "zhdd/random_sqmdd.hpp"
#include "zhdd/translator.hpp"

namespace zhdd {

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "FAIL";
    case ClaimStatus::Skipped: return "skipped";
    case ClaimStatus::Malformed: return "malformed";
  }
  return "?";
}

namespace {

// --- term shorthands -------------------------------------------------------

ZhTerm T(const Generator& g) { return make_term(g); }
ZhTerm S(Amplitude r) { return T(Generator::scalar(r)); }
ZhTerm Z(std::size_t n, std::size_t m) { return T(Generator::z_spider(n, m)); }
ZhTerm Hb(std::size_t n, std::size_t m, Amplitude r = {-1.0, 0.0}) { return T(Generator::h_box(n, m, r)); }
ZhTerm X(std::size_t n, std::size_t m) { return T(Generator::x_spider(n, m)); }
ZhTerm NX(std::size_t n, std::size_t m) { return T(Generator::not_x_spider(n, m)); }
ZhTerm M(std::size_t k) { return T(Generator::monoid(k)); }
ZhTerm G() { return T(Generator::gadget()); }
ZhTerm W(Amplitude w) { return T(Generator::weight(w)); }
ZhTerm K0() { return T(Generator::ket_zero()); }
ZhTerm K1() { return T(Generator::ket_one()); }
ZhTerm Sw() { return T(Generator::swap()); }
ZhTerm Had() { return Hb(1, 1); }

/// Identity on k wires; the empty diagram when k = 0.
ZhTerm I(std::size_t k) { return k == 0 ? S(1.0) : ZhTerm::identity(k); }

ZhTerm repeat(const ZhTerm& t, std::size_t k) {
  if (k == 0) return S(1.0);
  ZhTerm acc = t;
  for (std::size_t i = 1; i < k; ++i) acc = par(acc, t);
  return acc;
}

ZhTerm pars(std::initializer_list<ZhTerm> ts) { return par_all(std::vector<ZhTerm>(ts)); }
ZhTerm seqs(std::initializer_list<ZhTerm> ts) { return seq_all(std::vector<ZhTerm>(ts)); }

ZhTerm and_gate() { return par(S(0.5), seq(Hb(2, 1), Had())); }

/// Each of the n inputs is Z-copied; `left` acts on the first copies, `right`
/// on the second, and `join` on their outputs.
ZhTerm copied(std::size_t n, const Generator& left, const Generator& right, const Generator& join) {
  DiagramBuilder b(n);
  std::vector<DiagramBuilder::Wire> xs;
  std::vector<DiagramBuilder::Wire> ys;
  for (auto w : std::vector<DiagramBuilder::Wire>(b.inputs())) {
    const auto c = b.add(Generator::z_spider(1, 2), {w});
    xs.push_back(c[0]);
    ys.push_back(c[1]);
  }
  const auto a = b.add(left, xs);
  const auto c = b.add(right, ys);
  std::vector<DiagramBuilder::Wire> both(a);
  both.insert(both.end(), c.begin(), c.end());
  const auto out = b.add(join, both);
  return b.finish(out);
}

ZhTerm map_leaves(const ZhTerm& t, const std::function<ZhTerm(const Generator&)>& f) {
  switch (t.op()) {
    case ZhTerm::Op::Seq: return seq(map_leaves(t.first(), f), map_leaves(t.second(), f));
    case ZhTerm::Op::Par: return par(map_leaves(t.first(), f), map_leaves(t.second(), f));
    case ZhTerm::Op::Gen: break;
  }
  return f(t.gen());
}

// --- parameter domains -----------------------------------------------------

auto any_arity() {
  return [](std::size_t, std::size_t) { return true; };
}
auto outputs_are(std::size_t k) {
  return [k](std::size_t, std::size_t m) { return m == k; };
}
auto inputs_are(std::size_t k) {
  return [k](std::size_t n, std::size_t) { return n == k; };
}

// --- random diagrams for the decision-diagram claims -----------------------

Sqmdd small_diagram(std::uint64_t seed, std::size_t min_height) {
  std::mt19937_64 rng(seed);
  RandomSqmddOptions opts;
  opts.height = min_height + seed % 2;
  opts.max_width = 2;
  return random_sqmdd(rng, opts);
}

Sqmdd drop_orphans(Sqmdd d) {
  for (;;) {
    bool changed = false;
    for (const Redex& r : find_redexes(d)) {
      if (r.rule == ReductionRule::RemoveUnreachable) {
        d = apply_rewrite(d, r);
        changed = true;
        break;
      }
    }
    if (!changed) return d;
  }
}

// Both sides of one rewrite of `rule`, translated to ZH.
std::pair<ZhTerm, ZhTerm> rule_instance(ReductionRule rule, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const Sqmdd before = targeted_instance(rule, rng, 2 + seed % 2);
  Sqmdd d = before;
  if (rule == ReductionRule::RemoveUnreachable) {
    // Unreachable vertices only arise after a zero edge is redirected.
    for (const Redex& r : find_redexes(d)) {
      if (r.rule == ReductionRule::ZeroToTerminal && r.node != kTerminal) {
        d = apply_rewrite(d, r);
        break;
      }
    }
  }
  for (const Redex& r : find_redexes(d)) {
    if (r.rule == rule) {
      d = apply_rewrite(d, r);
      break;
    }
  }
  return {sqmdd_to_zh(before), sqmdd_to_zh(drop_orphans(d))};
}

// --- the suite -------------------------------------------------------------

using Build = std::function<std::pair<ZhTerm, ZhTerm>(const ClaimParams&)>;
using Domain = std::function<bool(std::size_t, std::size_t)>;

Claim claim(std::string name, std::string anchor, std::string note, Build build, Domain admits = {}) {
  return Claim{std::move(name), std::move(anchor), std::move(note), std::move(build), std::move(admits), {}};
}

Claim skipped(std::string name, std::string anchor) {
  Claim c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.skip_reason = "figure-only statement";
  return c;
}

const char* kAxiom = "axiom (reconstructed)";

}  // namespace

std::vector<Claim> builtin_suite() {
  std::vector<Claim> s;

  // Axioms of the calculus, reconstructed in unnormalised form.
  s.push_back(claim("zs", kAxiom, "Z-spiders joined by a wire fuse",
                    [](const ClaimParams& p) { return std::pair{seq(Z(p.n, 1), Z(1, p.m)), Z(p.n, p.m)}; },
                    any_arity()));
  s.push_back(claim("hs", kAxiom, "H-boxes joined through a Hadamard fuse (factor 2)",
                    [](const ClaimParams& p) {
                      return std::pair{seqs({Hb(p.n, 1, p.r1), Had(), Hb(1, p.m)}), par(S(2.0), Hb(p.n, p.m, p.r1))};
                    },
                    any_arity()));
  s.push_back(claim("id", kAxiom, "the 1-1 Z-spider is the identity",
                    [](const ClaimParams&) { return std::pair{Z(1, 1), I(1)}; }));
  s.push_back(claim("hh", kAxiom, "two Hadamards give twice the identity",
                    [](const ClaimParams&) { return std::pair{seq(Had(), Had()), par(S(2.0), I(1))}; }));
  s.push_back(claim("ba1", kAxiom, "Z/X bialgebra",
                    [](const ClaimParams&) {
                      return std::pair{seq(X(2, 1), Z(1, 2)),
                                       seqs({pars({Z(1, 2), Z(1, 2)}), pars({I(1), Sw(), I(1)}),
                                             pars({X(2, 1), X(2, 1)})})};
                    }));
  s.push_back(claim("ba2", kAxiom, "Z copies the AND gate",
                    [](const ClaimParams&) {
                      return std::pair{seq(and_gate(), Z(1, 2)),
                                       seqs({pars({Z(1, 2), Z(1, 2)}), pars({I(1), Sw(), I(1)}),
                                             pars({and_gate(), and_gate()})})};
                    }));
  s.push_back(claim("m", kAxiom, "labels of H-boxes on copied inputs multiply",
                    [](const ClaimParams& p) {
                      return std::pair{copied(p.n, Generator::h_box(p.n, 1, p.r1), Generator::h_box(p.n, 1, p.r2),
                                              Generator::z_spider(2, 1)),
                                       Hb(p.n, 1, p.r1 * p.r2)};
                    },
                    outputs_are(1)));
  s.push_back(claim("u", kAxiom, "an H-box labelled 1 disconnects",
                    [](const ClaimParams& p) {
                      return std::pair{Hb(p.n, p.m, 1.0), par(repeat(Z(1, 0), p.n), repeat(Z(0, 1), p.m))};
                    },
                    any_arity()));
  s.push_back(claim("a", kAxiom, "H-boxes averaged by the odd-parity effect",
                    [](const ClaimParams& p) {
                      return std::pair{copied(p.n, Generator::h_box(p.n, 1, p.r1), Generator::h_box(p.n, 1, p.r2),
                                              Generator::not_x_spider(2, 0)),
                                       par(S(2.0), Hb(p.n, 0, (p.r1 + p.r2) / 2.0))};
                    },
                    outputs_are(0)));
  s.push_back(claim("i", kAxiom, "Hadamards on every leg turn a Z-spider into an X-spider",
                    [](const ClaimParams& p) {
                      return std::pair{par(S(0.5), seqs({repeat(Had(), p.n), Z(p.n, p.m), repeat(Had(), p.m)})),
                                       X(p.n, p.m)};
                    },
                    [](std::size_t n, std::size_t m) { return n > 0 && m > 0; }));
  s.push_back(claim("o", kAxiom, "|1> and <0| are orthogonal",
                    [](const ClaimParams&) { return std::pair{seq(NX(0, 1), X(1, 0)), S(0.0)}; }));

  // Wiring and scalars.
  s.push_back(claim("snake", "wire bending", "a cap followed by a cup is a straight wire",
                    [](const ClaimParams&) {
                      return std::pair{seq(par(T(Generator::cap()), I(1)), par(I(1), T(Generator::cup()))), I(1)};
                    }));
  s.push_back(claim("duality-roundtrip", "map/state duality", "bending all inputs and back is the identity",
                    [](const ClaimParams& p) {
                      const ZhTerm h = Hb(p.n, p.m, p.r1);
                      return std::pair{from_state_form(to_state_form(h), p.n), h};
                    },
                    any_arity()));
  s.push_back(claim("swap-involution", "wiring", "two swaps cancel",
                    [](const ClaimParams&) { return std::pair{seq(Sw(), Sw()), I(2)}; }));
  s.push_back(claim("scalar-product", "global scalars", "parallel scalars multiply",
                    [](const ClaimParams& p) { return std::pair{par(S(p.r1), S(p.r2)), S(p.r1 * p.r2)}; }));
  s.push_back(claim("scalar-r", "scalar box", "|1> into a 1-0 H-box gives its label",
                    [](const ClaimParams& p) { return std::pair{seq(K1(), Hb(1, 0, p.r1)), S(p.r1)}; }));

  // Monoid.
  s.push_back(claim("monoid-sugar", "monoid definition", "the expanded monoid has the stated matrix",
                    [](const ClaimParams& p) { return std::pair{expand_sugar(M(p.n)), M(p.n)}; },
                    [](std::size_t n, std::size_t m) { return n >= 1 && m == 1; }));
  s.push_back(claim("ket-0-monoid", "lemma ket-0-monoid", "|0> is the unit of the monoid",
                    [](const ClaimParams&) { return std::pair{seq(par(K0(), I(1)), M(2)), I(1)}; }));
  s.push_back(claim("ket-1-monoid", "lemma ket-1-monoid", "|1> into the monoid gives |1><0|",
                    [](const ClaimParams&) { return std::pair{seq(par(K1(), I(1)), M(2)), seq(X(1, 0), NX(0, 1))}; }));
  s.push_back(claim("monoid-associativity", "lemma monoid-associativity", "",
                    [](const ClaimParams&) {
                      return std::pair{seq(par(M(2), I(1)), M(2)), seq(par(I(1), M(2)), M(2))};
                    }));
  s.push_back(claim("monoid-commutativity", "monoid laws", "",
                    [](const ClaimParams&) { return std::pair{seq(Sw(), M(2)), M(2)}; }));
  s.push_back(claim("monoid-n-decomposition", "monoid with n inputs", "the k-input monoid is a comb of 2-input ones",
                    [](const ClaimParams& p) { return std::pair{M(p.n), seq(par(M(p.n - 1), I(1)), M(2))}; },
                    [](std::size_t n, std::size_t m) { return n >= 2 && m == 1; }));

  // Gadget.
  s.push_back(claim("gadget-sugar", "gadget definition", "the expanded gadget has the stated 4x4 matrix",
                    [](const ClaimParams&) { return std::pair{expand_sugar(G()), G()}; }));
  s.push_back(claim("gadget-ket-0-control", "gadget control", "control 0 routes the input to the left leg",
                    [](const ClaimParams&) { return std::pair{seq(par(K0(), I(1)), G()), par(I(1), K0())}; }));
  s.push_back(claim("gadget-ket-1-control", "gadget control", "control 1 routes the input to the right leg",
                    [](const ClaimParams&) { return std::pair{seq(par(K1(), I(1)), G()), par(K0(), I(1))}; }));
  s.push_back(claim("ket-0-top-gadget", "lemma ket-0-top-gadget", "|0> as input discards the control",
                    [](const ClaimParams&) {
                      return std::pair{seq(par(I(1), K0()), G()), pars({Z(1, 0), K0(), K0()})};
                    }));
  s.push_back(claim("swapped-gadget-legs", "gadget control", "swapping the legs negates the control",
                    [](const ClaimParams&) { return std::pair{seq(G(), Sw()), seq(par(NX(1, 1), I(1)), G())}; }));

  // Remaining sugar.
  s.push_back(claim("x-spider-sugar", "X-spiders", "",
                    [](const ClaimParams& p) { return std::pair{expand_sugar(X(p.n, p.m)), X(p.n, p.m)}; },
                    any_arity()));
  s.push_back(claim("not-x-spider-sugar", "X-spiders", "",
                    [](const ClaimParams& p) { return std::pair{expand_sugar(NX(p.n, p.m)), NX(p.n, p.m)}; },
                    any_arity()));
  s.push_back(claim("weight-sugar", "weights on wires", "a weight box is diag(1, w)",
                    [](const ClaimParams& p) { return std::pair{expand_sugar(W(p.r1)), W(p.r1)}; }));
  s.push_back(claim("ket-sugar", "basis states", "",
                    [](const ClaimParams&) {
                      const ZhTerm k = pars({K0(), K1(), T(Generator::ket_plus())});
                      return std::pair{expand_sugar(k), k};
                    }));

  // Rewrites used to propagate a plugged basis state.
  s.push_back(claim("rewrite-weight-absorption", "basis-state propagation", "|1> pulls the weight into the scalar",
                    [](const ClaimParams& p) { return std::pair{seq(K1(), W(p.r1)), par(S(p.r1), K1())}; }));
  s.push_back(claim("rewrite-weight-zero", "basis-state propagation", "|0> passes a weight unchanged",
                    [](const ClaimParams& p) { return std::pair{seq(K0(), W(p.r1)), K0()}; }));
  s.push_back(claim("rewrite-node-destruction", "basis-state propagation", "an inactive node emits |0> on both legs",
                    [](const ClaimParams& p) {
                      return std::pair{seqs({par(I(1), K0()), G(), par(W(p.r1), W(p.r2))}), pars({Z(1, 0), K0(), K0()})};
                    }));
  for (int bit : {0, 1}) {
    s.push_back(claim("rewrite-root-cofactor-" + std::to_string(bit), "basis-state propagation",
                      "propagating a basis state gives the layered form of the cofactor",
                      [bit](const ClaimParams& p) {
                        const ZhTerm plugged = plug_top_output(sqmdd_to_zh(small_diagram(p.seed, 1)), bit);
                        return std::pair{plugged, ket0_propagate(plugged).term};
                      }));
  }

  // Soundness of the reduction rules as ZH equalities.
  const std::pair<const char*, ReductionRule> rules[] = {
      {"soundness-R1", ReductionRule::NormalizeLeft},   {"soundness-R2", ReductionRule::NormalizeRight},
      {"soundness-R3", ReductionRule::ZeroToTerminal},  {"soundness-R4", ReductionRule::RemoveUnreachable},
      {"soundness-R5", ReductionRule::SkipVariable},    {"soundness-R6", ReductionRule::Merge}};
  for (const auto& [name, rule] : rules) {
    s.push_back(claim(name, "reduction rule " + to_string(rule), "both sides of one rewrite, translated",
                      [rule](const ClaimParams& p) { return rule_instance(rule, p.seed); }));
  }

  // Normal-form constructions.
  s.push_back(claim("pseudo-sqmdd", "proposition pseudo-SQMDD", "monoid fan-ins may be X-spiders",
                    [](const ClaimParams& p) {
                      const ZhTerm t = sqmdd_to_zh(small_diagram(p.seed, 2));
                      const ZhTerm x = map_leaves(t, [](const Generator& g) {
                        return g.kind == GeneratorKind::Monoid ? X(g.inputs, 1) : T(g);
                      });
                      return std::pair{t, x};
                    }));
  s.push_back(claim("generators-nf-z", "proposition generators-NF", "",
                    [](const ClaimParams& p) {
                      return std::pair{to_state_form(Z(p.n, p.m)),
                                       sqmdd_to_zh(generator_state_sqmdd(GeneratorKind::ZSpider, p.n + p.m))};
                    },
                    any_arity()));
  s.push_back(claim("generators-nf-h", "proposition generators-NF", "",
                    [](const ClaimParams& p) {
                      return std::pair{to_state_form(Hb(p.n, p.m, p.r1)),
                                       sqmdd_to_zh(generator_state_sqmdd(GeneratorKind::HBox, p.n + p.m, p.r1))};
                    },
                    any_arity()));
  s.push_back(claim("tensor-nf", "proposition tensor", "",
                    [](const ClaimParams& p) {
                      const Sqmdd a = small_diagram(p.seed, 1);
                      const Sqmdd b = small_diagram(p.seed + 1, 1);
                      return std::pair{par(sqmdd_to_zh(a), sqmdd_to_zh(b)), sqmdd_to_zh(tensor(a, b))};
                    }));
  s.push_back(claim("swap-nf", "proposition swap", "",
                    [](const ClaimParams& p) {
                      const Sqmdd d = small_diagram(p.seed, 2);
                      const std::size_t k = 1 + p.seed % (d.height - 1);
                      const ZhTerm sw = pars({I(k - 1), Sw(), I(d.height - k - 1)});
                      return std::pair{seq(sqmdd_to_zh(d), sw), sqmdd_to_zh(swap_adjacent_levels(d, k))};
                    }));
  s.push_back(claim("gn-2-1-nf", "proposition gn-2-1", "",
                    [](const ClaimParams& p) {
                      const Sqmdd d = small_diagram(p.seed, 2);
                      const std::size_t i = p.seed % (d.height - 1);
                      const ZhTerm merge = pars({I(i), Z(2, 1), I(d.height - i - 2)});
                      return std::pair{seq(sqmdd_to_zh(d), merge), sqmdd_to_zh(z_merge_outputs(d, i, i + 1))};
                    }));
  s.push_back(claim("bra-plus-nf", "proposition bra-plus", "",
                    [](const ClaimParams& p) {
                      const Sqmdd d = small_diagram(p.seed, 1);
                      const std::size_t i = p.seed % d.height;
                      const ZhTerm plug = pars({I(i), T(Generator::bra_plus()), I(d.height - i - 1)});
                      return std::pair{seq(sqmdd_to_zh(d), plug), sqmdd_to_zh(plug_bra_plus(d, i))};
                    }));
  s.push_back(claim("preserved-semantics", "proposition preserved-semantics",
                    "the layered form of a diagram matches that of its unshared tree",
                    [](const ClaimParams& p) {
                      const Sqmdd d = small_diagram(p.seed, 1);
                      return std::pair{sqmdd_to_zh(d), sqmdd_to_zh(naive_tree(interpret_sqmdd(d)))};
                    }));

  // Useful lemmas.
  s.push_back(claim("gn-0-0", "lemma gn-0-0", "the 0-0 Z-spider is 2",
                    [](const ClaimParams&) { return std::pair{Z(0, 0), S(2.0)}; }));
  s.push_back(claim("0-box", "lemma 0-box", "an H-box labelled 0 is <0|",
                    [](const ClaimParams&) { return std::pair{Hb(1, 0, 0.0), X(1, 0)}; }));
  s.push_back(claim("1-box", "lemma 1-box", "an H-box labelled 1 is <+|",
                    [](const ClaimParams&) { return std::pair{Hb(1, 0, 1.0), Z(1, 0)}; }));
  s.push_back(claim("h-ket-0", "classical inputs to H-boxes", "|0> into an H-box disconnects it",
                    [](const ClaimParams& p) {
                      return std::pair{seq(par(K0(), I(p.n - 1)), Hb(p.n, p.m, p.r1)),
                                       par(repeat(Z(1, 0), p.n - 1), repeat(Z(0, 1), p.m))};
                    },
                    [](std::size_t n, std::size_t) { return n >= 1; }));
  s.push_back(claim("h-ket-1", "classical inputs to H-boxes", "|1> into an H-box removes the leg",
                    [](const ClaimParams& p) {
                      return std::pair{seq(par(K1(), I(p.n - 1)), Hb(p.n, p.m, p.r1)), Hb(p.n - 1, p.m, p.r1)};
                    },
                    [](std::size_t n, std::size_t) { return n >= 1; }));
  s.push_back(claim("x-fusion", "X-spiders", "X-spiders joined by a wire fuse",
                    [](const ClaimParams& p) { return std::pair{seq(X(p.n, 1), X(1, p.m)), X(p.n, p.m)}; },
                    any_arity()));
  s.push_back(claim("hopf", "lemma hopf", "Z copy followed by X merge disconnects",
                    [](const ClaimParams&) { return std::pair{seq(Z(1, 2), X(2, 1)), seq(Z(1, 0), X(0, 1))}; }));
  s.push_back(claim("not-involution", "X-spiders", "",
                    [](const ClaimParams&) { return std::pair{seq(NX(1, 1), NX(1, 1)), I(1)}; }));
  s.push_back(claim("z-copies-ket-0", "Z-spiders", "",
                    [](const ClaimParams& p) { return std::pair{seq(K0(), Z(1, p.m)), repeat(K0(), p.m)}; },
                    inputs_are(0)));

  for (const char* name : {"monoid-sum", "not-through-h", "bialgebra-z-and", "cnot-on-h-legs",
                           "bialgebra-neg", "box-2", "hopf-gn-h", "z-h-multiple-links"}) {
    s.push_back(skipped(name, std::string("lemma ") + name));
  }
  return s;
}

std::vector<Claim> negative_controls() {
  std::vector<Claim> s;
  s.push_back(claim("scalar-r-corrupted", "negative control", "label r against r + 1",
                    [](const ClaimParams& p) { return std::pair{seq(K1(), Hb(1, 0, p.r1)), S(p.r1 + 1.0)}; }));
  s.push_back(claim("hs-corrupted", "negative control", "label r against r + 1",
                    [](const ClaimParams& p) {
                      return std::pair{seqs({Hb(p.n, 1, p.r1), Had(), Hb(1, p.m)}),
                                       par(S(2.0), Hb(p.n, p.m, p.r1 + 1.0))};
                    },
                    any_arity()));
  s.push_back(claim("weight-corrupted", "negative control", "weight w against w + 1",
                    [](const ClaimParams& p) { return std::pair{seq(K1(), W(p.r1)), par(S(p.r1 + 1.0), K1())}; }));
  return s;
}

namespace {

std::uint64_t name_seed(const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : name) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

ClaimReport verify_claim(const Claim& c, std::size_t samples, const VerifyOptions& opts) {
  ClaimReport rep{c.name, c.anchor, ClaimStatus::Pass, 0, 0.0, {}};
  if (!c.skip_reason.empty()) {
    rep.status = ClaimStatus::Skipped;
    rep.detail = c.skip_reason;
    return rep;
  }
  std::vector<std::pair<std::size_t, std::size_t>> arities;
  if (!c.admits) {
    arities.emplace_back(0, 0);
  } else {
    for (std::size_t n = 0; n <= opts.max_arity; ++n) {
      for (std::size_t m = 0; m <= opts.max_arity; ++m) {
        if (c.admits(n, m)) arities.emplace_back(n, m);
      }
    }
  }
  std::mt19937_64 rng(name_seed(c.name));
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& [n, m] : arities) {
    for (std::size_t k = 0; k < samples; ++k) {
      ClaimParams p{n, m, {u(rng), u(rng)}, {u(rng), u(rng)}, rng()};
      std::pair<ZhTerm, ZhTerm> sides;
      try {
        sides = c.build(p);
      } catch (const ConstructionError& e) {
        rep.status = ClaimStatus::Malformed;
        rep.detail = e.what();
        return rep;
      }
      const auto& [lhs, rhs] = sides;
      if (lhs.inputs() != rhs.inputs() || lhs.outputs() != rhs.outputs()) {
        std::ostringstream msg;
        msg << "arity mismatch at n=" << n << ", m=" << m << ": " << lhs.inputs() << "->" << lhs.outputs()
            << " vs " << rhs.inputs() << "->" << rhs.outputs();
        rep.status = ClaimStatus::Malformed;
        rep.detail = msg.str();
        return rep;
      }
      const double dev = max_deviation(interpret_zh(lhs, opts.interp), interpret_zh(rhs, opts.interp));
      ++rep.samples;
      if (dev > rep.max_deviation || std::isnan(dev)) rep.max_deviation = dev;
      if (!(dev < opts.tol.eps) && rep.status == ClaimStatus::Pass) {
        rep.status = ClaimStatus::Fail;
        std::ostringstream msg;
        msg << "first failure at n=" << n << ", m=" << m;
        rep.detail = msg.str();
      }
    }
  }
  return rep;
}

std::string format_reports(const std::vector<ClaimReport>& reports) {
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %-36s %8s %12s  %s\n", "claim", "anchor", "samples", "max dev", "status");
  out << line;
  for (const auto& r : reports) {
    std::snprintf(line, sizeof line, "%-28s %-36s %8zu %12.3g  %s", r.name.c_str(), r.anchor.c_str(), r.samples,
                  r.max_deviation, to_string(r.status).c_str());
    out << line;
    if (!r.detail.empty() && r.status != ClaimStatus::Pass) out << " (" << r.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace zhdd
