#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zhdd/amplitude.hpp"

namespace zhdd {

enum class GeneratorKind {
  ZSpider,
  HBox,
  Identity,
  Swap,
  Cap,
  Cup,
  // Sugar: everything below expands into the kinds above.
  XSpider,
  NotXSpider,
  Monoid,
  Gadget,
  WeightBox,
  KetZero,
  KetOne,
  KetPlus,
  BraPlus,
};

std::string to_string(GeneratorKind kind);
std::optional<GeneratorKind> generator_kind_from_string(const std::string& name);

/// True for the kinds that expand_sugar leaves untouched.
bool is_core(GeneratorKind kind);

/// A generator together with its arity and label.
///
/// `label` is the H-box parameter for HBox and the weight for WeightBox; it is
/// ignored by the other kinds. Use the named constructors, which fix the
/// arities the kind requires.
struct Generator {
  GeneratorKind kind = GeneratorKind::Identity;
  std::size_t inputs = 1;
  std::size_t outputs = 1;
  Amplitude label{-1.0, 0.0};

  static Generator z_spider(std::size_t n, std::size_t m);
  /// H-box n -> m; the label defaults to -1.
  static Generator h_box(std::size_t n, std::size_t m, Amplitude r = {-1.0, 0.0});
  static Generator identity();
  static Generator swap();
  static Generator cap();
  static Generator cup();
  static Generator x_spider(std::size_t n, std::size_t m);
  static Generator not_x_spider(std::size_t n, std::size_t m);
  /// k -> 1 fan-in, k >= 1.
  static Generator monoid(std::size_t k);
  static Generator gadget();
  static Generator weight(Amplitude w);
  static Generator ket_zero();
  static Generator ket_one();
  static Generator ket_plus();
  static Generator bra_plus();
  /// 0 -> 0 H-box, interpreted as the number r.
  static Generator scalar(Amplitude r);

  /// Throws ConstructionError if the arities do not fit the kind.
  void validate() const;
};

/// Immutable composition tree over generators.
///
/// Copies share structure. A default-constructed term is invalid and only
/// serves as a placeholder.
class ZhTerm {
 public:
  enum class Op { Gen, Seq, Par };

  ZhTerm() = default;

  static ZhTerm generator(const Generator& g);
  /// `top` followed by `bottom`; requires outputs(top) == inputs(bottom).
  static ZhTerm seq(const ZhTerm& top, const ZhTerm& bottom);
  static ZhTerm par(const ZhTerm& left, const ZhTerm& right);

  bool valid() const { return node_ != nullptr; }
  Op op() const;
  std::size_t inputs() const;
  std::size_t outputs() const;
  /// Generator of a leaf term.
  const Generator& gen() const;
  /// First child (top of Seq / left of Par).
  const ZhTerm& first() const;
  const ZhTerm& second() const;

  /// True when the term is built from Identity and Swap only. Such terms
  /// denote a wire permutation, available through permutation().
  bool is_wiring() const;
  /// For wiring terms: output i carries input permutation()[i].
  const std::vector<std::size_t>& permutation() const;

  std::size_t generator_count() const;
  /// True when every leaf is a core generator.
  bool is_sugar_free() const;

  /// Identity on k wires; k must be >= 1.
  static ZhTerm identity(std::size_t k);
  /// Wiring term with output i carrying input src[i].
  static ZhTerm permutation_term(std::span<const std::size_t> src);

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

ZhTerm make_term(const Generator& g);
ZhTerm seq(const ZhTerm& top, const ZhTerm& bottom);
ZhTerm par(const ZhTerm& left, const ZhTerm& right);

/// Parallel composition of a whole list (left-nested); list must be non-empty.
ZhTerm par_all(std::span<const ZhTerm> terms);
/// Sequential composition of a whole list; list must be non-empty.
ZhTerm seq_all(std::span<const ZhTerm> terms);

/// Rewrites every sugar generator into Z-spiders, H-boxes and wiring.
/// The interpretation, scalar factors included, is unchanged.
ZhTerm expand_sugar(const ZhTerm& t);

/// Map/state duality. The state orders its outputs by interleaving
/// (input i, output i) pairs, followed by the surplus inputs or outputs.
ZhTerm to_state_form(const ZhTerm& t);
/// Inverse of to_state_form for a state with `inputs` bent inputs.
ZhTerm from_state_form(const ZhTerm& state, std::size_t inputs);

/// Position of every leg of to_state_form(t) for a term n -> m: entry j
/// is {is_input, index}.
struct StateLeg {
  bool is_input = false;
  std::size_t index = 0;
};
std::vector<StateLeg> state_leg_order(std::size_t inputs, std::size_t outputs);

/// Incremental construction of terms by naming wires.
///
/// The builder keeps a list of open wires. add() applies a term to some of
/// them (they are routed next to each other with swaps) and returns the
/// labels of the new wires. finish() routes the open wires into the
/// requested output order.
class DiagramBuilder {
 public:
  using Wire = std::size_t;

  explicit DiagramBuilder(std::size_t inputs = 0);

  const std::vector<Wire>& inputs() const { return inputs_; }
  const std::vector<Wire>& open_wires() const { return open_; }

  std::vector<Wire> add(const ZhTerm& t, std::span<const Wire> on = {});
  std::vector<Wire> add(const Generator& g, std::span<const Wire> on = {});
  std::vector<Wire> add(const Generator& g, std::initializer_list<Wire> on);
  std::vector<Wire> add(const ZhTerm& t, std::initializer_list<Wire> on);
  /// Applies a one-output generator and returns its single wire.
  Wire add1(const Generator& g, std::initializer_list<Wire> on = {});

  /// Returns the term; `outputs` must list every open wire exactly once.
  ZhTerm finish(std::span<const Wire> outputs) const;
  ZhTerm finish(std::initializer_list<Wire> outputs) const;

 private:
  void apply(const ZhTerm& t, std::span<const Wire> on);

  std::vector<Wire> inputs_;
  std::vector<Wire> open_;
  std::optional<ZhTerm> current_;
  Wire next_ = 0;
};

}  // namespace zhdd
