#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rackoh/cochain/coeff_module.hpp"
#include "rackoh/linalg/exact_matrix.hpp"
#include "rackoh/perm/perm_group.hpp"

namespace rackoh {

using linalg::ExactMatrix;
using linalg::Vector;

/// Caps applied before any cochain matrix is built.
struct CochainBudget {
  std::size_t max_degree = 4;
  /// Estimated matrix memory in MiB; defaults to $RACKOH_BUDGET_MB or 2048.
  std::size_t memory_mb = 0;

  static CochainBudget from_environment();
  std::size_t effective_memory_mb() const;
};

/// C^n(X, M) = Fun(X^n, M) with basis index
///   ((x_1 * |X| + x_2) * |X| + ... + x_n) * k + j,
/// i.e. lexicographic in the arguments with the module basis innermost.
class CochainSpace {
 public:
  CochainSpace(std::size_t rack_size, std::size_t module_dim, std::size_t degree);

  std::size_t rack_size() const { return n_; }
  std::size_t module_dim() const { return k_; }
  std::size_t degree() const { return degree_; }
  /// |X|^degree * k
  std::size_t dimension() const { return tuples_ * k_; }
  std::size_t tuple_count() const { return tuples_; }

  std::size_t tuple_index(std::span<const Element> args) const;
  void decode_tuple(std::size_t index, std::span<Element> args) const;
  std::size_t index(std::span<const Element> args, std::size_t j) const { return tuple_index(args) * k_ + j; }

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t degree_;
  std::size_t tuples_;
};

/// Throws ResourceError when a map C^n -> C^{n+1} would not fit the budget,
/// or when n exceeds budget.max_degree + 1.
void check_budget(const RackTable& rack, const CoeffModule& module, std::size_t n, const CochainBudget& budget);

/// d : C^n -> C^{n+1},
///   df(x_1..x_{n+1}) = sum_i (-1)^{i-1} ( f(..x_i omitted..)
///                       - f(x_1..x_{i-1}, x_i|>x_{i+1}, .., x_i|>x_{n+1}) . x_i ).
ExactMatrix differential(const RackTable& rack, const CoeffModule& module, std::size_t n,
                         const CochainBudget& budget = {});

/// d'f(x_1..x_{n+1}) = sum_i (-1)^{i-1} ( f(..x_i omitted..) . (x_1|>(x_2|>(..x_i)))^{-1}
///                       - f(x_1..x_{i-1}, x_i|>x_{i+1}, .., x_i|>x_{n+1}) ).
ExactMatrix differential_prime(const RackTable& rack, const CoeffModule& module, std::size_t n,
                               const CochainBudget& budget = {});

/// (Tf)(x_1..x_n) = f(x_1..x_n) . (x_1 ... x_n)^{-1}; satisfies T d = d' T.
ExactMatrix chain_iso_T(const RackTable& rack, const CoeffModule& module, std::size_t n);

/// (f.y)(x_1..x_n) = f(y|>x_1, .., y|>x_n) . y
ExactMatrix group_action_on_cochains(const RackTable& rack, const CoeffModule& module, std::size_t n, Element y);

/// Image of the structure group in Sym(X) x GL(M).
struct ActionElement {
  Permutation perm;
  DenseMatrix matrix;
  friend bool operator==(const ActionElement&, const ActionElement&) = default;
};

struct FiniteActionGroup {
  std::vector<ActionElement> elements;
  std::size_t order() const { return elements.size(); }
};

/// Closure of {(phi_x, A_x)} with (s, A)(t, B) = (s o t, A B). Each A_x is
/// first checked to have finite order; an element of infinite order, or a
/// closure beyond `cap`, raises ResourceError.
FiniteActionGroup finite_action_group(const RackTable& rack, const CoeffModule& module,
                                      std::size_t cap = 1'000'000);

/// Matrix of f -> f.g on C^n for one group element.
ExactMatrix action_matrix(const CoeffModule& module, const ActionElement& g, std::size_t n);

/// P = (1/|G|) sum_g g on C^n. Throws PreconditionError unless |G| is a unit in
/// the coefficient field.
ExactMatrix projector_P(const RackTable& rack, const CoeffModule& module, std::size_t n,
                        const FiniteActionGroup& group);
ExactMatrix projector_P(const RackTable& rack, const CoeffModule& module, std::size_t n);

/// J : C^n(X, A) -> C^{n-1}(X, Fun(X, A)), (Jf)(x_1..x_{n-1})(x_n) = f(x_1..x_n).
struct ShiftIsomorphism {
  CoeffModule target_module;  // Fun(X, A) with (h.y)(x) = h(y|>x)
  ExactMatrix matrix;
};

/// Requires n >= 1 and a trivial action on A (PreconditionError otherwise).
ShiftIsomorphism shift_J(const RackTable& rack, const CoeffModule& trivial_module, std::size_t n);

/// Fun(X, A) for a trivially acting A = R^k: basis (z, j) at index z * k + j.
CoeffModule functions_module(const RackTable& rack, const CoeffModule& trivial_module);

/// A cochain together with the space it lives in.
struct Cochain {
  std::size_t degree = 0;
  Vector values;
};

/// f_y(x_2..x_n) = f(y, x_2..x_n) as a view of the contiguous block of f.
std::span<const Rational> slice(const Cochain& f, const CochainSpace& space, Element y);

/// Inverse of slicing: the cochain on X^{n} that is g in slot y and zero elsewhere.
Cochain embed_slice(std::span<const Rational> g, const CochainSpace& space, Element y);

/// True when g.y = g for every rack element.
bool is_invariant(const RackTable& rack, const CoeffModule& module, const Cochain& g);

/// (f (x) g)(x_1..x_{a+b}) = f(x_1..x_a) (x) g(x_{a+1}..x_{a+b}) in A (x) N,
/// coordinates (i_A, i_N) at index i_A * dim N + i_N. Requires A trivial and g
/// invariant (PreconditionError otherwise).
Cochain cochain_product(const RackTable& rack, const CoeffModule& a, const Cochain& f, const CoeffModule& n,
                        const Cochain& g);
/// Same product without the hypotheses, for counterexample searches.
Cochain cochain_product_unchecked(const RackTable& rack, const CoeffModule& a, const Cochain& f,
                                  const CoeffModule& n, const Cochain& g);

}  // namespace rackoh
