#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rackoh/linalg/exact_matrix.hpp"
#include "rackoh/rack/rack_table.hpp"

namespace rackoh {

using linalg::DenseMatrix;
using linalg::Rational;
using linalg::Ring;

enum class ModuleKind {
  Trivial,        // every A_x = I
  Jordan,         // every A_x = J_k(t)
  SameOperator,   // every A_x = A
  FunctionsOnX,   // Fun(X, R) with (h.y)(x) = h(y |> x)
  Tensor,         // M (x) N with the diagonal action
  Custom,
};

/// A free module R^k with a right action of the rack elements.
///
/// Vectors are rows and act by v.x = v * A_x, so the structure group relation
/// x.y = (x |> y).x reads A_x A_y = A_{x|>y} A_x. Every instance is checked
/// against that relation and for invertibility of each A_x over R.
class CoeffModule {
 public:
  /// Throws InputError on shape errors or failed compatibility, PreconditionError
  /// when some A_x is not invertible over the ring.
  static CoeffModule custom(const RackTable& rack, Ring ring, std::vector<DenseMatrix> action);

  static CoeffModule trivial(const RackTable& rack, Ring ring, std::size_t dim = 1);
  /// v_i.x = t v_i + v_{i-1} (v_0 = 0) for every x; t must be a unit of the ring.
  static CoeffModule jordan(const RackTable& rack, Ring ring, const Rational& t, std::size_t k);
  static CoeffModule same_operator(const RackTable& rack, DenseMatrix a);
  /// Basis delta_z of Fun(X, R); delta_z . y = delta_{phi_y^{-1}(z)}.
  static CoeffModule functions_on_rack(const RackTable& rack, Ring ring);
  static CoeffModule tensor(const CoeffModule& m, const CoeffModule& n);

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  std::size_t rack_size() const { return action_.size(); }
  ModuleKind kind() const { return kind_; }
  /// Jordan eigenvalue, when kind() == Jordan.
  const std::optional<Rational>& jordan_eigenvalue() const { return eigenvalue_; }

  const DenseMatrix& action(Element x) const { return action_[x]; }
  const DenseMatrix& action_inverse(Element x) const { return inverse_[x]; }
  bool is_trivial() const;

  /// The same module with its matrices reinterpreted in another ring
  /// (e.g. an integer module over F_p).
  CoeffModule in_ring(const RackTable& rack, Ring ring) const;

  /// Short description such as "trivial Q^1" or "jordan(t=1,k=2) over Q".
  std::string describe() const;

 private:
  CoeffModule(Ring ring, std::size_t dim, std::vector<DenseMatrix> action, ModuleKind kind);
  static CoeffModule checked(const RackTable& rack, Ring ring, std::size_t dim, std::vector<DenseMatrix> action,
                             ModuleKind kind);

  Ring ring_;
  std::size_t dim_;
  std::vector<DenseMatrix> action_;
  std::vector<DenseMatrix> inverse_;
  ModuleKind kind_;
  std::optional<Rational> eigenvalue_;
};

}  // namespace rackoh
