#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rackoh/linalg/exact_matrix.hpp"

namespace rackoh::linalg {

/// Dense integer matrix, row-major.
struct IntegerMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  static IntegerMatrix identity(std::size_t n);
  /// Requires integer entries (throws InputError otherwise).
  static IntegerMatrix from_exact(const ExactMatrix& m);

  Integer& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;
};

struct SmithOptions {
  bool left_transform = false;   // U
  bool right_transform = false;  // V and V^{-1}
  /// Largest permitted entry size in bits during elimination.
  std::size_t bit_cap = 1 << 16;
};

/// U * A * V = diag(d_1, ..., d_r, 0, ...) with d_1 | d_2 | ... | d_r, all positive.
struct SmithForm {
  std::vector<Integer> invariant_factors;
  std::size_t rank = 0;
  std::optional<IntegerMatrix> left;
  std::optional<IntegerMatrix> right;
  std::optional<IntegerMatrix> right_inverse;
};

/// Classical elimination pivoting on entries of minimal absolute value.
/// Throws PreconditionError for non-integer rings and ResourceError when an
/// entry outgrows options.bit_cap.
SmithForm smith_normal_form(const ExactMatrix& matrix, const SmithOptions& options = {});
SmithForm smith_normal_form(IntegerMatrix matrix, const SmithOptions& options = {});

/// Finitely generated abelian group Z^free_rank + sum Z/t_i, t_1 | t_2 | ...
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  /// Order of a finite group (throws PreconditionError when free_rank > 0).
  Integer order() const;
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// ker(d_out) / im(d_in) for the complex  Z^a --d_in--> Z^c --d_out--> Z^r
/// tensored with Z/q (q = 0 means over Z itself). The lattice
/// {v : d_out v in q Z^r} is read off a Smith form of d_out with column
/// transforms; the image is expressed in that lattice basis and a second Smith
/// form gives the quotient. Requires d_out * d_in = 0 mod q.
AbelianGroup integer_cohomology(const ExactMatrix& d_in, const ExactMatrix& d_out, const Integer& q = 0,
                                std::size_t bit_cap = 1 << 16);

}  // namespace rackoh::linalg
