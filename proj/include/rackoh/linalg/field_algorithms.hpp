#pragma once

#include <optional>
#include <vector>

#include "rackoh/linalg/exact_matrix.hpp"

namespace rackoh::linalg {

/// Rank over the matrix's ring. Over Z the rank is the rank over Q.
///
/// Rational ranks are computed modulo 62-bit primes and certified exactly:
/// the modular kernel is lifted by rational reconstruction and the lift is
/// accepted only when |A*K| is provably below half the modulus, which forces
/// A*K = 0 over Q. Uncertified cases fall back to exact elimination over Q.
std::size_t rank(const ExactMatrix& matrix);

/// Basis of the right kernel, in reduced echelon form (each vector has a 1 on
/// its own free column). Requires a field ring.
std::vector<Vector> kernel_basis(const ExactMatrix& matrix);

/// Some x with A x = b, or nullopt if the system is inconsistent. Requires a field ring.
std::optional<Vector> solve(const ExactMatrix& matrix, const Vector& rhs);

/// Columns of the result form a basis of the column space (field ring).
ExactMatrix column_space_basis(const ExactMatrix& matrix);

/// Plain sparse elimination over Q, no modular shortcut.
std::size_t rank_exact_rational(const ExactMatrix& matrix);
std::vector<Vector> kernel_basis_exact_rational(const ExactMatrix& matrix);

/// Rank of the reduction mod p of a Z/Q matrix (denominators must be prime to p).
std::size_t rank_mod_p(const ExactMatrix& matrix, std::uint64_t p);

/// Rational number r/s with |r|,|s| <= sqrt(m/2) and r = s*u mod m, if any.
std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m);

}  // namespace rackoh::linalg
