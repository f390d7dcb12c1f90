#pragma once

#include <cstdint>
#include <span>
#include <string>

#include <gmpxx.h>

namespace rackoh::linalg {

using Integer = mpz_class;
using Rational = mpq_class;

enum class RingKind { Integers, Rationals, PrimeField };

/// Coefficient ring of an exact matrix: Z, Q or F_p.
class Ring {
 public:
  static Ring integers() { return Ring(RingKind::Integers, 0); }
  static Ring rationals() { return Ring(RingKind::Rationals, 0); }
  /// Throws InputError unless p is prime.
  static Ring prime_field(std::uint64_t p);

  RingKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  /// "Z", "Q" or "F<p>".
  std::string name() const;

  /// Canonical representative of v in this ring: residues in [0,p) for F_p,
  /// the value itself otherwise. Throws InputError if v is not an element
  /// (a non-integer over Z, a denominator divisible by p over F_p).
  Rational reduce(const Rational& v) const;

  /// Multiplicative inverse, throws PreconditionError for non-units.
  Rational inverse(const Rational& v) const;

  bool operator==(const Ring&) const = default;

 private:
  Ring(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Image of a rational in F_p; throws PreconditionError if p divides the denominator.
std::uint64_t to_residue(const Rational& v, std::uint64_t p);

/// Largest primes below 2^62 in decreasing order, computed once.
std::span<const std::uint64_t> large_primes();

}  // namespace rackoh::linalg
