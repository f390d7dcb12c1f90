#include "rackoh/linalg/ring.hpp"

#include <array>
#include <vector>

#include "rackoh/errors.hpp"

namespace rackoh::linalg {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  // p is prime, so Fermat suffices.
  return pow_mod(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for every n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::span<const std::uint64_t> large_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    std::uint64_t candidate = (1ULL << 62) - 1;
    while (out.size() < 8) {
      if (is_prime(candidate)) out.push_back(candidate);
      candidate -= 2;
    }
    return out;
  }();
  return primes;
}

std::uint64_t to_residue(const Rational& v, std::uint64_t p) {
  mpz_class pz;
  mpz_set_ui(pz.get_mpz_t(), p);
  mpz_class num = v.get_num() % pz;
  if (num < 0) num += pz;
  mpz_class den = v.get_den() % pz;
  if (den == 0) throw PreconditionError("denominator divisible by the field characteristic " + std::to_string(p));
  const std::uint64_t n = mpz_get_ui(num.get_mpz_t());
  const std::uint64_t d = mpz_get_ui(den.get_mpz_t());
  return mul_mod(n, inv_mod(d, p), p);
}

Ring Ring::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw InputError("prime field modulus " + std::to_string(p) + " is not prime");
  return Ring(RingKind::PrimeField, p);
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F" + std::to_string(modulus_);
  }
  return "?";
}

Rational Ring::reduce(const Rational& v) const {
  switch (kind_) {
    case RingKind::Rationals:
      return v;
    case RingKind::Integers:
      if (v.get_den() != 1) throw InputError("non-integer entry " + v.get_str() + " over Z");
      return v;
    case RingKind::PrimeField: {
      Rational out;
      mpz_set_ui(out.get_num_mpz_t(), to_residue(v, modulus_));
      return out;
    }
  }
  return v;
}

Rational Ring::inverse(const Rational& v) const {
  switch (kind_) {
    case RingKind::Rationals:
      if (v == 0) throw PreconditionError("zero is not invertible");
      return 1 / v;
    case RingKind::Integers:
      if (v != 1 && v != -1) throw PreconditionError(v.get_str() + " is not a unit in Z");
      return v;
    case RingKind::PrimeField: {
      const std::uint64_t r = to_residue(v, modulus_);
      if (r == 0) throw PreconditionError("zero is not invertible in " + name());
      Rational out;
      mpz_set_ui(out.get_num_mpz_t(), inv_mod(r, modulus_));
      return out;
    }
  }
  return v;
}

}  // namespace rackoh::linalg
