#include <catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "rackoh/errors.hpp"
#include "rackoh/linalg/field_algorithms.hpp"
#include "rackoh/linalg/smith.hpp"

using namespace rackoh::linalg;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();

ExactMatrix int_matrix(Ring ring, std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Rational>> r;
  for (auto& row : rows) {
    r.emplace_back();
    for (long v : row) r.back().emplace_back(v);
  }
  return ExactMatrix::from_rows(ring, r);
}

// Cofactor expansion; only used on tiny minors.
Integer determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Integer>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) minor.back().push_back(m[i][k]);
      }
    }
    Integer term = m[0][j] * determinant(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::function<void(const std::vector<std::size_t>&)> fn) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      fn(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

// Invariant factors from determinantal divisors: D_k = gcd of all k x k minors, d_k = D_k / D_{k-1}.
std::vector<Integer> invariant_factors_by_minors(const IntegerMatrix& a) {
  std::vector<Integer> factors;
  Integer previous = 1;
  for (std::size_t k = 1; k <= std::min(a.rows, a.cols); ++k) {
    Integer g = 0;
    subsets(a.rows, k, [&](const std::vector<std::size_t>& rs) {
      subsets(a.cols, k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = a(rs[i], cs[j]);
        Integer d = determinant(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

IntegerMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  IntegerMatrix m(rows, cols);
  for (auto& x : m.data) x = dist(rng);
  return m;
}

ExactMatrix to_exact(const IntegerMatrix& m, Ring ring = Z) {
  std::vector<std::vector<Rational>> rows(m.rows, std::vector<Rational>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) rows[i][j] = m(i, j);
  if (m.rows == 0) return ExactMatrix(ring, 0, m.cols);
  return ExactMatrix::from_rows(ring, rows);
}

IntegerMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntegerMatrix u = IntegerMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

}  // namespace

TEST_CASE("rank examples", "[linalg]") {
  CHECK(rank(ExactMatrix::identity(Q, 3)) == 3);
  CHECK(rank(int_matrix(Q, {{2, 4}, {6, 8}})) == 2);
  CHECK(rank(int_matrix(Ring::prime_field(2), {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(ExactMatrix(Q, 0, 4)) == 0);
  CHECK(rank(int_matrix(Z, {{2, 4}, {1, 2}})) == 1);
}

TEST_CASE("prime field modulus is checked", "[linalg]") {
  CHECK_THROWS_AS(Ring::prime_field(9), rackoh::InputError);
  CHECK(Ring::prime_field(7).reduce(Rational(-1)) == 6);
  CHECK(Ring::prime_field(7).reduce(Rational(1, 2)) == 4);
}

TEST_CASE("kernel basis examples", "[linalg]") {
  CHECK(kernel_basis(ExactMatrix(Q, 2, 3)).size() == 3);
  auto k = kernel_basis(int_matrix(Q, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == -k[0][1]);
  CHECK(k[0][0] != 0);
  CHECK(kernel_basis(ExactMatrix::identity(Q, 4)).empty());
  CHECK_THROWS_AS(kernel_basis(ExactMatrix::identity(Z, 2)), rackoh::PreconditionError);
}

TEST_CASE("solve examples", "[linalg]") {
  auto x = solve(ExactMatrix::identity(Q, 3), {Rational(1), Rational(0), Rational(0)});
  REQUIRE(x);
  CHECK(*x == Vector{Rational(1), Rational(0), Rational(0)});
  auto y = solve(int_matrix(Q, {{1, 1}}), {Rational(0)});
  REQUIRE(y);
  CHECK((*y)[0] + (*y)[1] == 0);
  CHECK_FALSE(solve(ExactMatrix(Q, 1, 1), {Rational(1)}));
  auto f = solve(int_matrix(Ring::prime_field(3), {{2, 0}, {0, 1}}), {Rational(1), Rational(2)});
  REQUIRE(f);
  CHECK((*f)[0] == 2);
  CHECK((*f)[1] == 2);
}

TEST_CASE("Smith normal form examples agree with the minors oracle", "[linalg][smith]") {
  // diag(2,3): gcd of entries 1, determinant 6.
  auto diag = IntegerMatrix::from_exact(int_matrix(Z, {{2, 0}, {0, 3}}));
  CHECK(invariant_factors_by_minors(diag) == std::vector<Integer>{1, 6});
  CHECK(smith_normal_form(diag).invariant_factors == std::vector<Integer>{1, 6});

  auto m = IntegerMatrix::from_exact(int_matrix(Z, {{2, 4}, {6, 8}}));
  CHECK(invariant_factors_by_minors(m) == std::vector<Integer>{2, 4});
  CHECK(smith_normal_form(m).invariant_factors == std::vector<Integer>{2, 4});

  CHECK(smith_normal_form(IntegerMatrix::identity(4)).invariant_factors == std::vector<Integer>(4, 1));
  CHECK_THROWS_AS(smith_normal_form(ExactMatrix::identity(Q, 2)), rackoh::PreconditionError);
}

TEST_CASE("Smith normal form on random matrices", "[linalg][smith][property]") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 4;
    IntegerMatrix a = random_integer_matrix(rng, rows, cols, 6);
    SmithOptions opts;
    opts.left_transform = true;
    opts.right_transform = true;
    SmithForm snf = smith_normal_form(a, opts);

    CHECK(snf.invariant_factors == invariant_factors_by_minors(a));
    for (std::size_t i = 0; i + 1 < snf.invariant_factors.size(); ++i) {
      CHECK(mpz_divisible_p(snf.invariant_factors[i + 1].get_mpz_t(), snf.invariant_factors[i].get_mpz_t()));
    }
    IntegerMatrix d = *snf.left * a * *snf.right;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        CHECK(d(i, j) == ((i == j && i < snf.rank) ? snf.invariant_factors[i] : Integer(0)));
    CHECK(*snf.right * *snf.right_inverse == IntegerMatrix::identity(cols));

    // Invariance under unimodular changes of basis.
    IntegerMatrix b = random_unimodular(rng, rows, 12) * a * random_unimodular(rng, cols, 12);
    CHECK(smith_normal_form(b).invariant_factors == snf.invariant_factors);
  }
}

TEST_CASE("Smith bit cap raises a resource error", "[linalg][smith]") {
  IntegerMatrix a(2, 2);
  a(0, 0) = Integer("123456789012345678901234567890");
  a(1, 1) = Integer("987654321098765432109876543211");
  a(0, 1) = 7;
  SmithOptions opts;
  opts.bit_cap = 8;
  CHECK_THROWS_AS(smith_normal_form(a, opts), rackoh::ResourceError);
}

TEST_CASE("rational rank: modular certificate agrees with exact elimination", "[linalg][property]") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 1 + trial % 7;
    const std::size_t cols = 1 + (trial * 3) % 8;
    // Low-rank products keep ranks interesting.
    const std::size_t inner = 1 + trial % 4;
    IntegerMatrix a = random_integer_matrix(rng, rows, inner, 3) * random_integer_matrix(rng, inner, cols, 3);
    ExactMatrix m = to_exact(a, Q);
    const std::size_t r = rank(m);
    CHECK(r == rank_exact_rational(m));
    auto kernel = kernel_basis(m);
    CHECK(r + kernel.size() == cols);
    for (const auto& v : kernel) {
      for (const auto& x : m.apply(v)) CHECK(x == 0);
    }

    // Rank mod p equals rank over Q whenever p divides no invariant factor.
    SmithForm snf = smith_normal_form(a);
    CHECK(snf.rank == r);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
      bool divides = false;
      for (const auto& d : snf.invariant_factors) divides = divides || mpz_divisible_ui_p(d.get_mpz_t(), p);
      const std::size_t rp = rank(m.in_ring(Ring::prime_field(p)));
      if (!divides) CHECK(rp == r);
      CHECK(rp <= r);
    }
  }
}

TEST_CASE("rational kernel with fractional entries", "[linalg]") {
  std::vector<std::vector<Rational>> rows = {{Rational(1, 3), Rational(2, 7), Rational(5)}, {Rational(2, 3), Rational(4, 7), Rational(10)}};
  ExactMatrix m = ExactMatrix::from_rows(Q, rows);
  CHECK(rank(m) == 1);
  auto kernel = kernel_basis(m);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel)
    for (const auto& x : m.apply(v)) CHECK(x == 0);
}

TEST_CASE("rational reconstruction", "[linalg]") {
  const Integer m("1000000007");
  const Rational target(-22, 7);
  Integer inv;
  Integer seven = 7;
  mpz_invert(inv.get_mpz_t(), seven.get_mpz_t(), m.get_mpz_t());
  Integer u = (Integer(-22) * inv) % m;
  if (u < 0) u += m;
  auto q = rational_reconstruction(u, m);
  REQUIRE(q);
  CHECK(*q == target);
}

TEST_CASE("column space basis spans the column space", "[linalg]") {
  ExactMatrix m = int_matrix(Q, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  ExactMatrix basis = column_space_basis(m);
  CHECK(basis.cols() == 2);
  CHECK(rank(basis.hstack(m)) == 2);
}

namespace {

// |ker(d_out mod q)| / |im(d_in mod q)| by enumerating (Z/q)^c.
Integer brute_force_order(const IntegerMatrix& d_in, const IntegerMatrix& d_out, long q) {
  const std::size_t c = d_out.cols;
  std::vector<long> v(c, 0);
  long kernel = 0;
  std::set<std::vector<long>> image;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == c) {
      bool zero = true;
      for (std::size_t r = 0; r < d_out.rows && zero; ++r) {
        Integer s = 0;
        for (std::size_t j = 0; j < c; ++j) s += d_out(r, j) * v[j];
        zero = mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(q));
      }
      kernel += zero;
      return;
    }
    for (long x = 0; x < q; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::vector<long> w(d_in.cols, 0);
  std::function<void(std::size_t)> img = [&](std::size_t i) {
    if (i == d_in.cols) {
      std::vector<long> out(c);
      for (std::size_t r = 0; r < c; ++r) {
        Integer s = 0;
        for (std::size_t j = 0; j < d_in.cols; ++j) s += d_in(r, j) * w[j];
        out[r] = mpz_fdiv_ui(s.get_mpz_t(), static_cast<unsigned long>(q));
      }
      image.insert(out);
      return;
    }
    for (long x = 0; x < q; ++x) {
      w[i] = x;
      img(i + 1);
    }
  };
  img(0);
  return Integer(kernel) / Integer(static_cast<long>(image.size()));
}

}  // namespace

TEST_CASE("integer cohomology of a small complex", "[linalg][lattice]") {
  // Z --2--> Z --0--> 0 : H = Z/2
  ExactMatrix d_in = int_matrix(Z, {{2}});
  ExactMatrix d_out(Z, 0, 1);
  CHECK(integer_cohomology(d_in, d_out).to_string() == "Z/2");
  CHECK(integer_cohomology(d_in, d_out, 4).to_string() == "Z/2");
  CHECK(integer_cohomology(d_in, d_out, 3).is_zero());
  CHECK(integer_cohomology(ExactMatrix(Z, 1, 0), d_out, 3).to_string() == "Z/3");
  CHECK(integer_cohomology(ExactMatrix(Z, 2, 0), int_matrix(Z, {{1, 1}})).to_string() == "Z");
}

TEST_CASE("integer cohomology on disguised block complexes", "[linalg][lattice][property]") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    // Coordinates split as (image block | complement); d_in hits the first
    // block with diag(a_i), d_out acts on the second with diag(b_j).
    std::vector<long> a = {1 + static_cast<long>(trial % 3), 2 * static_cast<long>(trial % 2)};
    std::vector<long> b = {static_cast<long>(trial % 4), 1};
    const std::size_t c = 4;
    IntegerMatrix din(c, 2);
    din(0, 0) = a[0];
    din(1, 1) = a[1];
    IntegerMatrix dout(2, c);
    dout(0, 2) = b[0];
    dout(1, 3) = b[1];
    IntegerMatrix w = random_unimodular(rng, c, 10);
    // W^{-1} via Smith transforms of W (unimodular, so V^{-1} U = W^{-1}).
    SmithOptions opts;
    opts.left_transform = true;
    opts.right_transform = true;
    SmithForm s = smith_normal_form(w, opts);
    IntegerMatrix winv = *s.right * *s.left;
    REQUIRE(w * winv == IntegerMatrix::identity(c));
    IntegerMatrix d_in = w * din;
    IntegerMatrix d_out = dout * winv;

    // Over Z: first block gives Z/a_i (a_i=0 -> Z); kernel of second block adds Z when b_j=0.
    AbelianGroup expected;
    for (long x : a) {
      if (x == 0) ++expected.free_rank;
      else if (x != 1) expected.torsion.push_back(x);
    }
    for (long y : b) {
      if (y == 0) ++expected.free_rank;
    }
    // Normalize to a divisibility chain: (x, y) -> (gcd, lcm) until stable.
    for (std::size_t i = 0; i < expected.torsion.size(); ++i)
      for (std::size_t j = i + 1; j < expected.torsion.size(); ++j) {
        Integer g, l;
        mpz_gcd(g.get_mpz_t(), expected.torsion[i].get_mpz_t(), expected.torsion[j].get_mpz_t());
        mpz_lcm(l.get_mpz_t(), expected.torsion[i].get_mpz_t(), expected.torsion[j].get_mpz_t());
        expected.torsion[i] = g;
        expected.torsion[j] = l;
      }
    std::erase(expected.torsion, Integer(1));
    CHECK(integer_cohomology(to_exact(d_in), to_exact(d_out)) == expected);

    for (long q : {2L, 3L, 4L}) {
      AbelianGroup g = integer_cohomology(to_exact(d_in), to_exact(d_out), q);
      CHECK(g.free_rank == 0);
      CHECK(g.order() == brute_force_order(d_in, d_out, q));
    }
  }
}
