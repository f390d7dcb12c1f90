#include "rackoh/linalg/field_algorithms.hpp"

#include <algorithm>

#include "rackoh/errors.hpp"
#include "rackoh/linalg/sparse_echelon.hpp"

namespace rackoh::linalg {

namespace {

using IntegerRow = std::vector<std::pair<std::uint32_t, Integer>>;

std::vector<SparseVector> rows_of(const ExactMatrix& m) {
  std::vector<SparseVector> rows(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) rows[e.index].push_back({c, e.value});
  }
  return rows;
}

// Rows scaled by the lcm of their denominators; the row space is unchanged.
std::vector<IntegerRow> integer_rows(const ExactMatrix& m) {
  std::vector<IntegerRow> out;
  for (const auto& row : rows_of(m)) {
    if (row.empty()) continue;
    Integer scale = 1;
    for (const auto& e : row) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.value.get_den_mpz_t());
    IntegerRow scaled;
    scaled.reserve(row.size());
    for (const auto& e : row) scaled.emplace_back(static_cast<std::uint32_t>(e.index), Integer(e.value.get_num() * (scale / e.value.get_den())));
    out.push_back(std::move(scaled));
  }
  return out;
}

std::uint64_t residue(const Integer& v, std::uint64_t p) {
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

template <class Field, class MakeRow>
SparseEchelon<Field> eliminate(Field field, std::size_t cols, std::size_t row_count, MakeRow make_row) {
  SparseEchelon<Field> echelon(std::move(field), cols);
  for (std::size_t r = 0; r < row_count; ++r) {
    if (echelon.rank() == cols) break;
    echelon.insert(make_row(r));
  }
  return echelon;
}

SparseEchelon<PrimeFieldOps> eliminate_mod_p(const std::vector<IntegerRow>& rows, std::size_t cols, std::uint64_t p) {
  return eliminate(PrimeFieldOps{p}, cols, rows.size(), [&](std::size_t r) {
    SparseEchelon<PrimeFieldOps>::Row row;
    row.reserve(rows[r].size());
    for (const auto& [c, v] : rows[r]) {
      const std::uint64_t x = residue(v, p);
      if (x != 0) row.emplace_back(c, x);
    }
    return row;
  });
}

SparseEchelon<PrimeFieldOps> eliminate_field_matrix(const ExactMatrix& m) {
  const auto rows = rows_of(m);
  const std::uint64_t p = m.ring().modulus();
  return eliminate(PrimeFieldOps{p}, m.cols(), rows.size(), [&](std::size_t r) {
    SparseEchelon<PrimeFieldOps>::Row row;
    for (const auto& e : rows[r]) row.emplace_back(static_cast<std::uint32_t>(e.index), mpz_get_ui(e.value.get_num_mpz_t()));
    return row;
  });
}

SparseEchelon<RationalOps> eliminate_rational(const ExactMatrix& m) {
  const auto rows = rows_of(m);
  return eliminate(RationalOps{}, m.cols(), rows.size(), [&](std::size_t r) {
    SparseEchelon<RationalOps>::Row row;
    for (const auto& e : rows[r]) row.emplace_back(static_cast<std::uint32_t>(e.index), e.value);
    return row;
  });
}

template <class Field, class Convert>
std::vector<Vector> kernel_from_reduced(const SparseEchelon<Field>& echelon, Convert convert) {
  const std::size_t n = echelon.cols();
  std::vector<long> free_slot(n, -1);
  std::vector<Vector> kernel;
  for (std::size_t c = 0; c < n; ++c) {
    if (!echelon.is_pivot(c)) {
      free_slot[c] = static_cast<long>(kernel.size());
      Vector v(n);
      v[c] = 1;
      kernel.push_back(std::move(v));
    }
  }
  for (std::size_t lead : echelon.pivot_columns()) {
    const auto& row = echelon.pivot_row(lead);
    for (std::size_t i = 1; i < row.size(); ++i) {
      const long slot = free_slot[row[i].first];
      if (slot >= 0) kernel[static_cast<std::size_t>(slot)][lead] = -convert(row[i].second);
    }
  }
  return kernel;
}

struct CertifiedKernel {
  std::vector<std::size_t> pivots;
  std::vector<Vector> kernel;
};

// Modular RREF lifted to Q by CRT + rational reconstruction, accepted only
// with an exact bound certificate (see rank()).
std::optional<CertifiedKernel> certified_kernel(const ExactMatrix& m) {
  const std::size_t n = m.cols();
  const auto rows = integer_rows(m);
  Integer row_bound = 0;
  for (const auto& row : rows) {
    Integer sum = 0;
    for (const auto& [c, v] : row) sum += abs(v);
    if (sum > row_bound) row_bound = sum;
  }

  std::vector<std::size_t> pivots;
  // Residues of the non-leading RREF entries, per pivot row, modulo `modulus`.
  std::vector<std::vector<std::pair<std::uint32_t, Integer>>> residues;
  Integer modulus = 0;
  std::size_t attempts = 0;

  for (const std::uint64_t p : large_primes()) {
    if (++attempts > 5) break;
    auto echelon = eliminate_mod_p(rows, n, p);
    auto found = echelon.pivot_columns();
    if (modulus != 0) {
      if (found.size() < pivots.size()) continue;
      if (found.size() > pivots.size() || found < pivots) {
        modulus = 0;
      } else if (found != pivots) {
        continue;
      }
    }
    if (found.size() == n) return CertifiedKernel{std::move(found), {}};
    echelon.make_reduced();

    std::vector<std::vector<std::pair<std::uint32_t, Integer>>> current;
    current.reserve(found.size());
    for (std::size_t lead : found) {
      const auto& row = echelon.pivot_row(lead);
      std::vector<std::pair<std::uint32_t, Integer>> entries;
      for (std::size_t i = 1; i < row.size(); ++i) {
        Integer v;
        mpz_set_ui(v.get_mpz_t(), row[i].second);
        entries.emplace_back(row[i].first, std::move(v));
      }
      current.push_back(std::move(entries));
    }

    Integer pz;
    mpz_set_ui(pz.get_mpz_t(), p);
    if (modulus == 0) {
      pivots = std::move(found);
      residues = std::move(current);
      modulus = pz;
    } else {
      // x = a (mod M), x = b (mod p)  =>  x = a + M * ((b - a) * M^{-1} mod p)
      Integer m_inv;
      Integer m_mod_p = modulus % pz;
      mpz_invert(m_inv.get_mpz_t(), m_mod_p.get_mpz_t(), pz.get_mpz_t());
      for (std::size_t r = 0; r < residues.size(); ++r) {
        std::vector<std::pair<std::uint32_t, Integer>> merged;
        const auto& a = residues[r];
        const auto& b = current[r];
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < a.size() || j < b.size()) {
          std::uint32_t col;
          Integer av = 0;
          Integer bv = 0;
          if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
            col = a[i].first;
            av = a[i++].second;
          } else if (i >= a.size() || b[j].first < a[i].first) {
            col = b[j].first;
            bv = b[j++].second;
          } else {
            col = a[i].first;
            av = a[i++].second;
            bv = b[j++].second;
          }
          Integer t = ((bv - av) * m_inv) % pz;
          if (t < 0) t += pz;
          Integer x = av + modulus * t;
          if (x != 0) merged.emplace_back(col, std::move(x));
        }
        residues[r] = std::move(merged);
      }
      modulus *= pz;
    }

    // Lift and certify.
    bool lifted = true;
    std::vector<std::vector<std::pair<std::uint32_t, Rational>>> rational_rows(residues.size());
    for (std::size_t r = 0; r < residues.size() && lifted; ++r) {
      for (const auto& [col, u] : residues[r]) {
        auto q = rational_reconstruction(u, modulus);
        if (!q) {
          lifted = false;
          break;
        }
        rational_rows[r].emplace_back(col, std::move(*q));
      }
    }
    if (!lifted) continue;

    std::vector<long> free_slot(n, -1);
    std::vector<std::size_t> free_cols;
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) {
        free_slot[c] = static_cast<long>(free_cols.size());
        free_cols.push_back(c);
      }
    }
    std::vector<Vector> kernel(free_cols.size(), Vector(n));
    for (std::size_t k = 0; k < free_cols.size(); ++k) kernel[k][free_cols[k]] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (const auto& [col, q] : rational_rows[r]) {
        const long slot = free_slot[col];
        if (slot < 0) continue;
        kernel[static_cast<std::size_t>(slot)][pivots[r]] = -q;
      }
    }

    // A*K' = 0 mod M for the integer rescaling K' of each vector; if
    // |A*K'| < M/2 entrywise it is zero over Z.
    bool certified = true;
    for (const auto& v : kernel) {
      Integer lcm = 1;
      for (const auto& x : v) {
        if (x != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
      }
      Integer largest = 0;
      for (const auto& x : v) {
        if (x == 0) continue;
        Integer scaled = abs(x.get_num()) * (lcm / x.get_den());
        if (scaled > largest) largest = scaled;
      }
      if (2 * row_bound * largest >= modulus) {
        certified = false;
        break;
      }
    }
    if (certified) return CertifiedKernel{pivots, std::move(kernel)};
  }
  return std::nullopt;
}

void require_field(const ExactMatrix& m, const char* op) {
  if (!m.ring().is_field()) throw PreconditionError(std::string(op) + " requires a field ring, got " + m.ring().name());
}

}  // namespace

std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m) {
  // Extended Euclid on (m, u), stopping once the remainder drops below sqrt(m/2).
  Integer bound;
  Integer half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  Integer r0 = m;
  Integer r1 = u % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0;
  Integer t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  Integer g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  Rational q(r1, t1);
  q.canonicalize();
  return q;
}

std::size_t rank_mod_p(const ExactMatrix& matrix, std::uint64_t p) {
  return eliminate_mod_p(integer_rows(matrix), matrix.cols(), p).rank();
}

std::size_t rank_exact_rational(const ExactMatrix& matrix) {
  return eliminate_rational(matrix.in_ring(Ring::rationals())).rank();
}

std::vector<Vector> kernel_basis_exact_rational(const ExactMatrix& matrix) {
  auto echelon = eliminate_rational(matrix.in_ring(Ring::rationals()));
  echelon.make_reduced();
  return kernel_from_reduced(echelon, [](const Rational& v) { return v; });
}

std::size_t rank(const ExactMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
  if (matrix.ring().kind() == RingKind::PrimeField) return eliminate_field_matrix(matrix).rank();
  if (auto certified = certified_kernel(matrix)) return certified->pivots.size();
  return rank_exact_rational(matrix);
}

std::vector<Vector> kernel_basis(const ExactMatrix& matrix) {
  require_field(matrix, "kernel_basis");
  if (matrix.ring().kind() == RingKind::PrimeField) {
    auto echelon = eliminate_field_matrix(matrix);
    echelon.make_reduced();
    auto kernel = kernel_from_reduced(echelon, [](std::uint64_t v) {
      Rational out;
      mpz_set_ui(out.get_num_mpz_t(), v);
      return out;
    });
    for (auto& v : kernel) {
      for (auto& x : v) x = matrix.ring().reduce(x);
    }
    return kernel;
  }
  if (matrix.cols() == 0) return {};
  if (auto certified = certified_kernel(matrix)) return std::move(certified->kernel);
  return kernel_basis_exact_rational(matrix);
}

std::optional<Vector> solve(const ExactMatrix& matrix, const Vector& rhs) {
  require_field(matrix, "solve");
  if (rhs.size() != matrix.rows()) throw InputError("right-hand side length does not match matrix rows");
  const std::size_t n = matrix.cols();
  // x solves A x = b iff (x, -1) lies in the kernel of [A | b].
  ExactMatrix augmented = matrix.hstack(ExactMatrix::from_columns(matrix.ring(), matrix.rows(), {rhs}));
  for (const auto& v : kernel_basis(augmented)) {
    if (v[n] == 0) continue;
    const Rational scale = matrix.ring().inverse(-v[n]);
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = matrix.ring().reduce(v[i] * scale);
    return x;
  }
  return std::nullopt;
}

ExactMatrix column_space_basis(const ExactMatrix& matrix) {
  require_field(matrix, "column_space_basis");
  std::vector<std::size_t> pivots;
  if (matrix.ring().kind() == RingKind::PrimeField) {
    pivots = eliminate_field_matrix(matrix).pivot_columns();
  } else if (auto certified = certified_kernel(matrix)) {
    pivots = std::move(certified->pivots);
  } else {
    pivots = eliminate_rational(matrix).pivot_columns();
  }
  ExactMatrix out(matrix.ring(), matrix.rows(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) out.set_column(i, matrix.column(pivots[i]));
  return out;
}

}  // namespace rackoh::linalg
