#include "rackoh/linalg/smith.hpp"

#include <stdexcept>

#include "rackoh/errors.hpp"

namespace rackoh::linalg {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::from_exact(const ExactMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    for (const auto& e : m.column(c)) {
      if (e.value.get_den() != 1) throw InputError("non-integer entry in integer matrix");
      out(e.index, c) = e.value.get_num();
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols != rhs.rows) throw InputError("integer matrix product dimension mismatch");
  IntegerMatrix out(rows, rhs.cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t k = 0; k < cols; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

namespace {

class SmithEliminator {
 public:
  SmithEliminator(IntegerMatrix a, const SmithOptions& options)
      : m_(a.rows), n_(a.cols), rows_(a.rows), options_(options), limb_cap_(options.bit_cap / GMP_NUMB_BITS + 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      rows_[i].assign(std::make_move_iterator(a.data.begin() + static_cast<long>(i * n_)),
                      std::make_move_iterator(a.data.begin() + static_cast<long>((i + 1) * n_)));
    }
    if (options.left_transform) left_ = IntegerMatrix::identity(m_);
    if (options.right_transform) {
      right_ = IntegerMatrix::identity(n_);
      right_inverse_ = IntegerMatrix::identity(n_);
    }
  }

  SmithForm run() {
    std::size_t t = 0;
    const std::size_t limit = std::min(m_, n_);
    while (t < limit) {
      if (!move_smallest_to(t)) break;
      while (true) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m_; ++i) {
          if (rows_[i][t] == 0) continue;
          Integer q = nearest_quotient(rows_[i][t], rows_[t][t]);
          add_row(i, t, -q);
          if (rows_[i][t] != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n_; ++j) {
          if (rows_[t][j] == 0) continue;
          Integer q = nearest_quotient(rows_[t][j], rows_[t][t]);
          add_col(j, t, -q);
          if (rows_[t][j] != 0) clean = false;
        }
        if (!clean) {
          bring_line_minimum(t);
          continue;
        }
        if (auto row = non_divisible_row(t)) {
          add_row(t, *row, Integer(1));
          continue;
        }
        break;
      }
      if (rows_[t][t] < 0) negate_row(t);
      ++t;
    }
    SmithForm out;
    out.rank = t;
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(rows_[i][i]);
    out.left = std::move(left_);
    out.right = std::move(right_);
    out.right_inverse = std::move(right_inverse_);
    return out;
  }

 private:
  static Integer nearest_quotient(const Integer& a, const Integer& b) {
    Integer q;
    Integer r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // Floor division leaves r with the sign of b; r - b is the other candidate.
    if (2 * abs(r) > abs(b)) ++q;
    return q;
  }

  void check_size(const Integer& v) const {
    if (mpz_size(v.get_mpz_t()) > limb_cap_) {
      throw ResourceError("Smith normal form entry exceeded the bit cap of " + std::to_string(options_.bit_cap) +
                          " bits; retry with a modular strategy or a larger cap");
    }
  }

  // Moves a nonzero entry of least absolute value in the trailing block to (t,t).
  bool move_smallest_to(std::size_t t) {
    std::size_t best_i = m_;
    std::size_t best_j = n_;
    for (std::size_t i = t; i < m_; ++i) {
      for (std::size_t j = t; j < n_; ++j) {
        const Integer& v = rows_[i][j];
        if (v == 0) continue;
        if (best_i == m_ || cmpabs(v, rows_[best_i][best_j]) < 0) {
          best_i = i;
          best_j = j;
          if (v == 1 || v == -1) goto found;
        }
      }
    }
  found:
    if (best_i == m_) return false;
    swap_rows(t, best_i);
    swap_cols(t, best_j);
    return true;
  }

  // After a partial clear, the leftover remainders in row/column t are smaller than the pivot.
  void bring_line_minimum(std::size_t t) {
    std::size_t best_i = t;
    std::size_t best_j = t;
    for (std::size_t i = t + 1; i < m_; ++i) {
      if (rows_[i][t] != 0 && cmpabs(rows_[i][t], rows_[best_i][best_j]) < 0) {
        best_i = i;
        best_j = t;
      }
    }
    for (std::size_t j = t + 1; j < n_; ++j) {
      if (rows_[t][j] != 0 && cmpabs(rows_[t][j], rows_[best_i][best_j]) < 0) {
        best_i = t;
        best_j = j;
      }
    }
    swap_rows(t, best_i);
    swap_cols(t, best_j);
  }

  std::optional<std::size_t> non_divisible_row(std::size_t t) const {
    const Integer& pivot = rows_[t][t];
    if (pivot == 1 || pivot == -1) return std::nullopt;
    for (std::size_t i = t + 1; i < m_; ++i) {
      for (std::size_t j = t + 1; j < n_; ++j) {
        if (rows_[i][j] != 0 && !mpz_divisible_p(rows_[i][j].get_mpz_t(), pivot.get_mpz_t())) return i;
      }
    }
    return std::nullopt;
  }

  static int cmpabs(const Integer& a, const Integer& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

  // row_target += factor * row_source
  void add_row(std::size_t target, std::size_t source, const Integer& factor) {
    auto& dst = rows_[target];
    const auto& src = rows_[source];
    for (std::size_t j = 0; j < n_; ++j) {
      if (src[j] == 0) continue;
      mpz_addmul(dst[j].get_mpz_t(), src[j].get_mpz_t(), factor.get_mpz_t());
      check_size(dst[j]);
    }
    if (left_) {
      for (std::size_t j = 0; j < m_; ++j) mpz_addmul((*left_)(target, j).get_mpz_t(), (*left_)(source, j).get_mpz_t(), factor.get_mpz_t());
    }
  }

  // col_target += factor * col_source
  void add_col(std::size_t target, std::size_t source, const Integer& factor) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (rows_[i][source] == 0) continue;
      mpz_addmul(rows_[i][target].get_mpz_t(), rows_[i][source].get_mpz_t(), factor.get_mpz_t());
      check_size(rows_[i][target]);
    }
    if (right_) {
      auto& v = *right_;
      auto& vinv = *right_inverse_;
      for (std::size_t i = 0; i < n_; ++i) mpz_addmul(v(i, target).get_mpz_t(), v(i, source).get_mpz_t(), factor.get_mpz_t());
      // V^{-1} picks up the inverse operation on rows: row_source -= factor * row_target.
      for (std::size_t j = 0; j < n_; ++j) mpz_submul(vinv(source, j).get_mpz_t(), vinv(target, j).get_mpz_t(), factor.get_mpz_t());
    }
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap(rows_[a], rows_[b]);
    if (left_) {
      for (std::size_t j = 0; j < m_; ++j) std::swap((*left_)(a, j), (*left_)(b, j));
    }
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& row : rows_) std::swap(row[a], row[b]);
    if (right_) {
      for (std::size_t i = 0; i < n_; ++i) std::swap((*right_)(i, a), (*right_)(i, b));
      for (std::size_t j = 0; j < n_; ++j) std::swap((*right_inverse_)(a, j), (*right_inverse_)(b, j));
    }
  }

  void negate_row(std::size_t t) {
    for (auto& v : rows_[t]) v = -v;
    if (left_) {
      for (std::size_t j = 0; j < m_; ++j) (*left_)(t, j) = -(*left_)(t, j);
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Integer>> rows_;
  SmithOptions options_;
  std::size_t limb_cap_;
  std::optional<IntegerMatrix> left_;
  std::optional<IntegerMatrix> right_;
  std::optional<IntegerMatrix> right_inverse_;
};

}  // namespace

SmithForm smith_normal_form(IntegerMatrix matrix, const SmithOptions& options) {
  return SmithEliminator(std::move(matrix), options).run();
}

SmithForm smith_normal_form(const ExactMatrix& matrix, const SmithOptions& options) {
  if (matrix.ring().kind() != RingKind::Integers) {
    throw PreconditionError("Smith normal form requires an integer matrix, got ring " + matrix.ring().name());
  }
  return smith_normal_form(IntegerMatrix::from_exact(matrix), options);
}

Integer AbelianGroup::order() const {
  if (free_rank > 0) throw PreconditionError("infinite abelian group has no finite order");
  Integer out = 1;
  for (const auto& t : torsion) out *= t;
  return out;
}

std::string AbelianGroup::to_string() const {
  std::string out;
  if (free_rank > 0) out = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const auto& t : torsion) {
    if (!out.empty()) out += " + ";
    out += "Z/" + t.get_str();
  }
  return out.empty() ? "0" : out;
}

AbelianGroup integer_cohomology(const ExactMatrix& d_in, const ExactMatrix& d_out, const Integer& q, std::size_t bit_cap) {
  const std::size_t c = d_out.cols();
  if (d_in.rows() != c) throw InputError("complex maps have incompatible dimensions");
  if (c == 0) return {};

  SmithOptions options;
  options.right_transform = true;
  options.bit_cap = bit_cap;
  const SmithForm outgoing = smith_normal_form(IntegerMatrix::from_exact(d_out), options);
  const std::size_t s = outgoing.rank;
  const IntegerMatrix images = *outgoing.right_inverse * IntegerMatrix::from_exact(d_in);

  SmithOptions plain;
  plain.bit_cap = bit_cap;
  AbelianGroup group;
  if (q == 0) {
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < images.cols; ++j) {
        if (images(i, j) != 0) throw std::logic_error("integer_cohomology: d_out * d_in != 0");
      }
    }
    IntegerMatrix coords(c - s, images.cols);
    for (std::size_t i = s; i < c; ++i) {
      for (std::size_t j = 0; j < images.cols; ++j) coords(i - s, j) = images(i, j);
    }
    const SmithForm quotient = smith_normal_form(std::move(coords), plain);
    group.free_rank = (c - s) - quotient.rank;
    for (const auto& d : quotient.invariant_factors) {
      if (d != 1) group.torsion.push_back(d);
    }
    return group;
  }

  // Lattice {v : d_out v = 0 mod q} = V * diag(e) * Z^c.
  std::vector<Integer> scale(c, Integer(1));
  for (std::size_t i = 0; i < s; ++i) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), outgoing.invariant_factors[i].get_mpz_t(), q.get_mpz_t());
    scale[i] = q / g;
  }
  const IntegerMatrix& vinv = *outgoing.right_inverse;
  IntegerMatrix coords(c, images.cols + c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < images.cols + c; ++j) {
      Integer v = j < images.cols ? images(i, j) : Integer(q * vinv(i, j - images.cols));
      if (!mpz_divisible_p(v.get_mpz_t(), scale[i].get_mpz_t())) {
        throw std::logic_error("integer_cohomology: d_out * d_in != 0 mod q");
      }
      coords(i, j) = v / scale[i];
    }
  }
  const SmithForm quotient = smith_normal_form(std::move(coords), plain);
  for (const auto& d : quotient.invariant_factors) {
    if (d != 1) group.torsion.push_back(d);
  }
  return group;
}

}  // namespace rackoh::linalg
