#pragma once

#include <cstddef>
#include <vector>

#include "rackoh/linalg/ring.hpp"

namespace rackoh::linalg {

using Vector = std::vector<Rational>;

struct Entry {
  std::size_t index;
  Rational value;
};

/// Nonzero entries sorted by index.
using SparseVector = std::vector<Entry>;

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

class DenseMatrix;

/// Exact matrix over Z, Q or F_p stored as a coordinate list per column.
///
/// Entries are always reduced into the ring (residues in [0,p) over F_p) and
/// explicit zeros are never stored. The matrix acts on column vectors, so a
/// map V -> W has dim W rows and dim V columns.
class ExactMatrix {
 public:
  ExactMatrix() : ring_(Ring::rationals()) {}
  ExactMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static ExactMatrix identity(Ring ring, std::size_t n);
  static ExactMatrix from_rows(Ring ring, const std::vector<std::vector<Rational>>& rows);
  /// Duplicate coordinates are summed.
  static ExactMatrix from_triplets(Ring ring, std::size_t rows, std::size_t cols, std::vector<Triplet> triplets);
  static ExactMatrix from_columns(Ring ring, std::size_t rows, const std::vector<Vector>& columns);
  static ExactMatrix from_dense(const DenseMatrix& dense);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const SparseVector& column(std::size_t c) const { return columns_[c]; }
  Rational at(std::size_t r, std::size_t c) const;
  /// Replaces column c; entries are reduced, zeros dropped, indices must be sorted and < rows.
  void set_column(std::size_t c, SparseVector entries);

  /// A * v in the ring.
  Vector apply(const Vector& v) const;
  ExactMatrix operator*(const ExactMatrix& rhs) const;
  ExactMatrix operator+(const ExactMatrix& rhs) const;
  ExactMatrix operator-(const ExactMatrix& rhs) const;
  ExactMatrix scaled(const Rational& factor) const;
  ExactMatrix transposed() const;
  /// Same entries reinterpreted in another ring (reduced on the way).
  ExactMatrix in_ring(const Ring& ring) const;

  /// [this | rhs]
  ExactMatrix hstack(const ExactMatrix& rhs) const;
  /// [this ; rhs]
  ExactMatrix vstack(const ExactMatrix& rhs) const;

  std::vector<std::vector<Rational>> to_dense() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Small dense matrix, used for module action matrices.
class DenseMatrix {
 public:
  DenseMatrix() : ring_(Ring::rationals()) {}
  DenseMatrix(Ring ring, std::size_t rows, std::size_t cols);

  static DenseMatrix identity(Ring ring, std::size_t n);
  static DenseMatrix from_rows(Ring ring, const std::vector<std::vector<Rational>>& rows);

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores ring().reduce(value).
  void set(std::size_t r, std::size_t c, const Rational& value);

  DenseMatrix operator*(const DenseMatrix& rhs) const;
  DenseMatrix operator-(const DenseMatrix& rhs) const;
  bool is_identity() const;
  /// Throws PreconditionError when not invertible over the ring.
  DenseMatrix inverse() const;

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) = default;

 private:
  Ring ring_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace rackoh::linalg
