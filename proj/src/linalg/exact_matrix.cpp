#include "rackoh/linalg/exact_matrix.hpp"

#include <algorithm>
#include <string>

#include "rackoh/errors.hpp"

namespace rackoh::linalg {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw InputError(message);
}

// Reduces a coordinate-sorted list in place: merges duplicates, reduces into
// the ring and drops zeros.
void normalize(SparseVector& entries, const Ring& ring) {
  SparseVector out;
  out.reserve(entries.size());
  for (auto& e : entries) {
    if (!out.empty() && out.back().index == e.index) {
      out.back().value += e.value;
    } else {
      out.push_back(std::move(e));
    }
  }
  std::size_t kept = 0;
  for (auto& e : out) {
    e.value = ring.reduce(e.value);
    if (e.value != 0) out[kept++] = std::move(e);
  }
  out.resize(kept);
  entries = std::move(out);
}

}  // namespace

ExactMatrix::ExactMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), columns_(cols) {}

ExactMatrix ExactMatrix::identity(Ring ring, std::size_t n) {
  ExactMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.columns_[i].push_back({i, Rational(1)});
  return m;
}

ExactMatrix ExactMatrix::from_rows(Ring ring, const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ExactMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      Rational v = ring.reduce(rows[r][c]);
      if (v != 0) m.columns_[c].push_back({r, std::move(v)});
    }
  }
  return m;
}

ExactMatrix ExactMatrix::from_triplets(Ring ring, std::size_t rows, std::size_t cols, std::vector<Triplet> triplets) {
  ExactMatrix m(ring, rows, cols);
  std::vector<std::size_t> counts(cols, 0);
  for (const auto& t : triplets) {
    require(t.row < rows && t.col < cols, "triplet out of range");
    ++counts[t.col];
  }
  for (std::size_t c = 0; c < cols; ++c) m.columns_[c].reserve(counts[c]);
  for (auto& t : triplets) m.columns_[t.col].push_back({t.row, std::move(t.value)});
  for (auto& column : m.columns_) {
    std::stable_sort(column.begin(), column.end(), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    normalize(column, ring);
  }
  return m;
}

ExactMatrix ExactMatrix::from_columns(Ring ring, std::size_t rows, const std::vector<Vector>& columns) {
  ExactMatrix m(ring, rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == rows, "column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) {
      Rational v = ring.reduce(columns[c][r]);
      if (v != 0) m.columns_[c].push_back({r, std::move(v)});
    }
  }
  return m;
}

ExactMatrix ExactMatrix::from_dense(const DenseMatrix& dense) {
  ExactMatrix m(dense.ring(), dense.rows(), dense.cols());
  for (std::size_t c = 0; c < dense.cols(); ++c) {
    for (std::size_t r = 0; r < dense.rows(); ++r) {
      if (dense(r, c) != 0) m.columns_[c].push_back({r, dense(r, c)});
    }
  }
  return m;
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& column : columns_) total += column.size();
  return total;
}

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& column = columns_.at(c);
  auto it = std::lower_bound(column.begin(), column.end(), r, [](const Entry& e, std::size_t row) { return e.index < row; });
  if (it != column.end() && it->index == r) return it->value;
  return Rational(0);
}

void ExactMatrix::set_column(std::size_t c, SparseVector entries) {
  require(c < cols(), "column index out of range");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require(entries[i].index < rows_, "row index out of range");
    require(i == 0 || entries[i - 1].index < entries[i].index, "column entries must be sorted");
  }
  normalize(entries, ring_);
  columns_[c] = std::move(entries);
}

Vector ExactMatrix::apply(const Vector& v) const {
  require(v.size() == cols(), "vector length does not match matrix columns");
  Vector out(rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    if (v[c] == 0) continue;
    for (const auto& e : columns_[c]) out[e.index] += e.value * v[c];
  }
  for (auto& x : out) x = ring_.reduce(x);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  require(cols() == rhs.rows(), "matrix product dimension mismatch");
  require(ring_ == rhs.ring_, "matrix product ring mismatch");
  ExactMatrix out(ring_, rows_, rhs.cols());
  std::vector<Rational> accumulator(rows_);
  std::vector<char> touched(rows_, 0);
  std::vector<std::size_t> touched_rows;
  for (std::size_t j = 0; j < rhs.cols(); ++j) {
    touched_rows.clear();
    for (const auto& b : rhs.columns_[j]) {
      for (const auto& a : columns_[b.index]) {
        if (!touched[a.index]) {
          touched[a.index] = 1;
          touched_rows.push_back(a.index);
          accumulator[a.index] = 0;
        }
        accumulator[a.index] += a.value * b.value;
      }
    }
    std::sort(touched_rows.begin(), touched_rows.end());
    SparseVector column;
    for (std::size_t r : touched_rows) {
      touched[r] = 0;
      Rational v = ring_.reduce(accumulator[r]);
      if (v != 0) column.push_back({r, std::move(v)});
    }
    out.columns_[j] = std::move(column);
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols() == rhs.cols(), "matrix sum dimension mismatch");
  require(ring_ == rhs.ring_, "matrix sum ring mismatch");
  ExactMatrix out(ring_, rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    SparseVector merged;
    merged.reserve(columns_[c].size() + rhs.columns_[c].size());
    std::merge(columns_[c].begin(), columns_[c].end(), rhs.columns_[c].begin(), rhs.columns_[c].end(),
               std::back_inserter(merged), [](const Entry& a, const Entry& b) { return a.index < b.index; });
    normalize(merged, ring_);
    out.columns_[c] = std::move(merged);
  }
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const { return *this + rhs.scaled(Rational(-1)); }

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
  ExactMatrix out(ring_, rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    SparseVector column = columns_[c];
    for (auto& e : column) e.value *= factor;
    normalize(column, ring_);
    out.columns_[c] = std::move(column);
  }
  return out;
}

ExactMatrix ExactMatrix::transposed() const {
  ExactMatrix out(ring_, cols(), rows_);
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) out.columns_[e.index].push_back({c, e.value});
  }
  return out;
}

ExactMatrix ExactMatrix::in_ring(const Ring& ring) const {
  ExactMatrix out(ring, rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    SparseVector column = columns_[c];
    normalize(column, ring);
    out.columns_[c] = std::move(column);
  }
  return out;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& rhs) const {
  require(rows_ == rhs.rows_, "hstack row mismatch");
  require(ring_ == rhs.ring_, "hstack ring mismatch");
  ExactMatrix out = *this;
  out.columns_.insert(out.columns_.end(), rhs.columns_.begin(), rhs.columns_.end());
  return out;
}

ExactMatrix ExactMatrix::vstack(const ExactMatrix& rhs) const {
  require(cols() == rhs.cols(), "vstack column mismatch");
  require(ring_ == rhs.ring_, "vstack ring mismatch");
  ExactMatrix out(ring_, rows_ + rhs.rows_, cols());
  for (std::size_t c = 0; c < cols(); ++c) {
    SparseVector column = columns_[c];
    for (const auto& e : rhs.columns_[c]) column.push_back({e.index + rows_, e.value});
    out.columns_[c] = std::move(column);
  }
  return out;
}

std::vector<std::vector<Rational>> ExactMatrix::to_dense() const {
  std::vector<std::vector<Rational>> out(rows_, std::vector<Rational>(cols()));
  for (std::size_t c = 0; c < cols(); ++c) {
    for (const auto& e : columns_[c]) out[e.index][c] = e.value;
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols() != b.cols()) return false;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    const auto& x = a.columns_[c];
    const auto& y = b.columns_[c];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].index != y[i].index || x[i].value != y[i].value) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------

DenseMatrix::DenseMatrix(Ring ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::identity(Ring ring, std::size_t n) {
  DenseMatrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(Ring ring, const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  DenseMatrix m(ring, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == cols, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void DenseMatrix::set(std::size_t r, std::size_t c, const Rational& value) {
  data_.at(r * cols_ + c) = ring_.reduce(value);
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  require(cols_ == rhs.rows_, "matrix product dimension mismatch");
  DenseMatrix out(ring_, rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = data_[i * cols_ + k];
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.data_[i * rhs.cols_ + j] += a * rhs.data_[k * rhs.cols_ + j];
    }
  }
  for (auto& x : out.data_) x = ring_.reduce(x);
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix difference dimension mismatch");
  DenseMatrix out(ring_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = ring_.reduce(data_[i] - rhs.data_[i]);
  return out;
}

bool DenseMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (data_[r * cols_ + c] != (r == c ? 1 : 0)) return false;
    }
  }
  return true;
}

DenseMatrix DenseMatrix::inverse() const {
  if (rows_ != cols_) throw PreconditionError("non-square matrix is not invertible");
  const std::size_t n = rows_;
  // Gauss-Jordan over Q (or F_p); integrality is checked afterwards for Z.
  const Ring work = ring_.kind() == RingKind::Integers ? Ring::rationals() : ring_;
  std::vector<Rational> a = data_;
  std::vector<Rational> inv(n * n);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) throw PreconditionError("singular matrix over " + ring_.name());
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[pivot * n + j], a[col * n + j]);
        std::swap(inv[pivot * n + j], inv[col * n + j]);
      }
    }
    const Rational scale = work.inverse(a[col * n + col]);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = work.reduce(a[col * n + j] * scale);
      inv[col * n + j] = work.reduce(inv[col * n + j] * scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const Rational factor = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = work.reduce(a[r * n + j] - factor * a[col * n + j]);
        inv[r * n + j] = work.reduce(inv[r * n + j] - factor * inv[col * n + j]);
      }
    }
  }
  DenseMatrix out(ring_, n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (ring_.kind() == RingKind::Integers && inv[i].get_den() != 1) {
      throw PreconditionError("matrix is not invertible over Z (determinant is not a unit)");
    }
    out.data_[i] = inv[i];
  }
  return out;
}

}  // namespace rackoh::linalg
