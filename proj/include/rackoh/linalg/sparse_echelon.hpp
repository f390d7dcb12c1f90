#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rackoh/linalg/ring.hpp"

namespace rackoh::linalg {

/// Arithmetic of F_p on machine words (p < 2^63).
struct PrimeFieldOps {
  using Value = std::uint64_t;
  std::uint64_t p;

  bool is_zero(Value a) const { return a == 0; }
  Value inv(Value a) const { return inv_mod(a, p); }
  Value mul(Value a, Value b) const { return mul_mod(a, b, p); }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
  /// a - f*b
  Value sub_mul(Value a, Value f, Value b) const {
    const Value fb = mul_mod(f, b, p);
    return a >= fb ? a - fb : a + (p - fb);
  }
};

struct RationalOps {
  using Value = Rational;

  bool is_zero(const Value& a) const { return a == 0; }
  Value inv(const Value& a) const { return 1 / a; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value sub_mul(const Value& a, const Value& f, const Value& b) const { return a - f * b; }
};

/// Incremental row echelon form over a field with sparse rows.
///
/// Rows are inserted one at a time and reduced against the existing pivots on
/// their leading entries; a row that survives becomes a new pivot row,
/// normalized to a leading 1. make_reduced() turns the result into the
/// reduced row echelon form.
template <class Field>
class SparseEchelon {
 public:
  using Value = typename Field::Value;
  using Row = std::vector<std::pair<std::uint32_t, Value>>;

  SparseEchelon(Field field, std::size_t cols) : field_(std::move(field)), pivot_of_col_(cols, -1) {}

  std::size_t cols() const { return pivot_of_col_.size(); }
  std::size_t rank() const { return rows_.size(); }

  /// Entries must be sorted by column and nonzero. Returns the new pivot
  /// column if the row was independent of the current pivots.
  std::optional<std::size_t> insert(Row row) {
    while (!row.empty()) {
      const std::uint32_t lead = row.front().first;
      const int pivot = pivot_of_col_[lead];
      if (pivot < 0) {
        const Value scale = field_.inv(row.front().second);
        for (auto& entry : row) entry.second = field_.mul(entry.second, scale);
        pivot_of_col_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return lead;
      }
      const Value factor = row.front().second;
      eliminate_into(row, 0, factor, rows_[static_cast<std::size_t>(pivot)]);
    }
    return std::nullopt;
  }

  /// Brings every pivot row to reduced form (zero above and below each pivot).
  void make_reduced() {
    std::vector<std::size_t> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
    for (std::size_t index : order) {
      Row& row = rows_[index];
      std::size_t pos = 1;
      while (pos < row.size()) {
        const int pivot = pivot_of_col_[row[pos].first];
        if (pivot < 0) {
          ++pos;
          continue;
        }
        const Value factor = row[pos].second;
        eliminate_into(row, pos, factor, rows_[static_cast<std::size_t>(pivot)]);
      }
    }
  }

  bool is_pivot(std::size_t col) const { return pivot_of_col_[col] >= 0; }
  const Row& pivot_row(std::size_t col) const { return rows_[static_cast<std::size_t>(pivot_of_col_[col])]; }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < pivot_of_col_.size(); ++c) {
      if (pivot_of_col_[c] >= 0) out.push_back(c);
    }
    return out;
  }

  const Field& field() const { return field_; }

 private:
  // row -= factor * pivot, where row[pos] sits on pivot's leading column.
  void eliminate_into(Row& row, std::size_t pos, const Value& factor, const Row& pivot) {
    scratch_.clear();
    scratch_.reserve(row.size() + pivot.size());
    for (std::size_t i = 0; i < pos; ++i) scratch_.push_back(std::move(row[i]));
    std::size_t i = pos + 1;
    std::size_t j = 1;
    while (i < row.size() || j < pivot.size()) {
      if (j >= pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
        scratch_.push_back(std::move(row[i]));
        ++i;
      } else if (i >= row.size() || pivot[j].first < row[i].first) {
        scratch_.emplace_back(pivot[j].first, field_.sub_mul(Value(0), factor, pivot[j].second));
        ++j;
      } else {
        Value v = field_.sub_mul(row[i].second, factor, pivot[j].second);
        if (!field_.is_zero(v)) scratch_.emplace_back(row[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    row.swap(scratch_);
  }

  Field field_;
  std::vector<int> pivot_of_col_;
  std::vector<Row> rows_;
  Row scratch_;
};

}  // namespace rackoh::linalg
