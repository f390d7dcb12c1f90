#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rackoh {

/// Rack elements are the indices 0..n-1.
using Element = std::uint32_t;

/// Raw candidate operation table, table[x][y] = x |> y.
using OperationTable = std::vector<std::vector<std::size_t>>;

enum class RackAxiom {
  LeftTranslationBijective,  // y -> x |> y is a bijection for every x
  SelfDistributive,          // x |> (y |> z) = (x |> y) |> (x |> z)
};

struct AxiomViolation {
  RackAxiom axiom;
  /// Axiom 1: {x, y1, y2} with x|>y1 = x|>y2 (y2 == y1 when the row misses a value).
  /// Axiom 2: {x, y, z}.
  std::vector<std::size_t> witness;
  std::string message;
};

struct RackValidation {
  bool valid = true;
  /// At most one entry per axiom: the first witness in lexicographic order.
  std::vector<AxiomViolation> violations;
};

/// Checks both rack axioms. Throws InputError for a malformed table (not
/// square, empty, or an entry outside [0,n)); axiom failures are reported.
RackValidation verify_rack(const OperationTable& candidate);

/// A finite rack as an n x n operation table. Instances only exist for
/// tables passing verify_rack.
class RackTable {
 public:
  /// Throws InputError if the table is malformed or violates an axiom.
  static RackTable create(const OperationTable& table);

  std::size_t size() const { return size_; }
  Element op(Element x, Element y) const { return table_[static_cast<std::size_t>(x) * size_ + y]; }
  /// The left translation y -> x |> y.
  std::span<const Element> row(Element x) const { return {table_.data() + static_cast<std::size_t>(x) * size_, size_}; }
  OperationTable to_table() const;

  friend bool operator==(const RackTable&, const RackTable&) = default;

 private:
  RackTable(std::size_t size, std::vector<Element> table) : size_(size), table_(std::move(table)) {}

  std::size_t size_;
  std::vector<Element> table_;
};

/// R^12 R^13 R^23 = R^23 R^13 R^12 on X^3 for R(x,y) = (x, x |> y).
bool verify_yang_baxter(const RackTable& rack);

/// x |> x = x for all x.
bool is_quandle(const RackTable& rack);

/// Orbits of the action generated by the left translations.
struct OrbitPartition {
  std::size_t size = 0;
  std::vector<std::size_t> orbit_of;
  std::size_t orbit_count = 0;

  std::vector<std::vector<Element>> orbits() const;
  std::vector<std::size_t> orbit_sizes() const;
};

/// Union-find over the edges {y, x |> y}; orbit indices are numbered by first
/// appearance in 0..n-1.
OrbitPartition orbits(const RackTable& rack);

}  // namespace rackoh
