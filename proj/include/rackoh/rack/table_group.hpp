#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "rackoh/perm/perm_group.hpp"

namespace rackoh {

/// A finite group given by its multiplication table. Element 0 is the identity.
class TableGroup {
 public:
  /// Validates identity, associativity, and inverses. Throws InputError.
  static TableGroup create(std::string name, std::vector<std::vector<std::size_t>> table);
  /// Elements in closure order, multiplied as permutations.
  static TableGroup from_permutations(std::string name, const std::vector<Permutation>& generators, std::size_t degree);

  /// Builtins: S3, S4, A4, Q8, Cn and Dn (order 2n), e.g. "C5", "D4".
  static TableGroup builtin(const std::string& name);

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t conjugate(std::size_t g, std::size_t h) const { return mul(mul(g, h), inverse(g)); }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  /// Classes ordered by their least element; each class is sorted.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

 private:
  TableGroup(std::string name, std::vector<std::vector<std::size_t>> table, std::vector<std::size_t> inverse)
      : name_(std::move(name)), table_(std::move(table)), inverse_(std::move(inverse)) {}

  std::string name_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inverse_;
};

}  // namespace rackoh
