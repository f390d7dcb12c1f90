#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rackoh/rack/rack_table.hpp"

namespace rackoh {

/// A bijection of {0..n-1}. Products compose right to left: (p * q)(i) = p(q(i)),
/// matching the left action of the structure group on rack elements.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless images is a bijection of [0, images.size()).
  explicit Permutation(std::vector<Element> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  Element operator()(Element i) const { return images_[i]; }
  const std::vector<Element>& images() const { return images_; }
  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

/// Breadth-first closure from the identity, right-multiplying by the
/// generators in input order. Throws ResourceError past `cap` elements.
std::vector<Permutation> group_closure(const std::vector<Permutation>& generators, std::size_t degree,
                                       std::size_t cap = kDefaultClosureCap);

class PermGroup {
 public:
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  /// A copy with the element list materialized by group_closure.
  PermGroup closed(std::size_t cap = kDefaultClosureCap) const;
  bool is_closed() const { return elements_.has_value(); }
  /// Both throw PreconditionError unless the group is closed.
  const std::vector<Permutation>& elements() const;
  std::size_t order() const { return elements().size(); }

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::optional<std::vector<Permutation>> elements_;
};

/// The reduced structure group, generated by the left translations phi_x;
/// returned closed.
PermGroup inner_group(const RackTable& rack, std::size_t cap = kDefaultClosureCap);

/// The orbit of `point` under the generators, in discovery order.
std::vector<Element> point_orbit(const PermGroup& group, Element point);

/// The left translation y -> x |> y as a permutation.
Permutation translation(const RackTable& rack, Element x);

}  // namespace rackoh
