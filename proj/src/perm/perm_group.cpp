#include "rackoh/perm/perm_group.hpp"

#include <deque>
#include <unordered_set>

#include "rackoh/errors.hpp"

namespace rackoh {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Element v : images_) {
    if (v >= images_.size() || hit[v]) throw InputError("permutation images are not a bijection");
    hit[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Element>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw InputError("permutation degree mismatch");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[rhs.images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Element>(i);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image array.
  std::size_t h = 1469598103934665603ULL;
  for (Element v : p.images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return h;
}

std::vector<Permutation> group_closure(const std::vector<Permutation>& generators, std::size_t degree,
                                       std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree does not match the group degree");
  }
  std::vector<Permutation> elements{Permutation::identity(degree)};
  std::unordered_set<Permutation, PermutationHash> seen{elements.front()};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : generators) {
      Permutation next = elements[head] * g;
      if (seen.contains(next)) continue;
      if (elements.size() >= cap) {
        throw ResourceError("group closure exceeded the cap of " + std::to_string(cap) + " elements");
      }
      seen.insert(next);
      elements.push_back(std::move(next));
    }
  }
  return elements;
}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.degree() != degree_) throw InputError("generator degree does not match the group degree");
  }
}

PermGroup PermGroup::closed(std::size_t cap) const {
  PermGroup out = *this;
  if (!out.elements_) out.elements_ = group_closure(generators_, degree_, cap);
  return out;
}

const std::vector<Permutation>& PermGroup::elements() const {
  if (!elements_) throw PreconditionError("permutation group has not been closed");
  return *elements_;
}

Permutation translation(const RackTable& rack, Element x) {
  auto row = rack.row(x);
  return Permutation(std::vector<Element>(row.begin(), row.end()));
}

PermGroup inner_group(const RackTable& rack, std::size_t cap) {
  std::vector<Permutation> generators;
  generators.reserve(rack.size());
  for (Element x = 0; x < rack.size(); ++x) generators.push_back(translation(rack, x));
  return PermGroup(rack.size(), std::move(generators)).closed(cap);
}

std::vector<Element> point_orbit(const PermGroup& group, Element point) {
  if (point >= group.degree()) throw InputError("point outside the permutation degree");
  std::vector<Element> orbit{point};
  std::vector<bool> seen(group.degree(), false);
  seen[point] = true;
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (const auto& g : group.generators()) {
      const Element next = g(orbit[head]);
      if (!seen[next]) {
        seen[next] = true;
        orbit.push_back(next);
      }
    }
  }
  return orbit;
}

}  // namespace rackoh
