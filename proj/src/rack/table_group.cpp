#include "rackoh/rack/table_group.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>

#include "rackoh/errors.hpp"

namespace rackoh {

TableGroup TableGroup::create(std::string name, std::vector<std::vector<std::size_t>> table) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("group table is empty");
  for (const auto& row : table) {
    if (row.size() != n) throw InputError("group table is not square");
    for (std::size_t v : row) {
      if (v >= n) throw InputError("group table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) throw InputError("element 0 of a group table must be the identity");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InputError("group table is not associative at (" + std::to_string(a) + "," + std::to_string(b) +
                           "," + std::to_string(c) + ")");
        }
      }
    }
  }
  std::vector<std::size_t> inverse(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == 0) {
        inverse[a] = b;
        break;
      }
    }
    if (inverse[a] == n || table[inverse[a]][a] != 0) throw InputError("group table element has no inverse");
  }
  return TableGroup(std::move(name), std::move(table), std::move(inverse));
}

TableGroup TableGroup::from_permutations(std::string name, const std::vector<Permutation>& generators,
                                         std::size_t degree) {
  const auto elements = group_closure(generators, degree);
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<std::vector<std::size_t>> table(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t a = 0; a < elements.size(); ++a) {
    for (std::size_t b = 0; b < elements.size(); ++b) table[a][b] = index.at(elements[a] * elements[b]);
  }
  return create(std::move(name), std::move(table));
}

namespace {

Permutation perm(std::initializer_list<Element> images) { return Permutation(std::vector<Element>(images)); }

std::size_t parse_order(const std::string& name, std::size_t offset) {
  std::size_t n = 0;
  const char* first = name.data() + offset;
  const char* last = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(first, last, n);
  if (ec != std::errc() || ptr != last || n == 0) throw InputError("bad group name '" + name + "'");
  return n;
}

// Quaternion units 1, i, j, k with sign; index = 4*sign_bit + unit.
TableGroup quaternion() {
  // unit products: u*v = sign * unit
  static const std::array<std::array<std::pair<int, int>, 4>, 4> units{{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
  for (std::size_t a = 0; a < 8; ++a) {
    for (std::size_t b = 0; b < 8; ++b) {
      const auto [s, u] = units[a % 4][b % 4];
      const bool negative = ((a / 4) ^ (b / 4) ^ (s < 0 ? 1 : 0)) != 0;
      table[a][b] = (negative ? 4 : 0) + static_cast<std::size_t>(u);
    }
  }
  return TableGroup::create("Q8", std::move(table));
}

}  // namespace

TableGroup TableGroup::builtin(const std::string& name) {
  if (name == "S3") return from_permutations(name, {perm({1, 0, 2}), perm({1, 2, 0})}, 3);
  if (name == "S4") return from_permutations(name, {perm({1, 0, 2, 3}), perm({1, 2, 3, 0})}, 4);
  if (name == "A4") return from_permutations(name, {perm({1, 2, 0, 3}), perm({1, 0, 3, 2})}, 4);
  if (name == "Q8") return quaternion();
  if (name.size() > 1 && (name[0] == 'C' || name[0] == 'Z')) {
    const std::size_t n = parse_order(name, 1);
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
    }
    return create(name, std::move(table));
  }
  if (name.size() > 1 && name[0] == 'D') {
    const std::size_t n = parse_order(name, 1);
    if (n < 3) throw InputError("dihedral group D" + std::to_string(n) + " needs n >= 3");
    std::vector<Element> rotation(n);
    std::vector<Element> reflection(n);
    for (std::size_t i = 0; i < n; ++i) {
      rotation[i] = static_cast<Element>((i + 1) % n);
      reflection[i] = static_cast<Element>((n - i) % n);
    }
    return from_permutations(name, {Permutation(reflection), Permutation(rotation)}, n);
  }
  throw InputError("unknown group '" + name + "' (known: S3, S4, A4, Q8, Cn, Dn)");
}

std::vector<std::vector<std::size_t>> TableGroup::conjugacy_classes() const {
  const std::size_t n = order();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t h = 0; h < n; ++h) {
    if (assigned[h]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < n; ++g) {
      const std::size_t c = conjugate(g, h);
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

}  // namespace rackoh
