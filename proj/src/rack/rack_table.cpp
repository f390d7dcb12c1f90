#include "rackoh/rack/rack_table.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "rackoh/errors.hpp"

namespace rackoh {

namespace {

void check_shape(const OperationTable& candidate) {
  const std::size_t n = candidate.size();
  if (n == 0) throw InputError("rack table is empty");
  for (std::size_t x = 0; x < n; ++x) {
    if (candidate[x].size() != n) {
      throw InputError("rack table row " + std::to_string(x) + " has " + std::to_string(candidate[x].size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (std::size_t y = 0; y < n; ++y) {
      if (candidate[x][y] >= n) {
        throw InputError("rack table entry (" + std::to_string(x) + "," + std::to_string(y) + ") = " +
                         std::to_string(candidate[x][y]) + " is outside [0," + std::to_string(n) + ")");
      }
    }
  }
}

}  // namespace

RackValidation verify_rack(const OperationTable& t) {
  check_shape(t);
  const std::size_t n = t.size();
  RackValidation report;

  for (std::size_t x = 0; x < n && report.violations.empty(); ++x) {
    std::vector<std::size_t> seen(n, n);
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t v = t[x][y];
      if (seen[v] != n) {
        std::ostringstream msg;
        msg << "left translation of " << x << " is not injective: " << x << "|>" << seen[v] << " = " << x << "|>" << y
            << " = " << v;
        report.violations.push_back({RackAxiom::LeftTranslationBijective, {x, seen[v], y}, msg.str()});
        break;
      }
      seen[v] = y;
    }
  }

  bool found = false;
  for (std::size_t x = 0; x < n && !found; ++x) {
    for (std::size_t y = 0; y < n && !found; ++y) {
      for (std::size_t z = 0; z < n && !found; ++z) {
        const std::size_t lhs = t[x][t[y][z]];
        const std::size_t rhs = t[t[x][y]][t[x][z]];
        if (lhs != rhs) {
          std::ostringstream msg;
          msg << "self-distributivity fails at (x,y,z) = (" << x << "," << y << "," << z << "): " << lhs
              << " != " << rhs;
          report.violations.push_back({RackAxiom::SelfDistributive, {x, y, z}, msg.str()});
          found = true;
        }
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

RackTable RackTable::create(const OperationTable& table) {
  const auto report = verify_rack(table);
  if (!report.valid) throw InputError("not a rack: " + report.violations.front().message);
  const std::size_t n = table.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    for (std::size_t v : row) flat.push_back(static_cast<Element>(v));
  }
  return RackTable(n, std::move(flat));
}

OperationTable RackTable::to_table() const {
  OperationTable out(size_, std::vector<std::size_t>(size_));
  for (std::size_t x = 0; x < size_; ++x) {
    for (std::size_t y = 0; y < size_; ++y) out[x][y] = op(static_cast<Element>(x), static_cast<Element>(y));
  }
  return out;
}

bool verify_yang_baxter(const RackTable& rack) {
  using Triple = std::array<Element, 3>;
  // R acting on the factors (i, j) of a triple.
  auto r = [&rack](Triple v, int i, int j) {
    v[j] = rack.op(v[i], v[j]);
    return v;
  };
  const auto n = static_cast<Element>(rack.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        const Triple v{a, b, c};
        const Triple lhs = r(r(r(v, 1, 2), 0, 2), 0, 1);
        const Triple rhs = r(r(r(v, 0, 1), 0, 2), 1, 2);
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool is_quandle(const RackTable& rack) {
  for (Element x = 0; x < rack.size(); ++x) {
    if (rack.op(x, x) != x) return false;
  }
  return true;
}

std::vector<std::vector<Element>> OrbitPartition::orbits() const {
  std::vector<std::vector<Element>> out(orbit_count);
  for (std::size_t x = 0; x < size; ++x) out[orbit_of[x]].push_back(static_cast<Element>(x));
  return out;
}

std::vector<std::size_t> OrbitPartition::orbit_sizes() const {
  std::vector<std::size_t> out(orbit_count, 0);
  for (std::size_t o : orbit_of) ++out[o];
  return out;
}

OrbitPartition orbits(const RackTable& rack) {
  const std::size_t n = rack.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::size_t a = find(y);
      const std::size_t b = find(rack.op(x, y));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  OrbitPartition out;
  out.size = n;
  out.orbit_of.assign(n, 0);
  std::vector<std::size_t> label(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t root = find(x);
    if (label[root] == n) label[root] = out.orbit_count++;
    out.orbit_of[x] = label[root];
  }
  return out;
}

}  // namespace rackoh
