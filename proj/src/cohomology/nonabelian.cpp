#include <array>
#include <set>
#include <string>

#include "rackoh/cohomology/cohomology.hpp"
#include "rackoh/errors.hpp"

namespace rackoh {

namespace {

class Budget {
 public:
  explicit Budget(double limit) : limit_(limit) {}
  void spend(const char* phase) {
    if (++used_ > limit_) {
      throw ResourceError(std::string("nonabelian H^2 ") + phase + " exceeded the budget of " +
                          std::to_string(static_cast<long long>(limit_)) + " steps; try a smaller rack or group");
    }
  }

 private:
  double limit_;
  double used_ = 0;
};

// Cocycle constraint for (x, y, z) over variables f(u, v) at u * n + v:
//   f[lhs[0]] f[lhs[1]] = f[rhs[0]] f[rhs[1]].
struct Constraint {
  std::array<std::size_t, 2> lhs;
  std::array<std::size_t, 2> rhs;
};

}  // namespace

NonabelianH2 nonabelian_h2(const RackTable& rack, const TableGroup& a, double budget) {
  const std::size_t n = rack.size();
  const std::size_t vars = n * n;
  const std::size_t g = a.order();
  Budget steps(budget);

  // Each constraint is tested once its last variable is assigned.
  std::vector<std::vector<Constraint>> due(vars);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        Constraint c{{rack.op(x, y) * n + rack.op(x, z), x * n + z}, {x * n + rack.op(y, z), y * n + z}};
        const std::size_t last = std::max({c.lhs[0], c.lhs[1], c.rhs[0], c.rhs[1]});
        due[last].push_back(c);
      }
    }
  }

  // Depth-first search with values in table order yields cocycles in
  // lexicographic order.
  std::vector<std::vector<std::size_t>> cocycles;
  std::vector<std::size_t> f(vars, 0);
  std::size_t depth = 0;
  bool fresh = true;  // f[depth] has not been tried yet
  if (vars == 0) cocycles.push_back(f);
  while (vars > 0) {
    if (!fresh) {
      if (++f[depth] == g) {
        f[depth] = 0;
        if (depth == 0) break;
        --depth;
        continue;
      }
    }
    fresh = false;
    steps.spend("cocycle search");
    bool ok = true;
    for (const Constraint& c : due[depth]) {
      if (a.mul(f[c.lhs[0]], f[c.lhs[1]]) != a.mul(f[c.rhs[0]], f[c.rhs[1]])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (depth + 1 == vars) {
      cocycles.push_back(f);
    } else {
      ++depth;
      f[depth] = 0;
      fresh = true;
    }
  }

  NonabelianH2 out;
  out.cocycle_count = cocycles.size();
  std::set<std::vector<std::size_t>> seen;
  for (const auto& cocycle : cocycles) {
    if (seen.contains(cocycle)) continue;
    // The first unseen cocycle is the least member of its class.
    std::set<std::vector<std::size_t>> orbit;
    std::vector<std::size_t> gamma(n, 0);
    std::vector<std::size_t> image(vars);
    while (true) {
      steps.spend("class enumeration");
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          image[x * n + y] = a.mul(a.mul(gamma[rack.op(x, y)], cocycle[x * n + y]), a.inverse(gamma[y]));
        }
      }
      orbit.insert(image);
      std::size_t i = 0;
      while (i < n && ++gamma[i] == g) gamma[i++] = 0;
      if (i == n) break;
    }
    out.classes.push_back({cocycle, orbit.size()});
    seen.merge(orbit);
  }
  return out;
}

}  // namespace rackoh
