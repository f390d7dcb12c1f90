#include "rackoh/rack/standard.hpp"

#include <algorithm>

#include "rackoh/errors.hpp"

namespace rackoh {

namespace {

void require_positive(std::size_t n, const char* kind) {
  if (n == 0) throw InputError(std::string(kind) + " rack needs n >= 1");
}

RackTable from_formula(std::size_t n, auto&& op) {
  OperationTable t(n, std::vector<std::size_t>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x][y] = op(x, y);
  }
  return RackTable::create(t);
}

}  // namespace

RackTable make_trivial(std::size_t n) {
  require_positive(n, "trivial");
  return from_formula(n, [](std::size_t, std::size_t y) { return y; });
}

RackTable make_dihedral(std::size_t n) {
  require_positive(n, "dihedral");
  return from_formula(n, [n](std::size_t x, std::size_t y) { return (2 * x + n - y) % n; });
}

RackTable make_cyclic(std::size_t n) {
  require_positive(n, "cyclic");
  return from_formula(n, [n](std::size_t, std::size_t y) { return (y + 1) % n; });
}

RackTable make_conjugation(const TableGroup& group, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> elements = subset;
  if (elements.empty()) {
    elements.resize(group.order());
    for (std::size_t g = 0; g < group.order(); ++g) elements[g] = g;
  }
  std::vector<std::size_t> position(group.order(), group.order());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const std::size_t g = elements[i];
    if (g >= group.order()) throw InputError("subset element " + std::to_string(g) + " is not in " + group.name());
    if (position[g] != group.order()) throw InputError("subset lists element " + std::to_string(g) + " twice");
    position[g] = i;
  }
  for (std::size_t g = 0; g < group.order(); ++g) {
    for (std::size_t h : elements) {
      const std::size_t c = group.conjugate(g, h);
      if (position[c] == group.order()) {
        throw InputError("subset of " + group.name() + " is not conjugation invariant: " + std::to_string(g) +
                         " conjugates " + std::to_string(h) + " to " + std::to_string(c));
      }
    }
  }
  OperationTable t(elements.size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) t[i][j] = position[group.conjugate(elements[i], elements[j])];
  }
  return RackTable::create(t);
}

RackTable make_standard(StandardKind kind, const StandardParams& params) {
  switch (kind) {
    case StandardKind::Trivial:
      return make_trivial(params.n);
    case StandardKind::Dihedral:
      return make_dihedral(params.n);
    case StandardKind::Cyclic:
      return make_cyclic(params.n);
    case StandardKind::Conjugation:
      if (!params.group) throw InputError("conjugation rack needs a group");
      return make_conjugation(*params.group, params.subset);
  }
  throw InputError("unknown standard rack kind");
}

std::size_t semidirect_index(const CoeffModule& module, Element x, const std::vector<std::uint64_t>& n) {
  const std::uint64_t p = module.ring().modulus();
  std::size_t code = 0;
  for (std::uint64_t v : n) code = code * p + v;
  std::size_t fiber = 1;
  for (std::size_t i = 0; i < module.dim(); ++i) fiber *= p;
  return static_cast<std::size_t>(x) * fiber + code;
}

RackTable make_semidirect(const RackTable& rack, const CoeffModule& module, std::size_t max_size) {
  if (module.ring().kind() != linalg::RingKind::PrimeField) {
    throw PreconditionError("semidirect rack needs a module over a finite prime field, got " + module.ring().name());
  }
  if (module.rack_size() != rack.size()) throw InputError("module belongs to a rack of a different size");
  const std::uint64_t p = module.ring().modulus();
  const std::size_t k = module.dim();
  std::size_t fiber = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (fiber > max_size / p) throw ResourceError("semidirect rack would exceed " + std::to_string(max_size) + " elements");
    fiber *= p;
  }
  const std::size_t n = rack.size();
  if (n > max_size / fiber) throw ResourceError("semidirect rack would exceed " + std::to_string(max_size) + " elements");

  std::vector<std::vector<std::uint64_t>> vectors(fiber, std::vector<std::uint64_t>(k));
  for (std::size_t code = 0; code < fiber; ++code) {
    std::size_t c = code;
    for (std::size_t i = k; i-- > 0;) {
      vectors[code][i] = c % p;
      c /= p;
    }
  }
  // row-vector times matrix over F_p
  auto times = [&](const std::vector<std::uint64_t>& v, const DenseMatrix& a) {
    std::vector<std::uint64_t> out(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < k; ++j) {
        out[j] = (out[j] + linalg::mul_mod(v[i], a(i, j).get_num().get_ui(), p)) % p;
      }
    }
    return out;
  };

  OperationTable t(n * fiber, std::vector<std::size_t>(n * fiber));
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = rack.op(x, y);
      for (std::size_t a = 0; a < fiber; ++a) {
        const auto n_part = times(vectors[a], module.action_inverse(xy));
        for (std::size_t b = 0; b < fiber; ++b) {
          const auto m_part = times(vectors[b], module.action_inverse(x));
          std::vector<std::uint64_t> out(k);
          for (std::size_t i = 0; i < k; ++i) out[i] = (vectors[a][i] + p - n_part[i] + m_part[i]) % p;
          t[x * fiber + a][y * fiber + b] = semidirect_index(module, xy, out);
        }
      }
    }
  }
  return RackTable::create(t);
}

}  // namespace rackoh
