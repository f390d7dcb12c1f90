#include "rackoh/cochain/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "rackoh/errors.hpp"

namespace rackoh {

using linalg::Triplet;

CochainBudget CochainBudget::from_environment() {
  CochainBudget b;
  b.memory_mb = b.effective_memory_mb();
  return b;
}

std::size_t CochainBudget::effective_memory_mb() const {
  if (memory_mb != 0) return memory_mb;
  if (const char* env = std::getenv("RACKOH_BUDGET_MB")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    throw InputError("RACKOH_BUDGET_MB must be a positive integer, got '" + std::string(env) + "'");
  }
  return 2048;
}

CochainSpace::CochainSpace(std::size_t rack_size, std::size_t module_dim, std::size_t degree)
    : n_(rack_size), k_(module_dim), degree_(degree), tuples_(1) {
  for (std::size_t i = 0; i < degree; ++i) {
    if (tuples_ > (std::size_t{1} << 40) / std::max<std::size_t>(n_, 1)) {
      throw ResourceError("cochain space of degree " + std::to_string(degree) + " is too large to index");
    }
    tuples_ *= n_;
  }
}

std::size_t CochainSpace::tuple_index(std::span<const Element> args) const {
  std::size_t idx = 0;
  for (Element a : args) idx = idx * n_ + a;
  return idx;
}

void CochainSpace::decode_tuple(std::size_t index, std::span<Element> args) const {
  for (std::size_t i = args.size(); i-- > 0;) {
    args[i] = static_cast<Element>(index % n_);
    index /= n_;
  }
}

void check_budget(const RackTable& rack, const CoeffModule& module, std::size_t n, const CochainBudget& budget) {
  if (n > budget.max_degree) {
    throw ResourceError("cochain degree " + std::to_string(n) + " exceeds the configured maximum of " +
                        std::to_string(budget.max_degree));
  }
  const CochainSpace target(rack.size(), module.dim(), n + 1);
  const double nonzeros = static_cast<double>(target.dimension()) * 2.0 * static_cast<double>(n + 1) *
                          static_cast<double>(std::max<std::size_t>(module.dim(), 1));
  // Triplets and the final column lists both hold an exact scalar per entry.
  const double mib = nonzeros * 128.0 / (1024.0 * 1024.0);
  const std::size_t cap = budget.effective_memory_mb();
  if (mib > static_cast<double>(cap)) {
    throw ResourceError("the map C^" + std::to_string(n) + " -> C^" + std::to_string(n + 1) + " needs about " +
                        std::to_string(static_cast<std::size_t>(mib)) + " MiB, above the budget of " +
                        std::to_string(cap) + " MiB (set RACKOH_BUDGET_MB to raise it)");
  }
}

namespace {

// Adds the block f(col_tuple) . A into row_tuple: entry (row*k + j, col*k + l) += sign * A[l][j].
void add_block(std::vector<Triplet>& out, std::size_t row, std::size_t col, std::size_t k, const DenseMatrix* a,
               int sign) {
  if (a == nullptr) {
    for (std::size_t j = 0; j < k; ++j) out.push_back({row * k + j, col * k + j, Rational(sign)});
    return;
  }
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t j = 0; j < k; ++j) {
      const Rational& v = (*a)(l, j);
      if (v != 0) out.push_back({row * k + j, col * k + l, sign * v});
    }
  }
}

enum class Variant { Standard, Prime };

ExactMatrix build_differential(const RackTable& rack, const CoeffModule& module, std::size_t n,
                               const CochainBudget& budget, Variant variant) {
  if (module.rack_size() != rack.size()) throw InputError("module belongs to a rack of a different size");
  check_budget(rack, module, n, budget);
  const CochainSpace source(rack.size(), module.dim(), n);
  const CochainSpace target(rack.size(), module.dim(), n + 1);
  const std::size_t k = module.dim();
  const bool trivial = module.is_trivial();

  std::vector<Triplet> triplets;
  triplets.reserve(target.tuple_count() * 2 * (n + 1) * k);
  std::vector<Element> x(n + 1);
  std::vector<Element> args(n);
  for (std::size_t row = 0; row < target.tuple_count(); ++row) {
    target.decode_tuple(row, x);
    for (std::size_t i = 0; i <= n; ++i) {
      const int sign = (i % 2 == 0) ? 1 : -1;
      // f(x_1..x_{i-1}, x_{i+1}..x_{n+1})
      for (std::size_t a = 0, b = 0; a <= n; ++a) {
        if (a != i) args[b++] = x[a];
      }
      const std::size_t omitted = source.tuple_index(args);
      // f(x_1..x_{i-1}, x_i|>x_{i+1}, .., x_i|>x_{n+1})
      for (std::size_t a = i + 1; a <= n; ++a) args[a - 1] = rack.op(x[i], x[a]);
      const std::size_t acted = source.tuple_index(args);

      if (variant == Variant::Standard) {
        add_block(triplets, row, omitted, k, nullptr, sign);
        add_block(triplets, row, acted, k, trivial ? nullptr : &module.action(x[i]), -sign);
      } else {
        Element z = x[i];
        for (std::size_t a = i; a-- > 0;) z = rack.op(x[a], z);
        add_block(triplets, row, omitted, k, trivial ? nullptr : &module.action_inverse(z), sign);
        add_block(triplets, row, acted, k, nullptr, -sign);
      }
    }
  }
  return ExactMatrix::from_triplets(module.ring(), target.dimension(), source.dimension(), std::move(triplets));
}

}  // namespace

ExactMatrix differential(const RackTable& rack, const CoeffModule& module, std::size_t n,
                         const CochainBudget& budget) {
  return build_differential(rack, module, n, budget, Variant::Standard);
}

ExactMatrix differential_prime(const RackTable& rack, const CoeffModule& module, std::size_t n,
                               const CochainBudget& budget) {
  return build_differential(rack, module, n, budget, Variant::Prime);
}

ExactMatrix chain_iso_T(const RackTable& rack, const CoeffModule& module, std::size_t n) {
  const CochainSpace space(rack.size(), module.dim(), n);
  const std::size_t k = module.dim();
  std::vector<Triplet> triplets;
  std::vector<Element> x(n);
  for (std::size_t t = 0; t < space.tuple_count(); ++t) {
    space.decode_tuple(t, x);
    // (x_1 ... x_n)^{-1} acts by A_{x_n}^{-1} ... A_{x_1}^{-1}
    DenseMatrix b = DenseMatrix::identity(module.ring(), k);
    for (std::size_t i = n; i-- > 0;) b = b * module.action_inverse(x[i]);
    add_block(triplets, t, t, k, &b, 1);
  }
  return ExactMatrix::from_triplets(module.ring(), space.dimension(), space.dimension(), std::move(triplets));
}

ExactMatrix action_matrix(const CoeffModule& module, const ActionElement& g, std::size_t n) {
  const CochainSpace space(g.perm.degree(), module.dim(), n);
  const std::size_t k = module.dim();
  const bool identity_matrix = g.matrix.is_identity();
  std::vector<Triplet> triplets;
  triplets.reserve(space.dimension() * (identity_matrix ? 1 : k));
  std::vector<Element> x(n);
  for (std::size_t t = 0; t < space.tuple_count(); ++t) {
    space.decode_tuple(t, x);
    for (auto& v : x) v = g.perm(v);
    add_block(triplets, t, space.tuple_index(x), k, identity_matrix ? nullptr : &g.matrix, 1);
  }
  return ExactMatrix::from_triplets(module.ring(), space.dimension(), space.dimension(), std::move(triplets));
}

ExactMatrix group_action_on_cochains(const RackTable& rack, const CoeffModule& module, std::size_t n, Element y) {
  return action_matrix(module, ActionElement{translation(rack, y), module.action(y)}, n);
}

namespace {

std::string element_key(const ActionElement& e) {
  std::string key;
  for (Element v : e.perm.images()) {
    key += std::to_string(v);
    key += ',';
  }
  key += '|';
  for (std::size_t i = 0; i < e.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < e.matrix.cols(); ++j) {
      key += e.matrix(i, j).get_str();
      key += ',';
    }
  }
  return key;
}

void require_finite_order(const CoeffModule& module, Element x, std::size_t cap) {
  const DenseMatrix& a = module.action(x);
  // A finite-order rational matrix of small size has small order; over F_p the
  // order is bounded by the group size.
  const std::size_t limit = module.ring().kind() == linalg::RingKind::PrimeField ? cap : std::min<std::size_t>(cap, 10000);
  DenseMatrix power = a;
  for (std::size_t e = 1; e <= limit; ++e) {
    if (power.is_identity()) return;
    power = power * a;
  }
  throw ResourceError("the action matrix of rack element " + std::to_string(x) +
                      " has infinite (or unverifiably large) order, so the kernel K of the action of G_X on M "
                      "does not have finite index and no finite averaging group exists");
}

}  // namespace

FiniteActionGroup finite_action_group(const RackTable& rack, const CoeffModule& module, std::size_t cap) {
  for (Element x = 0; x < rack.size(); ++x) require_finite_order(module, x, cap);
  std::vector<ActionElement> generators;
  for (Element x = 0; x < rack.size(); ++x) generators.push_back({translation(rack, x), module.action(x)});

  FiniteActionGroup group;
  group.elements.push_back({Permutation::identity(rack.size()), DenseMatrix::identity(module.ring(), module.dim())});
  std::unordered_set<std::string> seen{element_key(group.elements.front())};
  for (std::size_t head = 0; head < group.elements.size(); ++head) {
    for (const auto& g : generators) {
      ActionElement next{group.elements[head].perm * g.perm, group.elements[head].matrix * g.matrix};
      std::string key = element_key(next);
      if (seen.contains(key)) continue;
      if (group.elements.size() >= cap) {
        throw ResourceError("the action group exceeded " + std::to_string(cap) +
                            " elements; the hypothesis that the kernel K of the action on M has finite index "
                            "could not be verified");
      }
      seen.insert(std::move(key));
      group.elements.push_back(std::move(next));
    }
  }
  return group;
}

ExactMatrix projector_P(const RackTable& rack, const CoeffModule& module, std::size_t n,
                        const FiniteActionGroup& group) {
  const Ring& ring = module.ring();
  const Rational order(static_cast<unsigned long>(group.order()));
  if (!ring.is_field() || (ring.kind() == linalg::RingKind::PrimeField && group.order() % ring.modulus() == 0)) {
    throw PreconditionError("|G| = " + std::to_string(group.order()) + " is not invertible over " + ring.name() +
                            (ring.kind() == linalg::RingKind::PrimeField
                                 ? " (characteristic " + std::to_string(ring.modulus()) + " divides it)"
                                 : " (the projector needs a field)"));
  }
  const CochainSpace space(rack.size(), module.dim(), n);
  std::vector<Triplet> triplets;
  const Rational weight = ring.inverse(ring.reduce(order));
  for (const auto& g : group.elements) {
    const ExactMatrix m = action_matrix(module, g, n);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      for (const auto& e : m.column(c)) triplets.push_back({e.index, c, e.value * weight});
    }
  }
  return ExactMatrix::from_triplets(ring, space.dimension(), space.dimension(), std::move(triplets));
}

ExactMatrix projector_P(const RackTable& rack, const CoeffModule& module, std::size_t n) {
  return projector_P(rack, module, n, finite_action_group(rack, module));
}

CoeffModule functions_module(const RackTable& rack, const CoeffModule& trivial_module) {
  if (!trivial_module.is_trivial()) {
    throw PreconditionError("the shift isomorphism needs a trivial action on A; it fails for nontrivial actions");
  }
  return CoeffModule::tensor(CoeffModule::functions_on_rack(rack, trivial_module.ring()), trivial_module);
}

ShiftIsomorphism shift_J(const RackTable& rack, const CoeffModule& trivial_module, std::size_t n) {
  if (n == 0) throw InputError("the shift J is defined for n >= 1");
  CoeffModule target = functions_module(rack, trivial_module);
  // Index of (x_1..x_n, j) in C^n(X,A) equals the index of ((x_1..x_{n-1}), (x_n, j))
  // in C^{n-1}(X, Fun(X,A)), so J is the identity in these bases.
  const CochainSpace space(rack.size(), trivial_module.dim(), n);
  return {std::move(target), ExactMatrix::identity(trivial_module.ring(), space.dimension())};
}

std::span<const Rational> slice(const Cochain& f, const CochainSpace& space, Element y) {
  if (f.degree == 0 || f.degree != space.degree()) throw InputError("slicing needs a cochain of positive degree");
  const std::size_t block = space.dimension() / space.rack_size();
  return std::span<const Rational>(f.values).subspan(static_cast<std::size_t>(y) * block, block);
}

Cochain embed_slice(std::span<const Rational> g, const CochainSpace& space, Element y) {
  const std::size_t block = space.dimension() / space.rack_size();
  if (g.size() != block) throw InputError("slice length does not match the cochain space");
  Cochain out{space.degree(), Vector(space.dimension())};
  std::copy(g.begin(), g.end(), out.values.begin() + static_cast<long>(static_cast<std::size_t>(y) * block));
  return out;
}

bool is_invariant(const RackTable& rack, const CoeffModule& module, const Cochain& g) {
  for (Element y = 0; y < rack.size(); ++y) {
    if (group_action_on_cochains(rack, module, g.degree, y).apply(g.values) != g.values) return false;
  }
  return true;
}

Cochain cochain_product_unchecked(const RackTable& rack, const CoeffModule& a, const Cochain& f,
                                  const CoeffModule& n, const Cochain& g) {
  if (a.ring() != n.ring()) throw InputError("product factors must share a ring");
  const CochainSpace fs(rack.size(), a.dim(), f.degree);
  const CochainSpace gs(rack.size(), n.dim(), g.degree);
  if (f.values.size() != fs.dimension() || g.values.size() != gs.dimension()) {
    throw InputError("cochain length does not match its degree");
  }
  const std::size_t ka = a.dim();
  const std::size_t kn = n.dim();
  Cochain out{f.degree + g.degree, Vector(fs.tuple_count() * gs.tuple_count() * ka * kn)};
  for (std::size_t tf = 0; tf < fs.tuple_count(); ++tf) {
    for (std::size_t tg = 0; tg < gs.tuple_count(); ++tg) {
      const std::size_t t = tf * gs.tuple_count() + tg;
      for (std::size_t i = 0; i < ka; ++i) {
        const Rational& fv = f.values[tf * ka + i];
        if (fv == 0) continue;
        for (std::size_t j = 0; j < kn; ++j) {
          out.values[(t * ka + i) * kn + j] = a.ring().reduce(fv * g.values[tg * kn + j]);
        }
      }
    }
  }
  return out;
}

Cochain cochain_product(const RackTable& rack, const CoeffModule& a, const Cochain& f, const CoeffModule& n,
                        const Cochain& g) {
  if (!a.is_trivial()) throw PreconditionError("the product needs a trivial action on the first factor");
  if (!is_invariant(rack, n, g)) throw PreconditionError("the second factor of the product is not an invariant cochain");
  return cochain_product_unchecked(rack, a, f, n, g);
}

}  // namespace rackoh
