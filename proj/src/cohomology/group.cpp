#include <string>

#include "rackoh/cohomology/cohomology.hpp"
#include "rackoh/errors.hpp"
#include "rackoh/linalg/field_algorithms.hpp"
#include "rackoh/rack/standard.hpp"

namespace rackoh {

using linalg::Triplet;

RackPresentation RackPresentation::of(const RackTable& rack) {
  RackPresentation p{rack, {}};
  for (Element x = 0; x < rack.size(); ++x) {
    for (Element y = 0; y < rack.size(); ++y) p.relations.emplace_back(x, y);
  }
  return p;
}

AbelianCoefficients AbelianCoefficients::parse(const std::string& name) {
  if (name == "Z") return {Kind::Integers, 0};
  if (name == "Q") return {Kind::Rationals, 0};
  if (name == "0") return {Kind::Cyclic, 1};
  std::string digits;
  if (name.size() > 1 && name[0] == 'Z') digits = name.substr(name[1] == '/' ? 2 : 1);
  if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
    const Integer q(digits);
    if (q == 0) return {Kind::Integers, 0};
    return {Kind::Cyclic, q};
  }
  throw InputError("unknown coefficient group '" + name + "' (expected Z, Q, Z<q> or 0)");
}

std::string AbelianCoefficients::name() const {
  switch (kind) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::Cyclic:
      return q == 1 ? "0" : "Z" + q.get_str();
  }
  return "";
}

AbelianGroup complex_cohomology(const ExactMatrix& d_in, const ExactMatrix& d_out, const AbelianCoefficients& coeff) {
  switch (coeff.kind) {
    case AbelianCoefficients::Kind::Rationals: {
      const Ring q = Ring::rationals();
      return {d_out.cols() - linalg::rank(d_out.in_ring(q)) - linalg::rank(d_in.in_ring(q)), {}};
    }
    case AbelianCoefficients::Kind::Integers:
      return linalg::integer_cohomology(d_in, d_out);
    case AbelianCoefficients::Kind::Cyclic:
      return linalg::integer_cohomology(d_in, d_out, coeff.q);
  }
  return {};
}

namespace {

// Z^1 relation rows: for the r-th relation (x, y) and coordinate j,
//   (pi(x).y + pi(y) - pi(x|>y).x - pi(x))_j = 0.
ExactMatrix presentation_relations(const RackPresentation& p, const CoeffModule& module) {
  const std::size_t k = module.dim();
  std::vector<Triplet> t;
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto [x, y] = p.relations[r];
    const Element xy = p.rack.op(x, y);
    const DenseMatrix& ay = module.action(y);
    const DenseMatrix& ax = module.action(x);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (ay(l, j) != 0) t.push_back({r * k + j, x * k + l, ay(l, j)});
        if (ax(l, j) != 0) t.push_back({r * k + j, xy * k + l, -ax(l, j)});
      }
      t.push_back({r * k + j, y * k + j, Rational(1)});
      t.push_back({r * k + j, x * k + j, Rational(-1)});
    }
  }
  return ExactMatrix::from_triplets(module.ring(), p.relations.size() * k, p.rack.size() * k, std::move(t));
}

// v -> (v.x - v)_x
ExactMatrix group_coboundary(const CoeffModule& module) {
  const std::size_t k = module.dim();
  std::vector<Triplet> t;
  for (Element x = 0; x < module.rack_size(); ++x) {
    const DenseMatrix& a = module.action(x);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        Rational v = a(l, j);
        if (l == j) v -= 1;
        if (v != 0) t.push_back({x * k + j, l, v});
      }
    }
  }
  return ExactMatrix::from_triplets(module.ring(), module.rack_size() * k, k, std::move(t));
}

}  // namespace

std::size_t invariant_dimension(const CoeffModule& module) {
  // The kernel of the group coboundary is the common fixed space.
  return module.dim() - linalg::rank(group_coboundary(module));
}

AbelianGroup group_h1(const RackPresentation& presentation, const CoeffModule& module) {
  const ExactMatrix rel = presentation_relations(presentation, module);
  const ExactMatrix cob = group_coboundary(module);
  if (!module.ring().is_field()) return linalg::integer_cohomology(cob, rel);
  return {rel.cols() - linalg::rank(rel) - linalg::rank(cob), {}};
}

AbelianGroup group_h1(const RackPresentation& presentation, const CoeffModule& integral_module,
                      const AbelianCoefficients& coeff) {
  if (integral_module.ring() != Ring::integers()) {
    throw PreconditionError("group_h1 with abelian coefficients needs an integral module");
  }
  return complex_cohomology(group_coboundary(integral_module),
                            presentation_relations(presentation, integral_module), coeff);
}

H2Comparison h2_via_group(const RackTable& rack, const AbelianCoefficients& coeff, const CochainBudget& budget) {
  const CoeffModule z = CoeffModule::trivial(rack, Ring::integers());
  H2Comparison out;
  out.coefficients = coeff;
  out.direct = complex_cohomology(differential(rack, z, 1, budget), differential(rack, z, 2, budget), coeff);
  out.via_group = group_h1(RackPresentation::of(rack), functions_module(rack, z), coeff);
  return out;
}

std::pair<bool, bool> semidirect_cocycle_check(const RackTable& rack, const CoeffModule& module,
                                               const Cochain& omega) {
  if (module.ring().kind() != linalg::RingKind::PrimeField) {
    throw PreconditionError("semidirect products need a module over a prime field");
  }
  const std::size_t k = module.dim();
  if (omega.degree != 1 || omega.values.size() != rack.size() * k) {
    throw InputError("omega must be a degree-1 cochain with " + std::to_string(rack.size() * k) + " coordinates");
  }

  const Vector d_omega = differential(rack, module, 1).apply(omega.values);
  bool is_cocycle = true;
  for (const Rational& v : d_omega) is_cocycle = is_cocycle && v == 0;

  const std::uint64_t p = module.ring().modulus();
  const RackTable product = make_semidirect(rack, module);
  std::vector<std::size_t> hat(rack.size());
  for (Element x = 0; x < rack.size(); ++x) {
    const DenseMatrix& inv = module.action_inverse(x);
    std::vector<std::uint64_t> n(k);
    for (std::size_t j = 0; j < k; ++j) {
      Rational s = 0;
      for (std::size_t l = 0; l < k; ++l) s += omega.values[x * k + l] * inv(l, j);
      n[j] = linalg::to_residue(s, p);
    }
    hat[x] = semidirect_index(module, x, n);
  }
  bool is_hom = true;
  for (Element x = 0; x < rack.size(); ++x) {
    for (Element y = 0; y < rack.size(); ++y) {
      is_hom = is_hom && product.op(static_cast<Element>(hat[x]), static_cast<Element>(hat[y])) ==
                             hat[rack.op(x, y)];
    }
  }
  return {is_hom, is_cocycle};
}

}  // namespace rackoh
