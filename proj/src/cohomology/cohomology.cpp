#include "rackoh/cohomology/cohomology.hpp"

#include <string>

#include "rackoh/errors.hpp"
#include "rackoh/linalg/field_algorithms.hpp"

namespace rackoh {

using linalg::Triplet;

namespace {

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

std::string join_numbers(const std::vector<std::size_t>& values) {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i != 0) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

// Differentials d^0 .. d^max and their ranks; betti^n = dim C^n - r_n - r_{n-1}.
struct FieldComplex {
  std::vector<ExactMatrix> d;
  std::vector<std::size_t> dims;
  std::vector<std::size_t> ranks;

  std::size_t betti(std::size_t n) const { return dims[n] - ranks[n] - (n == 0 ? 0 : ranks[n - 1]); }
};

FieldComplex field_complex(const RackTable& rack, const CoeffModule& module, std::size_t max_degree,
                           const CochainBudget& budget) {
  FieldComplex c;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    c.d.push_back(differential(rack, module, n, budget));
    c.dims.push_back(c.d.back().cols());
    c.ranks.push_back(linalg::rank(c.d.back()));
  }
  return c;
}

CohomologyReport empty_report(const RackTable& rack, const std::string& rack_id, const CoeffModule& module) {
  CohomologyReport r;
  r.rack = summarize(rack, rack_id);
  r.module = module.describe();
  r.ring = module.ring().name();
  r.module_dim = module.dim();
  return r;
}

bool characteristic_divides(const Ring& ring, std::size_t order) {
  return ring.kind() == linalg::RingKind::PrimeField && order % ring.modulus() == 0;
}

// Attaches the structure-theorem prediction and its check, if one applies.
void add_predictions(CohomologyReport& report, const RackTable& rack, const CoeffModule& module) {
  const std::size_t m = report.rack.orbit_count;
  const bool over_q = module.ring().kind() == linalg::RingKind::Rationals;
  const std::size_t inv = invariant_dimension(module);

  std::string name;
  std::size_t factor = inv;
  if (module.is_trivial()) {
    if (characteristic_divides(module.ring(), report.rack.inner_order)) {
      report.notes.push_back("characteristic divides N = " + std::to_string(report.rack.inner_order) +
                             "; no Betti prediction");
      return;
    }
    name = "betti_equals_m_pow_n";
  } else if (over_q && module.kind() == ModuleKind::Jordan) {
    if (*module.jordan_eigenvalue() == 1) {
      name = "jordan_block_betti";
    } else {
      name = "twisted_vanishing";
      factor = 0;
    }
  } else if (over_q && module.kind() == ModuleKind::SameOperator) {
    name = "same_operator_betti";
  } else {
    try {
      const FiniteActionGroup g = finite_action_group(rack, module);
      if (characteristic_divides(module.ring(), g.order())) {
        report.notes.push_back("characteristic divides |G| = " + std::to_string(g.order()) +
                               "; no Betti prediction");
        return;
      }
      name = "betti_equals_m_pow_n_times_invariants";
    } catch (const ResourceError&) {
      report.notes.push_back("action image is not a finite group within the closure cap; no Betti prediction");
      return;
    }
  }

  bool pass = true;
  std::vector<std::size_t> got, want;
  for (DegreeEntry& e : report.degrees) {
    e.predicted = factor * power(m, e.n);
    pass = pass && e.betti == *e.predicted;
    got.push_back(e.betti);
    want.push_back(*e.predicted);
  }
  report.checks.push_back({name, pass, "betti " + join_numbers(got) + ", expected " + join_numbers(want) +
                                           " with m = " + std::to_string(m) + ", dim M^G = " + std::to_string(inv)});
}

void add_h0_check(CohomologyReport& report, const CoeffModule& module) {
  if (report.degrees.empty()) return;
  const std::size_t inv = invariant_dimension(module);
  report.checks.push_back({"h0_equals_invariants", report.degrees.front().betti == inv,
                           "betti^0 = " + std::to_string(report.degrees.front().betti) +
                               ", dim M^G = " + std::to_string(inv)});
}

void require_field(const CoeffModule& module, const char* what) {
  if (!module.ring().is_field()) {
    throw PreconditionError(std::string(what) + " needs coefficients in Q or F_p, got " + module.ring().name());
  }
}

}  // namespace

RackSummary summarize(const RackTable& rack, std::string id) {
  RackSummary s;
  s.id = std::move(id);
  s.size = rack.size();
  s.orbit_count = orbits(rack).orbit_count;
  s.inner_order = inner_group(rack).order();
  return s;
}

bool CohomologyReport::all_pass() const {
  for (const TheoremCheck& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

CohomologyReport cohomology_over_field(const RackTable& rack, const std::string& rack_id, const CoeffModule& module,
                                       std::size_t max_degree, const CochainBudget& budget) {
  require_field(module, "cohomology_over_field");
  CohomologyReport report = empty_report(rack, rack_id, module);
  const FieldComplex c = field_complex(rack, module, max_degree, budget);
  for (std::size_t n = 0; n <= max_degree; ++n) {
    DegreeEntry& e = report.degrees.emplace_back();
    e.n = n;
    e.betti = c.betti(n);
  }
  add_h0_check(report, module);
  add_predictions(report, rack, module);
  if (module.is_trivial() && module.ring().kind() == linalg::RingKind::Rationals) {
    report.notes.push_back(
        "quandle and degeneracy Betti numbers follow from these by the known splitting; not recomputed");
  }
  return report;
}

CohomologyReport cohomology_integral(const RackTable& rack, const std::string& rack_id, std::size_t max_degree,
                                     const CochainBudget& budget) {
  const CoeffModule module = CoeffModule::trivial(rack, Ring::integers());
  CohomologyReport report = empty_report(rack, rack_id, module);
  const std::size_t m = report.rack.orbit_count;
  const Integer n_order = static_cast<unsigned long>(report.rack.inner_order);

  ExactMatrix previous(Ring::integers(), 1, 0);
  bool primes_ok = true;
  bool ranks_ok = true;
  bool betti_ok = true;
  std::string bad_factors;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const ExactMatrix d = differential(rack, module, n, budget);
    const AbelianGroup h = linalg::integer_cohomology(previous, d);
    DegreeEntry e;
    e.n = n;
    e.betti = h.free_rank;
    e.predicted = power(m, n);
    e.torsion = h.torsion;

    // Universal coefficients: the free rank is the Betti number over Q.
    const std::size_t rational =
        d.cols() - linalg::rank(d.in_ring(Ring::rationals())) - linalg::rank(previous.in_ring(Ring::rationals()));
    ranks_ok = ranks_ok && rational == h.free_rank;
    betti_ok = betti_ok && h.free_rank == *e.predicted;

    for (const Integer& t : h.torsion) {
      Integer rest = t;
      for (Integer g; (g = gcd(rest, n_order)) != 1;) rest /= g;
      if (rest != 1) {
        primes_ok = false;
        bad_factors += " " + t.get_str();
      }
    }
    report.degrees.push_back(std::move(e));
    previous = d;
  }
  add_h0_check(report, module);
  report.checks.push_back({"integral_rank_matches_rational", ranks_ok, "free ranks against ranks over Q"});
  report.checks.push_back({"betti_equals_m_pow_n", betti_ok, "free rank m^n with m = " + std::to_string(m)});
  report.checks.push_back({"torsion_primes_divide_N", primes_ok,
                           primes_ok ? "N = " + std::to_string(report.rack.inner_order)
                                     : "factors with primes not dividing N:" + bad_factors});
  return report;
}

CohomologyReport invariant_cohomology(const RackTable& rack, const std::string& rack_id, const CoeffModule& input,
                                      std::size_t max_degree, const CochainBudget& budget) {
  CoeffModule module = input;
  CohomologyReport report = empty_report(rack, rack_id, input);
  if (!module.ring().is_field()) {
    module = module.in_ring(rack, Ring::rationals());
    report.notes.push_back("integral module: ranks computed over Q");
  }

  const FiniteActionGroup group = finite_action_group(rack, module);
  const bool use_projector = !characteristic_divides(module.ring(), group.order());
  report.notes.push_back(use_projector ? "invariant cochains from the image of the averaging projector"
                                       : "invariant cochains from the common fixed space; |G| = " +
                                             std::to_string(group.order()) + " is not invertible, no isomorphism claim");

  const FieldComplex c = field_complex(rack, module, max_degree, budget);

  // Columns spanning the invariant cochains of each degree.
  std::vector<ExactMatrix> basis;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    if (use_projector) {
      basis.push_back(linalg::column_space_basis(projector_P(rack, module, n, group)));
    } else {
      const std::size_t dim = c.dims[n];
      ExactMatrix stacked(module.ring(), 0, dim);
      for (Element y = 0; y < rack.size(); ++y) {
        stacked = stacked.vstack(group_action_on_cochains(rack, module, n, y) -
                                 ExactMatrix::identity(module.ring(), dim));
      }
      basis.push_back(ExactMatrix::from_columns(module.ring(), dim, linalg::kernel_basis(stacked)));
    }
  }

  std::vector<std::size_t> inv_ranks;
  std::vector<ExactMatrix> restricted;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    restricted.push_back(c.d[n] * basis[n]);
    inv_ranks.push_back(linalg::rank(restricted.back()));
  }

  bool iso = true;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    DegreeEntry e;
    e.n = n;
    e.betti = c.betti(n);
    e.invariant_betti = basis[n].cols() - inv_ranks[n] - (n == 0 ? 0 : inv_ranks[n - 1]);

    // xi maps invariant cocycles V K into H^n; its rank is how far they
    // enlarge the coboundary space.
    const ExactMatrix cocycles =
        basis[n] * ExactMatrix::from_columns(module.ring(), basis[n].cols(), linalg::kernel_basis(restricted[n]));
    const std::size_t boundary_rank = n == 0 ? 0 : c.ranks[n - 1];
    const std::size_t with_boundaries = n == 0 ? linalg::rank(cocycles) : linalg::rank(cocycles.hstack(c.d[n - 1]));
    e.xi_rank = with_boundaries - boundary_rank;
    iso = iso && *e.xi_rank == e.betti && *e.xi_rank == *e.invariant_betti;
    report.degrees.push_back(std::move(e));
  }
  add_h0_check(report, module);
  if (use_projector) {
    report.checks.push_back({"xi_isomorphism", iso, "rank xi = dim H_inv = dim H in every degree"});
  }
  return report;
}

CohomologyReport twisted_cohomology(const RackTable& rack, const std::string& rack_id, const Rational& t,
                                    std::size_t k, std::size_t max_degree, const CochainBudget& budget) {
  if (t == 0) throw InputError("twisted cohomology needs a nonzero eigenvalue");
  return cohomology_over_field(rack, rack_id, CoeffModule::jordan(rack, Ring::rationals(), t, k), max_degree,
                               budget);
}

CohomologyReport same_operator_cohomology(const RackTable& rack, const std::string& rack_id, const DenseMatrix& a,
                                          std::size_t max_degree, const CochainBudget& budget) {
  return cohomology_over_field(rack, rack_id, CoeffModule::same_operator(rack, a), max_degree, budget);
}

bool class_fixed_by_action(const RackTable& rack, const CoeffModule& module, const Cochain& f, Element y) {
  require_field(module, "class_fixed_by_action");
  const Vector moved = group_action_on_cochains(rack, module, f.degree, y).apply(f.values);
  Vector diff(moved.size());
  bool zero = true;
  for (std::size_t i = 0; i < moved.size(); ++i) {
    diff[i] = module.ring().reduce(moved[i] - f.values[i]);
    zero = zero && diff[i] == 0;
  }
  if (zero) return true;
  if (f.degree == 0) return false;
  return linalg::solve(differential(rack, module, f.degree - 1), diff).has_value();
}

std::size_t orbit_product_rank(const RackTable& rack, std::size_t n, const CochainBudget& budget) {
  if (n == 0) return 1;
  const OrbitPartition parts = orbits(rack);
  const std::size_t m = parts.orbit_count;
  const CochainSpace space(rack.size(), 1, n);
  std::vector<Vector> products;
  std::vector<Element> args(n);
  for (std::size_t word = 0; word < power(m, n); ++word) {
    // Orbit labels s_1..s_n of this product, most significant first.
    std::vector<std::size_t> s(n);
    for (std::size_t i = n, w = word; i-- > 0; w /= m) s[i] = w % m;
    Vector v(space.dimension());
    for (std::size_t idx = 0; idx < space.tuple_count(); ++idx) {
      space.decode_tuple(idx, args);
      bool in = true;
      for (std::size_t i = 0; i < n && in; ++i) in = parts.orbit_of[args[i]] == s[i];
      if (in) v[idx] = 1;
    }
    products.push_back(std::move(v));
  }
  const CoeffModule q = CoeffModule::trivial(rack, Ring::rationals());
  const ExactMatrix prod = ExactMatrix::from_columns(Ring::rationals(), space.dimension(), products);
  const ExactMatrix boundary = differential(rack, q, n - 1, budget);
  return linalg::rank(prod.hstack(boundary)) - linalg::rank(boundary);
}

}  // namespace rackoh
