#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rackoh/cochain/complex.hpp"
#include "rackoh/io/rack_io.hpp"
#include "rackoh/linalg/smith.hpp"
#include "rackoh/rack/table_group.hpp"

namespace rackoh {

using linalg::AbelianGroup;
using linalg::Integer;

struct RackSummary {
  std::string id;
  std::size_t size = 0;
  std::size_t orbit_count = 0;  // m
  std::size_t inner_order = 0;  // N = |G_X^0|
};

RackSummary summarize(const RackTable& rack, std::string id);

struct DegreeEntry {
  std::size_t n = 0;
  std::size_t betti = 0;
  /// Value forced by the structure theorems when they apply to the module.
  std::optional<std::size_t> predicted;
  /// Invariant factors > 1 (integral reports only).
  std::vector<Integer> torsion;
  /// Invariant-subcomplex data (invariant_cohomology only).
  std::optional<std::size_t> invariant_betti;
  std::optional<std::size_t> xi_rank;
};

struct TheoremCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CohomologyReport {
  RackSummary rack;
  std::string module;
  std::string ring;
  std::size_t module_dim = 0;
  std::vector<DegreeEntry> degrees;
  std::vector<TheoremCheck> checks;
  std::vector<std::string> notes;

  bool all_pass() const;
};

Json report_to_json(const CohomologyReport& report);
/// Inverse of report_to_json; throws InputError on malformed documents.
CohomologyReport report_from_json(const Json& doc);

/// dim M^{G_X}, the common fixed space of all A_x (field rings; rank over Q for Z).
std::size_t invariant_dimension(const CoeffModule& module);

/// Betti numbers for 0 <= n <= max_degree over Q or F_p, with the structure
/// theorem checks that apply to the module.
CohomologyReport cohomology_over_field(const RackTable& rack, const std::string& rack_id, const CoeffModule& module,
                                       std::size_t max_degree, const CochainBudget& budget = {});

/// H^n(X, Z) with torsion from Smith forms, trivial coefficients.
CohomologyReport cohomology_integral(const RackTable& rack, const std::string& rack_id, std::size_t max_degree,
                                     const CochainBudget& budget = {});

/// Betti numbers of the invariant subcomplex and the rank of xi : H_inv -> H.
/// Uses the image of the projector when |G| is invertible, the common fixed
/// space of the generators otherwise. Field rings only.
CohomologyReport invariant_cohomology(const RackTable& rack, const std::string& rack_id, const CoeffModule& module,
                                      std::size_t max_degree, const CochainBudget& budget = {});

/// Every element acts by the Jordan block J_k(t) over Q; t must be nonzero.
CohomologyReport twisted_cohomology(const RackTable& rack, const std::string& rack_id, const Rational& t,
                                    std::size_t k, std::size_t max_degree, const CochainBudget& budget = {});

/// Every element acts by the same invertible matrix over Q.
CohomologyReport same_operator_cohomology(const RackTable& rack, const std::string& rack_id, const DenseMatrix& a,
                                          std::size_t max_degree, const CochainBudget& budget = {});

/// Generators X and the relations x.y = (x|>y).x, one per ordered pair.
struct RackPresentation {
  RackTable rack;
  std::vector<std::pair<Element, Element>> relations;

  static RackPresentation of(const RackTable& rack);
};

/// Coefficients Z, Q or Z/q (q >= 1; q = 1 is the zero ring).
struct AbelianCoefficients {
  enum class Kind { Integers, Rationals, Cyclic } kind = Kind::Integers;
  Integer q = 0;

  /// "Z", "Q", "Z<q>" (e.g. "Z3"), or "0" for the zero ring.
  static AbelianCoefficients parse(const std::string& name);
  std::string name() const;
};

/// ker(d_out) / im(d_in) with the given coefficients for an integer complex.
AbelianGroup complex_cohomology(const ExactMatrix& d_in, const ExactMatrix& d_out, const AbelianCoefficients& coeff);

/// H^1(G_X, M) from the presentation: a 1-cocycle is determined by its values
/// pi(x) on generators subject to pi(x).y + pi(y) = pi(x|>y).x + pi(x); the
/// coboundaries are x -> v.x - v. Over a field the result is a dimension
/// (free_rank); over Z it carries torsion.
AbelianGroup group_h1(const RackPresentation& presentation, const CoeffModule& module);
/// Same for an integral module read with coefficients Z, Q or Z/q.
AbelianGroup group_h1(const RackPresentation& presentation, const CoeffModule& integral_module,
                      const AbelianCoefficients& coeff);

struct H2Comparison {
  AbelianCoefficients coefficients;
  AbelianGroup direct;     // H^2(X, A)
  AbelianGroup via_group;  // H^1(G_X, Fun(X, A))
  bool match() const { return direct == via_group; }
};

H2Comparison h2_via_group(const RackTable& rack, const AbelianCoefficients& coeff, const CochainBudget& budget = {});

struct NonabelianClass {
  /// Lexicographically least cocycle of the class, f(x,y) at index x*|X|+y.
  std::vector<std::size_t> representative;
  std::size_t size = 0;
};

struct NonabelianH2 {
  std::size_t cocycle_count = 0;
  std::vector<NonabelianClass> classes;
};

/// All f : X^2 -> A with f(x|>y, x|>z) f(x,z) = f(x, y|>z) f(y,z), up to
/// f'(x,y) = g(x|>y) f(x,y) g(y)^{-1}. The search assigns f in lexicographic
/// order and prunes on each completed constraint; every search node and every
/// gauge function g tried counts as one step, and ResourceError is thrown past
/// `budget` steps.
NonabelianH2 nonabelian_h2(const RackTable& rack, const TableGroup& a, double budget = 1e8);

/// For omega : X -> N (a degree-1 cochain over F_p), returns
/// (omega^ is a rack homomorphism X -> X x| N, d omega = 0), where
/// omega^(x) = (x, omega(x) x^{-1}).
std::pair<bool, bool> semidirect_cocycle_check(const RackTable& rack, const CoeffModule& module,
                                               const Cochain& omega);

/// Whether f.y - f lies in the image of d^{n-1}, for a cocycle f of degree n >= 1.
bool class_fixed_by_action(const RackTable& rack, const CoeffModule& module, const Cochain& f, Element y);

/// Rank in H^n(X, Q) of the span of the products 1_{s_1} (x) ... (x) 1_{s_n} of
/// orbit indicators.
std::size_t orbit_product_rank(const RackTable& rack, std::size_t n, const CochainBudget& budget = {});

}  // namespace rackoh
