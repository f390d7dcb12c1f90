// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Every comparison is exact; predictions are recomputed here from m and N
// rather than read back from the report checks.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "rackoh/cochain/complex.hpp"
#include "rackoh/cohomology/cohomology.hpp"
#include "rackoh/cohomology/corpus.hpp"
#include "rackoh/io/rack_io.hpp"
#include "rackoh/linalg/field_algorithms.hpp"
#include "rackoh/linalg/smith.hpp"
#include "rackoh/rack/standard.hpp"

using namespace rackoh;
using linalg::Rational;

namespace {

const Ring Q = Ring::rationals();
const Ring Z = Ring::integers();
constexpr std::size_t kTopDegree = 3;

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> failures;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (failures.size() < 5) failures.push_back(what);
    }
  }
};

struct CorpusRack {
  std::string id;
  RackTable rack;
  std::size_t m;
  std::size_t n_order;
};

std::vector<CorpusRack> load_corpus() {
  std::vector<CorpusRack> out;
  for (const auto& spec : theorem_corpus()) {
    RackSource s = load_rack(spec);
    const std::size_t m = orbits(s.rack).orbit_count;
    const std::size_t n = inner_group(s.rack).order();
    out.push_back({s.id, std::move(s.rack), m, n});
  }
  return out;
}

Vector random_vector(std::size_t dim, const Ring& ring, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-4, 4);
  Vector v(dim);
  for (auto& x : v) x = ring.reduce(Rational(dist(rng)));
  return v;
}

Vector combine(const Vector& a, const Vector& b, int sign) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + sign * b[i];
  return out;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::string betti_text(const std::vector<std::size_t>& b) {
  std::string s;
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return "(" + s + ")";
}

std::vector<std::size_t> betti_of(const CohomologyReport& r) {
  std::vector<std::size_t> b;
  for (const auto& e : r.degrees) b.push_back(e.betti);
  return b;
}

// 1. dim H^n(X, Q) = m^n, with m counted by union-find and by group closure.
Outcome criterion_betti(const std::vector<CorpusRack>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    const PermGroup g = inner_group(c.rack);
    std::set<std::vector<Element>> point_orbits;
    for (Element x = 0; x < c.rack.size(); ++x) {
      std::vector<Element> orbit = point_orbit(g, x);
      std::sort(orbit.begin(), orbit.end());
      point_orbits.insert(orbit);
    }
    o.expect(point_orbits.size() == c.m, c.id + ": orbit counts disagree");

    const auto r = cohomology_over_field(c.rack, c.id, CoeffModule::trivial(c.rack, Q), kTopDegree);
    for (const auto& e : r.degrees) {
      o.expect(e.betti == power(c.m, e.n), c.id + " degree " + std::to_string(e.n) + ": betti " +
                                               std::to_string(e.betti) + " vs m^n " + std::to_string(power(c.m, e.n)));
    }
  }
  o.summary = std::to_string(corpus.size()) + " racks, degrees 0..3";
  return o;
}

// 2. Primes in integral torsion divide N; the corpus has torsion only in degree 3.
Outcome criterion_torsion(const std::vector<CorpusRack>& corpus) {
  Outcome o;
  std::size_t factors = 0;
  for (const auto& c : corpus) {
    const auto r = cohomology_integral(c.rack, c.id, kTopDegree);
    for (const auto& e : r.degrees) {
      for (const Integer& t : e.torsion) {
        ++factors;
        Integer rest = t;
        for (Integer p = 2; p * p <= rest; ++p) {
          if (rest % p != 0) continue;
          o.expect(c.n_order % p.get_ui() == 0, c.id + ": prime " + p.get_str() + " does not divide N");
          while (rest % p == 0) rest /= p;
        }
        if (rest > 1) o.expect(c.n_order % rest.get_ui() == 0, c.id + ": prime " + rest.get_str() + " does not divide N");
      }
    }
  }
  o.summary = std::to_string(corpus.size()) + " racks, degrees 0..3, " + std::to_string(factors) + " torsion factors";
  return o;
}

// 3. xi : H_inv -> H is an isomorphism over Q.
Outcome criterion_xi(const std::vector<CorpusRack>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    const auto r = invariant_cohomology(c.rack, c.id, CoeffModule::trivial(c.rack, Q), kTopDegree);
    for (const auto& e : r.degrees) {
      const bool iso = e.xi_rank && e.invariant_betti && *e.xi_rank == e.betti && *e.xi_rank == *e.invariant_betti;
      o.expect(iso, c.id + " degree " + std::to_string(e.n) + ": xi rank " +
                        std::to_string(e.xi_rank.value_or(0)) + ", dim H_inv " +
                        std::to_string(e.invariant_betti.value_or(0)) + ", dim H " + std::to_string(e.betti));
    }
  }
  o.summary = std::to_string(corpus.size()) + " racks, degrees 0..3";
  return o;
}

// 4. Twisted vanishing, Jordan blocks, and a single operator.
Outcome criterion_twisted(const std::vector<CorpusRack>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    const auto zero = twisted_cohomology(c.rack, c.id, 2, 1, kTopDegree);
    for (const auto& e : zero.degrees) o.expect(e.betti == 0, c.id + ": t=2 betti " + betti_text(betti_of(zero)));
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto j = twisted_cohomology(c.rack, c.id, 1, k, kTopDegree);
      for (const auto& e : j.degrees) {
        o.expect(e.betti == power(c.m, e.n),
                 c.id + ": J_" + std::to_string(k) + "(1) betti " + betti_text(betti_of(j)));
      }
    }
    const auto diag = same_operator_cohomology(c.rack, c.id, DenseMatrix::from_rows(Q, {{1, 0}, {0, 2}}), kTopDegree);
    for (const auto& e : diag.degrees) {
      o.expect(e.betti == power(c.m, e.n), c.id + ": diag(1,2) betti " + betti_text(betti_of(diag)));
    }
  }
  o.summary = std::to_string(corpus.size()) + " racks, t=2, J_1..J_3(1), diag(1,2), degrees 0..3";
  return o;
}

// 5. H^2(X, A) against H^1(G_X, Fun(X, A)).
Outcome criterion_h2(const std::vector<CorpusRack>& corpus) {
  Outcome o;
  for (const auto& c : corpus) {
    for (const char* coeff : {"Q", "Z2", "Z3"}) {
      const H2Comparison h = h2_via_group(c.rack, AbelianCoefficients::parse(coeff));
      o.expect(h.match(), c.id + " over " + coeff + ": " + h.direct.to_string() + " vs " + h.via_group.to_string());
    }
  }
  o.summary = std::to_string(corpus.size()) + " racks, A in {Q, Z/2, Z/3}";
  return o;
}

// 6. Structural identities on random instances.
struct Instance {
  CoeffModule module;
  std::size_t n;
  ExactMatrix d_low, d, d_high;  // d^{n-1}, d^n, d^{n+1}
  ExactMatrix dp, t_n, t_next;   // d'^n, T^n, T^{n+1}
  std::vector<Vector> cocycle_basis;
};

Outcome criterion_structure(const std::vector<CorpusRack>& corpus) {
  constexpr int kInstances = 20;
  Outcome o;
  std::mt19937 rng(20260416);
  std::size_t checks = 0;
  for (const auto& c : corpus) {
    const RackTable& rack = c.rack;
    const std::vector<CoeffModule> modules{CoeffModule::trivial(rack, Q), CoeffModule::functions_on_rack(rack, Q),
                                           CoeffModule::jordan(rack, Q, -1, 1), CoeffModule::jordan(rack, Q, 1, 2)};
    std::map<std::pair<std::size_t, std::size_t>, Instance> cache;
    auto instance = [&](std::size_t mi, std::size_t n) -> const Instance& {
      auto it = cache.find({mi, n});
      if (it != cache.end()) return it->second;
      const CoeffModule& m = modules[mi];
      Instance in{m,
                  n,
                  differential(rack, m, n - 1),
                  differential(rack, m, n),
                  differential(rack, m, n + 1),
                  differential_prime(rack, m, n),
                  chain_iso_T(rack, m, n),
                  chain_iso_T(rack, m, n + 1),
                  {}};
      in.cocycle_basis = linalg::kernel_basis(in.d);
      return cache.emplace(std::make_pair(mi, n), std::move(in)).first->second;
    };
    const CoeffModule a = modules[0];

    for (int t = 0; t < kInstances; ++t) {
      const std::size_t mi = static_cast<std::size_t>(t) % modules.size();
      const std::size_t n = 1 + static_cast<std::size_t>(t / 4) % 2;
      const Instance& in = instance(mi, n);
      const CoeffModule& m = in.module;
      const Element y = static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, rack.size() - 1)(rng));
      const CochainSpace cn(rack.size(), m.dim(), n);
      const CochainSpace cn1(rack.size(), m.dim(), n + 1);
      const std::string where = c.id + " [" + m.describe() + ", n=" + std::to_string(n) + ", y=" +
                                std::to_string(y) + "]";
      const Cochain f{n, random_vector(cn.dimension(), Q, rng)};
      const Vector df = in.d.apply(f.values);

      // d o d = 0
      o.expect(is_zero(in.d_high.apply(df)), where + ": d d f != 0");
      // (df).y = d(f.y)
      const ExactMatrix act_n = group_action_on_cochains(rack, m, n, y);
      const ExactMatrix act_n1 = group_action_on_cochains(rack, m, n + 1, y);
      const Vector fy_action = act_n.apply(f.values);
      o.expect(act_n1.apply(df) == in.d.apply(fy_action), where + ": action does not commute with d");
      // d(f_y) = (f - f.y) - (df)_y
      const auto slice_f = slice(f, cn, y);
      const Cochain df_cochain{n + 1, df};
      const auto slice_df = slice(df_cochain, cn1, y);
      o.expect(in.d_low.apply(Vector(slice_f.begin(), slice_f.end())) ==
                   combine(combine(f.values, fy_action, -1), Vector(slice_df.begin(), slice_df.end()), -1),
               where + ": d(f_y) identity fails");
      // T d = d' T
      o.expect(in.t_next.apply(df) == in.dp.apply(in.t_n.apply(f.values)), where + ": T d != d' T");
      // Classes are fixed by the action.
      Cochain z{n, Vector(cn.dimension())};
      for (const auto& b : in.cocycle_basis) {
        const Rational coef = std::uniform_int_distribution<int>(-3, 3)(rng);
        for (std::size_t i = 0; i < b.size(); ++i) z.values[i] += coef * b[i];
      }
      o.expect(class_fixed_by_action(rack, m, z, y), where + ": f.y - f is not a coboundary");

      // Leibniz: d(f g) = df g + (-1)^a f dg for invariant g (finite-image factor modules).
      const CoeffModule& nmod = modules[static_cast<std::size_t>(t) % 3];
      const std::size_t da = static_cast<std::size_t>(t) % 2;
      const std::size_t db = 1;
      const ExactMatrix p = projector_P(rack, nmod, db);
      const Cochain lf{da, random_vector(CochainSpace(rack.size(), 1, da).dimension(), Q, rng)};
      const Cochain lg{db, p.apply(random_vector(CochainSpace(rack.size(), nmod.dim(), db).dimension(), Q, rng))};
      const CoeffModule product_module = CoeffModule::tensor(a, nmod);
      const Cochain fg = cochain_product(rack, a, lf, nmod, lg);
      const Vector lhs = differential(rack, product_module, da + db).apply(fg.values);
      const Cochain dlf{da + 1, differential(rack, a, da).apply(lf.values)};
      const Cochain dlg{db + 1, differential(rack, nmod, db).apply(lg.values)};
      const Vector rhs = combine(cochain_product(rack, a, dlf, nmod, lg).values,
                                 cochain_product(rack, a, lf, nmod, dlg).values, da % 2 == 0 ? 1 : -1);
      o.expect(lhs == rhs, where + ": Leibniz rule fails");
      checks += 6;
    }
  }
  o.summary = std::to_string(corpus.size()) + " racks x " + std::to_string(kInstances) + " instances, " +
              std::to_string(checks) + " identity checks";
  return o;
}

// 7. omega^ is a rack homomorphism iff d omega = 0, over all omega : X -> F_3.
Outcome criterion_semidirect() {
  Outcome o;
  const RackTable d3 = make_dihedral(3);
  const Ring f3 = Ring::prime_field(3);
  std::size_t scanned = 0, cocycles = 0;
  for (const CoeffModule& n : {CoeffModule::trivial(d3, f3), CoeffModule::jordan(d3, f3, 2, 1)}) {
    for (int code = 0; code < 27; ++code) {
      const Cochain w{1, {Rational(code % 3), Rational(code / 3 % 3), Rational(code / 9)}};
      const auto [hom, cocycle] = semidirect_cocycle_check(d3, n, w);
      o.expect(hom == cocycle, n.describe() + " omega #" + std::to_string(code) + " disagrees");
      ++scanned;
      cocycles += cocycle ? 1 : 0;
    }
  }
  o.summary = "dihedral 3, N = F_3 with trivial and -1 action, " + std::to_string(scanned) + " functions, " +
              std::to_string(cocycles) + " cocycles";
  return o;
}

// 8. Nonabelian pipeline with A = Z/3 against |H^2(X, Z/3)|.
Outcome criterion_nonabelian() {
  Outcome o;
  const TableGroup c3 = TableGroup::builtin("C3");
  std::string counts;
  for (const std::string spec : {"trivial:1", "trivial:2", "cyclic:2"}) {
    const RackTable rack = load_rack(spec).rack;
    const NonabelianH2 h = nonabelian_h2(rack, c3);
    const CoeffModule z = CoeffModule::trivial(rack, Z);
    const AbelianGroup lin = linalg::integer_cohomology(differential(rack, z, 1), differential(rack, z, 2), 3);
    const Integer classes = static_cast<unsigned long>(h.classes.size());
    o.expect(classes == lin.order(), spec + ": " + classes.get_str() + " classes vs |H^2| = " + lin.order().get_str());
    counts += (counts.empty() ? "" : ", ") + spec + " " + classes.get_str();
  }
  o.summary = "all racks of size <= 2: " + counts;
  return o;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<CorpusRack> corpus = load_corpus();

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 betti numbers over Q equal m^n", [&] { return criterion_betti(corpus); }},
      {"2 integral torsion primes divide N", [&] { return criterion_torsion(corpus); }},
      {"3 xi is an isomorphism over Q", [&] { return criterion_xi(corpus); }},
      {"4 twisted vanishing and Jordan dimensions", [&] { return criterion_twisted(corpus); }},
      {"5 H^2 via the structure group", [&] { return criterion_h2(corpus); }},
      {"6 structural identities", [&] { return criterion_structure(corpus); }},
      {"7 semidirect homomorphisms are cocycles", [] { return criterion_semidirect(); }},
      {"8 nonabelian H^2 consistency", [] { return criterion_nonabelian(); }},
  };

  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.failures.push_back(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << name << "  [" << o.summary << "]" << std::endl;
    for (const auto& f : o.failures) std::cout << "        " << f << "\n";
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << seconds;
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << " in " << t.str() << " s\n";
  return all ? 0 : 1;
}
