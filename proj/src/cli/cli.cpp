#include "rackoh/cli/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "rackoh/cohomology/cohomology.hpp"
#include "rackoh/cohomology/corpus.hpp"
#include "rackoh/errors.hpp"
#include "rackoh/io/rack_io.hpp"
#include "rackoh/linalg/field_algorithms.hpp"

namespace rackoh::cli {

namespace {

const char* axiom_name(RackAxiom a) {
  return a == RackAxiom::LeftTranslationBijective ? "left_translation_bijective" : "self_distributive";
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string group_text(const AbelianGroup& g, const AbelianCoefficients& coeff) {
  if (coeff.kind == AbelianCoefficients::Kind::Rationals) {
    return g.free_rank == 0 ? "0" : "Q^" + std::to_string(g.free_rank);
  }
  return g.to_string();
}

Json group_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& t : g.torsion) torsion.push_back(t.get_str());
  return {{"free_rank", g.free_rank}, {"torsion", torsion}};
}

CochainBudget budget_of(const RunConfig& c) {
  CochainBudget b;
  b.max_degree = std::max<std::size_t>(c.max_degree, b.max_degree);
  b.memory_mb = c.budget_mb;
  return b;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const RunConfig& c, std::ostream& out) {
  OperationTable table;
  std::vector<std::string> labels;
  if (c.rack.rfind("file:", 0) == 0) {
    table = table_from_json(read_json_file(c.rack.substr(5)));
  } else {
    RackSource s = load_rack(c.rack);
    table = s.rack.to_table();
    labels = s.labels;
  }
  const RackValidation v = verify_rack(table);

  Json doc;
  doc["rack"] = c.rack;
  doc["size"] = table.size();
  doc["valid"] = v.valid;
  Json violations = Json::array();
  for (const auto& viol : v.violations) {
    violations.push_back({{"axiom", axiom_name(viol.axiom)}, {"witness", viol.witness}, {"message", viol.message}});
  }
  doc["violations"] = violations;
  if (v.valid) {
    const RackTable rack = RackTable::create(table);
    const OrbitPartition parts = orbits(rack);
    doc["quandle"] = is_quandle(rack);
    doc["yang_baxter"] = verify_yang_baxter(rack);
    doc["orbits"] = parts.orbit_count;
    doc["orbit_sizes"] = parts.orbit_sizes();
    doc["inner_order"] = inner_group(rack).order();
  }

  if (c.json) {
    out << doc.dump(2) << "\n";
  } else {
    out << "rack         " << c.rack << "\n";
    out << "size         " << table.size() << "\n";
    out << "valid        " << (v.valid ? "true" : "false") << "\n";
    for (const auto& viol : v.violations) {
      out << "violation    " << axiom_name(viol.axiom) << " witness (" << join(viol.witness) << "): " << viol.message
          << "\n";
    }
    if (v.valid) {
      out << "quandle      " << (doc["quandle"].get<bool>() ? "true" : "false") << "\n";
      out << "yang_baxter  " << (doc["yang_baxter"].get<bool>() ? "true" : "false") << "\n";
      out << "orbits       " << doc["orbits"].get<std::size_t>() << " (sizes "
          << join(doc["orbit_sizes"].get<std::vector<std::size_t>>()) << ")\n";
      out << "inner_order  " << doc["inner_order"].get<std::size_t>() << "\n";
    }
  }
  return v.valid ? kSuccess : kCheckFailed;
}

// ---- cohomology -----------------------------------------------------------

struct Twist {
  Rational t = 1;
  std::size_t k = 1;
};

Twist parse_twist(const std::string& text) {
  Twist tw;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    const auto eq = part.find('=');
    const std::string key = part.substr(0, eq);
    const std::string value = eq == std::string::npos ? "" : part.substr(eq + 1);
    try {
      if (key == "t") {
        tw.t = Rational(value);
        tw.t.canonicalize();
      } else if (key == "k") {
        tw.k = std::stoul(value);
      } else {
        throw InputError("unknown --twisted key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw InputError("bad --twisted value '" + part + "' (expected t=<rational>,k=<size>)");
    }
  }
  if (tw.k == 0) throw InputError("--twisted needs k >= 1");
  return tw;
}

Ring ring_of(const RunConfig& c) { return parse_ring(c.ring, c.p); }

CohomologyReport compute_cohomology(const RunConfig& c) {
  const RackSource s = load_rack(c.rack);
  const CochainBudget budget = budget_of(c);

  if (!c.twisted.empty()) {
    const Twist tw = parse_twist(c.twisted);
    if (c.invariant) {
      return invariant_cohomology(s.rack, s.id, CoeffModule::jordan(s.rack, Ring::rationals(), tw.t, tw.k),
                                  c.max_degree, budget);
    }
    return twisted_cohomology(s.rack, s.id, tw.t, tw.k, c.max_degree, budget);
  }

  std::optional<CoeffModule> module;
  if (!c.module_file.empty()) {
    module = module_from_json(read_json_file(c.module_file), s.rack);
  } else if (!c.operator_matrix.empty()) {
    Json m;
    try {
      m = Json::parse(c.operator_matrix);
    } catch (const Json::exception&) {
      throw InputError("--operator must be a JSON matrix such as [[1,0],[0,2]]");
    }
    Json doc{{"ring", c.ring}, {"dim", m.size()}, {"action", {{"type", "custom"}, {"matrices", Json::array({m})}}}};
    if (c.p != 0) doc["p"] = c.p;
    module = module_from_json(doc, s.rack);
  } else {
    const Ring ring = ring_of(c);
    if (ring.kind() == linalg::RingKind::Integers && !c.invariant) {
      return cohomology_integral(s.rack, s.id, c.max_degree, budget);
    }
    module = CoeffModule::trivial(s.rack, ring);
  }

  if (c.invariant) return invariant_cohomology(s.rack, s.id, *module, c.max_degree, budget);
  if (!module->ring().is_field()) {
    if (!module->is_trivial() || module->dim() != 1) {
      throw PreconditionError("integral cohomology is available for trivial Z coefficients only");
    }
    return cohomology_integral(s.rack, s.id, c.max_degree, budget);
  }
  return cohomology_over_field(s.rack, s.id, *module, c.max_degree, budget);
}

void print_report(const CohomologyReport& r, std::ostream& out) {
  out << "rack    " << r.rack.id << " (|X| = " << r.rack.size << ", m = " << r.rack.orbit_count
      << ", N = " << r.rack.inner_order << ")\n";
  out << "module  " << r.module << "\n\n";
  const bool invariant = !r.degrees.empty() && r.degrees.front().xi_rank.has_value();
  out << std::setw(3) << "n" << std::setw(8) << "betti" << std::setw(12) << "predicted";
  if (invariant) out << std::setw(8) << "inv" << std::setw(8) << "xi";
  out << "  torsion\n";
  for (const DegreeEntry& e : r.degrees) {
    out << std::setw(3) << e.n << std::setw(8) << e.betti << std::setw(12)
        << (e.predicted ? std::to_string(*e.predicted) : "-");
    if (invariant) out << std::setw(8) << *e.invariant_betti << std::setw(8) << *e.xi_rank;
    std::string torsion;
    for (const auto& t : e.torsion) torsion += (torsion.empty() ? "Z/" : " + Z/") + t.get_str();
    out << "  " << (torsion.empty() ? "-" : torsion) << (e.predicted && *e.predicted != e.betti ? "  <-- differs" : "")
        << "\n";
  }
  out << "\nchecks\n";
  for (const TheoremCheck& ch : r.checks) {
    out << "  " << (ch.pass ? "PASS" : "FAIL") << "  " << ch.name << ": " << ch.detail << "\n";
  }
  if (!r.notes.empty()) {
    out << "notes\n";
    for (const auto& n : r.notes) out << "  - " << n << "\n";
  }
}

int cmd_cohomology(const RunConfig& c, std::ostream& out) {
  const CohomologyReport r = compute_cohomology(c);
  if (c.json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    print_report(r, out);
  }
  return r.all_pass() ? kSuccess : kCheckFailed;
}

// ---- h2 -------------------------------------------------------------------

int cmd_h2(const RunConfig& c, std::ostream& out) {
  const RackSource s = load_rack(c.rack);
  Json doc;
  doc["rack"] = s.id;
  bool ok = true;
  std::ostringstream human;
  human << "rack  " << s.id << "\n";

  if (!c.coeff.empty() || c.nonabelian.empty()) {
    const AbelianCoefficients coeff = AbelianCoefficients::parse(c.coeff.empty() ? "Z" : c.coeff);
    const H2Comparison h = h2_via_group(s.rack, coeff, budget_of(c));
    ok = ok && h.match();
    doc["coefficients"] = coeff.name();
    doc["direct"] = group_json(h.direct);
    doc["via_group"] = group_json(h.via_group);
    doc["match"] = h.match();
    human << "coefficients          " << coeff.name() << "\n";
    human << "H^2(X, A)             " << group_text(h.direct, coeff) << "\n";
    human << "H^1(G_X, Fun(X, A))   " << group_text(h.via_group, coeff) << "\n";
    human << "match                 " << (h.match() ? "true" : "false") << "\n";
  }
  if (!c.nonabelian.empty()) {
    const TableGroup a = TableGroup::builtin(c.nonabelian);
    const NonabelianH2 h = nonabelian_h2(s.rack, a, c.search_budget);
    Json classes = Json::array();
    for (const auto& cl : h.classes) classes.push_back({{"representative", cl.representative}, {"size", cl.size}});
    doc["nonabelian"] = {{"group", a.name()}, {"cocycles", h.cocycle_count}, {"class_count", h.classes.size()},
                         {"classes", classes}};
    human << "nonabelian group      " << a.name() << " (order " << a.order() << ")\n";
    human << "cocycles              " << h.cocycle_count << "\n";
    human << "classes               " << h.classes.size() << "\n";
    for (const auto& cl : h.classes) {
      human << "  [" << join(cl.representative, " ") << "]  size " << cl.size << "\n";
    }
  }
  out << (c.json ? doc.dump(2) + "\n" : human.str());
  return ok ? kSuccess : kCheckFailed;
}

// ---- group ----------------------------------------------------------------

int cmd_group(const RunConfig& c, std::ostream& out) {
  const RackSource s = load_rack(c.rack);
  const CoeffModule module = c.module_file.empty() ? CoeffModule::trivial(s.rack, ring_of(c))
                                                   : module_from_json(read_json_file(c.module_file), s.rack);
  const AbelianGroup via_group = group_h1(RackPresentation::of(s.rack), module);
  AbelianGroup direct;
  const ExactMatrix d0 = differential(s.rack, module, 0, budget_of(c));
  const ExactMatrix d1 = differential(s.rack, module, 1, budget_of(c));
  if (module.ring().is_field()) {
    direct.free_rank = d1.cols() - linalg::rank(d1) - linalg::rank(d0);
  } else {
    direct = linalg::integer_cohomology(d0, d1);
  }
  const bool match = direct == via_group;
  const AbelianCoefficients shown{module.ring().kind() == linalg::RingKind::Integers
                                      ? AbelianCoefficients::Kind::Integers
                                      : AbelianCoefficients::Kind::Rationals,
                                  0};
  const PermGroup inner = inner_group(s.rack);
  if (c.json) {
    Json doc{{"rack", s.id},
             {"module", module.describe()},
             {"inner_order", inner.order()},
             {"h1_group", group_json(via_group)},
             {"h1_rack", group_json(direct)},
             {"match", match}};
    out << doc.dump(2) << "\n";
  } else {
    const bool prime = module.ring().kind() == linalg::RingKind::PrimeField;
    auto text = [&](const AbelianGroup& g) {
      return prime ? (g.free_rank == 0 ? "0" : module.ring().name() + "^" + std::to_string(g.free_rank))
                   : group_text(g, shown);
    };
    out << "rack           " << s.id << "\n";
    out << "module         " << module.describe() << "\n";
    out << "|G_X^0|        " << inner.order() << "\n";
    out << "H^1(G_X, M)    " << text(via_group) << "\n";
    out << "H^1(X, M)      " << text(direct) << "\n";
    out << "match          " << (match ? "true" : "false") << "\n";
  }
  return match ? kSuccess : kCheckFailed;
}

// ---- corpus ---------------------------------------------------------------

struct CorpusResult {
  std::string rack;
  std::vector<std::size_t> betti;
  std::vector<TheoremCheck> checks;
  std::string error;
  bool resource_error = false;
};

CorpusResult run_corpus_entry(const std::string& spec, const RunConfig& c) {
  CorpusResult res;
  res.rack = spec;
  try {
    const RackSource s = load_rack(spec);
    const CochainBudget budget = budget_of(c);
    auto take = [&](const CohomologyReport& r, const std::string& prefix) {
      for (const auto& ch : r.checks) res.checks.push_back({prefix + ch.name, ch.pass, ch.detail});
    };

    const auto field = cohomology_over_field(s.rack, s.id, CoeffModule::trivial(s.rack, Ring::rationals()),
                                             c.max_degree, budget);
    for (const auto& e : field.degrees) res.betti.push_back(e.betti);
    take(field, "");
    take(cohomology_integral(s.rack, s.id, std::min<std::size_t>(c.max_degree, 2), budget), "integral:");
    take(invariant_cohomology(s.rack, s.id, CoeffModule::trivial(s.rack, Ring::rationals()), c.max_degree, budget),
         "invariant:");
    for (const char* coeff : {"Q", "Z2", "Z3"}) {
      const H2Comparison h = h2_via_group(s.rack, AbelianCoefficients::parse(coeff), budget);
      res.checks.push_back({std::string("h2_matches_group_") + coeff, h.match(),
                            h.direct.to_string() + " vs " + h.via_group.to_string()});
    }
    bool span = true;
    const std::size_t m = orbits(s.rack).orbit_count;
    for (std::size_t n = 1, expect = m; n <= c.max_degree; ++n, expect *= m) {
      span = span && orbit_product_rank(s.rack, n, budget) == expect;
    }
    res.checks.push_back({"orbit_products_span", span, "rank of orbit indicator products is m^n"});
  } catch (const ResourceError& e) {
    res.error = e.what();
    res.resource_error = true;
  } catch (const std::exception& e) {
    res.error = e.what();
  }
  return res;
}

int cmd_corpus(const RunConfig& c, std::ostream& out) {
  const std::vector<std::string> racks = default_corpus();
  std::vector<CorpusResult> results(racks.size());

  // Workers take the next index; results land in their own slot, so the
  // report does not depend on completion order.
  std::size_t workers = c.jobs != 0 ? c.jobs : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, racks.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < racks.size();) results[i] = run_corpus_entry(racks[i], c);
    });
  }
  for (auto& t : pool) t.join();

  std::map<std::string, std::pair<std::size_t, std::size_t>> summary;  // name -> (passed, total)
  std::vector<std::string> failures;
  bool resource = false;
  for (const auto& r : results) {
    for (const auto& ch : r.checks) {
      auto& [passed, total] = summary[ch.name];
      ++total;
      if (ch.pass) {
        ++passed;
      } else {
        failures.push_back(r.rack + ": " + ch.name + " (" + ch.detail + ")");
      }
    }
    if (!r.error.empty()) {
      failures.push_back(r.rack + ": error: " + r.error);
      resource = resource || r.resource_error;
    }
  }

  if (c.json) {
    Json doc;
    doc["max_degree"] = c.max_degree;
    Json rs = Json::array();
    for (const auto& r : results) {
      Json checks = Json::array();
      for (const auto& ch : r.checks) checks.push_back({{"name", ch.name}, {"pass", ch.pass}});
      Json entry{{"rack", r.rack}, {"betti", r.betti}, {"checks", checks}};
      if (!r.error.empty()) entry["error"] = r.error;
      rs.push_back(entry);
    }
    doc["racks"] = rs;
    Json sum = Json::array();
    for (const auto& [name, pt] : summary) sum.push_back({{"name", name}, {"passed", pt.first}, {"total", pt.second}});
    doc["summary"] = sum;
    doc["failures"] = failures;
    out << doc.dump(2) << "\n";
  } else {
    out << "corpus of " << racks.size() << " racks, degrees 0.." << c.max_degree << "\n\n";
    for (const auto& r : results) {
      std::size_t passed = 0;
      for (const auto& ch : r.checks) passed += ch.pass ? 1 : 0;
      out << "  " << std::left << std::setw(28) << r.rack << std::right << "betti " << std::left << std::setw(12)
          << join(r.betti) << std::right << passed << "/" << r.checks.size() << " checks"
          << (r.error.empty() ? "" : "  ERROR") << "\n";
    }
    out << "\nsummary\n";
    for (const auto& [name, pt] : summary) {
      out << "  " << (pt.first == pt.second ? "PASS" : "FAIL") << "  " << std::left << std::setw(40) << name
          << std::right << pt.first << "/" << pt.second << "\n";
    }
    if (!failures.empty()) {
      out << "\nfailures\n";
      for (const auto& f : failures) out << "  " << f << "\n";
    }
  }
  if (resource) return kResourceError;
  return failures.empty() ? kSuccess : kCheckFailed;
}

// ---- rack / normalize -----------------------------------------------------

int cmd_rack(const RunConfig& c, std::ostream& out) {
  const RackSource s = load_rack(c.rack);
  out << rack_to_json(s.rack, s.labels).dump(2) << "\n";
  return kSuccess;
}

int cmd_normalize(const RunConfig& c, std::ostream& out) {
  const Json doc = read_json_file(c.input);
  if (doc.is_object() && doc.contains("table")) {
    const RackSource s = rack_from_json(doc, "file:" + c.input);
    out << rack_to_json(s.rack, s.labels).dump(2) << "\n";
  } else {
    out << report_to_json(report_from_json(doc)).dump(2) << "\n";
  }
  return kSuccess;
}

}  // namespace

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "cohomology") return cmd_cohomology(c, out);
    if (c.command == "h2") return cmd_h2(c, out);
    if (c.command == "group") return cmd_group(c, out);
    if (c.command == "corpus") return cmd_corpus(c, out);
    if (c.command == "rack") return cmd_rack(c, out);
    if (c.command == "normalize") return cmd_normalize(c, out);
    err << "error: unknown command '" << c.command << "'\n";
    return kInputError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kResourceError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Finite rack cohomology: Betti numbers, torsion and structure checks"};
  app.require_subcommand(1);

  auto add_rack = [&](CLI::App* sub) {
    sub->add_option("--rack", c.rack, "trivial:n, dihedral:n, cyclic:n, conj:G[,class=i], semidirect:p,t,BASE or file:path")
        ->required();
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", c.json, "Emit JSON");
    sub->add_option("--budget-mb", c.budget_mb, "Matrix memory cap in MiB (default $RACKOH_BUDGET_MB or 2048)");
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", c.ring, "Z, Q, Fp or F<p>")->capture_default_str();
    sub->add_option("--p", c.p, "Prime for --ring Fp");
    sub->add_option("--module", c.module_file, "Module JSON file");
  };

  CLI::App* verify = app.add_subcommand("verify", "Check the rack axioms and basic invariants");
  add_rack(verify);
  add_common(verify);

  CLI::App* coh = app.add_subcommand("cohomology", "Cohomology groups and theorem checks");
  add_rack(coh);
  add_common(coh);
  add_ring(coh);
  coh->add_option("--max-degree", c.max_degree, "Highest degree")->capture_default_str()->check(CLI::Range(0, 6));
  coh->add_option("--twisted", c.twisted, "Every element acts by J_k(t) over Q, e.g. t=2,k=1");
  coh->add_option("--operator", c.operator_matrix, "Every element acts by this JSON matrix, e.g. [[1,0],[0,2]]");
  coh->add_flag("--invariant", c.invariant, "Invariant subcomplex and the map xi");

  CLI::App* h2 = app.add_subcommand("h2", "Second cohomology, directly and through the structure group");
  add_rack(h2);
  add_common(h2);
  h2->add_option("--coeff", c.coeff, "Z, Q, Z<q> or 0");
  h2->add_option("--nonabelian", c.nonabelian, "Builtin group for nonabelian 2-cocycles (S3, C3, Q8, ...)");
  h2->add_option("--search-budget", c.search_budget, "Step budget for the nonabelian search")->capture_default_str();

  CLI::App* group = app.add_subcommand("group", "H^1 of the structure group against H^1 of the rack");
  add_rack(group);
  add_common(group);
  add_ring(group);

  CLI::App* corpus = app.add_subcommand("corpus", "Run every check over the builtin corpus");
  add_common(corpus);
  corpus->add_option("--max-degree", c.max_degree, "Highest degree")->capture_default_str()->check(CLI::Range(0, 4));
  corpus->add_option("--jobs", c.jobs, "Worker threads (default: hardware concurrency)");

  CLI::App* rack = app.add_subcommand("rack", "Print a rack as JSON");
  add_rack(rack);

  CLI::App* normalize = app.add_subcommand("normalize", "Re-emit a rack or report JSON file");
  normalize->add_option("input", c.input, "JSON file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  c.command = app.get_subcommands().front()->get_name();
  return execute(c, out, err);
}

}  // namespace rackoh::cli
