#include <string>

#include "rackoh/cohomology/cohomology.hpp"
#include "rackoh/errors.hpp"

namespace rackoh {

namespace {

// Small values as JSON numbers, anything wider than 64 bits as a decimal string.
Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const Json& v) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    Integer out;
    if (out.set_str(v.get<std::string>(), 10) == 0) return out;
  }
  throw InputError("expected an integer, got " + v.dump());
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw InputError(std::string("report is missing '") + key + "'");
  return obj.at(key);
}

std::size_t size_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_number_unsigned()) throw InputError(std::string("'") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_field(const Json& obj, const char* key) {
  const Json& v = field(obj, key);
  if (!v.is_string()) throw InputError(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

Json report_to_json(const CohomologyReport& report) {
  Json doc;
  doc["rack"] = {{"id", report.rack.id},
                 {"size", report.rack.size},
                 {"orbits", report.rack.orbit_count},
                 {"inner_order", report.rack.inner_order}};
  doc["module"] = {{"description", report.module}, {"ring", report.ring}, {"dim", report.module_dim}};
  Json degrees = Json::array();
  for (const DegreeEntry& e : report.degrees) {
    Json d;
    d["n"] = e.n;
    d["betti"] = e.betti;
    Json torsion = Json::array();
    for (const Integer& t : e.torsion) torsion.push_back(integer_to_json(t));
    d["torsion"] = std::move(torsion);
    if (e.predicted) d["predicted"] = *e.predicted;
    if (e.invariant_betti) d["invariant_betti"] = *e.invariant_betti;
    if (e.xi_rank) d["xi_rank"] = *e.xi_rank;
    degrees.push_back(std::move(d));
  }
  doc["degrees"] = std::move(degrees);
  Json checks = Json::array();
  for (const TheoremCheck& c : report.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  doc["checks"] = std::move(checks);
  doc["notes"] = report.notes;
  return doc;
}

CohomologyReport report_from_json(const Json& doc) {
  CohomologyReport r;
  const Json& rack = field(doc, "rack");
  r.rack.id = string_field(rack, "id");
  r.rack.size = size_field(rack, "size");
  r.rack.orbit_count = size_field(rack, "orbits");
  r.rack.inner_order = size_field(rack, "inner_order");

  const Json& module = field(doc, "module");
  r.module = string_field(module, "description");
  r.ring = string_field(module, "ring");
  r.module_dim = size_field(module, "dim");

  const Json& degrees = field(doc, "degrees");
  if (!degrees.is_array()) throw InputError("'degrees' must be an array");
  for (const Json& d : degrees) {
    DegreeEntry e;
    e.n = size_field(d, "n");
    e.betti = size_field(d, "betti");
    const Json& torsion = field(d, "torsion");
    if (!torsion.is_array()) throw InputError("'torsion' must be an array");
    for (const Json& t : torsion) e.torsion.push_back(integer_from_json(t));
    if (d.contains("predicted")) e.predicted = size_field(d, "predicted");
    if (d.contains("invariant_betti")) e.invariant_betti = size_field(d, "invariant_betti");
    if (d.contains("xi_rank")) e.xi_rank = size_field(d, "xi_rank");
    r.degrees.push_back(std::move(e));
  }

  const Json& checks = field(doc, "checks");
  if (!checks.is_array()) throw InputError("'checks' must be an array");
  for (const Json& c : checks) {
    const Json& pass = field(c, "pass");
    if (!pass.is_boolean()) throw InputError("'pass' must be a boolean");
    r.checks.push_back({string_field(c, "name"), pass.get<bool>(), c.contains("detail") ? string_field(c, "detail") : ""});
  }

  if (doc.contains("notes")) {
    for (const Json& n : doc.at("notes")) {
      if (!n.is_string()) throw InputError("'notes' must hold strings");
      r.notes.push_back(n.get<std::string>());
    }
  }
  return r;
}

}  // namespace rackoh
