#include "rackoh/io/rack_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rackoh/errors.hpp"
#include "rackoh/rack/standard.hpp"

namespace rackoh {

namespace {

std::size_t parse_count(const std::string& text, const std::string& context) {
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InputError("expected a non-negative integer in " + context + ", got '" + text + "'");
  }
  return n;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  parts.push_back(current);
  return parts;
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
}

OperationTable table_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("table")) throw InputError("rack JSON needs an object with a \"table\" field");
  const Json& table = doc.at("table");
  if (!table.is_array()) throw InputError("rack \"table\" must be an array of rows");
  OperationTable t;
  for (const auto& row : table) {
    if (!row.is_array()) throw InputError("rack table rows must be arrays");
    std::vector<std::size_t> r;
    for (const auto& v : row) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("rack table entries must be non-negative integers");
      r.push_back(v.get<std::size_t>());
    }
    t.push_back(std::move(r));
  }
  if (doc.contains("size")) {
    if (!doc.at("size").is_number_integer() || doc.at("size").get<long long>() != static_cast<long long>(t.size())) {
      throw InputError("rack \"size\" does not match the number of table rows");
    }
  }
  return t;
}

RackSource rack_from_json(const Json& doc, std::string id) {
  const OperationTable t = table_from_json(doc);
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc.at("labels").is_array()) throw InputError("rack \"labels\" must be an array of strings");
    for (const auto& l : doc.at("labels")) {
      if (!l.is_string()) throw InputError("rack \"labels\" must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
    if (labels.size() != t.size()) throw InputError("rack needs exactly one label per element");
  }
  return {RackTable::create(t), std::move(id), std::move(labels)};
}

Json rack_to_json(const RackTable& rack, const std::vector<std::string>& labels) {
  Json doc;
  doc["size"] = rack.size();
  Json rows = Json::array();
  for (Element x = 0; x < rack.size(); ++x) {
    auto row = rack.row(x);
    rows.push_back(Json(std::vector<Element>(row.begin(), row.end())));
  }
  doc["table"] = std::move(rows);
  if (!labels.empty()) doc["labels"] = labels;
  return doc;
}

RackSource load_rack(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw InputError("rack spec '" + spec + "' must look like kind:param");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);

  if (kind == "file") return rack_from_json(read_json_file(rest), spec);
  if (kind == "trivial") return {make_trivial(parse_count(rest, spec)), spec, {}};
  if (kind == "dihedral") return {make_dihedral(parse_count(rest, spec)), spec, {}};
  if (kind == "cyclic") return {make_cyclic(parse_count(rest, spec)), spec, {}};
  if (kind == "conj") {
    const auto parts = split(rest, ',');
    const TableGroup group = TableGroup::builtin(parts.front());
    std::vector<std::size_t> subset;
    if (parts.size() > 1) {
      const auto classes = group.conjugacy_classes();
      for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i].rfind("class=", 0) != 0) throw InputError("conj parameters must be class=i, got '" + parts[i] + "'");
        const std::size_t c = parse_count(parts[i].substr(6), spec);
        if (c >= classes.size()) throw InputError(group.name() + " has only " + std::to_string(classes.size()) + " classes");
        subset.insert(subset.end(), classes[c].begin(), classes[c].end());
      }
    }
    return {make_conjugation(group, subset), spec, {}};
  }
  if (kind == "semidirect") {
    const auto first = rest.find(',');
    const auto second = first == std::string::npos ? first : rest.find(',', first + 1);
    if (second == std::string::npos) throw InputError("semidirect spec must be semidirect:p,t,BASE");
    const Ring ring = Ring::prime_field(parse_count(rest.substr(0, first), spec));
    const Rational t(rest.substr(first + 1, second - first - 1));
    const RackSource base = load_rack(rest.substr(second + 1));
    const CoeffModule module = CoeffModule::jordan(base.rack, ring, t, 1);
    return {make_semidirect(base.rack, module), spec, {}};
  }
  throw InputError("unknown rack kind '" + kind + "' (trivial, dihedral, cyclic, conj, semidirect, file)");
}

Ring parse_ring(const std::string& name, std::uint64_t p) {
  if (name == "Z") return Ring::integers();
  if (name == "Q") return Ring::rationals();
  if (name == "Fp") {
    if (p == 0) throw InputError("ring Fp needs a prime p");
    return Ring::prime_field(p);
  }
  if (name.size() > 1 && name[0] == 'F') return Ring::prime_field(parse_count(name.substr(1), "ring name"));
  throw InputError("unknown ring '" + name + "' (Z, Q, Fp, F<p>)");
}

Rational parse_scalar(const Json& value) {
  try {
    if (value.is_number_integer()) return Rational(static_cast<long>(value.get<long long>()));
    if (value.is_string()) {
      Rational r(value.get<std::string>());
      if (r.get_den() == 0) throw InputError("zero denominator");
      r.canonicalize();
      return r;
    }
  } catch (const std::invalid_argument&) {
  }
  throw InputError("expected an integer or \"a/b\" scalar, got " + value.dump());
}

CoeffModule module_from_json(const Json& doc, const RackTable& rack) {
  if (!doc.is_object()) throw InputError("module spec must be a JSON object");
  const std::uint64_t p = doc.contains("p") ? doc.at("p").get<std::uint64_t>() : 0;
  const Ring ring = parse_ring(doc.value("ring", std::string("Q")), p);
  const std::size_t dim = doc.value("dim", std::size_t{1});
  const Json action = doc.value("action", Json::object());
  const std::string type = action.value("type", std::string("trivial"));

  if (type == "trivial") return CoeffModule::trivial(rack, ring, dim);
  if (type == "jordan") {
    if (!action.contains("t")) throw InputError("jordan action needs \"t\"");
    return CoeffModule::jordan(rack, ring, parse_scalar(action.at("t")), dim);
  }
  if (type == "custom") {
    if (!action.contains("matrices") || !action.at("matrices").is_array()) {
      throw InputError("custom action needs \"matrices\"");
    }
    std::vector<DenseMatrix> matrices;
    for (const auto& m : action.at("matrices")) {
      std::vector<std::vector<Rational>> rows;
      for (const auto& row : m) {
        std::vector<Rational> r;
        for (const auto& v : row) r.push_back(parse_scalar(v));
        if (r.size() != dim) throw InputError("custom action matrix rows must have dim entries");
        rows.push_back(std::move(r));
      }
      if (rows.size() != dim) throw InputError("custom action matrices must be dim x dim");
      matrices.push_back(DenseMatrix::from_rows(ring, rows));
    }
    if (matrices.size() == 1 && rack.size() != 1) return CoeffModule::same_operator(rack, matrices.front());
    return CoeffModule::custom(rack, ring, std::move(matrices));
  }
  throw InputError("unknown module action type '" + type + "' (trivial, jordan, custom)");
}

}  // namespace rackoh
