#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "rackoh/cochain/coeff_module.hpp"
#include "rackoh/rack/rack_table.hpp"

namespace rackoh {

using Json = nlohmann::ordered_json;

struct RackSource {
  RackTable rack;
  /// Canonical spec string ("dihedral:3", "file:x.json", ...).
  std::string id;
  /// Optional element names; empty or one per element.
  std::vector<std::string> labels;
};

/// Throws InputError when the file is missing or not JSON.
Json read_json_file(const std::string& path);

/// The "table" of a rack document, checked for shape only (not the axioms).
OperationTable table_from_json(const Json& doc);

/// {"size": n, "table": [[...]], "labels": [...]}. Malformed documents and
/// invalid racks raise InputError.
RackSource rack_from_json(const Json& doc, std::string id = "json");
Json rack_to_json(const RackTable& rack, const std::vector<std::string>& labels = {});

/// Builtin grammar:
///   trivial:n  dihedral:n  cyclic:n
///   conj:G                 whole group G (S3, S4, A4, Q8, Cn, Dn)
///   conj:G,class=i,...     union of conjugacy classes by index
///   semidirect:p,t,SPEC    SPEC x F_p with every element acting by t
///   file:path.json
RackSource load_rack(const std::string& spec);

/// {"ring": "Z"|"Q"|"Fp", "p": prime, "dim": k, "action": {"type":
/// "trivial"|"jordan"|"custom", "t": scalar, "matrices": [...]}}.
/// Custom "matrices" lists one k x k matrix per rack element, or a single
/// matrix used for every element.
CoeffModule module_from_json(const Json& doc, const RackTable& rack);

/// Parses "Z", "Q", "F<p>" or "Fp" with an explicit prime.
Ring parse_ring(const std::string& name, std::uint64_t p = 0);

/// Exact scalar from a JSON integer or a "a/b" string.
Rational parse_scalar(const Json& value);

}  // namespace rackoh
