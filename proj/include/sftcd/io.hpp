#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sftcd/code.hpp"
#include "sftcd/depth.hpp"

namespace sftcd {

using json = nlohmann::json;

/// {"alphabet": [...], "allowed": [[a, b], ...]}
json system_to_json(const VertexShift& shift);
VertexShift system_from_json(const json& doc);

/// {"domain": <system or name>, "codomain_alphabet": [...], "map": {...}}.
/// `domain_name`, when given, is written instead of the inline system.
json code_to_json(const OneBlockCode& code, const std::optional<std::string>& domain_name = std::nullopt);

struct LoadedCode {
  OneBlockCode code;
  /// Set when the document held a sliding block code that was recoded.
  std::optional<Recoding> recoding;
};

/// Accepts a 1-block document or a sliding block document
/// {"memory": m, "anticipation": a, "rule": {"<window>": "x", ...}}; the
/// latter is recoded to 1-block form.
LoadedCode code_from_json(const json& doc);

struct LoadedTriple {
  CodeTriple triple;
  std::vector<std::string> warnings;
  /// Recoding record per code name ("phi", "psi").
  json metadata = json::object();
};

/// Triple document:
///   {"systems": {name: system},
///    "codes": {name: code},
///    "triple": {"X": name, "Y": name, "Z": name?, "Z_alphabet": [...],
///               "phi": name, "psi": name},
///    "pi": code?}
/// pi is always recomputed; a stored pi that disagrees produces a warning.
/// Throws ParseError for schema problems and InvariantViolation when the
/// triple hypotheses fail.
LoadedTriple triple_from_json(const json& doc);

/// Canonical document; dump(load(dump(load(doc)))) == dump(load(doc)).
json triple_to_json(const CodeTriple& triple);

/// Graphviz rendering of X, Y (and Z when present) with code labels.
std::string triple_to_dot(const CodeTriple& triple);

json read_json_file(const std::string& path);

/// Resolves "builtin:<name>", a bare builtin name, or a file path.
LoadedTriple load_triple(const std::string& source);
/// A code document, or a triple document with `which` in {phi, psi, pi}.
LoadedCode load_code(const std::string& source, const std::string& which = "phi");

/// Report encodings. `domain` names the routing symbols and witness paths,
/// `block_alphabet` the scanned blocks, `witness_alphabet` the witness word.
json certificate_to_json(const RoutingCertificate& certificate, const Alphabet& domain,
                         const Alphabet& block_alphabet, const Alphabet& witness_alphabet);
json estimate_to_json(const DegreeEstimate& estimate, const Alphabet& domain, const Alphabet& block_alphabet,
                      const Alphabet& witness_alphabet);
json estimate_to_json(const DegreeEstimate& estimate, const OneBlockCode& code);
json relative_estimate_to_json(const DegreeEstimate& estimate, const CodeTriple& triple);

std::vector<std::string> builtin_names();
/// Throws ParseError for an unknown name.
const json& builtin_document(const std::string& name);

}  // namespace sftcd
