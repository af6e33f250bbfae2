#include "sftcd/io.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "sftcd/error.hpp"

namespace sftcd {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) parse_error(std::string("missing field '") + key + "'");
  return doc.at(key);
}

std::vector<std::string> string_list(const json& doc, const char* what) {
  if (!doc.is_array()) parse_error(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& item : doc) {
    if (!item.is_string()) parse_error(std::string(what) + " must be an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::size_t count_field(const json& doc, const char* key) {
  const auto& v = field(doc, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    parse_error(std::string("'") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

std::map<std::string, std::string> string_map(const json& doc, const char* what) {
  if (!doc.is_object()) parse_error(std::string(what) + " must be an object of strings");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : doc.items()) {
    if (!v.is_string()) parse_error(std::string(what) + " values must be strings");
    out.emplace(k, v.get<std::string>());
  }
  return out;
}

// Alphabet whose names are those of `declared`, in `reference` order, when
// the two agree as sets.
void require_same_names(const std::vector<std::string>& declared, const Alphabet& reference, const char* what) {
  std::set<std::string> a(declared.begin(), declared.end());
  std::set<std::string> b(reference.names().begin(), reference.names().end());
  if (a != b) throw Error(ErrorKind::AlphabetMismatch, std::string(what) + " does not match the target alphabet");
}

bool is_sliding(const json& doc) { return doc.contains("rule"); }

SlidingBlockCode sliding_from_json(const json& doc, VertexShift domain, Alphabet codomain) {
  const auto memory = count_field(doc, "memory");
  const auto anticipation = count_field(doc, "anticipation");
  std::map<Block, Symbol> rule;
  for (const auto& [window, image] : string_map(field(doc, "rule"), "rule")) {
    Block w = domain.alphabet().parse(window);
    if (w.size() != memory + anticipation + 1) parse_error("rule window '" + window + "' has the wrong length");
    if (!rule.emplace(std::move(w), codomain.index(image)).second) parse_error("duplicate rule window '" + window + "'");
  }
  return SlidingBlockCode(std::move(domain), std::move(codomain), memory, anticipation, std::move(rule));
}

OneBlockCode one_block_from_json(const json& doc, VertexShift domain, Alphabet codomain) {
  return OneBlockCode::from_names(std::move(domain), std::move(codomain), string_map(field(doc, "map"), "map"));
}

json recoding_metadata(const Recoding& r) {
  return json{{"memory", r.memory}, {"anticipation", r.anticipation}, {"window_symbols", r.windows.size()}};
}

}  // namespace

json system_to_json(const VertexShift& shift) {
  json allowed = json::array();
  for (const auto& [a, b] : shift.edges())
    allowed.push_back(json::array({shift.alphabet().name(a), shift.alphabet().name(b)}));
  return json{{"alphabet", shift.alphabet().names()}, {"allowed", allowed}};
}

VertexShift system_from_json(const json& doc) {
  const auto names = string_list(field(doc, "alphabet"), "alphabet");
  std::vector<VertexShift::Pair> pairs;
  const auto& allowed = field(doc, "allowed");
  if (!allowed.is_array()) parse_error("allowed must be an array of pairs");
  for (const auto& p : allowed) {
    const auto pair = string_list(p, "allowed pair");
    if (pair.size() != 2) parse_error("allowed pairs must have two symbols");
    pairs.emplace_back(pair[0], pair[1]);
  }
  return VertexShift(names, pairs);
}

json code_to_json(const OneBlockCode& code, const std::optional<std::string>& domain_name) {
  json map = json::object();
  for (Symbol a = 0; a < code.domain().size(); ++a)
    map[code.domain().alphabet().name(a)] = code.codomain().name(code(a));
  json domain = domain_name ? json(*domain_name) : system_to_json(code.domain());
  return json{{"domain", domain}, {"codomain_alphabet", code.codomain().names()}, {"map", map}};
}

LoadedCode code_from_json(const json& doc) {
  const auto& dom = field(doc, "domain");
  if (!dom.is_object()) parse_error("standalone code documents need an inline domain system");
  auto domain = system_from_json(dom);
  Alphabet codomain(string_list(field(doc, "codomain_alphabet"), "codomain_alphabet"));
  if (is_sliding(doc)) {
    auto recoding = recode_to_one_block(sliding_from_json(doc, std::move(domain), std::move(codomain)));
    auto code = recoding.code;
    return LoadedCode{std::move(code), std::move(recoding)};
  }
  return LoadedCode{one_block_from_json(doc, std::move(domain), std::move(codomain)), std::nullopt};
}

LoadedTriple triple_from_json(const json& doc) {
  if (!doc.is_object()) parse_error("triple document must be an object");
  std::map<std::string, VertexShift> systems;
  for (const auto& [name, sys] : field(doc, "systems").items()) systems.emplace(name, system_from_json(sys));
  const auto& codes = field(doc, "codes");
  const auto& binding = field(doc, "triple");

  auto system_named = [&](const json& ref) -> const VertexShift& {
    if (ref.is_string()) {
      auto it = systems.find(ref.get<std::string>());
      if (it == systems.end()) parse_error("unknown system '" + ref.get<std::string>() + "'");
      return it->second;
    }
    parse_error("system references must be names");
  };
  auto code_named = [&](const char* role) -> const json& {
    const auto& ref = field(binding, role);
    if (!ref.is_string()) parse_error(std::string("triple.") + role + " must name a code");
    return field(codes, ref.get<std::string>().c_str());
  };
  auto domain_of = [&](const json& code_doc, const VertexShift& expected, const char* role) {
    const auto& d = field(code_doc, "domain");
    VertexShift dom = d.is_object() ? system_from_json(d) : system_named(d);
    if (!(dom == expected))
      throw Error(ErrorKind::AlphabetMismatch, std::string(role) + " domain differs from the bound system");
  };

  const VertexShift& x = system_named(field(binding, "X"));
  VertexShift y = system_named(field(binding, "Y"));
  std::optional<VertexShift> z;
  if (binding.contains("Z")) z = system_named(binding.at("Z"));
  Alphabet z_alphabet = z ? z->alphabet()
                          : Alphabet(string_list(field(binding, "Z_alphabet"), "Z_alphabet"));
  if (z && binding.contains("Z_alphabet"))
    require_same_names(string_list(binding.at("Z_alphabet"), "Z_alphabet"), z_alphabet, "Z_alphabet");

  const json& phi_doc = code_named("phi");
  const json& psi_doc = code_named("psi");
  domain_of(phi_doc, x, "phi");
  domain_of(psi_doc, y, "psi");
  if (phi_doc.contains("codomain_alphabet"))
    require_same_names(string_list(phi_doc.at("codomain_alphabet"), "codomain_alphabet"), y.alphabet(),
                       "phi codomain_alphabet");
  if (psi_doc.contains("codomain_alphabet"))
    require_same_names(string_list(psi_doc.at("codomain_alphabet"), "codomain_alphabet"), z_alphabet,
                       "psi codomain_alphabet");

  json metadata = json::object();

  // psi first: a sliding psi changes Y, and phi must then land in the
  // recoded Y.
  std::optional<OneBlockCode> psi;
  std::size_t psi_memory = 0, psi_anticipation = 0;
  std::vector<Block> y_windows;
  if (is_sliding(psi_doc)) {
    auto r = recode_to_one_block(sliding_from_json(psi_doc, y, z_alphabet));
    metadata["psi"] = recoding_metadata(r);
    psi_memory = r.memory;
    psi_anticipation = r.anticipation;
    y_windows = r.windows;
    psi = r.code;
  } else {
    psi = one_block_from_json(psi_doc, y, z_alphabet);
  }

  std::optional<OneBlockCode> phi;
  if (!is_sliding(phi_doc) && y_windows.empty()) {
    phi = one_block_from_json(phi_doc, x, y.alphabet());
  } else {
    // Express phi as one sliding code from X into the (possibly recoded) Y.
    std::size_t memory = 0, anticipation = 0;
    std::optional<SlidingBlockCode> phi_sliding;
    std::optional<OneBlockCode> phi_one;
    if (is_sliding(phi_doc)) {
      phi_sliding = sliding_from_json(phi_doc, x, y.alphabet());
      memory = phi_sliding->memory();
      anticipation = phi_sliding->anticipation();
    } else {
      phi_one = one_block_from_json(phi_doc, x, y.alphabet());
    }
    const std::size_t inner = memory + anticipation + 1;
    auto y_symbol_at = [&](const Block& window, std::size_t offset) {
      Block piece(window.begin() + static_cast<std::ptrdiff_t>(offset),
                  window.begin() + static_cast<std::ptrdiff_t>(offset + inner));
      return phi_sliding ? phi_sliding->apply_window(piece) : (*phi_one)(piece.front());
    };
    std::map<Block, Symbol> rule;
    const std::size_t outer = psi_memory + psi_anticipation + 1;
    std::map<Block, Symbol> y_window_index;
    for (Symbol s = 0; s < y_windows.size(); ++s) y_window_index.emplace(y_windows[s], s);
    for (const auto& window : enumerate_blocks(x, inner + outer - 1)) {
      Block y_window;
      for (std::size_t j = 0; j < outer; ++j) y_window.push_back(y_symbol_at(window, j));
      if (y_windows.empty()) {
        rule.emplace(window, y_window.front());
        continue;
      }
      auto it = y_window_index.find(y_window);
      if (it == y_window_index.end()) throw Error(ErrorKind::InvariantViolation, "phi does not map X into Y");
      rule.emplace(window, it->second);
    }
    const Alphabet target = y_windows.empty() ? y.alphabet() : psi->domain().alphabet();
    auto r = recode_to_one_block(SlidingBlockCode(x, target, memory + psi_memory, anticipation + psi_anticipation,
                                                  std::move(rule)));
    metadata["phi"] = recoding_metadata(r);
    phi = r.code;
  }

  LoadedTriple out{CodeTriple(*phi, *psi, z), {}, std::move(metadata)};
  if (doc.contains("pi")) {
    const auto& pi_doc = doc.at("pi");
    bool consistent = false;
    try {
      auto stored = one_block_from_json(pi_doc, out.triple.x(), out.triple.z_alphabet());
      consistent = stored.map() == out.triple.pi().map();
    } catch (const Error&) {
      consistent = false;
    }
    if (!consistent) out.warnings.push_back("stored pi is inconsistent with psi o phi; recomputed");
  }
  return out;
}

json triple_to_json(const CodeTriple& triple) {
  json systems{{"X", system_to_json(triple.x())}, {"Y", system_to_json(triple.y())}};
  json binding{{"X", "X"}, {"Y", "Y"}, {"Z_alphabet", triple.z_alphabet().names()}, {"phi", "phi"}, {"psi", "psi"}};
  if (triple.z()) {
    systems["Z"] = system_to_json(*triple.z());
    binding["Z"] = "Z";
  }
  json codes{{"phi", code_to_json(triple.phi(), "X")}, {"psi", code_to_json(triple.psi(), "Y")}};
  return json{{"systems", systems}, {"codes", codes}, {"triple", binding}};
}

std::string triple_to_dot(const CodeTriple& triple) {
  std::ostringstream out;
  auto quote = [](const std::string& s) { return "\"" + s + "\""; };
  auto emit = [&](const std::string& name, const VertexShift& shift, const OneBlockCode* code) {
    out << "  subgraph cluster_" << name << " {\n    label=" << quote(name) << ";\n";
    for (Symbol a = 0; a < shift.size(); ++a) {
      std::string label = shift.alphabet().name(a);
      if (code) label += " / " + code->codomain().name((*code)(a));
      out << "    " << quote(name + ":" + shift.alphabet().name(a)) << " [label=" << quote(label) << "];\n";
    }
    for (const auto& [a, b] : shift.edges())
      out << "    " << quote(name + ":" + shift.alphabet().name(a)) << " -> "
          << quote(name + ":" + shift.alphabet().name(b)) << ";\n";
    out << "  }\n";
  };
  out << "digraph triple {\n";
  emit("X", triple.x(), &triple.phi());
  emit("Y", triple.y(), &triple.psi());
  if (triple.z()) emit("Z", *triple.z(), nullptr);
  out << "}\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    parse_error("'" + path + "': " + e.what());
  }
}

namespace {

std::optional<std::string> builtin_name_of(const std::string& source) {
  std::string name = source;
  if (name.rfind("builtin:", 0) == 0) return name.substr(8);
  if (std::filesystem::exists(name)) return std::nullopt;
  if (name.size() > 5 && name.substr(name.size() - 5) == ".json") name = name.substr(0, name.size() - 5);
  name = std::filesystem::path(name).filename().string();
  for (const auto& b : builtin_names())
    if (b == name) return name;
  return std::nullopt;
}

}  // namespace

LoadedTriple load_triple(const std::string& source) {
  if (auto name = builtin_name_of(source)) return triple_from_json(builtin_document(*name));
  return triple_from_json(read_json_file(source));
}

LoadedCode load_code(const std::string& source, const std::string& which) {
  std::optional<json> doc;
  if (auto name = builtin_name_of(source)) doc = builtin_document(*name);
  else doc = read_json_file(source);
  if (!doc->contains("triple")) return code_from_json(*doc);
  auto loaded = triple_from_json(*doc);
  if (which == "phi") return LoadedCode{loaded.triple.phi(), std::nullopt};
  if (which == "psi") return LoadedCode{loaded.triple.psi(), std::nullopt};
  if (which == "pi") return LoadedCode{loaded.triple.pi(), std::nullopt};
  parse_error("code selector must be phi, psi or pi");
}

json certificate_to_json(const RoutingCertificate& certificate, const Alphabet& domain,
                         const Alphabet& block_alphabet, const Alphabet& witness_alphabet) {
  json routing = json::array();
  for (Symbol s : certificate.routing_set.members()) routing.push_back(domain.name(s));
  json witnesses = json::array();
  for (const auto& wit : certificate.witnesses) {
    witnesses.push_back({{"source", domain.name(wit.source)},
                         {"target", domain.name(wit.target)},
                         {"path", domain.format(wit.path)}});
  }
  return {{"mode", std::string(to_string(certificate.mode))},
          {"block", block_alphabet.format(certificate.w)},
          {"witness_word", witness_alphabet.format(certificate.witness_word)},
          {"coordinate", certificate.n},
          {"routing_set", routing},
          {"witnesses", witnesses}};
}

json estimate_to_json(const DegreeEstimate& estimate, const Alphabet& domain, const Alphabet& block_alphabet,
                      const Alphabet& witness_alphabet) {
  json out = {{"value", estimate.value},
              {"block", block_alphabet.format(estimate.minimal_block)},
              {"scanned_length", estimate.scanned_length},
              {"plateau", estimate.plateau},
              {"stabilized", estimate.stabilized},
              {"history", estimate.history}};
  if (estimate.minimum) {
    const auto& cert = estimate.minimum->certificate;
    out["coordinate"] = cert.n;
    json routing = json::array();
    for (Symbol s : cert.routing_set.members()) routing.push_back(domain.name(s));
    out["routing_set"] = routing;
    out["certificate"] = certificate_to_json(cert, domain, block_alphabet, witness_alphabet);
  } else {
    out["coordinate"] = nullptr;
    out["routing_set"] = nullptr;
  }
  return out;
}

json estimate_to_json(const DegreeEstimate& estimate, const OneBlockCode& code) {
  return estimate_to_json(estimate, code.domain().alphabet(), code.codomain(), code.codomain());
}

json relative_estimate_to_json(const DegreeEstimate& estimate, const CodeTriple& triple) {
  return estimate_to_json(estimate, triple.x().alphabet(), triple.y().alphabet(), triple.z_alphabet());
}

}  // namespace sftcd
