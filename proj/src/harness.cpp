#include "sftcd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "sftcd/error.hpp"

namespace sftcd {

// --- generation ------------------------------------------------------------

namespace {

constexpr std::size_t kGenerationAttempts = 64;
constexpr std::size_t kOntoLength = 4096;

/// Draws that do not depend on the standard library's distributions, so a
/// seed produces the same triple everywhere.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t bound) {
    const std::uint64_t b = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % b;
    for (;;) {
      const std::uint64_t r = rng_();
      if (r < limit) return static_cast<std::size_t>(r % b);
    }
  }

  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }

  bool chance(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

 private:
  std::mt19937_64 rng_;
};

std::string letter_name(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "y" + std::to_string(i);
}

std::vector<std::string> digit_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

using Edges = std::set<std::pair<std::size_t, std::size_t>>;

VertexShift shift_from(const std::vector<std::string>& names, const Edges& edges) {
  std::vector<std::pair<std::string, std::string>> allowed;
  for (auto [a, b] : edges) allowed.emplace_back(names[a], names[b]);
  return VertexShift(names, allowed);
}

std::vector<std::vector<Symbol>> adjacency(std::size_t n, const Edges& edges) {
  std::vector<std::vector<Symbol>> succ(n);
  for (auto [a, b] : edges) succ[a].push_back(static_cast<Symbol>(b));
  return succ;
}

/// Adds edges from sink components of the condensation until one component
/// is left. `compatible(u, v)` filters the candidate edges.
template <class Compatible>
void connect(std::size_t n, Edges& edges, Draw& draw, Compatible compatible) {
  for (;;) {
    std::size_t count = 0;
    const auto comp = strongly_connected_components(adjacency(n, edges), &count);
    if (count <= 1) return;
    std::vector<bool> has_exit(count, false);
    for (auto [a, b] : edges)
      if (comp[a] != comp[b]) has_exit[comp[a]] = true;
    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t u = 0; u < n; ++u) {
      if (has_exit[comp[u]]) continue;
      for (std::size_t v = 0; v < n; ++v)
        if (comp[v] != comp[u] && compatible(u, v)) candidates.emplace_back(u, v);
    }
    if (candidates.empty()) throw Error(ErrorKind::GenerationFailed, "cannot join strongly connected components");
    edges.insert(draw.pick(candidates));
  }
}

/// Adds random missing edges (among `pool`) until `ok()` holds.
template <class Ok>
bool repair(Edges& edges, const std::vector<std::pair<std::size_t, std::size_t>>& pool, Draw& draw, Ok ok) {
  while (!ok()) {
    std::vector<std::pair<std::size_t, std::size_t>> missing;
    for (const auto& e : pool)
      if (!edges.count(e)) missing.push_back(e);
    if (missing.empty()) return false;
    edges.insert(draw.pick(missing));
  }
  return true;
}

std::optional<CodeTriple> attempt(const TripleGenSpec& spec, Draw& draw) {
  const std::size_t ny = spec.y_symbols;
  const std::size_t nz = spec.z_symbols;

  std::vector<std::string> y_names;
  for (std::size_t i = 0; i < ny; ++i) y_names.push_back(letter_name(i));
  const auto z_names = digit_names(nz);
  const auto z_shift = VertexShift::full(z_names);

  // Y: a random Hamiltonian cycle plus random extra edges.
  Edges y_edges;
  std::vector<std::size_t> order(ny);
  std::iota(order.begin(), order.end(), 0);
  draw.shuffle(order);
  for (std::size_t i = 0; i < ny; ++i) y_edges.emplace(order[i], order[(i + 1) % ny]);
  std::vector<std::pair<std::size_t, std::size_t>> y_pool;
  for (std::size_t a = 0; a < ny; ++a)
    for (std::size_t b = 0; b < ny; ++b) {
      y_pool.emplace_back(a, b);
      if (draw.chance(spec.edge_density)) y_edges.emplace(a, b);
    }

  // psi: a random surjective symbol map; Y gains edges until psi is onto
  // the full shift Z.
  std::vector<std::size_t> psi_map(ny);
  std::vector<std::size_t> targets(ny);
  for (std::size_t i = 0; i < ny; ++i) targets[i] = i < nz ? i : draw.below(nz);
  draw.shuffle(targets);
  for (std::size_t i = 0; i < ny; ++i) psi_map[i] = targets[i];
  auto psi_of = [&](const VertexShift& y) {
    std::map<std::string, std::string> names;
    for (std::size_t i = 0; i < ny; ++i) names[y_names[i]] = z_names[psi_map[i]];
    return OneBlockCode::from_names(y, Alphabet(z_names), names);
  };
  const bool psi_ok = repair(y_edges, y_pool, draw, [&] {
    return check_onto(psi_of(shift_from(y_names, y_edges)), z_shift, kOntoLength).onto;
  });
  if (!psi_ok) return std::nullopt;
  const auto y_shift = shift_from(y_names, y_edges);

  // X: copies of each Y-symbol with a nonempty random set of copy pairs over
  // every Y-edge.
  std::vector<std::string> x_names;
  std::vector<std::size_t> x_parent;
  std::vector<std::vector<std::size_t>> copies(ny);
  for (std::size_t s = 0; s < ny; ++s) {
    const std::size_t k = draw.between(spec.blowup_min, spec.blowup_max);
    for (std::size_t c = 0; c < k; ++c) {
      copies[s].push_back(x_names.size());
      x_names.push_back(y_names[s] + std::to_string(c));
      x_parent.push_back(s);
    }
  }
  const std::size_t nx = x_names.size();
  Edges x_edges;
  std::vector<std::pair<std::size_t, std::size_t>> x_pool;
  for (auto [s, t] : y_edges) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (auto u : copies[s])
      for (auto v : copies[t]) pairs.emplace_back(u, v);
    x_pool.insert(x_pool.end(), pairs.begin(), pairs.end());
    bool any = false;
    for (const auto& p : pairs)
      if (draw.chance(spec.edge_density)) x_edges.insert(p), any = true;
    if (!any) x_edges.insert(draw.pick(pairs));
  }
  auto compatible = [&](std::size_t u, std::size_t v) { return y_edges.count({x_parent[u], x_parent[v]}) > 0; };
  connect(nx, x_edges, draw, compatible);

  auto phi_of = [&](const VertexShift& x) {
    std::map<std::string, std::string> names;
    for (std::size_t i = 0; i < nx; ++i) names[x_names[i]] = y_names[x_parent[i]];
    return OneBlockCode::from_names(x, y_shift.alphabet(), names);
  };
  // The copy projection of a strongly connected X need not be onto Y.
  const bool phi_ok = repair(x_edges, x_pool, draw, [&] {
    return check_onto(phi_of(shift_from(x_names, x_edges)), y_shift, kOntoLength).onto;
  });
  if (!phi_ok) return std::nullopt;

  return CodeTriple(phi_of(shift_from(x_names, x_edges)), psi_of(y_shift), z_shift);
}

}  // namespace

json spec_to_json(const TripleGenSpec& spec) {
  return {{"seed", spec.seed},
          {"y_symbols", spec.y_symbols},
          {"blowup_min", spec.blowup_min},
          {"blowup_max", spec.blowup_max},
          {"z_symbols", spec.z_symbols},
          {"edge_density", spec.edge_density}};
}

TripleGenSpec spec_from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "generator spec must be an object");
  TripleGenSpec spec;
  try {
    spec.seed = doc.value("seed", spec.seed);
    spec.y_symbols = doc.value("y_symbols", spec.y_symbols);
    spec.blowup_min = doc.value("blowup_min", spec.blowup_min);
    spec.blowup_max = doc.value("blowup_max", spec.blowup_max);
    spec.z_symbols = doc.value("z_symbols", spec.z_symbols);
    spec.edge_density = doc.value("edge_density", spec.edge_density);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("generator spec: ") + e.what());
  }
  return spec;
}

CodeTriple generate_triple(const TripleGenSpec& spec) {
  if (spec.y_symbols == 0 || spec.z_symbols == 0 || spec.blowup_min == 0 || spec.blowup_min > spec.blowup_max ||
      spec.z_symbols > spec.y_symbols || !(spec.edge_density >= 0.0 && spec.edge_density <= 1.0))
    throw Error(ErrorKind::PreconditionUnmet, "generator spec out of range");
  if (spec.y_symbols * spec.blowup_max > SymbolSet::kMaxSymbols)
    throw Error(ErrorKind::ResourceLimit, "generated X would exceed " + std::to_string(SymbolSet::kMaxSymbols) +
                                              " symbols");
  Draw draw(spec.seed);
  for (std::size_t i = 0; i < kGenerationAttempts; ++i)
    if (auto t = attempt(spec, draw)) return std::move(*t);
  throw Error(ErrorKind::GenerationFailed, "no valid triple after " + std::to_string(kGenerationAttempts) + " attempts");
}

TripleGenSpec sweep_spec(std::uint64_t seed) {
  Draw draw(seed ^ 0x9e3779b97f4a7c15ULL);
  TripleGenSpec spec;
  spec.seed = seed;
  spec.y_symbols = draw.between(2, 3);
  spec.blowup_min = 1;
  spec.blowup_max = draw.between(2, 3);
  spec.z_symbols = draw.between(1, 2);
  spec.edge_density = 0.5;
  return spec;
}

OneBlockCode generate_outer_code(const VertexShift& z, std::uint64_t seed) {
  Draw draw(seed);
  const std::size_t n = z.size();
  const std::size_t k = draw.between(1, n);
  std::vector<std::size_t> targets(n);
  for (std::size_t i = 0; i < n; ++i) targets[i] = i < k ? i : draw.below(k);
  draw.shuffle(targets);
  const auto w_names = digit_names(k);
  std::vector<Symbol> map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = static_cast<Symbol>(targets[i]);
  return OneBlockCode(z, Alphabet(w_names), map);
}

// --- reports ---------------------------------------------------------------

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

bool TheoremReport::failed() const { return count(Verdict::Fail) > 0; }

std::size_t TheoremReport::count(Verdict verdict) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.verdict == verdict; }));
}

json report_to_json(const TheoremReport& report) {
  json out = {{"case", report.case_id}};
  auto brief = [](const std::optional<DegreeEstimate>& e) -> json {
    if (!e) return nullptr;
    return {{"value", e->value}, {"stabilized", e->stabilized}, {"scanned_length", e->scanned_length}};
  };
  out["d_pi"] = brief(report.d_pi);
  out["d_phi"] = brief(report.d_phi);
  out["d_psi"] = brief(report.d_psi);
  out["d_rel"] = brief(report.d_rel);
  json checks = json::array();
  for (const auto& c : report.checks) {
    json entry = {{"name", c.name}, {"verdict", std::string(to_string(c.verdict))}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  out["checks"] = checks;
  if (!report.archive.is_null()) out["archive"] = report.archive;
  return out;
}

namespace {

std::string describe(const DegreeEstimate& e) {
  return std::to_string(e.value) + (e.stabilized ? "" : "?");
}

/// Verdict of a relation over estimates: inconclusive unless all stabilized.
CheckResult judge(std::string name, std::initializer_list<const DegreeEstimate*> reads, bool holds,
                  std::string detail) {
  for (const auto* e : reads)
    if (!e->stabilized) return {std::move(name), Verdict::Inconclusive, "unstabilized estimate: " + detail};
  return {std::move(name), holds ? Verdict::Pass : Verdict::Fail, std::move(detail)};
}

json archive_for(const CodeTriple& t, const TheoremReport& report) {
  json out = {{"triple", triple_to_json(t)}};
  if (report.d_pi) out["d_pi"] = estimate_to_json(*report.d_pi, t.pi());
  if (report.d_phi) out["d_phi"] = estimate_to_json(*report.d_phi, t.phi());
  if (report.d_psi) out["d_psi"] = estimate_to_json(*report.d_psi, t.psi());
  if (report.d_rel) out["d_rel"] = relative_estimate_to_json(*report.d_rel, t);
  return out;
}

void fill(TheoremReport& report, const TripleDegrees& d) {
  report.d_pi = d.pi;
  report.d_phi = d.phi;
  report.d_psi = d.psi;
  report.d_rel = d.rel;
}

}  // namespace

TripleDegrees triple_degrees(const CodeTriple& t, std::size_t max_length, std::size_t plateau) {
  return {class_degree(t.pi(), max_length, plateau), class_degree(t.phi(), max_length, plateau),
          class_degree(t.psi(), max_length, plateau), relative_class_degree(t, max_length, plateau)};
}

TheoremReport check_main_identity(const CodeTriple& t, std::size_t max_length, std::size_t plateau) {
  return check_main_identity(t, triple_degrees(t, max_length, plateau));
}

TheoremReport check_main_identity(const CodeTriple& t, const TripleDegrees& d) {
  TheoremReport report;
  fill(report, d);
  const auto pi = d.pi.value, phi = d.phi.value, psi = d.psi.value, rel = d.rel.value;
  const std::string values = "d_pi=" + describe(d.pi) + " d_phi=" + describe(d.phi) + " d_psi=" + describe(d.psi) +
                             " d_rel=" + describe(d.rel);
  report.checks.push_back(judge("product", {&d.pi, &d.psi, &d.rel}, pi == psi * rel, values));
  report.checks.push_back(judge("divides", {&d.rel, &d.phi}, rel != 0 && phi % rel == 0, values));
  std::string bound = values;
  if (pi < psi * phi) bound += " (strict)";
  report.checks.push_back(judge("bound", {&d.pi, &d.psi, &d.phi}, pi <= psi * phi, bound));
  report.checks.push_back(judge("relative-bound", {&d.rel, &d.phi}, rel <= phi, values));
  if (report.failed()) report.archive = archive_for(t, report);
  return report;
}

TheoremReport check_equality_cases(const CodeTriple& t, std::size_t max_length, std::size_t plateau) {
  return check_equality_cases(t, triple_degrees(t, max_length, plateau));
}

TheoremReport check_equality_cases(const CodeTriple& t, const TripleDegrees& d) {
  TheoremReport report;
  fill(report, d);
  const auto pi = d.pi.value, phi = d.phi.value, psi = d.psi.value, rel = d.rel.value;

  // The scanned minimum only decreases with length, so a value of 1 is final.
  if (!d.phi.stabilized) {
    report.checks.push_back({"degree-one", Verdict::Inconclusive, "d_phi unstabilized"});
  } else if (phi != 1) {
    report.checks.push_back({"degree-one", Verdict::Skipped, "d_phi=" + std::to_string(phi)});
  } else {
    report.checks.push_back(judge("degree-one", {&d.pi, &d.psi}, pi == psi,
                                  "d_pi=" + describe(d.pi) + " d_psi=" + describe(d.psi)));
  }

  if (!is_finite_to_one(t.psi())) {
    report.checks.push_back({"finite-to-one-relative", Verdict::Skipped, "psi not finite-to-one"});
    report.checks.push_back({"finite-to-one-product", Verdict::Skipped, "psi not finite-to-one"});
  } else {
    report.checks.push_back(judge("finite-to-one-relative", {&d.rel, &d.phi}, rel == phi,
                                  "d_rel=" + describe(d.rel) + " d_phi=" + describe(d.phi)));
    report.checks.push_back(judge("finite-to-one-product", {&d.pi, &d.psi, &d.phi}, pi == psi * phi,
                                  "d_pi=" + describe(d.pi) + " d_psi=" + describe(d.psi) +
                                      " d_phi=" + describe(d.phi)));
  }
  if (report.failed()) report.archive = archive_for(t, report);
  return report;
}

TheoremReport check_chain_identity(const CodeTriple& t, const OneBlockCode& varphi, std::size_t max_length,
                                   std::size_t plateau) {
  if (!t.z()) throw Error(ErrorKind::PreconditionUnmet, "chain identity needs Z as a vertex shift");
  const VertexShift& z = *t.z();
  if (!(varphi.domain() == z)) throw Error(ErrorKind::AlphabetMismatch, "outer code must be defined on Z");
  // The image of varphi may be strictly sofic, so the assembled triples carry
  // no outer shift; relative degrees only need the codes.
  const CodeTriple outer(t.pi(), varphi);
  const CodeTriple middle(t.psi(), varphi);
  const CodeTriple inner(t.phi(), compose(t.psi(), varphi));

  const auto pi_rel = relative_class_degree(outer, max_length, plateau);
  const auto psi_rel = relative_class_degree(middle, max_length, plateau);
  const auto phi_rel = relative_class_degree(inner, max_length, plateau);
  const auto total = class_degree(outer.pi(), max_length, plateau);
  const auto varphi_deg = class_degree(varphi, max_length, plateau);

  TheoremReport report;
  report.checks.push_back(judge("chain", {&pi_rel, &psi_rel, &phi_rel}, pi_rel.value == psi_rel.value * phi_rel.value,
                                "d_pi/varphi=" + describe(pi_rel) + " d_psi/varphi=" + describe(psi_rel) +
                                    " d_phi/varphi.psi=" + describe(phi_rel)));
  report.checks.push_back(judge("chain-outer", {&total, &varphi_deg, &pi_rel},
                                total.value == varphi_deg.value * pi_rel.value,
                                "d_varphi.pi=" + describe(total) + " d_varphi=" + describe(varphi_deg) +
                                    " d_pi/varphi=" + describe(pi_rel)));
  if (report.failed()) {
    report.archive = {{"triple", triple_to_json(t)},
                      {"varphi", code_to_json(varphi)},
                      {"d_pi_varphi", relative_estimate_to_json(pi_rel, outer)},
                      {"d_psi_varphi", relative_estimate_to_json(psi_rel, middle)},
                      {"d_phi_varphi_psi", relative_estimate_to_json(phi_rel, inner)},
                      {"d_varphi_pi", estimate_to_json(total, outer.pi())},
                      {"d_varphi", estimate_to_json(varphi_deg, varphi)}};
  }
  return report;
}

// --- suite -----------------------------------------------------------------

namespace {

TheoremReport run_case(const SuiteCase& c, const SuiteOptions& options, std::size_t index) {
  const auto& t = c.triple;
  const auto d = triple_degrees(t, options.max_length, options.plateau);
  TheoremReport report = check_main_identity(t, d);
  report.case_id = c.id;
  auto merge = [&](TheoremReport other, const std::string& prefix) {
    for (auto& check : other.checks) {
      check.name = prefix + check.name;
      report.checks.push_back(std::move(check));
    }
    if (!other.archive.is_null()) report.archive[prefix.empty() ? "extra" : prefix] = std::move(other.archive);
  };
  if (options.equality_cases) merge(check_equality_cases(t, d), "");
  if (options.chain) {
    if (!t.z()) {
      report.checks.push_back({"chain", Verdict::Skipped, "no Z shift"});
    } else {
      merge(check_chain_identity(t, OneBlockCode::identity(*t.z()), options.max_length, options.plateau),
            "identity-");
      if (t.z()->size() > 1)
        merge(check_chain_identity(t, generate_outer_code(*t.z(), 0x5eed0000ULL + index), options.max_length,
                                   options.plateau),
              "outer-");
    }
  }
  if (report.failed() && !report.archive.contains("triple")) report.archive["triple"] = triple_to_json(t);
  return report;
}

}  // namespace

SuiteSummary run_suite(const std::vector<SuiteCase>& cases, const SuiteOptions& options) {
  SuiteSummary summary;
  summary.reports.resize(cases.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, cases.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cases.size(); i = next++) summary.reports[i] = run_case(cases[i], options, i);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& r : summary.reports) {
    summary.pass += r.count(Verdict::Pass);
    summary.fail += r.count(Verdict::Fail);
    summary.inconclusive += r.count(Verdict::Inconclusive);
    summary.skipped += r.count(Verdict::Skipped);
    if (r.d_pi->stabilized && r.d_phi->stabilized && r.d_psi->stabilized && r.d_rel->stabilized)
      ++summary.stabilized_cases;
  }
  return summary;
}

json summary_to_json(const SuiteSummary& summary) {
  return {{"cases", summary.reports.size()},        {"pass", summary.pass},
          {"fail", summary.fail},                   {"inconclusive", summary.inconclusive},
          {"skipped", summary.skipped},             {"stabilized_cases", summary.stabilized_cases}};
}

std::vector<SuiteCase> builtin_cases() {
  std::vector<SuiteCase> out;
  for (const auto& name : builtin_names()) out.push_back({name, load_triple(name).triple});
  return out;
}

std::vector<SuiteCase> directory_cases(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw Error(ErrorKind::ParseError, "not a directory: " + dir);
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") paths.push_back(entry.path());
  std::sort(paths.begin(), paths.end());
  std::vector<SuiteCase> out;
  for (const auto& p : paths) out.push_back({p.stem().string(), load_triple(p.string()).triple});
  return out;
}

std::vector<SuiteCase> generated_cases(const std::vector<TripleGenSpec>& specs) {
  std::vector<SuiteCase> out;
  for (const auto& spec : specs) out.push_back({"gen-" + std::to_string(spec.seed), generate_triple(spec)});
  return out;
}

}  // namespace sftcd
