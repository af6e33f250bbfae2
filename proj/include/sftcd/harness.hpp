#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sftcd/code.hpp"
#include "sftcd/depth.hpp"
#include "sftcd/io.hpp"

namespace sftcd {

struct TripleGenSpec {
  std::uint64_t seed = 1;
  std::size_t y_symbols = 2;
  std::size_t blowup_min = 1;
  std::size_t blowup_max = 2;
  std::size_t z_symbols = 1;
  double edge_density = 0.5;
};

json spec_to_json(const TripleGenSpec& spec);
TripleGenSpec spec_from_json(const json& doc);

/// Y is a random strongly connected vertex shift on letters a, b, ...; X
/// splits each Y-symbol s into copies s0, s1, ...; phi is the copy
/// projection and psi a random symbol map onto the full shift on digits.
/// Deterministic in `spec`. Throws GenerationFailed when the bounded
/// retries run out.
CodeTriple generate_triple(const TripleGenSpec& spec);

/// Small specs used by the seed sweep: y in {2, 3}, blowup <= 3, z <= 2.
TripleGenSpec sweep_spec(std::uint64_t seed);

/// A random surjective symbol map from Z onto at most |Z| digits, used as
/// the outer code of chain checks.
OneBlockCode generate_outer_code(const VertexShift& z, std::uint64_t seed);

enum class Verdict { Pass, Fail, Inconclusive, Skipped };
std::string_view to_string(Verdict verdict);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::Skipped;
  std::string detail;
};

struct TheoremReport {
  std::string case_id;
  std::optional<DegreeEstimate> d_pi;
  std::optional<DegreeEstimate> d_phi;
  std::optional<DegreeEstimate> d_psi;
  std::optional<DegreeEstimate> d_rel;
  std::vector<CheckResult> checks;
  /// Triple document and certificates, filled on any fail.
  json archive;

  bool failed() const;
  std::size_t count(Verdict verdict) const;
};

json report_to_json(const TheoremReport& report);

/// The four degree estimates a triple's checks read.
struct TripleDegrees {
  DegreeEstimate pi;
  DegreeEstimate phi;
  DegreeEstimate psi;
  DegreeEstimate rel;
};

TripleDegrees triple_degrees(const CodeTriple& t, std::size_t max_length, std::size_t plateau);

/// (i) d_pi = d_psi d_rel, (ii) d_rel | d_phi, (iii) d_pi <= d_psi d_phi,
/// (iv) d_rel <= d_phi.
TheoremReport check_main_identity(const CodeTriple& t, std::size_t max_length, std::size_t plateau);
TheoremReport check_main_identity(const CodeTriple& t, const TripleDegrees& d);

/// d_phi = 1 gives d_pi = d_psi; finite-to-one psi gives d_rel = d_phi and
/// d_pi = d_psi d_phi. Inapplicable cases are skipped.
TheoremReport check_equality_cases(const CodeTriple& t, std::size_t max_length, std::size_t plateau);
TheoremReport check_equality_cases(const CodeTriple& t, const TripleDegrees& d);

/// For an outer code varphi on Z:
///   d_{pi/varphi} = d_{psi/varphi} d_{phi/varphi o psi}
/// and the outer identity d_{varphi o pi} = d_varphi d_{pi/varphi}.
/// Throws PreconditionUnmet when the triple carries no Z shift.
TheoremReport check_chain_identity(const CodeTriple& t, const OneBlockCode& varphi, std::size_t max_length,
                                   std::size_t plateau);

struct SuiteCase {
  std::string id;
  CodeTriple triple;
};

struct SuiteSummary {
  std::vector<TheoremReport> reports;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
  std::size_t skipped = 0;
  /// Cases whose main-identity estimates all stabilized.
  std::size_t stabilized_cases = 0;

  bool ok() const { return fail == 0; }
};

json summary_to_json(const SuiteSummary& summary);

struct SuiteOptions {
  std::size_t max_length = 8;
  std::size_t plateau = 3;
  bool chain = true;
  bool equality_cases = true;
  std::size_t jobs = 1;
};

/// Runs every check on every case. Reports come back in case order.
SuiteSummary run_suite(const std::vector<SuiteCase>& cases, const SuiteOptions& options);

/// Builtin corpus cases, in name order.
std::vector<SuiteCase> builtin_cases();
/// Cases from every *.json triple document of a directory, in path order.
std::vector<SuiteCase> directory_cases(const std::string& dir);
/// Generated cases for a list of specs, ids "gen-<seed>".
std::vector<SuiteCase> generated_cases(const std::vector<TripleGenSpec>& specs);

}  // namespace sftcd
