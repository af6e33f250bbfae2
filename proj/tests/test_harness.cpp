#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "sftcd/error.hpp"

using namespace sftcd;
using namespace fixtures;

namespace {

const CheckResult& check(const TheoremReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

}  // namespace

TEST(Generator, ExampleSpec) {
  TripleGenSpec spec;
  spec.seed = 1;
  spec.y_symbols = 2;
  spec.blowup_min = spec.blowup_max = 2;
  spec.z_symbols = 1;
  const auto t = generate_triple(spec);
  EXPECT_EQ(t.x().size(), 4u);
  EXPECT_EQ(t.y().size(), 2u);
  EXPECT_EQ(t.z_alphabet().size(), 1u);
  EXPECT_TRUE(check_onto(t.phi(), t.y(), 4096).onto);
  EXPECT_TRUE(is_irreducible(t.x()));
  EXPECT_TRUE(is_irreducible(t.y()));
}

TEST(Generator, Deterministic) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto spec = sweep_spec(seed);
    EXPECT_EQ(triple_to_json(generate_triple(spec)).dump(), triple_to_json(generate_triple(spec)).dump());
  }
  EXPECT_NE(triple_to_json(generate_triple(sweep_spec(1))).dump(),
            triple_to_json(generate_triple(sweep_spec(2))).dump());
}

TEST(Generator, InvariantsHoldAcrossSeeds) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    TripleGenSpec spec;
    spec.seed = seed;
    spec.y_symbols = 2 + seed % 3;
    spec.blowup_min = 1;
    spec.blowup_max = 1 + seed % 3;
    spec.z_symbols = 1 + seed % 2;
    spec.edge_density = 0.2 + 0.1 * static_cast<double>(seed % 6);
    const auto t = generate_triple(spec);
    ASSERT_TRUE(t.z());
    EXPECT_EQ(*t.z(), VertexShift::full(t.z_alphabet().names()));
    EXPECT_TRUE(t.phi().maps_into(t.y()));
    EXPECT_TRUE(check_onto(t.psi(), *t.z(), 4096).onto);
    for (Symbol s = 0; s < t.x().size(); ++s) EXPECT_EQ(t.pi()(s), t.psi()(t.phi()(s)));
    // Round trip through the document format.
    EXPECT_EQ(triple_to_json(triple_from_json(triple_to_json(t)).triple), triple_to_json(t));
  }
}

TEST(Generator, RelabelingHasDegreeOne) {
  TripleGenSpec spec;
  spec.seed = 7;
  spec.y_symbols = 3;
  spec.blowup_min = spec.blowup_max = 1;
  spec.z_symbols = 3;
  const auto t = generate_triple(spec);
  const auto d = triple_degrees(t, 6, 3);
  EXPECT_EQ(d.phi.value, 1u);
  EXPECT_EQ(d.psi.value, 1u);
  EXPECT_EQ(d.pi.value, 1u);
  EXPECT_EQ(d.rel.value, 1u);
}

TEST(Generator, BadSpecs) {
  TripleGenSpec spec;
  spec.z_symbols = 3;
  spec.y_symbols = 2;
  EXPECT_THROW(generate_triple(spec), Error);
  spec = {};
  spec.blowup_min = 3;
  spec.blowup_max = 2;
  EXPECT_THROW(generate_triple(spec), Error);
  spec = {};
  spec.edge_density = 1.5;
  EXPECT_THROW(generate_triple(spec), Error);
}

TEST(Generator, SpecJsonRoundTrip) {
  const auto spec = sweep_spec(42);
  const auto back = spec_from_json(spec_to_json(spec));
  EXPECT_EQ(spec_to_json(back), spec_to_json(spec));
  EXPECT_THROW(spec_from_json(json::array()), Error);
}

TEST(MainIdentity, Xor2) {
  const auto r = check_main_identity(builtin("xor2"), 6, 3);
  EXPECT_EQ(r.d_pi->value, 1u);
  EXPECT_EQ(r.d_phi->value, 2u);
  EXPECT_EQ(r.d_psi->value, 1u);
  EXPECT_EQ(r.d_rel->value, 1u);
  for (const auto& c : r.checks) EXPECT_EQ(c.verdict, Verdict::Pass) << c.name;
  EXPECT_NE(check(r, "bound").detail.find("strict"), std::string::npos);
  EXPECT_TRUE(r.archive.is_null());
}

TEST(MainIdentity, IdentityPsi) {
  const auto r = check_main_identity(builtin("xor2-identity"), 6, 3);
  EXPECT_EQ(r.d_pi->value, r.d_phi->value);
  EXPECT_EQ(r.count(Verdict::Pass), 4u);
}

TEST(MainIdentity, UnstabilizedEstimatesAreInconclusive) {
  // Length 2 is too short for the cover's trivial code to stabilize.
  const auto t = builtin("xor2");
  const auto r = check_main_identity(t, 2, 3);
  EXPECT_FALSE(r.d_pi->stabilized);
  EXPECT_EQ(check(r, "product").verdict, Verdict::Inconclusive);
  EXPECT_EQ(check(r, "bound").verdict, Verdict::Inconclusive);
  EXPECT_EQ(r.count(Verdict::Fail), 0u);
}

TEST(MainIdentity, FailsAreArchived) {
  // A deliberately inconsistent set of estimates.
  const auto t = builtin("xor2");
  auto d = triple_degrees(t, 6, 3);
  d.pi.value = 2;
  const auto r = check_main_identity(t, d);
  EXPECT_EQ(check(r, "product").verdict, Verdict::Fail);
  EXPECT_TRUE(r.failed());
  ASSERT_TRUE(r.archive.contains("triple"));
  EXPECT_TRUE(r.archive.contains("d_pi"));
  EXPECT_EQ(triple_to_json(triple_from_json(r.archive["triple"]).triple), triple_to_json(t));
}

TEST(MainIdentity, GeneratedTriples) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto r = check_main_identity(generate_triple(sweep_spec(seed)), 8, 3);
    EXPECT_EQ(r.count(Verdict::Fail), 0u) << seed << " " << report_to_json(r).dump();
  }
}

TEST(EqualityCases, Examples) {
  const auto relabel = check_equality_cases(builtin("relabel-trivial"), 6, 3);
  EXPECT_EQ(check(relabel, "degree-one").verdict, Verdict::Pass);
  EXPECT_EQ(relabel.d_pi->value, 1u);
  const auto ident = check_equality_cases(builtin("xor2-identity"), 6, 3);
  EXPECT_EQ(check(ident, "finite-to-one-relative").verdict, Verdict::Pass);
  EXPECT_EQ(ident.d_rel->value, 2u);
  const auto x = check_equality_cases(builtin("xor2"), 6, 3);
  EXPECT_EQ(check(x, "degree-one").verdict, Verdict::Skipped);
  EXPECT_EQ(check(x, "finite-to-one-relative").verdict, Verdict::Skipped);
  EXPECT_EQ(x.count(Verdict::Fail), 0u);
}

TEST(ChainIdentity, IdentityOuterCode) {
  const auto t = builtin("xor2");
  const auto r = check_chain_identity(t, OneBlockCode::identity(*t.z()), 6, 3);
  EXPECT_EQ(check(r, "chain").verdict, Verdict::Pass);
  EXPECT_EQ(check(r, "chain-outer").verdict, Verdict::Pass);
}

TEST(ChainIdentity, NeedsZShift) {
  const auto t = builtin("xor2");
  const CodeTriple no_z(t.phi(), t.psi());
  try {
    check_chain_identity(no_z, OneBlockCode::identity(*t.z()), 6, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PreconditionUnmet);
  }
}

TEST(ChainIdentity, GeneratedOuterCodes) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    TripleGenSpec spec = sweep_spec(seed);
    spec.z_symbols = 2;
    const auto t = generate_triple(spec);
    const auto r = check_chain_identity(t, generate_outer_code(*t.z(), seed), 8, 3);
    EXPECT_EQ(r.count(Verdict::Fail), 0u) << seed;
  }
}

TEST(Suite, BuiltinCorpusPasses) {
  SuiteOptions options;
  const auto s = run_suite(builtin_cases(), options);
  EXPECT_TRUE(s.ok());
  EXPECT_EQ(s.fail, 0u);
  EXPECT_EQ(s.inconclusive, 0u);
  EXPECT_EQ(s.reports.size(), builtin_names().size());
}

TEST(Suite, EmptyCorpus) {
  const auto s = run_suite({}, SuiteOptions{});
  EXPECT_TRUE(s.ok());
  EXPECT_TRUE(s.reports.empty());
  EXPECT_EQ(summary_to_json(s)["cases"], 0);
}

TEST(Suite, ParallelRunMatchesSerial) {
  std::vector<TripleGenSpec> specs;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) specs.push_back(sweep_spec(seed));
  const auto cases = generated_cases(specs);
  SuiteOptions serial;
  SuiteOptions parallel;
  parallel.jobs = 4;
  const auto a = run_suite(cases, serial);
  const auto b = run_suite(cases, parallel);
  ASSERT_EQ(a.reports.size(), b.reports.size());
  for (std::size_t i = 0; i < a.reports.size(); ++i)
    EXPECT_EQ(report_to_json(a.reports[i]), report_to_json(b.reports[i]));
}
