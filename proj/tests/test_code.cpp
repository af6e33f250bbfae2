#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sftcd/error.hpp"
#include "sftcd/periodic_point.hpp"

using namespace sftcd;
using namespace fixtures;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::InvariantViolation;
}

}  // namespace

TEST(OneBlockCode, ApplyToBlockExamples) {
  const auto phi = xor2();
  const auto& xa = phi.domain().alphabet();
  EXPECT_EQ(phi.codomain().format(apply_to_block(phi, xa.parse("00·01·11"))), "010");
  const auto id = identity(full2());
  EXPECT_EQ(apply_to_block(id, {0, 1, 1, 0}), (Block{0, 1, 1, 0}));
  const auto t = trivial(full2());
  EXPECT_EQ(t.codomain().format(apply_to_block(t, {0, 1, 1, 0, 1})), "zzzzz");
  EXPECT_EQ(kind_of([&] { apply_to_block(phi, xa.parse("00·11")); }), ErrorKind::InvalidBlock);
}

TEST(OneBlockCode, FromNames) {
  const auto g = golden();
  const auto c = OneBlockCode::from_names(g, Alphabet({"x"}), {{"0", "x"}, {"1", "x"}});
  EXPECT_EQ(c(1), 0u);
  EXPECT_THROW(OneBlockCode::from_names(g, Alphabet({"x"}), {{"0", "x"}}), Error);
  EXPECT_THROW(OneBlockCode::from_names(g, Alphabet({"x"}), {{"0", "x"}, {"1", "y"}}), Error);
}

TEST(Recoding, XorRule) {
  const auto r = recode_to_one_block(xor_rule(2));
  EXPECT_EQ(r.shift.alphabet().names(), (std::vector<std::string>{"00", "01", "10", "11"}));
  EXPECT_EQ(r.shift.edge_count(), 8u);
  const auto& a = r.shift.alphabet();
  for (Symbol s = 0; s < 4; ++s)
    for (Symbol t = 0; t < 4; ++t) EXPECT_EQ(r.shift.allows(s, t), a.name(s)[1] == a.name(t)[0]);
  EXPECT_EQ(r.code(a.index("01")), 1u);
  EXPECT_EQ(r.code(a.index("11")), 0u);
}

TEST(Recoding, OneBlockRuleIsIsomorphic) {
  std::map<Block, Symbol> rule = {{{0}, 1}, {{1}, 0}};
  const auto r = recode_to_one_block(SlidingBlockCode(golden(), Alphabet({"0", "1"}), 0, 0, rule));
  EXPECT_EQ(r.shift.alphabet().names(), golden().alphabet().names());
  EXPECT_EQ(r.shift.edge_count(), golden().edge_count());
  EXPECT_EQ(r.code.map(), (std::vector<Symbol>{1, 0}));
}

TEST(Recoding, GoldenWindowShifts) {
  // m=1, a=0 windows are the three valid 2-blocks; m=1, a=1 gives the five
  // valid 3-blocks.
  std::map<Block, Symbol> rule2, rule3;
  for (const auto& b : enumerate_blocks(golden(), 2)) rule2[b] = b[1];
  for (const auto& b : enumerate_blocks(golden(), 3)) rule3[b] = b[1];
  const auto r2 = recode_to_one_block(SlidingBlockCode(golden(), Alphabet({"0", "1"}), 1, 0, rule2));
  EXPECT_EQ(r2.shift.size(), 3u);
  const auto r3 = recode_to_one_block(SlidingBlockCode(golden(), Alphabet({"0", "1"}), 1, 1, rule3));
  EXPECT_EQ(r3.shift.size(), 5u);
}

TEST(Recoding, RuleMustCoverExactlyTheValidWindows) {
  std::map<Block, Symbol> rule = {{{0, 0}, 0}, {{0, 1}, 0}};
  EXPECT_THROW(SlidingBlockCode(golden(), Alphabet({"0"}), 0, 1, rule), Error);
  rule[{1, 0}] = 0;
  rule[{1, 1}] = 0;
  EXPECT_THROW(SlidingBlockCode(golden(), Alphabet({"0"}), 0, 1, rule), Error);
}

TEST(Recoding, ConjugacyCommutesOnCycles) {
  std::vector<SlidingBlockCode> codes = {xor_rule(2), xor_rule(3)};
  std::map<Block, Symbol> golden_rule;
  for (const auto& b : enumerate_blocks(golden(), 3)) golden_rule[b] = (b[0] + b[2]) % 2;
  codes.emplace_back(golden(), Alphabet({"0", "1"}), 1, 1, golden_rule);
  for (const auto& c : codes) {
    const auto r = recode_to_one_block(c);
    for (const auto& x : periodic_points(c.domain(), 6)) {
      const auto lifted = r.lift(x);
      ASSERT_TRUE(lifted.valid_in(r.shift));
      const auto direct = c.apply(x);
      const auto via = PeriodicPoint(apply_to_block(r.code, lifted.window(1, lifted.period())), 0);
      EXPECT_EQ(direct, via);
    }
  }
}

TEST(Compose, Examples) {
  const auto phi = xor2();
  const auto psi = trivial(full2());
  const auto pi = compose(phi, psi);
  EXPECT_EQ(pi.codomain().names(), std::vector<std::string>{"z"});
  for (Symbol s = 0; s < pi.domain().size(); ++s) EXPECT_EQ(pi(s), 0u);
  EXPECT_EQ(compose(phi, identity(full2())).map(), phi.map());
  const auto swap = OneBlockCode(full2(), Alphabet({"0", "1"}), {1, 0});
  EXPECT_EQ(compose(swap, swap).map(), (std::vector<Symbol>{0, 1}));
  EXPECT_EQ(kind_of([&] { compose(phi, phi); }), ErrorKind::AlphabetMismatch);
}

TEST(Compose, AgreesWithSequentialApplication) {
  const auto phi = mod3();
  const auto psi = OneBlockCode(VertexShift::full({"0", "1", "2"}), Alphabet({"p", "q"}), {0, 1, 1});
  const auto pi = compose(phi, psi);
  for (std::size_t l = 1; l <= 6; ++l)
    for (const auto& u : enumerate_blocks(phi.domain(), l))
      EXPECT_EQ(apply_to_block(pi, u), apply_to_block(psi, apply_to_block(phi, u)));
}

TEST(CheckOnto, Examples) {
  const auto r = check_onto(xor2(), full2(), 4);
  EXPECT_TRUE(r.onto);
  EXPECT_TRUE(r.certified);
  const auto inclusion = identity(golden());
  const auto miss = check_onto(OneBlockCode(golden(), Alphabet({"0", "1"}), {0, 1}), full2(), 8);
  EXPECT_FALSE(miss.onto);
  EXPECT_TRUE(miss.certified);
  EXPECT_EQ(*miss.missing, (Block{1, 1}));
  const auto t = check_onto(trivial(full2()), VertexShift({"z"}, {{"z", "z"}}), 3);
  EXPECT_TRUE(t.onto);
  EXPECT_TRUE(check_onto(inclusion, golden(), 5).onto);
}

TEST(CheckOnto, AgreesWithBlockImages) {
  // Images of blocks up to length 6 against the target language.
  const std::vector<std::pair<OneBlockCode, VertexShift>> cases = {
      {xor2(), full2()},
      {OneBlockCode(golden(), Alphabet({"0", "1"}), {0, 1}), full2()},
      {two_loops(), VertexShift::full({"z", "w"})},
      {OneBlockCode(two_cycle(), Alphabet({"0"}), {0, 0}), VertexShift({"0"}, {{"0", "0"}})},
  };
  for (const auto& [code, target] : cases) {
    bool onto = true;
    for (std::size_t l = 1; l <= 6 && onto; ++l) {
      std::set<Block> images;
      for (const auto& u : enumerate_blocks(code.domain(), l)) images.insert(apply_to_block(code, u));
      onto = images.size() == enumerate_blocks(target, l).size();
    }
    EXPECT_EQ(check_onto(code, target, 6).onto, onto);
  }
}

TEST(FiniteToOne, Examples) {
  EXPECT_TRUE(is_finite_to_one(xor2()));
  EXPECT_FALSE(is_finite_to_one(trivial(full2())));
  EXPECT_TRUE(is_finite_to_one(identity(full2())));
  EXPECT_TRUE(is_finite_to_one(mod3()));
  EXPECT_FALSE(is_finite_to_one(two_loops()));
}

TEST(FiniteToOne, AgreesWithDiamondSearch) {
  // All 2-colourings of small desk domains.
  const std::vector<VertexShift> domains = {full2(), golden(), two_cycle(), VertexShift::full({"a", "b", "c"}),
                                            two_loops().domain(),
                                            VertexShift({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "a"}})};
  for (const auto& x : domains) {
    const std::size_t n = x.size();
    for (unsigned colours = 0; colours < (1u << n); ++colours) {
      std::vector<Symbol> map(n);
      for (std::size_t i = 0; i < n; ++i) map[i] = colours >> i & 1;
      const OneBlockCode c(x, Alphabet({"p", "q"}), map);
      EXPECT_EQ(is_finite_to_one(c), !oracle::has_diamond(c, n * n + 1)) << colours;
    }
  }
}

TEST(CodeTriple, Invariants) {
  const auto t = builtin("xor2");
  for (Symbol s = 0; s < t.x().size(); ++s) EXPECT_EQ(t.pi()(s), t.psi()(t.phi()(s)));
  EXPECT_TRUE(is_irreducible(t.x()));
  EXPECT_TRUE(is_irreducible(t.y()));
  try {
    CodeTriple(OneBlockCode(golden(), Alphabet({"0", "1"}), {0, 1}), identity(full2()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvariantViolation);
    EXPECT_NE(std::string(e.what()).find("phi not onto"), std::string::npos);
  }
  const VertexShift loops({"a", "b"}, {{"a", "a"}, {"b", "b"}});
  EXPECT_THROW(CodeTriple(trivial(loops), identity(VertexShift({"z"}, {{"z", "z"}}))), Error);
  EXPECT_NO_THROW(CodeTriple(two_loops(), identity(VertexShift::full({"z", "w"}))));
}
