#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "sftcd/depth.hpp"
#include "sftcd/error.hpp"
#include "sftcd/fiber.hpp"

using namespace sftcd;
using namespace fixtures;

namespace {

OneBlockCode trivial_cover() { return trivial(xor2().domain()); }

SymbolSet set_of(const Alphabet& a, std::initializer_list<const char*> names) {
  SymbolSet s;
  for (const char* n : names) s.insert(a.index(n));
  return s;
}

/// Y-blocks of the triple up to length l.
std::vector<Block> y_blocks(const CodeTriple& t, std::size_t l) {
  std::vector<Block> out;
  for (std::size_t k = 1; k <= l; ++k)
    for (auto& b : enumerate_blocks(t.y(), k)) out.push_back(std::move(b));
  return out;
}

}  // namespace

TEST(IsPresented, Examples) {
  const auto phi = xor2();
  const auto& xa = phi.domain().alphabet();
  const auto refused = is_presented(phi, {0, 0, 0}, set_of(xa, {"00"}), 2);
  EXPECT_FALSE(refused);
  ASSERT_TRUE(refused.unroutable);
  EXPECT_EQ(xa.format(*refused.unroutable), "11·11·11");
  const auto both = is_presented(phi, {0, 0, 0}, set_of(xa, {"00", "11"}), 2);
  ASSERT_TRUE(both);
  EXPECT_TRUE(verify_certificate(phi, *both.certificate));
  for (const auto& u : preimage_blocks(phi, {0, 0, 0}).preimages) EXPECT_EQ(both.certificate->witness_for(u)->path, u);
  const auto id = identity(golden());
  for (std::size_t n = 1; n <= 3; ++n) {
    const Block w = {0, 1, 0};
    EXPECT_TRUE(is_presented(id, w, SymbolSet::single(w[n - 1]), n));
  }
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth(xor2(), {0, 0, 0}).value, 2u);
  EXPECT_EQ(depth(identity(golden()), {0, 1, 0, 0}).value, 1u);
  const auto c = trivial_cover();
  const auto r = depth(c, Block(5, 0));
  EXPECT_EQ(r.value, 1u);
  EXPECT_EQ(r.certificate.n, 3u);
  EXPECT_EQ(r.certificate.routing_set, set_of(c.domain().alphabet(), {"00"}));
  EXPECT_TRUE(verify_certificate(c, r.certificate));
  EXPECT_EQ(depth(c, Block(3, 0)).value, 4u);
}

TEST(Depth, EmptyFiber) {
  const auto inclusion = OneBlockCode(golden(), Alphabet({"0", "1"}), {0, 1});
  try {
    depth(inclusion, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyFiber);
  }
}

TEST(Depth, MatchesSubsetOracle) {
  for (const auto& c : {xor2(), two_loops(), trivial_cover(), trivial(golden()), trivial(two_cycle())}) {
    for (std::size_t l = 1; l <= 5; ++l) {
      for (const auto& w : image_blocks(c, l)) {
        const auto r = depth(c, w);
        EXPECT_EQ(r.value, oracle::depth(c, w)) << c.codomain().format(w);
        EXPECT_EQ(r.certificate.routing_set.size(), r.value);
        EXPECT_TRUE(verify_certificate(c, r.certificate));
      }
    }
  }
}

TEST(Depth, CertificatesRejectTampering) {
  const auto c = trivial_cover();
  auto cert = depth(c, Block(5, 0)).certificate;
  ASSERT_TRUE(verify_certificate(c, cert));
  auto shrunk = cert;
  shrunk.witnesses.pop_back();
  EXPECT_FALSE(verify_certificate(c, shrunk));
  auto moved = cert;
  moved.n = 1;
  EXPECT_FALSE(verify_certificate(c, moved));
}

TEST(RelativePresented, Examples) {
  const auto t = builtin("xor2");
  const auto& xa = t.x().alphabet();
  EXPECT_TRUE(relative_is_presented(t, Block(5, 0), set_of(xa, {"00"}), 3));
  const auto refused = relative_is_presented(t, {0, 0}, set_of(xa, {"00"}), 1);
  ASSERT_FALSE(refused);
  EXPECT_EQ(xa.format(*refused.unroutable), "11·11");
}

TEST(RelativePresented, IdentityPsiCoincidesWithAbsolute) {
  const auto t = builtin("xor2-identity");
  const auto& xa = t.x().alphabet();
  for (std::size_t l = 1; l <= 4; ++l)
    for (const auto& w : enumerate_blocks(t.y(), l))
      for (std::uint64_t mask = 1; mask < 16; ++mask)
        for (std::size_t n = 1; n <= l; ++n) {
          SymbolSet m;
          for (Symbol s = 0; s < xa.size(); ++s)
            if (mask >> s & 1) m.insert(s);
          EXPECT_EQ(static_cast<bool>(relative_is_presented(t, w, m, n)),
                    static_cast<bool>(is_presented(t.phi(), w, m, n)));
        }
}

TEST(RelativeDepth, Examples) {
  const auto t = builtin("xor2");
  EXPECT_EQ(relative_depth(t, Block(5, 0)).value, 1u);
  EXPECT_EQ(relative_depth(t, {0}).value, 2u);
  const auto ti = builtin("xor2-identity");
  for (std::size_t l = 1; l <= 4; ++l)
    for (const auto& w : enumerate_blocks(ti.y(), l)) EXPECT_EQ(relative_depth(ti, w).value, depth(ti.phi(), w).value);
}

TEST(RelativeDepth, MatchesSubsetOracle) {
  for (const char* name : {"xor2", "two-loops", "golden-trivial", "relabel-trivial"}) {
    const auto t = builtin(name);
    for (const auto& w : y_blocks(t, 4)) {
      const auto r = relative_depth(t, w);
      EXPECT_EQ(r.value, oracle::relative_depth(t.phi(), t.psi(), w)) << name;
      EXPECT_EQ(r.certificate.mode, RoutingMode::Relative);
      EXPECT_TRUE(verify_certificate(t, r.certificate));
    }
  }
}

TEST(RelativeDepth, InvalidBlock) {
  const auto t = builtin("golden-trivial");
  EXPECT_THROW(relative_depth(t, {1, 1}), Error);
}

TEST(FindRoute, LexSmallestPath) {
  const auto c = trivial_cover();
  const auto& a = c.domain().alphabet();
  const auto path = find_route(c, Block(5, 0), a.index("11"), a.index("11"), 3, a.index("00"));
  ASSERT_TRUE(path);
  EXPECT_EQ(a.format(*path), "11·10·00·01·11");
  EXPECT_FALSE(find_route(xor2(), Block(3, 0), 0, 3, 2, 0));
}

TEST(ClassDegree, Examples) {
  const auto x = class_degree(xor2(), 5, 3);
  EXPECT_EQ(x.value, 2u);
  EXPECT_TRUE(x.stabilized);
  EXPECT_EQ(class_degree(identity(full2()), 2, 3).value, 1u);
  const auto t = class_degree(trivial_cover(), 5, 3);
  EXPECT_EQ(t.value, 1u);
  EXPECT_TRUE(t.stabilized);
  EXPECT_EQ(t.minimal_block, Block(5, 0));
}

TEST(ClassDegree, NonIncreasingAndAtLeastOne) {
  for (const auto& c : {xor2(), mod3(), two_loops(), trivial_cover(), trivial(two_cycle())}) {
    std::size_t prev = 1000;
    for (std::size_t l = 1; l <= 6; ++l) {
      const auto e = class_degree(c, l, 3);
      EXPECT_GE(e.value, 1u);
      EXPECT_LE(e.value, prev);
      prev = e.value;
      for (std::size_t i = 1; i < e.history.size(); ++i) EXPECT_LE(e.history[i], e.history[i - 1]);
    }
  }
}

TEST(ClassDegree, PeriodicTrivialCode) {
  // Period-2 domain: both phases must be routed separately.
  const auto e = class_degree(trivial(two_cycle()), 6, 3);
  EXPECT_EQ(e.value, 2u);
  EXPECT_TRUE(e.stabilized);
}

TEST(ClassDegree, FiniteToOneAgreesWithDegree) {
  EXPECT_EQ(class_degree(xor2(), 6, 3).value, degree_finite_to_one(xor2(), 6));
  EXPECT_EQ(class_degree(mod3(), 6, 3).value, degree_finite_to_one(mod3(), 6));
  EXPECT_EQ(class_degree(mod3(), 6, 3).value, 3u);
}

TEST(RelativeClassDegree, Examples) {
  EXPECT_EQ(relative_class_degree(builtin("xor2"), 5, 3).value, 1u);
  const auto ti = builtin("xor2-identity");
  EXPECT_EQ(relative_class_degree(ti, 5, 3).value, class_degree(ti.phi(), 5, 3).value);
  const auto id = builtin("golden-trivial");
  EXPECT_EQ(relative_class_degree(id, 5, 3).value, 1u);
}

TEST(PeriodicPointDegree, Examples) {
  const auto t = builtin("xor2");
  EXPECT_EQ(periodic_point_relative_degree(t, PeriodicPoint({0}), 5).value, 1u);
  const auto chain = builtin("identity-chain");
  EXPECT_EQ(periodic_point_relative_degree(chain, PeriodicPoint({0, 1}), 5).value, 1u);
  const auto ti = builtin("xor2-identity");
  EXPECT_EQ(periodic_point_relative_degree(ti, PeriodicPoint({0}), 5).value, 2u);
  EXPECT_THROW(periodic_point_relative_degree(chain, PeriodicPoint({1}), 5), Error);
}

TEST(DepthProperties, MonotoneUnderExtension) {
  for (const char* name : {"xor2", "two-loops", "mod3", "golden-trivial"}) {
    const auto t = builtin(name);
    for (std::size_t l = 1; l <= 4; ++l) {
      for (const auto& w : enumerate_blocks(t.y(), l)) {
        const auto d = depth(t.phi(), w).value;
        const auto rd = relative_depth(t, w).value;
        for (const auto& e : enumerate_blocks(t.y(), l + 1)) {
          const bool right = std::equal(w.begin(), w.end(), e.begin());
          const bool left = std::equal(w.begin(), w.end(), e.begin() + 1);
          if (!right && !left) continue;
          EXPECT_LE(depth(t.phi(), e).value, d);
          EXPECT_LE(relative_depth(t, e).value, rd);
        }
      }
    }
  }
}

TEST(DepthProperties, RelativeAtMostAbsolute) {
  for (const char* name : {"xor2", "two-loops", "mod3", "golden-trivial", "relabel-trivial"}) {
    const auto t = builtin(name);
    for (const auto& w : y_blocks(t, 5)) EXPECT_LE(relative_depth(t, w).value, depth(t.phi(), w).value);
  }
}
