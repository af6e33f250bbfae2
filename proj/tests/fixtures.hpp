#pragma once

#include <map>
#include <string>
#include <vector>

#include "sftcd/code.hpp"
#include "sftcd/harness.hpp"
#include "sftcd/io.hpp"

namespace fixtures {

using namespace sftcd;

inline VertexShift full2() { return VertexShift::full({"0", "1"}); }

inline VertexShift golden() { return VertexShift({"0", "1"}, {{"0", "0"}, {"0", "1"}, {"1", "0"}}); }

inline SlidingBlockCode xor_rule(std::size_t q) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < q; ++i) names.push_back(std::to_string(i));
  std::map<Block, Symbol> rule;
  for (Symbol a = 0; a < q; ++a)
    for (Symbol b = 0; b < q; ++b) rule[{a, b}] = static_cast<Symbol>((a + b) % q);
  return SlidingBlockCode(VertexShift::full(names), Alphabet(names), 0, 1, rule);
}

/// The 2-block cover of the full 2-shift with phi(ab) = a xor b.
inline OneBlockCode xor2() { return recode_to_one_block(xor_rule(2)).code; }
inline OneBlockCode mod3() { return recode_to_one_block(xor_rule(3)).code; }

inline OneBlockCode trivial(const VertexShift& x, const std::string& z = "z") {
  return OneBlockCode(x, Alphabet({z}), std::vector<Symbol>(x.size(), 0));
}

inline OneBlockCode identity(const VertexShift& x) { return OneBlockCode::identity(x); }

inline CodeTriple builtin(const std::string& name) { return load_triple(name).triple; }

/// a, b -> z and c -> w on {a, b, c}; over z the fiber graph is two loops
/// with a one-way path a -> b.
inline OneBlockCode two_loops() {
  VertexShift x({"a", "b", "c"},
                {{"a", "a"}, {"a", "b"}, {"a", "c"}, {"b", "b"}, {"b", "c"}, {"c", "a"}, {"c", "b"}, {"c", "c"}});
  return OneBlockCode(x, Alphabet({"z", "w"}), {0, 0, 1});
}

/// The directed 2-cycle a <-> b.
inline VertexShift two_cycle() { return VertexShift({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }

inline Block parse(const Alphabet& a, const std::string& text) { return a.parse(text); }

}  // namespace fixtures
