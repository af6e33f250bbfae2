#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sftcd/alphabet.hpp"
#include "sftcd/periodic_point.hpp"
#include "sftcd/symbol_set.hpp"
#include "sftcd/vertex_shift.hpp"

namespace sftcd {

/// A 1-block code: a total symbol map from the domain shift's alphabet into a
/// codomain alphabet. Whether it maps into (or onto) a particular codomain
/// shift is checked separately, never assumed.
class OneBlockCode {
 public:
  OneBlockCode(VertexShift domain, Alphabet codomain, std::vector<Symbol> map);

  /// Map given by names. Entries for symbols trimmed from the domain are
  /// ignored; a missing entry for a live symbol is an InvariantViolation.
  static OneBlockCode from_names(VertexShift domain, Alphabet codomain,
                                 const std::map<std::string, std::string>& map);
  static OneBlockCode identity(const VertexShift& shift);

  const VertexShift& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  const std::vector<Symbol>& map() const noexcept { return map_; }
  Symbol operator()(Symbol s) const { return map_[s]; }

  /// Domain symbols sent to `image`.
  SymbolSet preimage_symbols(Symbol image) const { return preimage_sets_.at(image); }

  /// (a,b) allowed in the domain implies (map a, map b) allowed in `target`.
  bool maps_into(const VertexShift& target) const;

 private:
  VertexShift domain_;
  Alphabet codomain_;
  std::vector<Symbol> map_;
  std::vector<SymbolSet> preimage_sets_;
};

/// Symbol-wise image. Throws InvalidBlock when `u` is not valid in the domain.
Block apply_to_block(const OneBlockCode& code, const Block& u);

/// The composite second ∘ first. Throws AlphabetMismatch unless the codomain
/// alphabet of `first` is the alphabet of `second`'s domain.
OneBlockCode compose(const OneBlockCode& first, const OneBlockCode& second);

/// A sliding block code with memory m and anticipation a:
/// phi(x)|_i = rule(x|_{[i-m, i+a]}).
class SlidingBlockCode {
 public:
  SlidingBlockCode(VertexShift domain, Alphabet codomain, std::size_t memory, std::size_t anticipation,
                   std::map<Block, Symbol> rule);

  const VertexShift& domain() const noexcept { return domain_; }
  const Alphabet& codomain() const noexcept { return codomain_; }
  std::size_t memory() const noexcept { return memory_; }
  std::size_t anticipation() const noexcept { return anticipation_; }
  std::size_t window_length() const noexcept { return memory_ + anticipation_ + 1; }
  const std::map<Block, Symbol>& rule() const noexcept { return rule_; }

  Symbol apply_window(const Block& window) const;
  /// Image of a periodic point computed directly from the local rule.
  PeriodicPoint apply(const PeriodicPoint& x) const;

 private:
  VertexShift domain_;
  Alphabet codomain_;
  std::size_t memory_;
  std::size_t anticipation_;
  std::map<Block, Symbol> rule_;
};

/// Higher-block recoding of a sliding block code. `windows[s]` is the domain
/// window that symbol s of `shift` stands for; the conjugacy sends x to the
/// point whose i-th symbol is the window x|_{[i-m, i+a]}.
struct Recoding {
  VertexShift shift;
  std::vector<Block> windows;
  OneBlockCode code;
  std::size_t memory = 0;
  std::size_t anticipation = 0;

  /// Image of a domain point under the conjugacy.
  PeriodicPoint lift(const PeriodicPoint& x) const;
};

Recoding recode_to_one_block(const SlidingBlockCode& code, std::size_t cap = kDefaultBlockCap);

struct OntoResult {
  bool onto = false;
  /// Every codomain block of length <= verified_length has a preimage.
  std::size_t verified_length = 0;
  /// The answer holds for all lengths: either a missing block was found or
  /// the subset states saturated.
  bool certified = false;
  std::optional<Block> missing;
};

/// Checks that every block of `target` of length <= max_length has a
/// preimage, by exploring (last symbol, reachable preimage endpoints) states.
OntoResult check_onto(const OneBlockCode& code, const VertexShift& target, std::size_t max_length);

/// No graph diamond: checked on the ordered pair graph of equal-image symbols.
bool is_finite_to_one(const OneBlockCode& code);

/// X --phi--> Y --psi--> Z with pi = psi ∘ phi. Construction verifies that X
/// and Y are irreducible, phi maps onto Y, psi maps into Z (onto Z when Z is
/// given as a shift). pi is always recomputed.
class CodeTriple {
 public:
  CodeTriple(OneBlockCode phi, OneBlockCode psi, std::optional<VertexShift> z_shift = std::nullopt);

  const VertexShift& x() const noexcept { return phi_.domain(); }
  const VertexShift& y() const noexcept { return psi_.domain(); }
  const Alphabet& z_alphabet() const noexcept { return psi_.codomain(); }
  const std::optional<VertexShift>& z() const noexcept { return z_; }
  const OneBlockCode& phi() const noexcept { return phi_; }
  const OneBlockCode& psi() const noexcept { return psi_; }
  const OneBlockCode& pi() const noexcept { return pi_; }

 private:
  OneBlockCode phi_;
  OneBlockCode psi_;
  std::optional<VertexShift> z_;
  OneBlockCode pi_;
};

}  // namespace sftcd
