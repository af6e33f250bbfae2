#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "sftcd/alphabet.hpp"

namespace sftcd {

/// Set of symbols of one alphabet, stored as a 64-bit mask. Routing and
/// fiber computations are restricted to alphabets of at most kMaxSymbols.
class SymbolSet {
 public:
  static constexpr std::size_t kMaxSymbols = 64;

  constexpr SymbolSet() = default;
  constexpr explicit SymbolSet(std::uint64_t bits) : bits_(bits) {}

  static SymbolSet single(Symbol s) { return SymbolSet(std::uint64_t{1} << s); }
  static SymbolSet of(const std::vector<Symbol>& symbols) {
    SymbolSet out;
    for (Symbol s : symbols) out.insert(s);
    return out;
  }

  void insert(Symbol s) { bits_ |= std::uint64_t{1} << s; }
  bool contains(Symbol s) const { return (bits_ >> s) & 1U; }
  bool empty() const { return bits_ == 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  std::uint64_t bits() const { return bits_; }

  /// Smallest member; the set must be nonempty.
  Symbol first() const { return static_cast<Symbol>(std::countr_zero(bits_)); }

  std::vector<Symbol> members() const {
    std::vector<Symbol> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Symbol>(std::countr_zero(b)));
    return out;
  }

  SymbolSet operator&(SymbolSet o) const { return SymbolSet(bits_ & o.bits_); }
  SymbolSet operator|(SymbolSet o) const { return SymbolSet(bits_ | o.bits_); }
  SymbolSet& operator&=(SymbolSet o) { bits_ &= o.bits_; return *this; }
  SymbolSet& operator|=(SymbolSet o) { bits_ |= o.bits_; return *this; }
  bool intersects(SymbolSet o) const { return (bits_ & o.bits_) != 0; }
  bool subset_of(SymbolSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend bool operator==(SymbolSet a, SymbolSet b) { return a.bits_ == b.bits_; }
  friend bool operator<(SymbolSet a, SymbolSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace sftcd
