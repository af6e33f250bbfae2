#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sftcd/alphabet.hpp"
#include "sftcd/symbol_set.hpp"

namespace sftcd {

inline constexpr std::size_t kDefaultBlockCap = 1'000'000;

/// A 1-step shift of finite type: the bi-infinite walks on a directed graph
/// whose vertices are the symbols. Immutable after construction.
///
/// Construction trims, repeatedly, every symbol without an outgoing or an
/// incoming allowed pair, since such a symbol occurs in no point. The trimmed
/// names are kept for diagnostics.
class VertexShift {
 public:
  using Pair = std::pair<std::string, std::string>;

  VertexShift(const std::vector<std::string>& names, const std::vector<Pair>& allowed);

  /// The full shift over `names`.
  static VertexShift full(const std::vector<std::string>& names);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return alphabet_.size(); }

  bool allows(Symbol a, Symbol b) const { return adjacency_[a * size() + b] != 0; }
  const std::vector<Symbol>& successors(Symbol a) const { return successors_.at(a); }
  const std::vector<Symbol>& predecessors(Symbol a) const { return predecessors_.at(a); }
  /// Only meaningful when size() <= SymbolSet::kMaxSymbols.
  SymbolSet successor_set(Symbol a) const { return successor_sets_.at(a); }
  SymbolSet predecessor_set(Symbol a) const { return predecessor_sets_.at(a); }

  /// Allowed pairs in lexicographic order of (source, target) indices.
  std::vector<std::pair<Symbol, Symbol>> edges() const;
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<std::string>& trimmed_symbols() const noexcept { return trimmed_; }

  friend bool operator==(const VertexShift& a, const VertexShift& b) {
    return a.alphabet_ == b.alphabet_ && a.adjacency_ == b.adjacency_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Symbol>> successors_;
  std::vector<std::vector<Symbol>> predecessors_;
  std::vector<SymbolSet> successor_sets_;
  std::vector<SymbolSet> predecessor_sets_;
  std::vector<std::string> trimmed_;
  std::size_t edge_count_ = 0;
};

/// True iff every adjacent pair of `w` is allowed. Throws UnknownSymbol for an
/// index outside the alphabet.
bool validate_block(const VertexShift& shift, const Block& w);
/// Name-based variant; throws UnknownSymbol for a name outside the alphabet.
bool validate_block(const VertexShift& shift, const std::vector<std::string>& w);

/// Number of valid blocks of length `length`, saturating at UINT64_MAX.
std::uint64_t count_blocks(const VertexShift& shift, std::size_t length);

/// All valid blocks of the given length in lexicographic order of symbol
/// indices. Throws ResourceLimit when there are more than `cap`.
std::vector<Block> enumerate_blocks(const VertexShift& shift, std::size_t length,
                                    std::size_t cap = kDefaultBlockCap);

bool is_irreducible(const VertexShift& shift);

/// Tarjan's algorithm on an adjacency list. Component ids are assigned in
/// the order components are completed (reverse topological order of the
/// condensation).
std::vector<std::size_t> strongly_connected_components(
    const std::vector<std::vector<Symbol>>& successors, std::size_t* component_count = nullptr);

}  // namespace sftcd
