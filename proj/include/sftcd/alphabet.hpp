#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sftcd {

/// Index of a symbol inside its alphabet.
using Symbol = std::uint32_t;

/// A finite word of symbol indices. Coordinates are 1-based in the API
/// (block[i - 1] is the i-th symbol).
using Block = std::vector<Symbol>;

/// Ordered list of distinct, nonempty symbol names. The order fixes iteration
/// and tie-breaking everywhere.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Symbol s) const { return names_.at(s); }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool contains(std::string_view name) const;
  /// Throws UnknownSymbol.
  Symbol index(std::string_view name) const;

  /// True when every symbol name is one character, in which case blocks are
  /// printed without separators.
  bool single_char() const noexcept { return single_char_; }

  /// Human form of a block: "010" for single-character alphabets, otherwise
  /// symbols joined by a middle dot ("00·01·11").
  std::string format(const Block& block) const;

  /// Parses the textual block form. Accepts '·', ',' and whitespace as
  /// separators; without separators the text is tokenized against the
  /// alphabet and must have exactly one parse.
  Block parse(std::string_view text) const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Symbol, std::less<>> index_;
  bool single_char_ = true;
};

/// Joins symbol names the same way Alphabet::format does; used to name
/// window symbols of higher-block presentations.
std::string join_symbol_names(const std::vector<std::string>& names);

}  // namespace sftcd
