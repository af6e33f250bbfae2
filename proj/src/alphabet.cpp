#include "sftcd/alphabet.hpp"

#include <optional>

#include "sftcd/error.hpp"

namespace sftcd {

namespace {

constexpr std::string_view kMiddleDot = "\xC2\xB7";

bool is_separator_text(std::string_view text) {
  return text.find(kMiddleDot) != std::string_view::npos ||
         text.find_first_of(", \t\n") != std::string_view::npos;
}

std::vector<std::string> split_on_separators(std::string_view text) {
  std::vector<std::string> out;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < text.size();) {
    if (text.substr(i, kMiddleDot.size()) == kMiddleDot) {
      flush();
      i += kMiddleDot.size();
    } else if (text[i] == ',' || text[i] == ' ' || text[i] == '\t' || text[i] == '\n') {
      flush();
      ++i;
    } else {
      current.push_back(text[i]);
      ++i;
    }
  }
  flush();
  return out;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw Error(ErrorKind::InvariantViolation, "alphabet is empty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    const auto& n = names_[i];
    if (n.empty()) throw Error(ErrorKind::InvariantViolation, "empty symbol name");
    if (!index_.emplace(n, static_cast<Symbol>(i)).second)
      throw Error(ErrorKind::InvariantViolation, "duplicate symbol '" + n + "'");
    if (n.size() != 1) single_char_ = false;
  }
}

bool Alphabet::contains(std::string_view name) const { return index_.find(name) != index_.end(); }

Symbol Alphabet::index(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw Error(ErrorKind::UnknownSymbol, "'" + std::string(name) + "'");
  return it->second;
}

std::string Alphabet::format(const Block& block) const {
  std::vector<std::string> parts;
  parts.reserve(block.size());
  for (Symbol s : block) parts.push_back(name(s));
  if (single_char_) {
    std::string out;
    for (const auto& p : parts) out += p;
    return out;
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += kMiddleDot;
    out += parts[i];
  }
  return out;
}

Block Alphabet::parse(std::string_view text) const {
  Block out;
  if (is_separator_text(text)) {
    for (const auto& token : split_on_separators(text)) out.push_back(index(token));
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty block");
    return out;
  }
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty block");

  // parses[i]: number of tokenizations of text[0, i), capped at 2.
  const std::size_t n = text.size();
  std::vector<int> parses(n + 1, 0);
  std::vector<std::optional<Symbol>> last(n + 1);
  parses[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (parses[i] == 0) continue;
    for (Symbol s = 0; s < names_.size(); ++s) {
      const auto& nm = names_[s];
      if (text.substr(i, nm.size()) != nm) continue;
      auto& target = parses[i + nm.size()];
      target = std::min(2, target + parses[i]);
      last[i + nm.size()] = s;
    }
  }
  if (parses[n] == 0) throw Error(ErrorKind::UnknownSymbol, "cannot tokenize '" + std::string(text) + "'");
  if (parses[n] > 1)
    throw Error(ErrorKind::ParseError,
                "ambiguous block '" + std::string(text) + "'; separate symbols with ',' or '\xC2\xB7'");
  for (std::size_t i = n; i > 0;) {
    Symbol s = *last[i];
    out.push_back(s);
    i -= names_[s].size();
  }
  return Block(out.rbegin(), out.rend());
}

std::string join_symbol_names(const std::vector<std::string>& names) {
  bool single = true;
  for (const auto& n : names) single = single && n.size() == 1;
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i && !single) out += kMiddleDot;
    out += names[i];
  }
  return out;
}

}  // namespace sftcd
