#include "sftcd/code.hpp"

#include <algorithm>
#include <set>

#include "sftcd/error.hpp"

namespace sftcd {

OneBlockCode::OneBlockCode(VertexShift domain, Alphabet codomain, std::vector<Symbol> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (map_.size() != domain_.size())
    throw Error(ErrorKind::InvariantViolation, "code map is not total on the domain alphabet");
  preimage_sets_.assign(codomain_.size(), SymbolSet{});
  for (Symbol a = 0; a < map_.size(); ++a) {
    if (map_[a] >= codomain_.size()) throw Error(ErrorKind::UnknownSymbol, "code image index out of range");
    if (domain_.size() <= SymbolSet::kMaxSymbols) preimage_sets_[map_[a]].insert(a);
  }
}

OneBlockCode OneBlockCode::from_names(VertexShift domain, Alphabet codomain,
                                      const std::map<std::string, std::string>& map) {
  std::vector<Symbol> out(domain.size());
  for (Symbol a = 0; a < domain.size(); ++a) {
    const auto& name = domain.alphabet().name(a);
    auto it = map.find(name);
    if (it == map.end()) throw Error(ErrorKind::InvariantViolation, "code map has no entry for '" + name + "'");
    out[a] = codomain.index(it->second);
  }
  for (const auto& [from, to] : map) {
    (void)to;
    const auto& trimmed = domain.trimmed_symbols();
    if (!domain.alphabet().contains(from) && std::find(trimmed.begin(), trimmed.end(), from) == trimmed.end())
      throw Error(ErrorKind::UnknownSymbol, "code map entry for '" + from + "' outside the domain alphabet");
  }
  return OneBlockCode(std::move(domain), std::move(codomain), std::move(out));
}

OneBlockCode OneBlockCode::identity(const VertexShift& shift) {
  std::vector<Symbol> map(shift.size());
  for (Symbol a = 0; a < shift.size(); ++a) map[a] = a;
  return OneBlockCode(shift, shift.alphabet(), std::move(map));
}

bool OneBlockCode::maps_into(const VertexShift& target) const {
  if (!(target.alphabet() == codomain_)) return false;
  for (const auto& [a, b] : domain_.edges())
    if (!target.allows(map_[a], map_[b])) return false;
  return true;
}

Block apply_to_block(const OneBlockCode& code, const Block& u) {
  if (u.empty() || !validate_block(code.domain(), u))
    throw Error(ErrorKind::InvalidBlock, "block is not valid in the domain");
  Block out(u.size());
  std::transform(u.begin(), u.end(), out.begin(), [&](Symbol s) { return code(s); });
  return out;
}

OneBlockCode compose(const OneBlockCode& first, const OneBlockCode& second) {
  if (!(first.codomain() == second.domain().alphabet()))
    throw Error(ErrorKind::AlphabetMismatch, "codomain of the first code is not the domain of the second");
  std::vector<Symbol> map(first.domain().size());
  for (Symbol a = 0; a < map.size(); ++a) map[a] = second(first(a));
  return OneBlockCode(first.domain(), second.codomain(), std::move(map));
}

// --- sliding block codes --------------------------------------------------

SlidingBlockCode::SlidingBlockCode(VertexShift domain, Alphabet codomain, std::size_t memory,
                                   std::size_t anticipation, std::map<Block, Symbol> rule)
    : domain_(std::move(domain)),
      codomain_(std::move(codomain)),
      memory_(memory),
      anticipation_(anticipation),
      rule_(std::move(rule)) {
  const auto windows = enumerate_blocks(domain_, window_length());
  for (const auto& w : windows)
    if (!rule_.count(w))
      throw Error(ErrorKind::InvariantViolation, "local rule undefined on window " + domain_.alphabet().format(w));
  if (rule_.size() != windows.size())
    throw Error(ErrorKind::InvariantViolation, "local rule defined on a window that is not valid in the domain");
  for (const auto& [w, s] : rule_)
    if (s >= codomain_.size()) throw Error(ErrorKind::UnknownSymbol, "rule image index out of range");
}

Symbol SlidingBlockCode::apply_window(const Block& window) const {
  auto it = rule_.find(window);
  if (it == rule_.end()) throw Error(ErrorKind::InvalidBlock, "window is not valid in the domain");
  return it->second;
}

PeriodicPoint SlidingBlockCode::apply(const PeriodicPoint& x) const {
  Block image(x.period());
  const auto m = static_cast<std::int64_t>(memory_);
  for (std::size_t i = 0; i < x.period(); ++i) {
    const auto coord = 1 + static_cast<std::int64_t>(i);
    image[i] = apply_window(x.window(coord - m, window_length()));
  }
  return PeriodicPoint(std::move(image), 0);
}

PeriodicPoint Recoding::lift(const PeriodicPoint& x) const {
  std::map<Block, Symbol> index;
  for (Symbol s = 0; s < windows.size(); ++s) index.emplace(windows[s], s);
  const std::size_t len = memory + anticipation + 1;
  Block lifted(x.period());
  for (std::size_t i = 0; i < x.period(); ++i) {
    const auto coord = 1 + static_cast<std::int64_t>(i) - static_cast<std::int64_t>(memory);
    auto it = index.find(x.window(coord, len));
    if (it == index.end()) throw Error(ErrorKind::InvalidBlock, "point is not in the recoded domain");
    lifted[i] = it->second;
  }
  return PeriodicPoint(std::move(lifted), 0);
}

Recoding recode_to_one_block(const SlidingBlockCode& code, std::size_t cap) {
  const auto& dom = code.domain();
  const std::size_t len = code.window_length();
  auto windows = enumerate_blocks(dom, len, cap);

  std::vector<std::string> names;
  names.reserve(windows.size());
  std::map<std::string, Block> by_name;
  for (const auto& w : windows) {
    std::vector<std::string> parts;
    for (Symbol s : w) parts.push_back(dom.alphabet().name(s));
    names.push_back(join_symbol_names(parts));
  }

  // Overlap edges: w -> w' when w' continues w by one symbol.
  std::map<Block, std::vector<std::size_t>> by_prefix;
  for (std::size_t j = 0; j < windows.size(); ++j)
    by_prefix[Block(windows[j].begin(), windows[j].end() - 1)].push_back(j);
  std::vector<VertexShift::Pair> pairs;
  for (std::size_t i = 0; i < windows.size(); ++i) {
    auto it = by_prefix.find(Block(windows[i].begin() + 1, windows[i].end()));
    if (it == by_prefix.end()) continue;
    for (std::size_t j : it->second)
      if (dom.allows(windows[i].back(), windows[j].back())) pairs.emplace_back(names[i], names[j]);
  }
  VertexShift shift(names, pairs);
  if (shift.size() != windows.size())
    throw Error(ErrorKind::InvariantViolation, "higher-block presentation lost symbols while trimming");

  std::vector<Symbol> map(windows.size());
  for (std::size_t i = 0; i < windows.size(); ++i) map[i] = code.apply_window(windows[i]);
  OneBlockCode one_block(shift, code.codomain(), std::move(map));
  return Recoding{std::move(shift), std::move(windows), std::move(one_block), code.memory(), code.anticipation()};
}

// --- surjectivity and finiteness -----------------------------------------

OntoResult check_onto(const OneBlockCode& code, const VertexShift& target, std::size_t max_length) {
  if (!(target.alphabet() == code.codomain()))
    throw Error(ErrorKind::AlphabetMismatch, "code codomain alphabet differs from the target shift");
  if (code.domain().size() > SymbolSet::kMaxSymbols)
    throw Error(ErrorKind::ResourceLimit, "domain alphabet larger than " + std::to_string(SymbolSet::kMaxSymbols));

  const auto& dom = code.domain();
  struct State {
    Symbol last;
    SymbolSet ends;
    Block witness;
  };
  std::set<std::pair<Symbol, std::uint64_t>> seen;
  std::vector<State> frontier;
  OntoResult result;

  for (Symbol y = 0; y < target.size(); ++y) {
    const auto ends = code.preimage_symbols(y);
    if (ends.empty()) {
      result.missing = Block{y};
      result.certified = true;
      return result;
    }
    if (seen.emplace(y, ends.bits()).second) frontier.push_back({y, ends, Block{y}});
  }
  result.verified_length = 1;

  while (!frontier.empty() && result.verified_length < max_length) {
    std::vector<State> next;
    for (const auto& st : frontier) {
      SymbolSet reach;
      for (Symbol a : st.ends.members()) reach |= dom.successor_set(a);
      for (Symbol y : target.successors(st.last)) {
        const auto ends = reach & code.preimage_symbols(y);
        Block w = st.witness;
        w.push_back(y);
        if (ends.empty()) {
          result.missing = std::move(w);
          result.certified = true;
          return result;
        }
        if (seen.emplace(y, ends.bits()).second) next.push_back({y, ends, std::move(w)});
      }
    }
    frontier = std::move(next);
    ++result.verified_length;
  }
  result.onto = true;
  result.certified = frontier.empty();
  if (result.certified) result.verified_length = std::max(result.verified_length, max_length);
  return result;
}

bool is_finite_to_one(const OneBlockCode& code) {
  const auto& dom = code.domain();
  const std::size_t n = dom.size();
  auto id = [n](Symbol a, Symbol b) { return a * n + b; };

  // Nodes: ordered pairs with equal images.
  std::vector<std::vector<std::size_t>> succ(n * n), pred(n * n);
  std::vector<bool> node(n * n, false);
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b) node[id(a, b)] = code(a) == code(b);
  for (Symbol a = 0; a < n; ++a) {
    for (Symbol b = 0; b < n; ++b) {
      if (!node[id(a, b)]) continue;
      for (Symbol a2 : dom.successors(a)) {
        for (Symbol b2 : dom.successors(b)) {
          if (code(a2) != code(b2)) continue;
          succ[id(a, b)].push_back(id(a2, b2));
          pred[id(a2, b2)].push_back(id(a, b));
        }
      }
    }
  }

  // Nodes reachable in >= 1 step from the diagonal, and nodes reaching it.
  auto sweep = [&](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> mark(n * n, false);
    std::vector<std::size_t> stack;
    for (Symbol c = 0; c < n; ++c)
      for (auto v : adj[id(c, c)])
        if (!mark[v]) mark[v] = true, stack.push_back(v);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto w : adj[v])
        if (!mark[w]) mark[w] = true, stack.push_back(w);
    }
    return mark;
  };
  const auto from_diag = sweep(succ);
  const auto to_diag = sweep(pred);
  for (Symbol a = 0; a < n; ++a)
    for (Symbol b = 0; b < n; ++b)
      if (a != b && node[id(a, b)] && from_diag[id(a, b)] && to_diag[id(a, b)]) return false;
  return true;
}

// --- triples ---------------------------------------------------------------

CodeTriple::CodeTriple(OneBlockCode phi, OneBlockCode psi, std::optional<VertexShift> z_shift)
    : phi_(std::move(phi)), psi_(std::move(psi)), z_(std::move(z_shift)), pi_(compose(phi_, psi_)) {
  if (!is_irreducible(x())) throw Error(ErrorKind::InvariantViolation, "X is not irreducible");
  if (!is_irreducible(y())) throw Error(ErrorKind::InvariantViolation, "Y is not irreducible");
  if (!phi_.maps_into(y())) throw Error(ErrorKind::InvariantViolation, "phi does not map X into Y");
  constexpr std::size_t kOntoLength = 4096;
  const auto phi_onto = check_onto(phi_, y(), kOntoLength);
  if (!phi_onto.onto) throw Error(ErrorKind::InvariantViolation, "phi not onto");
  if (z_) {
    if (!psi_.maps_into(*z_)) throw Error(ErrorKind::InvariantViolation, "psi does not map Y into Z");
    if (!check_onto(psi_, *z_, kOntoLength).onto) throw Error(ErrorKind::InvariantViolation, "psi not onto");
  }
}

}  // namespace sftcd
