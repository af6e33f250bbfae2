#include "sftcd/vertex_shift.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "sftcd/error.hpp"

namespace sftcd {

VertexShift::VertexShift(const std::vector<std::string>& names, const std::vector<Pair>& allowed) {
  const Alphabet raw(names);
  const std::size_t n = raw.size();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (const auto& [a, b] : allowed) {
    auto& cell = adj[raw.index(a) * n + raw.index(b)];
    if (cell) throw Error(ErrorKind::InvariantViolation, "duplicate allowed pair (" + a + "," + b + ")");
    cell = 1;
  }

  // Iterative trimming of stranded symbols.
  std::vector<bool> alive(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!alive[a]) continue;
      bool out = false, in = false;
      for (std::size_t b = 0; b < n; ++b) {
        if (!alive[b]) continue;
        out = out || adj[a * n + b];
        in = in || adj[b * n + a];
      }
      if (!out || !in) {
        alive[a] = false;
        changed = true;
      }
    }
  }

  std::vector<std::string> kept;
  std::vector<Symbol> new_index(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    if (alive[a]) {
      new_index[a] = static_cast<Symbol>(kept.size());
      kept.push_back(names[a]);
    } else {
      trimmed_.push_back(names[a]);
    }
  }
  if (kept.empty()) throw Error(ErrorKind::InvariantViolation, "shift is empty after trimming stranded symbols");

  alphabet_ = Alphabet(kept);
  const std::size_t m = kept.size();
  adjacency_.assign(m * m, 0);
  successors_.assign(m, {});
  predecessors_.assign(m, {});
  successor_sets_.assign(m, SymbolSet{});
  predecessor_sets_.assign(m, SymbolSet{});
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!alive[a] || !alive[b] || !adj[a * n + b]) continue;
      Symbol na = new_index[a], nb = new_index[b];
      adjacency_[na * m + nb] = 1;
      ++edge_count_;
    }
  }
  for (Symbol a = 0; a < m; ++a) {
    for (Symbol b = 0; b < m; ++b) {
      if (!adjacency_[a * m + b]) continue;
      successors_[a].push_back(b);
      predecessors_[b].push_back(a);
      if (m <= SymbolSet::kMaxSymbols) {
        successor_sets_[a].insert(b);
        predecessor_sets_[b].insert(a);
      }
    }
  }
}

VertexShift VertexShift::full(const std::vector<std::string>& names) {
  std::vector<Pair> pairs;
  for (const auto& a : names)
    for (const auto& b : names) pairs.emplace_back(a, b);
  return VertexShift(names, pairs);
}

std::vector<std::pair<Symbol, Symbol>> VertexShift::edges() const {
  std::vector<std::pair<Symbol, Symbol>> out;
  out.reserve(edge_count_);
  for (Symbol a = 0; a < size(); ++a)
    for (Symbol b : successors_[a]) out.emplace_back(a, b);
  return out;
}

bool validate_block(const VertexShift& shift, const Block& w) {
  for (Symbol s : w)
    if (s >= shift.size()) throw Error(ErrorKind::UnknownSymbol, "symbol index " + std::to_string(s));
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!shift.allows(w[i - 1], w[i])) return false;
  return true;
}

bool validate_block(const VertexShift& shift, const std::vector<std::string>& w) {
  Block b;
  b.reserve(w.size());
  for (const auto& name : w) b.push_back(shift.alphabet().index(name));
  return validate_block(shift, b);
}

std::uint64_t count_blocks(const VertexShift& shift, std::size_t length) {
  if (length == 0) return 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> ways(shift.size(), 1);
  for (std::size_t step = 1; step < length; ++step) {
    std::vector<std::uint64_t> next(shift.size(), 0);
    for (Symbol a = 0; a < shift.size(); ++a) {
      for (Symbol b : shift.successors(a)) {
        next[b] = (kMax - next[b] < ways[a]) ? kMax : next[b] + ways[a];
      }
    }
    ways = std::move(next);
  }
  std::uint64_t total = 0;
  for (auto w : ways) total = (kMax - total < w) ? kMax : total + w;
  return total;
}

std::vector<Block> enumerate_blocks(const VertexShift& shift, std::size_t length, std::size_t cap) {
  if (length == 0) throw Error(ErrorKind::InvalidBlock, "block length must be at least 1");
  const auto total = count_blocks(shift, length);
  if (total > cap)
    throw Error(ErrorKind::ResourceLimit,
                std::to_string(total) + " blocks of length " + std::to_string(length) + " exceed cap " +
                    std::to_string(cap));
  std::vector<Block> out;
  out.reserve(static_cast<std::size_t>(total));
  Block current;
  current.reserve(length);
  auto extend = [&](auto&& self) -> void {
    if (current.size() == length) {
      out.push_back(current);
      return;
    }
    if (current.empty()) {
      for (Symbol a = 0; a < shift.size(); ++a) {
        current.push_back(a);
        self(self);
        current.pop_back();
      }
      return;
    }
    for (Symbol b : shift.successors(current.back())) {
      current.push_back(b);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<Symbol>>& successors,
                                                       std::size_t* component_count) {
  const std::size_t n = successors.size();
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, kUnset), low(n, 0), comp(n, kUnset);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t next_index = 0, next_comp = 0;

  // Iterative Tarjan: frames hold (vertex, next successor position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnset) continue;
    frames.emplace_back(root, 0);
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < successors[v].size()) {
        const std::size_t w = successors[v][pos++];
        if (index[w] == kUnset) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == index[done]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != done);
        ++next_comp;
      }
    }
  }
  if (component_count) *component_count = next_comp;
  return comp;
}

bool is_irreducible(const VertexShift& shift) {
  std::vector<std::vector<Symbol>> succ(shift.size());
  for (Symbol a = 0; a < shift.size(); ++a) succ[a] = shift.successors(a);
  std::size_t count = 0;
  strongly_connected_components(succ, &count);
  return count == 1;
}

}  // namespace sftcd
