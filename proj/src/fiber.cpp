#include "sftcd/fiber.hpp"

#include "sftcd/error.hpp"

namespace sftcd {

namespace {

void require_small_domain(const OneBlockCode& code) {
  if (code.domain().size() > SymbolSet::kMaxSymbols)
    throw Error(ErrorKind::ResourceLimit,
                "fiber computations support at most " + std::to_string(SymbolSet::kMaxSymbols) + " domain symbols");
}

void require_codomain_block(const OneBlockCode& code, const Block& w) {
  if (w.empty()) throw Error(ErrorKind::InvalidBlock, "empty block");
  for (Symbol s : w)
    if (s >= code.codomain().size()) throw Error(ErrorKind::UnknownSymbol, "codomain symbol index out of range");
}

SymbolSet successors_of(const VertexShift& shift, SymbolSet from) {
  SymbolSet out;
  for (Symbol a : from.members()) out |= shift.successor_set(a);
  return out;
}

SymbolSet predecessors_of(const VertexShift& shift, SymbolSet from) {
  SymbolSet out;
  for (Symbol a : from.members()) out |= shift.predecessor_set(a);
  return out;
}

}  // namespace

std::vector<SymbolSet> fiber_layers(const OneBlockCode& code, const Block& w) {
  require_small_domain(code);
  require_codomain_block(code, w);
  const auto& dom = code.domain();
  std::vector<SymbolSet> layers(w.size());
  layers[0] = code.preimage_symbols(w[0]);
  for (std::size_t i = 1; i < w.size(); ++i)
    layers[i] = successors_of(dom, layers[i - 1]) & code.preimage_symbols(w[i]);
  if (layers.back().empty()) return std::vector<SymbolSet>(w.size());
  for (std::size_t i = w.size() - 1; i > 0; --i) layers[i - 1] &= predecessors_of(dom, layers[i]);
  return layers;
}

FiberSlice preimage_blocks(const OneBlockCode& code, const Block& w, std::size_t cap) {
  FiberSlice slice{w, {}, fiber_layers(code, w)};
  if (slice.by_coordinate.front().empty()) return slice;
  const auto& dom = code.domain();
  Block current;
  current.reserve(w.size());
  auto extend = [&](auto&& self) -> void {
    if (current.size() == w.size()) {
      if (slice.preimages.size() == cap)
        throw Error(ErrorKind::ResourceLimit, "fiber exceeds cap " + std::to_string(cap));
      slice.preimages.push_back(current);
      return;
    }
    auto options = slice.by_coordinate[current.size()];
    if (!current.empty()) options &= dom.successor_set(current.back());
    for (Symbol s : options.members()) {
      current.push_back(s);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return slice;
}

std::size_t d_star(const OneBlockCode& code, const Block& w, std::size_t i) {
  if (i < 1 || i > w.size()) throw Error(ErrorKind::InvalidBlock, "coordinate out of range");
  return fiber_layers(code, w)[i - 1].size();
}

std::vector<Block> image_blocks(const OneBlockCode& code, std::size_t length, std::size_t cap) {
  require_small_domain(code);
  if (length == 0) throw Error(ErrorKind::InvalidBlock, "block length must be at least 1");
  const auto& dom = code.domain();
  std::vector<Block> out;
  Block current;
  auto extend = [&](auto&& self, SymbolSet reach) -> void {
    if (current.size() == length) {
      if (out.size() == cap) throw Error(ErrorKind::ResourceLimit, "image blocks exceed cap " + std::to_string(cap));
      out.push_back(current);
      return;
    }
    for (Symbol c = 0; c < code.codomain().size(); ++c) {
      const auto next = (current.empty() ? SymbolSet(~std::uint64_t{0}) : reach) & code.preimage_symbols(c);
      if (next.empty()) continue;
      current.push_back(c);
      self(self, successors_of(dom, next));
      current.pop_back();
    }
  };
  extend(extend, SymbolSet{});
  return out;
}

bool plateau_reached(const std::vector<std::size_t>& history, std::size_t plateau) {
  if (plateau <= 1) return !history.empty();
  if (history.size() < plateau) return false;
  return history[history.size() - plateau] == history.back();
}

MagicBlockResult find_magic_block(const OneBlockCode& code, std::size_t max_length, std::size_t plateau) {
  if (max_length < 1) throw Error(ErrorKind::InvalidBlock, "max length must be at least 1");
  MagicBlockResult best;
  best.plateau = plateau;
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (const auto& w : image_blocks(code, len)) {
      const auto layers = fiber_layers(code, w);
      for (std::size_t i = 0; i < len; ++i) {
        const auto v = layers[i].size();
        if (best.value == 0 || v < best.value) {
          best.value = v;
          best.w = w;
          best.coordinate = i + 1;
        }
      }
    }
    best.history.push_back(best.value);
    best.scanned_length = len;
    if (best.value == 1) break;
  }
  best.certified = best.value == 1 || plateau_reached(best.history, plateau);
  return best;
}

std::size_t degree_finite_to_one(const OneBlockCode& code, std::size_t max_length) {
  if (!is_finite_to_one(code)) throw Error(ErrorKind::NotFiniteToOne, "code has a graph diamond");
  return find_magic_block(code, max_length, 1).value;
}

}  // namespace sftcd
