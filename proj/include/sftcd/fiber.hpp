#pragma once

#include <cstddef>
#include <vector>

#include "sftcd/code.hpp"

namespace sftcd {

/// Per-coordinate symbol sets of the preimage blocks of w. layers[i - 1] is
/// {u|_i : code(u) = w}; all layers are empty when w has no preimage.
/// Computed by forward filtering followed by backward pruning, so every
/// listed symbol lies on a complete preimage.
std::vector<SymbolSet> fiber_layers(const OneBlockCode& code, const Block& w);

struct FiberSlice {
  Block w;
  std::vector<Block> preimages;
  std::vector<SymbolSet> by_coordinate;
};

/// The exact fiber of w, preimages in lexicographic order. Throws
/// ResourceLimit beyond `cap` preimages.
FiberSlice preimage_blocks(const OneBlockCode& code, const Block& w, std::size_t cap = kDefaultBlockCap);

/// d*(w, i) = |{u|_i : code(u) = w}| for 1 <= i <= |w|.
std::size_t d_star(const OneBlockCode& code, const Block& w, std::size_t i);

/// Codomain blocks of the given length that have a preimage (the image
/// language), in lexicographic order.
std::vector<Block> image_blocks(const OneBlockCode& code, std::size_t length, std::size_t cap = kDefaultBlockCap);

/// history[l - 1] is the running minimum after scanning lengths 1..l. True
/// when the last `plateau` entries agree.
bool plateau_reached(const std::vector<std::size_t>& history, std::size_t plateau);

struct MagicBlockResult {
  Block w;
  std::size_t coordinate = 0;
  std::size_t value = 0;
  std::size_t scanned_length = 0;
  std::size_t plateau = 0;
  bool certified = false;
  std::vector<std::size_t> history;
};

/// Minimizes d*(w, i) over image blocks of length <= max_length. Ties go to
/// the shortest block, then the lexicographically smallest, then the
/// smallest coordinate. The scan stops early once the value is 1.
MagicBlockResult find_magic_block(const OneBlockCode& code, std::size_t max_length, std::size_t plateau);

/// Degree of a finite-to-one code as its magic value. Throws NotFiniteToOne.
std::size_t degree_finite_to_one(const OneBlockCode& code, std::size_t max_length);

}  // namespace sftcd
