#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sftcd/code.hpp"
#include "sftcd/periodic_point.hpp"

namespace sftcd {

/// Absolute routing reroutes preimages of w inside the fiber of w under one
/// code. Relative routing (phi/psi) reroutes phi-preimages of w inside the
/// larger pi-fiber of psi(w).
enum class RoutingMode { Absolute, Relative };

std::string_view to_string(RoutingMode mode);

/// A block v of the witness fiber with v|_1 = source, v|_l = target and
/// v|_n in the routing set.
struct RouteWitness {
  Symbol source = 0;
  Symbol target = 0;
  Block path;
};

/// Certificate that w is presented through `routing_set` at coordinate n.
///
/// Whether a preimage u is routable depends only on its endpoints, so the
/// witness family is stored once per endpoint pair (u|_1, u|_l) occurring in
/// the fiber; witness_for(u) resolves the witness of any preimage u.
struct RoutingCertificate {
  RoutingMode mode = RoutingMode::Absolute;
  Block w;
  /// The word the witnesses map onto: w itself, or psi(w) in relative mode.
  Block witness_word;
  std::size_t n = 0;
  SymbolSet routing_set;
  std::vector<RouteWitness> witnesses;

  const RouteWitness* witness_for(const Block& u) const;
};

/// Either a certificate or a preimage that cannot be rerouted.
struct PresentationResult {
  std::optional<RoutingCertificate> certificate;
  std::optional<Block> unroutable;

  explicit operator bool() const { return certificate.has_value(); }
};

PresentationResult is_presented(const OneBlockCode& code, const Block& w, SymbolSet routing_set, std::size_t n);
PresentationResult relative_is_presented(const CodeTriple& triple, const Block& w, SymbolSet routing_set,
                                         std::size_t n);

/// The lexicographically smallest block v with code(v) = word, v|_1 = source,
/// v|_{|word|} = target and v|_n = via, if there is one.
std::optional<Block> find_route(const OneBlockCode& code, const Block& word, Symbol source, Symbol target,
                                std::size_t n, Symbol via);

struct DepthResult {
  Block w;
  std::size_t value = 0;
  RoutingCertificate certificate;
};

/// Exact minimum of |M| over coordinates n and sets M presenting w. Ties go
/// to the smallest n, then the lexicographically smallest M. Throws
/// EmptyFiber when w has no preimage.
DepthResult depth(const OneBlockCode& code, const Block& w);
DepthResult relative_depth(const CodeTriple& triple, const Block& w);

/// Replays a certificate against the enumerated fiber of its block: every
/// preimage has a witness in the right fiber with matching endpoints and a
/// routing symbol at n.
bool verify_certificate(const OneBlockCode& code, const RoutingCertificate& certificate);
bool verify_certificate(const CodeTriple& triple, const RoutingCertificate& certificate);

/// Running-minimum depth scan. `value` never increases with scanned_length.
struct DegreeEstimate {
  std::size_t value = 0;
  std::size_t scanned_length = 0;
  std::size_t plateau = 0;
  bool stabilized = false;
  Block minimal_block;
  std::vector<std::size_t> history;
  std::optional<DepthResult> minimum;
};

/// Class degree estimate: minimum depth over image blocks of length <= L.
DegreeEstimate class_degree(const OneBlockCode& code, std::size_t max_length, std::size_t plateau);
/// Degree of phi relative to psi: minimum relative depth over Y-blocks.
DegreeEstimate relative_class_degree(const CodeTriple& triple, std::size_t max_length, std::size_t plateau);
/// Relative degree over a periodic point of Y: minimum relative depth over
/// the blocks occurring in it.
DegreeEstimate periodic_point_relative_degree(const CodeTriple& triple, const PeriodicPoint& y,
                                              std::size_t max_length, std::size_t plateau = 3);

}  // namespace sftcd
