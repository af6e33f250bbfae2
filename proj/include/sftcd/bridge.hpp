#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sftcd/code.hpp"
#include "sftcd/depth.hpp"
#include "sftcd/periodic_point.hpp"

namespace sftcd {

/// The point that follows `left` up to coordinate m, then `middle` on the
/// open interval (m, n), then `right` from n on.
struct BridgeWitness {
  PeriodicPoint left;
  PeriodicPoint right;
  std::int64_t m = 0;
  std::int64_t n = 1;
  Block middle;
  RoutingMode mode = RoutingMode::Absolute;
  /// How the bridge was obtained. In relative mode this records the routing
  /// data that makes phi of the bridge psi-equivalent to phi(right), which a
  /// finite replay cannot check.
  std::string provenance;

  Symbol at(std::int64_t coordinate) const;
};

/// Mechanical replay against `image_code` (pi for relative bridges): left,
/// right and the glued point are valid in the domain, left and right have
/// the same image, and the glued point has that image on the middle.
bool verify_bridge(const OneBlockCode& image_code, const BridgeWitness& bridge);

/// Two-way bridge between x and x_prime from a shared routing symbol. The
/// presented block sits at coordinates occurrence .. occurrence + |w| - 1 of
/// phi(x) and phi(x_prime); both windows must be routable through `via` at
/// certificate.n. The middle is v|_1..v|_{n-1} via v'|_{n+1}..v'|_{|w|}.
/// Throws NotRoutable or ImageMismatch.
std::pair<BridgeWitness, BridgeWitness> construct_bridge(const CodeTriple& triple, const PeriodicPoint& x,
                                                         const PeriodicPoint& x_prime, std::int64_t occurrence,
                                                         const RoutingCertificate& certificate, Symbol via);

struct BridgeSearch {
  /// False means only "not found within the window".
  bool found = false;
  std::size_t window = 0;
  std::optional<BridgeWitness> witness;
};

/// Looks for a bridge from x to x_prime at m with n in (m, m + window].
/// Throws ImageMismatch unless both points have the same image.
BridgeSearch bounded_bridge_exists(const OneBlockCode& code, const PeriodicPoint& x, const PeriodicPoint& x_prime,
                                   std::int64_t m, std::size_t window);

std::size_t default_bridge_window(const OneBlockCode& code);

struct FiberComponent {
  std::vector<Symbol> symbols;
  std::size_t period = 1;
};

struct FixedPointClasses {
  Symbol z = 0;
  std::size_t count = 0;
  /// Cyclic strongly connected components of the subgraph over z.
  std::vector<FiberComponent> components;
  /// One periodic preimage of z^inf per class, grouped by component.
  std::vector<PeriodicPoint> representatives;
  std::vector<std::size_t> representative_component;
  /// (i, j): component i reaches component j (i != j).
  std::vector<std::pair<std::size_t, std::size_t>> reaches;
  std::string caveat;
};

/// Transition classes of periodic preimages of the fixed point z^inf. Each
/// cyclic component of period d splits into d classes (one per cyclic
/// phase). Throws NoFixedPoint when z is not fixed in `codomain` (if given)
/// or no preimage of z^inf exists.
FixedPointClasses fixed_point_class_oracle(const OneBlockCode& code, Symbol z,
                                           const VertexShift* codomain = nullptr);

}  // namespace sftcd
