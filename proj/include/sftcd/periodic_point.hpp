#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sftcd/alphabet.hpp"
#include "sftcd/vertex_shift.hpp"

namespace sftcd {

/// The bi-infinite repetition of a cycle: x|_i = cycle[(i - 1 + phase) mod p].
/// The cycle is reduced to its primitive root on construction and the phase
/// is reduced modulo the period.
class PeriodicPoint {
 public:
  PeriodicPoint(Block cycle, std::int64_t phase = 0);

  /// Throws InvalidBlock unless the cycle, including its wraparound pair, is
  /// valid in `shift`.
  static PeriodicPoint in(const VertexShift& shift, Block cycle, std::int64_t phase = 0);

  /// Parses "(w)" or "(w)@phase" with `w` in Alphabet::parse syntax.
  static PeriodicPoint parse(const Alphabet& alphabet, std::string_view text);

  const Block& cycle() const noexcept { return cycle_; }
  std::size_t period() const noexcept { return cycle_.size(); }
  std::int64_t phase() const noexcept { return phase_; }

  Symbol at(std::int64_t coordinate) const;
  /// Symbols at coordinates start, ..., start + length - 1.
  Block window(std::int64_t start, std::size_t length) const;

  bool valid_in(const VertexShift& shift) const;

  std::string format(const Alphabet& alphabet) const;

  /// Equality as points of the full shift.
  friend bool operator==(const PeriodicPoint& a, const PeriodicPoint& b) {
    return a.period() == b.period() && a.window(1, a.period()) == b.window(1, b.period());
  }

 private:
  Block cycle_;
  std::int64_t phase_ = 0;
};

/// Distinct length-l windows of the point, sorted. At most period() many.
std::vector<Block> blocks_of_periodic_point(const PeriodicPoint& y, std::size_t length);

/// Every periodic point of `shift` whose least period is at most `max_period`,
/// one entry per point (all phases included), in a deterministic order.
std::vector<PeriodicPoint> periodic_points(const VertexShift& shift, std::size_t max_period);

}  // namespace sftcd
