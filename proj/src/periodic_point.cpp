#include "sftcd/periodic_point.hpp"

#include <algorithm>
#include <set>

#include "sftcd/error.hpp"

namespace sftcd {

namespace {

std::size_t primitive_period(const Block& cycle) {
  const std::size_t p = cycle.size();
  for (std::size_t q = 1; q < p; ++q) {
    if (p % q != 0) continue;
    bool repeats = true;
    for (std::size_t i = q; i < p && repeats; ++i) repeats = cycle[i] == cycle[i - q];
    if (repeats) return q;
  }
  return p;
}

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  const auto r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

PeriodicPoint::PeriodicPoint(Block cycle, std::int64_t phase) {
  if (cycle.empty()) throw Error(ErrorKind::InvalidBlock, "periodic point needs a nonempty cycle");
  cycle.resize(primitive_period(cycle));
  cycle_ = std::move(cycle);
  phase_ = positive_mod(phase, static_cast<std::int64_t>(cycle_.size()));
}

PeriodicPoint PeriodicPoint::in(const VertexShift& shift, Block cycle, std::int64_t phase) {
  PeriodicPoint p(std::move(cycle), phase);
  if (!p.valid_in(shift)) throw Error(ErrorKind::InvalidBlock, "cycle is not a point of the shift");
  return p;
}

PeriodicPoint PeriodicPoint::parse(const Alphabet& alphabet, std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open != 0 || close == std::string_view::npos || close < 2)
    throw Error(ErrorKind::ParseError, "periodic point must look like (w) or (w)@k: '" + std::string(text) + "'");
  std::int64_t phase = 0;
  auto rest = text.substr(close + 1);
  if (!rest.empty()) {
    if (rest.front() != '@') throw Error(ErrorKind::ParseError, "trailing text after ')'");
    try {
      phase = std::stoll(std::string(rest.substr(1)));
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad phase '" + std::string(rest) + "'");
    }
  }
  return PeriodicPoint(alphabet.parse(text.substr(1, close - 1)), phase);
}

Symbol PeriodicPoint::at(std::int64_t coordinate) const {
  const auto p = static_cast<std::int64_t>(cycle_.size());
  return cycle_[static_cast<std::size_t>(positive_mod(coordinate - 1 + phase_, p))];
}

Block PeriodicPoint::window(std::int64_t start, std::size_t length) const {
  Block out(length);
  for (std::size_t i = 0; i < length; ++i) out[i] = at(start + static_cast<std::int64_t>(i));
  return out;
}

bool PeriodicPoint::valid_in(const VertexShift& shift) const {
  for (Symbol s : cycle_)
    if (s >= shift.size()) return false;
  for (std::size_t i = 0; i < cycle_.size(); ++i)
    if (!shift.allows(cycle_[i], cycle_[(i + 1) % cycle_.size()])) return false;
  return true;
}

std::string PeriodicPoint::format(const Alphabet& alphabet) const {
  std::string out = "(" + alphabet.format(cycle_) + ")";
  if (phase_ != 0) out += "@" + std::to_string(phase_);
  return out;
}

std::vector<Block> blocks_of_periodic_point(const PeriodicPoint& y, std::size_t length) {
  if (length == 0) throw Error(ErrorKind::InvalidBlock, "block length must be at least 1");
  std::set<Block> seen;
  for (std::size_t s = 0; s < y.period(); ++s) seen.insert(y.window(1 + static_cast<std::int64_t>(s), length));
  return {seen.begin(), seen.end()};
}

std::vector<PeriodicPoint> periodic_points(const VertexShift& shift, std::size_t max_period) {
  std::vector<PeriodicPoint> out;
  for (std::size_t p = 1; p <= max_period; ++p) {
    for (const auto& w : enumerate_blocks(shift, p)) {
      if (!shift.allows(w.back(), w.front())) continue;
      if (primitive_period(w) != p) continue;
      out.emplace_back(w, 0);
    }
  }
  return out;
}

}  // namespace sftcd
