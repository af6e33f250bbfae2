#include "sftcd/depth.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "sftcd/error.hpp"
#include "sftcd/fiber.hpp"

namespace sftcd {

std::string_view to_string(RoutingMode mode) {
  return mode == RoutingMode::Absolute ? "absolute" : "relative";
}

const RouteWitness* RoutingCertificate::witness_for(const Block& u) const {
  if (u.empty()) return nullptr;
  for (const auto& wit : witnesses)
    if (wit.source == u.front() && wit.target == u.back()) return &wit;
  return nullptr;
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

SymbolSet step_forward(const VertexShift& shift, SymbolSet from) {
  SymbolSet out;
  for (Symbol a : from.members()) out |= shift.successor_set(a);
  return out;
}

SymbolSet step_backward(const VertexShift& shift, SymbolSet from) {
  SymbolSet out;
  for (Symbol a : from.members()) out |= shift.predecessor_set(a);
  return out;
}

// The lexicographically smallest path a = p_i0 ... p_i1 = b in the layered
// graph whose coordinate-i symbols lie in allowed[i] (0-based coordinates).
// Returns the symbols at i0..i1, or nothing if no path exists.
std::optional<Block> layered_path(const VertexShift& shift, const std::vector<SymbolSet>& allowed, std::size_t i0,
                                  Symbol a, std::size_t i1, Symbol b) {
  if (!allowed[i0].contains(a) || !allowed[i1].contains(b)) return std::nullopt;
  // back[i]: symbols at coordinate i that reach b at i1.
  std::vector<SymbolSet> back(i1 + 1);
  back[i1] = SymbolSet::single(b);
  for (std::size_t i = i1; i > i0; --i) back[i - 1] = step_backward(shift, back[i]) & allowed[i - 1];
  if (!back[i0].contains(a)) return std::nullopt;
  Block path{a};
  for (std::size_t i = i0 + 1; i <= i1; ++i) path.push_back((shift.successor_set(path.back()) & back[i]).first());
  return path;
}

// Everything needed to answer routing questions about one block w.
class RoutingProblem {
 public:
  RoutingProblem(RoutingMode mode, const OneBlockCode& fiber_code, const OneBlockCode& witness_code, Block w,
                 Block witness_word)
      : mode_(mode),
        fiber_domain_(fiber_code.domain()),
        witness_code_(witness_code),
        w_(std::move(w)),
        witness_word_(std::move(witness_word)),
        l_(w_.size()) {
    fiber_layers_ = fiber_layers(fiber_code, w_);
    const auto& dom = fiber_code.domain();
    for (std::size_t i = 0; i < l_; ++i) allowed_.push_back(witness_code_.preimage_symbols(witness_word_[i]));
    if (fiber_layers_.front().empty()) return;

    // Endpoint pairs of the fiber: t is reachable from s through the fiber.
    for (Symbol s : fiber_layers_.front().members()) {
      SymbolSet reach = SymbolSet::single(s);
      for (std::size_t i = 1; i < l_; ++i) reach = step_forward(dom, reach) & fiber_layers_[i];
      for (Symbol t : reach.members()) pairs_.emplace_back(s, t);
    }

    const auto& wdom = witness_code_.domain();
    for (Symbol s : fiber_layers_.front().members()) {
      auto& fw = forward_[s];
      fw.resize(l_);
      fw[0] = SymbolSet::single(s) & allowed_[0];
      for (std::size_t i = 1; i < l_; ++i) fw[i] = step_forward(wdom, fw[i - 1]) & allowed_[i];
    }
    for (Symbol t : fiber_layers_.back().members()) {
      auto& bw = backward_[t];
      bw.resize(l_);
      bw[l_ - 1] = SymbolSet::single(t) & allowed_[l_ - 1];
      for (std::size_t i = l_ - 1; i > 0; --i) bw[i - 1] = step_backward(wdom, bw[i]) & allowed_[i - 1];
    }
  }

  bool empty_fiber() const { return pairs_.empty(); }
  const std::vector<std::pair<Symbol, Symbol>>& pairs() const { return pairs_; }

  // Symbols v|_n over witnesses v with v|_1 = s, v|_l = t (n is 1-based).
  SymbolSet routes(Symbol s, Symbol t, std::size_t n) const {
    return forward_.at(s)[n - 1] & backward_.at(t)[n - 1];
  }

  PresentationResult present(SymbolSet routing_set, std::size_t n) const {
    if (n < 1 || n > l_) throw Error(ErrorKind::InvalidBlock, "coordinate n out of range");
    PresentationResult out;
    RoutingCertificate cert{mode_, w_, witness_word_, n, routing_set, {}};
    for (const auto& [s, t] : pairs_) {
      const auto through = routes(s, t, n) & routing_set;
      if (through.empty()) {
        out.unroutable = fiber_path(s, t);
        return out;
      }
      cert.witnesses.push_back({s, t, witness_path(s, t, n, through.first())});
    }
    out.certificate = std::move(cert);
    return out;
  }

  // Smallest presenting set with fewer than `bound` symbols, if any.
  std::optional<DepthResult> minimize(std::size_t bound) const {
    if (pairs_.empty()) throw Error(ErrorKind::EmptyFiber, "block has no preimage");
    std::optional<std::pair<std::size_t, SymbolSet>> best;  // (n, M)
    for (std::size_t n = 1; n <= l_; ++n) {
      const std::size_t limit = best ? best->second.size() : bound;
      if (limit <= 1) break;
      if (auto m = hitting_set(n, limit - 1)) best.emplace(n, *m);
    }
    if (!best) return std::nullopt;
    auto presented = present(best->second, best->first);
    return DepthResult{w_, best->second.size(), std::move(*presented.certificate)};
  }

 private:
  // Lexicographically first set of at most max_size symbols meeting every
  // route set at n, searched by increasing size.
  std::optional<SymbolSet> hitting_set(std::size_t n, std::size_t max_size) const {
    std::vector<SymbolSet> sets;
    SymbolSet universe;
    for (const auto& [s, t] : pairs_) {
      const auto r = routes(s, t, n);
      sets.push_back(r);
      universe |= r;
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    // Drop supersets of other route sets: hitting the subset hits them too.
    std::vector<SymbolSet> minimal;
    for (const auto& a : sets) {
      bool redundant = false;
      for (const auto& b : sets) redundant = redundant || (!(a == b) && b.subset_of(a));
      if (!redundant) minimal.push_back(a);
    }

    const auto candidates = universe.members();
    const std::size_t k_max = std::min(max_size, candidates.size());
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= k_max; ++k) {
      pick.resize(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        SymbolSet m;
        for (auto i : pick) m.insert(candidates[i]);
        bool hits = true;
        for (const auto& r : minimal) hits = hits && r.intersects(m);
        if (hits) return m;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == candidates.size() - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return std::nullopt;
  }

  Block witness_path(Symbol s, Symbol t, std::size_t n, Symbol via) const {
    const auto& shift = witness_code_.domain();
    auto head = layered_path(shift, allowed_, 0, s, n - 1, via);
    auto tail = layered_path(shift, allowed_, n - 1, via, l_ - 1, t);
    Block path = *head;
    path.insert(path.end(), tail->begin() + 1, tail->end());
    return path;
  }

  Block fiber_path(Symbol s, Symbol t) const {
    // The fiber layers are pruned, so the smallest path exists.
    return *layered_path(fiber_domain_, fiber_layers_, 0, s, l_ - 1, t);
  }

  RoutingMode mode_;
  const VertexShift& fiber_domain_;
  const OneBlockCode& witness_code_;
  Block w_;
  Block witness_word_;
  std::size_t l_;
  std::vector<SymbolSet> fiber_layers_;
  std::vector<SymbolSet> allowed_;
  std::vector<std::pair<Symbol, Symbol>> pairs_;
  std::map<Symbol, std::vector<SymbolSet>> forward_;
  std::map<Symbol, std::vector<SymbolSet>> backward_;
};

RoutingProblem absolute_problem(const OneBlockCode& code, const Block& w) {
  return RoutingProblem(RoutingMode::Absolute, code, code, w, w);
}

RoutingProblem relative_problem(const CodeTriple& triple, const Block& w) {
  if (!validate_block(triple.y(), w)) throw Error(ErrorKind::InvalidBlock, "block is not valid in Y");
  return RoutingProblem(RoutingMode::Relative, triple.phi(), triple.pi(), w, apply_to_block(triple.psi(), w));
}

bool replay(const OneBlockCode& fiber_code, const OneBlockCode& witness_code, const RoutingCertificate& cert) {
  if (cert.n < 1 || cert.n > cert.w.size() || cert.witness_word.size() != cert.w.size()) return false;
  const auto fiber = preimage_blocks(fiber_code, cert.w);
  if (fiber.preimages.empty()) return false;
  for (const auto& u : fiber.preimages) {
    const auto* wit = cert.witness_for(u);
    if (!wit) return false;
    const auto& v = wit->path;
    if (v.size() != u.size() || v.front() != u.front() || v.back() != u.back()) return false;
    if (!cert.routing_set.contains(v[cert.n - 1])) return false;
    if (!validate_block(witness_code.domain(), v)) return false;
    if (apply_to_block(witness_code, v) != cert.witness_word) return false;
  }
  return true;
}

template <class BlocksOfLength, class MakeProblem>
DegreeEstimate scan(std::size_t max_length, std::size_t plateau, BlocksOfLength&& blocks_of_length,
                    MakeProblem&& make_problem) {
  DegreeEstimate est;
  est.plateau = plateau;
  for (std::size_t len = 1; len <= max_length && est.value != 1; ++len) {
    // Lengths are enumerated lazily so reaching value 1 skips the rest.
    for (const auto& w : blocks_of_length(len)) {
      const auto problem = make_problem(w);
      if (problem.empty_fiber()) continue;
      if (auto r = problem.minimize(est.minimum ? est.value : kUnbounded)) {
        est.value = r->value;
        est.minimal_block = w;
        est.minimum = std::move(*r);
      }
      if (est.value == 1) break;
    }
    est.history.push_back(est.value);
    est.scanned_length = len;
  }
  est.stabilized = est.value == 1 || plateau_reached(est.history, plateau);
  return est;
}

}  // namespace

PresentationResult is_presented(const OneBlockCode& code, const Block& w, SymbolSet routing_set, std::size_t n) {
  return absolute_problem(code, w).present(routing_set, n);
}

PresentationResult relative_is_presented(const CodeTriple& triple, const Block& w, SymbolSet routing_set,
                                         std::size_t n) {
  const auto problem = relative_problem(triple, w);
  if (problem.empty_fiber()) throw Error(ErrorKind::EmptyFiber, "block has no phi-preimage");
  return problem.present(routing_set, n);
}

std::optional<Block> find_route(const OneBlockCode& code, const Block& word, Symbol source, Symbol target,
                                std::size_t n, Symbol via) {
  if (word.empty() || n < 1 || n > word.size()) throw Error(ErrorKind::InvalidBlock, "coordinate n out of range");
  if (code.domain().size() > SymbolSet::kMaxSymbols)
    throw Error(ErrorKind::ResourceLimit, "routing supports at most 64 domain symbols");
  std::vector<SymbolSet> allowed;
  for (Symbol c : word) allowed.push_back(code.preimage_symbols(c));
  auto head = layered_path(code.domain(), allowed, 0, source, n - 1, via);
  if (!head) return std::nullopt;
  auto tail = layered_path(code.domain(), allowed, n - 1, via, word.size() - 1, target);
  if (!tail) return std::nullopt;
  head->insert(head->end(), tail->begin() + 1, tail->end());
  return head;
}

DepthResult depth(const OneBlockCode& code, const Block& w) {
  return *absolute_problem(code, w).minimize(kUnbounded);
}

DepthResult relative_depth(const CodeTriple& triple, const Block& w) {
  return *relative_problem(triple, w).minimize(kUnbounded);
}

bool verify_certificate(const OneBlockCode& code, const RoutingCertificate& certificate) {
  return certificate.mode == RoutingMode::Absolute && replay(code, code, certificate);
}

bool verify_certificate(const CodeTriple& triple, const RoutingCertificate& certificate) {
  if (certificate.mode == RoutingMode::Absolute) return replay(triple.phi(), triple.phi(), certificate);
  if (apply_to_block(triple.psi(), certificate.w) != certificate.witness_word) return false;
  return replay(triple.phi(), triple.pi(), certificate);
}

DegreeEstimate class_degree(const OneBlockCode& code, std::size_t max_length, std::size_t plateau) {
  return scan(
      max_length, plateau, [&](std::size_t len) { return image_blocks(code, len); },
      [&](const Block& w) { return absolute_problem(code, w); });
}

DegreeEstimate relative_class_degree(const CodeTriple& triple, std::size_t max_length, std::size_t plateau) {
  return scan(
      max_length, plateau, [&](std::size_t len) { return enumerate_blocks(triple.y(), len); },
      [&](const Block& w) { return relative_problem(triple, w); });
}

DegreeEstimate periodic_point_relative_degree(const CodeTriple& triple, const PeriodicPoint& y,
                                              std::size_t max_length, std::size_t plateau) {
  if (!y.valid_in(triple.y())) throw Error(ErrorKind::InvalidBlock, "periodic point is not a point of Y");
  return scan(
      max_length, plateau, [&](std::size_t len) { return blocks_of_periodic_point(y, len); },
      [&](const Block& w) { return relative_problem(triple, w); });
}

}  // namespace sftcd
