#include "sftcd/bridge.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sftcd/error.hpp"

namespace sftcd {

Symbol BridgeWitness::at(std::int64_t coordinate) const {
  if (coordinate <= m) return left.at(coordinate);
  if (coordinate >= n) return right.at(coordinate);
  return middle[static_cast<std::size_t>(coordinate - m - 1)];
}

namespace {

bool same_image(const OneBlockCode& code, const PeriodicPoint& a, const PeriodicPoint& b) {
  const auto span = static_cast<std::int64_t>(std::lcm(a.period(), b.period()));
  for (std::int64_t i = 1; i <= span; ++i)
    if (code(a.at(i)) != code(b.at(i))) return false;
  return true;
}

}  // namespace

bool verify_bridge(const OneBlockCode& image_code, const BridgeWitness& bridge) {
  const auto& dom = image_code.domain();
  if (bridge.n <= bridge.m) return false;
  if (bridge.middle.size() != static_cast<std::size_t>(bridge.n - bridge.m - 1)) return false;
  if (!bridge.left.valid_in(dom) || !bridge.right.valid_in(dom)) return false;
  if (!same_image(image_code, bridge.left, bridge.right)) return false;
  for (std::int64_t i = bridge.m; i < bridge.n; ++i) {
    const Symbol a = bridge.at(i), b = bridge.at(i + 1);
    if (a >= dom.size() || b >= dom.size() || !dom.allows(a, b)) return false;
  }
  for (std::int64_t i = bridge.m + 1; i < bridge.n; ++i)
    if (image_code(bridge.at(i)) != image_code(bridge.left.at(i))) return false;
  return true;
}

std::pair<BridgeWitness, BridgeWitness> construct_bridge(const CodeTriple& triple, const PeriodicPoint& x,
                                                         const PeriodicPoint& x_prime, std::int64_t occurrence,
                                                         const RoutingCertificate& certificate, Symbol via) {
  const bool relative = certificate.mode == RoutingMode::Relative;
  const auto& fiber_code = triple.phi();
  const auto& witness_code = relative ? triple.pi() : triple.phi();
  const auto& w = certificate.w;
  const std::size_t l = w.size();
  const std::size_t n = certificate.n;

  if (!x.valid_in(triple.x()) || !x_prime.valid_in(triple.x()))
    throw Error(ErrorKind::InvalidBlock, "bridge endpoints must be points of X");
  if (!certificate.routing_set.contains(via))
    throw Error(ErrorKind::NotRoutable, "routing symbol is not in the certificate's routing set");
  if (!same_image(triple.pi(), x, x_prime)) throw Error(ErrorKind::ImageMismatch, "pi(x) differs from pi(x')");

  const Block u = x.window(occurrence, l);
  const Block u_prime = x_prime.window(occurrence, l);
  if (apply_to_block(fiber_code, u) != w || apply_to_block(fiber_code, u_prime) != w)
    throw Error(ErrorKind::NotRoutable, "a window is not a preimage of the presented block");

  const auto v = find_route(witness_code, certificate.witness_word, u.front(), u.back(), n, via);
  const auto v_prime = find_route(witness_code, certificate.witness_word, u_prime.front(), u_prime.back(), n, via);
  if (!v || !v_prime) throw Error(ErrorKind::NotRoutable, "a window is not routable through the symbol");

  auto glue = [&](const Block& head, const Block& tail) {
    Block middle(head.begin(), head.begin() + static_cast<std::ptrdiff_t>(n - 1));
    middle.push_back(via);
    middle.insert(middle.end(), tail.begin() + static_cast<std::ptrdiff_t>(n), tail.end());
    return middle;
  };
  const auto& names = triple.x().alphabet();
  const std::string provenance = std::string(to_string(certificate.mode)) + " routing of " +
                                 triple.y().alphabet().format(w) + " through " + names.name(via) +
                                 " at n=" + std::to_string(n) + "; image of the bridge is right asymptotic to the "
                                 "target's image and shares its pi-image";
  const std::int64_t m = occurrence - 1;
  const std::int64_t end = occurrence + static_cast<std::int64_t>(l);
  BridgeWitness forward{x, x_prime, m, end, glue(*v, *v_prime), certificate.mode, provenance};
  BridgeWitness backward{x_prime, x, m, end, glue(*v_prime, *v), certificate.mode, provenance};
  return {std::move(forward), std::move(backward)};
}

std::size_t default_bridge_window(const OneBlockCode& code) { return 2 * code.domain().size(); }

BridgeSearch bounded_bridge_exists(const OneBlockCode& code, const PeriodicPoint& x, const PeriodicPoint& x_prime,
                                   std::int64_t m, std::size_t window) {
  const auto& dom = code.domain();
  if (!x.valid_in(dom) || !x_prime.valid_in(dom))
    throw Error(ErrorKind::InvalidBlock, "bridge endpoints must be points of the domain");
  if (!same_image(code, x, x_prime)) throw Error(ErrorKind::ImageMismatch, "the points have different images");
  BridgeSearch out;
  out.window = window;

  // reach: symbols at the current coordinate reachable from x|_m through
  // symbols carrying the common image.
  SymbolSet reach = SymbolSet::single(x.at(m));
  for (std::size_t step = 1; step <= window; ++step) {
    const std::int64_t coord = m + static_cast<std::int64_t>(step);
    SymbolSet next;
    for (Symbol a : reach.members()) next |= dom.successor_set(a);
    next &= code.preimage_symbols(code(x.at(coord)));
    const Symbol target = x_prime.at(coord);
    if (next.contains(target)) {
      auto path = find_route(code, [&] {
        Block word;
        for (std::int64_t c = m; c <= coord; ++c) word.push_back(code(x.at(c)));
        return word;
      }(), x.at(m), target, 1, x.at(m));
      Block middle(path->begin() + 1, path->end() - 1);
      out.found = true;
      out.witness = BridgeWitness{x, x_prime, m, coord, std::move(middle), RoutingMode::Absolute,
                                  "bounded search, n=m+" + std::to_string(step)};
      return out;
    }
    reach = next;
  }
  return out;
}

FixedPointClasses fixed_point_class_oracle(const OneBlockCode& code, Symbol z, const VertexShift* codomain) {
  const auto& dom = code.domain();
  if (z >= code.codomain().size()) throw Error(ErrorKind::UnknownSymbol, "fixed symbol index out of range");
  if (codomain && !codomain->allows(z, z))
    throw Error(ErrorKind::NoFixedPoint, "(" + code.codomain().name(z) + "," + code.codomain().name(z) +
                                             ") is not allowed in the codomain");

  // Subgraph G_z on symbols over z, with local indices.
  std::vector<Symbol> nodes;
  std::vector<std::size_t> local(dom.size(), SIZE_MAX);
  for (Symbol a = 0; a < dom.size(); ++a)
    if (code(a) == z) local[a] = nodes.size(), nodes.push_back(a);
  std::vector<std::vector<Symbol>> succ(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (Symbol b : dom.successors(nodes[i]))
      if (local[b] != SIZE_MAX) succ[i].push_back(static_cast<Symbol>(local[b]));

  std::size_t comp_count = 0;
  const auto comp = strongly_connected_components(succ, &comp_count);
  std::vector<std::vector<std::size_t>> members(comp_count);
  for (std::size_t i = 0; i < nodes.size(); ++i) members[comp[i]].push_back(i);

  FixedPointClasses out;
  out.z = z;
  std::vector<std::size_t> cyclic_index(comp_count, SIZE_MAX);
  // Components in order of their smallest symbol.
  std::vector<std::size_t> order(comp_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return members[a].front() < members[b].front(); });

  for (auto c : order) {
    const auto& mem = members[c];
    const auto root = mem.front();
    bool cyclic = mem.size() > 1 ||
                  std::find(succ[root].begin(), succ[root].end(), static_cast<Symbol>(root)) != succ[root].end();
    if (!cyclic) continue;

    // BFS levels inside the component; the period is the gcd of
    // level(u) + 1 - level(v) over internal edges u -> v.
    std::vector<std::int64_t> level(nodes.size(), -1);
    std::vector<std::size_t> parent(nodes.size(), SIZE_MAX);
    std::deque<std::size_t> queue{root};
    level[root] = 0;
    while (!queue.empty()) {
      auto u = queue.front();
      queue.pop_front();
      for (auto v : succ[u]) {
        if (comp[v] != c || level[v] >= 0) continue;
        level[v] = level[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      }
    }
    std::int64_t period = 0;
    std::size_t closing = SIZE_MAX;  // deepest predecessor of root on a shortest cycle
    for (auto u : mem) {
      for (auto v : succ[u]) {
        if (comp[v] != c) continue;
        period = std::gcd(period, std::abs(level[u] + 1 - level[v]));
        if (v == root && (closing == SIZE_MAX || level[u] < level[closing])) closing = u;
      }
    }

    FiberComponent fc;
    for (auto i : mem) fc.symbols.push_back(nodes[i]);
    std::sort(fc.symbols.begin(), fc.symbols.end());
    fc.period = static_cast<std::size_t>(period);

    // Shortest cycle through root: tree path root -> closing, then back.
    Block cycle;
    for (auto v = closing; v != SIZE_MAX; v = parent[v]) cycle.push_back(nodes[v]);
    std::reverse(cycle.begin(), cycle.end());

    cyclic_index[c] = out.components.size();
    for (std::size_t r = 0; r < fc.period; ++r) {
      out.representatives.emplace_back(cycle, static_cast<std::int64_t>(r));
      out.representative_component.push_back(out.components.size());
    }
    out.count += fc.period;
    out.components.push_back(std::move(fc));
  }
  if (out.count == 0) throw Error(ErrorKind::NoFixedPoint, "no preimage of the fixed point");

  // Reachability between cyclic components.
  for (auto c : order) {
    if (cyclic_index[c] == SIZE_MAX) continue;
    std::vector<bool> seen(nodes.size(), false);
    std::vector<std::size_t> stack(members[c].begin(), members[c].end());
    for (auto s : stack) seen[s] = true;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto v : succ[u])
        if (!seen[v]) seen[v] = true, stack.push_back(v);
    }
    for (auto d : order) {
      if (d == c || cyclic_index[d] == SIZE_MAX) continue;
      if (seen[members[d].front()]) out.reaches.emplace_back(cyclic_index[c], cyclic_index[d]);
    }
  }
  std::sort(out.reaches.begin(), out.reaches.end());
  out.caveat =
      "counts transition classes of periodic preimages of the fixed point; classes of non-periodic "
      "preimages are not enumerated";
  return out;
}

}  // namespace sftcd
