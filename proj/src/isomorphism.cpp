#include "modlat/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace modlat {

namespace {

// Generating set chosen greedily from elements of largest order first, which
// keeps the set short and the search shallow.
std::vector<Elem> short_generating_set(const Group& g) {
  std::vector<Elem> by_order(g.order());
  for (Elem i = 0; i < g.order(); ++i) by_order[i] = i;
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Elem x, Elem y) { return g.element_order(x) > g.element_order(y); });
  std::vector<Elem> gens;
  SubgroupSet span = g.trivial();
  for (Elem x : by_order) {
    if (span.size() == g.order()) break;
    if (span.contains(x)) continue;
    gens.push_back(x);
    span = subgroup_generated(g, gens);
  }
  return gens;
}

std::map<std::size_t, std::size_t> order_profile(const Group& g) {
  std::map<std::size_t, std::size_t> counts;
  for (Elem x = 0; x < g.order(); ++x) ++counts[g.element_order(x)];
  return counts;
}

}  // namespace

bool is_isomorphism(const Group& a, const Group& b, const std::vector<Elem>& map) {
  if (a.order() != b.order() || map.size() != a.order()) return false;
  std::vector<bool> hit(b.order(), false);
  for (Elem y : map) {
    if (y >= b.order() || hit[y]) return false;
    hit[y] = true;
  }
  for (Elem x = 0; x < a.order(); ++x)
    for (Elem y = 0; y < a.order(); ++y)
      if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
  return true;
}

std::optional<std::vector<Elem>> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() != b.order() || order_profile(a) != order_profile(b)) return std::nullopt;
  const std::size_t n = a.order();
  const auto gens = short_generating_set(a);

  // Spanning tree of a over gens: each element is parent * gen.
  std::vector<Elem> parent(n, 0), via(n, 0), bfs_order{0};
  std::vector<bool> reached(n, false);
  reached[0] = true;
  for (std::size_t i = 0; i < bfs_order.size(); ++i) {
    const Elem x = bfs_order[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Elem y = a.mul(x, gens[k]);
      if (!reached[y]) {
        reached[y] = true;
        parent[y] = x;
        via[y] = static_cast<Elem>(k);
        bfs_order.push_back(y);
      }
    }
  }

  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (Elem y = 0; y < n; ++y)
      if (b.element_order(y) == a.element_order(gens[k])) candidates[k].push_back(y);

  std::vector<Elem> images(gens.size(), 0);
  std::vector<Elem> map(n, 0);

  auto try_extend = [&]() -> bool {
    for (std::size_t i = 1; i < bfs_order.size(); ++i) {
      const Elem y = bfs_order[i];
      map[y] = b.mul(map[parent[y]], images[via[y]]);
    }
    return is_isomorphism(a, b, map);
  };

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) return try_extend();
    for (Elem y : candidates[k]) {
      images[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  if (search(search, 0)) return map;
  return std::nullopt;
}

}  // namespace modlat
