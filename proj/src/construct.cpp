#include <algorithm>
#include <map>
#include <set>

#include "modlat/group.hpp"

namespace modlat {

Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles) {
  Permutation p(degree);
  for (std::uint32_t i = 0; i < degree; ++i) p[i] = i;
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const auto from = cycle[i];
      const auto to = cycle[(i + 1) % cycle.size()];
      if (from >= degree || to >= degree)
        throw Error(Errc::invalid_permutation, "point " + std::to_string(std::max(from, to)) +
                                                   " outside degree " + std::to_string(degree));
      if (used[from])
        throw Error(Errc::invalid_permutation, "point " + std::to_string(from) + " repeated in cycles");
      used[from] = true;
      p[from] = to;
    }
  }
  return p;
}

Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                              std::string name, std::size_t max_order_cap) {
  for (const auto& gen : generators) {
    if (gen.size() != degree) throw Error(Errc::invalid_permutation, "generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (auto x : gen) {
      if (x >= degree || hit[x]) throw Error(Errc::invalid_permutation, "generator is not a bijection");
      hit[x] = true;
    }
  }

  Permutation identity(degree);
  for (std::uint32_t i = 0; i < degree; ++i) identity[i] = i;

  auto compose = [degree](const Permutation& g, const Permutation& h) {
    Permutation r(degree);
    for (std::size_t x = 0; x < degree; ++x) r[x] = h[g[x]];
    return r;
  };

  std::vector<Permutation> elements{identity};
  std::map<Permutation, Elem> index{{identity, 0}};
  std::vector<Elem> layer{0};
  while (!layer.empty()) {
    std::set<Permutation> fresh;
    for (Elem e : layer)
      for (const auto& s : generators) {
        auto p = compose(elements[e], s);
        if (!index.contains(p)) fresh.insert(std::move(p));
      }
    layer.clear();
    for (const auto& p : fresh) {
      if (elements.size() >= max_order_cap)
        throw Error(Errc::closure_exceeds_cap,
                    "closure exceeds cap " + std::to_string(max_order_cap));
      index.emplace(p, static_cast<Elem>(elements.size()));
      layer.push_back(static_cast<Elem>(elements.size()));
      elements.push_back(p);
    }
  }

  const std::size_t n = elements.size();
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = index.at(compose(elements[a], elements[b]));

  std::vector<Elem> gen_idx;
  for (const auto& s : generators) {
    const Elem e = index.at(s);
    if (e != 0 && std::find(gen_idx.begin(), gen_idx.end(), e) == gen_idx.end()) gen_idx.push_back(e);
  }
  return Group(std::move(name), n, std::move(table), std::move(gen_idx), max_order_cap);
}

Group group_from_cayley_table(const std::vector<std::vector<std::uint32_t>>& rows, std::string name,
                              std::size_t max_order_cap) {
  const std::size_t n = rows.size();
  if (n == 0) throw NotAGroupError("nonempty", {0, 0, 0}, "empty table");
  if (n > max_order_cap)
    throw Error(Errc::closure_exceeds_cap,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(max_order_cap));
  std::vector<Elem> table(n * n);
  for (std::uint32_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw NotAGroupError("square", {a, 0, 0}, "row " + std::to_string(a) + " has wrong length");
    for (std::uint32_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n)
        throw NotAGroupError("closure", {a, b, 0},
                             "entry (" + std::to_string(a) + "," + std::to_string(b) + ") out of range");
      table[a * n + b] = rows[a][b];
    }
  }
  for (std::uint32_t a = 0; a < n; ++a)
    if (table[a] != a || table[a * n] != a)
      throw NotAGroupError("identity", {a, 0, 0},
                           "index 0 is not a two-sided identity at " + std::to_string(a));
  for (std::uint32_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::uint32_t b = 0; b < n; ++b)
      if (table[a * n + b] == 0 && table[b * n + a] == 0) has_inverse = true;
    if (!has_inverse)
      throw NotAGroupError("inverse", {a, 0, 0}, "element " + std::to_string(a) + " has no inverse");
  }
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const Elem ab = table[a * n + b];
      for (std::uint32_t c = 0; c < n; ++c)
        if (table[ab * n + c] != table[a * n + table[b * n + c]])
          throw NotAGroupError("associativity", {a, b, c},
                               "non-associative triple (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
    }
  return Group(std::move(name), n, std::move(table), {}, max_order_cap);
}

Group cyclic_group(std::size_t n) {
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  std::vector<Elem> gens;
  if (n > 1) gens.push_back(1);
  return Group("C" + std::to_string(n), n, std::move(table), std::move(gens),
               std::max(n, kDefaultMaxOrder));
}

Group direct_product(const Group& a, const Group& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  const std::size_t cap = std::max(a.max_order_cap(), b.max_order_cap());
  if (n > cap)
    throw Error(Errc::closure_exceeds_cap, "direct product order " + std::to_string(n) + " exceeds cap");
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ax = static_cast<Elem>(x / nb), bx = static_cast<Elem>(x % nb);
      const Elem ay = static_cast<Elem>(y / nb), by = static_cast<Elem>(y % nb);
      table[x * n + y] = static_cast<Elem>(a.mul(ax, ay) * nb + b.mul(bx, by));
    }
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(static_cast<Elem>(g * nb));
  for (Elem g : b.generators()) gens.push_back(g);
  return Group(a.name() + "x" + b.name(), n, std::move(table), std::move(gens), cap);
}

Group semidirect_product(const Group& n_grp, const Group& h_grp,
                         const std::vector<std::vector<Elem>>& action, std::string name) {
  const std::size_t nn = n_grp.order();
  const std::size_t nh = h_grp.order();
  if (action.size() != nh) throw Error(Errc::not_an_action, "action must list one map per element of H");
  for (std::size_t h = 0; h < nh; ++h) {
    const auto& phi = action[h];
    if (phi.size() != nn) throw Error(Errc::not_an_action, "map " + std::to_string(h) + " has wrong size");
    std::vector<bool> hit(nn, false);
    for (Elem x : phi) {
      if (x >= nn || hit[x]) throw Error(Errc::not_an_action, "map " + std::to_string(h) + " is not a bijection");
      hit[x] = true;
    }
    for (Elem x = 0; x < nn; ++x)
      for (Elem y = 0; y < nn; ++y)
        if (phi[n_grp.mul(x, y)] != n_grp.mul(phi[x], phi[y]))
          throw Error(Errc::not_an_action, "map " + std::to_string(h) + " is not an automorphism");
  }
  for (Elem x = 0; x < nn; ++x)
    if (action[0][x] != x) throw Error(Errc::not_an_action, "identity of H does not act trivially");
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem h2 = 0; h2 < nh; ++h2) {
      const auto& composed = action[h_grp.mul(h1, h2)];
      for (Elem x = 0; x < nn; ++x)
        if (composed[x] != action[h1][action[h2][x]])
          throw Error(Errc::not_an_action, "action is not a homomorphism at (" + std::to_string(h1) +
                                               "," + std::to_string(h2) + ")");
    }

  const std::size_t n = nn * nh;
  const std::size_t cap = std::max(n_grp.max_order_cap(), h_grp.max_order_cap());
  if (n > cap)
    throw Error(Errc::closure_exceeds_cap, "semidirect product order " + std::to_string(n) + " exceeds cap");
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const Elem n1 = static_cast<Elem>(x / nh), h1 = static_cast<Elem>(x % nh);
      const Elem n2 = static_cast<Elem>(y / nh), h2 = static_cast<Elem>(y % nh);
      table[x * n + y] =
          static_cast<Elem>(n_grp.mul(n1, action[h1][n2]) * nh + h_grp.mul(h1, h2));
    }
  std::vector<Elem> gens;
  for (Elem g : n_grp.generators()) gens.push_back(static_cast<Elem>(g * nh));
  for (Elem g : h_grp.generators()) gens.push_back(g);
  if (name.empty()) name = n_grp.name() + ":" + h_grp.name();
  return Group(std::move(name), n, std::move(table), std::move(gens), cap);
}

QuotientGroup quotient(const Group& g, const SubgroupSet& normal) {
  if (!is_subgroup(g, normal) || !is_normal(g, normal))
    throw Error(Errc::not_normal, "quotient by a subgroup that is not normal");
  const std::size_t n = g.order();
  constexpr Elem kUnset = ~Elem{0};
  std::vector<Elem> proj(n, kUnset);
  std::vector<Elem> reps;
  const auto nm = normal.members();
  for (Elem x = 0; x < n; ++x) {
    if (proj[x] != kUnset) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem k : nm) proj[g.mul(x, k)] = id;
  }
  const std::size_t q = reps.size();
  std::vector<Elem> table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) table[a * q + b] = proj[g.mul(reps[a], reps[b])];
  std::vector<Elem> gens;
  for (Elem s : g.generators()) {
    const Elem image = proj[s];
    if (image != 0 && std::find(gens.begin(), gens.end(), image) == gens.end()) gens.push_back(image);
  }
  Group qg(g.name() + "/N" + std::to_string(normal.size()), q, std::move(table), std::move(gens),
           g.max_order_cap());
  return {std::move(qg), std::move(proj)};
}

EmbeddedGroup subgroup_as_group(const Group& g, const SubgroupSet& h, std::string name) {
  const auto members = h.members();
  const std::size_t n = members.size();
  std::vector<Elem> local(g.order(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<Elem>(i);
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = local[g.mul(members[a], members[b])];
  if (name.empty()) name = g.name() + "[" + std::to_string(n) + "]";
  Group sub(std::move(name), n, std::move(table), {}, g.max_order_cap());
  return {std::move(sub), members};
}

SubgroupSet image_of(const SubgroupSet& s, std::span<const Elem> map, std::size_t target_order) {
  SubgroupSet out(target_order);
  s.for_each([&](Elem x) { out.insert(map[x]); });
  return out;
}

SubgroupSet preimage_of(const SubgroupSet& s, std::span<const Elem> map) {
  SubgroupSet out(map.size());
  for (Elem x = 0; x < map.size(); ++x)
    if (s.contains(map[x])) out.insert(x);
  return out;
}

Group relabeled(const Group& g, std::span<const Elem> relabel) {
  const std::size_t n = g.order();
  if (relabel.size() != n || relabel[0] != 0) throw Error(Errc::bad_parameters, "relabel must fix 0");
  std::vector<Elem> table(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) table[relabel[a] * n + relabel[b]] = relabel[g.mul(a, b)];
  std::vector<Elem> gens;
  for (Elem s : g.generators()) gens.push_back(relabel[s]);
  return Group(g.name(), n, std::move(table), std::move(gens), g.max_order_cap());
}

}  // namespace modlat
