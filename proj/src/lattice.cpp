#include "modlat/lattice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace modlat {

namespace {

SubgroupSet close_with(const Group& g, const SubgroupSet& base, const std::vector<Elem>& gens) {
  SubgroupSet result = base;
  std::vector<Elem> frontier = base.members();
  for (Elem s : gens)
    if (!result.contains(s)) {
      result.insert(s);
      frontier.push_back(s);
    }
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier)
      for (Elem s : gens) {
        const Elem y = g.mul(x, s);
        if (!result.contains(y)) {
          result.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace

SubgroupLattice::SubgroupLattice(Group g) : group_(std::make_shared<const Group>(std::move(g))) {
  const Group& grp = *group_;
  const std::size_t n = grp.order();

  struct Found {
    SubgroupSet set;
    std::vector<Elem> gens;
  };
  std::vector<Found> found;
  std::unordered_map<SubgroupSet, std::size_t, SubgroupSetHash> seen;

  // cyclic seeds, keyed by their least generator
  std::vector<Elem> cyclic_gens;
  for (Elem x = 0; x < n; ++x) {
    auto c = subgroup_generated(grp, {x});
    if (seen.emplace(c, found.size()).second) {
      found.push_back({std::move(c), x == 0 ? std::vector<Elem>{} : std::vector<Elem>{x}});
      if (x != 0) cyclic_gens.push_back(x);
    }
  }

  // Every subgroup is a join of cyclic subgroups, so joining each discovered
  // subgroup with each cyclic one reaches a fixed point containing them all.
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (Elem c : cyclic_gens) {
      if (found[i].set.contains(c)) continue;
      auto gens = found[i].gens;
      gens.push_back(c);
      auto s = close_with(grp, found[i].set, gens);
      if (seen.emplace(s, found.size()).second) found.push_back({std::move(s), std::move(gens)});
    }
  }

  subgroups_.reserve(found.size());
  for (auto& f : found) subgroups_.push_back(std::move(f.set));
  std::sort(subgroups_.begin(), subgroups_.end(), canonical_less);

  const std::size_t m = subgroups_.size();
  orders_.resize(m);
  for (SubIdx i = 0; i < m; ++i) {
    orders_[i] = subgroups_[i].size();
    index_.emplace(subgroups_[i], i);
  }

  leq_.assign(m * m, 0);
  for (SubIdx a = 0; a < m; ++a)
    for (SubIdx b = a; b < m; ++b)
      if (orders_[b] % orders_[a] == 0 && subgroups_[a].is_subset_of(subgroups_[b])) leq_[a * m + b] = 1;

  join_.assign(m * m, 0);
  meet_.assign(m * m, 0);
  for (SubIdx a = 0; a < m; ++a)
    for (SubIdx b = a; b < m; ++b) {
      // smallest common upper bound in canonical (size-sorted) order
      SubIdx j = static_cast<SubIdx>(m - 1);
      for (SubIdx c = b; c < m; ++c)
        if (leq(a, c) && leq(b, c)) {
          j = c;
          break;
        }
      join_[a * m + b] = join_[b * m + a] = j;
      const SubIdx k = index_.at(subgroups_[a] & subgroups_[b]);
      meet_[a * m + b] = meet_[b * m + a] = k;
    }

  lower_covers_.assign(m, {});
  upper_covers_.assign(m, {});
  for (SubIdx b = 0; b < m; ++b) {
    for (SubIdx a = 0; a < b; ++a) {
      if (!leq(a, b)) continue;
      bool cover = true;
      for (SubIdx c = a + 1; c < b && cover; ++c)
        if (leq(a, c) && leq(c, b)) cover = false;
      if (cover) {
        lower_covers_[b].push_back(a);
        upper_covers_[a].push_back(b);
      }
    }
  }

  normal_.assign(m, 0);
  for (SubIdx i = 0; i < m; ++i) normal_[i] = modlat::is_normal(grp, subgroups_[i]) ? 1 : 0;

  depth_.assign(m, 0);
  depth_[m - 1] = 1;
  for (SubIdx i = static_cast<SubIdx>(m - 1); i-- > 0;) {
    std::uint64_t mask = 0;
    for (SubIdx u : upper_covers_[i]) mask |= depth_[u] << 1;
    depth_[i] = mask;
  }
  longest_chain_ = 63 - std::countl_zero(depth_[0]);
}

std::optional<SubIdx> SubgroupLattice::find(const SubgroupSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubIdx SubgroupLattice::index_of(const SubgroupSet& s) const {
  auto i = find(s);
  if (!i) throw Error(Errc::bad_parameters, "set is not a subgroup of " + group_->name());
  return *i;
}

std::vector<SubIdx> SubgroupLattice::normal_indices() const {
  std::vector<SubIdx> out;
  for (SubIdx i = 0; i < size(); ++i)
    if (normal_[i]) out.push_back(i);
  return out;
}

std::string SubgroupLattice::describe(SubIdx i) const {
  return "H#" + std::to_string(i) + "(" + std::to_string(orders_[i]) + ")";
}

std::vector<SubgroupSet> maximal_subgroups(const SubgroupLattice& lat, SubIdx h) {
  std::vector<SubgroupSet> out;
  for (SubIdx k : lat.lower_covers(h)) out.push_back(lat.subgroup(k));
  return out;
}

bool is_n_maximal(const SubgroupLattice& lat, SubIdx h, int n) {
  if (n < 1) throw Error(Errc::bad_depth, "n must be at least 1, got " + std::to_string(n));
  if (n > 63) return false;
  return (lat.depth_mask(h) >> n) & 1u;
}

std::vector<SubIdx> n_maximal_set(const SubgroupLattice& lat, int n) {
  if (n < 1) throw Error(Errc::bad_depth, "n must be at least 1, got " + std::to_string(n));
  std::vector<SubIdx> out;
  for (SubIdx i = 0; i < lat.size(); ++i)
    if (is_n_maximal(lat, i, n)) out.push_back(i);
  return out;
}

bool is_modular_in(const SubgroupLattice& lat, SubIdx m, SubIdx within) {
  if (!lat.leq(m, within)) throw Error(Errc::bad_parameters, "subgroup is not inside the ambient subgroup");
  std::vector<SubIdx> below;
  for (SubIdx i = 0; i <= within; ++i)
    if (lat.leq(i, within)) below.push_back(i);

  // (i) <X, M∩Z> = <X,M> ∩ Z for X ≤ Z
  for (SubIdx x : below)
    for (SubIdx z : below) {
      if (!lat.leq(x, z)) continue;
      if (lat.join(x, lat.meet(m, z)) != lat.meet(lat.join(x, m), z)) return false;
    }
  // (ii) <M, Y∩Z> = <M,Y> ∩ Z for M ≤ Z
  for (SubIdx z : below) {
    if (!lat.leq(m, z)) continue;
    for (SubIdx y : below)
      if (lat.join(m, lat.meet(y, z)) != lat.meet(lat.join(m, y), z)) return false;
  }
  return true;
}

std::vector<SubIdx> sylow_subgroups(const SubgroupLattice& lat, std::uint64_t p, SubIdx within) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  const std::uint64_t target = pi_part(lat.order_of(within), PrimeSet{p});
  std::vector<SubIdx> out;
  for (SubIdx i = 0; i <= within; ++i)
    if (lat.order_of(i) == target && lat.leq(i, within)) out.push_back(i);
  return out;
}

namespace {

// HP = PH iff HP is a subgroup iff |<H,P>| |H∩P| = |H| |P|.
bool lattice_permutes(const SubgroupLattice& lat, SubIdx h, SubIdx p) {
  return lat.order_of(lat.join(h, p)) * lat.order_of(lat.meet(h, p)) ==
         lat.order_of(h) * lat.order_of(p);
}

}  // namespace

bool is_quasinormal_in(const SubgroupLattice& lat, SubIdx h, SubIdx within) {
  for (SubIdx p = 0; p <= within; ++p)
    if (lat.leq(p, within) && !lattice_permutes(lat, h, p)) return false;
  return true;
}

bool is_s_quasinormal_in(const SubgroupLattice& lat, SubIdx h, SubIdx within) {
  const auto primes = PrimeSet::of(lat.order_of(within));
  for (auto p : primes.primes())
    for (SubIdx s : sylow_subgroups(lat, p, within))
      if (!lattice_permutes(lat, h, s)) return false;
  return true;
}

SubgroupSet frattini_of(const SubgroupLattice& lat, SubIdx within) {
  SubgroupSet out = lat.subgroup(within);
  for (SubIdx k : lat.lower_covers(within)) out &= lat.subgroup(k);
  return out;
}

std::optional<SubgroupSet> hall_subgroup(const SubgroupLattice& lat, const PrimeSet& primes) {
  const std::uint64_t target = pi_part(lat.group().order(), primes);
  for (SubIdx i = 0; i < lat.size(); ++i)
    if (lat.order_of(i) == target) return lat.subgroup(i);
  return std::nullopt;
}

std::string lattice_to_dot(const SubgroupLattice& lat, const DotStyle& style) {
  std::ostringstream out;
  out << "digraph \"" << lat.group().name() << "\" {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (SubIdx i = 0; i < lat.size(); ++i) {
    out << "  n" << i << " [label=\"" << lat.order_of(i) << ":" << i << "\"";
    if (style.mark_normal && lat.is_normal(i)) out << ", peripheries=2";
    if (style.mark_modular && is_modular_subgroup(lat, i)) out << ", color=blue";
    if (style.mark_s_quasinormal && is_s_quasinormal(lat, i)) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (SubIdx i = 0; i < lat.size(); ++i)
    for (SubIdx u : lat.upper_covers(i)) out << "  n" << i << " -> n" << u << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace modlat
