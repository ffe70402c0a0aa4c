#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "modlat/group.hpp"

namespace modlat {

/// Index of a subgroup inside a SubgroupLattice.
using SubIdx = std::uint32_t;

/// Every subgroup of a group, in canonical order (by order, then by member
/// list), with inclusion, cover and join/meet tables.
///
/// Built by seeding with all cyclic subgroups and joining with cyclic
/// subgroups until no new subgroup appears. Immutable after construction.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(Group g);

  const Group& group() const noexcept { return *group_; }
  std::shared_ptr<const Group> shared_group() const noexcept { return group_; }

  std::size_t size() const noexcept { return subgroups_.size(); }
  const SubgroupSet& subgroup(SubIdx i) const { return subgroups_[i]; }
  const std::vector<SubgroupSet>& subgroups() const noexcept { return subgroups_; }
  std::size_t order_of(SubIdx i) const { return orders_[i]; }

  SubIdx bottom() const noexcept { return 0; }
  SubIdx top() const noexcept { return static_cast<SubIdx>(subgroups_.size() - 1); }

  std::optional<SubIdx> find(const SubgroupSet& s) const;
  /// Throws Errc::bad_parameters if `s` is not a subgroup.
  SubIdx index_of(const SubgroupSet& s) const;

  bool leq(SubIdx a, SubIdx b) const { return leq_[a * size() + b] != 0; }
  SubIdx join(SubIdx a, SubIdx b) const { return join_[a * size() + b]; }
  SubIdx meet(SubIdx a, SubIdx b) const { return meet_[a * size() + b]; }

  /// Maximal subgroups of subgroup i.
  const std::vector<SubIdx>& lower_covers(SubIdx i) const { return lower_covers_[i]; }
  /// Subgroups in which i is maximal.
  const std::vector<SubIdx>& upper_covers(SubIdx i) const { return upper_covers_[i]; }

  bool is_normal(SubIdx i) const { return normal_[i] != 0; }
  std::vector<SubIdx> normal_indices() const;

  /// Bit d is set iff there is a maximal chain of length d from the whole
  /// group down to subgroup i. The whole group has depth set {0}.
  std::uint64_t depth_mask(SubIdx i) const { return depth_[i]; }
  /// Length of the longest maximal chain from the whole group to 1.
  int longest_chain() const noexcept { return longest_chain_; }

  /// Printable descriptor "H#i(order)".
  std::string describe(SubIdx i) const;

 private:
  std::shared_ptr<const Group> group_;
  std::vector<SubgroupSet> subgroups_;
  std::vector<std::size_t> orders_;
  std::unordered_map<SubgroupSet, SubIdx, SubgroupSetHash> index_;
  std::vector<std::uint8_t> leq_;
  std::vector<SubIdx> join_;
  std::vector<SubIdx> meet_;
  std::vector<std::vector<SubIdx>> lower_covers_;
  std::vector<std::vector<SubIdx>> upper_covers_;
  std::vector<std::uint8_t> normal_;
  std::vector<std::uint64_t> depth_;
  int longest_chain_ = 0;
};

inline SubgroupLattice enumerate_lattice(const Group& g) { return SubgroupLattice(g); }

/// Maximal subgroups of h (all of G when h is the top).
std::vector<SubgroupSet> maximal_subgroups(const SubgroupLattice& lat, SubIdx h);

/// Existential reading: true iff some maximal chain G = M0 > M1 > ... > Mn
/// has Mn = h. A subgroup may be n-maximal for several n. Throws
/// Errc::bad_depth when n < 1.
bool is_n_maximal(const SubgroupLattice& lat, SubIdx h, int n);
std::vector<SubIdx> n_maximal_set(const SubgroupLattice& lat, int n);

/// Kurosh modularity of m in the subgroup `within` (default: the whole group),
/// evaluated literally over all pairs of subgroups of `within`:
///   <X, M∩Z> = <X,M> ∩ Z for X ≤ Z, and <M, Y∩Z> = <M,Y> ∩ Z for M ≤ Z.
/// The subgroups of `within` are exactly the lattice members below it, so the
/// interval of this lattice serves as the lattice of `within`.
bool is_modular_in(const SubgroupLattice& lat, SubIdx m, SubIdx within);
inline bool is_modular_subgroup(const SubgroupLattice& lat, SubIdx m) {
  return is_modular_in(lat, m, lat.top());
}

/// Sylow p-subgroups of subgroup `within`.
std::vector<SubIdx> sylow_subgroups(const SubgroupLattice& lat, std::uint64_t p, SubIdx within);

/// HP = PH for every subgroup P of `within`.
bool is_quasinormal_in(const SubgroupLattice& lat, SubIdx h, SubIdx within);
/// HP = PH for every Sylow subgroup P of `within`, for every prime.
bool is_s_quasinormal_in(const SubgroupLattice& lat, SubIdx h, SubIdx within);
inline bool is_quasinormal(const SubgroupLattice& lat, SubIdx h) {
  return is_quasinormal_in(lat, h, lat.top());
}
inline bool is_s_quasinormal(const SubgroupLattice& lat, SubIdx h) {
  return is_s_quasinormal_in(lat, h, lat.top());
}

inline bool is_subnormal(const SubgroupLattice& lat, SubIdx h) {
  return is_subnormal(lat.group(), lat.subgroup(h));
}

/// Intersection of the maximal subgroups of subgroup `within`.
SubgroupSet frattini_of(const SubgroupLattice& lat, SubIdx within);
inline SubgroupSet frattini(const SubgroupLattice& lat) { return frattini_of(lat, lat.top()); }

/// First subgroup (canonical order) whose order is the pi-part of |G|;
/// nullopt if none exists.
std::optional<SubgroupSet> hall_subgroup(const SubgroupLattice& lat, const PrimeSet& primes);

struct DotStyle {
  bool mark_normal = true;
  bool mark_modular = true;
  bool mark_s_quasinormal = true;
};

/// Hasse diagram of the cover relation. Nodes are labelled "order:index";
/// normal subgroups get a double border, modular ones a blue outline and
/// S-quasinormal ones a grey fill.
std::string lattice_to_dot(const SubgroupLattice& lat, const DotStyle& style = {});

}  // namespace modlat
