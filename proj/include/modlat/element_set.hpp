#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace modlat {

/// Index of a group element inside its parent Cayley table. Index 0 is the
/// identity.
using Elem = std::uint32_t;

/// A subset of the elements of one group, stored as a bitset over element
/// indices. Subgroups are represented by this type throughout; the owning
/// group is always passed alongside.
class SubgroupSet {
 public:
  SubgroupSet() = default;
  explicit SubgroupSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static SubgroupSet from_members(std::size_t universe, std::span<const Elem> members);
  static SubgroupSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void insert(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void erase(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;
  bool is_subset_of(const SubgroupSet& other) const noexcept;
  bool intersects(const SubgroupSet& other) const noexcept;

  SubgroupSet& operator&=(const SubgroupSet& other) noexcept;
  SubgroupSet& operator|=(const SubgroupSet& other) noexcept;
  friend SubgroupSet operator&(SubgroupSet a, const SubgroupSet& b) noexcept { return a &= b; }
  friend SubgroupSet operator|(SubgroupSet a, const SubgroupSet& b) noexcept { return a |= b; }

  std::vector<Elem> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order: by cardinality, then lexicographically by the sorted
/// member list.
bool canonical_less(const SubgroupSet& a, const SubgroupSet& b) noexcept;

struct SubgroupSetHash {
  std::size_t operator()(const SubgroupSet& s) const noexcept { return s.hash(); }
};

}  // namespace modlat
