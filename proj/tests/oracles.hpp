#pragma once

// Reference computations for the tests. They read only a group's
// multiplication table and share no code with the library's closure,
// lattice, or modularity routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "modlat/group.hpp"

namespace oracle {

using Words = std::vector<std::uint64_t>;

inline Words empty_set(std::size_t n) { return Words((n + 63) / 64, 0); }
inline bool has(const Words& s, std::size_t i) { return (s[i / 64] >> (i % 64)) & 1u; }
inline void put(Words& s, std::size_t i) { s[i / 64] |= std::uint64_t{1} << (i % 64); }

inline std::size_t count(const Words& s) {
  std::size_t c = 0;
  for (auto w : s) c += static_cast<std::size_t>(__builtin_popcountll(w));
  return c;
}

inline bool subset(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

inline Words meet(const Words& a, const Words& b) {
  Words r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] &= b[i];
  return r;
}

inline bool disjoint(const Words& a, const Words& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return false;
  return true;
}

inline std::vector<std::uint32_t> members(const Words& s, std::size_t n) {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (has(s, i)) out.push_back(static_cast<std::uint32_t>(i));
  return out;
}

/// Adds every product of two members until nothing new appears. In a finite
/// group a non-empty set closed under products is a subgroup.
inline Words product_closure(const modlat::Group& g, Words s) {
  bool grew = true;
  while (grew) {
    grew = false;
    const auto ms = members(s, g.order());
    for (auto a : ms)
      for (auto b : ms) {
        const auto c = g.mul(a, b);
        if (!has(s, c)) {
          put(s, c);
          grew = true;
        }
      }
  }
  return s;
}

namespace detail {

inline void search(const modlat::Group& g, std::size_t from, const Words& in, Words& out,
                   std::vector<Words>& found) {
  std::size_t i = from;
  while (i < g.order() && (has(in, i) || has(out, i))) ++i;
  if (i == g.order()) {
    found.push_back(in);
    return;
  }
  put(out, i);
  search(g, i + 1, in, out, found);
  out[i / 64] &= ~(std::uint64_t{1} << (i % 64));

  Words grown = in;
  put(grown, i);
  grown = product_closure(g, grown);
  if (disjoint(grown, out)) search(g, i + 1, grown, out, found);
}

}  // namespace detail

/// Every multiplication-closed subset containing the identity, found by an
/// include/exclude search over elements with closure propagation. Sorted by
/// size, then member list.
inline std::vector<Words> all_subgroups(const modlat::Group& g) {
  std::vector<Words> found;
  Words in = empty_set(g.order());
  put(in, 0);
  in = product_closure(g, in);
  Words out = empty_set(g.order());
  detail::search(g, 1, in, out, found);
  std::sort(found.begin(), found.end(), [&](const Words& a, const Words& b) {
    const auto ca = count(a), cb = count(b);
    if (ca != cb) return ca < cb;
    return members(a, g.order()) < members(b, g.order());
  });
  return found;
}

/// Subgroup list with inclusion, meets by intersection, and joins as the
/// intersection of all common upper bounds.
struct SetLattice {
  std::vector<Words> subs;
  std::map<Words, std::size_t> index;
  std::vector<std::vector<char>> le;
  std::vector<std::vector<std::size_t>> join, meet;

  explicit SetLattice(std::vector<Words> s) : subs(std::move(s)) {
    const std::size_t m = subs.size();
    for (std::size_t i = 0; i < m; ++i) index[subs[i]] = i;
    le.assign(m, std::vector<char>(m, 0));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) le[a][b] = subset(subs[a], subs[b]);
    join.assign(m, std::vector<std::size_t>(m));
    meet.assign(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        meet[a][b] = index.at(oracle::meet(subs[a], subs[b]));
        Words bound(subs[a].size(), ~std::uint64_t{0});
        for (std::size_t c = 0; c < m; ++c)
          if (le[a][c] && le[b][c]) bound = oracle::meet(bound, subs[c]);
        join[a][b] = index.at(bound);
      }
  }

  /// Both Kurosh conditions, quantified with the outer and inner loops the
  /// other way round from the library.
  bool modular(std::size_t m) const {
    const std::size_t k = subs.size();
    for (std::size_t z = 0; z < k; ++z)
      for (std::size_t x = 0; x < k; ++x)
        if (le[x][z] && join[x][meet[m][z]] != meet[join[x][m]][z]) return false;
    for (std::size_t y = 0; y < k; ++y)
      for (std::size_t z = 0; z < k; ++z)
        if (le[m][z] && join[m][meet[y][z]] != meet[join[m][y]][z]) return false;
    return true;
  }
};

inline Words to_words(const modlat::SubgroupSet& s, std::size_t n) {
  Words w = empty_set(n);
  for (auto x : s.members()) put(w, x);
  return w;
}

/// Elements commuting modulo `lower` with every element of `upper`, by direct
/// table lookups.
inline std::size_t factor_centralizer_order(const modlat::Group& g, const Words& lower, const Words& upper) {
  std::size_t c = 0;
  const auto ups = members(upper, g.order());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto h : ups) {
      // x h x^-1 h^-1
      std::uint32_t xi = 0, hi = 0;
      for (std::uint32_t y = 0; y < g.order(); ++y) {
        if (g.mul(x, y) == 0) xi = y;
        if (g.mul(h, y) == 0) hi = y;
      }
      if (!has(lower, g.mul(g.mul(g.mul(x, h), xi), hi))) {
        ok = false;
        break;
      }
    }
    if (ok) ++c;
  }
  return c;
}

}  // namespace oracle
