#include "modlat/group.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace modlat {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (auto p : primes_)
    if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

PrimeSet PrimeSet::of(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      ps.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) ps.push_back(n);
  return PrimeSet(std::move(ps));
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t pi_part(std::uint64_t n, const PrimeSet& primes) {
  std::uint64_t part = 1;
  for (auto p : primes.primes()) {
    while (n % p == 0) {
      n /= p;
      part *= p;
    }
  }
  return part;
}

int big_omega(std::uint64_t n) {
  int count = 0;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    while (n % d == 0) {
      n /= d;
      ++count;
    }
  }
  if (n > 1) ++count;
  return count;
}

bool is_square_free(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

// ---- Group ---------------------------------------------------------------

Group::Group(std::string name, std::size_t order, std::vector<Elem> table,
             std::vector<Elem> generators, std::size_t max_order_cap)
    : name_(std::move(name)),
      order_(order),
      table_(std::move(table)),
      inverse_(order, 0),
      generators_(std::move(generators)),
      max_order_cap_(max_order_cap) {
  if (order_ == 0) throw Error(Errc::not_a_group, "empty group");
  if (order_ > max_order_cap_)
    throw Error(Errc::closure_exceeds_cap,
                "order " + std::to_string(order_) + " exceeds cap " + std::to_string(max_order_cap_));
  if (table_.size() != order_ * order_) throw Error(Errc::not_a_group, "table is not square");
  for (Elem a = 0; a < order_; ++a)
    for (Elem b = 0; b < order_; ++b)
      if (table_[a * order_ + b] == 0) inverse_[a] = b;

  if (generators_.empty()) {
    SubgroupSet span_so_far = trivial();
    for (Elem a = 1; a < order_ && span_so_far.size() < order_; ++a) {
      if (!span_so_far.contains(a)) {
        generators_.push_back(a);
        span_so_far = subgroup_generated(*this, generators_);
      }
    }
  }
}

Elem Group::power(Elem a, std::uint64_t k) const noexcept {
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::size_t Group::element_order(Elem a) const noexcept {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

SubgroupSet Group::trivial() const {
  SubgroupSet s(order_);
  s.insert(0);
  return s;
}

Group Group::renamed(std::string name) const {
  Group copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

// ---- subgroup operations -------------------------------------------------

namespace {

// Closure of `start` (already containing the identity) under right
// multiplication by `gens`. In a finite group this is the generated subgroup.
SubgroupSet close_under(const Group& g, SubgroupSet result, std::span<const Elem> gens) {
  std::vector<Elem> frontier = result.members();
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (Elem x : frontier) {
      for (Elem s : gens) {
        const Elem y = g.mul(x, s);
        if (!result.contains(y)) {
          result.insert(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return result;
}

}  // namespace

SubgroupSet subgroup_generated(const Group& g, std::span<const Elem> seed) {
  SubgroupSet start = g.trivial();
  for (Elem s : seed) start.insert(s);
  return close_under(g, std::move(start), seed);
}

SubgroupSet subgroup_generated(const Group& g, std::initializer_list<Elem> seed) {
  return subgroup_generated(g, std::span<const Elem>(seed.begin(), seed.size()));
}

SubgroupSet join(const Group& g, const SubgroupSet& a, const SubgroupSet& b) {
  if (a.is_subset_of(b)) return b;
  if (b.is_subset_of(a)) return a;
  // Generators: all of b's members not in a, plus a's members; closing a∪b
  // under right multiplication by a∪b suffices.
  SubgroupSet start = a | b;
  const auto gens = start.members();
  return close_under(g, std::move(start), gens);
}

bool is_subgroup(const Group& g, const SubgroupSet& s) {
  if (s.universe() != g.order() || !s.contains(0)) return false;
  bool closed = true;
  const auto members = s.members();
  for (Elem a : members) {
    if (!s.contains(g.inv(a))) return false;
    for (Elem b : members) {
      if (!s.contains(g.mul(a, b))) {
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }
  return closed && g.order() % s.size() == 0;
}

SubgroupSet centralizer(const Group& g, const SubgroupSet& s) {
  SubgroupSet out(g.order());
  const auto members = s.members();
  for (Elem x = 0; x < g.order(); ++x) {
    bool commutes = true;
    for (Elem m : members) {
      if (g.mul(x, m) != g.mul(m, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.insert(x);
  }
  return out;
}

SubgroupSet conjugate(const Group& g, const SubgroupSet& s, Elem x) {
  SubgroupSet out(g.order());
  s.for_each([&](Elem m) { out.insert(g.conj(x, m)); });
  return out;
}

SubgroupSet normalizer(const Group& g, const SubgroupSet& s) {
  SubgroupSet out(g.order());
  const auto members = s.members();
  for (Elem x = 0; x < g.order(); ++x) {
    bool fixes = true;
    for (Elem m : members) {
      if (!s.contains(g.conj(x, m))) {
        fixes = false;
        break;
      }
    }
    if (fixes) out.insert(x);
  }
  return out;
}

bool is_normal(const Group& g, const SubgroupSet& s) {
  const auto members = s.members();
  for (Elem x : g.generators())
    for (Elem m : members)
      if (!s.contains(g.conj(x, m))) return false;
  return true;
}

SubgroupSet core(const Group& g, const SubgroupSet& h) {
  SubgroupSet out = h;
  for (Elem x = 0; x < g.order(); ++x) out &= conjugate(g, h, x);
  return out;
}

SubgroupSet normal_closure(const Group& g, const SubgroupSet& h) {
  SubgroupSet seeds(g.order());
  h.for_each([&](Elem m) {
    for (Elem x = 0; x < g.order(); ++x) seeds.insert(g.conj(x, m));
  });
  const auto gens = seeds.members();
  return subgroup_generated(g, gens);
}

SubgroupSet commutator_subgroup(const Group& g, const SubgroupSet& a, const SubgroupSet& b) {
  SubgroupSet seeds(g.order());
  const auto bm = b.members();
  a.for_each([&](Elem x) {
    for (Elem y : bm) seeds.insert(g.commutator(x, y));
  });
  const auto gens = seeds.members();
  return subgroup_generated(g, gens);
}

SubgroupSet derived_subgroup(const Group& g) {
  const auto whole = g.whole();
  return commutator_subgroup(g, whole, whole);
}

SubgroupSet center(const Group& g) { return centralizer(g, g.whole()); }

SubgroupSet product_set(const Group& g, const SubgroupSet& a, const SubgroupSet& b) {
  SubgroupSet out(g.order());
  const auto bm = b.members();
  a.for_each([&](Elem x) {
    for (Elem y : bm) out.insert(g.mul(x, y));
  });
  return out;
}

bool permutes(const Group& g, const SubgroupSet& a, const SubgroupSet& b) {
  if (a.is_subset_of(b) || b.is_subset_of(a)) return true;
  return product_set(g, a, b) == product_set(g, b, a);
}

SubgroupSet sylow_subgroup(const Group& g, std::uint64_t p) {
  if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
  const std::uint64_t target = pi_part(g.order(), PrimeSet{p});
  SubgroupSet sylow = g.trivial();
  while (sylow.size() < target) {
    // A p-element of N(P) outside P extends P to a larger p-subgroup.
    const SubgroupSet norm = normalizer(g, sylow);
    bool grown = false;
    norm.for_each([&](Elem x) {
      if (grown || sylow.contains(x)) return;
      if (pi_part(g.element_order(x), PrimeSet{p}) != g.element_order(x)) return;
      SubgroupSet gens = sylow;
      gens.insert(x);
      const auto seed = gens.members();
      sylow = subgroup_generated(g, seed);
      grown = true;
    });
    if (!grown) throw Error(Errc::internal, "Sylow growth stalled");
  }
  return sylow;
}

PrimeSet prime_spectrum(const Group& g) { return PrimeSet::of(g.order()); }

std::vector<SubgroupSet> normal_subgroups(const Group& g) {
  // Every normal subgroup is the join of the normal closures of its elements.
  std::vector<SubgroupSet> closures;
  std::unordered_set<SubgroupSet, SubgroupSetHash> seen;
  for (Elem x = 0; x < g.order(); ++x) {
    SubgroupSet one = g.trivial();
    one.insert(x);
    auto nc = normal_closure(g, one);
    if (seen.insert(nc).second) closures.push_back(std::move(nc));
  }
  std::vector<SubgroupSet> all(closures.begin(), closures.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (const auto& c : closures) {
      auto j = join(g, all[i], c);
      if (seen.insert(j).second) all.push_back(std::move(j));
    }
  }
  std::sort(all.begin(), all.end(), canonical_less);
  return all;
}

bool is_subnormal(const Group& g, const SubgroupSet& h) {
  SubgroupSet current = g.whole();
  while (true) {
    if (current == h) return true;
    // normal closure of h inside the subgroup `current`
    SubgroupSet seeds(g.order());
    const auto cm = current.members();
    h.for_each([&](Elem m) {
      for (Elem x : cm) seeds.insert(g.conj(x, m));
    });
    const auto gens = seeds.members();
    SubgroupSet next = subgroup_generated(g, gens);
    if (next == current) return false;
    current = std::move(next);
  }
}

std::size_t order_modulo(const Group& g, Elem x, const SubgroupSet& k) {
  std::size_t n = 1;
  for (Elem y = x; !k.contains(y); y = g.mul(y, x)) ++n;
  return n;
}

bool is_cyclic_section(const Group& g, const SubgroupSet& h, const SubgroupSet& k) {
  const std::size_t index = h.size() / k.size();
  if (index == 1) return true;
  bool cyclic = false;
  h.for_each([&](Elem x) {
    if (!cyclic && order_modulo(g, x, k) == index) cyclic = true;
  });
  return cyclic;
}

std::string check_group_axioms(const Group& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) return "identity fails at " + std::to_string(a);
    if (g.mul(g.inv(a), a) != 0 || g.mul(a, g.inv(a)) != 0)
      return "inverse fails at " + std::to_string(a);
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
    }
  if (subgroup_generated(g, g.generators()).size() != n) return "generators do not generate";
  return {};
}

}  // namespace modlat
