#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "modlat/element_set.hpp"
#include "modlat/error.hpp"

namespace modlat {

inline constexpr std::size_t kDefaultMaxOrder = 2000;

bool is_prime(std::uint64_t n);

/// Sorted list of distinct primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws Errc::not_prime for a non-prime entry. Duplicates are merged.
  explicit PrimeSet(std::vector<std::uint64_t> primes);
  PrimeSet(std::initializer_list<std::uint64_t> primes)
      : PrimeSet(std::vector<std::uint64_t>(primes)) {}

  static PrimeSet of(std::uint64_t n);

  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool empty() const noexcept { return primes_.empty(); }
  bool contains(std::uint64_t p) const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// Largest divisor of n whose prime factors all lie in `primes`.
std::uint64_t pi_part(std::uint64_t n, const PrimeSet& primes);
/// Number of prime factors of n counted with multiplicity.
int big_omega(std::uint64_t n);
bool is_square_free(std::uint64_t n);

/// A finite group held as a dense Cayley table over element indices.
/// Immutable after construction; index 0 is the identity.
class Group {
 public:
  /// Builds a group from a table that is already known to satisfy the group
  /// axioms (products of verified constructions). Use group_from_cayley_table
  /// for untrusted input. When `generators` is empty a generating set is
  /// chosen greedily by smallest index.
  Group(std::string name, std::size_t order, std::vector<Elem> table, std::vector<Elem> generators,
        std::size_t max_order_cap = kDefaultMaxOrder);

  std::size_t order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }
  std::span<const Elem> generators() const noexcept { return generators_; }
  std::size_t max_order_cap() const noexcept { return max_order_cap_; }

  Elem mul(Elem a, Elem b) const noexcept { return table_[a * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inverse_[a]; }
  /// g x g^-1
  Elem conj(Elem g, Elem x) const noexcept { return mul(mul(g, x), inverse_[g]); }
  /// a^-1 b^-1 a b
  Elem commutator(Elem a, Elem b) const noexcept {
    return mul(mul(inverse_[a], inverse_[b]), mul(a, b));
  }
  Elem power(Elem a, std::uint64_t k) const noexcept;
  std::size_t element_order(Elem a) const noexcept;

  std::span<const Elem> table() const noexcept { return table_; }

  SubgroupSet whole() const { return SubgroupSet::full(order_); }
  SubgroupSet trivial() const;

  Group renamed(std::string name) const;

 private:
  std::string name_;
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<Elem> generators_;
  std::size_t max_order_cap_;
};

// ---- construction --------------------------------------------------------

/// Permutation of {0..degree-1} as an image array.
using Permutation = std::vector<std::uint32_t>;

/// Closes the generators under composition. Elements are ordered breadth-first
/// from the identity, each layer sorted by image tuple. Products compose left
/// to right: (g*h)(x) = h(g(x)).
Group group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                              std::string name = "perm",
                              std::size_t max_order_cap = kDefaultMaxOrder);

/// Parses cycle notation (0-based points) into an image array.
Permutation permutation_from_cycles(std::size_t degree,
                                    const std::vector<std::vector<std::uint32_t>>& cycles);

/// Validates identity at index 0, closure, associativity, and invertibility.
/// Throws NotAGroupError naming the violated axiom.
Group group_from_cayley_table(const std::vector<std::vector<std::uint32_t>>& table,
                              std::string name = "table",
                              std::size_t max_order_cap = kDefaultMaxOrder);

Group cyclic_group(std::size_t n);
Group direct_product(const Group& a, const Group& b);

/// `action[h][n]` is the image of n under the automorphism attached to h.
/// Elements of the result are pairs (n, h) at index n * |H| + h and multiply
/// as (n1, h1)(n2, h2) = (n1 * action[h1][n2], h1 h2). Throws
/// Errc::not_an_action unless h -> action[h] is a homomorphism into Aut(N).
Group semidirect_product(const Group& n, const Group& h,
                         const std::vector<std::vector<Elem>>& action, std::string name = "");

struct QuotientGroup {
  Group group;
  /// element of G -> coset index in `group`
  std::vector<Elem> projection;
};

/// Cosets are numbered by least member index, so the identity coset is 0.
QuotientGroup quotient(const Group& g, const SubgroupSet& normal);

struct EmbeddedGroup {
  Group group;
  /// element of the standalone group -> element of the parent
  std::vector<Elem> embedding;
};

/// A subgroup repackaged as a group in its own right, keeping the parent's
/// relative element order.
EmbeddedGroup subgroup_as_group(const Group& g, const SubgroupSet& h, std::string name = "");

/// Image of a subset under an element map.
SubgroupSet image_of(const SubgroupSet& s, std::span<const Elem> map, std::size_t target_order);
/// Preimage of a subset under an element map.
SubgroupSet preimage_of(const SubgroupSet& s, std::span<const Elem> map);

/// Copy of g with elements renumbered by `relabel` (old index -> new index,
/// must fix 0).
Group relabeled(const Group& g, std::span<const Elem> relabel);

// ---- subgroup operations -------------------------------------------------

SubgroupSet subgroup_generated(const Group& g, std::span<const Elem> seed);
SubgroupSet subgroup_generated(const Group& g, std::initializer_list<Elem> seed);
/// Smallest subgroup containing both subgroups.
SubgroupSet join(const Group& g, const SubgroupSet& a, const SubgroupSet& b);
bool is_subgroup(const Group& g, const SubgroupSet& s);

SubgroupSet centralizer(const Group& g, const SubgroupSet& s);
SubgroupSet normalizer(const Group& g, const SubgroupSet& s);
bool is_normal(const Group& g, const SubgroupSet& s);
SubgroupSet conjugate(const Group& g, const SubgroupSet& s, Elem x);
SubgroupSet core(const Group& g, const SubgroupSet& h);
SubgroupSet normal_closure(const Group& g, const SubgroupSet& h);

/// [A, B]
SubgroupSet commutator_subgroup(const Group& g, const SubgroupSet& a, const SubgroupSet& b);
SubgroupSet derived_subgroup(const Group& g);
SubgroupSet center(const Group& g);

/// Set product AB as a subset.
SubgroupSet product_set(const Group& g, const SubgroupSet& a, const SubgroupSet& b);
bool permutes(const Group& g, const SubgroupSet& a, const SubgroupSet& b);

/// A Sylow p-subgroup, grown inside successive normalizers.
SubgroupSet sylow_subgroup(const Group& g, std::uint64_t p);
PrimeSet prime_spectrum(const Group& g);

/// All normal subgroups in canonical order, built from normal closures of
/// single elements without enumerating the full lattice.
std::vector<SubgroupSet> normal_subgroups(const Group& g);

/// Subnormal iff the chain G, H^G, H^(H^G), ... reaches H.
bool is_subnormal(const Group& g, const SubgroupSet& h);

/// Order of x modulo the normal subgroup k of the subgroup containing x.
std::size_t order_modulo(const Group& g, Elem x, const SubgroupSet& k);

/// H/K cyclic for K normal in H.
bool is_cyclic_section(const Group& g, const SubgroupSet& h, const SubgroupSet& k);

/// Exhaustive axiom check; returns an empty string when all axioms hold,
/// otherwise a description of the first violation.
std::string check_group_axioms(const Group& g);

}  // namespace modlat
