#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "modlat/group.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

/// A chief factor H/K of G: K < H both normal, nothing normal in between.
struct ChiefFactor {
  SubgroupSet lower;  // K
  SubgroupSet upper;  // H
  std::size_t factor_order = 0;
  /// |G / C_G(H/K)|
  std::size_t automizer_order = 0;
  bool is_cyclic = false;
  /// H/K ≤ Φ(G/K)
  bool is_frattini = false;
};

/// C_G(H/K) = {g : [g,h] ∈ K for all h ∈ H}.
SubgroupSet factor_centralizer(const Group& g, const SubgroupSet& lower, const SubgroupSet& upper);

/// Every chief factor of G, over all pairs of normal subgroups. The Frattini
/// flag uses the maximal subgroups of G that contain K, which correspond to
/// the maximal subgroups of G/K.
std::vector<ChiefFactor> all_chief_factors(const SubgroupLattice& lat);
/// Same pairs with automizer and cyclicity, without Frattini flags (no lattice
/// needed).
std::vector<ChiefFactor> chief_factors_no_frattini(const Group& g);

bool is_abelian(const Group& g);
bool is_nilpotent(const Group& g);
bool is_soluble(const Group& g);
/// H/N nilpotent, for N normal in H.
bool is_nilpotent_section(const Group& g, const SubgroupSet& h, const SubgroupSet& n);

bool is_supersoluble(const Group& g);
bool is_strongly_supersoluble(const Group& g);
bool is_nearly_nilpotent(const SubgroupLattice& lat);
bool is_nearly_nilpotent(const Group& g);

/// Non-trivial power-automorphism decomposition A ⋊ <t>; the exponent must be
/// the same for every non-identity a in A.
bool is_p_group_schmidt(const Group& g);

using GroupPredicate = std::function<bool(const Group&)>;

/// G not in the class but every proper subgroup is.
bool is_critical(const SubgroupLattice& lat, const GroupPredicate& in_class);
bool is_schmidt_group(const SubgroupLattice& lat);
bool is_u_critical(const SubgroupLattice& lat);
/// Miller–Moreno group.
bool is_minimal_non_abelian(const SubgroupLattice& lat);

/// Primes of |G| in an order; throws Errc::bad_ordering unless it is a
/// permutation of π(G).
using PrimeOrdering = std::vector<std::uint64_t>;
bool is_phi_dispersive(const Group& g, const PrimeOrdering& phi);
std::vector<PrimeOrdering> dispersive_orderings(const Group& g);
bool is_ore_dispersive(const Group& g);

/// Throws Errc::not_normal if a is not normal.
bool is_hypercyclically_embedded(const Group& g, const SubgroupSet& a);
SubgroupSet hypercyclic_center(const Group& g);

/// Intersection of the normal N with G/N in the class.
SubgroupSet residual(const Group& g, const GroupPredicate& in_class);
/// G^{U_s}; checks that G modulo the result is strongly supersoluble and
/// throws Errc::internal otherwise.
SubgroupSet residual_us(const Group& g);
/// G^U
SubgroupSet residual_u(const Group& g);

bool is_nilpotent_hall(const Group& g, const SubgroupSet& h);

struct ClassProfile {
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
  bool supersoluble = false;
  bool strongly_supersoluble = false;
  bool nearly_nilpotent = false;
  bool p_group_schmidt = false;
  bool schmidt_group = false;
  bool u_critical = false;
  bool ore_dispersive = false;
  std::vector<PrimeOrdering> dispersive_orderings;

  friend bool operator==(const ClassProfile&, const ClassProfile&) = default;
};

ClassProfile classify(const SubgroupLattice& lat);

/// Named boolean field of a profile ("nilpotent", "u_critical", ...). Throws
/// Errc::bad_parameters for an unknown name.
bool profile_field(const ClassProfile& p, const std::string& field);
const std::vector<std::string>& profile_field_names();

}  // namespace modlat
