#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "modlat/classify.hpp"
#include "modlat/group.hpp"

namespace modlat {

/// `cited`: asserted by the source literature; `derived`: computed independently.
enum class Provenance { cited, derived };

struct ExpectedField {
  std::string field;  // a profile_field_names() entry
  bool value;
  Provenance provenance;
};

struct CatalogEntry {
  std::string name;
  /// Constructor spec accepted by construct(), e.g. "holomorph_cyclic(7)".
  std::string constructor;
  std::vector<ExpectedField> expected;
};

/// Builds a group from a catalog name ("S3", "hol_C7", "A4xC2", "E3^2",
/// "D8", ...) or a constructor spec ("cyclic(12)", "pq2(3,5)",
/// "direct(A4,C2)", ...). Throws Errc::unknown_name or Errc::bad_parameters.
Group construct(std::string_view name_or_spec, std::size_t max_order_cap = kDefaultMaxOrder);

// Parameterised families.
Group elementary_abelian(std::uint64_t p, unsigned k);
/// Dihedral group of order `order` (even).
Group dihedral(std::size_t order);
Group quaternion8();
Group symmetric(unsigned n);
Group alternating(unsigned n);
/// C_n ⋊ C_m where a generator of C_m acts as x -> r·x.
Group cyclic_semidirect(std::size_t n, std::size_t m, std::size_t r);
/// C_p ⋊ Aut(C_p), Aut(C_p) generated by the least primitive root mod p.
Group holomorph_cyclic(std::uint64_t p);
/// Q8 ⋊ C3 with the order-3 automorphism cycling i, j, k.
Group sl23();
/// C_q^2 ⋊ C_p via an element of order p in GL(2,q); an irreducible one is
/// preferred, otherwise a scalar matrix.
Group pq2(std::uint64_t p, std::uint64_t q);
/// C_p^k ⋊ C_q with the generator acting as the power map a -> a^power.
Group p_group(std::uint64_t p, unsigned k, std::uint64_t q, std::uint64_t power);

std::uint64_t least_primitive_root(std::uint64_t p);

/// The groups the theorem suite runs over, with golden expectations.
const std::vector<CatalogEntry>& standard_suite();
/// Every catalog name known to construct().
std::vector<std::string> catalog_names();

}  // namespace modlat
