#include "modlat/classify.hpp"

#include <algorithm>
#include <numeric>

namespace modlat {

SubgroupSet factor_centralizer(const Group& g, const SubgroupSet& lower, const SubgroupSet& upper) {
  SubgroupSet out(g.order());
  const auto hm = upper.members();
  for (Elem x = 0; x < g.order(); ++x) {
    bool centralizes = true;
    for (Elem h : hm)
      if (!lower.contains(g.commutator(x, h))) {
        centralizes = false;
        break;
      }
    if (centralizes) out.insert(x);
  }
  return out;
}

namespace {

std::vector<ChiefFactor> chief_pairs(const Group& g, const std::vector<SubgroupSet>& normals) {
  std::vector<ChiefFactor> out;
  for (std::size_t k = 0; k < normals.size(); ++k)
    for (std::size_t h = k + 1; h < normals.size(); ++h) {
      const auto& lower = normals[k];
      const auto& upper = normals[h];
      if (lower.size() == upper.size() || !lower.is_subset_of(upper)) continue;
      bool minimal = true;
      for (std::size_t m = k + 1; m < h && minimal; ++m)
        if (normals[m].size() != lower.size() && normals[m].size() != upper.size() &&
            lower.is_subset_of(normals[m]) && normals[m].is_subset_of(upper))
          minimal = false;
      if (!minimal) continue;
      ChiefFactor f;
      f.lower = lower;
      f.upper = upper;
      f.factor_order = upper.size() / lower.size();
      f.automizer_order = g.order() / factor_centralizer(g, lower, upper).size();
      f.is_cyclic = is_cyclic_section(g, upper, lower);
      out.push_back(std::move(f));
    }
  return out;
}

bool is_prime_or_one(std::uint64_t n) { return n == 1 || is_prime(n); }

}  // namespace

std::vector<ChiefFactor> chief_factors_no_frattini(const Group& g) {
  return chief_pairs(g, normal_subgroups(g));
}

std::vector<ChiefFactor> all_chief_factors(const SubgroupLattice& lat) {
  const Group& g = lat.group();
  std::vector<SubgroupSet> normals;
  for (SubIdx i : lat.normal_indices()) normals.push_back(lat.subgroup(i));
  auto factors = chief_pairs(g, normals);
  const auto& maximals = lat.lower_covers(lat.top());
  for (auto& f : factors) {
    SubgroupSet phi = g.whole();
    for (SubIdx m : maximals)
      if (f.lower.is_subset_of(lat.subgroup(m))) phi &= lat.subgroup(m);
    f.is_frattini = f.upper.is_subset_of(phi);
  }
  return factors;
}

bool is_abelian(const Group& g) {
  const auto gens = g.generators();
  for (Elem a : gens)
    for (Elem b : gens)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

bool is_nilpotent_section(const Group& g, const SubgroupSet& h, const SubgroupSet& n) {
  SubgroupSet term = h;
  while (true) {
    SubgroupSet next = commutator_subgroup(g, term, h);
    if (next == term) break;
    term = std::move(next);
  }
  return term.is_subset_of(n);
}

bool is_nilpotent(const Group& g) { return is_nilpotent_section(g, g.whole(), g.trivial()); }

bool is_soluble(const Group& g) {
  SubgroupSet term = g.whole();
  while (term.size() > 1) {
    SubgroupSet next = commutator_subgroup(g, term, term);
    if (next == term) return false;
    term = std::move(next);
  }
  return true;
}

namespace {

bool supersoluble_from(const std::vector<ChiefFactor>& factors) {
  return std::all_of(factors.begin(), factors.end(), [](const ChiefFactor& f) { return f.is_cyclic; });
}

bool strongly_supersoluble_from(const std::vector<ChiefFactor>& factors) {
  return supersoluble_from(factors) &&
         std::all_of(factors.begin(), factors.end(),
                     [](const ChiefFactor& f) { return is_square_free(f.automizer_order); });
}

}  // namespace

bool is_supersoluble(const Group& g) { return supersoluble_from(chief_factors_no_frattini(g)); }

bool is_strongly_supersoluble(const Group& g) {
  return strongly_supersoluble_from(chief_factors_no_frattini(g));
}

bool is_nearly_nilpotent(const SubgroupLattice& lat) {
  const auto factors = all_chief_factors(lat);
  if (!supersoluble_from(factors)) return false;
  return std::all_of(factors.begin(), factors.end(), [](const ChiefFactor& f) {
    return f.is_frattini || is_prime_or_one(f.automizer_order);
  });
}

bool is_nearly_nilpotent(const Group& g) { return is_nearly_nilpotent(SubgroupLattice(g)); }

bool is_p_group_schmidt(const Group& g) {
  for (const auto& a : normal_subgroups(g)) {
    const std::size_t order_a = a.size();
    if (order_a == 1) continue;
    const auto primes = PrimeSet::of(order_a).primes();
    if (primes.size() != 1) continue;
    const std::uint64_t p = primes[0];
    const std::size_t q = g.order() / order_a;
    if (!is_prime(q) || q == p) continue;

    const auto am = a.members();
    bool elementary_abelian = true;
    for (Elem x : am) {
      if (x != 0 && g.element_order(x) != p) elementary_abelian = false;
      for (Elem y : am)
        if (g.mul(x, y) != g.mul(y, x)) elementary_abelian = false;
      if (!elementary_abelian) break;
    }
    if (!elementary_abelian) continue;

    Elem t = 0;
    for (Elem x = 1; x < g.order(); ++x)
      if (g.element_order(x) == q) {
        t = x;
        break;
      }
    if (t == 0) continue;

    // exponent k with t a t^-1 = a^k, read off the first non-identity a
    const Elem a0 = am[1];
    const Elem image = g.conj(t, a0);
    std::uint64_t k = 0;
    for (std::uint64_t e = 1; e < p; ++e)
      if (g.power(a0, e) == image) {
        k = e;
        break;
      }
    if (k <= 1) continue;
    const bool uniform =
        std::all_of(am.begin(), am.end(), [&](Elem x) { return g.conj(t, x) == g.power(x, k); });
    if (uniform) return true;
  }
  return false;
}

bool is_critical(const SubgroupLattice& lat, const GroupPredicate& in_class) {
  const Group& g = lat.group();
  if (in_class(g)) return false;
  for (SubIdx i = 0; i < lat.top(); ++i)
    if (!in_class(subgroup_as_group(g, lat.subgroup(i)).group)) return false;
  return true;
}

bool is_schmidt_group(const SubgroupLattice& lat) {
  return is_critical(lat, [](const Group& g) { return is_nilpotent(g); });
}

bool is_u_critical(const SubgroupLattice& lat) {
  return is_critical(lat, [](const Group& g) { return is_supersoluble(g); });
}

bool is_minimal_non_abelian(const SubgroupLattice& lat) {
  return is_critical(lat, [](const Group& g) { return is_abelian(g); });
}

bool is_phi_dispersive(const Group& g, const PrimeOrdering& phi) {
  const auto spectrum = prime_spectrum(g);
  PrimeOrdering sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != spectrum.primes()) throw Error(Errc::bad_ordering, "ordering is not a permutation of pi(G)");

  std::vector<std::size_t> normal_orders;
  for (const auto& n : normal_subgroups(g)) normal_orders.push_back(n.size());
  std::vector<std::uint64_t> prefix;
  for (auto p : phi) {
    prefix.push_back(p);
    const auto part = pi_part(g.order(), PrimeSet(prefix));
    if (std::find(normal_orders.begin(), normal_orders.end(), part) == normal_orders.end()) return false;
  }
  return true;
}

std::vector<PrimeOrdering> dispersive_orderings(const Group& g) {
  PrimeOrdering phi = prime_spectrum(g).primes();
  std::vector<PrimeOrdering> out;
  do {
    if (is_phi_dispersive(g, phi)) out.push_back(phi);
  } while (std::next_permutation(phi.begin(), phi.end()));
  return out;
}

bool is_ore_dispersive(const Group& g) {
  PrimeOrdering phi = prime_spectrum(g).primes();
  std::reverse(phi.begin(), phi.end());
  return is_phi_dispersive(g, phi);
}

namespace {

bool hypercyclic_from(const std::vector<ChiefFactor>& factors, const SubgroupSet& a) {
  return std::all_of(factors.begin(), factors.end(), [&](const ChiefFactor& f) {
    return !f.upper.is_subset_of(a) || f.is_cyclic;
  });
}

}  // namespace

bool is_hypercyclically_embedded(const Group& g, const SubgroupSet& a) {
  if (!is_subgroup(g, a) || !is_normal(g, a)) throw Error(Errc::not_normal, "subgroup is not normal");
  return hypercyclic_from(chief_factors_no_frattini(g), a);
}

SubgroupSet hypercyclic_center(const Group& g) {
  const auto normals = normal_subgroups(g);
  const auto factors = chief_pairs(g, normals);
  SubgroupSet z = g.trivial();
  for (const auto& n : normals)
    if (hypercyclic_from(factors, n)) z = join(g, z, n);
  if (!hypercyclic_from(factors, z))
    throw Error(Errc::internal, "product of hypercyclically embedded subgroups is not hypercyclically embedded");
  return z;
}

SubgroupSet residual(const Group& g, const GroupPredicate& in_class) {
  SubgroupSet r = g.whole();
  for (const auto& n : normal_subgroups(g)) {
    if (in_class(quotient(g, n).group)) r &= n;
  }
  return r;
}

SubgroupSet residual_us(const Group& g) {
  auto r = residual(g, [](const Group& q) { return is_strongly_supersoluble(q); });
  if (!is_strongly_supersoluble(quotient(g, r).group))
    throw Error(Errc::internal, "quotient by the strongly supersoluble residual is not strongly supersoluble");
  return r;
}

SubgroupSet residual_u(const Group& g) {
  return residual(g, [](const Group& q) { return is_supersoluble(q); });
}

bool is_nilpotent_hall(const Group& g, const SubgroupSet& h) {
  const std::size_t order = h.size();
  if (std::gcd(order, g.order() / order) != 1) return false;
  return is_nilpotent_section(g, h, g.trivial());
}

ClassProfile classify(const SubgroupLattice& lat) {
  const Group& g = lat.group();
  ClassProfile p;
  const auto factors = all_chief_factors(lat);
  p.abelian = is_abelian(g);
  p.nilpotent = is_nilpotent(g);
  p.soluble = is_soluble(g);
  p.supersoluble = supersoluble_from(factors);
  p.strongly_supersoluble = strongly_supersoluble_from(factors);
  p.nearly_nilpotent = p.supersoluble && std::all_of(factors.begin(), factors.end(), [](const ChiefFactor& f) {
                         return f.is_frattini || is_prime_or_one(f.automizer_order);
                       });
  p.p_group_schmidt = is_p_group_schmidt(g);
  p.schmidt_group = is_schmidt_group(lat);
  p.u_critical = is_u_critical(lat);
  p.ore_dispersive = is_ore_dispersive(g);
  p.dispersive_orderings = dispersive_orderings(g);
  return p;
}

const std::vector<std::string>& profile_field_names() {
  static const std::vector<std::string> names{
      "abelian",        "nilpotent",     "soluble",     "supersoluble",   "strongly_supersoluble",
      "nearly_nilpotent", "p_group_schmidt", "schmidt_group", "u_critical", "ore_dispersive"};
  return names;
}

bool profile_field(const ClassProfile& p, const std::string& field) {
  if (field == "abelian") return p.abelian;
  if (field == "nilpotent") return p.nilpotent;
  if (field == "soluble") return p.soluble;
  if (field == "supersoluble") return p.supersoluble;
  if (field == "strongly_supersoluble") return p.strongly_supersoluble;
  if (field == "nearly_nilpotent") return p.nearly_nilpotent;
  if (field == "p_group_schmidt") return p.p_group_schmidt;
  if (field == "schmidt_group") return p.schmidt_group;
  if (field == "u_critical") return p.u_critical;
  if (field == "ore_dispersive") return p.ore_dispersive;
  throw Error(Errc::bad_parameters, "unknown profile field " + field);
}

}  // namespace modlat
