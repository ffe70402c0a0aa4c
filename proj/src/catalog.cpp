#include "modlat/catalog.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <regex>

namespace modlat {

namespace {

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::bad_parameters, what);
}

// Action of C_m on C_n (both from cyclic_group) by x -> r^h x.
std::vector<std::vector<Elem>> power_action(std::size_t n, std::size_t m, std::size_t r) {
  std::vector<std::vector<Elem>> action(m, std::vector<Elem>(n));
  std::uint64_t factor = 1 % std::max<std::size_t>(n, 1);
  for (std::size_t h = 0; h < m; ++h) {
    for (std::size_t x = 0; x < n; ++x) action[h][x] = static_cast<Elem>(factor * x % n);
    factor = factor * r % n;
  }
  return action;
}

using Matrix2 = std::array<std::uint64_t, 4>;  // row-major a b / c d

Matrix2 mat_mul(const Matrix2& x, const Matrix2& y, std::uint64_t q) {
  return {(x[0] * y[0] + x[1] * y[2]) % q, (x[0] * y[1] + x[1] * y[3]) % q,
          (x[2] * y[0] + x[3] * y[2]) % q, (x[2] * y[1] + x[3] * y[3]) % q};
}

bool has_eigenvalue(const Matrix2& m, std::uint64_t q) {
  const std::uint64_t tr = (m[0] + m[3]) % q;
  const std::uint64_t det = (m[0] * m[3] % q + q * q - m[1] * m[2] % q) % q;
  for (std::uint64_t x = 0; x < q; ++x)
    if ((x * x % q + q * q - tr * x % q + det) % q == 0) return true;
  return false;
}

Group with_cap(const Group& g, std::string name, std::size_t cap) {
  if (g.order() > cap)
    throw Error(Errc::closure_exceeds_cap,
                name + " has order " + std::to_string(g.order()) + " above cap " + std::to_string(cap));
  std::vector<Elem> table(g.table().begin(), g.table().end());
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  return Group(std::move(name), g.order(), std::move(table), std::move(gens), cap);
}

std::uint64_t parse_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw Error(Errc::bad_parameters, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(' ');
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(' ');
  return std::string(s.substr(b, e - b + 1));
}

// Splits on `sep` at parenthesis depth 0.
std::vector<std::string> split_top(std::string_view s, char sep) {
  std::vector<std::string> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  parts.push_back(trim(s.substr(start)));
  return parts;
}

const std::map<std::string, std::string, std::less<>>& aliases() {
  static const std::map<std::string, std::string, std::less<>> table{
      {"1", "cyclic(1)"},
      {"V4", "elementary_abelian(2,2)"},
      {"Q8", "quaternion8()"},
      {"SL23", "sl23()"},
      {"Dic12", "cyclic_semidirect(3,4,2)"},
      {"C3:C4", "cyclic_semidirect(3,4,2)"},
      {"C7:C3", "p_group(7,1,3,2)"},
      {"C5^2:C3", "pq2(3,5)"},
      {"C3^2:C2", "pq2(2,3)"},
  };
  return table;
}

Group build(std::string_view spec);

Group build_call(const std::string& fn, const std::vector<std::string>& args) {
  auto n_args = [&](std::size_t k) {
    if (args.size() != k)
      throw Error(Errc::bad_parameters, fn + " expects " + std::to_string(k) + " argument(s)");
  };
  auto num = [&](std::size_t i) { return parse_uint(args[i]); };
  if (fn == "trivial") {
    n_args(0);
    return cyclic_group(1);
  }
  if (fn == "cyclic") {
    n_args(1);
    require(num(0) >= 1, "cyclic order must be positive");
    return cyclic_group(num(0));
  }
  if (fn == "elementary_abelian") {
    n_args(2);
    return elementary_abelian(num(0), static_cast<unsigned>(num(1)));
  }
  if (fn == "dihedral") {
    n_args(1);
    return dihedral(num(0));
  }
  if (fn == "quaternion8") {
    n_args(0);
    return quaternion8();
  }
  if (fn == "symmetric") {
    n_args(1);
    return symmetric(static_cast<unsigned>(num(0)));
  }
  if (fn == "alternating") {
    n_args(1);
    return alternating(static_cast<unsigned>(num(0)));
  }
  if (fn == "holomorph_cyclic") {
    n_args(1);
    return holomorph_cyclic(num(0));
  }
  if (fn == "sl23") {
    n_args(0);
    return sl23();
  }
  if (fn == "pq2") {
    n_args(2);
    return pq2(num(0), num(1));
  }
  if (fn == "p_group") {
    n_args(4);
    return p_group(num(0), static_cast<unsigned>(num(1)), num(2), num(3));
  }
  if (fn == "cyclic_semidirect") {
    n_args(3);
    return cyclic_semidirect(num(0), num(1), num(2));
  }
  if (fn == "direct") {
    require(!args.empty(), "direct expects at least one factor");
    Group g = build(args[0]);
    for (std::size_t i = 1; i < args.size(); ++i) g = direct_product(g, build(args[i]));
    return g;
  }
  throw Error(Errc::unknown_name, "unknown constructor '" + fn + "'");
}

Group build(std::string_view spec_in) {
  const std::string spec = trim(spec_in);
  if (spec.empty()) throw Error(Errc::unknown_name, "empty group name");
  if (auto it = aliases().find(spec); it != aliases().end()) return build(it->second);

  const auto factors = split_top(spec, 'x');
  if (factors.size() > 1) {
    Group g = build(factors[0]);
    for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, build(factors[i]));
    return g;
  }

  if (const auto open = spec.find('('); open != std::string::npos && spec.back() == ')') {
    const std::string fn = spec.substr(0, open);
    const std::string inner = spec.substr(open + 1, spec.size() - open - 2);
    std::vector<std::string> args;
    if (!trim(inner).empty()) args = split_top(inner, ',');
    return build_call(fn, args);
  }

  static const std::regex cyclic_re(R"(C(\d+))"), elem_re(R"(E(\d+)\^(\d+))"), dihedral_re(R"(D(\d+))"),
      sym_re(R"(S(\d+))"), alt_re(R"(A(\d+))"), hol_re(R"(hol_C(\d+))");
  std::smatch m;
  if (std::regex_match(spec, m, cyclic_re)) return build_call("cyclic", {m[1]});
  if (std::regex_match(spec, m, elem_re)) return build_call("elementary_abelian", {m[1], m[2]});
  if (std::regex_match(spec, m, dihedral_re)) return build_call("dihedral", {m[1]});
  if (std::regex_match(spec, m, sym_re)) return build_call("symmetric", {m[1]});
  if (std::regex_match(spec, m, alt_re)) return build_call("alternating", {m[1]});
  if (std::regex_match(spec, m, hol_re)) return build_call("holomorph_cyclic", {m[1]});
  throw Error(Errc::unknown_name, "unknown group '" + spec + "'");
}

}  // namespace

std::uint64_t least_primitive_root(std::uint64_t p) {
  require(is_prime(p), std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = PrimeSet::of(p - 1).primes();
  for (std::uint64_t g = 2; g < p; ++g) {
    bool primitive = true;
    for (auto f : factors)
      if (powmod(g, (p - 1) / f, p) == 1) primitive = false;
    if (primitive) return g;
  }
  throw Error(Errc::internal, "no primitive root");
}

Group elementary_abelian(std::uint64_t p, unsigned k) {
  require(is_prime(p), "elementary abelian group needs a prime");
  Group g = cyclic_group(1);
  for (unsigned i = 0; i < k; ++i) g = i == 0 ? cyclic_group(p) : direct_product(g, cyclic_group(p));
  return g.renamed("E" + std::to_string(p) + "^" + std::to_string(k));
}

Group cyclic_semidirect(std::size_t n, std::size_t m, std::size_t r) {
  require(n >= 1 && m >= 1, "orders must be positive");
  require(std::gcd(r, n) == 1 || n == 1, "multiplier must be a unit mod n");
  require(powmod(r, m, n) == 1 % n, "multiplier order must divide m");
  return semidirect_product(cyclic_group(n), cyclic_group(m), power_action(n, m, r),
                            "C" + std::to_string(n) + ":C" + std::to_string(m));
}

Group dihedral(std::size_t order) {
  require(order >= 2 && order % 2 == 0, "dihedral order must be even");
  const std::size_t n = order / 2;
  return cyclic_semidirect(n, 2, n - 1).renamed("D" + std::to_string(order));
}

Group quaternion8() {
  // index 2u + s: unit u in {1,i,j,k}, s = 1 for the negative sign
  static constexpr int unit_product[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_product[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<std::uint32_t>> rows(8, std::vector<std::uint32_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int ua = a / 2, ub = b / 2;
      const int s = (a % 2) ^ (b % 2) ^ sign_product[ua][ub];
      rows[a][b] = static_cast<std::uint32_t>(2 * unit_product[ua][ub] + s);
    }
  return group_from_cayley_table(rows, "Q8");
}

Group symmetric(unsigned n) {
  require(n >= 1 && n <= 5, "symmetric degree must be in 1..5");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::uint32_t> cycle(n);
    std::iota(cycle.begin(), cycle.end(), 0u);
    gens.push_back(permutation_from_cycles(n, {cycle}));
    if (n > 2) gens.push_back(permutation_from_cycles(n, {{0, 1}}));
  }
  return group_from_permutations(n, gens, "S" + std::to_string(n));
}

Group alternating(unsigned n) {
  require(n >= 1 && n <= 5, "alternating degree must be in 1..5");
  std::vector<Permutation> gens;
  for (std::uint32_t k = 2; k < n; ++k) gens.push_back(permutation_from_cycles(n, {{0, 1, k}}));
  return group_from_permutations(n, gens, "A" + std::to_string(n));
}

Group holomorph_cyclic(std::uint64_t p) {
  require(is_prime(p), "holomorph needs a prime");
  return cyclic_semidirect(p, p - 1, least_primitive_root(p)).renamed("hol_C" + std::to_string(p));
}

Group sl23() {
  const Group q8 = quaternion8();
  // i -> j -> k -> i, signs kept
  const std::array<Elem, 8> alpha{0, 1, 4, 5, 6, 7, 2, 3};
  std::vector<std::vector<Elem>> action(3, std::vector<Elem>(8));
  for (Elem x = 0; x < 8; ++x) {
    action[0][x] = x;
    action[1][x] = alpha[x];
    action[2][x] = alpha[alpha[x]];
  }
  return semidirect_product(q8, cyclic_group(3), action, "SL23");
}

Group pq2(std::uint64_t p, std::uint64_t q) {
  require(is_prime(p) && is_prime(q) && p != q, "pq2 needs distinct primes");
  const Matrix2 identity{1, 0, 0, 1};
  std::optional<Matrix2> irreducible, scalar;
  for (std::uint64_t a = 0; a < q && !irreducible; ++a)
    for (std::uint64_t b = 0; b < q && !irreducible; ++b)
      for (std::uint64_t c = 0; c < q && !irreducible; ++c)
        for (std::uint64_t d = 0; d < q && !irreducible; ++d) {
          const Matrix2 m{a, b, c, d};
          if ((a * d % q + q * q - b * c % q) % q == 0 || m == identity) continue;
          Matrix2 power = identity;
          for (std::uint64_t i = 0; i < p; ++i) power = mat_mul(power, m, q);
          if (power != identity) continue;
          if (!has_eigenvalue(m, q))
            irreducible = m;
          else if (b == 0 && c == 0 && a == d && !scalar)
            scalar = m;
        }
  const auto chosen = irreducible ? irreducible : scalar;
  require(chosen.has_value(), "GL(2," + std::to_string(q) + ") has no suitable element of order " + std::to_string(p));

  const Group base = direct_product(cyclic_group(q), cyclic_group(q));
  std::vector<std::vector<Elem>> action(p, std::vector<Elem>(q * q));
  Matrix2 power = identity;
  for (std::uint64_t h = 0; h < p; ++h) {
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::uint64_t y = 0; y < q; ++y) {
        const auto nx = (power[0] * x + power[1] * y) % q;
        const auto ny = (power[2] * x + power[3] * y) % q;
        action[h][x * q + y] = static_cast<Elem>(nx * q + ny);
      }
    power = mat_mul(power, *chosen, q);
  }
  return semidirect_product(base, cyclic_group(p), action,
                            "C" + std::to_string(q) + "^2:C" + std::to_string(p));
}

Group p_group(std::uint64_t p, unsigned k, std::uint64_t q, std::uint64_t power) {
  require(is_prime(p) && is_prime(q) && p != q && k >= 1, "p_group needs distinct primes and k >= 1");
  require(powmod(power, q, p) == 1 && power % p != 0, "power must have order dividing q mod p");
  const Group base = elementary_abelian(p, k);
  std::vector<std::vector<Elem>> action(q, std::vector<Elem>(base.order()));
  std::uint64_t factor = 1;
  for (std::uint64_t h = 0; h < q; ++h) {
    for (Elem x = 0; x < base.order(); ++x) action[h][x] = base.power(x, factor);
    factor = factor * power % p;
  }
  return semidirect_product(base, cyclic_group(q), action,
                            "C" + std::to_string(p) + "^" + std::to_string(k) + ":C" + std::to_string(q));
}

Group construct(std::string_view name_or_spec, std::size_t max_order_cap) {
  const std::string name = trim(name_or_spec);
  return with_cap(build(name), name, max_order_cap);
}

const std::vector<CatalogEntry>& standard_suite() {
  using enum Provenance;
  static const std::vector<CatalogEntry> suite{
      {"1", "trivial()",
       {{"abelian", true, derived}, {"nilpotent", true, derived}, {"supersoluble", true, derived},
        {"strongly_supersoluble", true, derived}, {"nearly_nilpotent", true, derived},
        {"u_critical", false, derived}, {"schmidt_group", false, derived}}},
      {"C2", "cyclic(2)", {{"abelian", true, derived}, {"p_group_schmidt", false, derived}}},
      {"C4", "cyclic(4)", {{"abelian", true, derived}}},
      {"C6", "cyclic(6)", {{"abelian", true, derived}, {"p_group_schmidt", false, derived}}},
      {"C12", "cyclic(12)", {{"abelian", true, derived}, {"nilpotent", true, derived}}},
      {"V4", "elementary_abelian(2,2)", {{"abelian", true, derived}}},
      {"E3^2", "elementary_abelian(3,2)", {{"abelian", true, derived}}},
      {"E2^3", "elementary_abelian(2,3)", {{"abelian", true, derived}}},
      {"S3", "symmetric(3)",
       {{"nearly_nilpotent", true, cited}, {"nilpotent", false, cited}, {"supersoluble", true, derived},
        {"p_group_schmidt", true, derived}, {"schmidt_group", true, derived}, {"ore_dispersive", true, derived}}},
      {"D8", "dihedral(8)",
       {{"nilpotent", true, derived}, {"abelian", false, derived}, {"p_group_schmidt", false, derived}}},
      {"Q8", "quaternion8()", {{"nilpotent", true, derived}, {"p_group_schmidt", false, derived}}},
      {"D10", "dihedral(10)",
       {{"p_group_schmidt", true, derived}, {"nearly_nilpotent", true, derived}, {"schmidt_group", true, derived}}},
      {"D12", "dihedral(12)",
       {{"supersoluble", true, derived}, {"nilpotent", false, derived}, {"p_group_schmidt", false, derived},
        {"schmidt_group", false, derived}}},
      {"Dic12", "cyclic_semidirect(3,4,2)",
       {{"supersoluble", true, derived}, {"nearly_nilpotent", true, derived}, {"schmidt_group", true, derived},
        {"nilpotent", false, derived}}},
      {"C7:C3", "p_group(7,1,3,2)",
       {{"p_group_schmidt", true, derived}, {"nearly_nilpotent", true, derived},
        {"strongly_supersoluble", true, derived}}},
      {"A4", "alternating(4)",
       {{"supersoluble", false, cited}, {"soluble", true, derived}, {"u_critical", true, derived},
        {"ore_dispersive", false, derived}, {"nilpotent", false, derived}}},
      {"S4", "symmetric(4)",
       {{"soluble", true, derived}, {"supersoluble", false, derived}, {"u_critical", false, derived}}},
      {"SL23", "sl23()",
       {{"soluble", true, derived}, {"supersoluble", false, derived}, {"u_critical", true, derived}}},
      {"hol_C5", "holomorph_cyclic(5)",
       {{"supersoluble", true, derived}, {"strongly_supersoluble", false, derived}}},
      {"hol_C7", "holomorph_cyclic(7)",
       {{"strongly_supersoluble", true, cited}, {"nearly_nilpotent", false, cited},
        {"supersoluble", true, cited}}},
      {"hol_C13", "holomorph_cyclic(13)",
       {{"supersoluble", true, cited}, {"strongly_supersoluble", false, cited}}},
      {"A4xC2", "direct(alternating(4),cyclic(2))",
       {{"supersoluble", false, derived}, {"soluble", true, derived}, {"u_critical", false, derived}}},
      {"C5^2:C3", "pq2(3,5)", {{"supersoluble", false, derived}, {"u_critical", true, derived}}},
      {"C3^2:C2", "pq2(2,3)",
       {{"p_group_schmidt", true, derived}, {"supersoluble", true, derived}, {"nearly_nilpotent", true, derived}}},
      {"S3xC5", "direct(symmetric(3),cyclic(5))",
       {{"supersoluble", true, derived}, {"nilpotent", false, derived}, {"p_group_schmidt", false, derived}}},
      {"S3xS3", "direct(symmetric(3),symmetric(3))",
       {{"supersoluble", true, derived}, {"nearly_nilpotent", true, derived}}},
      {"A5", "alternating(5)",
       {{"soluble", false, derived}, {"supersoluble", false, derived}, {"u_critical", false, derived}}},
      {"S5", "symmetric(5)", {{"soluble", false, derived}}},
  };
  return suite;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& e : standard_suite()) names.push_back(e.name);
  for (const auto& [alias, spec] : aliases())
    if (std::find(names.begin(), names.end(), alias) == names.end()) names.push_back(alias);
  return names;
}

}  // namespace modlat
