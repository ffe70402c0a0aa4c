#include "modlat/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>

#include "modlat/catalog.hpp"
#include "modlat/isomorphism.hpp"

namespace modlat {

std::string to_string(HypothesisStatus s) {
  switch (s) {
    case HypothesisStatus::holds: return "holds";
    case HypothesisStatus::fails: return "fails";
    case HypothesisStatus::vacuous: return "vacuous";
  }
  return "fails";
}

std::string to_string(ConclusionStatus s) {
  switch (s) {
    case ConclusionStatus::holds: return "holds";
    case ConclusionStatus::fails: return "fails";
    case ConclusionStatus::not_evaluated: return "not-evaluated";
  }
  return "not-evaluated";
}

HypothesisStatus parse_hypothesis_status(const std::string& s) {
  if (s == "holds") return HypothesisStatus::holds;
  if (s == "fails") return HypothesisStatus::fails;
  if (s == "vacuous") return HypothesisStatus::vacuous;
  throw Error(Errc::load_error, "bad hypothesis status '" + s + "'");
}

ConclusionStatus parse_conclusion_status(const std::string& s) {
  if (s == "holds") return ConclusionStatus::holds;
  if (s == "fails") return ConclusionStatus::fails;
  if (s == "not-evaluated") return ConclusionStatus::not_evaluated;
  throw Error(Errc::load_error, "bad conclusion status '" + s + "'");
}

std::string VerdictReport::label() const {
  return n > 0 ? theorem_id + "[n=" + std::to_string(n) + "]" : theorem_id;
}

std::pair<std::string, int> parse_label(const std::string& label) {
  const auto open = label.find("[n=");
  if (open == std::string::npos || label.back() != ']') return {label, 0};
  const std::string digits = label.substr(open + 3, label.size() - open - 4);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw Error(Errc::load_error, "bad theorem label '" + label + "'");
  return {label.substr(0, open), std::stoi(digits)};
}

// ---- GroupStudy ------------------------------------------------------------

GroupStudy::GroupStudy(Group g) : lattice_(std::move(g)), primes_(prime_spectrum(lattice_.group())) {
  const auto m = lattice_.size();
  modular_.resize(m);
  s_quasinormal_.resize(m);
  for (SubIdx i = 0; i < m; ++i) {
    modular_[i] = is_modular_subgroup(lattice_, i) ? 1 : 0;
    s_quasinormal_[i] = is_s_quasinormal(lattice_, i) ? 1 : 0;
  }
}

int GroupStudy::max_depth() const noexcept {
  return std::max({1, lattice_.longest_chain(), static_cast<int>(primes_.size()) + 1});
}

const ClassProfile& GroupStudy::profile() const {
  if (!profile_) profile_ = classify(lattice_);
  return *profile_;
}

const std::vector<ChiefFactor>& GroupStudy::chief_factors() const {
  if (!chief_factors_) chief_factors_ = all_chief_factors(lattice_);
  return *chief_factors_;
}

const SubgroupSet& GroupStudy::residual_us() const {
  if (!residual_us_) residual_us_ = modlat::residual_us(group());
  return *residual_us_;
}

const SubgroupSet& GroupStudy::hypercyclic_center() const {
  if (!hypercyclic_center_) hypercyclic_center_ = modlat::hypercyclic_center(group());
  return *hypercyclic_center_;
}

const GroupStudy& GroupStudy::quotient_study(SubIdx normal) const {
  auto it = quotients_.find(normal);
  if (it == quotients_.end()) {
    auto q = quotient(group(), lattice_.subgroup(normal));
    QuotientEntry entry;
    entry.study = std::make_unique<GroupStudy>(q.group.renamed(group().name() + "/" + lattice_.describe(normal)));
    entry.projection = std::move(q.projection);
    it = quotients_.emplace(normal, std::move(entry)).first;
  }
  return *it->second.study;
}

const std::vector<Elem>& GroupStudy::projection(SubIdx normal) const {
  quotient_study(normal);
  return quotients_.at(normal).projection;
}

SubIdx GroupStudy::image_index(SubIdx normal, SubIdx sub) const {
  const GroupStudy& q = quotient_study(normal);
  return q.lattice().index_of(image_of(lattice_.subgroup(sub), projection(normal), q.group().order()));
}

// ---- shared helpers ----------------------------------------------------------

namespace {

enum class SubPred { modular, s_quasinormal, modular_or_sq };

const char* pred_name(SubPred p) {
  switch (p) {
    case SubPred::modular: return "modular";
    case SubPred::s_quasinormal: return "s_quasinormal";
    case SubPred::modular_or_sq: return "modular_or_s_quasinormal";
  }
  return "";
}

bool satisfies(const GroupStudy& s, SubIdx i, SubPred p) {
  switch (p) {
    case SubPred::modular: return s.modular(i);
    case SubPred::s_quasinormal: return s.s_quasinormal(i);
    case SubPred::modular_or_sq: return s.modular_or_sq(i);
  }
  return false;
}

struct Tally {
  bool empty = true;
  bool all = true;
  std::vector<SubIdx> offenders;
};

Tally tally(const GroupStudy& s, int n, SubPred p) {
  Tally t;
  for (SubIdx i : n_maximal_set(s.lattice(), n)) {
    t.empty = false;
    if (!satisfies(s, i, p)) {
      t.all = false;
      t.offenders.push_back(i);
    }
  }
  return t;
}

VerdictReport start(const GroupStudy& s, std::string id, int n = 0) {
  VerdictReport r;
  r.group_name = s.group().name();
  r.theorem_id = std::move(id);
  r.n = n;
  return r;
}

void add(VerdictReport& r, std::string name, bool value) { r.clauses.push_back({std::move(name), value}); }

ConclusionStatus verdict(bool ok) { return ok ? ConclusionStatus::holds : ConclusionStatus::fails; }

HypothesisStatus status_of(bool ok, bool empty) {
  if (!ok) return HypothesisStatus::fails;
  return empty ? HypothesisStatus::vacuous : HypothesisStatus::holds;
}

template <class F>
void conclude(VerdictReport& r, const VerifyOptions& opt, F&& body) {
  if (opt.fast && r.hypothesis == HypothesisStatus::fails) {
    r.conclusion = ConclusionStatus::not_evaluated;
    return;
  }
  r.conclusion = verdict(body());
}

std::string factor_desc(const SubgroupLattice& lat, const ChiefFactor& f) {
  return lat.describe(lat.index_of(f.upper)) + "/" + lat.describe(lat.index_of(f.lower));
}

/// Soluble, every n-maximal subgroup satisfies p, and n <= bound.
HypothesisStatus depth_hypothesis(VerdictReport& r, const GroupStudy& s, int n, SubPred p,
                                  std::optional<int> bound) {
  const bool soluble = s.profile().soluble;
  add(r, "soluble", soluble);
  const Tally t = tally(s, n, p);
  add(r, std::string("n_maximal_all_") + pred_name(p), t.all);
  for (SubIdx i : t.offenders)
    r.witnesses.push_back(s.lattice().describe(i) + " is not " + pred_name(p));
  bool ok = soluble && t.all;
  if (bound) {
    const bool within = n <= *bound;
    add(r, "n_within_bound", within);
    ok = ok && within;
  }
  return status_of(ok, t.empty);
}

bool automizer_conclusion(VerdictReport& r, const GroupStudy& s, int n) {
  const bool strongly = s.profile().strongly_supersoluble;
  add(r, "strongly_supersoluble", strongly);
  bool bounded = true;
  for (const auto& f : s.chief_factors()) {
    if (f.is_frattini) continue;
    const auto aut = f.automizer_order;
    if (!is_square_free(aut) || static_cast<int>(PrimeSet::of(aut).size()) > n) {
      bounded = false;
      r.witnesses.push_back(factor_desc(s.lattice(), f) + " automizer order " + std::to_string(aut));
    }
  }
  add(r, "non_frattini_automizers_bounded", bounded);
  return strongly && bounded;
}

bool residual_conclusion(VerdictReport& r, const GroupStudy& s) {
  const auto& res = s.residual_us();
  const bool hall = is_nilpotent_hall(s.group(), res);
  add(r, "residual_nilpotent_hall", hall);
  r.witnesses.push_back("G^Us = " + s.lattice().describe(s.lattice().index_of(res)));
  return hall;
}

VerdictReport depth_theorem(const GroupStudy& s, std::string id, int n, SubPred p, int bound_offset,
                            const VerifyOptions& opt, bool hall_conclusion) {
  if (n < 1) throw Error(Errc::bad_depth, "n must be at least 1, got " + std::to_string(n));
  VerdictReport r = start(s, std::move(id), n);
  r.hypothesis = depth_hypothesis(r, s, n, p, static_cast<int>(s.primes().size()) + bound_offset);
  conclude(r, opt, [&] { return hall_conclusion ? residual_conclusion(r, s) : automizer_conclusion(r, s, n); });
  return r;
}

std::vector<SubIdx> minimal_normals(const SubgroupLattice& lat) {
  std::vector<SubIdx> out;
  const auto normals = lat.normal_indices();
  for (SubIdx i : normals) {
    if (i == lat.bottom()) continue;
    bool minimal = true;
    for (SubIdx j : normals)
      if (j != lat.bottom() && j != i && lat.leq(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

bool is_pq2_order(std::size_t order, const PrimeSet& primes) {
  if (primes.size() != 2) return false;
  const auto p = primes.primes()[0], q = primes.primes()[1];
  return order == p * q * q || order == q * p * p;
}

/// |G| = pq^2, or G = Q ⋊ P with Q a normal quaternion Sylow 2-subgroup
/// containing its centralizer and |P| = 3.
bool pq2_or_quaternion(VerdictReport& r, const GroupStudy& s) {
  const Group& g = s.group();
  const bool pq2 = is_pq2_order(g.order(), s.primes());
  add(r, "order_pq2", pq2);
  bool quaternion = false;
  if (g.order() == 24) {
    const auto sylows = sylow_subgroups(s.lattice(), 2, s.lattice().top());
    if (sylows.size() == 1) {
      const auto& q = s.lattice().subgroup(sylows[0]);
      std::size_t involutions = 0;
      bool abelian = true;
      const auto members = q.members();
      for (Elem x : members) {
        if (g.element_order(x) == 2) ++involutions;
        for (Elem y : members)
          if (g.mul(x, y) != g.mul(y, x)) abelian = false;
      }
      quaternion = !abelian && involutions == 1 && centralizer(g, q).is_subset_of(q);
      if (quaternion) r.witnesses.push_back("Q = " + s.lattice().describe(sylows[0]));
    }
  }
  add(r, "quaternion_branch", quaternion);
  if (quaternion) {
    const bool iso = are_isomorphic(g, sl23());
    add(r, "isomorphic_to_sl23", iso);
    quaternion = iso;
  }
  return pq2 || quaternion;
}

std::vector<SubIdx> maximal_indices(const SubgroupLattice& lat) { return lat.lower_covers(lat.top()); }

bool normalizes(const Group& g, const SubgroupSet& a, const SubgroupSet& by) {
  return by.is_subset_of(normalizer(g, a));
}

// ---- modular subgroup structure ----------------------------------------------

struct ModularFacts {
  bool core_quotient_nilpotent = false;
  bool closure_in_hypercentre = false;
  bool trivial_core = false;
  bool decomposition_found = true;
  std::string decomposition;
};

std::string decomposition_search(const GroupStudy& s, SubIdx m_idx, bool& found) {
  const Group& g = s.group();
  const auto& lat = s.lattice();
  const auto& m = lat.subgroup(m_idx);

  std::vector<SubIdx> halls;
  for (SubIdx i : lat.normal_indices()) {
    const auto ord = lat.order_of(i);
    if (std::gcd(ord, g.order() / ord) == 1) halls.push_back(i);
  }
  auto hall_of_order = [&](std::size_t ord) -> std::optional<SubIdx> {
    for (SubIdx i : halls)
      if (lat.order_of(i) == ord) return i;
    return std::nullopt;
  };

  std::vector<SubIdx> candidates;
  for (SubIdx i : halls) {
    if (lat.order_of(i) == 1) continue;
    const auto& sset = lat.subgroup(i);
    const auto inner = m & sset;
    if (inner.size() <= 1) continue;
    const auto inner_primes = PrimeSet::of(inner.size());
    if (inner_primes.size() != 1 || pi_part(sset.size(), inner_primes) != inner.size()) continue;
    if (normalizes(g, inner, sset)) continue;
    const auto local = subgroup_as_group(g, sset).group;
    if (is_abelian(local) || !is_p_group_schmidt(local)) continue;
    candidates.push_back(i);
  }

  // subsets by size, then lexicographically
  const std::size_t k = candidates.size();
  std::vector<std::uint32_t> masks(std::size_t{1} << k);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (std::uint32_t mask : masks) {
    std::size_t product = 1;
    std::size_t m_product = 1;
    bool coprime = true;
    std::vector<SubIdx> chosen;
    for (std::size_t b = 0; b < k; ++b) {
      if (!(mask >> b & 1u)) continue;
      const auto ord = lat.order_of(candidates[b]);
      if (std::gcd(ord, product) != 1) coprime = false;
      product *= ord;
      m_product *= (m & lat.subgroup(candidates[b])).size();
      chosen.push_back(candidates[b]);
    }
    if (!coprime) continue;
    const auto k_idx = hall_of_order(g.order() / product);
    if (!k_idx) continue;
    const auto m_in_k = m & lat.subgroup(*k_idx);
    if (m_product * m_in_k.size() != m.size()) continue;
    if (!is_quasinormal(lat, lat.index_of(m_in_k))) continue;
    found = true;
    std::string text;
    for (SubIdx c : chosen) text += "S=" + lat.describe(c) + " ";
    return text + "K=" + lat.describe(*k_idx);
  }
  found = false;
  return {};
}

ModularFacts modular_facts(const GroupStudy& s, SubIdx m_idx) {
  const Group& g = s.group();
  const auto& lat = s.lattice();
  const auto& m = lat.subgroup(m_idx);
  ModularFacts f;
  const auto c = core(g, m);
  const auto closure = normal_closure(g, m);
  f.core_quotient_nilpotent = is_nilpotent_section(g, m, c);
  const SubIdx ci = lat.index_of(c);
  const GroupStudy& q = s.quotient_study(ci);
  f.closure_in_hypercentre =
      image_of(closure, s.projection(ci), q.group().order()).is_subset_of(q.hypercyclic_center());
  f.trivial_core = c.size() == 1;
  if (f.trivial_core) f.decomposition = decomposition_search(s, m_idx, f.decomposition_found);
  return f;
}

}  // namespace

// ---- census --------------------------------------------------------------------

ModularityCensus census(const GroupStudy& s) {
  ModularityCensus c;
  c.group_name = s.group().name();
  for (int n = 1; n <= s.lattice().longest_chain(); ++n) {
    CensusRow row;
    row.n = n;
    for (SubIdx i : n_maximal_set(s.lattice(), n)) {
      ++row.count;
      if (s.modular(i)) ++row.modular;
      if (s.s_quasinormal(i)) ++row.s_quasinormal;
      if (!s.modular_or_sq(i)) ++row.neither;
    }
    if (!c.min_n_all_modular && row.modular == row.count) c.min_n_all_modular = n;
    c.rows.push_back(row);
  }
  return c;
}

// ---- n-indexed results -------------------------------------------------------

VerdictReport verify_theorem_A(const GroupStudy& s, int n, const VerifyOptions& opt) {
  return depth_theorem(s, "ThmA", n, SubPred::modular, 0, opt, false);
}

VerdictReport verify_theorem_2_12(const GroupStudy& s, int n, const VerifyOptions& opt) {
  return depth_theorem(s, "Thm2.12", n, SubPred::modular_or_sq, 0, opt, false);
}

VerdictReport verify_theorem_B(const GroupStudy& s, int n, const VerifyOptions& opt) {
  return depth_theorem(s, "ThmB", n, SubPred::modular, 1, opt, true);
}

VerdictReport verify_theorem_3_4(const GroupStudy& s, int n, const VerifyOptions& opt) {
  return depth_theorem(s, "Thm3.4", n, SubPred::modular_or_sq, 1, opt, true);
}

VerdictReport verify_lemma_3_3(const GroupStudy& s, int n, const VerifyOptions& opt) {
  if (n < 1) throw Error(Errc::bad_depth, "n must be at least 1, got " + std::to_string(n));
  VerdictReport r = start(s, "Lem3.3", n);
  r.hypothesis = depth_hypothesis(r, s, n, SubPred::modular_or_sq, static_cast<int>(s.primes().size()) + 1);
  conclude(r, opt, [&] {
    const auto& orderings = s.profile().dispersive_orderings;
    add(r, "phi_dispersive", !orderings.empty());
    if (!orderings.empty()) {
      std::string phi;
      for (auto p : orderings.front()) phi += (phi.empty() ? "" : ",") + std::to_string(p);
      r.witnesses.push_back("phi = (" + phi + ")");
    }
    return !orderings.empty();
  });
  return r;
}

VerdictReport verify_lemma_2_4(const GroupStudy& s, int n, const VerifyOptions& opt) {
  if (n < 1) throw Error(Errc::bad_depth, "n must be at least 1, got " + std::to_string(n));
  VerdictReport r = start(s, "Lem2.4", n);
  const auto& lat = s.lattice();
  std::vector<SubIdx> minimal;
  for (SubIdx i : minimal_normals(lat))
    if (i != lat.top()) minimal.push_back(i);
  r.hypothesis = depth_hypothesis(r, s, n, SubPred::modular_or_sq, std::nullopt);
  if (r.hypothesis == HypothesisStatus::holds && minimal.empty()) r.hypothesis = HypothesisStatus::vacuous;

  conclude(r, opt, [&] {
    // smallest admissible r, so the bound on m is tightest
    const int slack = n - static_cast<int>(s.primes().size());
    bool all_ok = true;
    bool proof_m_ok = true;
    for (SubIdx ni : minimal) {
      const GroupStudy& q = s.quotient_study(ni);
      const int bound = static_cast<int>(q.primes().size()) + slack;
      auto admissible = [&](int m) {
        if (m < 0 || m > n || m > bound) return false;
        return m == 0 || tally(q, m, SubPred::modular_or_sq).all;
      };
      const auto primes_n = PrimeSet::of(lat.order_of(ni));
      const bool sylow = primes_n.size() == 1 && pi_part(s.group().order(), primes_n) == lat.order_of(ni);
      int m = n - 1;
      if (!sylow) m = n_maximal_set(q.lattice(), n).empty() ? q.lattice().longest_chain() : n;
      bool ok = admissible(m);
      if (!ok) {
        proof_m_ok = false;
        for (int alt = 1; alt <= n && !ok; ++alt)
          if (admissible(alt)) {
            ok = true;
            m = alt;
          }
      }
      if (ok)
        r.witnesses.push_back("N=" + lat.describe(ni) + " m=" + std::to_string(m));
      else
        r.witnesses.push_back("N=" + lat.describe(ni) + " has no admissible m");
      all_ok = all_ok && ok;
    }
    add(r, "proof_m_admissible", proof_m_ok);
    add(r, "admissible_m_exists", all_ok);
    return all_ok;
  });
  return r;
}

// ---- propositions and corollaries ----------------------------------------------

VerdictReport verify_prop_2_9(const GroupStudy& s) {
  VerdictReport r = start(s, "Prop2.9");
  const auto& lat = s.lattice();
  r.hypothesis = HypothesisStatus::holds;
  const bool nn = s.profile().nearly_nilpotent;

  const bool contained = !nn || s.profile().strongly_supersoluble;
  add(r, "nearly_nilpotent_implies_strongly_supersoluble", contained);

  bool quotients = true;
  if (nn)
    for (SubIdx ni : lat.normal_indices())
      if (!s.quotient_study(ni).profile().nearly_nilpotent) {
        quotients = false;
        r.witnesses.push_back("G/" + lat.describe(ni) + " is not nearly nilpotent");
      }
  add(r, "quotients_nearly_nilpotent", quotients);

  const SubIdx phi = lat.index_of(frattini(lat));
  const bool lift = !s.quotient_study(phi).profile().nearly_nilpotent || nn;
  add(r, "frattini_quotient_lifts", lift);

  bool all_cores = true;
  for (SubIdx m : maximal_indices(lat)) {
    const SubIdx ci = lat.index_of(core(s.group(), lat.subgroup(m)));
    if (!s.quotient_study(ci).profile().nearly_nilpotent) all_cores = false;
  }
  const bool schunck = !all_cores || nn;
  add(r, "schunck_closure", schunck);

  r.conclusion = verdict(contained && quotients && lift && schunck);
  return r;
}

VerdictReport verify_prop_2_11(const GroupStudy& s, const VerifyOptions& opt) {
  VerdictReport r = start(s, "Prop2.11");
  const Tally t1 = tally(s, 1, SubPred::modular_or_sq);
  const Tally t2 = tally(s, 2, SubPred::modular_or_sq);
  add(r, "maximal_all_modular_or_s_quasinormal", t1.all);
  add(r, "two_maximal_all_modular_or_s_quasinormal", t2.all);
  if ((t1.all && !t1.empty) || (t2.all && !t2.empty))
    r.hypothesis = HypothesisStatus::holds;
  else if (t1.all || t2.all)
    r.hypothesis = HypothesisStatus::vacuous;
  else
    r.hypothesis = HypothesisStatus::fails;
  conclude(r, opt, [&] {
    const bool nn = s.profile().nearly_nilpotent;
    const bool us = s.profile().strongly_supersoluble;
    add(r, "nearly_nilpotent", nn);
    add(r, "strongly_supersoluble", us);
    return nn && us;
  });
  return r;
}

namespace {

VerdictReport three_maximal_check(const GroupStudy& s, std::string id, SubPred p, const VerifyOptions& opt) {
  VerdictReport r = start(s, std::move(id));
  const Tally t = tally(s, 3, p);
  const bool not_ss = !s.profile().supersoluble;
  add(r, std::string("three_maximal_all_") + pred_name(p), t.all);
  add(r, "not_supersoluble", not_ss);
  r.hypothesis = status_of(t.all && not_ss, t.empty);
  conclude(r, opt, [&] { return pq2_or_quaternion(r, s); });
  return r;
}

VerdictReport two_maximal_check(const GroupStudy& s, std::string id, SubPred p, bool nearly,
                                const VerifyOptions& opt) {
  VerdictReport r = start(s, std::move(id));
  const Tally t = tally(s, 2, p);
  add(r, std::string("two_maximal_all_") + pred_name(p), t.all);
  for (SubIdx i : t.offenders) r.witnesses.push_back(s.lattice().describe(i) + " is not " + pred_name(p));
  r.hypothesis = status_of(t.all, t.empty);
  conclude(r, opt, [&] {
    const bool v = nearly ? s.profile().nearly_nilpotent : s.profile().supersoluble;
    add(r, nearly ? "nearly_nilpotent" : "supersoluble", v);
    return v;
  });
  return r;
}

}  // namespace

VerdictReport verify_prop_3_2(const GroupStudy& s, const VerifyOptions& opt) {
  return three_maximal_check(s, "Prop3.2", SubPred::modular_or_sq, opt);
}

namespace {

VerdictReport corollary(const GroupStudy& s, int k, const VerifyOptions& opt) {
  switch (k) {
    case 1: return two_maximal_check(s, "Cor4.1", SubPred::modular, true, opt);
    case 2: return two_maximal_check(s, "Cor4.2", SubPred::s_quasinormal, true, opt);
    case 3: return two_maximal_check(s, "Cor4.3", SubPred::s_quasinormal, false, opt);
    default: return three_maximal_check(s, "Cor4.4", SubPred::modular, opt);
  }
}

}  // namespace

std::vector<VerdictReport> verify_corollaries(const GroupStudy& s, const VerifyOptions& opt) {
  return {corollary(s, 1, opt), corollary(s, 2, opt), corollary(s, 3, opt), corollary(s, 4, opt)};
}

// ---- lemmas --------------------------------------------------------------------

VerdictReport verify_lemma_2_1(const GroupStudy& s, SubIdx m) {
  VerdictReport r = start(s, "Lem2.1");
  r.hypothesis = s.modular(m) ? HypothesisStatus::holds : HypothesisStatus::fails;
  const auto f = modular_facts(s, m);
  add(r, "core_quotient_nilpotent", f.core_quotient_nilpotent);
  add(r, "closure_in_hypercyclic_centre", f.closure_in_hypercentre);
  add(r, "trivial_core", f.trivial_core);
  add(r, "decomposition_found", f.decomposition_found);
  if (f.trivial_core && f.decomposition_found)
    r.witnesses.push_back(s.lattice().describe(m) + ": " + f.decomposition);
  r.conclusion = verdict(f.core_quotient_nilpotent && f.closure_in_hypercentre && f.decomposition_found);
  return r;
}

VerdictReport verify_lemma_2_1(const GroupStudy& s) {
  VerdictReport r = start(s, "Lem2.1");
  r.hypothesis = HypothesisStatus::holds;
  const auto& lat = s.lattice();
  bool nil = true, hyper = true, decomp = true;
  for (SubIdx m = 0; m < lat.size(); ++m) {
    if (!s.modular(m)) continue;
    const auto f = modular_facts(s, m);
    if (!f.core_quotient_nilpotent) r.witnesses.push_back(lat.describe(m) + ": M/M_G not nilpotent");
    if (!f.closure_in_hypercentre) r.witnesses.push_back(lat.describe(m) + ": M^G/M_G escapes Z_U");
    if (!f.decomposition_found) r.witnesses.push_back(lat.describe(m) + ": no decomposition");
    if (f.trivial_core && f.decomposition_found && f.decomposition.find("S=") != std::string::npos)
      r.witnesses.push_back(lat.describe(m) + ": " + f.decomposition);
    nil = nil && f.core_quotient_nilpotent;
    hyper = hyper && f.closure_in_hypercentre;
    decomp = decomp && f.decomposition_found;
  }
  add(r, "core_quotient_nilpotent", nil);
  add(r, "closure_in_hypercyclic_centre", hyper);
  add(r, "decomposition_found", decomp);
  r.conclusion = verdict(nil && hyper && decomp);
  return r;
}

VerdictReport verify_lemma_2_2(const GroupStudy& s) {
  VerdictReport r = start(s, "Lem2.2");
  r.hypothesis = HypothesisStatus::holds;
  const Group& g = s.group();
  const auto& lat = s.lattice();
  std::vector<SubIdx> modular;
  for (SubIdx i = 0; i < lat.size(); ++i)
    if (s.modular(i)) modular.push_back(i);

  bool joins = true;
  for (SubIdx a : modular)
    for (SubIdx b : modular)
      if (!s.modular(lat.join(a, b))) {
        joins = false;
        r.witnesses.push_back("join of " + lat.describe(a) + " and " + lat.describe(b) + " not modular");
      }
  add(r, "join_modular", joins);

  bool images = true, normals = true;
  for (SubIdx ni : lat.normal_indices()) {
    if (!s.modular(ni)) {
      normals = false;
      r.witnesses.push_back(lat.describe(ni) + " is normal but not modular");
    }
    const GroupStudy& q = s.quotient_study(ni);
    for (SubIdx a : modular)
      if (!q.modular(s.image_index(ni, lat.join(a, ni)))) {
        images = false;
        r.witnesses.push_back(lat.describe(a) + " image modulo " + lat.describe(ni) + " not modular");
      }
  }
  add(r, "quotient_image_modular", images);
  add(r, "normal_modular", normals);

  bool restriction = true;
  for (SubIdx a : modular)
    for (SubIdx b = a; b < lat.size(); ++b)
      if (lat.leq(a, b) && !is_modular_in(lat, a, b)) {
        restriction = false;
        r.witnesses.push_back(lat.describe(a) + " not modular in " + lat.describe(b));
      }
  add(r, "restriction_modular", restriction);

  // transport through a relabelling isomorphism
  std::vector<Elem> relabel(g.order());
  for (Elem x = 0; x < g.order(); ++x) relabel[x] = x == 0 ? 0 : static_cast<Elem>(g.order() - x);
  const SubgroupLattice other(relabeled(g, relabel));
  bool invariant = true;
  for (SubIdx i = 0; i < lat.size(); ++i) {
    const SubIdx j = other.index_of(image_of(lat.subgroup(i), relabel, g.order()));
    if (is_modular_subgroup(other, j) != s.modular(i)) {
      invariant = false;
      r.witnesses.push_back(lat.describe(i) + " modularity changes under relabelling");
    }
  }
  add(r, "isomorphism_invariant", invariant);

  r.conclusion = verdict(joins && images && normals && restriction && invariant);
  return r;
}

VerdictReport verify_lemma_2_3(const GroupStudy& s) {
  VerdictReport r = start(s, "Lem2.3");
  r.hypothesis = HypothesisStatus::holds;
  const Group& g = s.group();
  const auto& lat = s.lattice();

  bool restriction = true, subnormal = true, nilpotent = true;
  for (SubIdx h = 0; h < lat.size(); ++h) {
    if (!s.s_quasinormal(h)) continue;
    for (SubIdx k = h; k < lat.size(); ++k)
      if (lat.leq(h, k) && !is_s_quasinormal_in(lat, h, k)) {
        restriction = false;
        r.witnesses.push_back(lat.describe(h) + " not S-quasinormal in " + lat.describe(k));
      }
    if (!is_subnormal(lat, h)) {
      subnormal = false;
      r.witnesses.push_back(lat.describe(h) + " not subnormal");
    }
    const auto& hs = lat.subgroup(h);
    if (!is_nilpotent_section(g, normal_closure(g, hs), core(g, hs))) {
      nilpotent = false;
      r.witnesses.push_back(lat.describe(h) + ": H^G/H_G not nilpotent");
    }
  }

  bool correspondence = true;
  for (SubIdx ni : lat.normal_indices()) {
    const GroupStudy& q = s.quotient_study(ni);
    for (SubIdx k = ni; k < lat.size(); ++k)
      if (lat.leq(ni, k) && q.s_quasinormal(s.image_index(ni, k)) != s.s_quasinormal(k)) {
        correspondence = false;
        r.witnesses.push_back(lat.describe(k) + " modulo " + lat.describe(ni) + " breaks the correspondence");
      }
  }
  add(r, "restriction_s_quasinormal", restriction);
  add(r, "quotient_correspondence", correspondence);
  add(r, "subnormal", subnormal);
  add(r, "closure_over_core_nilpotent", nilpotent);
  r.conclusion = verdict(restriction && correspondence && subnormal && nilpotent);
  return r;
}

VerdictReport verify_lemma_2_5(const GroupStudy& s) {
  VerdictReport r = start(s, "Lem2.5");
  r.hypothesis = HypothesisStatus::holds;
  const Group& g = s.group();
  const auto& lat = s.lattice();
  const bool us = s.profile().strongly_supersoluble;

  std::map<SubIdx, bool> quotient_us;
  for (SubIdx ni : lat.normal_indices())
    quotient_us[ni] = is_strongly_supersoluble(s.quotient_study(ni).group());

  bool subgroups = true, quotients = true, intersections = true;
  if (us) {
    for (SubIdx i = 0; i < lat.size(); ++i)
      if (!is_strongly_supersoluble(subgroup_as_group(g, lat.subgroup(i)).group)) {
        subgroups = false;
        r.witnesses.push_back(lat.describe(i) + " not strongly supersoluble");
      }
    for (const auto& [ni, ok] : quotient_us)
      if (!ok) {
        quotients = false;
        r.witnesses.push_back("G/" + lat.describe(ni) + " not strongly supersoluble");
      }
  }
  for (const auto& [a, ua] : quotient_us)
    for (const auto& [b, ub] : quotient_us)
      if (ua && ub && !quotient_us.at(lat.meet(a, b))) {
        intersections = false;
        r.witnesses.push_back("G/(" + lat.describe(a) + " meet " + lat.describe(b) + ") not strongly supersoluble");
      }
  const SubIdx phi = lat.index_of(frattini(lat));
  const bool saturated = !quotient_us.at(phi) || us;
  add(r, "subgroup_closed", subgroups);
  add(r, "quotient_closed", quotients);
  add(r, "intersection_closed", intersections);
  add(r, "saturated", saturated);
  r.conclusion = verdict(subgroups && quotients && intersections && saturated);
  return r;
}

VerdictReport verify_lemma_2_6(const GroupStudy& s, const VerifyOptions& opt) {
  VerdictReport r = start(s, "Lem2.6");
  const auto& prof = s.profile();
  add(r, "u_critical", prof.u_critical);
  r.hypothesis = prof.u_critical ? HypothesisStatus::holds : HypothesisStatus::fails;
  conclude(r, opt, [&] {
    const Group& g = s.group();
    const auto& lat = s.lattice();

    const bool c1 = prof.soluble && s.primes().size() <= 3;
    const bool c2 = prof.schmidt_group || prof.ore_dispersive;

    const SubgroupSet gu = residual_u(g);
    const SubIdx gi = lat.index_of(gu);
    r.witnesses.push_back("G^U = " + lat.describe(gi));
    const auto gu_primes = PrimeSet::of(gu.size());
    const bool p_group = gu_primes.size() == 1;
    const bool c3 = p_group && pi_part(g.order(), gu_primes) == gu.size();

    // complements S and S/(S ∩ Φ(G))
    const auto phi_g = frattini(lat);
    bool any_complement = false, c4 = true;
    for (SubIdx si = 0; si < lat.size(); ++si) {
      const auto& sset = lat.subgroup(si);
      if (sset.size() * gu.size() != g.order() || (sset & gu).size() != 1) continue;
      any_complement = true;
      const auto bottom = sset & phi_g;
      const auto quotient_order = sset.size() / bottom.size();
      if (is_cyclic_section(g, sset, bottom) && PrimeSet::of(quotient_order).size() <= 1) continue;
      const auto local = subgroup_as_group(g, sset);
      const auto section = quotient(local.group, preimage_of(bottom, local.embedding)).group;
      if (!is_minimal_non_abelian(SubgroupLattice(section))) {
        c4 = false;
        r.witnesses.push_back("complement " + lat.describe(si) + " has the wrong shape");
      }
    }
    c4 = c4 && any_complement;

    const auto phi_gu = frattini_of(lat, gi);
    const SubIdx pi = lat.index_of(phi_gu);
    bool chief = lat.is_normal(pi) && pi != gi;
    for (SubIdx ni : lat.normal_indices())
      if (ni != pi && ni != gi && lat.leq(pi, ni) && lat.leq(ni, gi)) chief = false;
    const bool c5 = chief && !is_cyclic_section(g, gu, phi_gu);

    const auto local = subgroup_as_group(g, gu);
    bool c6 = true;
    if (!is_abelian(local.group)) {
      const auto z = image_of(center(local.group), local.embedding, g.order());
      const auto d = image_of(derived_subgroup(local.group), local.embedding, g.order());
      c6 = z == d && d == phi_gu;
    }

    bool c7 = false;
    if (p_group) {
      std::size_t exponent = 1;
      for (Elem x : gu.members()) exponent = std::lcm(exponent, g.element_order(x));
      c7 = gu_primes.primes()[0] > 2 ? exponent == gu_primes.primes()[0] : exponent <= 4;
    }

    add(r, "soluble_at_most_three_primes", c1);
    add(r, "ore_dispersive_unless_schmidt", c2);
    add(r, "residual_normal_sylow", c3);
    add(r, "complement_shape", c4);
    add(r, "residual_frattini_quotient_noncyclic_chief", c5);
    add(r, "nonabelian_residual_series_coincide", c6);
    add(r, "residual_exponent", c7);
    return c1 && c2 && c3 && c4 && c5 && c6 && c7;
  });
  return r;
}

VerdictReport verify_lemma_2_7(const GroupStudy& s) {
  VerdictReport r = start(s, "Lem2.7");
  const Group& g = s.group();
  const auto& lat = s.lattice();
  bool any = false, all_iso = true;
  for (const auto& f : s.chief_factors()) {
    if (!commutator_subgroup(g, f.upper, f.upper).is_subset_of(f.lower)) continue;

    std::optional<Group> semidirect;
    std::map<SubIdx, bool> by_core;
    for (SubIdx m : maximal_indices(lat)) {
      const auto& ms = lat.subgroup(m);
      if (!f.lower.is_subset_of(ms) || f.upper.is_subset_of(ms)) continue;
      any = true;
      const SubIdx ci = lat.index_of(core(g, ms));
      if (by_core.count(ci)) continue;

      if (!semidirect) {
        const auto cent = factor_centralizer(g, f.lower, f.upper);
        const auto top = quotient(g, cent);
        const auto local = subgroup_as_group(g, f.upper);
        const auto bottom = quotient(local.group, preimage_of(f.lower, local.embedding));
        std::vector<Elem> to_local(g.order(), 0);
        for (Elem x = 0; x < local.embedding.size(); ++x) to_local[local.embedding[x]] = x;
        std::vector<Elem> top_rep(top.group.order(), 0), bottom_rep(bottom.group.order(), 0);
        for (Elem x = static_cast<Elem>(g.order()); x-- > 0;) top_rep[top.projection[x]] = x;
        for (Elem x = static_cast<Elem>(local.group.order()); x-- > 0;) bottom_rep[bottom.projection[x]] = x;
        std::vector<std::vector<Elem>> action(top.group.order(), std::vector<Elem>(bottom.group.order()));
        for (Elem c = 0; c < top.group.order(); ++c)
          for (Elem a = 0; a < bottom.group.order(); ++a)
            action[c][a] = bottom.projection[to_local[g.conj(top_rep[c], local.embedding[bottom_rep[a]])]];
        semidirect = semidirect_product(bottom.group, top.group, action);
      }
      const bool iso = are_isomorphic(*semidirect, s.quotient_study(ci).group());
      by_core[ci] = iso;
      if (!iso) {
        all_iso = false;
        r.witnesses.push_back(factor_desc(lat, f) + " with " + lat.describe(m));
      }
    }
  }
  add(r, "primitive_quotient_isomorphic", all_iso);
  r.hypothesis = any ? HypothesisStatus::holds : HypothesisStatus::vacuous;
  r.conclusion = verdict(all_iso);
  return r;
}

VerdictReport verify_lemma_2_10(const GroupStudy& s) {
  VerdictReport r = start(s, "Lem2.10");
  const Group& g = s.group();
  const auto& lat = s.lattice();
  const auto& prof = s.profile();
  bool any = false, c1 = true, c2 = true;
  if (prof.soluble && !prof.nearly_nilpotent) {
    for (SubIdx ri : minimal_normals(lat)) {
      const auto& rs = lat.subgroup(ri);
      if (!(centralizer(g, rs) == rs)) continue;
      for (SubIdx mi : maximal_indices(lat)) {
        if (lat.meet(mi, ri) != lat.bottom() || lat.order_of(mi) * lat.order_of(ri) != g.order()) continue;
        any = true;
        r.witnesses.push_back("R=" + lat.describe(ri) + " M=" + lat.describe(mi));
        for (SubIdx t = 1; t < mi; ++t)
          if (lat.leq(t, mi) && s.modular_or_sq(t)) {
            c1 = false;
            r.witnesses.push_back(lat.describe(t) + " < M is modular or S-quasinormal");
          }
        if (!is_prime(lat.order_of(mi))) continue;
        for (SubIdx t = 1; t < ri; ++t) {
          if (!lat.leq(t, ri)) continue;
          bool found = false;
          for (SubIdx v = 1; v < ri && !found; ++v)
            if (lat.leq(v, ri) && lat.order_of(v) == lat.order_of(t) && !s.modular_or_sq(v)) found = true;
          if (!found) {
            c2 = false;
            r.witnesses.push_back("every subgroup of R of order " + std::to_string(lat.order_of(t)) +
                                  " is modular or S-quasinormal");
          }
        }
      }
    }
  }
  add(r, "point_stabiliser_subgroups_excluded", c1);
  add(r, "prime_complement_sizes_excluded", c2);
  r.hypothesis = any ? HypothesisStatus::holds : HypothesisStatus::vacuous;
  r.conclusion = verdict(c1 && c2);
  return r;
}

VerdictReport verify_lemma_3_1(const GroupStudy& s) {
  VerdictReport r = start(s, "Lem3.1");
  r.hypothesis = HypothesisStatus::holds;
  const auto& lat = s.lattice();
  const auto normals = lat.normal_indices();

  auto restricted = [](const PrimeOrdering& phi, const Group& q) {
    const auto primes = prime_spectrum(q);
    PrimeOrdering out;
    for (auto p : phi)
      if (primes.contains(p)) out.push_back(p);
    return out;
  };

  bool quotients = true, intersections = true, saturated = true;
  PrimeOrdering phi = s.primes().primes();
  do {
    std::map<SubIdx, bool> disp;
    for (SubIdx ni : normals) {
      const Group& q = s.quotient_study(ni).group();
      disp[ni] = is_phi_dispersive(q, restricted(phi, q));
    }
    const bool whole = disp.at(lat.bottom());
    if (whole)
      for (const auto& [ni, ok] : disp) quotients = quotients && ok;
    for (const auto& [a, da] : disp)
      for (const auto& [b, db] : disp)
        if (da && db && !disp.at(lat.meet(a, b))) intersections = false;
    if (disp.at(lat.index_of(frattini(lat))) && !whole) saturated = false;
  } while (std::next_permutation(phi.begin(), phi.end()));

  add(r, "quotient_closed", quotients);
  add(r, "intersection_closed", intersections);
  add(r, "saturated", saturated);
  r.conclusion = verdict(quotients && intersections && saturated);
  return r;
}

// ---- sharpness -------------------------------------------------------------------

VerdictReport verify_sharpness_A(const GroupStudy& s) {
  constexpr int n = 3;
  VerdictReport r = start(s, "Sharp.ThmA", n);
  const auto& lat = s.lattice();
  const auto set = n_maximal_set(lat, n);
  const Tally t = tally(s, n, SubPred::modular);
  const bool soluble = s.profile().soluble;
  add(r, "soluble", soluble);
  add(r, "n_maximal_all_modular", t.all);
  r.hypothesis = status_of(soluble && t.all, t.empty);

  const bool trivial_only = set == std::vector<SubIdx>{lat.bottom()};
  const bool exceeded = n > static_cast<int>(s.primes().size());
  const bool not_ss = !s.profile().supersoluble;
  add(r, "n_maximal_set_is_trivial", trivial_only);
  add(r, "bound_exceeded", exceeded);
  add(r, "not_supersoluble", not_ss);
  r.witnesses.push_back("|pi(G)| = " + std::to_string(s.primes().size()) + " < n = 3");
  for (SubIdx i : set) r.witnesses.push_back("3-maximal " + lat.describe(i));
  r.conclusion = verdict(trivial_only && exceeded && not_ss);
  return r;
}

VerdictReport verify_sharpness_B(const GroupStudy& s) {
  constexpr int n = 4;
  VerdictReport r = start(s, "Sharp.ThmB", n);
  const auto& lat = s.lattice();
  const Tally t = tally(s, n, SubPred::modular);
  const bool soluble = s.profile().soluble;
  add(r, "soluble", soluble);
  add(r, "n_maximal_all_modular", t.all);
  r.hypothesis = status_of(soluble && t.all, t.empty);

  const int bound = static_cast<int>(s.primes().size()) + 1;
  const auto& res = s.residual_us();
  const bool klein = res.size() == 4 && !is_cyclic_section(s.group(), res, s.group().trivial());
  const bool order = s.group().order() == 24;
  const bool not_hall = !is_nilpotent_hall(s.group(), res);
  const auto c = census(s);
  const bool min_exceeds = c.min_n_all_modular && *c.min_n_all_modular > bound;
  add(r, "bound_exceeded", n > bound);
  add(r, "residual_is_klein_four", klein);
  add(r, "group_order_24", order);
  add(r, "residual_not_nilpotent_hall", not_hall);
  add(r, "min_n_all_modular_exceeds_bound", min_exceeds);
  r.witnesses.push_back("G^Us = " + lat.describe(lat.index_of(res)));
  if (c.min_n_all_modular)
    r.witnesses.push_back("min n with all n-maximal modular = " + std::to_string(*c.min_n_all_modular));
  r.conclusion = verdict(n > bound && klein && order && not_hall && min_exceeds);
  return r;
}

// ---- dispatch ----------------------------------------------------------------------

namespace {

const std::vector<std::string>& theorem_group() {
  static const std::vector<std::string> ids{"ThmA",     "Thm2.12",  "ThmB",   "Thm3.4", "Prop2.9", "Prop2.11",
                                            "Prop3.2",  "Cor4.1",   "Cor4.2", "Cor4.3", "Cor4.4"};
  return ids;
}

const std::vector<std::string>& lemma_group() {
  static const std::vector<std::string> ids{"Lem2.1", "Lem2.2", "Lem2.3",  "Lem2.4", "Lem2.5",
                                            "Lem2.6", "Lem2.7", "Lem2.10", "Lem3.1", "Lem3.3"};
  return ids;
}

const std::vector<std::string>& sharpness_group() {
  static const std::vector<std::string> ids{"Sharp.ThmA", "Sharp.ThmB"};
  return ids;
}

bool isomorphic_to(const Group& g, std::string_view spec) {
  const Group target = construct(spec);
  return g.order() == target.order() && are_isomorphic(g, target);
}

}  // namespace

std::vector<std::string> theorem_ids(const std::string& selector) {
  if (selector.empty()) return {};
  std::vector<std::string> out;
  auto append = [&](const std::vector<std::string>& ids) { out.insert(out.end(), ids.begin(), ids.end()); };
  if (selector == "all") {
    append(theorem_group());
    append(lemma_group());
    append(sharpness_group());
  } else if (selector == "theorems") {
    append(theorem_group());
  } else if (selector == "lemmas") {
    append(lemma_group());
  } else if (selector == "sharpness") {
    append(sharpness_group());
  } else {
    for (const auto* group : {&theorem_group(), &lemma_group(), &sharpness_group()})
      if (std::find(group->begin(), group->end(), selector) != group->end()) return {selector};
    throw Error(Errc::unknown_selector, "unknown theorem selector '" + selector + "'");
  }
  return out;
}

std::vector<VerdictReport> verify_group(const GroupStudy& s, const std::vector<std::string>& ids,
                                        const VerifyOptions& opt) {
  std::vector<VerdictReport> out;
  using clock = std::chrono::steady_clock;
  auto timed = [&](auto&& fn) {
    const auto t0 = clock::now();
    VerdictReport r = fn();
    if (opt.timing)
      r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    out.push_back(std::move(r));
  };
  auto per_depth = [&](auto check) {
    for (int n = 1; n <= s.max_depth(); ++n) timed([&] { return check(s, n, opt); });
  };

  for (const auto& id : ids) {
    if (id == "ThmA") per_depth(verify_theorem_A);
    else if (id == "Thm2.12") per_depth(verify_theorem_2_12);
    else if (id == "ThmB") per_depth(verify_theorem_B);
    else if (id == "Thm3.4") per_depth(verify_theorem_3_4);
    else if (id == "Lem3.3") per_depth(verify_lemma_3_3);
    else if (id == "Lem2.4") per_depth(verify_lemma_2_4);
    else if (id == "Prop2.9") timed([&] { return verify_prop_2_9(s); });
    else if (id == "Prop2.11") timed([&] { return verify_prop_2_11(s, opt); });
    else if (id == "Prop3.2") timed([&] { return verify_prop_3_2(s, opt); });
    else if (id.starts_with("Cor4.")) {
      timed([&] { return corollary(s, id.back() - '0', opt); });
    } else if (id == "Lem2.1") timed([&] { return verify_lemma_2_1(s); });
    else if (id == "Lem2.2") timed([&] { return verify_lemma_2_2(s); });
    else if (id == "Lem2.3") timed([&] { return verify_lemma_2_3(s); });
    else if (id == "Lem2.5") timed([&] { return verify_lemma_2_5(s); });
    else if (id == "Lem2.6") timed([&] { return verify_lemma_2_6(s, opt); });
    else if (id == "Lem2.7") timed([&] { return verify_lemma_2_7(s); });
    else if (id == "Lem2.10") timed([&] { return verify_lemma_2_10(s); });
    else if (id == "Lem3.1") timed([&] { return verify_lemma_3_1(s); });
    else if (id == "Sharp.ThmA") {
      if (isomorphic_to(s.group(), "A4")) timed([&] { return verify_sharpness_A(s); });
    } else if (id == "Sharp.ThmB") {
      if (isomorphic_to(s.group(), "A4xC2")) timed([&] { return verify_sharpness_B(s); });
    } else {
      throw Error(Errc::unknown_selector, "unknown theorem id '" + id + "'");
    }
  }
  return out;
}

}  // namespace modlat
