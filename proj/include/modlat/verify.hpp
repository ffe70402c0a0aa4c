#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modlat/classify.hpp"
#include "modlat/group.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

enum class HypothesisStatus { holds, fails, vacuous };
enum class ConclusionStatus { holds, fails, not_evaluated };

std::string to_string(HypothesisStatus s);
std::string to_string(ConclusionStatus s);
HypothesisStatus parse_hypothesis_status(const std::string& s);
ConclusionStatus parse_conclusion_status(const std::string& s);

/// One named sub-claim of a check and whether it came out true.
struct Clause {
  std::string name;
  bool value = false;

  friend bool operator==(const Clause&, const Clause&) = default;
};

struct VerdictReport {
  std::string group_name;
  std::string theorem_id;
  /// Depth parameter for n-indexed results, 0 otherwise.
  int n = 0;
  HypothesisStatus hypothesis = HypothesisStatus::fails;
  ConclusionStatus conclusion = ConclusionStatus::not_evaluated;
  std::vector<Clause> clauses;
  std::vector<std::string> witnesses;
  std::int64_t elapsed_ms = 0;

  /// Hypothesis holds (or is vacuous) and the conclusion fails.
  bool violates() const noexcept {
    return hypothesis != HypothesisStatus::fails && conclusion == ConclusionStatus::fails;
  }
  /// "ThmA[n=3]" for n-indexed results, the bare id otherwise.
  std::string label() const;

  friend bool operator==(const VerdictReport&, const VerdictReport&) = default;
};

/// Splits a label produced by VerdictReport::label into id and n.
std::pair<std::string, int> parse_label(const std::string& label);

/// Per-group cache of everything the checks share. Not thread-safe: the lazy
/// parts (quotients, profile, residuals) fill in on first use.
class GroupStudy {
 public:
  explicit GroupStudy(Group g);

  const Group& group() const noexcept { return lattice_.group(); }
  const SubgroupLattice& lattice() const noexcept { return lattice_; }
  const PrimeSet& primes() const noexcept { return primes_; }

  bool modular(SubIdx i) const { return modular_[i] != 0; }
  bool s_quasinormal(SubIdx i) const { return s_quasinormal_[i] != 0; }
  bool modular_or_sq(SubIdx i) const { return modular(i) || s_quasinormal(i); }

  /// Largest n worth checking: max(longest chain, |π(G)| + 1), at least 1.
  int max_depth() const noexcept;

  const ClassProfile& profile() const;
  const std::vector<ChiefFactor>& chief_factors() const;
  const SubgroupSet& residual_us() const;
  const SubgroupSet& hypercyclic_center() const;

  /// Study of G/N for the normal subgroup at lattice index `normal`.
  const GroupStudy& quotient_study(SubIdx normal) const;
  /// Projection G -> G/N matching quotient_study(normal).
  const std::vector<Elem>& projection(SubIdx normal) const;
  /// Lattice index in G/N of the image of subgroup `sub`.
  SubIdx image_index(SubIdx normal, SubIdx sub) const;

 private:
  SubgroupLattice lattice_;
  PrimeSet primes_;
  std::vector<std::uint8_t> modular_;
  std::vector<std::uint8_t> s_quasinormal_;

  mutable std::optional<ClassProfile> profile_;
  mutable std::optional<std::vector<ChiefFactor>> chief_factors_;
  mutable std::optional<SubgroupSet> residual_us_;
  mutable std::optional<SubgroupSet> hypercyclic_center_;
  struct QuotientEntry {
    std::unique_ptr<GroupStudy> study;
    std::vector<Elem> projection;
  };
  mutable std::map<SubIdx, QuotientEntry> quotients_;
};

struct CensusRow {
  int n = 0;
  std::size_t count = 0;
  std::size_t modular = 0;
  std::size_t s_quasinormal = 0;
  std::size_t neither = 0;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct ModularityCensus {
  std::string group_name;
  std::vector<CensusRow> rows;  // n = 1 .. longest chain
  std::optional<int> min_n_all_modular;

  friend bool operator==(const ModularityCensus&, const ModularityCensus&) = default;
};

ModularityCensus census(const GroupStudy& s);

struct VerifyOptions {
  /// Skip conclusions whose hypothesis failed.
  bool fast = false;
  /// Record wall-clock time per report; otherwise elapsed_ms stays 0.
  bool timing = false;
};

// n-indexed results
VerdictReport verify_theorem_A(const GroupStudy& s, int n, const VerifyOptions& opt = {});
VerdictReport verify_theorem_2_12(const GroupStudy& s, int n, const VerifyOptions& opt = {});
VerdictReport verify_theorem_B(const GroupStudy& s, int n, const VerifyOptions& opt = {});
VerdictReport verify_theorem_3_4(const GroupStudy& s, int n, const VerifyOptions& opt = {});
VerdictReport verify_lemma_3_3(const GroupStudy& s, int n, const VerifyOptions& opt = {});
VerdictReport verify_lemma_2_4(const GroupStudy& s, int n, const VerifyOptions& opt = {});

VerdictReport verify_prop_2_9(const GroupStudy& s);
VerdictReport verify_prop_2_11(const GroupStudy& s, const VerifyOptions& opt = {});
VerdictReport verify_prop_3_2(const GroupStudy& s, const VerifyOptions& opt = {});
/// Cor4.1 .. Cor4.4, in that order.
std::vector<VerdictReport> verify_corollaries(const GroupStudy& s, const VerifyOptions& opt = {});

/// Every modular subgroup of G.
VerdictReport verify_lemma_2_1(const GroupStudy& s);
/// One subgroup; the hypothesis fails when m is not modular.
VerdictReport verify_lemma_2_1(const GroupStudy& s, SubIdx m);
VerdictReport verify_lemma_2_2(const GroupStudy& s);
VerdictReport verify_lemma_2_3(const GroupStudy& s);
VerdictReport verify_lemma_2_5(const GroupStudy& s);
VerdictReport verify_lemma_2_6(const GroupStudy& s, const VerifyOptions& opt = {});
VerdictReport verify_lemma_2_7(const GroupStudy& s);
VerdictReport verify_lemma_2_10(const GroupStudy& s);
VerdictReport verify_lemma_3_1(const GroupStudy& s);

/// A4 at n = 3: every other hypothesis of ThmA holds, the bound fails, and
/// the conclusion fails.
VerdictReport verify_sharpness_A(const GroupStudy& s);
/// A4 x C2 at n = 4: the same shape for ThmB.
VerdictReport verify_sharpness_B(const GroupStudy& s);

/// Theorem ids in a selector: "all", "theorems", "lemmas", "sharpness", a
/// single id, or "" (nothing). Throws Errc::unknown_selector.
std::vector<std::string> theorem_ids(const std::string& selector);

/// All reports for one group restricted to `ids`. Sharpness checks only run
/// on the groups they are about.
std::vector<VerdictReport> verify_group(const GroupStudy& s, const std::vector<std::string>& ids,
                                        const VerifyOptions& opt = {});

}  // namespace modlat
