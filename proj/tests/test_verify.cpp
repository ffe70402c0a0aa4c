#include <doctest.h>

#include <algorithm>

#include "modlat/catalog.hpp"
#include "modlat/suite.hpp"
#include "modlat/verify.hpp"

using namespace modlat;

namespace {

using H = HypothesisStatus;
using C = ConclusionStatus;

GroupStudy study(const char* name) { return GroupStudy(construct(name)); }

bool clause(const VerdictReport& r, const std::string& name) {
  for (const auto& c : r.clauses)
    if (c.name == name) return c.value;
  FAIL("missing clause " << name);
  return false;
}

}  // namespace

TEST_CASE("report labels") {
  VerdictReport r;
  r.theorem_id = "ThmA";
  r.n = 3;
  CHECK(r.label() == "ThmA[n=3]");
  CHECK(parse_label("ThmA[n=3]") == std::pair<std::string, int>{"ThmA", 3});
  r.n = 0;
  r.theorem_id = "Lem2.2";
  CHECK(r.label() == "Lem2.2");
  CHECK(parse_label("Lem2.2") == std::pair<std::string, int>{"Lem2.2", 0});
}

TEST_CASE("violation means hypothesis not failing and conclusion failing") {
  VerdictReport r;
  r.hypothesis = H::holds;
  r.conclusion = C::fails;
  CHECK(r.violates());
  r.hypothesis = H::vacuous;
  CHECK(r.violates());
  r.hypothesis = H::fails;
  CHECK_FALSE(r.violates());
  r.hypothesis = H::holds;
  r.conclusion = C::not_evaluated;
  CHECK_FALSE(r.violates());
}

TEST_CASE("census values") {
  const auto c7 = census(study("C7"));
  REQUIRE(c7.rows.size() == 1);
  CHECK(c7.rows[0] == CensusRow{1, 1, 1, 1, 0});
  CHECK(c7.min_n_all_modular == 1);

  const auto a4 = census(study("A4"));
  REQUIRE(a4.rows.size() == 3);
  CHECK(a4.rows[0].count == 5);
  CHECK(a4.rows[0].modular == 1);
  CHECK(a4.rows[1].count == 4);
  CHECK(a4.rows[2].count == 1);
  CHECK(a4.rows[2].modular == 1);
  CHECK(a4.min_n_all_modular == 3);

  CHECK(census(study("S3")).min_n_all_modular == 1);
  CHECK(census(study("A4xC2")).min_n_all_modular == 4);
  CHECK(census(study("1")).rows.empty());
}

TEST_CASE("census rows add up") {
  for (const char* name : {"S4", "SL23", "hol_C13", "S3xS3"}) {
    const auto c = census(study(name));
    for (const auto& row : c.rows) {
      CHECK(row.modular <= row.count);
      CHECK(row.s_quasinormal <= row.count);
      CHECK(row.neither <= row.count);
    }
  }
}

TEST_CASE("theorem A") {
  const auto s3 = study("S3");
  auto r = verify_theorem_A(s3, 2);
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);

  const auto a4 = study("A4");
  r = verify_theorem_A(a4, 3);
  CHECK(r.hypothesis == H::fails);
  CHECK(r.conclusion == C::fails);
  CHECK_FALSE(r.violates());

  r = verify_theorem_A(study("hol_C7"), 3);
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);

  r = verify_theorem_A(study("1"), 1);
  CHECK(r.conclusion == C::holds);
  CHECK_FALSE(r.violates());

  CHECK_THROWS_AS(verify_theorem_A(s3, 0), Error);
}

TEST_CASE("a pass of theorem A implies a pass of its nilpotent-residual form") {
  for (const auto& e : standard_suite()) {
    const GroupStudy s(construct(e.name));
    for (int n = 1; n <= s.max_depth(); ++n) {
      const auto a = verify_theorem_A(s, n);
      const auto b = verify_theorem_2_12(s, n);
      INFO(e.name << " n=" << n);
      if (a.hypothesis == H::holds) {
        CHECK(b.hypothesis != H::fails);
        CHECK(b.conclusion == C::holds);
      }
      CHECK_FALSE(a.violates());
      CHECK_FALSE(b.violates());
    }
  }
}

TEST_CASE("theorem B") {
  auto r = verify_theorem_B(study("A4"), 3);
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);

  r = verify_theorem_B(study("A4xC2"), 4);
  CHECK(r.hypothesis == H::fails);
  CHECK(r.conclusion == C::fails);

  r = verify_theorem_3_4(study("A4"), 3);
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);

  r = verify_theorem_B(study("A5"), 2);
  CHECK(r.hypothesis == H::fails);
}

TEST_CASE("modular-or-SQ maximal layers and their contrapositive") {
  auto r = verify_prop_2_11(study("S3"));
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);

  // strongly supersoluble but not nearly nilpotent, so some 1- or 2-maximal
  // subgroup is neither modular nor S-quasinormal
  r = verify_prop_2_11(study("hol_C7"));
  CHECK(r.hypothesis == H::fails);
  CHECK(r.conclusion == C::fails);

  r = verify_prop_2_11(study("Q8"));
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);
}

TEST_CASE("three-maximal classification branches") {
  auto r = verify_prop_3_2(study("A4"));
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);

  r = verify_prop_3_2(study("SL23"));
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);
  CHECK(clause(r, "isomorphic_to_sl23"));

  r = verify_prop_3_2(study("C5^2:C3"));
  CHECK(r.hypothesis == H::holds);
  CHECK(r.conclusion == C::holds);

  r = verify_prop_3_2(study("S3"));
  CHECK(r.hypothesis == H::fails);

  VerifyOptions fast;
  fast.fast = true;
  r = verify_prop_3_2(study("S3"), fast);
  CHECK(r.conclusion == C::not_evaluated);
}

TEST_CASE("corollaries") {
  const auto cs = verify_corollaries(study("SL23"));
  REQUIRE(cs.size() == 4);
  CHECK(cs[0].theorem_id == "Cor4.1");
  CHECK(cs[3].theorem_id == "Cor4.4");
  CHECK(cs[3].hypothesis == H::holds);
  CHECK(cs[3].conclusion == C::holds);
  for (const auto& r : verify_corollaries(study("1"))) CHECK_FALSE(r.violates());
  for (const auto& r : verify_corollaries(study("S4"))) CHECK_FALSE(r.violates());
}

TEST_CASE("modular subgroup structure per subgroup") {
  const auto s3 = study("S3");
  const auto& lat = s3.lattice();
  for (SubIdx i = 0; i < lat.size(); ++i) {
    const auto r = verify_lemma_2_1(s3, i);
    CHECK(r.hypothesis == H::holds);
    CHECK(r.conclusion == C::holds);
  }
  const auto a4 = study("A4");
  for (SubIdx i = 0; i < a4.lattice().size(); ++i) {
    const auto r = verify_lemma_2_1(a4, i);
    CHECK((r.hypothesis == H::holds) == a4.modular(i));
    CHECK_FALSE(r.violates());
  }
}

TEST_CASE("primitive structure is found where it exists") {
  for (const char* name : {"A4", "S4", "C5^2:C3", "hol_C5", "hol_C7", "hol_C13"}) {
    INFO(name);
    const auto r = verify_lemma_2_10(study(name));
    CHECK(r.hypothesis == H::holds);
    CHECK(r.conclusion == C::holds);
  }
  CHECK(verify_lemma_2_10(study("C6")).hypothesis == H::vacuous);
}

TEST_CASE("sharpness reports") {
  const auto a = verify_sharpness_A(study("A4"));
  CHECK(a.label() == "Sharp.ThmA[n=3]");
  CHECK(clause(a, "n_maximal_set_is_trivial"));
  CHECK(clause(a, "n_maximal_all_modular"));
  CHECK(clause(a, "bound_exceeded"));
  CHECK(clause(a, "not_supersoluble"));

  const auto b = verify_sharpness_B(study("A4xC2"));
  CHECK(b.label() == "Sharp.ThmB[n=4]");
  CHECK(clause(b, "residual_is_klein_four"));
  CHECK(clause(b, "residual_not_nilpotent_hall"));
  CHECK(clause(b, "min_n_all_modular_exceeds_bound"));

  CHECK(verify_group(study("S3"), theorem_ids("sharpness")).empty());
}

TEST_CASE("theorem selectors") {
  CHECK(theorem_ids("").empty());
  CHECK(theorem_ids("ThmA") == std::vector<std::string>{"ThmA"});
  CHECK(theorem_ids("sharpness").size() == 2);
  CHECK(theorem_ids("all").size() == theorem_ids("theorems").size() + theorem_ids("lemmas").size() + 2);
  try {
    theorem_ids("Thm9.9");
    FAIL("unknown id accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_selector);
  }
}

TEST_CASE("every lemma and theorem is sound on the suite") {
  const auto result = run_suite("all", "all", 4);
  CHECK(result.sound());
  CHECK(result.summary.fail == 0);
  CHECK(result.summary.pass > 0);
  for (const auto& r : result.reports) {
    INFO(r.group_name << " " << r.label());
    CHECK_FALSE(r.violates());
  }
  CHECK(summarize(result.reports) == result.summary);
}

TEST_CASE("suite scheduling does not change the output") {
  const auto one = run_suite("S3,A4,SL23,hol_C7", "all", 1);
  const auto many = run_suite("S3,A4,SL23,hol_C7", "all", 4);
  CHECK(one.reports == many.reports);
  CHECK(std::is_sorted(one.reports.begin(), one.reports.end(), [](const auto& a, const auto& b) {
    return std::tie(a.group_name, a.theorem_id, a.n) < std::tie(b.group_name, b.theorem_id, b.n);
  }));
}

TEST_CASE("suite selectors") {
  const auto none = run_suite("", "all");
  CHECK(none.reports.empty());
  CHECK(none.summary == SuiteSummary{});
  try {
    run_suite("S3,Nope", "all");
    FAIL("unknown group accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_selector);
  }
  const auto sharp = run_suite("all", "sharpness");
  REQUIRE(sharp.reports.size() == 2);
  for (const auto& r : sharp.reports) {
    CHECK(r.hypothesis == H::holds);
    CHECK(r.conclusion == C::holds);
  }
  CHECK(sharp.reports[0].group_name == "A4");
  CHECK(sharp.reports[1].group_name == "A4xC2");
}

TEST_CASE("fast mode skips conclusions under failed hypotheses") {
  VerifyOptions fast;
  fast.fast = true;
  const auto result = run_suite("A4,S4", "theorems", 1, fast);
  for (const auto& r : result.reports)
    if (r.hypothesis == H::fails) CHECK(r.conclusion == C::not_evaluated);
}
