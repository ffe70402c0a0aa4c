#include <doctest.h>

#include <algorithm>
#include <tuple>

#include "modlat/catalog.hpp"
#include "modlat/classify.hpp"
#include "oracles.hpp"

using namespace modlat;

namespace {

using FactorKey = std::tuple<std::size_t, std::size_t, bool>;

// Chief series built top-down by always stepping to the largest normal
// subgroup strictly below, and bottom-up by always stepping to the smallest
// normal subgroup strictly above. Jordan-Hölder says the factors agree.
std::vector<FactorKey> series_factors(const Group& g, bool top_down) {
  const auto normals = normal_subgroups(g);
  std::vector<FactorKey> out;
  auto record = [&](const SubgroupSet& lo, const SubgroupSet& hi) {
    const auto c = oracle::factor_centralizer_order(g, oracle::to_words(lo, g.order()), oracle::to_words(hi, g.order()));
    out.emplace_back(hi.size() / lo.size(), g.order() / c, is_cyclic_section(g, hi, lo));
  };
  if (top_down) {
    SubgroupSet cur = g.whole();
    while (cur.size() > 1) {
      const SubgroupSet* best = nullptr;
      for (const auto& n : normals)
        if (n.is_subset_of(cur) && n.size() < cur.size() && (!best || n.size() > best->size())) best = &n;
      record(*best, cur);
      cur = *best;
    }
  } else {
    SubgroupSet cur = g.trivial();
    while (cur.size() < g.order()) {
      const SubgroupSet* best = nullptr;
      for (const auto& n : normals)
        if (cur.is_subset_of(n) && n.size() > cur.size() && (!best || n.size() < best->size())) best = &n;
      record(cur, *best);
      cur = *best;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("chief factors of small groups") {
  const SubgroupLattice c5(construct("C5"));
  const auto f5 = all_chief_factors(c5);
  REQUIRE(f5.size() == 1);
  CHECK(f5[0].factor_order == 5);
  CHECK(f5[0].automizer_order == 1);
  CHECK(f5[0].is_cyclic);
  CHECK_FALSE(f5[0].is_frattini);

  const SubgroupLattice s3(construct("S3"));
  auto fs = all_chief_factors(s3);
  REQUIRE(fs.size() == 2);
  std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) { return a.factor_order < b.factor_order; });
  CHECK(fs[0].factor_order == 2);
  CHECK(fs[0].automizer_order == 1);
  CHECK(fs[1].factor_order == 3);
  CHECK(fs[1].automizer_order == 2);

  const SubgroupLattice a4(construct("A4"));
  auto fa = all_chief_factors(a4);
  REQUIRE(fa.size() == 2);
  std::sort(fa.begin(), fa.end(), [](const auto& a, const auto& b) { return a.factor_order < b.factor_order; });
  CHECK(fa[1].factor_order == 4);
  CHECK_FALSE(fa[1].is_cyclic);
  CHECK(fa[1].automizer_order == 3);
  CHECK(factor_centralizer(a4.group(), fa[1].lower, fa[1].upper).size() == 4);

  const SubgroupLattice c4(construct("C4"));
  auto fc = all_chief_factors(c4);
  REQUIRE(fc.size() == 2);
  std::sort(fc.begin(), fc.end(), [](const auto& a, const auto& b) { return a.upper.size() < b.upper.size(); });
  CHECK(fc[0].is_frattini);
  CHECK_FALSE(fc[1].is_frattini);
}

TEST_CASE("automizer orders against the direct centralizer count") {
  for (const auto& e : standard_suite()) {
    const SubgroupLattice lat(construct(e.name));
    const Group& g = lat.group();
    if (g.order() > 60) continue;
    INFO(e.name);
    for (const auto& f : all_chief_factors(lat)) {
      const auto c = oracle::factor_centralizer_order(g, oracle::to_words(f.lower, g.order()),
                                                       oracle::to_words(f.upper, g.order()));
      CHECK(f.automizer_order == g.order() / c);
    }
  }
}

TEST_CASE("chief factor multiset is series independent") {
  for (const char* name : {"S4", "A4xC2", "SL23", "S3xS3", "C5^2:C3", "D12", "hol_C13"}) {
    INFO(name);
    const Group g = construct(name);
    CHECK(series_factors(g, true) == series_factors(g, false));
  }
}

TEST_CASE("basic class predicates") {
  CHECK(is_abelian(construct("C12")));
  CHECK_FALSE(is_abelian(construct("S3")));
  CHECK(is_nilpotent(construct("Q8")));
  CHECK(is_nilpotent(construct("D8")));
  CHECK_FALSE(is_nilpotent(construct("S3")));
  CHECK(is_soluble(construct("S4")));
  CHECK_FALSE(is_soluble(construct("A5")));
  CHECK(is_supersoluble(construct("D12")));
  CHECK_FALSE(is_supersoluble(construct("A4")));
  CHECK_FALSE(is_supersoluble(construct("S4")));
}

TEST_CASE("class hierarchy on the standard suite") {
  for (const auto& e : standard_suite()) {
    INFO(e.name);
    const SubgroupLattice lat(construct(e.name));
    const auto p = classify(lat);
    if (p.abelian) CHECK(p.nilpotent);
    if (p.nilpotent) CHECK(p.nearly_nilpotent);
    if (p.nearly_nilpotent) CHECK(p.supersoluble);
    if (p.strongly_supersoluble) CHECK(p.supersoluble);
    if (p.supersoluble) CHECK(p.soluble);
    if (p.nilpotent) CHECK(p.dispersive_orderings.size() >= 1);
    if (p.u_critical) CHECK_FALSE(p.supersoluble);
    if (p.ore_dispersive) CHECK_FALSE(p.dispersive_orderings.empty());
  }
}

TEST_CASE("golden profiles") {
  auto prof = [](const char* n) { return classify(SubgroupLattice(construct(n))); };
  const auto s3 = prof("S3");
  CHECK(s3.nearly_nilpotent);
  CHECK_FALSE(s3.nilpotent);
  CHECK(s3.p_group_schmidt);
  CHECK(s3.schmidt_group);

  const auto h7 = prof("hol_C7");
  CHECK(h7.strongly_supersoluble);
  CHECK_FALSE(h7.nearly_nilpotent);

  const auto h13 = prof("hol_C13");
  CHECK(h13.supersoluble);
  CHECK_FALSE(h13.strongly_supersoluble);

  const auto a4 = prof("A4");
  CHECK(a4.u_critical);
  CHECK_FALSE(a4.supersoluble);
  CHECK_FALSE(a4.ore_dispersive);

  CHECK_FALSE(prof("S4").u_critical);
  CHECK(prof("SL23").u_critical);
  CHECK_FALSE(prof("Q8").p_group_schmidt);
  CHECK_FALSE(prof("C6").p_group_schmidt);
  CHECK(prof("Q8").schmidt_group == false);
  CHECK(prof("1").nilpotent);
}

TEST_CASE("dispersive orderings") {
  const Group s3 = construct("S3");
  CHECK(dispersive_orderings(s3) == std::vector<PrimeOrdering>{{3, 2}});
  CHECK(is_ore_dispersive(s3));
  CHECK(is_phi_dispersive(s3, {3, 2}));
  CHECK_FALSE(is_phi_dispersive(s3, {2, 3}));

  const Group a4 = construct("A4");
  CHECK(dispersive_orderings(a4) == std::vector<PrimeOrdering>{{2, 3}});
  CHECK_FALSE(is_ore_dispersive(a4));

  CHECK(dispersive_orderings(construct("C6")).size() == 2);
  CHECK(dispersive_orderings(construct("1")) == std::vector<PrimeOrdering>{{}});
  CHECK(dispersive_orderings(construct("A5")).empty());

  try {
    is_phi_dispersive(s3, {2, 5});
    FAIL("bad ordering accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_ordering);
  }
  CHECK_THROWS_AS(is_phi_dispersive(s3, {2}), Error);
}

TEST_CASE("hypercyclic centre and embedding") {
  CHECK(hypercyclic_center(construct("A4")).size() == 1);
  CHECK(hypercyclic_center(construct("S3")).size() == 6);
  CHECK(hypercyclic_center(construct("E3^2")).size() == 9);
  CHECK(hypercyclic_center(construct("A4xC2")).size() == 2);
  const Group a4 = construct("A4");
  CHECK_FALSE(is_hypercyclically_embedded(a4, derived_subgroup(a4)));
  CHECK(is_hypercyclically_embedded(a4, a4.trivial()));
  const Group s3 = construct("S3");
  const auto t = subgroup_generated(s3, {s3.generators()[0]});
  if (!is_normal(s3, t)) {
    try {
      is_hypercyclically_embedded(s3, t);
      FAIL("non-normal accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_normal);
    }
  }
}

TEST_CASE("residuals") {
  const Group a4 = construct("A4");
  CHECK(residual_us(a4) == derived_subgroup(a4));
  CHECK(residual_us(a4).size() == 4);
  CHECK(residual_u(a4).size() == 4);
  CHECK(residual_us(construct("A4xC2")).size() == 4);
  CHECK(residual_us(construct("hol_C7")).size() == 1);
  CHECK(residual_us(construct("hol_C13")).size() > 1);
  CHECK(residual_u(construct("hol_C13")).size() == 1);
  CHECK(residual_u(construct("S4")).size() == 4);
  CHECK(residual_us(construct("1")).size() == 1);
}

TEST_CASE("nilpotent Hall subgroups") {
  const Group a4 = construct("A4");
  CHECK(is_nilpotent_hall(a4, a4.trivial()));
  CHECK(is_nilpotent_hall(a4, derived_subgroup(a4)));
  const Group a4c2 = construct("A4xC2");
  CHECK_FALSE(is_nilpotent_hall(a4c2, residual_us(a4c2)));
  const Group s3 = construct("S3");
  CHECK_FALSE(is_nilpotent_hall(s3, s3.whole()));
  CHECK(is_nilpotent_hall(s3, derived_subgroup(s3)));
}

TEST_CASE("critical classes") {
  const SubgroupLattice q8(construct("Q8"));
  CHECK(is_minimal_non_abelian(q8));
  CHECK_FALSE(is_minimal_non_abelian(SubgroupLattice(construct("C6"))));
  CHECK(is_minimal_non_abelian(SubgroupLattice(construct("S3"))));
  CHECK(is_critical(q8, [](const Group& g) { return is_abelian(g); }));
  CHECK_FALSE(is_schmidt_group(q8));
  CHECK(is_schmidt_group(SubgroupLattice(construct("A4"))));
}

TEST_CASE("profile fields by name") {
  const auto p = classify(SubgroupLattice(construct("S3")));
  CHECK(profile_field(p, "nearly_nilpotent"));
  CHECK_FALSE(profile_field(p, "nilpotent"));
  CHECK(profile_field_names().size() == 10);
  try {
    profile_field(p, "bogus");
    FAIL("unknown field accepted");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::bad_parameters);
  }
}
