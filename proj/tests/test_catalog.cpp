#include <doctest.h>

#include <algorithm>
#include <map>

#include "modlat/catalog.hpp"
#include "modlat/isomorphism.hpp"

using namespace modlat;

TEST_CASE("suite expectations hold") {
  for (const auto& e : standard_suite()) {
    INFO(e.name);
    const SubgroupLattice lat(construct(e.name));
    const auto p = classify(lat);
    for (const auto& f : e.expected) {
      INFO(f.field);
      CHECK(profile_field(p, f.field) == f.value);
    }
  }
}

TEST_CASE("suite orders") {
  const std::map<std::string, std::size_t> orders{
      {"1", 1},        {"C2", 2},      {"C4", 4},      {"C6", 6},       {"C12", 12},     {"V4", 4},
      {"E3^2", 9},     {"E2^3", 8},    {"S3", 6},      {"D8", 8},       {"Q8", 8},       {"D10", 10},
      {"D12", 12},     {"Dic12", 12},  {"C7:C3", 21},  {"A4", 12},      {"S4", 24},      {"SL23", 24},
      {"hol_C5", 20},  {"hol_C7", 42}, {"hol_C13", 156}, {"A4xC2", 24}, {"C5^2:C3", 75}, {"C3^2:C2", 18},
      {"S3xC5", 30},   {"S3xS3", 36},  {"A5", 60},     {"S5", 120}};
  CHECK(standard_suite().size() == orders.size());
  for (const auto& e : standard_suite()) {
    INFO(e.name);
    REQUIRE(orders.count(e.name) == 1);
    CHECK(construct(e.name).order() == orders.at(e.name));
    CHECK(construct(e.constructor).order() == orders.at(e.name));
  }
}

TEST_CASE("cited expectations are tagged as such") {
  auto has = [](const std::string& name, const std::string& field, bool value) {
    for (const auto& e : standard_suite())
      if (e.name == name)
        for (const auto& f : e.expected)
          if (f.field == field && f.value == value && f.provenance == Provenance::cited) return true;
    return false;
  };
  CHECK(has("S3", "nearly_nilpotent", true));
  CHECK(has("S3", "nilpotent", false));
  CHECK(has("hol_C7", "strongly_supersoluble", true));
  CHECK(has("hol_C7", "nearly_nilpotent", false));
  CHECK(has("hol_C13", "supersoluble", true));
  CHECK(has("hol_C13", "strongly_supersoluble", false));
}

TEST_CASE("constructor strings and aliases") {
  CHECK(are_isomorphic(construct("cyclic(6)"), construct("C6")));
  CHECK(are_isomorphic(construct("C3xC2"), construct("C6")));
  CHECK(are_isomorphic(construct("direct(A4,C2)"), construct("A4xC2")));
  CHECK(are_isomorphic(construct("D6"), construct("S3")));
  CHECK(are_isomorphic(construct("dihedral(6)"), symmetric(3)));
  CHECK(are_isomorphic(construct("C3:C4"), construct("Dic12")));
  CHECK(are_isomorphic(construct("hol_C5"), holomorph_cyclic(5)));
  CHECK(are_isomorphic(construct("V4"), construct("E2^2")));
  CHECK(construct("S3").name() == "S3");
  CHECK_FALSE(are_isomorphic(construct("Dic12"), construct("D12")));
  CHECK_FALSE(are_isomorphic(construct("C3^2:C2"), construct("S3xC3")));
}

TEST_CASE("construction errors") {
  auto code_of = [](const std::string& spec) {
    try {
      construct(spec);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal;
  };
  CHECK(code_of("nonsense") == Errc::unknown_name);
  CHECK(code_of("dihedral(7)") == Errc::bad_parameters);
  CHECK(code_of("pq2(2,2)") == Errc::bad_parameters);
  CHECK(code_of("holomorph_cyclic(8)") == Errc::bad_parameters);
  try {
    construct("S5", 100);
    FAIL("cap ignored");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::closure_exceeds_cap);
  }
}

TEST_CASE("construction is deterministic") {
  for (const auto& e : standard_suite()) {
    const Group a = construct(e.name);
    const Group b = construct(e.name);
    CHECK(std::equal(a.table().begin(), a.table().end(), b.table().begin(), b.table().end()));
  }
}

TEST_CASE("catalog names cover the suite") {
  const auto names = catalog_names();
  for (const auto& e : standard_suite()) CHECK(std::find(names.begin(), names.end(), e.name) != names.end());
  for (const auto& n : names) CHECK_NOTHROW(construct(n));
}

TEST_CASE("primitive roots") {
  CHECK(least_primitive_root(5) == 2);
  CHECK(least_primitive_root(7) == 3);
  CHECK(least_primitive_root(13) == 2);
}
