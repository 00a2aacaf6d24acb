#include "doctest.h"
#include "maxclass/wreath.hpp"

using namespace maxclass;

namespace {

UnitTable group_as_table(const GroupSpec& s) {
  std::vector<Unit> gens{Unit::from_group(s, {1, 0}),
                         Unit::from_group(s, {0, 1})};
  return generate_subgroup(gens);
}

}  // namespace

TEST_SUITE("wreath") {

TEST_CASE("wreath tables have the advertised invariants") {
  struct Row {
    uint32_t m, order, cls;
  };
  for (Row r : {Row{1, 8, 2}, Row{2, 64, 4}, Row{3, 2048, 8}}) {
    GroupTable w = build_wreath(r.m);
    w.validate();
    CHECK(w.order == r.order);
    CHECK(nilpotency_class(w) == r.cls);
    CHECK(center(w).size() == 2);
    CHECK_FALSE(is_abelian(w));
  }
  CHECK_THROWS_AS(build_wreath(0), Error);
  CHECK_THROWS_AS(build_wreath(4), Error);
}

TEST_CASE("the smallest wreath product is the dihedral group of order 8") {
  GroupTable w = build_wreath(1);
  UnitTable d8 = group_as_table(make_group(Family::dihedral, 3));
  IsoResult iso = isomorphic(w, d8.table, IsoMode::explicit_search);
  CHECK(iso.isomorphic);
  CHECK(iso.mode == IsoMode::explicit_search);
  CHECK(iso.map.size() == 8);
}

TEST_CASE("isomorphism testing separates same-order groups") {
  UnitTable d8 = group_as_table(make_group(Family::dihedral, 3));
  UnitTable q8 = group_as_table(make_group(Family::quaternion, 3));
  CHECK_FALSE(isomorphic(d8.table, q8.table, IsoMode::explicit_search)
                  .isomorphic);
  CHECK_FALSE(isomorphic(d8.table, q8.table, IsoMode::invariants).isomorphic);
  CHECK(isomorphic(q8.table, q8.table, IsoMode::invariants).isomorphic);
}

TEST_CASE("quotients require verified-normal kernels") {
  UnitTable d8 = group_as_table(make_group(Family::dihedral, 3));
  GroupSpec s = make_group(Family::dihedral, 3);
  uint32_t b_idx = *d8.index_of(Unit::from_group(s, {0, 1}));
  CHECK_THROWS_AS(make_quotient(d8.table, {b_idx}), Error);  // <b> not normal
  uint32_t a2_idx = *d8.index_of(Unit::from_group(s, {2, 0}));
  CosetTable q = make_quotient(d8.table, {a2_idx});
  q.quotient.validate();
  CHECK(q.quotient.order == 4);
  CHECK(is_elementary_abelian(q.quotient));
  CHECK(q.kernel.size() == 2);
}

TEST_CASE("dihedral and semidihedral sections match the wreath product") {
  for (Family f : {Family::dihedral, Family::semidihedral})
    for (int n : {3, 4}) {
      if (f == Family::semidihedral && n == 3) continue;
      GroupSpec s = make_group(f, n);
      SectionResult r = construct_section_ds(s);
      CHECK(r.ok);
      CHECK(r.kernel_order == 2);
      CHECK(r.base_elementary_abelian);
      CHECK(r.section.quotient.order == r.expected_order);
      CHECK(r.section_class == r.expected_class);
      CHECK(r.iso.mode == IsoMode::explicit_search);
      CHECK(r.iso.isomorphic);
    }
  CHECK_THROWS_AS(construct_section_ds(make_group(Family::quaternion, 4)),
                  Error);
}

TEST_CASE("quaternion sections match the wreath product") {
  for (int n : {3, 4}) {
    GroupSpec s = make_group(Family::quaternion, n);
    SectionResult r = construct_section_q(s);
    CHECK(r.ok);
    CHECK(r.kernel_order == 4);
    CHECK(r.kernel_central);
    CHECK(r.witness_nontrivial);
    CHECK(r.nonmembership_ok);
    CHECK(r.second_component_witness);
    CHECK(r.section.quotient.order == r.expected_order);
    CHECK(r.iso.isomorphic);
  }
  CHECK_THROWS_AS(construct_section_q(make_group(Family::dihedral, 4)), Error);
}

TEST_CASE("telescoped products and the commutator chain") {
  for (int n : {3, 4, 5}) {
    GroupSpec s = make_group(Family::quaternion, n);
    TelescopeReport r = telescope_identity_check(s);
    CHECK(r.product_identity);
    CHECK(r.chain_mod_center);
    if (n >= 4) CHECK(r.chain_exact);
    CHECK(r.ok);
  }
  CHECK_THROWS_AS(telescope_identity_check(make_group(Family::dihedral, 4)),
                  Error);
  CHECK_THROWS_AS(telescope_identity_check(make_group(Family::quaternion, 7)),
                  Error);
}

}  // TEST_SUITE
