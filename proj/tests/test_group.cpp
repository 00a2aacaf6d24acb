#include <set>

#include "doctest.h"
#include "maxclass/group.hpp"

using namespace maxclass;

TEST_SUITE("group") {

TEST_CASE("specs carry the advertised presentation data") {
  GroupSpec d = make_group(Family::dihedral, 4);
  CHECK(d.a_order == 8);
  CHECK(d.group_order == 16);
  CHECK(d.conj_exp == 7);
  CHECK(d.alpha_exp == 0);

  GroupSpec s = make_group(Family::semidihedral, 4);
  CHECK(s.conj_exp == 3);  // -1 + 2^{n-2} mod 8
  CHECK(s.alpha_exp == 0);

  GroupSpec q = make_group(Family::quaternion, 4);
  CHECK(q.conj_exp == 7);
  CHECK(q.alpha_exp == 4);  // b^2 = a^{2^{n-2}}
}

TEST_CASE("construction rejects bad parameters") {
  CHECK_THROWS_AS(make_group(Family::dihedral, 2), Error);
  CHECK_THROWS_AS(make_group(Family::dihedral, 9), Error);
  CHECK_THROWS_AS(make_group(Family::semidihedral, 3), Error);
  CHECK_NOTHROW(make_group(Family::semidihedral, 4));
  CHECK(family_from_string("q") == Family::quaternion);
  CHECK_THROWS_AS(family_from_string("x"), Error);
}

TEST_CASE("normal form fixes the commutation rule") {
  GroupSpec d = make_group(Family::dihedral, 3);
  // b a = a^{conj_exp} b
  CHECK(g_mul(d, {0, 1}, {1, 0}) == GroupElement{3, 1});
  CHECK(g_mul(d, {1, 0}, {0, 1}) == GroupElement{1, 1});

  GroupSpec q = make_group(Family::quaternion, 3);
  CHECK(g_mul(q, {0, 1}, {0, 1}) == GroupElement{2, 0});  // b^2 = a^2
  CHECK(g_order(q, {0, 1}) == 4);
  CHECK(g_order(q, {1, 1}) == 4);  // (ab)^2 = b^2
  GroupSpec dd = make_group(Family::dihedral, 3);
  CHECK(g_order(dd, {0, 1}) == 2);
  CHECK(g_order(dd, {1, 1}) == 2);
}

TEST_CASE("every element has a working inverse") {
  for (Family f : {Family::dihedral, Family::semidihedral, Family::quaternion})
    for (int n : {4, 5}) {
      GroupSpec s = make_group(f, n);
      for (uint32_t j = 0; j < 2; ++j)
        for (uint32_t i = 0; i < s.a_order; ++i) {
          GroupElement g{i, j};
          CHECK(g_mul(s, g, g_inv(s, g)) == GroupElement{0, 0});
          CHECK(g_mul(s, g_inv(s, g), g) == GroupElement{0, 0});
        }
    }
}

TEST_CASE("powers reduce modulo the relations") {
  GroupSpec q = make_group(Family::quaternion, 4);
  CHECK(g_pow(q, {1, 0}, 8) == GroupElement{0, 0});
  CHECK(g_pow(q, {0, 1}, 2) == GroupElement{4, 0});
  CHECK(g_pow(q, {0, 1}, 4) == GroupElement{0, 0});
  CHECK(g_pow(q, {3, 1}, 0) == GroupElement{0, 0});
}

TEST_CASE("brute-force commutators fill the derived subgroup") {
  for (Family f : {Family::dihedral, Family::semidihedral, Family::quaternion})
    for (int n : {4, 5}) {
      GroupSpec s = make_group(f, n);
      std::set<std::pair<uint32_t, uint32_t>> seen;
      for (uint32_t j1 = 0; j1 < 2; ++j1)
        for (uint32_t i1 = 0; i1 < s.a_order; ++i1)
          for (uint32_t j2 = 0; j2 < 2; ++j2)
            for (uint32_t i2 = 0; i2 < s.a_order; ++i2) {
              GroupElement x{i1, j1}, y{i2, j2};
              GroupElement c = g_mul(s, g_mul(s, g_inv(s, x), g_inv(s, y)),
                                     g_mul(s, x, y));
              seen.insert({c.i, c.j});
            }
      std::set<std::pair<uint32_t, uint32_t>> expected;
      for (GroupElement g : commutator_subgroup(s))
        expected.insert({g.i, g.j});
      CHECK(seen == expected);
      CHECK(expected.size() == s.a_order / 2);
    }
}

TEST_CASE("format and parse round-trip") {
  GroupSpec s = make_group(Family::semidihedral, 4);
  CHECK(format_element(s, {0, 0}) == "1");
  CHECK(format_element(s, {0, 1}) == "b");
  CHECK(format_element(s, {1, 0}) == "a");
  CHECK(format_element(s, {1, 1}) == "a*b");
  CHECK(format_element(s, {5, 1}) == "a^5*b");
  for (uint32_t j = 0; j < 2; ++j)
    for (uint32_t i = 0; i < s.a_order; ++i) {
      GroupElement g{i, j};
      CHECK(parse_element(s, format_element(s, g)) == g);
    }
  CHECK(parse_element(s, "a^1") == GroupElement{1, 0});
  CHECK_THROWS_AS(parse_element(s, "c"), Error);
  CHECK_THROWS_AS(parse_element(s, "a^8"), Error);
}

}  // TEST_SUITE
