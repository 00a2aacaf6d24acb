#include <random>

#include "doctest.h"
#include "maxclass/lie.hpp"

using namespace maxclass;

namespace {

AlgebraElement random_elem(const GroupSpec& s, std::mt19937_64& rng) {
  AlgebraElement e = AlgebraElement::zero(s);
  e.x1.bits = ((u128(rng()) << 64) | rng()) & cyc_mask(s.a_order);
  e.x2.bits = ((u128(rng()) << 64) | rng()) & cyc_mask(s.a_order);
  return e;
}

}  // namespace

TEST_SUITE("lie") {

TEST_CASE("flatten round-trips through coordinates") {
  std::mt19937_64 rng(11);
  for (int n : {3, 5, 8}) {
    GroupSpec s = make_group(Family::dihedral, n);
    for (int t = 0; t < 50; ++t) {
      AlgebraElement x = random_elem(s, rng);
      CHECK(unflatten(s, flatten(x)) == x);
    }
  }
}

TEST_CASE("subspace insertion keeps an echelon basis") {
  Subspace sp(8);
  CHECK(sp.insert({0b1010, 0, 0, 0}));
  CHECK(sp.insert({0b0011, 0, 0, 0}));
  CHECK_FALSE(sp.insert({0b1001, 0, 0, 0}));  // dependent
  CHECK(sp.dim() == 2);
  CHECK(sp.contains({0b1001, 0, 0, 0}));
  CHECK_FALSE(sp.contains({0b0001, 0, 0, 0}));
  CHECK_FALSE(sp.insert({0, 0, 0, 0}));
  Subspace sp2(8);
  sp2.insert({0b0011, 0, 0, 0});
  sp2.insert({0b1010, 0, 0, 0});
  CHECK(sp == sp2);
  CHECK(sp.contains_all(sp2));
}

TEST_CASE("bracket is alternating and bilinear") {
  std::mt19937_64 rng(12);
  GroupSpec s = make_group(Family::semidihedral, 5);
  for (int t = 0; t < 100; ++t) {
    AlgebraElement x = random_elem(s, rng), y = random_elem(s, rng),
                   z = random_elem(s, rng);
    CHECK(lie_bracket(x, x).is_zero());
    CHECK(lie_bracket(x, y) == lie_bracket(y, x));  // char 2
    CHECK(lie_bracket(x + y, z) == lie_bracket(x, z) + lie_bracket(y, z));
  }
}

TEST_CASE("[b, a] has the closed form (a + abar) b") {
  for (Family f : {Family::dihedral, Family::semidihedral, Family::quaternion}) {
    GroupSpec s = make_group(f, 4);
    AlgebraElement got = lie_bracket(AlgebraElement::monomial(s, {0, 1}),
                                     AlgebraElement::monomial(s, {1, 0}));
    AlgebraElement want = AlgebraElement::monomial(s, {1, 1}) +
                          AlgebraElement::monomial(s, {s.conj_exp, 1});
    CHECK(got == want);
  }
}

TEST_CASE("lower and upper indices equal |G'| + 1") {
  for (Family f : {Family::dihedral, Family::semidihedral, Family::quaternion})
    for (int n : {3, 4, 5}) {
      if (f == Family::semidihedral && n == 3) continue;
      GroupSpec s = make_group(f, n);
      uint32_t half = s.a_order / 2;
      CHECK(lower_lie_index(s) == half + 1);
      CHECK(upper_lie_index(s) == half + 1);
      LieIndices li = lie_indices(s);
      CHECK(li.t_lower == half + 1);
      CHECK(li.t_upper == half + 1);
      CHECK(li.t_aug == half);
      CHECK(li.cl_bound == half);
    }
}

TEST_CASE("lower powers sit inside upper powers") {
  GroupSpec s = make_group(Family::quaternion, 4);
  for (uint32_t m = 1; m <= 5; ++m)
    CHECK(upper_lie_power(s, m).contains_all(lower_lie_power(s, m)));
  CHECK(lower_lie_power(s, 1).is_full());
}

TEST_CASE("augmentation ideal indices for cyclic subgroups") {
  GroupSpec s = make_group(Family::dihedral, 5);
  CHECK(aug_nilpotency_index(s, 0) == 1);            // trivial subgroup
  CHECK(aug_nilpotency_index(s, 1) == s.a_order);    // all of <a>
  CHECK(aug_nilpotency_index(s, 2) == s.a_order / 2);
  CHECK(aug_nilpotency_index(s, 4) == s.a_order / 4);
}

TEST_CASE("ideal chain dimensions decrease strictly to zero") {
  for (Family f : {Family::dihedral, Family::quaternion}) {
    GroupSpec s = make_group(f, 4);
    std::vector<uint32_t> dims = delta_power_dims(s);
    CHECK(dims.size() == s.a_order / 2 + 1);
    CHECK(dims.front() == s.group_order);
    CHECK(dims.back() == 0);
    for (size_t i = 0; i + 1 < dims.size(); ++i) CHECK(dims[i] > dims[i + 1]);
  }
}

TEST_CASE("quaternion nilpotency facts") {
  for (int n : {3, 4, 5}) {
    GroupSpec s = make_group(Family::quaternion, n);
    QuaternionClassResult r = verify_quaternion_class(s);
    CHECK(r.closed_form_ok);
    CHECK(r.long_bracket_nonzero);
    CHECK(r.long_bracket_matches);
    CHECK(r.t_lower == s.a_order / 2 + 1);
    CHECK(r.index_ok);
    CHECK(r.ok);
    if (n == 3) {
      CHECK(r.brute_forced);
      CHECK(r.brute_class == 2);
    }
  }
  GroupSpec d = make_group(Family::dihedral, 4);
  CHECK_THROWS_AS(verify_quaternion_class(d), Error);
}

TEST_CASE("unit orders divide the group exponent and attain it") {
  std::mt19937_64 rng(13);
  for (Family f : {Family::dihedral, Family::quaternion}) {
    GroupSpec s = make_group(f, 3);
    ExponentResult r = exponent_check(s, rng, 100);
    CHECK(r.exhaustive);
    CHECK(r.checked == 128);
    CHECK(r.group_exponent == 4);
    CHECK(r.max_order == 4);
    CHECK(r.all_divide);
    CHECK(r.attained);
    CHECK(r.ok);
  }
  GroupSpec s5 = make_group(Family::semidihedral, 5);
  ExponentResult r5 = exponent_check(s5, rng, 200);
  CHECK_FALSE(r5.exhaustive);
  CHECK(r5.checked == 200);
  CHECK(r5.group_exponent == 16);
  CHECK(r5.ok);
}

TEST_CASE("fifth brackets vanish in the monomial scan") {
  for (Family f : {Family::dihedral, Family::quaternion}) {
    GroupSpec s = make_group(f, 3);
    MetabelianResult r = lie_centrally_metabelian_check(s);
    CHECK(r.ok);
    CHECK(r.pairs > 0);
  }
  GroupSpec big = make_group(Family::dihedral, 6);
  CHECK_THROWS_AS(lie_centrally_metabelian_check(big), Error);
}

}  // TEST_SUITE
