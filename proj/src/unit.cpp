#include "maxclass/unit.hpp"

namespace maxclass {

Unit unit_pow(const Unit& u, uint64_t e) {
  Unit r = Unit::one(u.spec());
  Unit base = u;
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

bool in_H(const Unit& u) {
  if (u.spec().family == Family::quaternion)
    raise(Errc::wrong_family, "H is defined for dihedral/semidihedral only");
  return u.value.x1 + u.value.x2 == cyc_one(u.spec().a_order);
}

CyclicElement psi(const Unit& u) {
  if (!in_H(u)) raise(Errc::not_in_h, "psi needs h1 + h2 = 1");
  const GroupSpec& s = u.spec();
  return cyc_one(s.a_order) + u.value.x1 + bar(s, u.value.x1);
}

Unit conj_by(const Unit& h, const Unit& f) {
  check_same_spec(h.value, f.value);
  if (!self_conjugated(h.value))
    raise(Errc::not_self_conjugated,
          "conjugation closed form needs bar(h) = h: " + format_algebra(h.value));
  const GroupSpec& s = h.spec();
  CyclicElement f1 = f.value.x1, f2 = f.value.x2;
  CyclicElement f1b = bar(s, f1), f2b = bar(s, f2);
  CyclicElement rinv = cyc_inv(norm(f.value));
  CyclicElement mix = f1 * f2 + f1b * f2b;
  CyclicElement t1 = h.value.x1 + h.value.x2 * cyc_shift(mix * rinv, s.alpha_exp);
  CyclicElement tw = cyc_square(f1b) + cyc_shift(cyc_square(f2), s.alpha_exp);
  CyclicElement t2 = h.value.x2 * (tw * rinv);
  return Unit(AlgebraElement{s, t1, t2});
}

uint64_t order_of_unit(const Unit& u, uint64_t cap) {
  if (cap == 0 || (cap & (cap - 1)) != 0)
    raise(Errc::invalid_parameter, "order cap must be a power of two");
  Unit id = Unit::one(u.spec());
  if (u == id) return 1;
  Unit cur = u;
  uint64_t ord = 1;
  while (ord < cap) {
    cur = cur * cur;
    ord <<= 1;
    if (cur == id) return ord;
  }
  raise(Errc::cap_exceeded, "unit order exceeds cap " + std::to_string(cap));
}

Unit tower_conjugator(const GroupSpec& s) {
  uint32_t len = s.a_order;
  CyclicElement f1 = s.family == Family::quaternion
                         ? cyc_monomial(len, (uint64_t{1} << (s.n - 3)) + 1)
                         : cyc_monomial(len, 1);
  CyclicElement f2 = cyc_one(len) + cyc_monomial(len, 1);  // 1 + a
  return Unit(AlgebraElement{s, f1, f2});
}

CyclicElement tower_norm(const GroupSpec& s) {
  return norm(tower_conjugator(s).value);
}

Unit b_tower_ds(const GroupSpec& s, uint32_t k) {
  if (s.family == Family::quaternion)
    raise(Errc::wrong_family, "dihedral/semidihedral tower form");
  if (k < 1 || k > s.a_order / 2)
    raise(Errc::out_of_range, "tower index k must satisfy 1 <= k <= 2^{n-2}");
  CyclicElement rk = cyc_pow(tower_norm(s), k);
  return Unit(AlgebraElement{s, cyc_one(s.a_order) + rk, rk});
}

Unit b_tower_q(const GroupSpec& s, uint32_t k) {
  if (s.family != Family::quaternion)
    raise(Errc::wrong_family, "quaternion tower form");
  if (k < 1 || k > s.a_order / 2)
    raise(Errc::out_of_range, "tower index k must satisfy 1 <= k <= 2^{n-2}");
  uint32_t len = s.a_order;
  Unit A = tower_conjugator(s);
  CyclicElement beta =
      A.value.x1 * A.value.x2 + bar(s, A.value.x1) * bar(s, A.value.x2);
  CyclicElement y = cyc_shift(tower_norm(s), s.alpha_exp);  // b^2 R
  CyclicElement sum = cyc_inv(y);                           // i = -1 term
  CyclicElement cur = cyc_one(len);
  for (uint32_t i = 0; i + 2 <= k; ++i) {                   // i = 0 .. k-2
    sum += cur;
    cur = cur * y;
  }
  return Unit(AlgebraElement{s, beta * sum, cyc_pow(y, k)});
}

Unit random_unit(const GroupSpec& s, std::mt19937_64& rng) {
  const u128 m = cyc_mask(s.a_order);
  AlgebraElement e = AlgebraElement::zero(s);
  e.x1.bits = ((u128(rng()) << 64) | rng()) & m;
  e.x2.bits = ((u128(rng()) << 64) | rng()) & m;
  if (augmentation(e) != 1) e.x1.bits ^= u128_one;
  return Unit(e);
}

Unit group_commutator(const Unit& x, const Unit& y) {
  return x.inverse() * y.inverse() * x * y;
}

Unit iterated_commutator(Unit base, std::span<const Unit> ws) {
  for (const Unit& w : ws) base = group_commutator(base, w);
  return base;
}

}  // namespace maxclass
