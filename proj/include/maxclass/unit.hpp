#pragma once

#include <random>
#include <span>

#include "maxclass/algebra.hpp"

namespace maxclass {

// Normalized unit of KG (augmentation 1). Every augmentation-1 element is
// invertible because the augmentation ideal is nilpotent.
struct Unit {
  AlgebraElement value;

  explicit Unit(AlgebraElement v) : value(std::move(v)) {
    if (augmentation(value) != 1)
      raise(Errc::not_a_unit, "augmentation must be 1: " + format_algebra(value));
  }

  static Unit one(const GroupSpec& s) { return Unit(AlgebraElement::one(s)); }
  static Unit from_group(const GroupSpec& s, GroupElement g) {
    return Unit(AlgebraElement::monomial(s, g));
  }

  const GroupSpec& spec() const { return value.spec; }

  friend Unit operator*(const Unit& x, const Unit& y) {
    return Unit(x.value * y.value);
  }
  Unit inverse() const { return Unit(invert_unit(value)); }

  friend bool operator==(const Unit& x, const Unit& y) {
    return x.value == y.value;
  }
};

Unit unit_pow(const Unit&, uint64_t e);

// Membership in H = { h1 + h2 b : h1 + h2 = 1 }, a subgroup of U(KG) for the
// dihedral and semidihedral families only.
bool in_H(const Unit&);

// psi(h) = 1 + h1 + bar(h1), the norm restricted to H; a homomorphism
// H -> U(K<a>) whose kernel is the centralizer of b in H.
CyclicElement psi(const Unit&);

// Closed-form conjugation f^{-1} h f for self-conjugated h:
//   t1 = h1 + h2 (f1 f2 + bar(f1) bar(f2)) alpha R^{-1}
//   t2 = h2 (bar(f1)^2 + f2^2 alpha) R^{-1},  R = norm(f).
Unit conj_by(const Unit& h, const Unit& f);

// Order computed by repeated squaring; cap must be a power of two. A unit
// whose order is not a 2-power dividing cap trips CapExceeded, which in this
// algebra signals a broken invariant.
uint64_t order_of_unit(const Unit&, uint64_t cap);

// The distinguished unit whose powers conjugate b into a commuting tower:
// a + (1+a) b for dihedral/semidihedral, a^{2^{n-3}+1} + (1+a) b for
// quaternion. Its order is 2^{n-1} in all three families.
Unit tower_conjugator(const GroupSpec&);

// norm(tower_conjugator): 1 + a + bar(a) for dihedral/semidihedral,
// 1 + a^{2^{n-2}+1} + a^{2^{n-2}-1} for quaternion.
CyclicElement tower_norm(const GroupSpec&);

// Closed form for b conjugated by the k-th power of the tower conjugator,
// dihedral/semidihedral: 1 + R^k + R^k b, 1 <= k <= 2^{n-2}.
Unit b_tower_ds(const GroupSpec&, uint32_t k);

// Quaternion closed form: beta * sum_{i=-1}^{k-2} (b^2 R)^i + (b^2 R)^k b
// with beta = f1 f2 + bar(f1) bar(f2) for the tower conjugator's components.
Unit b_tower_q(const GroupSpec&, uint32_t k);

// Uniformly random augmentation-1 element (parity fixed by flipping the
// constant coefficient when needed).
Unit random_unit(const GroupSpec&, std::mt19937_64& rng);

// (x, y) = x^{-1} y^{-1} x y
Unit group_commutator(const Unit& x, const Unit& y);
// Left-normed (base, w_0, w_1, ...)
Unit iterated_commutator(Unit base, std::span<const Unit> ws);

}  // namespace maxclass
