#pragma once

#include <string>
#include <vector>

#include "maxclass/cyclic.hpp"
#include "maxclass/group.hpp"

namespace maxclass {

// Element of KG in component form x1 + x2 * b with x1, x2 in K<a>.
// All arithmetic stays in this form; the flat monomial representation is
// used only by test oracles.
struct AlgebraElement {
  GroupSpec spec;
  CyclicElement x1, x2;

  static AlgebraElement zero(const GroupSpec& s) {
    return {s, cyc_zero(s.a_order), cyc_zero(s.a_order)};
  }
  static AlgebraElement one(const GroupSpec& s) {
    return {s, cyc_one(s.a_order), cyc_zero(s.a_order)};
  }
  static AlgebraElement monomial(const GroupSpec& s, GroupElement g) {
    AlgebraElement r = zero(s);
    (g.j ? r.x2 : r.x1).bits = u128_one << (g.i % s.a_order);
    return r;
  }

  bool is_zero() const { return x1.is_zero() && x2.is_zero(); }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.spec == y.spec && x.x1 == y.x1 && x.x2 == y.x2;
  }
};

void check_same_spec(const AlgebraElement&, const AlgebraElement&);

AlgebraElement operator+(AlgebraElement, const AlgebraElement&);
AlgebraElement& operator+=(AlgebraElement&, const AlgebraElement&);

// Component product: with bar(z) = b^{-1} z b acting on K<a>,
//   (f1 + f2 b)(h1 + h2 b) = (f1 h1 + f2 bar(h2) alpha) + (f2 bar(h1) + f1 h2) b
// where alpha = b^2 = a^{alpha_exp}.
AlgebraElement operator*(const AlgebraElement&, const AlgebraElement&);

int augmentation(const AlgebraElement&);
std::vector<GroupElement> supp(const AlgebraElement&);

// bar on K<a>: a^i -> a^{conj_exp * i}
CyclicElement bar(const GroupSpec&, const CyclicElement&);
// bar on KG: b^{-1} x b (componentwise bar)
AlgebraElement bar(const AlgebraElement&);
bool self_conjugated(const AlgebraElement&);

// b^2 as an element of K<a>
CyclicElement alpha_value(const GroupSpec&);

// norm(x1 + x2 b) = x1 bar(x1) + x2 bar(x2) alpha; multiplicative on KG,
// self-conjugated, and maps units onto units of K<a>.
CyclicElement norm(const AlgebraElement&);

// x * c for a self-conjugated (hence central) c in K<a>
AlgebraElement scale(const AlgebraElement&, const CyclicElement& c);
// c embedded as a b-free element of KG
AlgebraElement embed(const GroupSpec&, const CyclicElement& c);

// Closed-form inverse of an augmentation-1 element:
//   f^{-1} = (bar(f1) + f2 b) * norm(f)^{-1}.
AlgebraElement invert_unit(const AlgebraElement&);

// Closed form for x^{2^k}, k >= 1:
//   x1^{2^k} + (x2 bar(x2))^{2^{k-1}} b^{2^k}
//   + sum_{i=1}^{k-1} (x2 bar(x2))^{2^{i-1}} (x1 + bar(x1))^{2^k - 2^i} b^{2^i}
//   + x2 (x1 + bar(x1))^{2^k - 1} b
// where b^2 = a^{alpha_exp} and b^{2^i} = 1 for i >= 2.
AlgebraElement pow2k(const AlgebraElement&, int k);

// Sum of all elements of <a^d> as an element of KG.
AlgebraElement set_sum(const GroupSpec&, uint32_t d);

std::string format_algebra(const AlgebraElement&);
AlgebraElement parse_algebra(const GroupSpec&, const std::string&);

}  // namespace maxclass
