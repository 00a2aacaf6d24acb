#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "maxclass/errors.hpp"

namespace maxclass {

enum class Family : uint8_t { dihedral, semidihedral, quaternion };

const char* family_name(Family f);
char family_letter(Family f);
Family family_from_string(const std::string& s);

// Presentation data for a 2-group of maximal class of order 2^n:
//
//   < a, b | a^{2^{n-1}} = 1, b^2 = a^{alpha_exp}, b^{-1} a b = a^{conj_exp} >
//
// dihedral:      alpha_exp = 0,        conj_exp = -1
// semidihedral:  alpha_exp = 0,        conj_exp = -1 + 2^{n-2}   (n >= 4)
// quaternion:    alpha_exp = 2^{n-2},  conj_exp = -1
//
// conj_exp is stored reduced mod 2^{n-1}; it is always odd and squares to 1.
struct GroupSpec {
  Family family = Family::dihedral;
  int n = 0;
  uint32_t a_order = 0;      // 2^{n-1}
  uint32_t group_order = 0;  // 2^n
  uint32_t conj_exp = 0;
  uint32_t alpha_exp = 0;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

// n = 3..8. Rejects semidihedral n = 3 (coincides with dihedral).
GroupSpec make_group(Family family, int n);

// Normal form a^i b^j, 0 <= i < 2^{n-1}, 0 <= j < 2.
struct GroupElement {
  uint32_t i = 0;
  uint32_t j = 0;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // b-free monomials sort first, then ascending exponent of a
  friend std::strong_ordering operator<=>(const GroupElement& l,
                                          const GroupElement& r) {
    return std::pair(l.j, l.i) <=> std::pair(r.j, r.i);
  }
};

// Reduces exponents into normal form.
GroupElement g_make(const GroupSpec&, uint64_t i, uint64_t j);
GroupElement g_mul(const GroupSpec&, GroupElement, GroupElement);
GroupElement g_inv(const GroupSpec&, GroupElement);
GroupElement g_pow(const GroupSpec&, GroupElement, uint64_t e);
uint64_t g_order(const GroupSpec&, GroupElement);

// The derived subgroup <a^2>, listed in ascending exponent order.
std::vector<GroupElement> commutator_subgroup(const GroupSpec&);

// Text form: "1", "b", "a", "a*b", "a^i", "a^i*b".
std::string format_element(const GroupSpec&, GroupElement);
// Accepts the printed form plus "a^1" and "a^0" spellings; exponents are
// bound-checked against the spec.
GroupElement parse_element(const GroupSpec&, const std::string&);

}  // namespace maxclass
