#pragma once

#include "maxclass/table.hpp"

namespace maxclass {

// C2 wr C_{2^m} as an explicit table. Elements are (v, s) with v a
// 2^m-bit vector and s a cyclic shift; (v, s)(w, t) = (v ^ rot_s(w), s+t)
// and the index is s * 2^{2^m} + v, so (0, 0) is the identity at 0.
// Order 2^{2^m + m}; m <= 3 keeps the table within the cap.
GroupTable build_wreath(uint32_t m);

// Witness subgroup F generated by the conjugate tower of b together with
// the tower conjugator A, quotiented by the verified-central kernel:
// <A^{2^{n-2}}> (dihedral/semidihedral) or <b^2, A^{2^{n-2}}> (quaternion).
// The quotient is compared against build_wreath(n-2): explicit isomorphism
// up to order 512, invariant fingerprint beyond.
struct SectionResult {
  uint32_t f_order = 0;
  uint32_t expected_f_order = 0;
  uint32_t kernel_order = 0;
  uint32_t expected_kernel_order = 0;
  bool kernel_central = false;
  CosetTable section;
  uint32_t expected_order = 0;  // 2^{2^{n-2}} * 2^{n-2}
  uint32_t section_class = 0;
  uint32_t expected_class = 0;  // 2^{n-2}
  bool order_ok = false;
  bool class_ok = false;
  IsoResult iso;
  // dihedral/semidihedral: the tower generates an elementary abelian base
  bool base_elementary_abelian = false;
  // quaternion: image of (b, (2^{n-2}-1) * A) in the quotient is nontrivial
  bool witness_nontrivial = false;
  // quaternion: (b A^{-1})^{2^{n-2}} lies outside the kernel
  bool nonmembership_ok = false;
  // quaternion: second component of (A b)^{2^{n-2}} is the <a^2> sum
  // shifted by a^{2^{n-3}+2} and differs from that of A^{2^{n-2}} (the full
  // <a> sum for n >= 4, zero in the degenerate n = 3 case)
  bool second_component_witness = false;
  bool ok = false;
};

SectionResult construct_section_ds(const GroupSpec&);  // n <= 5
SectionResult construct_section_q(const GroupSpec&);   // n <= 5

// Quaternion product identities behind the section argument:
//   b b^A ... b^{A^{k-1}} = (b A^{-1})^k A^k               (all k),
//   (b, A, A^2, ..., A^{2^{n-3}}) = b b^A ... b^{A^{2^{n-2}-1}}
// exactly for n >= 4 and up to the central b^2 at n = 3.
struct TelescopeReport {
  bool product_identity = false;
  bool chain_exact = false;
  bool chain_mod_center = false;
  bool ok = false;
};
TelescopeReport telescope_identity_check(const GroupSpec&);  // n <= 6

}  // namespace maxclass
