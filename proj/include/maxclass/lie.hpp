#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "maxclass/algebra.hpp"

namespace maxclass {

// Coordinates over the monomial basis of KG: bit i is the coefficient of
// a^i, bit (a_order + i) the coefficient of a^i b. 256 bits cover the
// largest supported algebra (dimension 2^8).
using Vec256 = std::array<uint64_t, 4>;

Vec256 flatten(const AlgebraElement&);
AlgebraElement unflatten(const GroupSpec&, const Vec256&);
Vec256 flatten_cyclic(const CyclicElement&);
CyclicElement unflatten_cyclic(uint32_t len, const Vec256&);

// GF(2) row space in echelon form keyed by pivot bit. Insertion and
// membership are O(dim) word operations; rows() is deterministic
// (pivot-descending).
class Subspace {
 public:
  explicit Subspace(uint32_t width);

  uint32_t width() const { return width_; }
  uint32_t dim() const { return dim_; }
  bool is_zero() const { return dim_ == 0; }
  bool is_full() const { return dim_ == width_; }

  bool insert(Vec256 v);  // false if v was already in the span
  bool contains(Vec256 v) const;
  bool contains_all(const Subspace&) const;
  std::vector<Vec256> rows() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.width_ == b.width_ && a.dim_ == b.dim_ && a.contains_all(b);
  }

 private:
  uint32_t width_ = 0;
  uint32_t dim_ = 0;
  std::vector<Vec256> row_of_pivot_;
  std::vector<char> has_pivot_;
};

// [x, y] = xy + yx (characteristic 2)
AlgebraElement lie_bracket(const AlgebraElement&, const AlgebraElement&);

// All 2^n group monomials, b-free first, ascending exponent.
std::vector<AlgebraElement> monomial_basis(const GroupSpec&);

// span{ [u, m] : u a basis row, m a monomial }
Subspace bracket_step(const GroupSpec&, const Subspace&);
// Smallest two-sided ideal containing the subspace: saturation under
// left/right multiplication by the monomials (which span KG).
Subspace ideal_closure(const GroupSpec&, Subspace);

// Lie power series. The lower power of weight m is the ideal spanned by
// left-normed brackets of length m; the upper series iterates
// I_{m+1} = ideal generated by [I_m, KG]. Both indices are the least m
// with a zero power; the lower index is computed on bracket spans, whose
// vanishing is equivalent to the generated ideal vanishing.
Subspace lower_lie_power(const GroupSpec&, uint32_t m);
uint32_t lower_lie_index(const GroupSpec&);
Subspace upper_lie_power(const GroupSpec&, uint32_t m);
uint32_t upper_lie_index(const GroupSpec&);

// Least t with Delta(<a^d>)^t = 0, Delta the augmentation ideal of the
// subgroup algebra inside K<a>. Trivial subgroup gives 1.
uint32_t aug_nilpotency_index(const GroupSpec&, uint32_t d);

// Dimensions of Delta^k(<a^2>) KG for k = 0, 1, ... until the ideal is
// zero (the last entry). Strict decrease is part of the verified claim.
std::vector<uint32_t> delta_power_dims(const GroupSpec&);

struct LieIndices {
  uint32_t t_lower = 0;  // least m with the bracket span of weight m zero
  uint32_t t_upper = 0;  // least m with the upper power zero
  uint32_t t_aug = 0;    // nilpotency index of Delta(<a^2>)
  uint32_t cl_bound = 0; // t_lower - 1, an upper bound for cl U(KG)
};
LieIndices lie_indices(const GroupSpec&);

// Nilpotency class facts for the quaternion family: the closed form
// [b, k*a] = (a + a^{-1})^k b below the collapse length, the nonzero
// bracket of length 2^{n-2}, the index t_L = 2^{n-2} + 1, and at n = 3 a
// brute-force lower central series of the full 128-element unit group.
struct QuaternionClassResult {
  bool closed_form_ok = false;
  bool long_bracket_nonzero = false;
  bool long_bracket_matches = false;  // equals a * (sum over <a^2>) * b
  uint32_t t_lower = 0;
  uint32_t expected_index = 0;  // 2^{n-2} + 1
  bool index_ok = false;
  bool brute_forced = false;    // n = 3 only
  uint32_t brute_class = 0;
  bool ok = false;
};
QuaternionClassResult verify_quaternion_class(const GroupSpec&);

// Unit orders all divide exp G = 2^{n-1}, and the exponent is attained.
// Exhaustive over all augmentation-1 elements for n <= 4, sampled for
// n = 5. Also records the upper-index inequality t^L <= 1 + 2^{n-2} the
// exponent bound relies on.
struct ExponentResult {
  uint64_t checked = 0;
  bool exhaustive = false;
  uint64_t max_order = 0;
  uint64_t group_exponent = 0;
  bool all_divide = false;
  bool attained = false;
  uint32_t t_upper = 0;
  uint32_t index_bound = 0;  // 1 + 2^{n-2}
  bool bound_ok = false;
  bool ok = false;
};
ExponentResult exponent_check(const GroupSpec&, std::mt19937_64& rng,
                              uint32_t samples);

// [[x,y],[z,w]],v] = 0 over all monomial 5-tuples (multilinearity lifts
// this to all of KG). Returns the number of distinct inner brackets
// tested; throws nothing, a counterexample makes ok false.
struct MetabelianResult {
  uint64_t pairs = 0;
  uint64_t distinct_inner = 0;
  bool ok = false;
};
MetabelianResult lie_centrally_metabelian_check(const GroupSpec&);

}  // namespace maxclass
