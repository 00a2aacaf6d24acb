#include "maxclass/algebra.hpp"

#include <sstream>

namespace maxclass {

void check_same_spec(const AlgebraElement& x, const AlgebraElement& y) {
  if (!(x.spec == y.spec))
    raise(Errc::spec_mismatch, "elements of different group algebras");
}

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) {
  check_same_spec(x, y);
  x.x1.bits ^= y.x1.bits;
  x.x2.bits ^= y.x2.bits;
  return x;
}

AlgebraElement& operator+=(AlgebraElement& x, const AlgebraElement& y) {
  check_same_spec(x, y);
  x.x1.bits ^= y.x1.bits;
  x.x2.bits ^= y.x2.bits;
  return x;
}

CyclicElement bar(const GroupSpec& s, const CyclicElement& c) {
  return cyc_perm(c, s.conj_exp);
}

AlgebraElement bar(const AlgebraElement& x) {
  return {x.spec, bar(x.spec, x.x1), bar(x.spec, x.x2)};
}

bool self_conjugated(const AlgebraElement& x) { return bar(x) == x; }

CyclicElement alpha_value(const GroupSpec& s) {
  return cyc_monomial(s.a_order, s.alpha_exp);
}

AlgebraElement operator*(const AlgebraElement& f, const AlgebraElement& h) {
  check_same_spec(f, h);
  const GroupSpec& s = f.spec;
  AlgebraElement r = AlgebraElement::zero(s);
  r.x1 = f.x1 * h.x1 + cyc_shift(f.x2 * bar(s, h.x2), s.alpha_exp);
  r.x2 = f.x2 * bar(s, h.x1) + f.x1 * h.x2;
  return r;
}

int augmentation(const AlgebraElement& x) {
  return (cyc_parity(x.x1) + cyc_parity(x.x2)) & 1;
}

std::vector<GroupElement> supp(const AlgebraElement& x) {
  std::vector<GroupElement> out;
  for (uint32_t j = 0; j < 2; ++j) {
    u128 v = (j ? x.x2 : x.x1).bits;
    while (v) {
      int i = countr_zero128(v);
      v &= v - 1;
      out.push_back({static_cast<uint32_t>(i), j});
    }
  }
  return out;
}

CyclicElement norm(const AlgebraElement& x) {
  const GroupSpec& s = x.spec;
  return x.x1 * bar(s, x.x1) + cyc_shift(x.x2 * bar(s, x.x2), s.alpha_exp);
}

AlgebraElement scale(const AlgebraElement& x, const CyclicElement& c) {
  return {x.spec, x.x1 * c, x.x2 * c};
}

AlgebraElement embed(const GroupSpec& s, const CyclicElement& c) {
  if (c.len != s.a_order) raise(Errc::spec_mismatch, "wrong coefficient length");
  return {s, c, cyc_zero(s.a_order)};
}

AlgebraElement invert_unit(const AlgebraElement& f) {
  if (augmentation(f) != 1)
    raise(Errc::not_a_unit, "augmentation 0 element has no inverse");
  const GroupSpec& s = f.spec;
  CyclicElement rinv = cyc_inv(norm(f));
  return {s, bar(s, f.x1) * rinv, f.x2 * rinv};
}

AlgebraElement pow2k(const AlgebraElement& x, int k) {
  if (k < 1 || k > 30)
    raise(Errc::invalid_parameter, "pow2k needs 1 <= k <= 30");
  const GroupSpec& s = x.spec;
  uint32_t len = s.a_order;

  CyclicElement p = x.x2 * bar(s, x.x2);        // x2 bar(x2)
  CyclicElement t = x.x1 + bar(s, x.x1);        // x1 + bar(x1)
  uint64_t two_k = uint64_t{1} << k;

  // b^{2^i} as an element of K<a>: alpha for i = 1, trivial for i >= 2
  auto b_power = [&](int i) {
    return i == 1 ? alpha_value(s) : cyc_one(len);
  };

  CyclicElement first = x.x1;
  for (int i = 0; i < k; ++i) first = cyc_square(first);  // x1^{2^k}

  CyclicElement pq = p;                          // p^{2^{i-1}} running value
  for (int i = 1; i <= k - 1; ++i) {
    first += pq * cyc_pow(t, two_k - (uint64_t{1} << i)) * b_power(i);
    pq = cyc_square(pq);
  }
  // after the loop pq = p^{2^{k-1}}
  first += pq * b_power(k);

  CyclicElement second = x.x2 * cyc_pow(t, two_k - 1);
  return {s, first, second};
}

AlgebraElement set_sum(const GroupSpec& s, uint32_t d) {
  return embed(s, cyc_subgroup_sum(s.a_order, d));
}

std::string format_algebra(const AlgebraElement& x) {
  auto terms = supp(x);
  if (terms.empty()) return "0";
  std::string out;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i) out += " + ";
    out += format_element(x.spec, terms[i]);
  }
  return out;
}

AlgebraElement parse_algebra(const GroupSpec& s, const std::string& text) {
  AlgebraElement r = AlgebraElement::zero(s);
  std::string term;
  std::stringstream ss(text);
  bool any = false;
  while (std::getline(ss, term, '+')) {
    size_t lo = term.find_first_not_of(" \t");
    if (lo == std::string::npos) continue;
    size_t hi = term.find_last_not_of(" \t");
    std::string tok = term.substr(lo, hi - lo + 1);
    if (tok == "0") {
      any = true;
      continue;
    }
    GroupElement g = parse_element(s, tok);
    r += AlgebraElement::monomial(s, g);
    any = true;
  }
  if (!any) raise(Errc::parse_error, "empty algebra expression");
  return r;
}

}  // namespace maxclass
