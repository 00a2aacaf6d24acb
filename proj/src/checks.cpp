#include "maxclass/checks.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "maxclass/lie.hpp"
#include "maxclass/table.hpp"
#include "maxclass/unit.hpp"
#include "maxclass/wreath.hpp"

namespace maxclass {

AlgebraElement naive_mul(const AlgebraElement& x, const AlgebraElement& y) {
  check_same_spec(x, y);
  AlgebraElement r = AlgebraElement::zero(x.spec);
  for (GroupElement g : supp(x))
    for (GroupElement h : supp(y)) {
      GroupElement p = g_mul(x.spec, g, h);
      (p.j ? r.x2 : r.x1).bits ^= u128_one << p.i;
    }
  return r;
}

uint64_t derive_seed(uint64_t campaign_seed, const std::string& check_id,
                     Family f, int n) {
  uint64_t h = 14695981039346656037ull;
  auto mix = [&](uint64_t byte) {
    h ^= byte & 0xff;
    h *= 1099511628211ull;
  };
  for (int i = 0; i < 8; ++i) mix(campaign_seed >> (8 * i));
  for (char ch : check_id) mix(static_cast<uint64_t>(ch));
  mix(static_cast<uint64_t>(family_letter(f)));
  mix(static_cast<uint64_t>(n));
  return h;
}

bool CheckDef::applies(Family f, int n) const {
  if (n < n_min || n > n_max) return false;
  switch (f) {
    case Family::dihedral: return dihedral;
    case Family::semidihedral: return semidihedral;
    case Family::quaternion: return quaternion;
  }
  return false;
}

namespace {

constexpr uint32_t k_random_pairs = 300;
constexpr uint32_t k_random_units = 1000;
constexpr uint32_t k_random_trials = 500;
constexpr uint32_t k_exponent_samples = 10000;

AlgebraElement element_from_bits(const GroupSpec& s, uint64_t v) {
  const uint32_t len = s.a_order;
  return {s,
          {u128(v) & cyc_mask(len), len},
          {u128(v >> len) & cyc_mask(len), len}};
}

CyclicElement random_cyclic(const GroupSpec& s, std::mt19937_64& rng) {
  return {((u128(rng()) << 64) | rng()) & cyc_mask(s.a_order), s.a_order};
}

AlgebraElement random_element(const GroupSpec& s, std::mt19937_64& rng) {
  AlgebraElement e = AlgebraElement::zero(s);
  e.x1 = random_cyclic(s, rng);
  e.x2 = random_cyclic(s, rng);
  return e;
}

// random element of H = { x1 + x2 b : x1 + x2 = 1 }
Unit random_h_unit(const GroupSpec& s, std::mt19937_64& rng) {
  AlgebraElement e = AlgebraElement::zero(s);
  e.x2 = random_cyclic(s, rng);
  e.x1 = cyc_one(s.a_order) + e.x2;
  return Unit(e);
}

// both components symmetrized, constant term fixing the augmentation
Unit random_self_conj_unit(const GroupSpec& s, std::mt19937_64& rng) {
  CyclicElement c = random_cyclic(s, rng), d = random_cyclic(s, rng);
  AlgebraElement e = AlgebraElement::zero(s);
  e.x1 = cyc_one(s.a_order) + c + bar(s, c);
  e.x2 = d + bar(s, d);
  return Unit(e);
}

std::vector<GroupElement> all_group_elements(const GroupSpec& s) {
  std::vector<GroupElement> out;
  out.reserve(s.group_order);
  for (uint32_t j = 0; j < 2; ++j)
    for (uint32_t i = 0; i < s.a_order; ++i) out.push_back({i, j});
  return out;
}

AlgebraElement alg_pow(AlgebraElement base, uint64_t e) {
  AlgebraElement acc = AlgebraElement::one(base.spec);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::vector<Unit> tower_units(const GroupSpec& s, const Unit& a_conj) {
  std::vector<Unit> tower;
  Unit cur = Unit::from_group(s, {0, 1});
  for (uint32_t i = 0; i < s.a_order / 2; ++i) {
    tower.push_back(cur);
    cur = conj_by(cur, a_conj);
  }
  return tower;
}

CheckOutcome ok(std::string detail, ordered_json w = ordered_json()) {
  return {true, std::move(detail), std::move(w)};
}

CheckOutcome bad(std::string detail, ordered_json w) {
  return {false, std::move(detail), std::move(w)};
}

// --- presentation and plain group arithmetic -------------------------------

CheckOutcome chk_group_relations(CheckContext& c) {
  const GroupSpec& s = c.spec;
  const GroupElement a{1, 0}, b{0, 1}, id{0, 0};
  if (!(g_pow(s, a, s.a_order) == id) || g_order(s, a) != s.a_order)
    return bad("order of a is not 2^{n-1}", {{"order", g_order(s, a)}});
  if (!(g_mul(s, b, b) == GroupElement{s.alpha_exp, 0}))
    return bad("b^2 mismatch", {{"b2", format_element(s, g_mul(s, b, b))}});
  uint64_t bo = g_order(s, b);
  uint64_t want_bo = s.family == Family::quaternion ? 4 : 2;
  if (bo != want_bo)
    return bad("order of b mismatch", {{"order", bo}, {"expected", want_bo}});
  GroupElement conj = g_mul(s, g_mul(s, g_inv(s, b), a), b);
  if (!(conj == GroupElement{s.conj_exp, 0}))
    return bad("b^{-1} a b mismatch", {{"got", format_element(s, conj)}});
  if ((uint64_t{s.conj_exp} * s.conj_exp) % s.a_order != 1)
    return bad("conjugation exponent is not an involution",
               {{"conj_exp", s.conj_exp}});

  std::vector<GroupElement> elems = all_group_elements(s);
  for (GroupElement g : elems)
    if (!(g_mul(s, g, g_inv(s, g)) == id))
      return bad("inverse failure", {{"g", format_element(s, g)}});

  uint64_t triples = 0;
  if (s.n <= 5) {
    for (GroupElement x : elems)
      for (GroupElement y : elems)
        for (GroupElement z : elems) {
          if (!(g_mul(s, g_mul(s, x, y), z) == g_mul(s, x, g_mul(s, y, z))))
            return bad("associativity failure",
                       {{"x", format_element(s, x)},
                        {"y", format_element(s, y)},
                        {"z", format_element(s, z)}});
          ++triples;
        }
  } else {
    for (uint32_t t = 0; t < 2000; ++t) {
      auto pick = [&] { return elems[c.rng() % elems.size()]; };
      GroupElement x = pick(), y = pick(), z = pick();
      if (!(g_mul(s, g_mul(s, x, y), z) == g_mul(s, x, g_mul(s, y, z))))
        return bad("associativity failure",
                   {{"x", format_element(s, x)},
                    {"y", format_element(s, y)},
                    {"z", format_element(s, z)}});
      ++triples;
    }
  }
  return ok("relations, orders, inverses, associativity on " +
                std::to_string(triples) + " triples",
            {{"triples", triples}});
}

CheckOutcome chk_commutator_subgroup(CheckContext& c) {
  const GroupSpec& s = c.spec;
  std::set<std::pair<uint32_t, uint32_t>> seen;
  std::vector<GroupElement> elems = all_group_elements(s);
  for (GroupElement x : elems)
    for (GroupElement y : elems) {
      GroupElement k = g_mul(s, g_mul(s, g_inv(s, x), g_inv(s, y)),
                             g_mul(s, x, y));
      seen.insert({k.i, k.j});
    }
  std::set<std::pair<uint32_t, uint32_t>> expected;
  for (GroupElement g : commutator_subgroup(s)) expected.insert({g.i, g.j});
  if (seen != expected)
    return bad("commutator set is not <a^2>",
               {{"count", seen.size()}, {"expected", expected.size()}});
  return ok("all " + std::to_string(seen.size()) +
                " commutators fill <a^2> exactly",
            {{"order", seen.size()}});
}

// --- component arithmetic vs the convolution oracle ------------------------

CheckOutcome chk_mul_formula(CheckContext& c) {
  const GroupSpec& s = c.spec;
  std::vector<GroupElement> elems = all_group_elements(s);
  for (GroupElement g : elems)
    for (GroupElement h : elems) {
      AlgebraElement mg = AlgebraElement::monomial(s, g);
      AlgebraElement mh = AlgebraElement::monomial(s, h);
      AlgebraElement p = mg * mh;
      if (!(p == naive_mul(mg, mh)) ||
          !(p == AlgebraElement::monomial(s, g_mul(s, g, h))))
        return bad("monomial product mismatch",
                   {{"g", format_element(s, g)}, {"h", format_element(s, h)}});
    }
  for (uint32_t t = 0; t < k_random_pairs; ++t) {
    AlgebraElement x = random_element(s, c.rng), y = random_element(s, c.rng);
    if (!(x * y == naive_mul(x, y)))
      return bad("random product mismatch",
                 {{"x", format_algebra(x)}, {"y", format_algebra(y)}});
  }
  return ok("component formula matches convolution on " +
                std::to_string(s.group_order * s.group_order) +
                " monomial pairs and " + std::to_string(k_random_pairs) +
                " random pairs",
            {{"monomial_pairs", s.group_order * s.group_order},
             {"random_pairs", k_random_pairs}});
}

CheckOutcome chk_unit_criterion(CheckContext& c) {
  const GroupSpec& s = c.spec;
  uint64_t units = 0, non_units = 0;
  auto probe = [&](const AlgebraElement& e) -> bool {
    if (augmentation(e) == 1) {
      AlgebraElement inv = invert_unit(e);
      ++units;
      return e * inv == AlgebraElement::one(s) &&
             inv * e == AlgebraElement::one(s);
    }
    try {
      invert_unit(e);
      return false;  // augmentation-0 elements must be rejected
    } catch (const Error& err) {
      ++non_units;
      return err.code() == Errc::not_a_unit;
    }
  };
  if (s.n == 3) {
    for (uint64_t v = 0; v < 256; ++v)
      if (!probe(element_from_bits(s, v)))
        return bad("invertibility boundary failure at bit pattern " +
                       std::to_string(v),
                   {{"bits", v}});
  } else {
    for (uint32_t t = 0; t < k_random_units; ++t) {
      AlgebraElement e = random_element(s, c.rng);
      if (!probe(e)) return bad("invertibility failure", {{"x", format_algebra(e)}});
      e.x1.bits ^= u128_one;  // flip the augmentation
      if (!probe(e)) return bad("invertibility failure", {{"x", format_algebra(e)}});
    }
  }
  return ok("augmentation 1 is exactly invertibility (" +
                std::to_string(units) + " units, " + std::to_string(non_units) +
                " rejections)",
            {{"units", units}, {"non_units", non_units}});
}

CheckOutcome chk_commute_with_b(CheckContext& c) {
  const GroupSpec& s = c.spec;
  AlgebraElement b = AlgebraElement::monomial(s, {0, 1});
  auto probe = [&](const AlgebraElement& x) {
    return (x * b == b * x) == self_conjugated(x) &&
           bar(bar(x)) == x;
  };
  if (s.n == 3) {
    for (uint64_t v = 0; v < 256; ++v)
      if (!probe(element_from_bits(s, v)))
        return bad("centralizer of b mismatch", {{"bits", v}});
  } else {
    for (GroupElement g : all_group_elements(s))
      if (!probe(AlgebraElement::monomial(s, g)))
        return bad("centralizer of b mismatch", {{"g", format_element(s, g)}});
    for (uint32_t t = 0; t < k_random_units; ++t)
      if (!probe(random_element(s, c.rng)))
        return bad("centralizer of b mismatch", {{"trial", t}});
  }
  for (uint32_t t = 0; t < k_random_trials; ++t) {
    AlgebraElement x = random_element(s, c.rng), y = random_element(s, c.rng);
    if (!(bar(x * y) == bar(x) * bar(y)))
      return bad("conjugation by b is not multiplicative",
                 {{"x", format_algebra(x)}, {"y", format_algebra(y)}});
  }
  return ok("commuting with b is exactly being fixed by conjugation");
}

CheckOutcome chk_self_conj_commute(CheckContext& c) {
  const GroupSpec& s = c.spec;
  for (uint32_t t = 0; t < k_random_trials; ++t) {
    CyclicElement r = random_cyclic(s, c.rng);
    CyclicElement sym = r + bar(s, r);
    AlgebraElement cc = embed(s, sym);
    AlgebraElement x = random_element(s, c.rng);
    if (!(cc * x == x * cc) || !(scale(x, sym) == x * cc))
      return bad("symmetric b-free element is not central",
                 {{"c", format_algebra(cc)}, {"x", format_algebra(x)}});
    CyclicElement nx = norm(x);
    AlgebraElement ne = embed(s, nx);
    if (!(bar(s, nx) == nx) || !(ne * x == x * ne))
      return bad("norm value is not central", {{"x", format_algebra(x)}});
  }
  return ok("conjugation-fixed b-free elements are central; norms included");
}

CheckOutcome chk_norm_hom(CheckContext& c) {
  const GroupSpec& s = c.spec;
  if (!(norm(AlgebraElement::one(s)) == cyc_one(s.a_order)))
    return bad("norm(1) != 1", ordered_json::object());
  for (uint32_t t = 0; t < k_random_units; ++t) {
    AlgebraElement x = random_element(s, c.rng), y = random_element(s, c.rng);
    if (!(norm(x * y) == norm(x) * norm(y)))
      return bad("norm is not multiplicative",
                 {{"x", format_algebra(x)}, {"y", format_algebra(y)}});
    if ((cyc_parity(norm(x)) == 1) != (augmentation(x) == 1))
      return bad("norm does not preserve the unit boundary",
                 {{"x", format_algebra(x)}});
  }
  return ok("norm multiplicative on all of KG and unit-preserving");
}

CheckOutcome chk_inverse_formula(CheckContext& c) {
  const GroupSpec& s = c.spec;
  uint64_t count = 0;
  auto probe = [&](const Unit& u) {
    Unit v = u.inverse();
    ++count;
    return u * v == Unit::one(s) && v * u == Unit::one(s);
  };
  if (s.n == 3) {
    for (uint64_t bits = 0; bits < 256; ++bits) {
      AlgebraElement e = element_from_bits(s, bits);
      if (augmentation(e) != 1) continue;
      if (!probe(Unit(e)))
        return bad("closed-form inverse failed", {{"x", format_algebra(e)}});
    }
  } else {
    for (uint32_t t = 0; t < k_random_units; ++t) {
      Unit u = random_unit(s, c.rng);
      if (!probe(u))
        return bad("closed-form inverse failed", {{"x", format_algebra(u.value)}});
    }
  }
  return ok("two-sided inverse on " + std::to_string(count) + " units",
            {{"units", count}});
}

CheckOutcome chk_conj_formula(CheckContext& c) {
  const GroupSpec& s = c.spec;
  for (uint32_t t = 0; t < k_random_trials; ++t) {
    Unit f = random_unit(s, c.rng);
    Unit h = random_self_conj_unit(s, c.rng);
    Unit direct = f.inverse() * h * f;
    if (!(conj_by(h, f) == direct))
      return bad("conjugation closed form mismatch",
                 {{"h", format_algebra(h.value)}, {"f", format_algebra(f.value)}});
  }
  try {
    conj_by(Unit::from_group(s, {1, 1}), Unit::from_group(s, {1, 0}));
    return bad("non-self-conjugated input was accepted",
               ordered_json::object());
  } catch (const Error& err) {
    if (err.code() != Errc::not_self_conjugated)
      return bad("wrong rejection category", {{"got", err.what()}});
  }
  return ok("closed form equals f^{-1} h f on " +
            std::to_string(k_random_trials) + " conjugations");
}

CheckOutcome chk_power_formula(CheckContext& c) {
  const GroupSpec& s = c.spec;
  const int kmax = 6;
  for (uint32_t t = 0; t < k_random_trials; ++t) {
    AlgebraElement x = random_element(s, c.rng);
    AlgebraElement sq = x;
    for (int k = 1; k <= kmax; ++k) {
      sq = sq * sq;
      if (!(pow2k(x, k) == sq))
        return bad("power formula mismatch at k = " + std::to_string(k),
                   {{"x", format_algebra(x)}, {"k", k}});
    }
  }
  return ok("closed form matches repeated squaring up to 2^" +
            std::to_string(kmax) + " on " + std::to_string(k_random_trials) +
            " elements");
}

CheckOutcome chk_set_sum_identity(CheckContext& c) {
  const GroupSpec& s = c.spec;
  for (GroupElement g : all_group_elements(s)) {
    uint64_t ord = g_order(s, g);
    AlgebraElement base =
        AlgebraElement::one(s) + AlgebraElement::monomial(s, g);
    AlgebraElement sum = AlgebraElement::zero(s);
    GroupElement p{0, 0};
    for (uint64_t j = 0; j < ord; ++j) {
      sum += AlgebraElement::monomial(s, p);
      p = g_mul(s, p, g);
    }
    if (!(alg_pow(base, ord - 1) == sum))
      return bad("(1+g)^{ord-1} is not the subgroup sum",
                 {{"g", format_element(s, g)}, {"order", ord}});
  }
  if (!(set_sum(s, 2) == embed(s, cyc_subgroup_sum(s.a_order, 2))))
    return bad("<a^2> sum helper disagrees", ordered_json::object());
  return ok("(1+g)^{|g|-1} equals the cyclic sum for every group element");
}

// --- the H subgroup and its norm map (dihedral/semidihedral) ---------------

CheckOutcome chk_h_subgroup(CheckContext& c) {
  const GroupSpec& s = c.spec;
  if (s.n == 3) {
    uint64_t members = 0;
    std::vector<Unit> hs;
    for (uint64_t v = 0; v < 256; ++v) {
      AlgebraElement e = element_from_bits(s, v);
      if (augmentation(e) != 1) continue;
      Unit u(e);
      if (in_H(u)) {
        ++members;
        hs.push_back(u);
      }
    }
    if (members != (uint64_t{1} << s.a_order))
      return bad("membership count mismatch",
                 {{"count", members},
                  {"expected", uint64_t{1} << s.a_order}});
    for (const Unit& x : hs)
      for (const Unit& y : hs)
        if (!in_H(x * y) || !in_H(x.inverse()))
          return bad("H is not closed",
                     {{"x", format_algebra(x.value)},
                      {"y", format_algebra(y.value)}});
    return ok("H enumerated exhaustively: " + std::to_string(members) +
                  " members, closed under product and inverse",
              {{"members", members}});
  }
  for (uint32_t t = 0; t < k_random_trials; ++t) {
    Unit x = random_h_unit(s, c.rng), y = random_h_unit(s, c.rng);
    if (!in_H(x) || !in_H(x * y) || !in_H(x.inverse()))
      return bad("H is not closed",
                 {{"x", format_algebra(x.value)},
                  {"y", format_algebra(y.value)}});
  }
  return ok("component-sum-1 elements closed under product and inverse");
}

CheckOutcome chk_psi_kernel(CheckContext& c) {
  const GroupSpec& s = c.spec;
  const uint32_t len = s.a_order;
  Unit b = Unit::from_group(s, {0, 1});
  for (uint32_t t = 0; t < k_random_trials; ++t) {
    Unit x = random_h_unit(s, c.rng), y = random_h_unit(s, c.rng);
    if (!(psi(x * y) == psi(x) * psi(y)))
      return bad("psi is not multiplicative on H",
                 {{"x", format_algebra(x.value)},
                  {"y", format_algebra(y.value)}});
    // psi(h) = 1 exactly when h commutes with b
    bool trivial = psi(x) == cyc_one(len);
    bool commutes = x * b == b * x;
    if (trivial != commutes)
      return bad("kernel of psi is not the centralizer of b",
                 {{"x", format_algebra(x.value)}});

    // kernel elements (1+c) + c b for conjugation-fixed c: involutions
    // whose parameters add under the product
    CyclicElement cc = random_cyclic(s, c.rng);
    cc += bar(s, cc);
    CyclicElement dd = random_cyclic(s, c.rng);
    dd += bar(s, dd);
    auto kernel_elem = [&](const CyclicElement& p) {
      AlgebraElement e = AlgebraElement::zero(s);
      e.x1 = cyc_one(len) + p;
      e.x2 = p;
      return Unit(e);
    };
    Unit k1 = kernel_elem(cc), k2 = kernel_elem(dd);
    if (!(psi(k1) == cyc_one(len)) || !(k1 * b == b * k1) ||
        !(k1 * k1 == Unit::one(s)) || !(k1 * k2 == kernel_elem(cc + dd)))
      return bad("kernel parametrization failure",
                 {{"c", format_algebra(embed(s, cc))},
                  {"d", format_algebra(embed(s, dd))}});
  }
  return ok("psi multiplicative; kernel = centralizer of b, elementary "
            "abelian with additive parameters");
}

// --- the tower conjugator and its conjugate tower ---------------------------

CheckOutcome chk_order_of_a(CheckContext& c) {
  const GroupSpec& s = c.spec;
  Unit A = tower_conjugator(s);
  uint64_t order = order_of_unit(A, uint64_t{s.a_order} * 2);
  Unit ah = unit_pow(A, s.a_order / 2);
  // The <a>-sum form of the half power needs <a^{2^{n-2}+2}> = <a^2>, which
  // degenerates for the quaternion group of order 8: there the second
  // component is zero and the order claim rests on the first component.
  bool degenerate = s.family == Family::quaternion && s.n == 3;
  bool second_ok = degenerate ? ah.value.x2.is_zero()
                              : ah.value.x2 == cyc_all_ones(s.a_order);
  if (order != s.a_order || !second_ok)
    return bad("tower conjugator order or half-power mismatch",
               {{"order", order},
                {"expected", s.a_order},
                {"half_power", format_algebra(ah.value)}});
  return ok("order " + std::to_string(order) +
                (degenerate
                     ? "; half-power second component degenerates to 0"
                     : "; second component of the half power is the full "
                       "<a> sum"),
            {{"order", order}, {"degenerate", degenerate}});
}

CheckOutcome chk_tower_ds(CheckContext& c) {
  const GroupSpec& s = c.spec;
  Unit A = tower_conjugator(s);
  Unit cur = Unit::from_group(s, {0, 1});
  for (uint32_t k = 1; k <= s.a_order / 2; ++k) {
    cur = conj_by(cur, A);
    if (!(b_tower_ds(s, k) == cur))
      return bad("tower closed form mismatch at k = " + std::to_string(k),
                 {{"k", k}, {"iterated", format_algebra(cur.value)}});
  }
  return ok("closed form matches iterated conjugation for k = 1.." +
            std::to_string(s.a_order / 2));
}

CheckOutcome chk_tower_q(CheckContext& c) {
  const GroupSpec& s = c.spec;
  Unit A = tower_conjugator(s);
  Unit cur = Unit::from_group(s, {0, 1});
  for (uint32_t k = 1; k <= s.a_order / 2; ++k) {
    cur = conj_by(cur, A);
    if (!(b_tower_q(s, k) == cur))
      return bad("tower closed form mismatch at k = " + std::to_string(k),
                 {{"k", k}, {"iterated", format_algebra(cur.value)}});
  }
  return ok("closed form matches iterated conjugation for k = 1.." +
            std::to_string(s.a_order / 2));
}

CheckOutcome chk_direct_decomposition(CheckContext& c) {
  const GroupSpec& s = c.spec;
  const uint32_t half = s.a_order / 2;
  Unit A = tower_conjugator(s);
  std::vector<Unit> tower = tower_units(s, A);
  std::unordered_set<UnitKey, UnitKeyHash> seen;
  Unit prod = Unit::one(s);
  seen.insert(unit_key(prod));
  for (uint64_t j = 1; j < (uint64_t{1} << half); ++j) {
    prod = prod * tower[std::countr_zero(j)];  // Gray-code walk
    seen.insert(unit_key(prod));
  }
  uint64_t expect = uint64_t{1} << half;
  if (seen.size() != expect)
    return bad("tower products collide",
               {{"distinct", seen.size()}, {"expected", expect}});
  return ok("all " + std::to_string(expect) +
                " subset products of the conjugate tower are distinct",
            {{"distinct", seen.size()}});
}

// --- wreath construction and the section claims ----------------------

CheckOutcome chk_wreath_build(CheckContext& c) {
  const uint32_t m = static_cast<uint32_t>(c.spec.n) - 2;
  GroupTable w = build_wreath(m);
  w.validate();
  uint32_t expect_order = (1u << (1u << m)) << m;
  uint32_t cls = nilpotency_class(w);
  size_t z = center(w).size();
  ordered_json witness{{"m", m},
                       {"order", w.order},
                       {"class", cls},
                       {"center", z}};
  if (w.order != expect_order || cls != (1u << m) || z != 2)
    return bad("wreath table invariants mismatch", witness);
  return ok("order " + std::to_string(w.order) + ", class " +
                std::to_string(cls) + ", center of order 2",
            witness);
}

ordered_json section_witness(const SectionResult& r) {
  return ordered_json{
      {"f_order", r.f_order},
      {"expected_f_order", r.expected_f_order},
      {"kernel_order", r.kernel_order},
      {"kernel_central", r.kernel_central},
      {"section_order", r.section.quotient.order},
      {"expected_order", r.expected_order},
      {"class", r.section_class},
      {"expected_class", r.expected_class},
      {"iso_mode",
       r.iso.mode == IsoMode::explicit_search ? "explicit" : "invariants"},
      {"isomorphic", r.iso.isomorphic},
      {"base_elementary_abelian", r.base_elementary_abelian},
      {"witness_nontrivial", r.witness_nontrivial},
      {"nonmembership", r.nonmembership_ok},
      {"second_component", r.second_component_witness}};
}

CheckOutcome chk_section_ds(CheckContext& c) {
  SectionResult r = construct_section_ds(c.spec);
  ordered_json w = section_witness(r);
  if (!r.ok) return bad("section does not match the wreath product", w);
  return ok("quotient of order " + std::to_string(r.section.quotient.order) +
                " matches the wreath product (" +
                std::string(r.iso.mode == IsoMode::explicit_search
                                ? "explicit isomorphism"
                                : "invariant fingerprint") +
                ")",
            w);
}

CheckOutcome chk_section_q(CheckContext& c) {
  SectionResult r = construct_section_q(c.spec);
  ordered_json w = section_witness(r);
  if (!r.ok) return bad("section does not match the wreath product", w);
  return ok("quotient of order " + std::to_string(r.section.quotient.order) +
                " matches the wreath product; witness commutator nontrivial",
            w);
}

CheckOutcome chk_telescope(CheckContext& c) {
  TelescopeReport rep = telescope_identity_check(c.spec);
  ordered_json w{{"product_identity", rep.product_identity},
                 {"chain_exact", rep.chain_exact},
                 {"chain_mod_center", rep.chain_mod_center}};
  if (!rep.ok) return bad("telescope identities failed", w);
  return ok(c.spec.n == 3
                ? "products match; the commutator chain matches up to the "
                  "central b^2"
                : "products and the commutator chain match exactly",
            w);
}

// --- Lie structure ----------------------------------------------------------

CheckOutcome chk_commutator_collapse(CheckContext& c) {
  const GroupSpec& s = c.spec;
  const uint32_t half = s.a_order / 2;
  AlgebraElement a = AlgebraElement::monomial(s, {1, 0});
  CyclicElement a_plus_abar =
      cyc_monomial(s.a_order, 1) + cyc_monomial(s.a_order, s.conj_exp);
  AlgebraElement cur = AlgebraElement::monomial(s, {0, 1});
  for (uint32_t k = 1; k <= half; ++k) {
    cur = lie_bracket(cur, a);
    AlgebraElement want = AlgebraElement::zero(s);
    want.x2 = cyc_pow(a_plus_abar, k);
    if (!(cur == want))
      return bad("bracket closed form mismatch at k = " + std::to_string(k),
                 {{"k", k}, {"got", format_algebra(cur)}});
    if (k < half && cur.is_zero())
      return bad("bracket vanished early", {{"k", k}});
  }
  if (!cur.is_zero())
    return bad("bracket of length |G'|+1 did not vanish",
               {{"got", format_algebra(cur)}});
  return ok("[b, k*a] = (a + abar)^k b, nonzero below length " +
            std::to_string(half) + ", zero at " + std::to_string(half + 1));
}

CheckOutcome chk_q_unit_class(CheckContext& c) {
  QuaternionClassResult r = verify_quaternion_class(c.spec);
  ordered_json w{{"closed_form_ok", r.closed_form_ok},
                 {"long_bracket_nonzero", r.long_bracket_nonzero},
                 {"long_bracket_matches", r.long_bracket_matches},
                 {"t_L", r.t_lower},
                 {"expected_index", r.expected_index}};
  if (r.brute_forced) w["brute_class"] = r.brute_class;
  if (!r.ok) return bad("nilpotency class facts failed", w);
  return ok("t_L = " + std::to_string(r.t_lower) + " = |G'| + 1" +
                (r.brute_forced ? "; unit group class brute-forced to " +
                                      std::to_string(r.brute_class)
                                : ""),
            w);
}

CheckOutcome chk_lie_indices(CheckContext& c) {
  const GroupSpec& s = c.spec;
  LieIndices li = lie_indices(s);
  std::vector<uint32_t> dims = delta_power_dims(s);
  const uint32_t half = s.a_order / 2;  // |G'|
  bool strict = dims.front() == s.group_order && dims.back() == 0;
  for (size_t i = 0; i + 1 < dims.size(); ++i)
    strict = strict && dims[i] > dims[i + 1];
  bool contain = true;
  if (s.n <= 6) {
    for (uint32_t m = 1; m <= li.t_lower; ++m)
      contain = contain &&
                upper_lie_power(s, m).contains_all(lower_lie_power(s, m));
  }
  ordered_json w{{"t_L", li.t_lower},     {"t_upper", li.t_upper},
                 {"t_aug", li.t_aug},     {"cl_bound", li.cl_bound},
                 {"delta_dims", dims},    {"strictly_decreasing", strict},
                 {"upper_contains_lower", contain}};
  bool pass = li.t_lower == half + 1 && li.t_upper == li.t_lower &&
              li.t_aug == half && dims.size() == size_t(li.t_aug) + 1 &&
              strict && contain;
  if (!pass) return bad("index identities failed", w);
  return ok("t_L = t_upper = " + std::to_string(li.t_lower) +
                ", t_aug = " + std::to_string(li.t_aug) +
                " = |G'|; ideal chain dimensions strictly decreasing",
            w);
}

CheckOutcome chk_exponent(CheckContext& c) {
  ExponentResult r = exponent_check(c.spec, c.rng, k_exponent_samples);
  ordered_json w{{"checked", r.checked},       {"exhaustive", r.exhaustive},
                 {"max_order", r.max_order},   {"exponent", r.group_exponent},
                 {"t_upper", r.t_upper},       {"index_bound", r.index_bound}};
  if (!r.ok) return bad("unit order or index bound failed", w);
  return ok("orders of " + std::to_string(r.checked) +
                (r.exhaustive ? " (all)" : " sampled") +
                " units divide " + std::to_string(r.group_exponent) +
                ", attained; t_upper within the bound",
            w);
}

CheckOutcome chk_lie_metabelian(CheckContext& c) {
  MetabelianResult r = lie_centrally_metabelian_check(c.spec);
  ordered_json w{{"pair_brackets", r.pairs},
                 {"distinct_inner", r.distinct_inner}};
  if (!r.ok) return bad("a fifth bracket is nonzero", w);
  return ok("[[x,y],[z,w]],v] = 0 over all monomial tuples (" +
                std::to_string(r.distinct_inner) + " distinct inner brackets)",
            w);
}

}  // namespace

const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> regs = [] {
    std::vector<CheckDef> v;
    auto add = [&](const char* id, const char* claim, const char* strategy,
                   bool d, bool sd, bool q, int lo, int hi,
                   std::function<CheckOutcome(CheckContext&)> fn) {
      v.push_back({id, claim, strategy, d, sd, q, lo, hi, std::move(fn)});
    };
    add("group_relations",
        "the presentation relations hold and fix element orders: a has order "
        "2^{n-1}, b squares to the family twist, conjugation by b raises a to "
        "an involutory exponent",
        "direct normal-form arithmetic; inverses for every element; "
        "associativity exhaustively for n <= 5 and on 2000 sampled triples "
        "beyond",
        true, true, true, 3, 8, chk_group_relations);
    add("commutator_subgroup",
        "the commutators of the group fill <a^2> exactly, a cyclic subgroup "
        "of order 2^{n-2}",
        "all |G|^2 commutators collected and compared with <a^2> as sets",
        true, true, true, 3, 8, chk_commutator_subgroup);
    add("mul_formula",
        "the two-component product formula is the group-algebra product",
        "differential test against termwise convolution: every monomial "
        "pair, plus random dense pairs",
        true, true, true, 3, 8, chk_mul_formula);
    add("unit_criterion",
        "an element is invertible exactly when its coefficient sum is 1",
        "exhaustive over all 256 elements at n = 3; random elements on both "
        "sides of the boundary beyond, expecting closed-form inverses or "
        "NotAUnit rejections",
        true, true, true, 3, 8, chk_unit_criterion);
    add("commute_with_b",
        "an element commutes with b exactly when conjugation by b fixes it; "
        "conjugation is an involutory algebra automorphism",
        "exhaustive at n = 3; all monomials plus random elements beyond",
        true, true, true, 3, 8, chk_commute_with_b);
    add("self_conj_commute",
        "conjugation-fixed b-free elements are central; norms are such "
        "elements",
        "randomized symmetrizations multiplied against random elements",
        true, true, true, 3, 8, chk_self_conj_commute);
    add("norm_hom",
        "the norm x1 bar(x1) + x2 bar(x2) b^2 is multiplicative on the whole "
        "algebra and preserves the unit boundary",
        "random pairs compared on both sides; parity matched against the "
        "augmentation",
        true, true, true, 3, 8, chk_norm_hom);
    add("inverse_formula",
        "the closed-form inverse (bar(f1) + f2 b) norm^{-1} is a two-sided "
        "inverse",
        "exhaustive over all 128 units at n = 3; random units beyond",
        true, true, true, 3, 8, chk_inverse_formula);
    add("conj_formula",
        "the closed-form conjugation of a self-conjugated unit agrees with "
        "f^{-1} h f",
        "random conjugator/target pairs; a non-self-conjugated target is "
        "rejected with NotSelfConjugated",
        true, true, true, 3, 8, chk_conj_formula);
    add("power_formula",
        "the closed form for x^{2^k} holds for every element",
        "random elements against repeated squaring for k = 1..6",
        true, true, true, 3, 8, chk_power_formula);
    add("set_sum_identity",
        "(1+g)^{|g|-1} equals the sum over <g> for every group element",
        "direct expansion for all 2^n group elements",
        true, true, true, 3, 8, chk_set_sum_identity);
    add("h_subgroup",
        "elements with component sum 1 form a subgroup of the units",
        "exhaustive membership count and closure at n = 3; random closure "
        "probes beyond",
        true, true, false, 3, 8, chk_h_subgroup);
    add("psi_kernel",
        "psi(h) = 1 + h1 + bar(h1) is multiplicative on that subgroup and "
        "its kernel is the elementary abelian centralizer of b with additive "
        "parameters",
        "random products, kernel parametrization (1+c) + c b, and the "
        "kernel/centralizer equivalence",
        true, true, false, 3, 8, chk_psi_kernel);
    add("order_of_A_ds",
        "the tower conjugator a + (1+a)b has order 2^{n-1}, and the second "
        "component of its 2^{n-2} power is the full <a> sum",
        "order by repeated squaring; the half power computed explicitly",
        true, true, false, 3, 8, chk_order_of_a);
    add("tower_ds",
        "conjugating b by powers of the tower conjugator gives "
        "1 + R^k + R^k b with R its norm",
        "closed form against iterated conjugation for every k up to 2^{n-2}",
        true, true, false, 3, 8, chk_tower_ds);
    add("direct_decomposition",
        "the 2^{n-2} tower conjugates generate an elementary abelian group "
        "of full rank: all subset products are distinct",
        "Gray-code walk over all 2^{2^{n-2}} subset products with a hash "
        "table",
        true, true, false, 3, 6, chk_direct_decomposition);
    add("wreath_build",
        "the wreath product of C2 by the cyclic group of order 2^{n-2} has "
        "order 2^{2^{n-2}} 2^{n-2}, nilpotency class 2^{n-2}, and center of "
        "order 2",
        "explicit table, validated, with its lower central series and center",
        true, true, true, 3, 5, chk_wreath_build);
    add("section_wreath_ds",
        "the closure of the conjugate tower with the tower conjugator, "
        "modulo the central half power, is the wreath product of C2 by "
        "C_{2^{n-2}}",
        "table closure, verified-normal quotient, class comparison, and "
        "explicit isomorphism up to order 512 (invariant fingerprint at "
        "n = 5); tower subgroup checked elementary abelian",
        true, true, false, 3, 5, chk_section_ds);
    add("order_of_A_q",
        "the quaternion tower conjugator a^{2^{n-3}+1} + (1+a)b has order "
        "2^{n-1}; the second component of its 2^{n-2} power is the full "
        "<a> sum for n >= 4 and degenerates to zero at n = 3",
        "order by repeated squaring; the half power computed explicitly",
        false, false, true, 3, 8, chk_order_of_a);
    add("tower_q",
        "conjugating b by powers of the quaternion tower conjugator gives "
        "beta (sum of (b^2 R)^i, i = -1..k-2) + (b^2 R)^k b",
        "closed form against iterated conjugation for every k up to 2^{n-2}",
        false, false, true, 3, 8, chk_tower_q);
    add("telescope",
        "b b^A ... b^{A^{k-1}} = (b A^{-1})^k A^k for every k, and the "
        "left-normed commutator chain over b, A, A^2, ..., A^{2^{n-3}} "
        "equals that product, exactly for n >= 4 and up to the central b^2 "
        "at n = 3",
        "direct unit arithmetic on both sides",
        false, false, true, 3, 6, chk_telescope);
    add("section_wreath_q",
        "the closure of the quaternion tower with its conjugator, modulo the "
        "central subgroup generated by b^2 and the half power, is the wreath "
        "product of C2 by C_{2^{n-2}}; the long witness commutator survives "
        "and (b A^{-1})^{2^{n-2}} avoids the kernel",
        "table closure, verified-normal quotient, class comparison, "
        "isomorphism as in the dihedral case, explicit kernel membership "
        "tests, and the second-component witness",
        false, false, true, 3, 5, chk_section_q);
    add("commutator_collapse",
        "[b, k*a] = (a + bar(a))^k b: nonzero for k < 2^{n-2} and zero at "
        "k = 2^{n-2}",
        "iterated brackets compared against the closed form",
        true, true, true, 3, 8, chk_commutator_collapse);
    add("q_unit_class",
        "the quaternion unit group has nilpotency class |G'| = 2^{n-2}: the "
        "bracket closed form below the collapse, a nonzero bracket of length "
        "2^{n-2} equal to a times the <a^2> sum times b, Lie index "
        "2^{n-2}+1, and at n = 3 a brute-forced class of 2",
        "subspace saturation for the index; full 128-element unit table at "
        "n = 3",
        false, false, true, 3, 8, chk_q_unit_class);
    add("lie_indices",
        "lower and upper Lie indices agree and equal |G'| + 1; the "
        "augmentation ideal of <a^2> has nilpotency index |G'|; the ideal "
        "chain it generates has strictly decreasing dimensions",
        "row-echelon subspace chains with ideal saturation; containment of "
        "lower powers in upper powers for n <= 6",
        true, true, true, 3, 8, chk_lie_indices);
    add("exponent",
        "every unit has order dividing 2^{n-1} and the bound is attained, "
        "so the unit group has the same exponent as the group; the upper "
        "Lie index obeys the 1 + 2^{n-2} bound that underpins this",
        "exhaustive unit orders for n <= 4, 10^4 sampled units at n = 5",
        true, true, true, 3, 5, chk_exponent);
    add("lie_metabelian",
        "the algebra satisfies [[x,y],[z,w]],v] = 0, so it is Lie centrally "
        "metabelian",
        "exhaustive monomial 5-tuples via pair brackets, deduplicated inner "
        "brackets, and a final bracket against every monomial",
        true, true, true, 3, 5, chk_lie_metabelian);
    return v;
  }();
  return regs;
}

const CheckDef& find_check(const std::string& id) {
  for (const CheckDef& c : check_registry())
    if (c.id == id) return c;
  raise(Errc::unknown_check, "no check named '" + id + "'");
}

}  // namespace maxclass
