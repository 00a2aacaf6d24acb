#include "maxclass/lie.hpp"

#include <numeric>
#include <unordered_set>

#include "maxclass/table.hpp"

namespace maxclass {

namespace {

bool v_is_zero(const Vec256& v) {
  return (v[0] | v[1] | v[2] | v[3]) == 0;
}

void v_xor(Vec256& a, const Vec256& b) {
  for (int i = 0; i < 4; ++i) a[i] ^= b[i];
}

// highest set bit, -1 for the zero vector
int v_high(const Vec256& v) {
  for (int w = 3; w >= 0; --w)
    if (v[w]) return 64 * w + 63 - std::countl_zero(v[w]);
  return -1;
}

// place a 128-bit value at bit offset shift (0..128) of a 256-bit row
Vec256 from_u128(u128 bits, uint32_t shift) {
  Vec256 v{};
  const uint64_t parts[2] = {static_cast<uint64_t>(bits),
                             static_cast<uint64_t>(bits >> 64)};
  const uint32_t w = shift / 64, o = shift % 64;
  for (uint32_t i = 0; i < 2; ++i) {
    if (!parts[i]) continue;
    v[w + i] |= parts[i] << o;
    if (o) v[w + i + 1] |= parts[i] >> (64 - o);
  }
  return v;
}

u128 to_u128(const Vec256& v, uint32_t shift, uint32_t len) {
  const uint32_t w = shift / 64, o = shift % 64;
  auto word = [&](uint32_t k) { return k < 4 ? v[k] : uint64_t{0}; };
  uint64_t lo = word(w), hi = word(w + 1);
  if (o) {
    lo = (lo >> o) | (word(w + 1) << (64 - o));
    hi = (hi >> o) | (word(w + 2) << (64 - o));
  }
  return ((u128(hi) << 64) | lo) & cyc_mask(len);
}

}  // namespace

Vec256 flatten(const AlgebraElement& x) {
  const uint32_t len = x.spec.a_order;
  Vec256 v = from_u128(x.x1.bits, 0);
  Vec256 w = from_u128(x.x2.bits, len);
  v_xor(v, w);
  return v;
}

AlgebraElement unflatten(const GroupSpec& s, const Vec256& v) {
  const uint32_t len = s.a_order;
  AlgebraElement x = AlgebraElement::zero(s);
  x.x1.bits = to_u128(v, 0, len);
  x.x2.bits = to_u128(v, len, len);
  return x;
}

Vec256 flatten_cyclic(const CyclicElement& c) { return from_u128(c.bits, 0); }

CyclicElement unflatten_cyclic(uint32_t len, const Vec256& v) {
  return {to_u128(v, 0, len), len};
}

Subspace::Subspace(uint32_t width) : width_(width) {
  if (width == 0 || width > 256)
    raise(Errc::invalid_parameter,
          "subspace width must be 1..256, got " + std::to_string(width));
  row_of_pivot_.resize(width);
  has_pivot_.assign(width, 0);
}

bool Subspace::insert(Vec256 v) {
  for (int h = v_high(v); h >= 0; h = v_high(v)) {
    if (!has_pivot_[h]) {
      row_of_pivot_[h] = v;
      has_pivot_[h] = 1;
      ++dim_;
      return true;
    }
    v_xor(v, row_of_pivot_[h]);
  }
  return false;
}

bool Subspace::contains(Vec256 v) const {
  for (int h = v_high(v); h >= 0; h = v_high(v)) {
    if (!has_pivot_[h]) return false;
    v_xor(v, row_of_pivot_[h]);
  }
  return true;
}

bool Subspace::contains_all(const Subspace& other) const {
  for (uint32_t h = 0; h < other.width_; ++h)
    if (other.has_pivot_[h] && !contains(other.row_of_pivot_[h])) return false;
  return true;
}

std::vector<Vec256> Subspace::rows() const {
  std::vector<Vec256> out;
  out.reserve(dim_);
  for (int h = static_cast<int>(width_) - 1; h >= 0; --h)
    if (has_pivot_[h]) out.push_back(row_of_pivot_[h]);
  return out;
}

AlgebraElement lie_bracket(const AlgebraElement& x, const AlgebraElement& y) {
  return x * y + y * x;
}

std::vector<AlgebraElement> monomial_basis(const GroupSpec& s) {
  std::vector<AlgebraElement> out;
  out.reserve(s.group_order);
  for (uint32_t j = 0; j < 2; ++j)
    for (uint32_t i = 0; i < s.a_order; ++i)
      out.push_back(AlgebraElement::monomial(s, {i, j}));
  return out;
}

Subspace bracket_step(const GroupSpec& s, const Subspace& b) {
  Subspace next(b.width());
  std::vector<AlgebraElement> monos = monomial_basis(s);
  for (const Vec256& row : b.rows()) {
    AlgebraElement u = unflatten(s, row);
    for (const AlgebraElement& m : monos) next.insert(flatten(lie_bracket(u, m)));
  }
  return next;
}

Subspace ideal_closure(const GroupSpec& s, Subspace v) {
  std::vector<AlgebraElement> monos = monomial_basis(s);
  std::vector<AlgebraElement> work;
  for (const Vec256& row : v.rows()) work.push_back(unflatten(s, row));
  while (!work.empty()) {
    AlgebraElement u = work.back();
    work.pop_back();
    for (const AlgebraElement& m : monos) {
      AlgebraElement l = m * u, r = u * m;
      if (v.insert(flatten(l))) work.push_back(l);
      if (v.insert(flatten(r))) work.push_back(r);
    }
  }
  return v;
}

static Subspace full_space(const GroupSpec& s) {
  Subspace b(s.group_order);
  for (const AlgebraElement& m : monomial_basis(s)) b.insert(flatten(m));
  return b;
}

Subspace lower_lie_power(const GroupSpec& s, uint32_t m) {
  if (m < 1) raise(Errc::invalid_parameter, "Lie power weight must be >= 1");
  Subspace b = full_space(s);
  for (uint32_t i = 1; i < m; ++i) b = bracket_step(s, b);
  return ideal_closure(s, b);
}

uint32_t lower_lie_index(const GroupSpec& s) {
  Subspace b = full_space(s);
  uint32_t m = 1;
  while (!b.is_zero()) {
    uint32_t prev = b.dim();
    b = bracket_step(s, b);
    ++m;
    if (b.dim() == prev)
      raise(Errc::spec_mismatch, "lower Lie series stalls at dimension " +
                                     std::to_string(prev));
  }
  return m;
}

Subspace upper_lie_power(const GroupSpec& s, uint32_t m) {
  if (m < 1) raise(Errc::invalid_parameter, "Lie power weight must be >= 1");
  Subspace b = full_space(s);
  for (uint32_t i = 1; i < m; ++i) b = ideal_closure(s, bracket_step(s, b));
  return b;
}

uint32_t upper_lie_index(const GroupSpec& s) {
  Subspace b = full_space(s);
  uint32_t m = 1;
  while (!b.is_zero()) {
    uint32_t prev = b.dim();
    b = ideal_closure(s, bracket_step(s, b));
    ++m;
    if (b.dim() == prev)
      raise(Errc::spec_mismatch, "upper Lie series stalls at dimension " +
                                     std::to_string(prev));
  }
  return m;
}

// basis (1 + a^{step j}) of the augmentation ideal of K<a^step>
static std::vector<CyclicElement> delta_basis(uint32_t len, uint32_t d) {
  uint32_t step = d ? std::gcd(d, len) : len;
  std::vector<CyclicElement> out;
  for (uint32_t j = step; j < len; j += step)
    out.push_back(cyc_one(len) + cyc_monomial(len, j));
  return out;
}

static Subspace cyclic_span(uint32_t len, const std::vector<CyclicElement>& v) {
  Subspace s(len);
  for (const CyclicElement& c : v) s.insert(flatten_cyclic(c));
  return s;
}

static Subspace cyclic_product_span(uint32_t len, const Subspace& p,
                                    const std::vector<CyclicElement>& gens) {
  Subspace next(len);
  for (const Vec256& row : p.rows()) {
    CyclicElement u = unflatten_cyclic(len, row);
    for (const CyclicElement& g : gens) next.insert(flatten_cyclic(u * g));
  }
  return next;
}

uint32_t aug_nilpotency_index(const GroupSpec& s, uint32_t d) {
  const uint32_t len = s.a_order;
  std::vector<CyclicElement> gens = delta_basis(len, d);
  if (gens.empty()) return 1;
  Subspace p = cyclic_span(len, gens);
  uint32_t t = 1;
  while (!p.is_zero()) {
    uint32_t prev = p.dim();
    p = cyclic_product_span(len, p, gens);
    ++t;
    if (p.dim() == prev)
      raise(Errc::spec_mismatch, "augmentation ideal powers stall");
  }
  return t;
}

std::vector<uint32_t> delta_power_dims(const GroupSpec& s) {
  const uint32_t len = s.a_order;
  std::vector<AlgebraElement> monos = monomial_basis(s);
  std::vector<CyclicElement> gens = delta_basis(len, 2);
  std::vector<uint32_t> dims{s.group_order};  // k = 0: the unit ideal
  Subspace p = cyclic_span(len, gens);
  while (true) {
    Subspace ideal(s.group_order);
    for (const Vec256& row : p.rows()) {
      AlgebraElement u = embed(s, unflatten_cyclic(len, row));
      for (const AlgebraElement& m : monos) ideal.insert(flatten(u * m));
    }
    dims.push_back(ideal.dim());
    if (ideal.dim() == 0) break;
    p = cyclic_product_span(len, p, gens);
  }
  return dims;
}

LieIndices lie_indices(const GroupSpec& s) {
  LieIndices r;
  r.t_lower = lower_lie_index(s);
  r.t_upper = upper_lie_index(s);
  r.t_aug = aug_nilpotency_index(s, 2);
  r.cl_bound = r.t_lower - 1;
  return r;
}

QuaternionClassResult verify_quaternion_class(const GroupSpec& s) {
  if (s.family != Family::quaternion)
    raise(Errc::wrong_family, "nilpotency class check is quaternion-only");
  const uint32_t len = s.a_order;
  const uint32_t half = len / 2;  // |G'| = 2^{n-2}
  QuaternionClassResult r;
  r.expected_index = half + 1;

  AlgebraElement a = AlgebraElement::monomial(s, {1, 0});
  CyclicElement a_plus_ainv = cyc_monomial(len, 1) + cyc_monomial(len, len - 1);
  AlgebraElement cur = AlgebraElement::monomial(s, {0, 1});
  r.closed_form_ok = true;
  for (uint32_t k = 1; k < half; ++k) {
    cur = lie_bracket(cur, a);
    AlgebraElement want = AlgebraElement::zero(s);
    want.x2 = cyc_pow(a_plus_ainv, k);
    r.closed_form_ok = r.closed_form_ok && cur == want;
  }
  // the bracket of length 2^{n-2} is [b, (2^{n-2}-1) * a]
  r.long_bracket_nonzero = !cur.is_zero();
  AlgebraElement want_long = AlgebraElement::zero(s);
  want_long.x2 = cyc_shift(cyc_subgroup_sum(len, 2), 1);
  r.long_bracket_matches = cur == want_long;

  r.t_lower = lower_lie_index(s);
  r.index_ok = r.t_lower == r.expected_index;

  if (s.n == 3) {
    r.brute_forced = true;
    r.brute_class = nilpotency_class(full_unit_group(s).table);
    r.index_ok = r.index_ok && r.brute_class == r.t_lower - 1;
  }
  r.ok = r.closed_form_ok && r.long_bracket_nonzero && r.long_bracket_matches &&
         r.index_ok;
  return r;
}

ExponentResult exponent_check(const GroupSpec& s, std::mt19937_64& rng,
                              uint32_t samples) {
  const uint32_t len = s.a_order;
  ExponentResult r;
  r.group_exponent = len;  // a has the maximal order 2^{n-1}
  r.all_divide = true;

  auto take = [&](const Unit& u) {
    uint64_t o;
    try {
      o = order_of_unit(u, uint64_t{1} << 14);
    } catch (const Error&) {
      o = uint64_t{1} << 15;  // over every admissible order
    }
    r.max_order = std::max(r.max_order, o);
    r.all_divide = r.all_divide && o <= r.group_exponent;
    ++r.checked;
  };

  r.exhaustive = 2 * len <= 16;  // n <= 4: at most 2^15 units
  if (r.exhaustive) {
    for (uint64_t v = 0; v < (uint64_t{1} << (2 * len)); ++v) {
      if (!(std::popcount(v) & 1)) continue;
      take(Unit(AlgebraElement{s, {u128(v) & cyc_mask(len), len},
                               {u128(v >> len), len}}));
    }
  } else {
    for (uint32_t i = 0; i < samples; ++i) take(random_unit(s, rng));
  }

  uint64_t order_of_a = order_of_unit(Unit::from_group(s, {1, 0}), len);
  r.attained = order_of_a == r.group_exponent &&
               (!r.exhaustive || r.max_order == r.group_exponent);

  r.t_upper = upper_lie_index(s);
  r.index_bound = 1 + len / 2;
  r.bound_ok = r.t_upper <= r.index_bound;
  r.ok = r.all_divide && r.attained && r.bound_ok;
  return r;
}

MetabelianResult lie_centrally_metabelian_check(const GroupSpec& s) {
  if (s.n > 5)
    raise(Errc::out_of_range, "monomial scan supported for n <= 5");
  std::vector<AlgebraElement> monos = monomial_basis(s);
  MetabelianResult r;
  r.ok = true;

  // char 2 makes the bracket symmetric, so unordered pairs cover every
  // ordered tuple and the diagonal vanishes
  std::vector<AlgebraElement> pair_brackets;
  for (size_t i = 0; i < monos.size(); ++i)
    for (size_t j = i + 1; j < monos.size(); ++j) {
      AlgebraElement p = lie_bracket(monos[i], monos[j]);
      if (!p.is_zero()) pair_brackets.push_back(p);
    }
  r.pairs = pair_brackets.size();

  struct BitsHash {
    size_t operator()(const std::array<uint64_t, 4>& k) const {
      uint64_t h = 1469598103934665603ull;
      for (uint64_t v : k) {
        h ^= v;
        h *= 1099511628211ull;
      }
      return static_cast<size_t>(h);
    }
  };
  std::unordered_set<std::array<uint64_t, 4>, BitsHash> seen;
  for (size_t i = 0; i < pair_brackets.size() && r.ok; ++i)
    for (size_t j = i + 1; j < pair_brackets.size() && r.ok; ++j) {
      AlgebraElement inner = lie_bracket(pair_brackets[i], pair_brackets[j]);
      if (inner.is_zero()) continue;
      if (!seen.insert(flatten(inner)).second) continue;
      for (const AlgebraElement& v : monos)
        if (!lie_bracket(inner, v).is_zero()) {
          r.ok = false;
          break;
        }
    }
  r.distinct_inner = seen.size();
  return r;
}

}  // namespace maxclass
