#include "maxclass/table.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace maxclass {

void GroupTable::validate() const {
  if (order == 0 || mul.size() != size_t(order) * order ||
      inv.size() != order || labels.size() != order)
    raise(Errc::invalid_parameter, "malformed table");
  std::vector<char> seen(order);
  for (uint32_t x = 0; x < order; ++x) {
    if (at(0, x) != x || at(x, 0) != x)
      raise(Errc::invalid_parameter, "identity is not index 0");
    std::fill(seen.begin(), seen.end(), 0);
    for (uint32_t y = 0; y < order; ++y) {
      uint32_t v = at(x, y);
      if (v >= order || seen[v])
        raise(Errc::invalid_parameter, "row is not a permutation");
      seen[v] = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (uint32_t y = 0; y < order; ++y) {
      uint32_t v = at(y, x);
      if (v >= order || seen[v])
        raise(Errc::invalid_parameter, "column is not a permutation");
      seen[v] = 1;
    }
    if (at(x, inv[x]) != 0 || at(inv[x], x) != 0)
      raise(Errc::invalid_parameter, "inverse table is inconsistent");
  }
}

UnitKey unit_key(const Unit& u) {
  UnitKey k;
  k.w[0] = static_cast<uint64_t>(u.value.x1.bits);
  k.w[1] = static_cast<uint64_t>(u.value.x1.bits >> 64);
  k.w[2] = static_cast<uint64_t>(u.value.x2.bits);
  k.w[3] = static_cast<uint64_t>(u.value.x2.bits >> 64);
  return k;
}

UnitTable generate_subgroup(std::span<const Unit> gens, uint64_t cap,
                            uint32_t table_cap) {
  if (gens.empty()) raise(Errc::invalid_parameter, "no generators");
  const GroupSpec& s = gens.front().spec();
  for (const Unit& g : gens)
    if (!(g.spec() == s)) raise(Errc::spec_mismatch, "mixed-spec generators");

  UnitTable ut;
  // provenance: element y (except the identity) first appeared as
  // elements[parent[y]] * gens[via_gen[y]]
  std::vector<uint32_t> parent, via_gen;
  auto push = [&](const Unit& u, uint32_t par, uint32_t gi) -> uint32_t {
    UnitKey k = unit_key(u);
    auto it = ut.index.find(k);
    if (it != ut.index.end()) return it->second;
    if (ut.elements.size() >= cap)
      raise(Errc::cap_exceeded,
            "closure exceeds cap " + std::to_string(cap) + " elements");
    uint32_t idx = static_cast<uint32_t>(ut.elements.size());
    ut.elements.push_back(u);
    ut.index.emplace(k, idx);
    parent.push_back(par);
    via_gen.push_back(gi);
    return idx;
  };

  push(Unit::one(s), 0, 0);
  for (uint32_t gi = 0; gi < gens.size(); ++gi)
    ut.table.generators.push_back(push(gens[gi], 0, gi));

  // breadth-first: elements in insertion order, generators in given order
  for (size_t head = 0; head < ut.elements.size(); ++head) {
    Unit cur = ut.elements[head];
    for (uint32_t gi = 0; gi < gens.size(); ++gi)
      push(cur * gens[gi], static_cast<uint32_t>(head), gi);
  }

  uint32_t order = static_cast<uint32_t>(ut.elements.size());
  if (order > table_cap)
    raise(Errc::cap_exceeded, "subgroup of order " + std::to_string(order) +
                                  " exceeds table cap " +
                                  std::to_string(table_cap));

  GroupTable& t = ut.table;
  t.order = order;
  t.mul.resize(size_t(order) * order);
  auto cell = [&](uint32_t x, uint32_t y) -> uint32_t& {
    return t.mul[size_t(x) * order + y];
  };
  // generator columns multiplied out directly; every other column y follows
  // from its provenance y = parent * gen, so x*y = (x*parent)*gen
  std::vector<uint32_t> gen_col(gens.size());
  for (uint32_t gi = 0; gi < gens.size(); ++gi)
    gen_col[gi] = *ut.index_of(gens[gi]);
  for (uint32_t x = 0; x < order; ++x) {
    cell(x, 0) = x;
    for (uint32_t gi = 0; gi < gens.size(); ++gi) {
      auto idx = ut.index_of(ut.elements[x] * gens[gi]);
      if (!idx) raise(Errc::invalid_parameter, "closure is not closed");
      cell(x, gen_col[gi]) = *idx;
    }
  }
  for (uint32_t y = 1; y < order; ++y) {
    bool is_gen_col = false;
    for (uint32_t gc : gen_col) is_gen_col |= gc == y;
    if (is_gen_col) continue;
    uint32_t p = parent[y], gc = gen_col[via_gen[y]];
    for (uint32_t x = 0; x < order; ++x) cell(x, y) = cell(cell(x, p), gc);
  }
  t.inv.assign(order, 0);
  for (uint32_t x = 0; x < order; ++x)
    for (uint32_t y = 0; y < order; ++y)
      if (t.at(x, y) == 0) {
        t.inv[x] = y;
        break;
      }
  t.labels.reserve(order);
  for (const Unit& u : ut.elements) t.labels.push_back(format_algebra(u.value));
  return ut;
}

UnitTable full_unit_group(const GroupSpec& s) {
  if (s.group_order > 8)
    raise(Errc::size_cap, "full unit group enumeration needs group order 8, "
                          "got " + std::to_string(s.group_order));
  const uint32_t len = s.a_order;
  UnitTable ut;
  // ascending bit-pattern order; the smallest odd-parity pattern is the
  // identity (x1 = 1, x2 = 0), so it lands at index 0
  for (uint64_t v = 0; v < (uint64_t{1} << (2 * len)); ++v) {
    if (!(std::popcount(v) & 1)) continue;
    AlgebraElement e{s, {u128(v) & cyc_mask(len), len},
                     {u128(v >> len), len}};
    uint32_t idx = static_cast<uint32_t>(ut.elements.size());
    ut.elements.emplace_back(Unit(e));
    ut.index.emplace(unit_key(ut.elements.back()), idx);
  }
  GroupTable& t = ut.table;
  t.order = static_cast<uint32_t>(ut.elements.size());
  t.mul.resize(size_t(t.order) * t.order);
  for (uint32_t x = 0; x < t.order; ++x)
    for (uint32_t y = 0; y < t.order; ++y)
      t.mul[size_t(x) * t.order + y] =
          *ut.index_of(ut.elements[x] * ut.elements[y]);
  t.inv.assign(t.order, 0);
  for (uint32_t x = 0; x < t.order; ++x)
    for (uint32_t y = 0; y < t.order; ++y)
      if (t.at(x, y) == 0) {
        t.inv[x] = y;
        break;
      }
  t.generators = {*ut.index_of(Unit::from_group(s, {1, 0})),
                  *ut.index_of(Unit::from_group(s, {0, 1}))};
  t.labels.reserve(t.order);
  for (const Unit& u : ut.elements) t.labels.push_back(format_algebra(u.value));
  return ut;
}

bool is_abelian(const GroupTable& t) {
  for (uint32_t x = 0; x < t.order; ++x)
    for (uint32_t y = x + 1; y < t.order; ++y)
      if (t.at(x, y) != t.at(y, x)) return false;
  return true;
}

bool is_elementary_abelian(const GroupTable& t) {
  if (!is_abelian(t)) return false;
  for (uint32_t x = 0; x < t.order; ++x)
    if (t.at(x, x) != 0) return false;
  return true;
}

uint64_t element_order(const GroupTable& t, uint32_t i) {
  uint64_t ord = 1;
  uint32_t cur = i;
  while (cur != 0) {
    cur = t.at(cur, i);
    ++ord;
    if (ord > t.order) raise(Errc::invalid_parameter, "order exceeds table");
  }
  return ord;
}

uint64_t exponent(const GroupTable& t) {
  // 2-group: the exponent is the maximal element order
  uint64_t e = 1;
  for (uint32_t i = 0; i < t.order; ++i) e = std::max(e, element_order(t, i));
  return e;
}

std::vector<uint32_t> center(const GroupTable& t) {
  std::vector<uint32_t> z;
  for (uint32_t x = 0; x < t.order; ++x) {
    bool central = true;
    for (uint32_t y = 0; y < t.order && central; ++y)
      central = t.at(x, y) == t.at(y, x);
    if (central) z.push_back(x);
  }
  return z;
}

std::vector<uint32_t> subgroup_closure(const GroupTable& t,
                                       const std::vector<uint32_t>& gens) {
  std::vector<char> in(t.order, 0);
  std::vector<uint32_t> elems;
  auto push = [&](uint32_t x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  push(0);
  for (uint32_t g : gens) push(g);
  for (size_t head = 0; head < elems.size(); ++head)
    for (uint32_t g : gens) push(t.at(elems[head], g));
  std::sort(elems.begin(), elems.end());
  return elems;
}

static uint32_t table_comm(const GroupTable& t, uint32_t x, uint32_t y) {
  return t.at(t.inv[x], t.at(t.inv[y], t.at(x, y)));
}

std::vector<uint32_t> derived_subgroup(const GroupTable& t) {
  std::vector<uint32_t> gens;
  std::vector<char> seen(t.order, 0);
  for (uint32_t x = 0; x < t.order; ++x)
    for (uint32_t y = 0; y < t.order; ++y) {
      uint32_t c = table_comm(t, x, y);
      if (!seen[c]) {
        seen[c] = 1;
        gens.push_back(c);
      }
    }
  return subgroup_closure(t, gens);
}

std::vector<std::vector<uint32_t>> lower_central_series(const GroupTable& t) {
  std::vector<std::vector<uint32_t>> series;
  std::vector<uint32_t> cur(t.order);
  for (uint32_t i = 0; i < t.order; ++i) cur[i] = i;
  series.push_back(cur);
  while (cur.size() > 1) {
    std::vector<uint32_t> gens;
    std::vector<char> seen(t.order, 0);
    for (uint32_t x : cur)
      for (uint32_t g = 0; g < t.order; ++g) {
        uint32_t c = table_comm(t, x, g);
        if (!seen[c]) {
          seen[c] = 1;
          gens.push_back(c);
        }
      }
    std::vector<uint32_t> next = subgroup_closure(t, gens);
    if (next.size() == cur.size())
      raise(Errc::invalid_parameter, "lower central series does not descend");
    series.push_back(next);
    cur = std::move(next);
  }
  return series;
}

uint32_t nilpotency_class(const GroupTable& t) {
  return static_cast<uint32_t>(lower_central_series(t).size() - 1);
}

bool is_normal(const GroupTable& t, const std::vector<uint32_t>& subgroup) {
  std::vector<char> in(t.order, 0);
  for (uint32_t x : subgroup) in[x] = 1;
  for (uint32_t g = 0; g < t.order; ++g)
    for (uint32_t x : subgroup)
      if (!in[t.at(t.inv[g], t.at(x, g))]) return false;
  return true;
}

CosetTable make_quotient(const GroupTable& parent,
                         const std::vector<uint32_t>& normal_gens) {
  CosetTable ct;
  ct.kernel = subgroup_closure(parent, normal_gens);
  if (!is_normal(parent, ct.kernel))
    raise(Errc::not_normal, "subgroup is not normal, cannot form the quotient");

  uint32_t order = parent.order;
  ct.coset_of.assign(order, UINT32_MAX);
  // cosets discovered in ascending minimal-representative order
  for (uint32_t x = 0; x < order; ++x) {
    if (ct.coset_of[x] != UINT32_MAX) continue;
    uint32_t id = static_cast<uint32_t>(ct.reps.size());
    ct.reps.push_back(x);
    for (uint32_t k : ct.kernel) ct.coset_of[parent.at(x, k)] = id;
    if (ct.coset_of[x] != id)
      raise(Errc::invalid_parameter, "coset enumeration failed");
  }

  uint32_t qn = static_cast<uint32_t>(ct.reps.size());
  GroupTable& q = ct.quotient;
  q.order = qn;
  q.mul.resize(size_t(qn) * qn);
  for (uint32_t x = 0; x < qn; ++x)
    for (uint32_t y = 0; y < qn; ++y)
      q.mul[size_t(x) * qn + y] = ct.coset_of[parent.at(ct.reps[x], ct.reps[y])];

  // well-definedness on all representative pairs
  for (uint32_t x = 0; x < order; ++x)
    for (uint32_t y = 0; y < order; ++y)
      if (ct.coset_of[parent.at(x, y)] !=
          q.at(ct.coset_of[x], ct.coset_of[y]))
        raise(Errc::not_normal, "coset product depends on representatives");

  q.inv.assign(qn, 0);
  for (uint32_t x = 0; x < qn; ++x)
    for (uint32_t y = 0; y < qn; ++y)
      if (q.at(x, y) == 0) {
        q.inv[x] = y;
        break;
      }
  q.labels.reserve(qn);
  for (uint32_t r : ct.reps) q.labels.push_back(parent.labels[r]);
  for (uint32_t g : parent.generators) {
    uint32_t img = ct.coset_of[g];
    if (img != 0) q.generators.push_back(img);
  }
  return ct;
}

static std::vector<std::pair<uint64_t, uint64_t>> order_stats(
    const GroupTable& t) {
  std::map<uint64_t, uint64_t> m;
  for (uint32_t i = 0; i < t.order; ++i) ++m[element_order(t, i)];
  return {m.begin(), m.end()};
}

Fingerprint fingerprint(const GroupTable& t) {
  Fingerprint fp;
  fp.order = t.order;
  fp.expnt = exponent(t);
  fp.cls = nilpotency_class(t);
  std::vector<uint32_t> der = derived_subgroup(t);
  fp.derived_order = der.size();
  fp.center_order = center(t).size();
  fp.order_stats = order_stats(t);
  CosetTable ab = make_quotient(t, der);
  fp.abelianization_stats = order_stats(ab.quotient);
  return fp;
}

// Greedy generating set, then drop redundant members.
static std::vector<uint32_t> small_generating_set(const GroupTable& t) {
  std::vector<uint32_t> gens;
  std::vector<uint32_t> cur = subgroup_closure(t, {});
  for (uint32_t x = 1; x < t.order && cur.size() < t.order; ++x) {
    if (std::binary_search(cur.begin(), cur.end(), x)) continue;
    gens.push_back(x);
    cur = subgroup_closure(t, gens);
  }
  for (size_t i = 0; i < gens.size();) {
    std::vector<uint32_t> rest;
    for (size_t j = 0; j < gens.size(); ++j)
      if (j != i) rest.push_back(gens[j]);
    if (subgroup_closure(t, rest).size() == t.order) {
      gens = std::move(rest);
    } else {
      ++i;
    }
  }
  return gens;
}

namespace {

struct IsoSearch {
  const GroupTable& g1;
  const GroupTable& g2;
  std::vector<uint32_t> gens;
  std::vector<uint64_t> gen_orders;
  std::vector<size_t> prefix_sizes;  // |<gens[0..i]>| in g1
  std::vector<uint32_t> images;
  std::vector<uint64_t> orders2;

  // Word construction: BFS over g1 from the identity defines every element
  // as (previous element) * generator; the same recipe applied to the images
  // defines the candidate map, verified on the full table afterwards.
  std::optional<std::vector<uint32_t>> build_map() const {
    std::vector<uint32_t> img(g1.order, UINT32_MAX);
    img[0] = 0;
    std::vector<uint32_t> queue{0};
    for (size_t head = 0; head < queue.size(); ++head) {
      uint32_t x = queue[head];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        uint32_t y = g1.at(x, gens[gi]);
        uint32_t v = g2.at(img[x], images[gi]);
        if (img[y] == UINT32_MAX) {
          img[y] = v;
          queue.push_back(y);
        } else if (img[y] != v) {
          return std::nullopt;
        }
      }
    }
    if (queue.size() != g1.order) return std::nullopt;
    std::vector<char> hit(g2.order, 0);
    for (uint32_t v : img) {
      if (hit[v]) return std::nullopt;
      hit[v] = 1;
    }
    for (uint32_t x = 0; x < g1.order; ++x)
      for (uint32_t y = 0; y < g1.order; ++y)
        if (img[g1.at(x, y)] != g2.at(img[x], img[y])) return std::nullopt;
    return img;
  }

  std::optional<std::vector<uint32_t>> extend(size_t pos) {
    if (pos == gens.size()) return build_map();
    for (uint32_t cand = 0; cand < g2.order; ++cand) {
      if (orders2[cand] != gen_orders[pos]) continue;
      images[pos] = cand;
      std::vector<uint32_t> ims(images.begin(), images.begin() + pos + 1);
      if (subgroup_closure(g2, ims).size() != prefix_sizes[pos]) continue;
      if (auto m = extend(pos + 1)) return m;
    }
    return std::nullopt;
  }
};

}  // namespace

IsoResult isomorphic(const GroupTable& t1, const GroupTable& t2, IsoMode mode) {
  IsoResult res;
  res.mode = mode;
  if (t1.order != t2.order) return res;

  if (mode == IsoMode::invariants) {
    res.isomorphic = fingerprint(t1) == fingerprint(t2);
    return res;
  }

  if (t1.order > 512 || t2.order > 512)
    raise(Errc::size_cap, "explicit isomorphism search capped at order 512");
  if (!(fingerprint(t1) == fingerprint(t2))) return res;

  IsoSearch srch{t1, t2, small_generating_set(t1), {}, {}, {}, {}};
  std::vector<uint32_t> prefix;
  for (uint32_t g : srch.gens) {
    srch.gen_orders.push_back(element_order(t1, g));
    prefix.push_back(g);
    srch.prefix_sizes.push_back(subgroup_closure(t1, prefix).size());
  }
  srch.images.assign(srch.gens.size(), 0);
  srch.orders2.resize(t2.order);
  for (uint32_t i = 0; i < t2.order; ++i)
    srch.orders2[i] = element_order(t2, i);

  if (auto m = srch.extend(0)) {
    res.isomorphic = true;
    res.map = std::move(*m);
  }
  return res;
}

}  // namespace maxclass
