#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "maxclass/unit.hpp"

namespace maxclass {

inline constexpr uint64_t default_closure_cap = uint64_t{1} << 20;
inline constexpr uint32_t default_table_cap = 8192;

// Explicit finite group: element labels plus the full multiplication table of
// indices. Identity is index 0, elements appear in deterministic insertion
// order, rows and columns are permutations.
struct GroupTable {
  uint32_t order = 0;
  std::vector<uint32_t> mul;  // order x order, row-major
  std::vector<uint32_t> inv;
  std::vector<uint32_t> generators;
  std::vector<std::string> labels;

  uint32_t at(uint32_t x, uint32_t y) const {
    return mul[size_t(x) * order + y];
  }
  // Checks identity position, Latin-square rows/columns, inverse consistency.
  void validate() const;
};

struct UnitKey {
  std::array<uint64_t, 4> w{};
  friend bool operator==(const UnitKey&, const UnitKey&) = default;
};
UnitKey unit_key(const Unit&);

struct UnitKeyHash {
  size_t operator()(const UnitKey& k) const {
    uint64_t h = 1469598103934665603ull;
    for (uint64_t v : k.w) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

// Closure of a generating set of units together with the full table.
struct UnitTable {
  GroupTable table;
  std::vector<Unit> elements;  // elements[i] corresponds to table index i
  std::unordered_map<UnitKey, uint32_t, UnitKeyHash> index;

  std::optional<uint32_t> index_of(const Unit& u) const {
    auto it = index.find(unit_key(u));
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

// Breadth-first closure under right multiplication by the generators.
// cap bounds the element count; the table additionally requires
// order <= table_cap (a full order^2 index matrix is materialized).
UnitTable generate_subgroup(std::span<const Unit> gens,
                            uint64_t cap = default_closure_cap,
                            uint32_t table_cap = default_table_cap);

// Every augmentation-1 element of KG as an explicit table. Feasible only
// for group order 8 (128 units); larger specs trip SizeCap.
UnitTable full_unit_group(const GroupSpec&);

bool is_abelian(const GroupTable&);
bool is_elementary_abelian(const GroupTable&);
uint64_t element_order(const GroupTable&, uint32_t i);
uint64_t exponent(const GroupTable&);
std::vector<uint32_t> center(const GroupTable&);

// Subgroup generated by the given indices, returned as a sorted index list.
std::vector<uint32_t> subgroup_closure(const GroupTable&,
                                       const std::vector<uint32_t>& gens);
std::vector<uint32_t> derived_subgroup(const GroupTable&);

// gamma_1 = G, gamma_{k+1} = [gamma_k, G]; the returned chain ends with the
// trivial subgroup. Class = chain length - 1.
std::vector<std::vector<uint32_t>> lower_central_series(const GroupTable&);
uint32_t nilpotency_class(const GroupTable&);

bool is_normal(const GroupTable&, const std::vector<uint32_t>& subgroup);

// Quotient by a verified-normal subgroup. Cosets are indexed by their minimal
// parent representative; the coset of the identity is index 0. Products are
// checked to be representative-independent on all pairs.
struct CosetTable {
  GroupTable quotient;
  std::vector<uint32_t> coset_of;  // parent index -> quotient index
  std::vector<uint32_t> reps;      // quotient index -> minimal parent rep
  std::vector<uint32_t> kernel;    // sorted parent indices
};
CosetTable make_quotient(const GroupTable& parent,
                         const std::vector<uint32_t>& normal_gens);

// Cheap isomorphism invariants. abelianization_stats are the element-order
// statistics of G/[G,G], which classify finite abelian 2-groups.
struct Fingerprint {
  uint64_t order = 0;
  uint64_t expnt = 0;
  uint64_t cls = 0;
  uint64_t derived_order = 0;
  uint64_t center_order = 0;
  std::vector<std::pair<uint64_t, uint64_t>> order_stats;
  std::vector<std::pair<uint64_t, uint64_t>> abelianization_stats;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const GroupTable&);

enum class IsoMode { invariants, explicit_search };

struct IsoResult {
  bool isomorphic = false;
  IsoMode mode = IsoMode::invariants;
  // explicit mode: image of every index under a verified isomorphism
  std::vector<uint32_t> map;
};

// invariants: fingerprint comparison. explicit_search: generator-image
// backtracking with a full homomorphism check; requires order <= 512.
IsoResult isomorphic(const GroupTable&, const GroupTable&, IsoMode);

}  // namespace maxclass
