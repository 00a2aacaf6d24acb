#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "maxclass/algebra.hpp"

namespace maxclass {

using ordered_json = nlohmann::ordered_json;

struct CheckContext {
  GroupSpec spec;
  std::mt19937_64 rng;
};

struct CheckOutcome {
  bool pass = false;
  std::string detail;    // one-line summary for the text report
  ordered_json witness;  // structured data; always present on failure
};

struct CheckDef {
  std::string id;
  std::string claim;     // the verified statement
  std::string strategy;  // how it is verified
  bool dihedral = false;
  bool semidihedral = false;
  bool quaternion = false;
  int n_min = 3;
  int n_max = 8;
  std::function<CheckOutcome(CheckContext&)> fn;

  bool applies(Family f, int n) const;
};

// Canonical check list; reports follow this order.
const std::vector<CheckDef>& check_registry();
// UnknownCheck for ids not in the registry.
const CheckDef& find_check(const std::string& id);

// Reference product by termwise group-element convolution; the
// differential oracle for the component formula.
AlgebraElement naive_mul(const AlgebraElement&, const AlgebraElement&);

// Deterministic per-(check, family, n) stream from the campaign seed, so
// results do not depend on execution order or check subsets.
uint64_t derive_seed(uint64_t campaign_seed, const std::string& check_id,
                     Family, int n);

}  // namespace maxclass
