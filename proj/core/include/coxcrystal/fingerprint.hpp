#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxcrystal/finite_group.hpp"

namespace coxcrystal {

// Isomorphism-invariant integer profile of a finite group.
struct GroupFingerprint {
  std::int64_t order = 0;
  std::int64_t exponent = 0;
  std::vector<std::int64_t> abelian_invariants;   // d1 | d2 | ... of G/[G,G]
  std::map<std::int64_t, std::int64_t> order_histogram;
  std::vector<std::int64_t> class_sizes;          // sorted conjugacy class sizes
  std::int64_t center_order = 0;
  std::int64_t derived_order = 0;
  std::int64_t involutions = 0;

  bool operator==(const GroupFingerprint& o) const;
  bool operator!=(const GroupFingerprint& o) const { return !(*this == o); }
  std::string to_json() const;
  std::string summary() const;
};

// pre: order <= 100000
GroupFingerprint fingerprint(const FiniteGroupView& g);

// Exact isomorphism test by class-constrained generator-image backtracking.
// pre: both orders <= 512
bool iso_bruteforce(const FiniteGroupView& a, const FiniteGroupView& b);

}  // namespace coxcrystal
