#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coxcrystal/fingerprint.hpp"
#include "coxcrystal/lattice.hpp"

namespace coxcrystal {

// Compares two crystal groups through their W/mT quotients.  Per modulus the
// verdict escalates: order, then fingerprint, then (order <= 512) the exact
// isomorphism oracle.
struct GenusModulusReport {
  std::int64_t modulus = 0;
  std::int64_t order_left = 0, order_right = 0;
  bool fingerprints_equal = false;
  enum class Verdict {
    DistinctOrder,
    DistinctFingerprint,
    DistinctByOracle,
    Isomorphic,       // proven by the oracle
    TieFingerprint,   // equal fingerprints, order above the oracle cap
  } verdict = Verdict::TieFingerprint;
  GroupFingerprint left, right;
  std::string verdict_name() const;
  bool distinguishes() const {
    return verdict == Verdict::DistinctOrder || verdict == Verdict::DistinctFingerprint ||
           verdict == Verdict::DistinctByOracle;
  }
};

struct GenusCompareReport {
  std::string left_name, right_name;
  std::vector<GenusModulusReport> moduli;
  std::optional<std::int64_t> distinguished_at;  // smallest distinguishing modulus
  std::string to_json() const;
};

GenusCompareReport spacegroup_genus_compare(const CrystalGroup& a, const CrystalGroup& b,
                                            const std::vector<std::int64_t>& moduli);

// A W0-stable sublattice together with the action expressed in the lattice's
// own basis.  The action table is shared by construction, so comparisons are
// element-aligned.
struct WModuleLattice {
  ActionTable action;           // matrices act on the ambient Z^n
  Sublattice lattice;           // must be action-stable
  std::vector<IntMatrix> induced;  // per element: basis^-1 * M * basis

  static WModuleLattice make(const ActionTable& action, const Sublattice& lattice);
};

// Contragredient action on the same element table: mats[e] -> transpose of
// mats[inv[e]].  Realises the weight-lattice action from the coroot one.
ActionTable dual_action(const ActionTable& a);

// Per point-group element: Smith form of (M - I) over Z/p^k plus fixed-point
// count, and the orbit-size histogram of the whole action on L/p^k L.
struct ModuleFingerprint {
  std::int64_t p = 0;
  int k = 1;
  std::vector<std::vector<std::int64_t>> element_smith;  // aligned per element
  std::vector<std::int64_t> element_fixed;
  std::vector<std::pair<std::int64_t, std::int64_t>> orbit_histogram;  // (size, count)

  bool operator==(const ModuleFingerprint& o) const {
    return p == o.p && k == o.k && element_smith == o.element_smith &&
           element_fixed == o.element_fixed && orbit_histogram == o.orbit_histogram;
  }
  bool operator!=(const ModuleFingerprint& o) const { return !(*this == o); }
};

ModuleFingerprint module_fingerprint(const WModuleLattice& l, std::int64_t p, int k);

struct ModuleCompareReport {
  struct Entry {
    std::int64_t p;
    int k;
    bool fingerprints_equal;
    // escalation outcome when |L/p^k L| is small enough to search directly:
    // 1 = equivariant bijection found, 0 = none exists, -1 = not attempted
    int equivariant_bijection = -1;
  };
  std::vector<Entry> entries;
  bool all_equal = true;
  std::string to_json() const;
};

ModuleCompareReport module_genus_compare(const WModuleLattice& a, const WModuleLattice& b,
                                         const std::vector<std::int64_t>& primes, int k_max);

}  // namespace coxcrystal
