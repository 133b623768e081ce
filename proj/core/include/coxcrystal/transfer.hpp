#pragma once

#include <cstdint>
#include <vector>

#include "coxcrystal/finite_group.hpp"
#include "coxcrystal/int_matrix.hpp"

namespace coxcrystal {

// Expansion of a length-n tuple by integer matrices.  The output keeps the
// original entries, then per matrix and per row appends the intermediate
// multiples t*b_j for every coefficient c = M(i,j) (t = 2..c for c >= 2,
// t = -1..c for c <= -1) followed by the running row sums
// sum_{j' <= j} M(i,j') b_{j'} for j = 2..n; the final running sum is (M b)_i.
std::vector<IntVector> expand_tuple(const std::vector<IntVector>& b,
                                    const std::vector<IntMatrix>& mats);

// Same expansion inside a finite abelian group (entries are element indices,
// scaling is the power map).  Requires |b| == matrix dimension.
std::vector<std::int64_t> expand_tuple(const AbelianGroup& g,
                                       const std::vector<std::int64_t>& b,
                                       const std::vector<IntMatrix>& mats);

// Verifies that an explicit bijection table A -> B transfers game positions:
// the table must be an isomorphism, and for seeded random tuples the expanded
// tuples must correspond entry-wise while agreeing on every unnested atomic
// formula (equality, identity, inverse, product).
struct TransferReport {
  bool iso_valid = false;
  std::string iso_failure;     // empty when valid
  std::int64_t trials_run = 0;
  std::int64_t atomic_checks = 0;
  std::int64_t violations = 0;
  bool pass() const { return iso_valid && violations == 0; }
};

TransferReport strategy_transfer_check(const AbelianGroup& a, const AbelianGroup& b,
                                       const std::vector<std::int64_t>& iso,
                                       const std::vector<IntMatrix>& mats, int trials = 500,
                                       std::uint64_t seed = kDefaultSeed);

}  // namespace coxcrystal
