#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coxcrystal/int_matrix.hpp"

namespace coxcrystal {

// Finite-index sublattice of Z^n.  Basis vectors are the columns of an upper
// triangular Hermite normal form: basis(i,i) > 0 and 0 <= basis(i,j) <
// basis(i,i) for j > i.  This makes the basis canonical per sublattice.
class Sublattice {
 public:
  Sublattice() = default;
  explicit Sublattice(IntMatrix hnf_basis);

  static Sublattice full(int n) { return Sublattice(IntMatrix::identity(n)); }

  int rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::int64_t index() const;  // [Z^n : L] = product of the diagonal

  bool contains(const IntVector& x) const;
  // coordinates of x in the lattice basis, if x is a member
  std::optional<IntVector> coordinates(const IntVector& x) const;

  Sublattice scaled(std::int64_t m) const;  // m * L
  // gcd of all basis entries; L = g * (L/g) with L/g primitive
  std::int64_t content() const;

  bool operator==(const Sublattice& o) const { return basis_ == o.basis_; }
  bool operator<(const Sublattice& o) const;

 private:
  IntMatrix basis_;
};

// All sublattices of Z^n with index in [1, index_bound], sorted by
// (index, basis entries).
std::vector<Sublattice> enumerate_sublattices(int n, std::int64_t index_bound);

// Keeps the sublattices L with M * L = L for every matrix in `action`.
std::vector<Sublattice> invariant_sublattices(const std::vector<IntMatrix>& action,
                                              const std::vector<Sublattice>& candidates);
std::vector<Sublattice> invariant_sublattices(const std::vector<IntMatrix>& action,
                                              int n, std::int64_t index_bound);

struct PrimitiveNormalReport {
  std::vector<Sublattice> primitives;  // invariant L with content 1
  // for each invariant sublattice: (lattice, content m, primitive N with L = m*N)
  struct Factorisation {
    Sublattice lattice;
    std::int64_t multiple;
    Sublattice primitive;
  };
  std::vector<Factorisation> factorisations;
  std::vector<Sublattice> violations;  // invariant L whose L/content is not in the list
  bool complete() const { return violations.empty(); }
};

// Enumerates invariant sublattices within the index bound, extracts the
// primitive ones, and checks that every invariant sublattice is an integer
// multiple of a listed primitive.
PrimitiveNormalReport primitive_normal_list(const std::vector<IntMatrix>& action,
                                            int n, std::int64_t index_bound);

}  // namespace coxcrystal
