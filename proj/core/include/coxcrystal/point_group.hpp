#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "coxcrystal/classify.hpp"
#include "coxcrystal/int_matrix.hpp"

namespace coxcrystal {

// A finite group acting on Z^n by one integer matrix per abstract element.
// PointGroup produces the faithful case; tests also build degenerate tables
// (e.g. a trivial action) to exercise the certificate checks.
struct ActionTable {
  int rank = 0;
  std::vector<IntMatrix> mats;            // mats[identity] == I
  std::vector<std::vector<int>> mul;      // element composition
  std::vector<int> inv;
  int identity = 0;

  int size() const { return static_cast<int>(mats.size()); }
  std::int64_t order_of(int e) const;
  std::int64_t exponent() const;
  // true iff only the identity element acts as the identity matrix
  bool faithful() const;
};

// Finite subgroup of GL_n(Z) generated from explicit matrices by closure.
class PointGroup {
 public:
  // BFS closure; throws DomainError if `cap` elements are exceeded.
  static PointGroup closure(const std::vector<IntMatrix>& generators,
                            std::size_t cap = 1'000'000);

  int rank() const { return rank_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const IntMatrix& matrix(int e) const { return elements_[e]; }
  const std::vector<int>& generators() const { return gens_; }

  int mul(int a, int b) const;
  int inverse(int e) const { return inv_[e]; }
  std::int64_t order_of(int e) const { return order_[e]; }
  std::int64_t exponent() const { return exponent_; }
  int index_of(const IntMatrix& m) const;  // -1 if not an element

  ActionTable action() const;

 private:
  int rank_ = 0;
  std::vector<IntMatrix> elements_;
  std::vector<int> gens_;
  std::vector<int> inv_;
  std::vector<std::int64_t> order_;
  std::int64_t exponent_ = 1;
  std::unordered_map<IntMatrix, int, IntMatrixHash> index_;
  mutable std::vector<std::vector<int>> mul_;  // built lazily when small
};

// Cartan matrix of a finite Weyl family (A, B, C, D, E, F, G).
IntMatrix cartan_matrix(char family, int rank);

// Simple-reflection matrices for the Weyl group acting on the coroot lattice
// in its own basis: M_i = I with row i replaced by delta_ij - C[i][j].  For an
// affine family the same matrices realise the point group on the translation
// lattice, so B~n and C~n automatically carry dual lattice structures.
std::vector<IntMatrix> reflection_matrices(char family, int rank);

// Point group for a tabulated affine or spherical family; throws DomainError
// for non-crystallographic or untabulated input.
PointGroup point_group_for(const FamilyType& family);

}  // namespace coxcrystal
