#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "coxcrystal/util.hpp"

namespace coxcrystal {

using IntVector = std::vector<std::int64_t>;

// Dense square-ish integer matrix, row major.  Sizes stay tiny (rank <= 9),
// so everything is plain loops over int64.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0) {}

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::int64_t& operator()(int i, int j) { return v_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::int64_t operator()(int i, int j) const { return v_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }
  bool operator<(const IntMatrix& o) const { return v_ < o.v_; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntVector apply(const IntVector& x) const;
  IntMatrix mod(std::int64_t m) const;  // entries reduced into [0, m)

  bool is_identity() const;
  const std::vector<std::int64_t>& data() const { return v_; }

 private:
  int rows_, cols_;
  std::vector<std::int64_t> v_;
};

struct IntMatrixHash {
  std::size_t operator()(const IntMatrix& m) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::int64_t x : m.data()) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
  }
};

IntMatrix mat_pow(const IntMatrix& m, std::int64_t k);

// Determinant by fraction-free (Bareiss) elimination; exact for int64 at the
// sizes used here.
std::int64_t determinant(const IntMatrix& m);

// Smith normal form diagonal d1 | d2 | ... | dr (nonnegative, zeros last).
// Only the invariant factors are needed, not the transforms.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

}  // namespace coxcrystal
