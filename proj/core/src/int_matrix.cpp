#include "coxcrystal/int_matrix.hpp"

#include <cstdlib>
#include <numeric>

namespace coxcrystal {

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntVector IntMatrix::apply(const IntVector& x) const {
  IntVector y(rows_, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
  return y;
}

IntMatrix IntMatrix::mod(std::int64_t m) const {
  IntMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      std::int64_t v = (*this)(i, j) % m;
      if (v < 0) v += m;
      r(i, j) = v;
    }
  return r;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix mat_pow(const IntMatrix& m, std::int64_t k) {
  IntMatrix r = IntMatrix::identity(m.rows());
  IntMatrix b = m;
  while (k > 0) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

std::int64_t determinant(const IntMatrix& m) {
  int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  std::int64_t sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
  int rows = m.rows(), cols = m.cols();
  int n = std::min(rows, cols);
  std::vector<std::int64_t> d;
  int t = 0;
  while (t < n) {
    // find a nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < rows && pi < 0; ++i)
      for (int j = t; j < cols; ++j)
        if (m(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    for (int j = 0; j < cols; ++j) std::swap(m(t, j), m(pi, j));
    for (int i = 0; i < rows; ++i) std::swap(m(i, t), m(i, pj));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < rows; ++i) {
        while (m(i, t) != 0) {
          std::int64_t q = m(i, t) / m(t, t);
          for (int j = 0; j < cols; ++j) m(i, j) -= q * m(t, j);
          if (m(i, t) != 0) {  // remainder smaller than pivot: swap rows
            for (int j = 0; j < cols; ++j) std::swap(m(t, j), m(i, j));
          }
        }
      }
      for (int j = t + 1; j < cols; ++j) {
        while (m(t, j) != 0) {
          std::int64_t q = m(t, j) / m(t, t);
          for (int i = 0; i < rows; ++i) m(i, j) -= q * m(i, t);
          if (m(t, j) != 0) {
            for (int i = 0; i < rows; ++i) std::swap(m(i, t), m(i, j));
            clean = false;  // column ops may have dirtied the pivot column
          }
        }
      }
      for (int i = t + 1; i < rows && clean; ++i)
        if (m(i, t) != 0) clean = false;
    }
    d.push_back(std::llabs(m(t, t)));
    ++t;
  }
  // enforce the divisibility chain d1 | d2 | ...
  for (std::size_t i = 0; i + 1 < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == 0) { std::swap(d[i], d[j]); continue; }
      std::int64_t g = std::gcd(d[i], d[j]);
      if (g == 0) continue;
      std::int64_t l = d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  d.resize(static_cast<std::size_t>(n), 0);
  return d;
}

}  // namespace coxcrystal
