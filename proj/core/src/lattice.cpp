#include "coxcrystal/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace coxcrystal {

Sublattice::Sublattice(IntMatrix hnf_basis) : basis_(std::move(hnf_basis)) {
  int n = basis_.rows();
  if (basis_.cols() != n) throw DomainError("sublattice basis must be square");
  for (int i = 0; i < n; ++i) {
    if (basis_(i, i) <= 0) throw DomainError("HNF diagonal must be positive");
    for (int j = 0; j < n; ++j) {
      if (j < i && basis_(i, j) != 0) throw DomainError("HNF basis must be upper triangular");
      if (j > i && (basis_(i, j) < 0 || basis_(i, j) >= basis_(i, i)))
        throw DomainError("HNF off-diagonal entries must lie in [0, diagonal)");
    }
  }
}

std::int64_t Sublattice::index() const {
  std::int64_t d = 1;
  for (int i = 0; i < rank(); ++i) d *= basis_(i, i);
  return d;
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& x) const {
  int n = rank();
  IntVector c(n, 0), r = x;
  for (int i = n - 1; i >= 0; --i) {
    if (r[i] % basis_(i, i) != 0) return std::nullopt;
    c[i] = r[i] / basis_(i, i);
    for (int k = 0; k <= i; ++k) r[k] -= c[i] * basis_(k, i);
  }
  return c;
}

bool Sublattice::contains(const IntVector& x) const { return coordinates(x).has_value(); }

Sublattice Sublattice::scaled(std::int64_t m) const {
  if (m <= 0) throw DomainError("scale factor must be positive");
  IntMatrix b = basis_;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) b(i, j) *= m;
  return Sublattice(b);
}

std::int64_t Sublattice::content() const {
  std::int64_t g = 0;
  for (std::int64_t v : basis_.data()) g = std::gcd(g, v);
  return g;
}

bool Sublattice::operator<(const Sublattice& o) const {
  if (index() != o.index()) return index() < o.index();
  return basis_.data() < o.basis_.data();
}

namespace {

void enumerate_offdiag(IntMatrix& h, int n, int i, int j, std::vector<Sublattice>& out) {
  if (i >= n - 1) {
    out.emplace_back(h);
    return;
  }
  int ni = i, nj = j + 1;
  if (nj == n) { ni = i + 1; nj = ni + 1; }
  for (std::int64_t v = 0; v < h(i, i); ++v) {
    h(i, j) = v;
    enumerate_offdiag(h, n, ni, nj, out);
  }
  h(i, j) = 0;
}

void enumerate_diagonals(int n, int pos, std::int64_t remaining_bound, IntMatrix& h,
                         std::vector<Sublattice>& out) {
  if (pos == n) {
    enumerate_offdiag(h, n, 0, 1, out);
    return;
  }
  for (std::int64_t d = 1; d <= remaining_bound; ++d) {
    h(pos, pos) = d;
    enumerate_diagonals(n, pos + 1, remaining_bound / d, h, out);
  }
}

}  // namespace

std::vector<Sublattice> enumerate_sublattices(int n, std::int64_t index_bound) {
  if (n < 1) throw DomainError("rank must be >= 1");
  if (index_bound < 1) throw DomainError("index bound must be >= 1");
  std::vector<Sublattice> out;
  IntMatrix h(n, n);
  enumerate_diagonals(n, 0, index_bound, h, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_invariant(const std::vector<IntMatrix>& action, const Sublattice& l) {
  // all action matrices are unimodular, so M*L subset of L already forces
  // M*L = L (equal index)
  int n = l.rank();
  for (const IntMatrix& m : action) {
    for (int j = 0; j < n; ++j) {
      IntVector col(n);
      for (int i = 0; i < n; ++i) col[i] = l.basis()(i, j);
      if (!l.contains(m.apply(col))) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<Sublattice> invariant_sublattices(const std::vector<IntMatrix>& action,
                                              const std::vector<Sublattice>& candidates) {
  for (const IntMatrix& m : action) {
    std::int64_t det = determinant(m);
    if (det != 1 && det != -1) throw DomainError("action matrices must be unimodular");
  }
  std::vector<Sublattice> out;
  for (const Sublattice& l : candidates)
    if (is_invariant(action, l)) out.push_back(l);
  return out;
}

std::vector<Sublattice> invariant_sublattices(const std::vector<IntMatrix>& action,
                                              int n, std::int64_t index_bound) {
  return invariant_sublattices(action, enumerate_sublattices(n, index_bound));
}

PrimitiveNormalReport primitive_normal_list(const std::vector<IntMatrix>& action,
                                            int n, std::int64_t index_bound) {
  PrimitiveNormalReport rep;
  std::vector<Sublattice> inv = invariant_sublattices(action, n, index_bound);
  for (const Sublattice& l : inv)
    if (l.content() == 1) rep.primitives.push_back(l);
  for (const Sublattice& l : inv) {
    std::int64_t g = l.content();
    IntMatrix b = l.basis();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) /= g;
    Sublattice prim(b);
    bool listed = std::find(rep.primitives.begin(), rep.primitives.end(), prim) !=
                  rep.primitives.end();
    if (!listed)
      rep.violations.push_back(l);
    else
      rep.factorisations.push_back({l, g, prim});
  }
  return rep;
}

}  // namespace coxcrystal
