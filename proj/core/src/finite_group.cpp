#include "coxcrystal/finite_group.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace coxcrystal {

std::int64_t FiniteGroupView::power(std::int64_t a, std::int64_t k) const {
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  std::int64_t r = identity();
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

std::int64_t FiniteGroupView::element_order(std::int64_t a) const {
  std::int64_t k = 1, x = a;
  while (x != identity()) {
    x = mul(x, a);
    ++k;
    if (k > order()) throw DomainError("element order exceeds the group order");
  }
  return k;
}

std::int64_t FiniteGroupView::conjugate(std::int64_t g, std::int64_t x) const {
  return mul(mul(g, x), inverse(g));
}

std::vector<std::int64_t> FiniteGroupView::generating_set() const {
  std::int64_t n = order();
  std::vector<std::int64_t> gens;
  std::vector<char> in_closure(n, 0);
  in_closure[identity()] = 1;
  std::int64_t closed = 1;
  while (closed < n) {
    std::int64_t next = -1;
    for (std::int64_t x = 0; x < n; ++x)
      if (!in_closure[x]) { next = x; break; }
    gens.push_back(next);
    // closure of <gens>: BFS from the identity, right-multiplying by gens
    std::fill(in_closure.begin(), in_closure.end(), 0);
    in_closure[identity()] = 1;
    closed = 1;
    std::vector<std::int64_t> queue{identity()};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (std::int64_t g : gens) {
        std::int64_t p = mul(queue[qi], g);
        if (!in_closure[p]) {
          in_closure[p] = 1;
          ++closed;
          queue.push_back(p);
        }
      }
  }
  return gens;
}

TableGroup::TableGroup(std::vector<std::vector<std::int64_t>> table) : table_(std::move(table)) {
  validate();
}

void TableGroup::validate() {
  std::int64_t n = static_cast<std::int64_t>(table_.size());
  if (n == 0) throw DomainError("empty multiplication table");
  for (const auto& row : table_) {
    if (static_cast<std::int64_t>(row.size()) != n)
      throw DomainError("multiplication table is not square");
    for (std::int64_t v : row)
      if (v < 0 || v >= n) throw DomainError("table entry out of range");
  }
  // latin square
  for (std::int64_t i = 0; i < n; ++i) {
    std::vector<char> seen_row(n, 0), seen_col(n, 0);
    for (std::int64_t j = 0; j < n; ++j) {
      if (seen_row[table_[i][j]]++) throw DomainError("row " + std::to_string(i) + " repeats an entry");
      if (seen_col[table_[j][i]]++) throw DomainError("column " + std::to_string(i) + " repeats an entry");
    }
  }
  // two-sided identity
  identity_ = -1;
  for (std::int64_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::int64_t x = 0; x < n && ok; ++x)
      if (table_[e][x] != x || table_[x][e] != x) ok = false;
    if (ok) { identity_ = e; break; }
  }
  if (identity_ < 0) throw DomainError("table has no identity element");
  // associativity (full check up to order 512, sampled beyond)
  if (n <= 512) {
    for (std::int64_t a = 0; a < n; ++a)
      for (std::int64_t b = 0; b < n; ++b)
        for (std::int64_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw DomainError("table is not associative");
  } else {
    Rng rng(kDefaultSeed);
    for (int t = 0; t < 200000; ++t) {
      std::int64_t a = rng.below(n), b = rng.below(n), c = rng.below(n);
      if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
        throw DomainError("table is not associative");
    }
  }
  inverse_.assign(n, 0);
  for (std::int64_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::int64_t b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inverse_[a] = b;
        found = true;
        break;
      }
    if (!found) throw DomainError("element " + std::to_string(a) + " has no inverse");
  }
}

TableGroup TableGroup::read(std::istream& in) {
  std::int64_t n;
  if (!(in >> n)) throw ParseError("multiplication table must start with its order");
  if (n < 1 || n > 100000) throw ParseError("table order out of range");
  std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j)
      if (!(in >> t[i][j]))
        throw ParseError("table needs " + std::to_string(n * n) + " entries");
  return TableGroup(std::move(t));
}

TableGroup TableGroup::read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return read(in);
}

void TableGroup::write(std::ostream& out) const {
  std::int64_t n = order();
  out << n << "\n";
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) out << (j ? " " : "") << table_[i][j];
    out << "\n";
  }
}

AbelianGroup::AbelianGroup(std::vector<std::int64_t> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw DomainError("abelian group needs at least one modulus");
  for (std::int64_t m : moduli_) {
    if (m < 1) throw DomainError("moduli must be positive");
    order_ *= m;
  }
}

std::vector<std::int64_t> AbelianGroup::decode(std::int64_t idx) const {
  std::vector<std::int64_t> r(moduli_.size());
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    r[i] = idx % moduli_[i];
    idx /= moduli_[i];
  }
  return r;
}

std::int64_t AbelianGroup::encode(const std::vector<std::int64_t>& residues) const {
  std::int64_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    std::int64_t r = residues[i] % moduli_[i];
    if (r < 0) r += moduli_[i];
    idx += r * stride;
    stride *= moduli_[i];
  }
  return idx;
}

std::int64_t AbelianGroup::mul(std::int64_t a, std::int64_t b) const {
  std::vector<std::int64_t> x = decode(a), y = decode(b);
  for (std::size_t i = 0; i < moduli_.size(); ++i) x[i] = (x[i] + y[i]) % moduli_[i];
  return encode(x);
}

std::int64_t AbelianGroup::inverse(std::int64_t a) const {
  std::vector<std::int64_t> x = decode(a);
  for (std::size_t i = 0; i < moduli_.size(); ++i) x[i] = (moduli_[i] - x[i]) % moduli_[i];
  return encode(x);
}

QuotientGroup::QuotientGroup(std::shared_ptr<const PointGroup> pg, std::int64_t m,
                             std::string provenance)
    : pg_(std::move(pg)), m_(m), rank_(pg_->rank()), provenance_(std::move(provenance)) {
  if (m_ < 1) throw DomainError("quotient modulus must be >= 1");
  npow_ = 1;
  for (int i = 0; i < rank_; ++i) npow_ *= m_;
  order_ = npow_ * pg_->size();
  mats_mod_.reserve(pg_->size());
  for (int e = 0; e < pg_->size(); ++e) mats_mod_.push_back(pg_->matrix(e).mod(m_));
}

std::pair<IntVector, int> QuotientGroup::decode(std::int64_t idx) const {
  int w = static_cast<int>(idx / npow_);
  std::int64_t rest = idx % npow_;
  IntVector a(rank_);
  for (int i = 0; i < rank_; ++i) {
    a[i] = rest % m_;
    rest /= m_;
  }
  return {a, w};
}

std::int64_t QuotientGroup::encode(const IntVector& a, int w) const {
  std::int64_t idx = 0, stride = 1;
  for (int i = 0; i < rank_; ++i) {
    std::int64_t r = a[i] % m_;
    if (r < 0) r += m_;
    idx += r * stride;
    stride *= m_;
  }
  return idx + npow_ * w;
}

std::int64_t QuotientGroup::mul(std::int64_t a, std::int64_t b) const {
  auto [xa, xw] = decode(a);
  auto [ya, yw] = decode(b);
  IntVector za = mats_mod_[xw].apply(ya);
  for (int i = 0; i < rank_; ++i) za[i] = (za[i] + xa[i]) % m_;
  return encode(za, pg_->mul(xw, yw));
}

std::int64_t QuotientGroup::inverse(std::int64_t a) const {
  auto [xa, xw] = decode(a);
  int wi = pg_->inverse(xw);
  IntVector neg(rank_);
  for (int i = 0; i < rank_; ++i) neg[i] = (m_ - xa[i]) % m_;
  return encode(mats_mod_[wi].apply(neg), wi);
}

QuotientGroup make_quotient(const CrystalGroup& g, std::int64_t m, std::int64_t order_cap) {
  if (m < 1) throw DomainError("quotient modulus must be >= 1");
  std::int64_t order = g.point_group().size();
  for (int i = 0; i < g.rank(); ++i) {
    order *= m;
    if (order > order_cap)
      throw DomainError("quotient order exceeds the cap of " + std::to_string(order_cap));
  }
  return QuotientGroup(g.point_group_ptr(), m,
                       g.family_name() + "/" + std::to_string(m) + "T");
}

TableGroup materialize(const FiniteGroupView& g) {
  std::int64_t n = g.order();
  if (n > 4096) throw DomainError("refusing to materialize a table above order 4096");
  std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) t[i][j] = g.mul(i, j);
  return TableGroup(std::move(t));
}

TableGroup shuffled_copy(const FiniteGroupView& g, std::uint64_t seed) {
  std::int64_t n = g.order();
  if (n > 4096) throw DomainError("refusing to shuffle a group above order 4096");
  Rng rng(seed);
  std::vector<std::int64_t> perm(n);
  for (std::int64_t i = 0; i < n; ++i) perm[i] = i;
  for (std::int64_t i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i + 1))]);
  std::vector<std::vector<std::int64_t>> t(n, std::vector<std::int64_t>(n));
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < n; ++j) t[perm[i]][perm[j]] = perm[g.mul(i, j)];
  return TableGroup(std::move(t));
}

}  // namespace coxcrystal
