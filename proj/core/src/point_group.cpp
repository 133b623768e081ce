#include "coxcrystal/point_group.hpp"

#include <deque>
#include <numeric>

namespace coxcrystal {

std::int64_t ActionTable::order_of(int e) const {
  std::int64_t k = 1;
  int x = e;
  while (x != identity) {
    x = mul[x][e];
    ++k;
    if (k > size() + 1) throw DomainError("action table is not a group");
  }
  return k;
}

std::int64_t ActionTable::exponent() const {
  std::int64_t m = 1;
  for (int e = 0; e < size(); ++e) m = std::lcm(m, order_of(e));
  return m;
}

bool ActionTable::faithful() const {
  for (int e = 0; e < size(); ++e)
    if (e != identity && mats[e].is_identity()) return false;
  return true;
}

PointGroup PointGroup::closure(const std::vector<IntMatrix>& generators, std::size_t cap) {
  if (generators.empty()) throw DomainError("point group needs at least one generator");
  PointGroup g;
  g.rank_ = generators[0].rows();
  for (const IntMatrix& m : generators) {
    if (m.rows() != g.rank_ || m.cols() != g.rank_)
      throw DomainError("generator matrices must be square of equal size");
    std::int64_t det = determinant(m);
    if (det != 1 && det != -1) throw DomainError("generators must be unimodular");
  }

  IntMatrix id = IntMatrix::identity(g.rank_);
  g.elements_.push_back(id);
  g.index_[id] = 0;
  std::deque<int> queue{0};

  std::vector<int> gen_ids;
  for (const IntMatrix& m : generators) {
    auto it = g.index_.find(m);
    if (it == g.index_.end()) {
      int id_new = static_cast<int>(g.elements_.size());
      g.elements_.push_back(m);
      g.index_[m] = id_new;
      queue.push_back(id_new);
      gen_ids.push_back(id_new);
    } else if (it->second != 0) {
      gen_ids.push_back(it->second);
    }
  }
  g.gens_ = gen_ids;

  while (!queue.empty()) {
    int e = queue.front();
    queue.pop_front();
    for (int gi : gen_ids) {
      IntMatrix p = g.elements_[e] * g.elements_[gi];
      if (!g.index_.count(p)) {
        if (g.elements_.size() >= cap)
          throw DomainError("point group closure exceeded the element cap");
        int id_new = static_cast<int>(g.elements_.size());
        g.index_[p] = id_new;
        g.elements_.push_back(std::move(p));
        queue.push_back(id_new);
      }
    }
  }

  int n = g.size();
  g.order_.assign(n, 0);
  g.inv_.assign(n, 0);
  for (int e = 0; e < n; ++e) {
    std::int64_t k = 1;
    IntMatrix p = g.elements_[e];
    IntMatrix prev = IntMatrix::identity(g.rank_);
    while (!p.is_identity()) {
      prev = p;
      p = p * g.elements_[e];
      ++k;
    }
    g.order_[e] = k;
    g.inv_[e] = (k == 1) ? e : g.index_.at(prev);
    g.exponent_ = std::lcm(g.exponent_, k);
  }
  return g;
}

int PointGroup::mul(int a, int b) const {
  if (mul_.empty() && static_cast<std::size_t>(size()) * size() <= 1u << 22) {
    mul_.assign(size(), std::vector<int>(size(), 0));
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j)
        mul_[i][j] = index_.at(elements_[i] * elements_[j]);
  }
  if (!mul_.empty()) return mul_[a][b];
  return index_.at(elements_[a] * elements_[b]);
}

int PointGroup::index_of(const IntMatrix& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

ActionTable PointGroup::action() const {
  ActionTable t;
  t.rank = rank_;
  t.mats = elements_;
  t.identity = 0;
  t.inv = inv_;
  t.mul.assign(size(), std::vector<int>(size(), 0));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) t.mul[i][j] = mul(i, j);
  return t;
}

IntMatrix cartan_matrix(char family, int rank) {
  auto bad = [&]() -> IntMatrix {
    throw DomainError(std::string("no Cartan data for family ") + family + std::to_string(rank));
  };
  auto tridiagonal = [](int n) {
    IntMatrix c(n, n);
    for (int i = 0; i < n; ++i) {
      c(i, i) = 2;
      if (i + 1 < n) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
      }
    }
    return c;
  };
  switch (family) {
    case 'A':
      if (rank < 1) return bad();
      return tridiagonal(rank);
    case 'B': {  // short last root
      if (rank < 2) return bad();
      IntMatrix c = tridiagonal(rank);
      c(rank - 2, rank - 1) = -2;
      return c;
    }
    case 'C': {  // long last root
      if (rank < 2) return bad();
      IntMatrix c = tridiagonal(rank);
      c(rank - 1, rank - 2) = -2;
      return c;
    }
    case 'D': {
      if (rank < 4) return bad();
      IntMatrix c(rank, rank);
      for (int i = 0; i < rank; ++i) c(i, i) = 2;
      for (int i = 0; i + 2 < rank; ++i) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
      }
      c(rank - 3, rank - 1) = -1;
      c(rank - 1, rank - 3) = -1;
      return c;
    }
    case 'E': {
      if (rank < 6 || rank > 8) return bad();
      IntMatrix c(rank, rank);
      for (int i = 0; i < rank; ++i) c(i, i) = 2;
      for (int i = 0; i + 2 < rank; ++i) {
        c(i, i + 1) = -1;
        c(i + 1, i) = -1;
      }
      c(2, rank - 1) = -1;
      c(rank - 1, 2) = -1;
      return c;
    }
    case 'F': {
      if (rank != 4) return bad();
      IntMatrix c = tridiagonal(4);
      c(1, 2) = -2;
      return c;
    }
    case 'G': {
      if (rank != 2) return bad();
      IntMatrix c(2, 2);
      c(0, 0) = 2;
      c(1, 1) = 2;
      c(0, 1) = -1;
      c(1, 0) = -3;
      return c;
    }
    default:
      return bad();
  }
}

std::vector<IntMatrix> reflection_matrices(char family, int rank) {
  IntMatrix c = cartan_matrix(family, rank);
  std::vector<IntMatrix> mats;
  mats.reserve(rank);
  for (int i = 0; i < rank; ++i) {
    IntMatrix m = IntMatrix::identity(rank);
    for (int j = 0; j < rank; ++j) m(i, j) = (i == j ? 1 : 0) - c(i, j);
    mats.push_back(m);
  }
  return mats;
}

PointGroup point_group_for(const FamilyType& family) {
  if (family.kind == DiagramKind::Other)
    throw DomainError("unclassified diagram has no tabulated point group");
  char f = family.family;
  if (f == 'H' || f == 'I')
    throw DomainError("family " + family.name() + " is not crystallographic");
  family_diagram(family.kind, f, family.rank);  // validates the (family, rank) pair
  return PointGroup::closure(reflection_matrices(f, family.rank));
}

}  // namespace coxcrystal
