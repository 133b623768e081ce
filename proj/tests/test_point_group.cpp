#include "doctest.h"

#include <map>
#include <string>

#include "coxcrystal/classify.hpp"
#include "coxcrystal/crystal.hpp"
#include "coxcrystal/point_group.hpp"

using namespace coxcrystal;

namespace {

const PointGroup& point_group_of(const std::string& family) {
  static std::map<std::string, CrystalGroup> cache;
  auto it = cache.find(family);
  if (it == cache.end())
    it = cache.emplace(family, build_affine_group(parse_family(family))).first;
  return it->second.point_group();
}

// independent model for the A series: permutation matrices of the adjacent
// transpositions of n+1 points generate a group of order (n+1)!
IntMatrix transposition_matrix(int n, int i) {
  IntMatrix m = IntMatrix::identity(n);
  m(i, i) = m(i + 1, i + 1) = 0;
  m(i, i + 1) = m(i + 1, i) = 1;
  return m;
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// order of a matrix by direct repeated multiplication
std::int64_t matrix_order(const IntMatrix& m) {
  IntMatrix p = m;
  std::int64_t k = 1;
  while (!p.is_identity()) {
    p = p * m;
    ++k;
    REQUIRE(k < 100);
  }
  return k;
}

}  // namespace

TEST_CASE("point group orders for the small affine families") {
  CHECK(point_group_of("A~1").size() == 2);
  CHECK(point_group_of("A~2").size() == 6);
  CHECK(point_group_of("C~2").size() == 8);
  CHECK(point_group_of("G~2").size() == 12);
  CHECK(point_group_of("A~3").size() == 24);
  CHECK(point_group_of("B~3").size() == 48);
  CHECK(point_group_of("C~3").size() == 48);
}

TEST_CASE("A-series orders match the permutation-model oracle") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<IntMatrix> gens;
    for (int i = 0; i + 1 < n + 1; ++i) gens.push_back(transposition_matrix(n + 1, i));
    PointGroup sym = PointGroup::closure(gens);
    CHECK(sym.size() == factorial(n + 1));
    CHECK(sym.size() == point_group_of("A~" + std::to_string(n)).size());
  }
}

TEST_CASE("reflection products realise the Coxeter labels of the finite part") {
  struct Fam {
    char family;
    int rank;
  };
  for (Fam fam : {Fam{'A', 1}, Fam{'A', 2}, Fam{'A', 3}, Fam{'B', 2}, Fam{'B', 3},
                  Fam{'C', 3}, Fam{'G', 2}}) {
    CAPTURE(fam.family);
    CAPTURE(fam.rank);
    IntMatrix c = cartan_matrix(fam.family, fam.rank);
    std::vector<IntMatrix> refl = reflection_matrices(fam.family, fam.rank);
    REQUIRE(static_cast<int>(refl.size()) == fam.rank);
    for (int i = 0; i < fam.rank; ++i) {
      CHECK((refl[i] * refl[i]).is_identity());
      for (int j = i + 1; j < fam.rank; ++j) {
        // crystallographic labels: C_ij * C_ji = 0,1,2,3 <-> m = 2,3,4,6
        std::int64_t prod = c(i, j) * c(j, i);
        std::int64_t expected = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
        CHECK(matrix_order(refl[i] * refl[j]) == expected);
      }
    }
  }
}

TEST_CASE("exponent and inverse bookkeeping") {
  const PointGroup& a2 = point_group_of("A~2");
  CHECK(a2.exponent() == 6);
  CHECK(point_group_of("B~3").exponent() == 12);

  CHECK(a2.matrix(0).is_identity());
  for (int e = 0; e < a2.size(); ++e) {
    CHECK(a2.mul(e, a2.inverse(e)) == 0);
    CHECK(a2.mul(a2.inverse(e), e) == 0);
    CHECK(a2.order_of(e) == matrix_order(a2.matrix(e)));
    CHECK(a2.index_of(a2.matrix(e)) == e);
  }
  CHECK(a2.index_of(IntMatrix(2, 2)) == -1);
}

TEST_CASE("the action table mirrors the matrix group") {
  const PointGroup& g = point_group_of("C~2");
  ActionTable t = g.action();
  CHECK(t.rank == 2);
  CHECK(t.size() == 8);
  CHECK(t.identity == 0);
  CHECK(t.faithful());
  CHECK(t.exponent() == g.exponent());
  for (int a = 0; a < t.size(); ++a) {
    CHECK(t.order_of(a) == g.order_of(a));
    CHECK(t.inv[a] == g.inverse(a));
    for (int b = 0; b < t.size(); ++b) {
      CHECK(t.mul[a][b] == g.mul(a, b));
      CHECK(t.mats[a] * t.mats[b] == t.mats[t.mul[a][b]]);
    }
  }
}

TEST_CASE("closure rejects bad generators and enforces the cap") {
  IntMatrix two = IntMatrix::identity(2);
  two(0, 0) = 2;
  CHECK_THROWS_AS(PointGroup::closure({two}), DomainError);
  CHECK_THROWS_AS(PointGroup::closure({}), DomainError);
  CHECK_THROWS_AS(PointGroup::closure({IntMatrix(2, 3)}), DomainError);

  CHECK_THROWS_AS(PointGroup::closure(reflection_matrices('B', 3), 10), DomainError);
}

TEST_CASE("non-crystallographic families have no integer point group") {
  CHECK_THROWS_AS(point_group_for(parse_family("H3")), DomainError);
  CHECK_THROWS_AS(point_group_for(parse_family("I2(5)")), DomainError);
  CHECK_NOTHROW(point_group_for(parse_family("B3")));
}
