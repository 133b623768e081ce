#include "doctest.h"

#include "coxcrystal/transfer.hpp"

using namespace coxcrystal;

namespace {

IntMatrix mat1(std::int64_t v) {
  IntMatrix m(1, 1);
  m(0, 0) = v;
  return m;
}

// the coordinate-exchange isomorphism Z/6 -> Z/2 x Z/3
std::vector<std::int64_t> crt_iso() {
  AbelianGroup a({6}), b({2, 3});
  std::vector<std::int64_t> iso(6);
  for (std::int64_t x = 0; x < 6; ++x) iso[x] = b.encode({x % 2, x % 3});
  return iso;
}

}  // namespace

TEST_CASE("tuple expansion follows the pinned bookkeeping convention") {
  // sign matrix: the original entry, then the single -1 multiple
  CHECK(expand_tuple({{3}}, {mat1(1), mat1(-1)}) ==
        std::vector<IntVector>{{3}, {-3}});

  // doubling matrix: the original entry, then the 2x multiple
  CHECK(expand_tuple({{3}}, {mat1(2)}) == std::vector<IntVector>{{3}, {6}});

  // rank-2 identity: originals, then the running row sums
  CHECK(expand_tuple({{1}, {2}}, {IntMatrix::identity(2)}) ==
        std::vector<IntVector>{{1}, {2}, {1}, {2}});

  // no matrices: the tuple passes through untouched
  CHECK(expand_tuple({{5}, {7}}, {}) == std::vector<IntVector>{{5}, {7}});

  // expansion length depends only on the matrices, not on the tuple values
  IntMatrix twist(2, 2);
  twist(0, 0) = -1;
  twist(0, 1) = 2;
  twist(1, 0) = 3;
  twist(1, 1) = 1;
  std::size_t len1 = expand_tuple({{4}, {9}}, {twist}).size();
  std::size_t len2 = expand_tuple({{-2}, {0}}, {twist}).size();
  CHECK(len1 == len2);

  CHECK_THROWS_AS(expand_tuple({{1}}, {IntMatrix::identity(2)}), DomainError);
}

TEST_CASE("abelian expansion mirrors the integer expansion through reduction") {
  AbelianGroup z6({6});
  std::vector<IntMatrix> mats{mat1(1), mat1(-1)};
  std::vector<std::int64_t> expanded = expand_tuple(z6, {4}, mats);
  REQUIRE(expanded.size() == 2);
  CHECK(expanded[0] == 4);
  CHECK(expanded[1] == 2);  // -4 mod 6

  AbelianGroup z23({2, 3});
  std::vector<std::int64_t> e2 = expand_tuple(z23, {z23.encode({1, 2})}, {mat1(2)});
  REQUIRE(e2.size() == 2);
  CHECK(e2[1] == z23.encode({0, 1}));  // doubled coordinates
}

TEST_CASE("the coordinate-exchange isomorphism transfers strategies") {
  AbelianGroup a({6}), b({2, 3});
  std::vector<IntMatrix> sign_action{mat1(1), mat1(-1)};
  TransferReport rep = strategy_transfer_check(a, b, crt_iso(), sign_action, 500);
  CHECK(rep.iso_valid);
  CHECK(rep.iso_failure.empty());
  CHECK(rep.trials_run == 500);
  CHECK(rep.violations == 0);
  CHECK(rep.atomic_checks > 0);
  CHECK(rep.pass());
}

TEST_CASE("transfer rejects non-isomorphic sides whatever the table") {
  AbelianGroup z4({4}), k4({2, 2});
  std::vector<std::int64_t> naive{0, 1, 2, 3};
  TransferReport rep = strategy_transfer_check(z4, k4, naive, {mat1(1)}, 50);
  CHECK_FALSE(rep.iso_valid);
  CHECK_FALSE(rep.iso_failure.empty());
  CHECK_FALSE(rep.pass());
}

TEST_CASE("transfer rejects bijections that are not homomorphisms") {
  AbelianGroup a({6}), b({2, 3});
  std::vector<std::int64_t> iso = crt_iso();
  std::swap(iso[1], iso[2]);  // still a bijection, no longer multiplicative
  TransferReport rep = strategy_transfer_check(a, b, iso, {mat1(1)}, 50);
  CHECK_FALSE(rep.iso_valid);
  CHECK_FALSE(rep.pass());

  // wrong sizes are rejected outright
  TransferReport tiny = strategy_transfer_check(a, b, {0, 1}, {mat1(1)}, 10);
  CHECK_FALSE(tiny.iso_valid);
}

TEST_CASE("the identity map transfers a group to itself") {
  AbelianGroup z5({5});
  std::vector<std::int64_t> ident{0, 1, 2, 3, 4};
  std::vector<IntMatrix> mats{mat1(1), mat1(-1), mat1(2)};
  TransferReport rep = strategy_transfer_check(z5, z5, ident, mats, 100);
  CHECK(rep.pass());
  CHECK(rep.trials_run == 100);
}
