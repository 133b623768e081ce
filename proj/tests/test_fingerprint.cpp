#include "doctest.h"

#include "coxcrystal/classify.hpp"
#include "coxcrystal/fingerprint.hpp"
#include "test_helpers.hpp"

using namespace coxcrystal;

namespace {

QuotientGroup quotient_of(const char* family, std::int64_t m) {
  CrystalGroup g = build_affine_group(parse_family(family));
  return make_quotient(g, m);
}

}  // namespace

TEST_CASE("fingerprint of the order-6 quotient matches the symmetric group") {
  GroupFingerprint f = fingerprint(quotient_of("A~1", 3));
  CHECK(f.order == 6);
  CHECK(f.exponent == 6);
  CHECK(f.abelian_invariants == std::vector<std::int64_t>{2});
  CHECK(f.center_order == 1);
  CHECK(f.derived_order == 3);
  CHECK(f.involutions == 3);
  CHECK(f.class_sizes == std::vector<std::int64_t>{1, 2, 3});
  CHECK(f.order_histogram[2] == 3);
  CHECK(f.order_histogram[3] == 2);
  CHECK(f.order_histogram[1] == 1);
}

TEST_CASE("fingerprint of abelian groups lists the invariant factors") {
  GroupFingerprint z6 = fingerprint(AbelianGroup({6}));
  CHECK(z6.abelian_invariants == std::vector<std::int64_t>{6});
  CHECK(z6.center_order == 6);
  CHECK(z6.derived_order == 1);
  CHECK(z6.class_sizes == std::vector<std::int64_t>(6, 1));

  GroupFingerprint k4 = fingerprint(AbelianGroup({2, 2}));
  CHECK(k4.abelian_invariants == std::vector<std::int64_t>{2, 2});
  CHECK(k4.involutions == 3);

  // the invariant factors are canonical regardless of the presentation
  GroupFingerprint a = fingerprint(AbelianGroup({2, 3}));
  CHECK(a.abelian_invariants == std::vector<std::int64_t>{6});
  GroupFingerprint b = fingerprint(AbelianGroup({12, 2}));
  CHECK(b.abelian_invariants == std::vector<std::int64_t>{2, 12});
  GroupFingerprint c = fingerprint(AbelianGroup({4, 6}));
  CHECK(c.abelian_invariants == std::vector<std::int64_t>{2, 12});
}

TEST_CASE("fingerprints are invariant under relabelling") {
  QuotientGroup q = quotient_of("A~1", 3);
  GroupFingerprint base = fingerprint(q);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    TableGroup shuffled = shuffled_copy(q, seed);
    CHECK(fingerprint(shuffled) == base);
  }

  QuotientGroup k = quotient_of("A~2", 2);  // order 24
  GroupFingerprint kb = fingerprint(k);
  for (std::uint64_t seed = 1; seed <= 20; ++seed)
    CHECK(fingerprint(shuffled_copy(k, seed)) == kb);
}

TEST_CASE("fingerprints separate same-order non-isomorphic groups") {
  GroupFingerprint s3 = fingerprint(quotient_of("A~1", 3));
  GroupFingerprint z6 = fingerprint(AbelianGroup({6}));
  CHECK(s3.order == z6.order);
  CHECK(s3 != z6);

  GroupFingerprint z4 = fingerprint(AbelianGroup({4}));
  GroupFingerprint k4 = fingerprint(AbelianGroup({2, 2}));
  CHECK(z4 != k4);

  CHECK(s3.to_json().find("\"order\":6") != std::string::npos);
  CHECK(!s3.summary().empty());
}

TEST_CASE("exact isomorphism testing by backtracking") {
  QuotientGroup s3 = quotient_of("A~1", 3);
  QuotientGroup k4 = quotient_of("A~1", 2);

  CHECK(iso_bruteforce(s3, s3));
  CHECK(iso_bruteforce(k4, TableGroup::read_file(data_path("klein.tbl"))));
  CHECK(iso_bruteforce(s3, shuffled_copy(s3, 7)));
  CHECK_FALSE(iso_bruteforce(s3, AbelianGroup({6})));
  CHECK_FALSE(iso_bruteforce(k4, AbelianGroup({4})));
  CHECK_FALSE(iso_bruteforce(s3, k4));  // different orders

  // a pair where fingerprints agree is still decided correctly
  QuotientGroup q = quotient_of("A~2", 2);
  CHECK(iso_bruteforce(q, shuffled_copy(q, 11)));

  AbelianGroup big({600});
  CHECK_THROWS_AS(iso_bruteforce(big, big), DomainError);  // order cap 512
}
