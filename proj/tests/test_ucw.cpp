#include "doctest.h"

#include <functional>
#include <set>

#include "coxcrystal/ucw.hpp"
#include "coxcrystal/util.hpp"

using namespace coxcrystal;

namespace {

// all reduced words of length <= max_len
std::vector<ReducedWord> words_up_to(const UniversalCoxeter& g, int max_len) {
  std::vector<ReducedWord> out{g.identity()};
  std::size_t start = 0;
  for (int len = 1; len <= max_len; ++len) {
    std::size_t end = out.size();
    for (std::size_t i = start; i < end; ++i)
      for (int s = 0; s < g.rank(); ++s) {
        if (!out[i].letters.empty() && out[i].letters.back() == s) continue;
        ReducedWord w = out[i];
        w.letters.push_back(s);
        out.push_back(w);
      }
    start = end;
  }
  return out;
}

}  // namespace

TEST_CASE("words reduce by cancelling equal adjacent letters") {
  UniversalCoxeter g(3);
  CHECK(g.word({0, 0}).is_identity());
  CHECK(g.word({0, 1, 1, 0}).is_identity());
  CHECK(g.word({0, 1, 1, 2}) == g.word({0, 2}));
  CHECK(g.word({2, 1, 0, 0, 1, 2}).is_identity());
  CHECK(g.word({0, 1, 0, 1}).length() == 4);  // no relation glues distinct letters

  CHECK(g.mul(g.word({0, 1}), g.word({1, 0})).is_identity());
  CHECK(g.mul(g.word({0, 1}), g.word({0, 1})) == g.word({0, 1, 0, 1}));
  CHECK(g.inv(g.word({0, 1, 2})) == g.word({2, 1, 0}));

  CHECK_THROWS_AS(g.word({0, 3}), DomainError);  // letter out of range
  CHECK_THROWS_AS(UniversalCoxeter(0), DomainError);
}

TEST_CASE("group laws hold on all short words") {
  UniversalCoxeter g(3);
  std::vector<ReducedWord> words = words_up_to(g, 3);
  for (const ReducedWord& a : words) {
    CHECK(g.mul(a, g.inv(a)).is_identity());
    CHECK(g.mul(g.identity(), a) == a);
    CHECK(g.mul(a, g.identity()) == a);
  }
  // associativity over a stride of triples
  for (std::size_t i = 0; i < words.size(); i += 5)
    for (std::size_t j = 1; j < words.size(); j += 7)
      for (std::size_t k = 2; k < words.size(); k += 9)
        CHECK(g.mul(g.mul(words[i], words[j]), words[k]) ==
              g.mul(words[i], g.mul(words[j], words[k])));
}

TEST_CASE("cyclic reduction strips matching outer letters") {
  UniversalCoxeter g(2);
  ReducedWord w = g.word({0, 1, 0});  // e1 e2 e1 = conjugate of e2
  auto form = g.cyclic_reduce(w);
  CHECK(form.core == g.word({1}));
  CHECK(form.conjugator == g.word({0}));
  CHECK(g.mul(g.mul(form.conjugator, form.core), g.inv(form.conjugator)) == w);

  auto flat = g.cyclic_reduce(g.word({0, 1}));
  CHECK(flat.core == g.word({0, 1}));
  CHECK(flat.conjugator.is_identity());

  auto trivial = g.cyclic_reduce(g.identity());
  CHECK(trivial.core.is_identity());
}

TEST_CASE("orders are 1, 2 or infinite") {
  UniversalCoxeter g(2);
  CHECK(g.element_order(g.identity()) == 1);
  CHECK(g.element_order(g.word({0})) == 2);
  CHECK(g.element_order(g.word({0, 1, 0})) == 2);
  CHECK_FALSE(g.element_order(g.word({0, 1})).has_value());
  CHECK_FALSE(g.element_order(g.word({0, 1, 0, 1})).has_value());
}

TEST_CASE("involutions are exactly the conjugates of single generators") {
  for (int rank : {2, 3}) {
    UniversalCoxeter g(rank);
    for (const ReducedWord& w : words_up_to(g, 7)) {
      bool involution = !w.is_identity() && g.mul(w, w).is_identity();
      auto witness = g.involution_witness(w);
      CAPTURE(g.format(w));
      CHECK(involution == (g.element_order(w) == 2));
      CHECK(involution == witness.has_value());
      if (witness) {
        // verify the witness by direct word multiplication
        ReducedWord back = g.mul(g.mul(witness->conjugator, g.generator(witness->generator)),
                                 g.inv(witness->conjugator));
        CHECK(back == w);
      }
    }
  }
}

TEST_CASE("parity is a homomorphism onto Z/2") {
  UniversalCoxeter g(3);
  std::vector<ReducedWord> words = words_up_to(g, 4);
  Rng rng(kDefaultSeed);
  for (int trial = 0; trial < 500; ++trial) {
    const ReducedWord& a = words[rng.below(words.size())];
    const ReducedWord& b = words[rng.below(words.size())];
    CHECK(g.parity(g.mul(a, b)) == (g.parity(a) + g.parity(b)) % 2);
  }
}

TEST_CASE("word parsing and formatting round trip") {
  UniversalCoxeter g(3);
  CHECK(g.parse("e1 e2 e1") == g.word({0, 1, 0}));
  CHECK(g.parse("E2 e3") == g.word({1, 2}));
  CHECK(g.parse("1").is_identity());
  CHECK(g.parse("").is_identity());
  CHECK(g.parse("e1 e1").is_identity());  // parser reduces

  for (const ReducedWord& w : words_up_to(g, 4)) CHECK(g.parse(g.format(w)) == w);
  CHECK(g.format(g.identity()) == "1");
  CHECK(g.format(g.word({2, 0})) == "e3 e1");

  CHECK_THROWS_AS(g.parse("e4"), ParseError);   // out of range
  CHECK_THROWS_AS(g.parse("x1"), ParseError);   // bad token
  CHECK_THROWS_AS(g.parse("e"), ParseError);    // missing index
  CHECK_THROWS_AS(g.parse("2"), ParseError);    // bare digits are ambiguous
  CHECK_THROWS_AS(g.parse("1 e1"), ParseError);  // identity mixed with letters
}
