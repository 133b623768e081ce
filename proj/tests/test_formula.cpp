#include "doctest.h"

#include "coxcrystal/classify.hpp"
#include "coxcrystal/finite_group.hpp"
#include "coxcrystal/formula.hpp"

using namespace coxcrystal;

namespace {

QuotientGroup quotient_of(const char* family, std::int64_t m) {
  CrystalGroup g = build_affine_group(parse_family(family));
  return make_quotient(g, m);
}

bool eval_closed(const std::string& text, const FiniteGroupView& g) {
  return eval_formula(*parse_formula(text), g, {});
}

}  // namespace

TEST_CASE("terms parse with the expected precedence") {
  CHECK(parse_term("x * y ^ -1")->to_string() == "x*(y^-1)");
  CHECK(parse_term("(x * y) ^ 2")->to_string() == "(x*y)^2");
  CHECK(parse_term("[x, y]")->to_string() == "[x,y]");
  CHECK(parse_term("x * y * z")->to_string() == "x*y*z");  // left associative
  CHECK(parse_term("1")->to_string() == "1");
  CHECK(parse_term("x^0")->to_string() == "x^0");

  CHECK_THROWS_AS(parse_term("x *"), ParseError);
  CHECK_THROWS_AS(parse_term("(x"), ParseError);
  CHECK_THROWS_AS(parse_term("[x y]"), ParseError);
  CHECK_THROWS_AS(parse_term("x ^ y"), ParseError);
  CHECK_THROWS_AS(parse_term(""), ParseError);
  CHECK_THROWS_AS(parse_term("x y"), ParseError);  // trailing input
}

TEST_CASE("formulas parse, print and reject syntax errors") {
  CHECK(parse_formula("x = 1")->to_string() == "x = 1");
  CHECK(parse_formula("A y. [x, y^2] = 1")->to_string() == "A y. [x,y^2] = 1");
  CHECK(parse_formula("E x. (x = y & y = x)")->to_string() == "E x. (x = y & y = x)");
  // negation binds a whole formula and never takes its own parens
  CHECK(parse_formula("(x = 1 -> (x = 1 | !x = y))")->to_string() ==
        "(x = 1 -> (x = 1 | !x = y))");
  CHECK(parse_formula("!x = 1")->to_string() == "!x = 1");
  // a parenthesised term on the left of an equation
  CHECK(parse_formula("(x * y) = z")->to_string() == "x*y = z");

  CHECK_THROWS_AS(parse_formula("A y. ("), ParseError);
  CHECK_THROWS_AS(parse_formula("x ="), ParseError);
  CHECK_THROWS_AS(parse_formula("= x"), ParseError);
  CHECK_THROWS_AS(parse_formula("x = 1 &"), ParseError);
  CHECK_THROWS_AS(parse_formula("(x = 1"), ParseError);
  CHECK_THROWS_AS(parse_formula("x = 1 extra"), ParseError);

  // parsing the printed form reproduces the same text
  for (const char* text : {"A y. [x, y^2] = 1", "(x = 1 & E z. z * x = y)",
                           "!(x = 1 | y = 1)", "x * y^-1 * z^3 = 1"}) {
    FormulaPtr f = parse_formula(text);
    CHECK(parse_formula(f->to_string())->to_string() == f->to_string());
  }
}

TEST_CASE("free variables are collected") {
  CHECK(free_vars(*parse_formula("A y. [x, y^2] = 1")) == std::set<std::string>{"x"});
  CHECK(free_vars(*parse_formula("x = 1")) == std::set<std::string>{"x"});
  CHECK(free_vars(*parse_formula("A x. x = 1")).empty());
  CHECK(free_vars(*parse_formula("y * x = x")) == std::set<std::string>{"x", "y"});
}

TEST_CASE("evaluation over small groups") {
  AbelianGroup z2({2});
  CHECK(eval_closed("A x. x * x = 1", z2));
  CHECK_FALSE(eval_closed("A x. x = 1", z2));
  CHECK(eval_closed("E x. !x = 1", z2));

  // the cyclic order-4 group has a non-involution square root of 1
  AbelianGroup z4({4});
  AbelianGroup k4({2, 2});
  const char* all_small = "A x. (x^4 = 1 -> (x = 1 | x^2 = 1))";
  CHECK_FALSE(eval_closed(all_small, z4));
  CHECK(eval_closed(all_small, k4));

  // commutators and inverses
  QuotientGroup s3 = quotient_of("A~1", 3);
  CHECK_FALSE(eval_closed("A x. A y. [x, y] = 1", s3));
  CHECK(eval_closed("A x. A y. [x, y] = 1", k4));
  CHECK(eval_closed("A x. E y. (x * y = 1 & y * x = 1)", s3));
  CHECK(eval_closed("A x. x^6 = 1", s3));
  CHECK_FALSE(eval_closed("A x. x^3 = 1", s3));
}

TEST_CASE("quantifiers shadow outer bindings") {
  AbelianGroup z3({3});
  // the quantified x rebinds over the outer assignment
  CHECK(eval_formula(*parse_formula("E x. x = 1"), z3, Env{{"x", 2}}));
  CHECK_FALSE(eval_formula(*parse_formula("x = 1"), z3, Env{{"x", 2}}));
  CHECK(eval_formula(*parse_formula("x = 1"), z3, Env{{"x", 0}}));

  CHECK_THROWS_AS(eval_formula(*parse_formula("x = 1"), z3, {}), DomainError);  // unbound
}

TEST_CASE("solution sets enumerate the defined subset") {
  // in the order-6 quotient, "commutes with all squares" picks out the
  // three rotations
  QuotientGroup s3 = quotient_of("A~1", 3);
  FormulaPtr f = parse_formula("A y. [x, y^2] = 1");
  SolutionSet sols = solution_set(*f, s3);
  REQUIRE(sols.variables == std::vector<std::string>{"x"});
  CHECK(sols.rows.size() == 3);
  for (const auto& row : sols.rows) {
    REQUIRE(row.size() == 1);
    CHECK(s3.element_order(row[0]) != 2);  // rotations only
  }

  // same formula over the Klein-four quotient: everything commutes
  QuotientGroup k4 = quotient_of("A~1", 2);
  SolutionSet all = solution_set(*parse_formula("A y. [x, y^2] = 1"), k4);
  CHECK(all.rows.size() == 4);

  // two free variables: the commuting pairs of the order-6 quotient
  SolutionSet pairs = solution_set(*parse_formula("[x, y] = 1"), s3);
  REQUIRE(pairs.variables.size() == 2);
  std::size_t commuting = 0;
  for (std::int64_t x = 0; x < 6; ++x)
    for (std::int64_t y = 0; y < 6; ++y)
      if (s3.mul(x, y) == s3.mul(y, x)) ++commuting;
  CHECK(pairs.rows.size() == commuting);
  CHECK(pairs.tuples_scanned == 36);

  // closed formulas scan the single empty assignment
  SolutionSet closed = solution_set(*parse_formula("A x. x = x"), s3);
  CHECK(closed.variables.empty());
  CHECK(closed.rows.size() == 1);

  // the tuple cap rejects oversized scans
  QuotientGroup big = quotient_of("A~2", 3);  // order 54
  CHECK_THROWS_AS(solution_set(*parse_formula("x * y = y * z"), big, 1000), DomainError);
}

TEST_CASE("evaluation budget prevents runaway quantifier nests") {
  QuotientGroup q = quotient_of("A~2", 3);  // order 54
  FormulaPtr f = parse_formula("A x. A y. A z. [[x, y], z] = 1");
  CHECK_THROWS_AS(eval_formula(*f, q, {}, 1000), DomainError);
}
