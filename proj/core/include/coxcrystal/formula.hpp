#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "coxcrystal/finite_group.hpp"

namespace coxcrystal {

// Group terms:  1 | variable | t*t | t^int | [t,t] | (t)
// with [s,t] = s^-1 t^-1 s t.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { One, Var, Mul, Pow, Comm };
  Kind kind = Kind::One;
  std::string name;           // Var
  std::int64_t exponent = 0;  // Pow
  std::vector<TermPtr> args;  // Mul/Comm: 2 children, Pow: 1

  std::string to_string() const;
};

// First-order formulas over the group language:
//   t = t | !f | (f & f) | (f | f) | (f -> f) | A x. f | E x. f
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Eq, Not, And, Or, Implies, Forall, Exists };
  Kind kind = Kind::Eq;
  TermPtr lhs, rhs;  // Eq
  std::string var;   // quantifiers
  std::vector<FormulaPtr> args;

  std::string to_string() const;
};

TermPtr parse_term(const std::string& text);
FormulaPtr parse_formula(const std::string& text);

using Env = std::map<std::string, std::int64_t>;

std::set<std::string> free_vars(const Formula& f);

// Evaluation walks quantifiers by brute force; `budget` bounds the total
// number of environment extensions tried (DomainError when exhausted).
std::int64_t eval_term(const Term& t, const FiniteGroupView& g, const Env& env);
bool eval_formula(const Formula& f, const FiniteGroupView& g, const Env& env,
                  std::int64_t budget = 50'000'000);

// All assignments of the free variables satisfying f.  Work is
// order^free_vars, capped at 10^4 tuples times quantifier cost.
struct SolutionSet {
  std::vector<std::string> variables;            // sorted free variables
  std::vector<std::vector<std::int64_t>> rows;   // satisfying assignments
  std::int64_t tuples_scanned = 0;
};

SolutionSet solution_set(const Formula& f, const FiniteGroupView& g,
                         std::int64_t tuple_cap = 10'000);

}  // namespace coxcrystal
