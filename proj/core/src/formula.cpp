#include "coxcrystal/formula.hpp"

#include <cctype>
#include <optional>

#include "coxcrystal/util.hpp"

namespace coxcrystal {

namespace {

struct Token {
  enum class Kind { Ident, Int, LParen, RParen, LBracket, RBracket, Comma, Star, Caret,
                    Equals, Bang, Amp, Pipe, Arrow, Dot, Minus, End };
  Kind kind;
  std::string text;
  std::int64_t value = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    std::size_t pos = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), 0, pos});
      i = j;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      std::int64_t v = 0;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
        v = v * 10 + (s[j] - '0');
        if (v > 1'000'000'000) throw ParseError("integer literal too large", pos);
        ++j;
      }
      out.push_back({Token::Kind::Int, s.substr(i, j - i), v, pos});
      i = j;
      continue;
    }
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Token::Kind::Arrow, "->", 0, pos});
      i += 2;
      continue;
    }
    Token::Kind k;
    switch (c) {
      case '(': k = Token::Kind::LParen; break;
      case ')': k = Token::Kind::RParen; break;
      case '[': k = Token::Kind::LBracket; break;
      case ']': k = Token::Kind::RBracket; break;
      case ',': k = Token::Kind::Comma; break;
      case '*': k = Token::Kind::Star; break;
      case '^': k = Token::Kind::Caret; break;
      case '=': k = Token::Kind::Equals; break;
      case '!': k = Token::Kind::Bang; break;
      case '&': k = Token::Kind::Amp; break;
      case '|': k = Token::Kind::Pipe; break;
      case '.': k = Token::Kind::Dot; break;
      case '-': k = Token::Kind::Minus; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
    out.push_back({k, std::string(1, c), 0, pos});
    ++i;
  }
  out.push_back({Token::Kind::End, "", 0, s.size()});
  return out;
}

struct Parser {
  std::vector<Token> toks;
  std::size_t at = 0;

  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = at + ahead;
    return toks[i < toks.size() ? i : toks.size() - 1];
  }
  const Token& take() { return toks[at < toks.size() - 1 ? at++ : at]; }
  void expect(Token::Kind k, const std::string& what) {
    if (peek().kind != k) throw ParseError("expected " + what, peek().pos);
    take();
  }

  // product, left associative
  TermPtr term() {
    TermPtr t = power();
    while (peek().kind == Token::Kind::Star) {
      take();
      TermPtr rhs = power();
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::Mul;
      node->args = {t, rhs};
      t = node;
    }
    return t;
  }

  TermPtr power() {
    TermPtr t = atom();
    while (peek().kind == Token::Kind::Caret) {
      take();
      std::int64_t sign = 1;
      if (peek().kind == Token::Kind::Minus) { take(); sign = -1; }
      if (peek().kind != Token::Kind::Int) throw ParseError("expected integer exponent", peek().pos);
      std::int64_t e = take().value * sign;
      auto node = std::make_shared<Term>();
      node->kind = Term::Kind::Pow;
      node->exponent = e;
      node->args = {t};
      t = node;
    }
    return t;
  }

  TermPtr atom() {
    const Token& tk = peek();
    switch (tk.kind) {
      case Token::Kind::Int: {
        if (tk.value != 1) throw ParseError("the only constant is 1", tk.pos);
        take();
        auto node = std::make_shared<Term>();
        node->kind = Term::Kind::One;
        return node;
      }
      case Token::Kind::Ident: {
        auto node = std::make_shared<Term>();
        node->kind = Term::Kind::Var;
        node->name = take().text;
        return node;
      }
      case Token::Kind::LBracket: {
        take();
        TermPtr a = term();
        expect(Token::Kind::Comma, "','");
        TermPtr b = term();
        expect(Token::Kind::RBracket, "']'");
        auto node = std::make_shared<Term>();
        node->kind = Term::Kind::Comm;
        node->args = {a, b};
        return node;
      }
      case Token::Kind::LParen: {
        take();
        TermPtr t = term();
        expect(Token::Kind::RParen, "')'");
        return t;
      }
      default:
        throw ParseError("expected a term", tk.pos);
    }
  }

  FormulaPtr formula() {
    const Token& tk = peek();
    if (tk.kind == Token::Kind::Ident && (tk.text == "A" || tk.text == "E") &&
        peek(1).kind == Token::Kind::Ident && peek(2).kind == Token::Kind::Dot) {
      bool forall = tk.text == "A";
      take();
      std::string var = take().text;
      take();  // '.'
      FormulaPtr body = formula();
      auto node = std::make_shared<Formula>();
      node->kind = forall ? Formula::Kind::Forall : Formula::Kind::Exists;
      node->var = var;
      node->args = {body};
      return node;
    }
    if (tk.kind == Token::Kind::Bang) {
      take();
      FormulaPtr body = formula();
      auto node = std::make_shared<Formula>();
      node->kind = Formula::Kind::Not;
      node->args = {body};
      return node;
    }
    if (tk.kind == Token::Kind::LParen) {
      // '(' opens either a connective formula or a parenthesised term; try the
      // formula reading first and fall back on failure
      std::size_t save = at;
      try {
        take();
        FormulaPtr a = formula();
        Formula::Kind k;
        switch (peek().kind) {
          case Token::Kind::Amp: k = Formula::Kind::And; break;
          case Token::Kind::Pipe: k = Formula::Kind::Or; break;
          case Token::Kind::Arrow: k = Formula::Kind::Implies; break;
          default: throw ParseError("expected '&', '|' or '->'", peek().pos);
        }
        take();
        FormulaPtr b = formula();
        expect(Token::Kind::RParen, "')'");
        auto node = std::make_shared<Formula>();
        node->kind = k;
        node->args = {a, b};
        return node;
      } catch (const ParseError&) {
        at = save;
      }
    }
    TermPtr lhs = term();
    expect(Token::Kind::Equals, "'='");
    TermPtr rhs = term();
    auto node = std::make_shared<Formula>();
    node->kind = Formula::Kind::Eq;
    node->lhs = lhs;
    node->rhs = rhs;
    return node;
  }
};

}  // namespace

TermPtr parse_term(const std::string& text) {
  Parser p{lex(text)};
  TermPtr t = p.term();
  if (p.peek().kind != Token::Kind::End)
    throw ParseError("trailing input after term", p.peek().pos);
  return t;
}

FormulaPtr parse_formula(const std::string& text) {
  Parser p{lex(text)};
  FormulaPtr f = p.formula();
  if (p.peek().kind != Token::Kind::End)
    throw ParseError("trailing input after formula", p.peek().pos);
  return f;
}

std::string Term::to_string() const {
  auto wrap = [](const TermPtr& t) {
    std::string s = t->to_string();
    if (t->kind == Term::Kind::Mul || t->kind == Term::Kind::Pow) return "(" + s + ")";
    return s;
  };
  switch (kind) {
    case Kind::One: return "1";
    case Kind::Var: return name;
    case Kind::Mul: return args[0]->to_string() + "*" + wrap(args[1]);
    case Kind::Pow: return wrap(args[0]) + "^" + std::to_string(exponent);
    case Kind::Comm: return "[" + args[0]->to_string() + "," + args[1]->to_string() + "]";
  }
  return "?";
}

std::string Formula::to_string() const {
  switch (kind) {
    case Kind::Eq: return lhs->to_string() + " = " + rhs->to_string();
    // no parens: the grammar has no (f) grouping, and every non-atomic body
    // already prints with its own delimiters
    case Kind::Not: return "!" + args[0]->to_string();
    case Kind::And: return "(" + args[0]->to_string() + " & " + args[1]->to_string() + ")";
    case Kind::Or: return "(" + args[0]->to_string() + " | " + args[1]->to_string() + ")";
    case Kind::Implies:
      return "(" + args[0]->to_string() + " -> " + args[1]->to_string() + ")";
    case Kind::Forall: return "A " + var + ". " + args[0]->to_string();
    case Kind::Exists: return "E " + var + ". " + args[0]->to_string();
  }
  return "?";
}

namespace {

void term_vars(const Term& t, std::set<std::string>& out) {
  if (t.kind == Term::Kind::Var) out.insert(t.name);
  for (const TermPtr& a : t.args) term_vars(*a, out);
}

void collect_free(const Formula& f, std::set<std::string> bound, std::set<std::string>& out) {
  switch (f.kind) {
    case Formula::Kind::Eq: {
      std::set<std::string> vars;
      term_vars(*f.lhs, vars);
      term_vars(*f.rhs, vars);
      for (const auto& v : vars)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      bound.insert(f.var);
      collect_free(*f.args[0], bound, out);
      return;
    default:
      for (const FormulaPtr& a : f.args) collect_free(*a, bound, out);
      return;
  }
}

bool eval_rec(const Formula& f, const FiniteGroupView& g, Env& env, std::int64_t& budget) {
  switch (f.kind) {
    case Formula::Kind::Eq:
      return eval_term(*f.lhs, g, env) == eval_term(*f.rhs, g, env);
    case Formula::Kind::Not:
      return !eval_rec(*f.args[0], g, env, budget);
    case Formula::Kind::And:
      return eval_rec(*f.args[0], g, env, budget) && eval_rec(*f.args[1], g, env, budget);
    case Formula::Kind::Or:
      return eval_rec(*f.args[0], g, env, budget) || eval_rec(*f.args[1], g, env, budget);
    case Formula::Kind::Implies:
      return !eval_rec(*f.args[0], g, env, budget) || eval_rec(*f.args[1], g, env, budget);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool forall = f.kind == Formula::Kind::Forall;
      auto old = env.find(f.var);
      std::optional<std::int64_t> saved;
      if (old != env.end()) saved = old->second;
      bool result = forall;
      for (std::int64_t e = 0; e < g.order(); ++e) {
        if (--budget < 0) throw DomainError("formula evaluation budget exhausted");
        env[f.var] = e;
        bool v = eval_rec(*f.args[0], g, env, budget);
        if (forall && !v) { result = false; break; }
        if (!forall && v) { result = true; break; }
      }
      if (saved)
        env[f.var] = *saved;
      else
        env.erase(f.var);
      return result;
    }
  }
  return false;
}

}  // namespace

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  collect_free(f, {}, out);
  return out;
}

std::int64_t eval_term(const Term& t, const FiniteGroupView& g, const Env& env) {
  switch (t.kind) {
    case Term::Kind::One:
      return g.identity();
    case Term::Kind::Var: {
      auto it = env.find(t.name);
      if (it == env.end()) throw DomainError("unbound variable: " + t.name);
      return it->second;
    }
    case Term::Kind::Mul:
      return g.mul(eval_term(*t.args[0], g, env), eval_term(*t.args[1], g, env));
    case Term::Kind::Pow:
      return g.power(eval_term(*t.args[0], g, env), t.exponent);
    case Term::Kind::Comm: {
      std::int64_t a = eval_term(*t.args[0], g, env);
      std::int64_t b = eval_term(*t.args[1], g, env);
      return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
    }
  }
  throw DomainError("malformed term");
}

bool eval_formula(const Formula& f, const FiniteGroupView& g, const Env& env,
                  std::int64_t budget) {
  Env scratch = env;
  return eval_rec(f, g, scratch, budget);
}

SolutionSet solution_set(const Formula& f, const FiniteGroupView& g, std::int64_t tuple_cap) {
  SolutionSet out;
  std::set<std::string> fv = free_vars(f);
  out.variables.assign(fv.begin(), fv.end());
  int k = static_cast<int>(out.variables.size());
  std::int64_t tuples = 1;
  for (int i = 0; i < k; ++i) {
    if (tuples > tuple_cap / g.order() + 1) throw DomainError("solution set too large to scan");
    tuples *= g.order();
  }
  if (tuples > tuple_cap) throw DomainError("solution set too large to scan");
  Env env;
  std::vector<std::int64_t> assign(static_cast<std::size_t>(k), 0);
  for (std::int64_t idx = 0; idx < tuples; ++idx) {
    std::int64_t rem = idx;
    for (int i = 0; i < k; ++i) {
      assign[static_cast<std::size_t>(i)] = rem % g.order();
      rem /= g.order();
      env[out.variables[static_cast<std::size_t>(i)]] = assign[static_cast<std::size_t>(i)];
    }
    ++out.tuples_scanned;
    if (eval_formula(f, g, env)) out.rows.push_back(assign);
  }
  return out;
}

}  // namespace coxcrystal
