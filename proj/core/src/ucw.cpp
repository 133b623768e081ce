#include "coxcrystal/ucw.hpp"

#include <algorithm>
#include <sstream>

#include "coxcrystal/util.hpp"

namespace coxcrystal {

UniversalCoxeter::UniversalCoxeter(int rank) : rank_(rank) {
  if (rank < 1) throw DomainError("rank must be at least 1");
}

void UniversalCoxeter::check_letters(const std::vector<int>& letters) const {
  for (int l : letters)
    if (l < 0 || l >= rank_) throw DomainError("generator index out of range");
}

ReducedWord UniversalCoxeter::generator(int i) const {
  check_letters({i});
  return {{i}};
}

ReducedWord UniversalCoxeter::word(const std::vector<int>& letters) const {
  check_letters(letters);
  ReducedWord w;
  for (int l : letters) {
    if (!w.letters.empty() && w.letters.back() == l)
      w.letters.pop_back();  // ss = 1
    else
      w.letters.push_back(l);
  }
  return w;
}

ReducedWord UniversalCoxeter::mul(const ReducedWord& a, const ReducedWord& b) const {
  ReducedWord w = a;
  for (int l : b.letters) {
    if (!w.letters.empty() && w.letters.back() == l)
      w.letters.pop_back();
    else
      w.letters.push_back(l);
  }
  return w;
}

ReducedWord UniversalCoxeter::inv(const ReducedWord& a) const {
  ReducedWord w = a;
  std::reverse(w.letters.begin(), w.letters.end());
  return w;
}

UniversalCoxeter::CyclicForm UniversalCoxeter::cyclic_reduce(const ReducedWord& w) const {
  CyclicForm f;
  f.core = w;
  while (f.core.length() >= 2 && f.core.letters.front() == f.core.letters.back()) {
    f.conjugator.letters.push_back(f.core.letters.front());
    f.core.letters.erase(f.core.letters.begin());
    f.core.letters.pop_back();
  }
  return f;
}

std::optional<std::int64_t> UniversalCoxeter::element_order(const ReducedWord& w) const {
  CyclicForm f = cyclic_reduce(w);
  if (f.core.is_identity()) return 1;
  if (f.core.length() == 1) return 2;
  // a cyclically reduced word of length >= 2 concatenates without
  // cancellation, so its powers grow forever
  return std::nullopt;
}

std::optional<UniversalCoxeter::InvolutionWitness> UniversalCoxeter::involution_witness(
    const ReducedWord& w) const {
  CyclicForm f = cyclic_reduce(w);
  if (f.core.length() != 1) return std::nullopt;
  InvolutionWitness witness;
  witness.conjugator = f.conjugator;
  witness.generator = f.core.letters[0];
  return witness;
}

ReducedWord UniversalCoxeter::parse(const std::string& text) const {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string tok;
  bool saw_one = false;
  while (in >> tok) {
    if (tok == "1") { saw_one = true; continue; }  // the identity
    if (tok.size() < 2 || (tok[0] != 'e' && tok[0] != 'E') ||
        !std::all_of(tok.begin() + 1, tok.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      throw ParseError("bad generator token '" + tok + "' (want e1, e2, ...)");
    long v = std::stol(tok.substr(1));
    if (v < 1 || v > rank_)
      throw ParseError("generator index out of range in '" + tok + "'");
    letters.push_back(static_cast<int>(v - 1));
  }
  if (saw_one && !letters.empty())
    throw ParseError("the identity token '1' cannot be mixed with generators");
  return word(letters);
}

std::string UniversalCoxeter::format(const ReducedWord& w) const {
  if (w.is_identity()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out << ' ';
    out << 'e' << (w.letters[i] + 1);
  }
  return out.str();
}

}  // namespace coxcrystal
