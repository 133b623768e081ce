#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace coxcrystal {

// Free product of `rank` copies of Z/2: elements are reduced words (no two
// equal adjacent letters), letters are generator indices 0 .. rank-1.
struct ReducedWord {
  std::vector<int> letters;

  bool operator==(const ReducedWord& o) const { return letters == o.letters; }
  bool operator!=(const ReducedWord& o) const { return !(*this == o); }
  int length() const { return static_cast<int>(letters.size()); }
  bool is_identity() const { return letters.empty(); }
};

class UniversalCoxeter {
 public:
  explicit UniversalCoxeter(int rank);

  int rank() const { return rank_; }

  ReducedWord identity() const { return {}; }
  ReducedWord generator(int i) const;
  ReducedWord word(const std::vector<int>& letters) const;  // reduces the input

  ReducedWord mul(const ReducedWord& a, const ReducedWord& b) const;
  ReducedWord inv(const ReducedWord& a) const;

  // w = c * core * c^-1 with the core cyclically reduced
  struct CyclicForm {
    ReducedWord core;
    ReducedWord conjugator;
  };
  CyclicForm cyclic_reduce(const ReducedWord& w) const;

  // 1, 2 or infinite (nullopt): the core is empty, one letter, or longer
  std::optional<std::int64_t> element_order(const ReducedWord& w) const;

  // for an involution: (c, g) with w = c g c^-1, g a generator
  struct InvolutionWitness {
    ReducedWord conjugator;
    int generator = -1;
  };
  std::optional<InvolutionWitness> involution_witness(const ReducedWord& w) const;

  int parity(const ReducedWord& w) const { return w.length() % 2; }

  // whitespace separated letters, each "e<k>" with k in 1..rank; "1" alone
  // (or an empty string) is the identity
  ReducedWord parse(const std::string& text) const;
  std::string format(const ReducedWord& w) const;

 private:
  void check_letters(const std::vector<int>& letters) const;
  int rank_;
};

}  // namespace coxcrystal
