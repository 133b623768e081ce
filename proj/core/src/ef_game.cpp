#include "coxcrystal/ef_game.hpp"

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "coxcrystal/util.hpp"

namespace coxcrystal {

namespace {

struct SmallGroup {
  int n = 0;
  int e = 0;
  std::vector<int> mul;  // n*n
  std::vector<int> inv;

  explicit SmallGroup(const FiniteGroupView& g) {
    n = static_cast<int>(g.order());
    e = static_cast<int>(g.identity());
    mul.resize(static_cast<std::size_t>(n) * n);
    inv.resize(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
      inv[a] = static_cast<int>(g.inverse(a));
      for (int b = 0; b < n; ++b)
        mul[static_cast<std::size_t>(a) * n + b] = static_cast<int>(g.mul(a, b));
    }
  }
  int times(int a, int b) const { return mul[static_cast<std::size_t>(a) * n + b]; }
};

using Position = std::vector<std::pair<int, int>>;  // sorted, unique

struct Solver {
  SmallGroup a, b;
  std::map<std::pair<Position, int>, bool> memo;
  std::int64_t nodes = 0;

  Solver(const FiniteGroupView& ga, const FiniteGroupView& gb) : a(ga), b(gb) {}

  // every unnested atomic formula agrees across the pairing
  bool atomic_match(const Position& pos) const {
    int k = static_cast<int>(pos.size());
    for (int i = 0; i < k; ++i) {
      if ((pos[i].first == a.e) != (pos[i].second == b.e)) return false;
      for (int j = 0; j < k; ++j) {
        if ((pos[i].first == pos[j].first) != (pos[i].second == pos[j].second)) return false;
        if ((a.inv[pos[i].first] == pos[j].first) != (b.inv[pos[i].second] == pos[j].second))
          return false;
        for (int l = 0; l < k; ++l)
          if ((a.times(pos[i].first, pos[j].first) == pos[l].first) !=
              (b.times(pos[i].second, pos[j].second) == pos[l].second))
            return false;
      }
    }
    return true;
  }

  // true when player II survives `rounds` more rounds from `pos`.  Player I
  // never gains from replaying an element (II answers with the existing
  // partner and only the round count drops), so only fresh picks are searched.
  bool ii_wins(const Position& pos, int rounds) {
    ++nodes;
    if (!atomic_match(pos)) return false;
    if (rounds == 0) return true;
    auto key = std::make_pair(pos, rounds);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    std::vector<char> used_a(static_cast<std::size_t>(a.n), 0);
    std::vector<char> used_b(static_cast<std::size_t>(b.n), 0);
    for (const auto& p : pos) {
      used_a[static_cast<std::size_t>(p.first)] = 1;
      used_b[static_cast<std::size_t>(p.second)] = 1;
    }

    bool result = true;
    for (int side = 0; side < 2 && result; ++side) {
      int moves = side == 0 ? a.n : b.n;
      const std::vector<char>& used_here = side == 0 ? used_a : used_b;
      const std::vector<char>& used_there = side == 0 ? used_b : used_a;
      int replies = side == 0 ? b.n : a.n;
      for (int x = 0; x < moves && result; ++x) {
        if (used_here[static_cast<std::size_t>(x)]) continue;
        bool answered = false;
        for (int y = 0; y < replies && !answered; ++y) {
          if (used_there[static_cast<std::size_t>(y)]) continue;  // would break injectivity
          Position next = pos;
          next.push_back(side == 0 ? std::make_pair(x, y) : std::make_pair(y, x));
          std::sort(next.begin(), next.end());
          if (ii_wins(next, rounds - 1)) answered = true;
        }
        if (!answered) result = false;
      }
    }
    memo[key] = result;
    return result;
  }
};

void check_caps(const FiniteGroupView& a, const FiniteGroupView& b, int rounds) {
  if (a.order() > 64 || b.order() > 64)
    throw DomainError("comparison game is capped at order 64");
  if (rounds < 0 || rounds > 4) throw DomainError("comparison game is capped at 4 rounds");
}

}  // namespace

EfReport ef_game(const FiniteGroupView& a, const FiniteGroupView& b, int rounds) {
  check_caps(a, b, rounds);
  Solver s(a, b);
  EfReport r;
  r.rounds = rounds;
  r.duplicator_wins = s.ii_wins({}, rounds);
  r.positions_explored = s.nodes;
  return r;
}

std::optional<int> least_distinguishing_rounds(const FiniteGroupView& a,
                                               const FiniteGroupView& b, int max_rounds) {
  check_caps(a, b, max_rounds);
  Solver s(a, b);
  for (int r = 0; r <= max_rounds; ++r)
    if (!s.ii_wins({}, r)) return r;
  return std::nullopt;
}

}  // namespace coxcrystal
