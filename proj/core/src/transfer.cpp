#include "coxcrystal/transfer.hpp"

#include <algorithm>

#include "coxcrystal/util.hpp"

namespace coxcrystal {

namespace {

// shared expansion walk; `scale(t, j)` is t*b_j, `add(x, y)` the group law
template <typename Elem, typename Scale, typename Add>
std::vector<Elem> expand_generic(const std::vector<Elem>& b, const std::vector<IntMatrix>& mats,
                                 Scale scale, Add add) {
  int n = static_cast<int>(b.size());
  std::vector<Elem> out = b;
  for (const IntMatrix& m : mats) {
    if (m.rows() != n || m.cols() != n)
      throw DomainError("expansion matrices must match the tuple length");
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        std::int64_t c = m(i, j);
        if (c >= 2)
          for (std::int64_t t = 2; t <= c; ++t) out.push_back(scale(t, j));
        else if (c <= -1)
          for (std::int64_t t = -1; t >= c; --t) out.push_back(scale(t, j));
      }
      Elem run = scale(m(i, 0), 0);
      for (int j = 1; j < n; ++j) {
        run = add(run, scale(m(i, j), j));
        out.push_back(run);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<IntVector> expand_tuple(const std::vector<IntVector>& b,
                                    const std::vector<IntMatrix>& mats) {
  if (b.empty()) throw DomainError("empty tuple");
  std::size_t dim = b[0].size();
  for (const IntVector& v : b)
    if (v.size() != dim) throw DomainError("tuple entries must share one dimension");
  auto scale = [&](std::int64_t t, int j) {
    IntVector r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = t * b[static_cast<std::size_t>(j)][i];
    return r;
  };
  auto add = [&](const IntVector& x, const IntVector& y) {
    IntVector r(dim);
    for (std::size_t i = 0; i < dim; ++i) r[i] = x[i] + y[i];
    return r;
  };
  return expand_generic(b, mats, scale, add);
}

std::vector<std::int64_t> expand_tuple(const AbelianGroup& g, const std::vector<std::int64_t>& b,
                                       const std::vector<IntMatrix>& mats) {
  if (b.empty()) throw DomainError("empty tuple");
  for (std::int64_t x : b)
    if (x < 0 || x >= g.order()) throw DomainError("tuple entry out of range");
  auto scale = [&](std::int64_t t, int j) { return g.power(b[static_cast<std::size_t>(j)], t); };
  auto add = [&](std::int64_t x, std::int64_t y) { return g.mul(x, y); };
  return expand_generic(b, mats, scale, add);
}

namespace {

std::string validate_iso(const AbelianGroup& a, const AbelianGroup& b,
                         const std::vector<std::int64_t>& iso) {
  if (a.order() != b.order()) return "orders differ";
  if (static_cast<std::int64_t>(iso.size()) != a.order()) return "table size is not |A|";
  std::vector<char> hit(static_cast<std::size_t>(b.order()), 0);
  for (std::int64_t y : iso) {
    if (y < 0 || y >= b.order()) return "image out of range";
    if (hit[static_cast<std::size_t>(y)]) return "table is not injective";
    hit[static_cast<std::size_t>(y)] = 1;
  }
  if (iso[static_cast<std::size_t>(a.identity())] != b.identity())
    return "identity is not preserved";
  // full homomorphism check when quadratic is cheap, otherwise seeded samples
  if (a.order() <= 2048) {
    for (std::int64_t x = 0; x < a.order(); ++x)
      for (std::int64_t y = 0; y < a.order(); ++y)
        if (iso[static_cast<std::size_t>(a.mul(x, y))] !=
            b.mul(iso[static_cast<std::size_t>(x)], iso[static_cast<std::size_t>(y)]))
          return "table is not a homomorphism";
  } else {
    Rng rng(kDefaultSeed);
    for (int i = 0; i < 100000; ++i) {
      auto x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(a.order())));
      auto y = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(a.order())));
      if (iso[static_cast<std::size_t>(a.mul(x, y))] !=
          b.mul(iso[static_cast<std::size_t>(x)], iso[static_cast<std::size_t>(y)]))
        return "table is not a homomorphism";
    }
  }
  return "";
}

// Unnested atomic agreement between two index tuples: equality, identity,
// inverse and product formulas must hold at the same index sets on both
// sides.  Values are compared through their occurrence-position lists, which
// keeps the product case at O(k^2) instead of O(k^3).
std::int64_t atomic_mismatches(const AbelianGroup& ga, const std::vector<std::int64_t>& xs,
                               const AbelianGroup& gb, const std::vector<std::int64_t>& ys,
                               std::int64_t& checks) {
  static const std::vector<std::size_t> kNone;
  std::map<std::int64_t, std::vector<std::size_t>> pos_a, pos_b;
  for (std::size_t l = 0; l < xs.size(); ++l) {
    pos_a[xs[l]].push_back(l);
    pos_b[ys[l]].push_back(l);
  }
  auto occ = [](const std::map<std::int64_t, std::vector<std::size_t>>& m,
                std::int64_t v) -> const std::vector<std::size_t>& {
    auto it = m.find(v);
    return it == m.end() ? kNone : it->second;
  };
  std::int64_t bad = 0;
  std::size_t k = xs.size();
  ++checks;
  if (occ(pos_a, ga.identity()) != occ(pos_b, gb.identity())) ++bad;
  for (std::size_t i = 0; i < k; ++i) {
    checks += 2;
    if (occ(pos_a, xs[i]) != occ(pos_b, ys[i])) ++bad;
    if (occ(pos_a, ga.inverse(xs[i])) != occ(pos_b, gb.inverse(ys[i]))) ++bad;
    for (std::size_t j = 0; j < k; ++j) {
      ++checks;
      if (occ(pos_a, ga.mul(xs[i], xs[j])) != occ(pos_b, gb.mul(ys[i], ys[j]))) ++bad;
    }
  }
  return bad;
}

}  // namespace

TransferReport strategy_transfer_check(const AbelianGroup& a, const AbelianGroup& b,
                                       const std::vector<std::int64_t>& iso,
                                       const std::vector<IntMatrix>& mats, int trials,
                                       std::uint64_t seed) {
  TransferReport rep;
  rep.iso_failure = validate_iso(a, b, iso);
  rep.iso_valid = rep.iso_failure.empty();
  if (!rep.iso_valid) return rep;

  int n = mats.empty() ? static_cast<int>(a.moduli().size()) : mats[0].rows();
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    std::vector<std::int64_t> tup(static_cast<std::size_t>(n));
    for (auto& x : tup) x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(a.order())));
    std::vector<std::int64_t> ex_a = expand_tuple(a, tup, mats);
    std::vector<std::int64_t> img(tup.size());
    std::transform(tup.begin(), tup.end(), img.begin(),
                   [&](std::int64_t x) { return iso[static_cast<std::size_t>(x)]; });
    std::vector<std::int64_t> ex_b = expand_tuple(b, img, mats);

    // entry-wise correspondence of the two expansions under the table
    for (std::size_t i = 0; i < ex_a.size(); ++i) {
      ++rep.atomic_checks;
      if (iso[static_cast<std::size_t>(ex_a[i])] != ex_b[i]) ++rep.violations;
    }
    rep.violations += atomic_mismatches(a, ex_a, b, ex_b, rep.atomic_checks);
    ++rep.trials_run;
  }
  return rep;
}

}  // namespace coxcrystal
