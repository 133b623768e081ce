#include "coxcrystal/genus.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <json.hpp>

#include "coxcrystal/util.hpp"

namespace coxcrystal {

namespace {

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 62) / base) throw DomainError("modulus power overflows");
    r *= base;
  }
  return r;
}

// greedy small generating set from a multiplication table
std::vector<int> table_generators(const std::vector<std::vector<int>>& mul, int identity) {
  int n = static_cast<int>(mul.size());
  std::vector<int> gens;
  std::vector<char> seen(n, 0);
  seen[identity] = 1;
  int covered = 1;
  while (covered < n) {
    int pick = -1;
    for (int e = 0; e < n; ++e)
      if (!seen[e]) { pick = e; break; }
    gens.push_back(pick);
    std::vector<int> frontier{identity};
    std::fill(seen.begin(), seen.end(), 0);
    seen[identity] = 1;
    covered = 1;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int g : gens) {
          int y = mul[x][g];
          if (!seen[y]) {
            seen[y] = 1;
            ++covered;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
  }
  return gens;
}

}  // namespace

std::string GenusModulusReport::verdict_name() const {
  switch (verdict) {
    case Verdict::DistinctOrder: return "distinct (orders differ)";
    case Verdict::DistinctFingerprint: return "distinct (fingerprints differ)";
    case Verdict::DistinctByOracle: return "distinct (no isomorphism exists)";
    case Verdict::Isomorphic: return "isomorphic (exhaustive search)";
    case Verdict::TieFingerprint: return "tie (fingerprints agree)";
  }
  return "?";
}

GenusCompareReport spacegroup_genus_compare(const CrystalGroup& a, const CrystalGroup& b,
                                            const std::vector<std::int64_t>& moduli) {
  if (a.rank() != b.rank())
    throw DomainError("quotient comparison needs groups of equal rank");
  if (moduli.empty()) throw DomainError("quotient comparison needs at least one modulus");
  for (std::int64_t m : moduli)
    if (m < 2) throw DomainError("comparison moduli must be >= 2");
  GenusCompareReport rep;
  rep.left_name = a.family_name();
  rep.right_name = b.family_name();
  for (std::int64_t m : moduli) {
    GenusModulusReport r;
    r.modulus = m;
    QuotientGroup qa = make_quotient(a, m);
    QuotientGroup qb = make_quotient(b, m);
    r.order_left = qa.order();
    r.order_right = qb.order();
    if (r.order_left != r.order_right) {
      r.verdict = GenusModulusReport::Verdict::DistinctOrder;
    } else {
      r.left = fingerprint(qa);
      r.right = fingerprint(qb);
      r.fingerprints_equal = (r.left == r.right);
      if (!r.fingerprints_equal)
        r.verdict = GenusModulusReport::Verdict::DistinctFingerprint;
      else if (r.order_left <= 512)
        r.verdict = iso_bruteforce(qa, qb) ? GenusModulusReport::Verdict::Isomorphic
                                           : GenusModulusReport::Verdict::DistinctByOracle;
      else
        r.verdict = GenusModulusReport::Verdict::TieFingerprint;
    }
    if (r.distinguishes() && !rep.distinguished_at) rep.distinguished_at = m;
    rep.moduli.push_back(std::move(r));
  }
  return rep;
}

std::string GenusCompareReport::to_json() const {
  nlohmann::json j;
  j["left"] = left_name;
  j["right"] = right_name;
  j["moduli"] = nlohmann::json::array();
  for (const auto& r : moduli) {
    nlohmann::json e;
    e["m"] = r.modulus;
    e["order_left"] = r.order_left;
    e["order_right"] = r.order_right;
    e["verdict"] = r.verdict_name();
    e["distinguishes"] = r.distinguishes();
    if (r.order_left == r.order_right) {
      e["fingerprint_left"] = nlohmann::json::parse(r.left.to_json());
      e["fingerprint_right"] = nlohmann::json::parse(r.right.to_json());
    }
    j["moduli"].push_back(std::move(e));
  }
  if (distinguished_at)
    j["distinguished_at"] = *distinguished_at;
  else
    j["distinguished_at"] = nullptr;
  return j.dump(2);
}

WModuleLattice WModuleLattice::make(const ActionTable& action, const Sublattice& lattice) {
  int n = action.rank;
  if (lattice.rank() != n) throw DomainError("lattice rank does not match the action");
  WModuleLattice out;
  out.action = action;
  out.lattice = lattice;
  out.induced.reserve(action.mats.size());
  for (const IntMatrix& m : action.mats) {
    IntMatrix prod = m * lattice.basis();
    IntMatrix ind(n, n);
    for (int j = 0; j < n; ++j) {
      IntVector col(n);
      for (int i = 0; i < n; ++i) col[i] = prod(i, j);
      auto c = lattice.coordinates(col);
      if (!c) throw DomainError("lattice is not stable under the action");
      for (int i = 0; i < n; ++i) ind(i, j) = (*c)[i];
    }
    out.induced.push_back(std::move(ind));
  }
  return out;
}

ActionTable dual_action(const ActionTable& a) {
  ActionTable d = a;
  for (int e = 0; e < a.size(); ++e) {
    const IntMatrix& m = a.mats[a.inv[e]];
    IntMatrix t(a.rank, a.rank);
    for (int i = 0; i < a.rank; ++i)
      for (int j = 0; j < a.rank; ++j) t(i, j) = m(j, i);
    d.mats[e] = std::move(t);
  }
  return d;
}

ModuleFingerprint module_fingerprint(const WModuleLattice& l, std::int64_t p, int k) {
  if (p < 2 || k < 1) throw DomainError("need a prime p >= 2 and k >= 1");
  int n = l.action.rank;
  std::int64_t q = checked_pow(p, k);
  ModuleFingerprint fp;
  fp.p = p;
  fp.k = k;
  for (const IntMatrix& m : l.induced) {
    // invariant factors of (Z/q)^n / im(M - I), presented by [M - I | qI]
    IntMatrix pres(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pres(i, j) = m(i, j) - (i == j ? 1 : 0);
      pres(i, n + i) = q;
    }
    std::vector<std::int64_t> d = smith_normal_form(pres);
    fp.element_smith.push_back(d);
    std::int64_t fixed = 1;  // |ker(M - I)| = |coker| on a finite module
    for (std::int64_t x : d) fixed *= x;
    fp.element_fixed.push_back(fixed);
  }

  // orbit sizes of the action on L / qL, skipped when the point count is large
  std::int64_t points = 1;
  bool overflow = false;
  for (int i = 0; i < n; ++i) {
    if (points > (std::int64_t{1} << 16) / q) { overflow = true; break; }
    points *= q;
  }
  if (!overflow && points <= (std::int64_t{1} << 16)) {
    std::vector<char> visited(static_cast<std::size_t>(points), 0);
    std::map<std::int64_t, std::int64_t> hist;
    std::vector<std::int64_t> x(n), y(n);
    for (std::int64_t start = 0; start < points; ++start) {
      if (visited[static_cast<std::size_t>(start)]) continue;
      std::int64_t rem = start;
      for (int i = 0; i < n; ++i) { x[i] = rem % q; rem /= q; }
      std::int64_t orbit = 0;
      for (const IntMatrix& m : l.induced) {
        for (int i = 0; i < n; ++i) {
          std::int64_t s = 0;
          for (int j = 0; j < n; ++j) s += m(i, j) * x[j];
          s %= q;
          if (s < 0) s += q;
          y[i] = s;
        }
        std::int64_t idx = 0;
        for (int i = n - 1; i >= 0; --i) idx = idx * q + y[i];
        if (!visited[static_cast<std::size_t>(idx)]) {
          visited[static_cast<std::size_t>(idx)] = 1;
          ++orbit;
        }
      }
      ++hist[orbit];
    }
    fp.orbit_histogram.assign(hist.begin(), hist.end());
  }
  return fp;
}

namespace {

// searches for an invertible T over Z/q with T A_g = B_g T for the table
// generators; existence of such a T is exactly module isomorphism
int equivariant_search(const WModuleLattice& a, const WModuleLattice& b, std::int64_t q) {
  int n = a.action.rank;
  std::int64_t cells = 1;
  for (int i = 0; i < n * n; ++i) {
    if (cells > (std::int64_t{1} << 22) / q) return -1;
    cells *= q;
  }
  std::vector<int> gens = table_generators(a.action.mul, a.action.identity);
  std::vector<IntMatrix> am, bm;
  for (int g : gens) {
    am.push_back(a.induced[g].mod(q));
    bm.push_back(b.induced[g].mod(q));
  }
  std::vector<std::int64_t> digits(static_cast<std::size_t>(n) * n, 0);
  IntMatrix t(n, n);
  for (std::int64_t idx = 0; idx < cells; ++idx) {
    std::int64_t rem = idx;
    for (int i = 0; i < n * n; ++i) { digits[i] = rem % q; rem /= q; }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = digits[static_cast<std::size_t>(i) * n + j];
    std::int64_t det = determinant(t) % q;
    if (det < 0) det += q;
    if (std::gcd(det, q) != 1) continue;
    bool ok = true;
    for (std::size_t g = 0; g < am.size() && ok; ++g)
      if ((t * am[g]).mod(q) != (bm[g] * t).mod(q)) ok = false;
    if (ok) return 1;
  }
  return 0;
}

}  // namespace

ModuleCompareReport module_genus_compare(const WModuleLattice& a, const WModuleLattice& b,
                                         const std::vector<std::int64_t>& primes, int k_max) {
  if (a.action.mul != b.action.mul || a.action.identity != b.action.identity)
    throw DomainError("module comparison needs actions sharing one element table");
  ModuleCompareReport rep;
  for (std::int64_t p : primes)
    for (int k = 1; k <= k_max; ++k) {
      ModuleCompareReport::Entry e;
      e.p = p;
      e.k = k;
      ModuleFingerprint fa = module_fingerprint(a, p, k);
      ModuleFingerprint fb = module_fingerprint(b, p, k);
      e.fingerprints_equal = (fa == fb);
      e.equivariant_bijection = equivariant_search(a, b, checked_pow(p, k));
      if (!e.fingerprints_equal || e.equivariant_bijection == 0) rep.all_equal = false;
      rep.entries.push_back(e);
    }
  return rep;
}

std::string ModuleCompareReport::to_json() const {
  nlohmann::json j;
  j["all_equal"] = all_equal;
  j["entries"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json o;
    o["p"] = e.p;
    o["k"] = e.k;
    o["fingerprints_equal"] = e.fingerprints_equal;
    o["equivariant_bijection"] = e.equivariant_bijection == -1
                                     ? "not attempted"
                                     : (e.equivariant_bijection == 1 ? "found" : "none");
    j["entries"].push_back(std::move(o));
  }
  return j.dump(2);
}

}  // namespace coxcrystal
