#include "coxcrystal/fingerprint.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace coxcrystal {

bool GroupFingerprint::operator==(const GroupFingerprint& o) const {
  return order == o.order && exponent == o.exponent &&
         abelian_invariants == o.abelian_invariants && order_histogram == o.order_histogram &&
         class_sizes == o.class_sizes && center_order == o.center_order &&
         derived_order == o.derived_order && involutions == o.involutions;
}

std::string GroupFingerprint::to_json() const {
  nlohmann::json j;
  j["order"] = order;
  j["exponent"] = exponent;
  j["abelian_invariants"] = abelian_invariants;
  nlohmann::json hist = nlohmann::json::array();
  for (const auto& [k, v] : order_histogram) hist.push_back({k, v});
  j["order_histogram"] = hist;
  j["class_sizes"] = class_sizes;
  j["center_order"] = center_order;
  j["derived_order"] = derived_order;
  j["involutions"] = involutions;
  return j.dump();
}

std::string GroupFingerprint::summary() const {
  std::ostringstream os;
  os << "order " << order << ", exponent " << exponent << ", center " << center_order
     << ", derived " << derived_order << ", involutions " << involutions << ", abelianization [";
  for (std::size_t i = 0; i < abelian_invariants.size(); ++i)
    os << (i ? "," : "") << abelian_invariants[i];
  os << "], classes " << class_sizes.size();
  return os.str();
}

namespace {

// subgroup generated by `seed`, closed under conjugation by the whole
// generating set: the normal closure
std::vector<char> normal_closure(const FiniteGroupView& g, const std::vector<std::int64_t>& gens,
                                 const std::vector<std::int64_t>& seed) {
  std::int64_t n = g.order();
  std::vector<char> in(n, 0);
  std::vector<std::int64_t> members{g.identity()};
  std::vector<std::int64_t> sub_gens;
  in[g.identity()] = 1;

  // incremental closure: new subgroup generator c reaches members*c first,
  // then words over all subgroup generators
  auto add_generator = [&](std::int64_t c) {
    if (in[c]) return;
    sub_gens.push_back(c);
    std::vector<std::int64_t> queue;
    std::size_t snapshot = members.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      std::int64_t p = g.mul(members[i], c);
      if (!in[p]) {
        in[p] = 1;
        members.push_back(p);
        queue.push_back(p);
      }
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (std::int64_t s : sub_gens) {
        std::int64_t p = g.mul(queue[qi], s);
        if (!in[p]) {
          in[p] = 1;
          members.push_back(p);
          queue.push_back(p);
        }
      }
  };

  for (std::int64_t s : seed) add_generator(s);
  // normality: conjugates of every member by every group generator
  for (std::size_t mi = 0; mi < members.size(); ++mi)
    for (std::int64_t gen : gens) add_generator(g.conjugate(gen, members[mi]));
  return in;
}

std::vector<std::int64_t> abelian_invariants_of_quotient(const FiniteGroupView& g,
                                                         const std::vector<char>& derived,
                                                         std::int64_t derived_order) {
  // invariant factors of the abelian group G/D from the counts of cosets x
  // with x^(p^j) in D
  std::int64_t n = g.order();
  std::int64_t a_order = n / derived_order;
  if (a_order == 1) return {};
  // factor a_order
  std::vector<std::pair<std::int64_t, int>> primes;
  std::int64_t rest = a_order;
  for (std::int64_t p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      int e = 0;
      while (rest % p == 0) { rest /= p; ++e; }
      primes.push_back({p, e});
    }
  if (rest > 1) primes.push_back({rest, 1});

  // per prime: partition lambda of the p-part, via counts of solutions of
  // x^(p^j) in D
  std::vector<std::vector<int>> partitions;
  for (auto [p, e] : primes) {
    std::vector<std::int64_t> counts;  // counts[j] = #{cosets with order dividing p^j}
    counts.push_back(1);
    std::int64_t pj = 1;
    for (int j = 1; j <= e; ++j) {
      pj *= p;
      std::int64_t c = 0;
      for (std::int64_t x = 0; x < n; ++x)
        if (derived[g.power(x, pj)]) ++c;
      counts.push_back(c / derived_order);
    }
    // conjugate partition: d_j = log_p(counts[j]/counts[j-1]) copies at row j
    std::vector<int> col_heights;
    for (std::size_t j = 1; j < counts.size(); ++j) {
      std::int64_t ratio = counts[j] / counts[j - 1];
      int h = 0;
      while (ratio > 1) { ratio /= p; ++h; }
      col_heights.push_back(h);
    }
    // lambda_i = #{j : col_heights[j] >= i}
    std::vector<int> lambda;
    for (int i = 1;; ++i) {
      int c = 0;
      for (int h : col_heights)
        if (h >= i) ++c;
      if (c == 0) break;
      lambda.push_back(c);
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<int>());
    partitions.push_back(lambda);
  }

  std::size_t k = 0;
  for (const auto& l : partitions) k = std::max(k, l.size());
  std::vector<std::int64_t> invariants(k, 1);
  for (std::size_t pi = 0; pi < partitions.size(); ++pi)
    for (std::size_t i = 0; i < partitions[pi].size(); ++i) {
      std::int64_t f = 1;
      for (int x = 0; x < partitions[pi][i]; ++x) f *= primes[pi].first;
      invariants[i] *= f;
    }
  std::reverse(invariants.begin(), invariants.end());  // chain d1 | d2 | ...
  return invariants;
}

}  // namespace

GroupFingerprint fingerprint(const FiniteGroupView& g) {
  std::int64_t n = g.order();
  if (n > 100000) throw DomainError("fingerprint cap is order 100000");
  GroupFingerprint fp;
  fp.order = n;

  std::vector<std::int64_t> gens = g.generating_set();

  // element orders
  std::vector<std::int64_t> ord(n);
  for (std::int64_t x = 0; x < n; ++x) {
    ord[x] = g.element_order(x);
    ++fp.order_histogram[ord[x]];
    fp.exponent = std::lcm(fp.exponent ? fp.exponent : 1, ord[x]);
    if (ord[x] == 2) ++fp.involutions;
  }

  // conjugacy classes: orbits under conjugation by generators
  {
    std::vector<char> seen(n, 0);
    for (std::int64_t x = 0; x < n; ++x) {
      if (seen[x]) continue;
      std::vector<std::int64_t> orbit{x};
      seen[x] = 1;
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::int64_t gen : gens) {
          std::int64_t y = g.conjugate(gen, orbit[i]);
          if (!seen[y]) {
            seen[y] = 1;
            orbit.push_back(y);
          }
        }
      fp.class_sizes.push_back(static_cast<std::int64_t>(orbit.size()));
    }
    std::sort(fp.class_sizes.begin(), fp.class_sizes.end());
  }

  // center: elements commuting with every generator
  for (std::int64_t x = 0; x < n; ++x) {
    bool central = true;
    for (std::int64_t gen : gens)
      if (g.mul(x, gen) != g.mul(gen, x)) { central = false; break; }
    if (central) ++fp.center_order;
  }

  // derived subgroup: normal closure of the generator commutators
  {
    std::vector<std::int64_t> comms;
    for (std::int64_t a : gens)
      for (std::int64_t b : gens)
        comms.push_back(g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b)));
    std::vector<char> derived = normal_closure(g, gens, comms);
    fp.derived_order = std::count(derived.begin(), derived.end(), 1);
    fp.abelian_invariants = abelian_invariants_of_quotient(g, derived, fp.derived_order);
  }
  return fp;
}

namespace {

struct IsoSearch {
  const TableGroup& a;
  const TableGroup& b;
  std::vector<std::int64_t> cls_a, cls_b;  // invariant class id per element
  std::vector<std::int64_t> gens;          // generators of a
  std::vector<std::int64_t> image;         // image[x] partial map a -> b, -1 unset
  std::vector<char> used;                  // b elements already hit

  bool extend(std::size_t gi) {
    if (gi == gens.size()) return true;
    std::int64_t gen = gens[gi];
    for (std::int64_t cand = 0; cand < b.order(); ++cand) {
      if (used[cand] || cls_b[cand] != cls_a[gen]) continue;
      auto saved_image = image;
      auto saved_used = used;
      if (assign(gen, cand) && extend(gi + 1)) return true;
      image = std::move(saved_image);
      used = std::move(saved_used);
    }
    return false;
  }

  // sets image[gen] = cand and closes the partial map under products;
  // returns false on any inconsistency
  bool assign(std::int64_t gen, std::int64_t cand) {
    std::vector<std::int64_t> domain;
    for (std::int64_t x = 0; x < a.order(); ++x)
      if (image[x] >= 0) domain.push_back(x);
    if (image[gen] >= 0) return image[gen] == cand;
    if (used[cand] || cls_a[gen] != cls_b[cand]) return false;
    image[gen] = cand;
    used[cand] = 1;
    domain.push_back(gen);
    // close: products of mapped elements must map consistently; repeat to a
    // fixpoint since the domain grows while scanning
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < domain.size(); ++i)
        for (std::size_t j = 0; j < domain.size(); ++j) {
          std::int64_t p = a.mul(domain[i], domain[j]);
          std::int64_t q = b.mul(image[domain[i]], image[domain[j]]);
          if (image[p] >= 0) {
            if (image[p] != q) return false;
          } else {
            if (used[q] || cls_a[p] != cls_b[q]) return false;
            image[p] = q;
            used[q] = 1;
            domain.push_back(p);
            grew = true;
          }
        }
    }
    return true;
  }
};

// invariant per element: (order, centralizer order) -- cheap and usually sharp
void element_classes(const TableGroup& g, std::vector<std::vector<std::int64_t>>& keys) {
  std::int64_t n = g.order();
  keys.assign(n, {});
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t centralizer = 0;
    for (std::int64_t y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++centralizer;
    keys[x] = {g.element_order(x), centralizer};
  }
}

}  // namespace

bool iso_bruteforce(const FiniteGroupView& va, const FiniteGroupView& vb) {
  if (va.order() != vb.order()) return false;
  if (va.order() > 512) throw DomainError("iso_bruteforce cap is order 512");
  TableGroup a = materialize(va);
  TableGroup b = materialize(vb);
  if (fingerprint(a) != fingerprint(b)) return false;

  std::vector<std::vector<std::int64_t>> keys_a, keys_b;
  element_classes(a, keys_a);
  element_classes(b, keys_b);
  // canonical class ids via the sorted set of keys
  std::vector<std::vector<std::int64_t>> all = keys_a;
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  auto to_ids = [&all](const std::vector<std::vector<std::int64_t>>& keys) {
    std::vector<std::int64_t> ids(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto it = std::lower_bound(all.begin(), all.end(), keys[i]);
      if (it == all.end() || *it != keys[i]) return std::vector<std::int64_t>();
      ids[i] = it - all.begin();
    }
    return ids;
  };
  IsoSearch search{a, b, to_ids(keys_a), to_ids(keys_b), {}, {}, {}};
  if (search.cls_b.empty()) return false;  // key sets differ

  search.gens = a.generating_set();
  search.image.assign(a.order(), -1);
  search.used.assign(b.order(), 0);
  search.image[a.identity()] = b.identity();
  search.used[b.identity()] = 1;
  return search.extend(0);
}

}  // namespace coxcrystal
