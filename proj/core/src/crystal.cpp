#include "coxcrystal/crystal.hpp"

#include <sstream>

namespace coxcrystal {

CoordVector coord_vector(const IntVector& v) {
  CoordVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = v[i];
  return c;
}

CoordVector apply_matrix(const IntMatrix& m, const CoordVector& x) {
  CoordVector y(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) y[i] += m(i, j) * x[j];
  return y;
}

CrystalGroup::CrystalGroup(std::shared_ptr<const PointGroup> point_group, std::string family_name)
    : pg_(std::move(point_group)), family_(std::move(family_name)) {
  if (!pg_) throw DomainError("crystal group needs a point group");
}

CrystalElement CrystalGroup::element(const IntVector& a, int w) const {
  if (static_cast<int>(a.size()) != rank()) throw DomainError("translation part has wrong rank");
  if (w < 0 || w >= pg_->size()) throw DomainError("point part index out of range");
  return {coord_vector(a), w};
}

CrystalElement CrystalGroup::mul(const CrystalElement& x, const CrystalElement& y) const {
  CoordVector a = apply_matrix(pg_->matrix(x.w), y.a);
  for (int i = 0; i < rank(); ++i) a[i] += x.a[i];
  return {std::move(a), pg_->mul(x.w, y.w)};
}

CrystalElement CrystalGroup::inv(const CrystalElement& x) const {
  int wi = pg_->inverse(x.w);
  CoordVector neg(rank());
  for (int i = 0; i < rank(); ++i) neg[i] = -x.a[i];
  return {apply_matrix(pg_->matrix(wi), neg), wi};
}

CrystalElement CrystalGroup::pow(CrystalElement x, std::int64_t k) const {
  if (k < 0) {
    x = inv(x);
    k = -k;
  }
  CrystalElement r = identity();
  while (k > 0) {
    if (k & 1) r = mul(r, x);
    x = mul(x, x);
    k >>= 1;
  }
  return r;
}

CrystalElement CrystalGroup::commutator(const CrystalElement& x, const CrystalElement& y) const {
  return mul(mul(inv(x), inv(y)), mul(x, y));
}

std::optional<std::int64_t> CrystalGroup::element_order(const CrystalElement& x) const {
  std::int64_t k = pg_->order_of(x.w);
  const IntMatrix& m = pg_->matrix(x.w);
  CoordVector sum = x.a, cur = x.a;
  for (std::int64_t i = 1; i < k; ++i) {
    cur = apply_matrix(m, cur);
    for (int j = 0; j < rank(); ++j) sum[j] += cur[j];
  }
  for (int j = 0; j < rank(); ++j)
    if (sum[j] != 0) return std::nullopt;
  return k;
}

bool CrystalGroup::is_translation_by_formula(const CrystalElement& x) const {
  // "for all y, [x, y^m] = 1" holds iff w fixes m*e_j for every basis
  // translation e_j, m being the point-group exponent
  std::int64_t m = pg_->exponent();
  const IntMatrix& w = pg_->matrix(x.w);
  for (int j = 0; j < rank(); ++j) {
    CoordVector basis(rank(), 0);
    basis[j] = m;
    CoordVector image = apply_matrix(w, basis);
    if (image != basis) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, bool>> CrystalGroup::divisibility_profile(
    const CrystalElement& x, const std::vector<std::int64_t>& primes) const {
  if (!is_translation_by_component(x))
    throw DomainError("divisibility profile is defined for translations only");
  std::vector<std::pair<std::int64_t, bool>> prof;
  prof.reserve(primes.size());
  for (std::int64_t p : primes) {
    if (p < 2) throw DomainError("profile entries must be primes >= 2");
    bool divisible = true;
    for (int i = 0; i < rank() && divisible; ++i)
      if (x.a[i] % p != 0) divisible = false;
    prof.emplace_back(p, divisible);
  }
  return prof;
}

std::string CrystalGroup::describe(const CrystalElement& x) const {
  std::ostringstream os;
  os << "([";
  for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << x.a[i];
  os << "], w" << x.w << ")";
  return os.str();
}

CrystalGroup build_affine_group(const FamilyType& family) {
  if (family.kind != DiagramKind::Affine)
    throw DomainError("build_affine_group expects an irreducible affine family, got " +
                      family.name());
  auto pg = std::make_shared<PointGroup>(point_group_for(family));
  return CrystalGroup(pg, family.name());
}

namespace {

// enumerate integer vectors with ||a||_inf <= radius
bool next_box_vector(IntVector& v, std::int64_t radius) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < radius) {
      ++v[i];
      for (std::size_t j = 0; j < i; ++j) v[j] = -radius;
      return true;
    }
  }
  return false;
}

}  // namespace

PsiCertificate psi_certificate(const ActionTable& action) {
  PsiCertificate cert;
  int n = action.rank;
  int t = action.size();
  std::int64_t m = action.exponent();

  // (1) the point-part section is a subgroup isomorphic to W0: products of
  // section elements stay in the section and follow the W0 table
  {
    bool ok = true;
    for (int i = 0; i < t && ok; ++i)
      for (int j = 0; j < t && ok; ++j) {
        // (0, w_i)(0, w_j) = (w_i(0) + 0, w_i w_j) = (0, w_i w_j)
        IntVector zero(n, 0);
        IntVector moved = action.mats[i].apply(zero);
        if (moved != zero) ok = false;
        if (action.mul[i][j] >= t) ok = false;
      }
    cert.items.push_back({1, "section is a copy of the point group", ok,
                          "checked " + std::to_string(t * t) + " products"});
  }

  // (2) centralizer of the basis translations is abelian: the point parts
  // fixing every basis vector must commute (their action is trivial, so the
  // centralizer is Z^n x C with C as below)
  {
    std::vector<int> fixing;
    for (int e = 0; e < t; ++e) {
      bool fixes_all = true;
      for (int j = 0; j < n && fixes_all; ++j) {
        IntVector basis(n, 0);
        basis[j] = 1;
        if (action.mats[e].apply(basis) != basis) fixes_all = false;
      }
      if (fixes_all) fixing.push_back(e);
    }
    bool ok = true;
    for (int a : fixing)
      for (int b : fixing)
        if (action.mul[a][b] != action.mul[b][a]) ok = false;
    cert.items.push_back({2, "centralizer of basis translations is abelian", ok,
                          std::to_string(fixing.size()) + " point part(s) fix the basis"});
  }

  // (3) unique semidirect decomposition x = (a, e) * (0, w) over a sample box
  {
    bool ok = true;
    IntVector a(n, -2);
    do {
      for (int w = 0; w < t; ++w) {
        // (a, e)*(0, w) = (a + id(0), w) = (a, w); uniqueness is forced by
        // the pair representation, re-check the translation part survives
        IntVector prod = a;  // identity acts trivially
        if (prod != a || action.mul[action.identity][w] != w) ok = false;
      }
    } while (next_box_vector(a, 2));
    cert.items.push_back({3, "unique decomposition into translation times section", ok,
                          "box radius 2"});
  }

  // (4) no translation torsion up to the exponent: l*a != 0 for a != 0
  {
    bool ok = true;
    IntVector a(n, -2);
    do {
      bool zero = true;
      for (std::int64_t c : a)
        if (c != 0) zero = false;
      if (zero) continue;
      for (std::int64_t l = 1; l <= m; ++l) {
        bool all_zero = true;
        for (std::int64_t c : a)
          if (l * c != 0) all_zero = false;
        if (all_zero) ok = false;
      }
    } while (next_box_vector(a, 2));
    cert.items.push_back({4, "translations have no torsion up to the exponent", ok,
                          "exponent " + std::to_string(m)});
  }

  // (5) |T / 2T| = 2^n via the Smith normal form of 2*I
  {
    IntMatrix two = IntMatrix::identity(n);
    for (int i = 0; i < n; ++i) two(i, i) = 2;
    std::vector<std::int64_t> d = smith_normal_form(two);
    std::int64_t size = 1;
    for (std::int64_t x : d) size *= x;
    cert.index_mod_two = size;
    std::int64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= 2;
    cert.items.push_back({5, "index of doubled translations is 2^rank", size == expected,
                          "|T/2T| = " + std::to_string(size)});
  }

  // (6) every non-identity section element moves some basis translation
  {
    bool ok = true;
    for (int e = 0; e < t; ++e) {
      if (e == action.identity) continue;
      bool moves = false;
      for (int j = 0; j < n && !moves; ++j) {
        IntVector basis(n, 0);
        basis[j] = 1;
        if (action.mats[e].apply(basis) != basis) moves = true;
      }
      if (!moves) ok = false;
    }
    cert.items.push_back({6, "non-identity point parts move a basis translation", ok,
                          std::to_string(t - 1) + " element(s) checked"});
  }

  cert.all_pass = true;
  for (const auto& item : cert.items)
    if (!item.pass) cert.all_pass = false;
  return cert;
}

PsiCertificate psi_certificate(const CrystalGroup& g) {
  return psi_certificate(g.point_group().action());
}

ScaleIsoReport scale_isomorphism(const CrystalGroup& g, std::int64_t m, std::int64_t box_radius,
                                 int random_pairs, std::uint64_t seed) {
  if (m < 1) throw DomainError("scale factor must be >= 1");
  ScaleIsoReport rep;
  rep.scale = m;
  int n = g.rank();
  int t = g.point_group().size();

  auto scaled = [&](const CrystalElement& x) {
    CrystalElement y = x;
    for (int i = 0; i < n; ++i) y.a[i] *= m;
    return y;
  };
  auto check_pair = [&](const CrystalElement& x, const CrystalElement& y) {
    ++rep.pairs_checked;
    if (scaled(g.mul(x, y)) != g.mul(scaled(x), scaled(y))) ++rep.violations;
  };

  // exhaustive over the box
  std::vector<CrystalElement> box;
  IntVector a(n, -box_radius);
  do {
    for (int w = 0; w < t; ++w) box.push_back(g.element(a, w));
  } while (next_box_vector(a, box_radius));
  for (const CrystalElement& x : box)
    for (const CrystalElement& y : box) check_pair(x, y);

  // seeded random pairs from a wider range
  Rng rng(seed);
  auto random_element = [&]() {
    IntVector v(n);
    for (int i = 0; i < n; ++i) v[i] = rng.range(-50, 50);
    return g.element(v, static_cast<int>(rng.below(t)));
  };
  for (int i = 0; i < random_pairs; ++i) check_pair(random_element(), random_element());

  // the translation lattice maps onto m Z^n: basis vectors scale to m*e_i
  rep.lattice_image_ok = true;
  for (int j = 0; j < n; ++j) {
    IntVector basis(n, 0);
    basis[j] = 1;
    CrystalElement image = scaled(g.translation(basis));
    if (image.w != 0 || image.a[j] != m) rep.lattice_image_ok = false;
    for (int i = 0; i < n; ++i)
      if (i != j && image.a[i] != 0) rep.lattice_image_ok = false;
  }
  return rep;
}

}  // namespace coxcrystal
