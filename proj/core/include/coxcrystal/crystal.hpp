#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxcrystal/point_group.hpp"

namespace coxcrystal {

// Translation coordinates are exact arbitrary-precision integers; the point
// part is an index into the finite point group.
using Coord = boost::multiprecision::cpp_int;
using CoordVector = std::vector<Coord>;

struct CrystalElement {
  CoordVector a;  // translation part
  int w = 0;      // point-group element index

  bool operator==(const CrystalElement& o) const { return w == o.w && a == o.a; }
  bool operator!=(const CrystalElement& o) const { return !(*this == o); }
};

CoordVector coord_vector(const IntVector& v);
CoordVector apply_matrix(const IntMatrix& m, const CoordVector& x);

// The crystallographic group Z^n x| W0 for a faithful integer action of the
// finite point group W0.  Group law:
//   (a, w) * (b, v) = (a + w(b), w v)
//   (a, w)^-1       = (w^-1(-a), w^-1)
class CrystalGroup {
 public:
  CrystalGroup(std::shared_ptr<const PointGroup> point_group, std::string family_name);

  int rank() const { return pg_->rank(); }
  const PointGroup& point_group() const { return *pg_; }
  std::shared_ptr<const PointGroup> point_group_ptr() const { return pg_; }
  const std::string& family_name() const { return family_; }

  CrystalElement identity() const { return {CoordVector(rank(), 0), 0}; }
  CrystalElement element(const IntVector& a, int w) const;
  CrystalElement translation(const IntVector& a) const { return element(a, 0); }

  CrystalElement mul(const CrystalElement& x, const CrystalElement& y) const;
  CrystalElement inv(const CrystalElement& x) const;
  CrystalElement pow(CrystalElement x, std::int64_t k) const;
  CrystalElement commutator(const CrystalElement& x, const CrystalElement& y) const;

  // nullopt means infinite order.  (a, w) has order k = order(w) exactly when
  // the cyclic sum a + w(a) + ... + w^{k-1}(a) vanishes, otherwise infinite.
  std::optional<std::int64_t> element_order(const CrystalElement& x) const;

  // Two routes to "x is a translation": the component test w == identity and
  // the definable-formula route "for all y, [x, y^m] = 1" with m the point
  // group exponent, which reduces to w fixing m*b for every basis b.
  bool is_translation_by_component(const CrystalElement& x) const { return x.w == 0; }
  bool is_translation_by_formula(const CrystalElement& x) const;

  // For a translation x: per prime p, whether x = y^p has a translation
  // solution, i.e. p divides every coordinate.
  std::vector<std::pair<std::int64_t, bool>> divisibility_profile(
      const CrystalElement& x, const std::vector<std::int64_t>& primes) const;

  std::string describe(const CrystalElement& x) const;

 private:
  std::shared_ptr<const PointGroup> pg_;
  std::string family_;
};

// Builds Z^n x| W0 for a classified irreducible affine family.
CrystalGroup build_affine_group(const FamilyType& family);

// The six defining-sentence checks certifying the semidirect structure.
struct PsiCertificate {
  struct Item {
    int number;
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Item> items;
  bool all_pass = false;
  std::int64_t index_mod_two = 0;  // |T / 2T|, expected 2^rank
};

// The certificate is evaluated against an explicit action table so that
// deliberately broken fixtures (non-faithful actions) can be fed in too.
PsiCertificate psi_certificate(const ActionTable& action);
PsiCertificate psi_certificate(const CrystalGroup& g);

// Checks that (a, w) -> (m a, w) is a multiplicative bijection onto the
// subgroup m Z^n x| W0: exhaustive over a translation box plus seeded
// random pairs.
struct ScaleIsoReport {
  std::int64_t scale = 0;
  std::int64_t pairs_checked = 0;
  std::int64_t violations = 0;
  bool lattice_image_ok = false;
  bool pass() const { return violations == 0 && lattice_image_ok; }
};

ScaleIsoReport scale_isomorphism(const CrystalGroup& g, std::int64_t m,
                                 std::int64_t box_radius = 2, int random_pairs = 1000,
                                 std::uint64_t seed = kDefaultSeed);

}  // namespace coxcrystal
