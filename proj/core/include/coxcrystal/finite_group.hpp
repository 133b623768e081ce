#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "coxcrystal/crystal.hpp"

namespace coxcrystal {

// Minimal interface shared by every finite group in the toolkit: quotients
// with an on-the-fly law, explicit multiplication tables, finite abelian
// groups.  Elements are indices 0 .. order()-1.
class FiniteGroupView {
 public:
  virtual ~FiniteGroupView() = default;
  virtual std::int64_t order() const = 0;
  virtual std::int64_t mul(std::int64_t a, std::int64_t b) const = 0;
  virtual std::int64_t identity() const = 0;
  virtual std::int64_t inverse(std::int64_t a) const = 0;

  std::int64_t power(std::int64_t a, std::int64_t k) const;
  std::int64_t element_order(std::int64_t a) const;
  std::int64_t conjugate(std::int64_t g, std::int64_t x) const;  // g x g^-1
  // a generating set (greedy, deterministic)
  std::vector<std::int64_t> generating_set() const;
};

// Group given by an explicit multiplication table.  File format: the order N
// on the first line, then N*N whitespace-separated element indices.
class TableGroup final : public FiniteGroupView {
 public:
  explicit TableGroup(std::vector<std::vector<std::int64_t>> table);

  static TableGroup read(std::istream& in);
  static TableGroup read_file(const std::string& path);
  void write(std::ostream& out) const;

  std::int64_t order() const override { return static_cast<std::int64_t>(table_.size()); }
  std::int64_t mul(std::int64_t a, std::int64_t b) const override { return table_[a][b]; }
  std::int64_t identity() const override { return identity_; }
  std::int64_t inverse(std::int64_t a) const override { return inverse_[a]; }

 private:
  void validate();
  std::vector<std::vector<std::int64_t>> table_;
  std::vector<std::int64_t> inverse_;
  std::int64_t identity_ = 0;
};

// Z/m1 x Z/m2 x ... with mixed-radix element indices.
class AbelianGroup final : public FiniteGroupView {
 public:
  explicit AbelianGroup(std::vector<std::int64_t> moduli);

  const std::vector<std::int64_t>& moduli() const { return moduli_; }
  std::vector<std::int64_t> decode(std::int64_t idx) const;
  std::int64_t encode(const std::vector<std::int64_t>& residues) const;

  std::int64_t order() const override { return order_; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const override;
  std::int64_t identity() const override { return 0; }
  std::int64_t inverse(std::int64_t a) const override;

 private:
  std::vector<std::int64_t> moduli_;
  std::int64_t order_ = 1;
};

// W / mT: pairs (a mod m, w) under the semidirect law with matrices reduced
// mod m.  Index = w * m^n + mixed-radix digits of a.
class QuotientGroup final : public FiniteGroupView {
 public:
  QuotientGroup(std::shared_ptr<const PointGroup> pg, std::int64_t m, std::string provenance);

  std::int64_t modulus() const { return m_; }
  int rank() const { return rank_; }
  const std::string& provenance() const { return provenance_; }
  const PointGroup& point_group() const { return *pg_; }

  std::pair<IntVector, int> decode(std::int64_t idx) const;
  std::int64_t encode(const IntVector& a, int w) const;

  std::int64_t order() const override { return order_; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const override;
  std::int64_t identity() const override { return 0; }
  std::int64_t inverse(std::int64_t a) const override;

 private:
  std::shared_ptr<const PointGroup> pg_;
  std::int64_t m_;
  int rank_;
  std::int64_t order_;
  std::int64_t npow_;  // m^rank
  std::vector<IntMatrix> mats_mod_;
  std::string provenance_;
};

// Finite quotient of a crystal group; order is m^rank * |W0| (capped to keep
// downstream analysis tractable).
QuotientGroup make_quotient(const CrystalGroup& g, std::int64_t m,
                            std::int64_t order_cap = 10'000'000);

// Relabels a group by a seeded random permutation (an isomorphic copy).
TableGroup shuffled_copy(const FiniteGroupView& g, std::uint64_t seed);
TableGroup materialize(const FiniteGroupView& g);

}  // namespace coxcrystal
