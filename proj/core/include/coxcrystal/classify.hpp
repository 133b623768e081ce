#pragma once

#include <string>
#include <vector>

#include "coxcrystal/coxeter_graph.hpp"

namespace coxcrystal {

enum class DiagramKind { Spherical, Affine, Other };

// One irreducible factor of a Coxeter system.  `family` is the series letter
// (A, B, C, D, E, F, G, H, I) and `rank` the subscript; affine families carry
// rank n on n+1 diagram vertices.  I2(m) stores m in `dihedral_label`.
// Rank-2 sphericals are canonicalised: I2(3) -> A2, I2(4) -> B2, I2(6) -> G2.
// The spherical 4-ended path reports as B (B_n and C_n share a diagram) and
// the affine rank-2 double-4 path as C~2 (the usual B~2 alias).
struct FamilyType {
  DiagramKind kind = DiagramKind::Other;
  char family = '?';
  int rank = 0;
  int dihedral_label = 0;  // only for I2(m)
  std::vector<int> vertices;  // indices into the classified graph

  bool operator==(const FamilyType& o) const {
    return kind == o.kind && family == o.family && rank == o.rank &&
           dihedral_label == o.dihedral_label;
  }
  bool is_affine() const { return kind == DiagramKind::Affine; }

  // "A~2", "B4", "I2(7)", "other(rank 3)"
  std::string name() const;
};

struct Classification {
  std::vector<FamilyType> components;
  bool irreducible() const { return components.size() == 1; }
  // "affine", "spherical" or "other"; reducible input reports "product"
  std::string kind_name() const;
  std::string to_json() const;
};

Classification classify_diagram(const CoxeterGraph& g);

// Builds the tabulated diagram for an affine or spherical family; throws
// DomainError for unsupported (family, rank) pairs.
CoxeterGraph family_diagram(DiagramKind kind, char family, int rank, int dihedral_label = 0);

// Parses "A~2" (affine) or "B3" / "I2(5)" (spherical).
FamilyType parse_family(const std::string& text);

}  // namespace coxcrystal
