#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "coxcrystal/util.hpp"

namespace coxcrystal {

// Label value standing for m(s,t) = infinity.
constexpr int kInfiniteLabel = std::numeric_limits<int>::max();

// A Coxeter system given by its symmetric label matrix: m(s,s) = 1 and
// m(s,t) >= 2 off the diagonal (possibly infinite).  Two derived graphs are
// used throughout:
//   gamma: edge s-t iff m(s,t) < infinity
//   delta: edge s-t iff m(s,t) >= 3 (the Coxeter diagram, infinity included)
class CoxeterGraph {
 public:
  CoxeterGraph() = default;
  explicit CoxeterGraph(std::vector<std::string> vertex_names);

  // File format: "vertices:" line first, then "edge: <s> <t> <m>" lines with
  // m an integer >= 2 or "inf"; '#' starts a comment; unlisted pairs get 2.
  static CoxeterGraph parse(const std::string& text);
  static CoxeterGraph parse_file(const std::string& path);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  int label(int s, int t) const { return labels_[static_cast<std::size_t>(s) * size() + t]; }
  void set_label(int s, int t, int m);

  bool gamma_edge(int s, int t) const { return s != t && label(s, t) < kInfiniteLabel; }
  bool delta_edge(int s, int t) const { return s != t && label(s, t) >= 3; }

  // Connected components of the diagram delta, each a sorted vertex list.
  std::vector<std::vector<int>> diagram_components() const;
  bool is_irreducible() const;

  // Vertex-induced subgraph keeping the original names.
  CoxeterGraph induced(const std::vector<int>& vertices) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> labels_;
};

struct RacgReport {
  bool right_angled = false;        // all labels in {1, 2, inf}
  bool irreducible_racg = false;    // complement of gamma is connected
  // Only meaningful for right-angled input: no induced 4-cycle in gamma.
  std::optional<bool> hyperbolic;
};

RacgReport racg_checks(const CoxeterGraph& g);

}  // namespace coxcrystal
