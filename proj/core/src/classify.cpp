#include "coxcrystal/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

namespace coxcrystal {

std::string FamilyType::name() const {
  std::ostringstream os;
  switch (kind) {
    case DiagramKind::Other:
      os << "other(rank " << rank << ")";
      break;
    case DiagramKind::Affine:
      os << family << "~" << rank;
      break;
    case DiagramKind::Spherical:
      if (family == 'I')
        os << "I2(" << dihedral_label << ")";
      else
        os << family << rank;
      break;
  }
  return os.str();
}

std::string Classification::kind_name() const {
  if (components.size() != 1) return "product";
  switch (components[0].kind) {
    case DiagramKind::Spherical: return "spherical";
    case DiagramKind::Affine: return "affine";
    default: return "other";
  }
}

std::string Classification::to_json() const {
  nlohmann::json comps = nlohmann::json::array();
  for (const FamilyType& c : components) {
    nlohmann::json j;
    switch (c.kind) {
      case DiagramKind::Spherical: j["kind"] = "spherical"; break;
      case DiagramKind::Affine: j["kind"] = "affine"; break;
      default: j["kind"] = "other"; break;
    }
    if (c.kind == DiagramKind::Other)
      j["family"] = nullptr;
    else
      j["family"] = std::string(1, c.family);
    j["rank"] = c.rank;
    if (c.family == 'I') j["m"] = c.dihedral_label;
    j["name"] = c.name();
    comps.push_back(j);
  }
  nlohmann::json out;
  if (components.size() == 1) {
    out = comps[0];
  } else {
    out["kind"] = "product";
    out["components"] = comps;
  }
  return out.dump();
}

namespace {

std::vector<std::string> numbered_names(int k) {
  std::vector<std::string> names;
  names.reserve(k);
  for (int i = 0; i < k; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

CoxeterGraph path_graph(const std::vector<int>& labels) {
  int k = static_cast<int>(labels.size()) + 1;
  CoxeterGraph g(numbered_names(k));
  for (int i = 0; i + 1 < k; ++i) g.set_label(i, i + 1, labels[i]);
  return g;
}

// chain 0..(k-2) with vertex k-1 attached to `branch`
CoxeterGraph e_shape(int k, int branch) {
  CoxeterGraph g(numbered_names(k));
  for (int i = 0; i + 2 < k; ++i) g.set_label(i, i + 1, 3);
  g.set_label(branch, k - 1, 3);
  return g;
}

}  // namespace

CoxeterGraph family_diagram(DiagramKind kind, char family, int rank, int dihedral_label) {
  auto bad = [&]() -> CoxeterGraph {
    throw DomainError(std::string("no tabulated diagram for ") +
                      (kind == DiagramKind::Affine ? "affine " : "spherical ") + family +
                      std::to_string(rank));
  };
  if (kind == DiagramKind::Spherical) {
    switch (family) {
      case 'A': {
        if (rank < 1) return bad();
        return path_graph(std::vector<int>(rank - 1, 3));
      }
      case 'B':
      case 'C': {  // one diagram for both series
        if (rank < 2) return bad();
        std::vector<int> lab(rank - 1, 3);
        lab.back() = 4;
        return path_graph(lab);
      }
      case 'D': {
        if (rank < 4) return bad();
        CoxeterGraph g(numbered_names(rank));
        for (int i = 0; i + 2 < rank; ++i) g.set_label(i, i + 1, 3);
        g.set_label(rank - 3, rank - 1, 3);
        return g;
      }
      case 'E': {
        if (rank < 6 || rank > 8) return bad();
        return e_shape(rank, 2);
      }
      case 'F':
        if (rank != 4) return bad();
        return path_graph({3, 4, 3});
      case 'G':
        if (rank != 2) return bad();
        return path_graph({6});
      case 'H':
        if (rank == 3) return path_graph({5, 3});
        if (rank == 4) return path_graph({5, 3, 3});
        return bad();
      case 'I':
        if (rank != 2 || dihedral_label < 3) return bad();
        return path_graph({dihedral_label});
      default:
        return bad();
    }
  }
  if (kind != DiagramKind::Affine) return bad();
  int k = rank + 1;  // affine diagrams have rank+1 vertices
  switch (family) {
    case 'A': {
      if (rank == 1) return path_graph({kInfiniteLabel});
      if (rank < 2) return bad();
      CoxeterGraph g(numbered_names(k));
      for (int i = 0; i < k; ++i) g.set_label(i, (i + 1) % k, 3);
      return g;
    }
    case 'B': {
      if (rank < 3) return bad();
      CoxeterGraph g(numbered_names(k));
      g.set_label(0, 2, 3);
      g.set_label(1, 2, 3);
      for (int i = 2; i + 2 < k; ++i) g.set_label(i, i + 1, 3);
      g.set_label(k - 2, k - 1, 4);
      return g;
    }
    case 'C': {
      if (rank < 2) return bad();
      std::vector<int> lab(rank, 3);
      lab.front() = 4;
      lab.back() = 4;
      return path_graph(lab);
    }
    case 'D': {
      if (rank < 4) return bad();
      CoxeterGraph g(numbered_names(k));
      g.set_label(0, 2, 3);
      g.set_label(1, 2, 3);
      for (int i = 2; i + 3 < k; ++i) g.set_label(i, i + 1, 3);
      g.set_label(k - 3, k - 2, 3);
      g.set_label(k - 3, k - 1, 3);
      return g;
    }
    case 'E': {
      if (rank == 6) {  // arms 2,2,2 around the trivalent node
        CoxeterGraph g = e_shape(6, 2);
        CoxeterGraph h(numbered_names(7));
        for (int i = 0; i < 6; ++i)
          for (int j = i + 1; j < 6; ++j) h.set_label(i, j, g.label(i, j));
        h.set_label(5, 6, 3);
        return h;
      }
      if (rank == 7) {  // arms 1,3,3
        CoxeterGraph g = e_shape(7, 2);
        CoxeterGraph h(numbered_names(8));
        for (int i = 0; i < 7; ++i)
          for (int j = i + 1; j < 7; ++j) h.set_label(i, j, g.label(i, j));
        h.set_label(0, 7, 3);
        return h;
      }
      if (rank == 8) {  // arms 1,2,5
        CoxeterGraph g = e_shape(8, 2);
        CoxeterGraph h(numbered_names(9));
        for (int i = 0; i < 8; ++i)
          for (int j = i + 1; j < 8; ++j) h.set_label(i, j, g.label(i, j));
        h.set_label(6, 8, 3);
        return h;
      }
      return bad();
    }
    case 'F':
      if (rank != 4) return bad();
      return path_graph({3, 3, 4, 3});
    case 'G':
      if (rank != 2) return bad();
      return path_graph({3, 6});
    default:
      return bad();
  }
}

namespace {

// labelled-graph isomorphism by backtracking; sizes stay <= 9
bool labels_isomorphic(const CoxeterGraph& a, const CoxeterGraph& b) {
  int n = a.size();
  if (b.size() != n) return false;
  auto signature = [](const CoxeterGraph& g, int v) {
    std::vector<int> s;
    for (int u = 0; u < g.size(); ++u)
      if (u != v) s.push_back(g.label(v, u));
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::vector<int>> siga(n), sigb(n);
  for (int v = 0; v < n; ++v) {
    siga[v] = signature(a, v);
    sigb[v] = signature(b, v);
  }
  {
    auto sa = siga, sb = sigb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<int> map_ab(n, -1), used(n, 0);
  std::function<bool(int)> place = [&](int v) -> bool {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || siga[v] != sigb[w]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u)
        if (a.label(v, u) != b.label(w, map_ab[u])) ok = false;
      if (!ok) continue;
      map_ab[v] = w;
      used[w] = 1;
      if (place(v + 1)) return true;
      used[w] = 0;
      map_ab[v] = -1;
    }
    return false;
  };
  return place(0);
}

FamilyType classify_component(const CoxeterGraph& comp, const std::vector<int>& vertices) {
  FamilyType t;
  t.vertices = vertices;
  t.rank = comp.size();
  int k = comp.size();
  if (k == 1) {
    t.kind = DiagramKind::Spherical;
    t.family = 'A';
    t.rank = 1;
    return t;
  }
  if (k == 2) {
    int m = comp.label(0, 1);
    if (m == kInfiniteLabel) {
      t.kind = DiagramKind::Affine;
      t.family = 'A';
      t.rank = 1;
      return t;
    }
    t.kind = DiagramKind::Spherical;
    t.rank = 2;
    if (m == 3) t.family = 'A';
    else if (m == 4) t.family = 'B';
    else if (m == 6) t.family = 'G';
    else {
      t.family = 'I';
      t.dihedral_label = m;
    }
    return t;
  }

  struct Candidate {
    DiagramKind kind;
    char family;
    int rank;
  };
  std::vector<Candidate> candidates;
  candidates.push_back({DiagramKind::Spherical, 'A', k});
  if (k >= 2) candidates.push_back({DiagramKind::Spherical, 'B', k});
  if (k >= 4) candidates.push_back({DiagramKind::Spherical, 'D', k});
  if (k >= 6 && k <= 8) candidates.push_back({DiagramKind::Spherical, 'E', k});
  if (k == 4) candidates.push_back({DiagramKind::Spherical, 'F', 4});
  if (k == 3 || k == 4) candidates.push_back({DiagramKind::Spherical, 'H', k});
  int r = k - 1;  // affine rank on k vertices
  if (r >= 2) candidates.push_back({DiagramKind::Affine, 'A', r});
  if (r >= 3) candidates.push_back({DiagramKind::Affine, 'B', r});
  if (r >= 2) candidates.push_back({DiagramKind::Affine, 'C', r});
  if (r >= 4) candidates.push_back({DiagramKind::Affine, 'D', r});
  if (r >= 6 && r <= 8) candidates.push_back({DiagramKind::Affine, 'E', r});
  if (r == 4) candidates.push_back({DiagramKind::Affine, 'F', 4});
  if (r == 2) candidates.push_back({DiagramKind::Affine, 'G', 2});

  for (const Candidate& c : candidates) {
    if (labels_isomorphic(comp, family_diagram(c.kind, c.family, c.rank))) {
      t.kind = c.kind;
      t.family = c.family;
      t.rank = c.rank;
      return t;
    }
  }
  t.kind = DiagramKind::Other;
  t.family = '?';
  t.rank = k;
  return t;
}

}  // namespace

Classification classify_diagram(const CoxeterGraph& g) {
  if (g.size() == 0) throw DomainError("cannot classify an empty Coxeter graph");
  Classification cls;
  for (const std::vector<int>& comp : g.diagram_components())
    cls.components.push_back(classify_component(g.induced(comp), comp));
  return cls;
}

FamilyType parse_family(const std::string& text) {
  FamilyType t;
  if (text.empty()) throw ParseError("empty family name");
  t.family = text[0];
  std::string rest = text.substr(1);
  if (t.family == 'I') {
    // I2(m)
    if (rest.size() < 4 || rest.substr(0, 2) != "2(" || rest.back() != ')')
      throw ParseError("dihedral family must look like I2(m)");
    t.kind = DiagramKind::Spherical;
    t.rank = 2;
    try {
      t.dihedral_label = std::stoi(rest.substr(2, rest.size() - 3));
    } catch (const std::exception&) {
      throw ParseError("bad dihedral label in '" + text + "'");
    }
    if (t.dihedral_label < 3) throw ParseError("dihedral label must be >= 3");
    return t;
  }
  if (!rest.empty() && rest[0] == '~') {
    t.kind = DiagramKind::Affine;
    rest = rest.substr(1);
  } else {
    t.kind = DiagramKind::Spherical;
  }
  try {
    std::size_t used = 0;
    t.rank = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(rest);
  } catch (const std::exception&) {
    throw ParseError("bad rank in family '" + text + "'");
  }
  if (t.rank < 1) throw ParseError("family rank must be >= 1");
  // canonical aliases
  if (t.kind == DiagramKind::Affine && t.family == 'B' && t.rank == 2) t.family = 'C';
  family_diagram(t.kind, t.family, t.rank, t.dihedral_label);  // validates
  return t;
}

}  // namespace coxcrystal
