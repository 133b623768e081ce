#include "coxcrystal/coxeter_graph.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace coxcrystal {

CoxeterGraph::CoxeterGraph(std::vector<std::string> vertex_names) : names_(std::move(vertex_names)) {
  int n = size();
  labels_.assign(static_cast<std::size_t>(n) * n, 2);
  for (int i = 0; i < n; ++i) labels_[static_cast<std::size_t>(i) * n + i] = 1;
}

void CoxeterGraph::set_label(int s, int t, int m) {
  if (s == t) {
    if (m != 1) throw DomainError("diagonal label must be 1");
    return;
  }
  if (m < 2) throw DomainError("off-diagonal label must be >= 2");
  labels_[static_cast<std::size_t>(s) * size() + t] = m;
  labels_[static_cast<std::size_t>(t) * size() + s] = m;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

CoxeterGraph CoxeterGraph::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool have_vertices = false;
  CoxeterGraph g;
  std::map<std::string, int> index;
  // declared pairs, to reject duplicate/asymmetric declarations
  std::map<std::pair<int, int>, int> declared;

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    if (line.rfind("vertices:", 0) == 0) {
      if (have_vertices) throw ParseError("duplicate vertices line", lineno);
      std::istringstream ls(line.substr(9));
      std::vector<std::string> names;
      std::string name;
      while (ls >> name) {
        if (index.count(name)) throw ParseError("duplicate vertex '" + name + "'", lineno);
        index[name] = static_cast<int>(names.size());
        names.push_back(name);
      }
      if (names.empty()) throw ParseError("vertices line lists no vertices", lineno);
      g = CoxeterGraph(names);
      have_vertices = true;
      continue;
    }

    if (line.rfind("edge:", 0) == 0) {
      if (!have_vertices) throw ParseError("edge before vertices line", lineno);
      std::istringstream ls(line.substr(5));
      std::string s, t, m;
      if (!(ls >> s >> t >> m)) throw ParseError("edge needs '<s> <t> <m>'", lineno);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens after edge", lineno);
      auto is = index.find(s), it = index.find(t);
      if (is == index.end()) throw ParseError("unknown vertex '" + s + "'", lineno);
      if (it == index.end()) throw ParseError("unknown vertex '" + t + "'", lineno);
      int label;
      if (m == "inf") {
        label = kInfiniteLabel;
      } else {
        try {
          std::size_t used = 0;
          label = std::stoi(m, &used);
          if (used != m.size()) throw std::invalid_argument(m);
        } catch (const std::exception&) {
          throw ParseError("label must be an integer or 'inf', got '" + m + "'", lineno);
        }
      }
      if (is->second == it->second) {
        if (label != 1) throw ParseError("diagonal label must be 1", lineno);
        continue;
      }
      if (label < 2) throw ParseError("off-diagonal label must be >= 2", lineno);
      auto key = std::minmax(is->second, it->second);
      auto prev = declared.find({key.first, key.second});
      if (prev != declared.end()) {
        if (prev->second != label)
          throw ParseError("conflicting labels for pair " + s + "," + t, lineno);
        continue;
      }
      declared[{key.first, key.second}] = label;
      g.set_label(is->second, it->second, label);
      continue;
    }

    throw ParseError("unrecognised line '" + line + "'", lineno);
  }
  if (!have_vertices) throw ParseError("missing vertices line", lineno);
  return g;
}

CoxeterGraph CoxeterGraph::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

namespace {

template <typename EdgePred>
std::vector<std::vector<int>> components_of(int n, EdgePred edge) {
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && edge(u, v)) {
          comp[v] = c;
          stack.push_back(v);
        }
    }
    ++c;
  }
  std::vector<std::vector<int>> out(c);
  for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
  return out;
}

}  // namespace

std::vector<std::vector<int>> CoxeterGraph::diagram_components() const {
  return components_of(size(), [this](int u, int v) { return delta_edge(u, v); });
}

bool CoxeterGraph::is_irreducible() const { return diagram_components().size() == 1; }

CoxeterGraph CoxeterGraph::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> names;
  names.reserve(vertices.size());
  for (int v : vertices) names.push_back(names_[v]);
  CoxeterGraph g(names);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      g.set_label(static_cast<int>(i), static_cast<int>(j), label(vertices[i], vertices[j]));
  return g;
}

RacgReport racg_checks(const CoxeterGraph& g) {
  RacgReport rep;
  int n = g.size();
  rep.right_angled = true;
  for (int i = 0; i < n && rep.right_angled; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = g.label(i, j);
      if (m != 2 && m != kInfiniteLabel) {
        rep.right_angled = false;
        break;
      }
    }

  rep.irreducible_racg =
      components_of(n, [&g](int u, int v) { return u != v && !g.gamma_edge(u, v); }).size() == 1;

  if (!rep.right_angled) return rep;  // hyperbolicity test not applicable

  // no induced 4-cycle in gamma: 4 edges among the quadruple whose two
  // non-edges are disjoint (the diagonals)
  bool found = false;
  for (int a = 0; a < n && !found; ++a)
    for (int b = a + 1; b < n && !found; ++b)
      for (int c = b + 1; c < n && !found; ++c)
        for (int d = c + 1; d < n && !found; ++d) {
          int q[4] = {a, b, c, d};
          int edges = 0;
          std::pair<int, int> non[2];
          int nn = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
              if (g.gamma_edge(q[i], q[j]))
                ++edges;
              else if (nn < 2)
                non[nn++] = {q[i], q[j]};
            }
          if (edges == 4 && non[0].first != non[1].first && non[0].first != non[1].second &&
              non[0].second != non[1].first && non[0].second != non[1].second)
            found = true;
        }
  rep.hyperbolic = !found;
  return rep;
}

}  // namespace coxcrystal
