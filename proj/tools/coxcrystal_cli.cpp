#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "coxcrystal/classify.hpp"
#include "coxcrystal/crystal.hpp"
#include "coxcrystal/ef_game.hpp"
#include "coxcrystal/fingerprint.hpp"
#include "coxcrystal/formula.hpp"
#include "coxcrystal/genus.hpp"
#include "coxcrystal/lattice.hpp"
#include "coxcrystal/ucw.hpp"
#include "coxcrystal/util.hpp"

namespace cx = coxcrystal;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct Output {
  bool as_json = false;
  json j;  // filled in json mode

  void header(const std::string& verb, const std::string& options) {
    if (as_json) {
      j["schema"] = "coxcrystal/" + verb + "/1";
      j["version"] = kVersion;
      j["options"] = options;
    } else {
      std::cout << "coxcrystal " << kVersion << "\n";
      std::cout << "command: " << verb << (options.empty() ? "" : " " + options) << "\n";
    }
  }
  void flush() {
    if (as_json) std::cout << j.dump(2) << "\n";
  }
};

std::vector<std::int64_t> parse_mods(const std::string& text) {
  std::vector<std::int64_t> mods;
  auto fail = [&] { throw cx::ParseError("bad modulus list '" + text + "' (want 2..8 or 2,3,5)"); };
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    std::int64_t lo, hi;
    try {
      lo = std::stoll(text.substr(0, dots));
      hi = std::stoll(text.substr(dots + 2));
    } catch (const std::exception&) {
      fail();
      return mods;
    }
    if (lo < 1 || hi < lo) fail();
    for (std::int64_t m = lo; m <= hi; ++m) mods.push_back(m);
    return mods;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      mods.push_back(std::stoll(item));
    } catch (const std::exception&) {
      fail();
    }
    if (mods.back() < 1) fail();
  }
  if (mods.empty()) fail();
  return mods;
}

// Group specification: a multiplication-table file path, "ab:m1,m2,..." for
// Z/m1 x Z/m2 x ..., or "<family>:<m>" for the quotient W/mT.
struct GroupSpec {
  std::unique_ptr<cx::FiniteGroupView> group;
  std::string description;
};

GroupSpec parse_group_spec(const std::string& spec) {
  GroupSpec out;
  if (spec.rfind("ab:", 0) == 0) {
    std::vector<std::int64_t> moduli;
    std::stringstream ss(spec.substr(3));
    std::string item;
    while (std::getline(ss, item, ','))
      moduli.push_back(std::stoll(item));
    out.group = std::make_unique<cx::AbelianGroup>(moduli);
    out.description = spec;
    return out;
  }
  auto colon = spec.rfind(':');
  bool looks_like_path = spec.find('/') != std::string::npos ||
                         spec.find(".tbl") != std::string::npos || colon == std::string::npos;
  if (looks_like_path) {
    out.group = std::make_unique<cx::TableGroup>(cx::TableGroup::read_file(spec));
    out.description = "table " + spec;
    return out;
  }
  cx::FamilyType fam = cx::parse_family(spec.substr(0, colon));
  std::int64_t m = std::stoll(spec.substr(colon + 1));
  cx::CrystalGroup g = cx::build_affine_group(fam);
  out.group = std::make_unique<cx::QuotientGroup>(cx::make_quotient(g, m));
  out.description = fam.name() + "/" + std::to_string(m) + "T";
  return out;
}

json lattice_json(const cx::Sublattice& l) {
  json b = json::array();
  for (int i = 0; i < l.rank(); ++i) {
    json row = json::array();
    for (int j = 0; j < l.rank(); ++j) row.push_back(l.basis()(i, j));
    b.push_back(row);
  }
  return json{{"index", l.index()}, {"basis", b}};
}

std::string lattice_text(const cx::Sublattice& l) {
  std::ostringstream s;
  s << "index " << l.index() << " basis [";
  for (int i = 0; i < l.rank(); ++i) {
    if (i) s << "; ";
    for (int j = 0; j < l.rank(); ++j) {
      if (j) s << ' ';
      s << l.basis()(i, j);
    }
  }
  s << "]";
  return s.str();
}

int cmd_classify(const std::string& file, Output& out) {
  out.header("classify", file);
  cx::CoxeterGraph g = cx::CoxeterGraph::parse_file(file);
  cx::Classification c = cx::classify_diagram(g);
  cx::RacgReport racg = cx::racg_checks(g);
  if (out.as_json) {
    out.j["classification"] = json::parse(c.to_json());
    out.j["right_angled"] = racg.right_angled;
    if (racg.right_angled) {
      out.j["irreducible_racg"] = racg.irreducible_racg;
      out.j["hyperbolic"] = *racg.hyperbolic;
    }
    out.flush();
    return 0;
  }
  if (c.irreducible()) {
    std::cout << c.kind_name() << " " << c.components[0].name() << "\n";
  } else {
    std::cout << "product of " << c.components.size() << " factors:";
    for (const auto& f : c.components) std::cout << " " << f.name();
    std::cout << "\n";
  }
  std::cout << "right-angled: " << (racg.right_angled ? "yes" : "no") << "\n";
  if (racg.right_angled) {
    std::cout << "irreducible as RACG: " << (racg.irreducible_racg ? "yes" : "no") << "\n";
    std::cout << "hyperbolic (no induced 4-cycle): " << (*racg.hyperbolic ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_build(const std::string& family, std::int64_t scale, std::uint64_t seed, Output& out) {
  std::ostringstream opts;
  opts << family << (scale > 0 ? " --scale " + std::to_string(scale) : "");
  out.header("build", opts.str());
  cx::FamilyType fam = cx::parse_family(family);
  cx::CrystalGroup g = cx::build_affine_group(fam);
  cx::PsiCertificate cert = cx::psi_certificate(g);
  if (out.as_json) {
    out.j["family"] = g.family_name();
    out.j["rank"] = g.rank();
    out.j["point_group_order"] = g.point_group().size();
    out.j["point_group_exponent"] = g.point_group().exponent();
    json items = json::array();
    for (const auto& item : cert.items)
      items.push_back({{"number", item.number},
                       {"name", item.name},
                       {"pass", item.pass},
                       {"detail", item.detail}});
    out.j["certificate"] = items;
    out.j["certificate_pass"] = cert.all_pass;
    out.j["index_mod_two"] = cert.index_mod_two;
  } else {
    std::cout << "built " << g.family_name() << ": Z^" << g.rank() << " x| W0, |W0| = "
              << g.point_group().size() << ", exponent " << g.point_group().exponent() << "\n";
    for (const auto& item : cert.items)
      std::cout << "  (" << item.number << ") " << item.name << ": "
                << (item.pass ? "pass" : "FAIL") << " — " << item.detail << "\n";
    std::cout << "certificate: " << (cert.all_pass ? "all items pass" : "FAILED") << "\n";
  }
  if (scale > 0) {
    cx::ScaleIsoReport rep = cx::scale_isomorphism(g, scale, 2, 1000, seed);
    if (out.as_json) {
      out.j["scale_check"] = {{"m", rep.scale},
                              {"pairs_checked", rep.pairs_checked},
                              {"violations", rep.violations},
                              {"lattice_image_ok", rep.lattice_image_ok},
                              {"pass", rep.pass()}};
    } else {
      std::cout << "scale map a -> " << scale << "a: " << (rep.pass() ? "multiplicative" : "FAILS")
                << " (" << rep.pairs_checked << " pairs)\n";
    }
  }
  out.flush();
  return cert.all_pass ? 0 : 3;
}

int cmd_quotient(const std::string& family, std::int64_t m, const std::string& out_file,
                 Output& out) {
  out.header("quotient", family + " " + std::to_string(m) +
                             (out_file.empty() ? "" : " --out " + out_file));
  cx::FamilyType fam = cx::parse_family(family);
  cx::CrystalGroup g = cx::build_affine_group(fam);
  cx::QuotientGroup q = cx::make_quotient(g, m);
  cx::GroupFingerprint fp = cx::fingerprint(q);
  if (out.as_json) {
    out.j["provenance"] = q.provenance();
    out.j["order"] = q.order();
    out.j["fingerprint"] = json::parse(fp.to_json());
  } else {
    std::cout << q.provenance() << ": order " << q.order() << "\n" << fp.summary() << "\n";
  }
  if (!out_file.empty()) {
    cx::TableGroup table = cx::materialize(q);
    std::ofstream f(out_file);
    if (!f) throw cx::IoError("cannot write " + out_file);
    table.write(f);
    if (out.as_json)
      out.j["table_written"] = out_file;
    else
      std::cout << "table written to " << out_file << "\n";
  }
  out.flush();
  return 0;
}

int cmd_distinguish(const std::vector<std::string>& families, const std::string& mods_text,
                    Output& out) {
  std::ostringstream opts;
  for (const auto& f : families) opts << f << " ";
  opts << "--mods " << mods_text;
  out.header("distinguish", opts.str());
  if (families.size() < 2) throw cx::DomainError("need at least two families");
  std::vector<std::int64_t> mods = parse_mods(mods_text);

  std::vector<cx::CrystalGroup> groups;
  for (const auto& name : families) groups.push_back(cx::build_affine_group(cx::parse_family(name)));
  for (const auto& g : groups)
    if (g.rank() != groups[0].rank())
      throw cx::DomainError("families must share one rank for genus comparison");

  json pairs = json::array();
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      cx::GenusCompareReport rep = cx::spacegroup_genus_compare(groups[i], groups[j], mods);
      if (out.as_json) {
        json p = json::parse(rep.to_json());
        pairs.push_back(p);
      } else {
        std::cout << rep.left_name << " vs " << rep.right_name << ": ";
        if (rep.distinguished_at)
          std::cout << "distinguished at m = " << *rep.distinguished_at;
        else
          std::cout << "not distinguished within tested moduli";
        std::cout << "\n";
        for (const auto& r : rep.moduli)
          std::cout << "  m = " << r.modulus << ": orders " << r.order_left << "/"
                    << r.order_right << ", " << r.verdict_name() << "\n";
      }
    }
  if (out.as_json) out.j["pairs"] = pairs;
  out.flush();
  return 0;
}

int cmd_sublattices(const std::string& family, int rank, std::int64_t bound, bool primitive,
                    Output& out) {
  std::ostringstream opts;
  opts << (family.empty() ? "--rank " + std::to_string(rank) : family) << " --bound " << bound
       << (primitive ? " --primitive" : "");
  out.header("sublattices", opts.str());

  std::vector<cx::IntMatrix> action;
  int n = rank;
  std::string setting;
  if (!family.empty()) {
    cx::FamilyType fam = cx::parse_family(family);
    cx::PointGroup pg = cx::point_group_for(fam);
    n = pg.rank();
    for (int e = 0; e < pg.size(); ++e) action.push_back(pg.matrix(e));
    setting = fam.name() + " point-group action";
  } else {
    if (n < 1) throw cx::DomainError("need --rank or a family");
    action.push_back(cx::IntMatrix::identity(n));
    setting = "trivial action (all sublattices invariant)";
  }

  if (primitive) {
    cx::PrimitiveNormalReport rep = cx::primitive_normal_list(action, n, bound);
    if (out.as_json) {
      out.j["setting"] = setting;
      json prim = json::array();
      for (const auto& l : rep.primitives) prim.push_back(lattice_json(l));
      out.j["primitives"] = prim;
      json facts = json::array();
      for (const auto& f : rep.factorisations)
        facts.push_back({{"lattice", lattice_json(f.lattice)},
                         {"multiple", f.multiple},
                         {"primitive", lattice_json(f.primitive)}});
      out.j["factorisations"] = facts;
      out.j["complete"] = rep.complete();
    } else {
      std::cout << setting << "\n";
      std::cout << rep.primitives.size() << " primitive invariant sublattice(s), index <= "
                << bound << ":\n";
      for (const auto& l : rep.primitives) std::cout << "  " << lattice_text(l) << "\n";
      std::cout << "every invariant sublattice is a multiple of a primitive: "
                << (rep.complete() ? "yes" : "NO — violations found") << "\n";
    }
  } else {
    std::vector<cx::Sublattice> ls = cx::invariant_sublattices(action, n, bound);
    if (out.as_json) {
      out.j["setting"] = setting;
      json arr = json::array();
      for (const auto& l : ls) arr.push_back(lattice_json(l));
      out.j["sublattices"] = arr;
      out.j["count"] = ls.size();
    } else {
      std::cout << setting << "\n";
      std::cout << ls.size() << " invariant sublattice(s) of index <= " << bound << ":\n";
      for (const auto& l : ls) std::cout << "  " << lattice_text(l) << "\n";
    }
  }
  out.flush();
  return 0;
}

int cmd_ef(const std::string& left, const std::string& right, int kmax, Output& out) {
  out.header("ef", left + " " + right + " --kmax " + std::to_string(kmax));
  GroupSpec a = parse_group_spec(left);
  GroupSpec b = parse_group_spec(right);
  std::optional<int> least = cx::least_distinguishing_rounds(*a.group, *b.group, kmax);
  json rounds = json::array();
  for (int k = 0; k <= kmax; ++k) {
    cx::EfReport r = cx::ef_game(*a.group, *b.group, k);
    if (out.as_json)
      rounds.push_back({{"k", k},
                        {"winner", r.duplicator_wins ? "II" : "I"},
                        {"positions", r.positions_explored}});
    else
      std::cout << "k = " << k << ": player " << (r.duplicator_wins ? "II survives" : "I wins")
                << " (" << r.positions_explored << " positions)\n";
  }
  if (out.as_json) {
    out.j["left"] = a.description;
    out.j["right"] = b.description;
    out.j["rounds"] = rounds;
    if (least)
      out.j["least_distinguishing"] = *least;
    else
      out.j["least_distinguishing"] = nullptr;
  } else {
    if (least)
      std::cout << "player I first wins at k = " << *least << "\n";
    else
      std::cout << "player II survives every k <= " << kmax << "\n";
  }
  out.flush();
  return 0;
}

int cmd_eval(const std::string& formula_text, const std::string& group_spec, bool solutions,
             Output& out) {
  out.header("eval", "'" + formula_text + "' --group " + group_spec);
  std::string text = formula_text;
  if (!text.empty() && text[0] == '@') {
    std::ifstream f(text.substr(1));
    if (!f) throw cx::IoError("cannot read " + text.substr(1));
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  cx::FormulaPtr f = cx::parse_formula(text);
  GroupSpec g = parse_group_spec(group_spec);
  std::set<std::string> fv = cx::free_vars(*f);

  if (out.as_json) {
    out.j["formula"] = f->to_string();
    out.j["structure"] = g.description;
  } else {
    std::cout << "formula: " << f->to_string() << "\n";
    std::cout << "structure: " << g.description << " (order " << g.group->order() << ")\n";
  }
  if (fv.empty()) {
    bool value = cx::eval_formula(*f, *g.group, {});
    if (out.as_json)
      out.j["value"] = value;
    else
      std::cout << "value: " << (value ? "true" : "false") << "\n";
  } else {
    cx::SolutionSet sol = cx::solution_set(*f, *g.group);
    if (out.as_json) {
      out.j["free_variables"] = sol.variables;
      out.j["solution_count"] = sol.rows.size();
      out.j["tuples_scanned"] = sol.tuples_scanned;
      if (solutions) out.j["solutions"] = sol.rows;
    } else {
      std::cout << "free variables:";
      for (const auto& v : sol.variables) std::cout << " " << v;
      std::cout << "\nsolutions: " << sol.rows.size() << " of " << sol.tuples_scanned
                << " assignments\n";
      if (solutions)
        for (const auto& row : sol.rows) {
          std::cout << " ";
          for (std::size_t i = 0; i < row.size(); ++i)
            std::cout << " " << sol.variables[i] << "=" << row[i];
          std::cout << "\n";
        }
    }
  }
  out.flush();
  return 0;
}

int cmd_ucw(int rank, const std::vector<std::string>& words, Output& out) {
  std::ostringstream opts;
  opts << "--rank " << rank;
  for (const auto& w : words) opts << " '" << w << "'";
  out.header("ucw", opts.str());
  cx::UniversalCoxeter w(rank);
  json entries = json::array();
  cx::ReducedWord product = w.identity();
  for (const auto& text : words) {
    cx::ReducedWord word = w.parse(text);
    product = w.mul(product, word);
    auto order = w.element_order(word);
    auto witness = w.involution_witness(word);
    auto cyc = w.cyclic_reduce(word);
    if (out.as_json) {
      json e;
      e["input"] = text;
      e["normal_form"] = w.format(word);
      e["length"] = word.length();
      e["parity"] = w.parity(word);
      e["order"] = order ? json(*order) : json("infinite");
      e["cyclic_core"] = w.format(cyc.core);
      e["conjugator"] = w.format(cyc.conjugator);
      if (witness)
        e["involution_witness"] = {{"generator", witness->generator + 1},
                                   {"conjugator", w.format(witness->conjugator)}};
      entries.push_back(e);
    } else {
      std::cout << "'" << text << "' -> " << w.format(word) << " (length " << word.length()
                << ", parity " << w.parity(word) << ", order "
                << (order ? std::to_string(*order) : "infinite") << ")\n";
      if (witness)
        std::cout << "  involution: conjugate of e" << witness->generator + 1 << " by '"
                  << w.format(witness->conjugator) << "'\n";
    }
  }
  if (out.as_json) {
    out.j["rank"] = rank;
    out.j["words"] = entries;
    if (words.size() > 1) out.j["product"] = w.format(product);
  } else if (words.size() > 1) {
    std::cout << "product: " << w.format(product) << "\n";
  }
  out.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact algebra for affine Coxeter groups as crystallographic space groups"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json / --seed appear after the subcommand too
  bool as_json = false;
  std::uint64_t seed = cx::kDefaultSeed;
  app.add_flag("--json", as_json, "machine-readable JSON output");
  app.add_option("--seed", seed, "seed for all pseudorandom sampling");

  auto* sc_classify = app.add_subcommand("classify", "classify a Coxeter graph file");
  std::string classify_file;
  sc_classify->add_option("file", classify_file, "graph file")->required();

  auto* sc_build = app.add_subcommand("build", "build Z^n x| W0 for an affine family");
  std::string build_family;
  std::int64_t build_scale = 0;
  sc_build->add_option("family", build_family, "affine family, e.g. A~2")->required();
  sc_build->add_option("--scale", build_scale, "also check the multiplication-by-m map");

  auto* sc_quotient = app.add_subcommand("quotient", "finite quotient W/mT");
  std::string q_family, q_out;
  std::int64_t q_mod = 0;
  sc_quotient->add_option("family", q_family)->required();
  sc_quotient->add_option("m", q_mod, "modulus")->required();
  sc_quotient->add_option("--out", q_out, "write the multiplication table to a file");

  auto* sc_dist = app.add_subcommand("distinguish", "pairwise quotient-genus comparison");
  std::vector<std::string> dist_families;
  std::string dist_mods = "2..8";
  sc_dist->add_option("families", dist_families, "two or more affine families")->required();
  sc_dist->add_option("--mods", dist_mods, "moduli, e.g. 2..8 or 2,3,5");

  auto* sc_sub = app.add_subcommand("sublattices", "invariant sublattices in Hermite form");
  std::string sub_family;
  int sub_rank = 0;
  std::int64_t sub_bound = 10;
  bool sub_primitive = false;
  sc_sub->add_option("family", sub_family, "family whose point group acts (omit for --rank)");
  sc_sub->add_option("--rank", sub_rank, "plain enumeration in Z^rank (trivial action)");
  sc_sub->add_option("--bound", sub_bound, "index bound");
  sc_sub->add_flag("--primitive", sub_primitive, "report the primitive list and factorisations");

  auto* sc_ef = app.add_subcommand("ef", "comparison game between two finite groups");
  std::string ef_left, ef_right;
  int ef_kmax = 3;
  sc_ef->add_option("left", ef_left, "table file, ab:m1,m2,... or family:m")->required();
  sc_ef->add_option("right", ef_right)->required();
  sc_ef->add_option("--kmax", ef_kmax, "maximum rounds (<= 4)");

  auto* sc_eval = app.add_subcommand("eval", "evaluate a first-order formula");
  std::string eval_formula, eval_group;
  bool eval_solutions = false;
  sc_eval->add_option("formula", eval_formula, "formula text, or @file")->required();
  sc_eval->add_option("--group", eval_group, "table file, ab:m1,m2,... or family:m")->required();
  sc_eval->add_flag("--solutions", eval_solutions, "list satisfying assignments");

  auto* sc_ucw = app.add_subcommand("ucw", "universal Coxeter word algebra");
  int ucw_rank = 2;
  std::vector<std::string> ucw_words;
  sc_ucw->add_option("--rank", ucw_rank, "number of involution generators");
  sc_ucw->add_option("words", ucw_words, "words like 'e1 e2 e1'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.as_json = as_json;
  try {
    if (sc_classify->parsed()) return cmd_classify(classify_file, out);
    if (sc_build->parsed()) return cmd_build(build_family, build_scale, seed, out);
    if (sc_quotient->parsed()) return cmd_quotient(q_family, q_mod, q_out, out);
    if (sc_dist->parsed()) return cmd_distinguish(dist_families, dist_mods, out);
    if (sc_sub->parsed())
      return cmd_sublattices(sub_family, sub_rank, sub_bound, sub_primitive, out);
    if (sc_ef->parsed()) return cmd_ef(ef_left, ef_right, ef_kmax, out);
    if (sc_eval->parsed()) return cmd_eval(eval_formula, eval_group, eval_solutions, out);
    if (sc_ucw->parsed()) return cmd_ucw(ucw_rank, ucw_words, out);
  } catch (const cx::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 1;
  } catch (const cx::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const cx::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
