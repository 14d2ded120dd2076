#include "tamarack/report.hpp"

#include <json.hpp>
#include <sstream>

#include "tamarack/parallel.hpp"

namespace tamarack {

using nlohmann::json;

namespace {

json node_to_json(const ReportNode &n) {
  json j;
  j["key"] = n.key;
  if (!n.value.empty() || n.children.empty()) j["value"] = n.value;
  if (!n.children.empty()) {
    json kids = json::array();
    for (const auto &c : n.children) kids.push_back(node_to_json(c));
    j["children"] = kids;
  }
  return j;
}

ReportNode node_from_json(const json &j) {
  ReportNode n;
  n.key = j.at("key").get<std::string>();
  if (j.contains("value")) n.value = j.at("value").get<std::string>();
  if (j.contains("children"))
    for (const auto &c : j.at("children")) n.children.push_back(node_from_json(c));
  return n;
}

void render_node(const ReportNode &n, std::ostringstream &os, int depth) {
  for (int i = 0; i < depth; ++i) os << "  ";
  os << n.key;
  if (!n.value.empty()) os << ": " << n.value;
  os << "\n";
  for (const auto &c : n.children) render_node(c, os, depth + 1);
}

} // namespace

std::string ReportDocument::render_text() const {
  std::ostringstream os;
  os << title << "\n";
  for (const auto &c : root.children) render_node(c, os, 0);
  return os.str();
}

std::string ReportDocument::render_json() const {
  json j;
  j["schema"] = "report/1";
  j["title"] = title;
  j["root"] = node_to_json(root);
  return j.dump(2);
}

ReportDocument report_from_json(const std::string &text) {
  json j = json::parse(text);
  ReportDocument d;
  d.title = j.at("title").get<std::string>();
  d.root = node_from_json(j.at("root"));
  return d;
}

// ---- Mackey presentation serialization (schema mackey-presentation/1) ----

namespace {

json mat_to_json(const IntMat &m) {
  json j;
  j["rows"] = m.rows;
  j["cols"] = m.cols;
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) {
      Int v = m.get(r, c);
      if (!v.fits_i64())
        row.push_back(v.to_string());
      else
        row.push_back(v.to_i64());
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

IntMat mat_from_json(const json &j) {
  IntMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
  const json &rows = j.at("entries");
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) {
      const json &e = rows[r][c];
      Int v = e.is_string() ? Int::from_string(e.get<std::string>())
                            : Int(e.get<long long>());
      if (!v.is_zero()) m.set(r, c, v);
    }
  return m;
}

} // namespace

std::string mackey_to_json(const MackeyPresentation &p) {
  json j;
  j["schema"] = "mackey-presentation/1";
  j["p"] = p.tower.p;
  j["n"] = p.tower.n;
  json levels = json::array();
  // Lewis layout: levels listed top-down
  for (int k = p.tower.n; k >= 0; --k) {
    json l;
    l["index"] = k;
    l["generators"] = p.gens(k);
    l["relations"] = mat_to_json(p.levels[k].rels);
    AbGroup g = p.group_at(k);
    json inv = json::array();
    for (const auto &d : g.torsion) inv.push_back(d.to_string());
    l["free_rank"] = g.free_rank;
    l["invariant_factors"] = inv;
    l["weyl"] = mat_to_json(p.weyl_[k]);
    if (k >= 1) {
      l["res"] = mat_to_json(p.res_[k]);
      l["tr"] = mat_to_json(p.tr_[k]);
    }
    levels.push_back(l);
  }
  j["levels"] = levels;
  return j.dump(2);
}

MackeyPresentation mackey_from_json(const std::string &text) {
  json j = json::parse(text);
  MackeyPresentation p;
  p.tower.p = j.at("p").get<int>();
  p.tower.n = j.at("n").get<int>();
  int n = p.tower.n;
  p.levels.resize(n + 1);
  p.res_.resize(n + 1);
  p.tr_.resize(n + 1);
  p.weyl_.resize(n + 1);
  for (const auto &l : j.at("levels")) {
    int k = l.at("index").get<int>();
    p.levels[k].gens = l.at("generators").get<int>();
    p.levels[k].rels = mat_from_json(l.at("relations"));
    p.weyl_[k] = mat_from_json(l.at("weyl"));
    if (k >= 1) {
      p.res_[k] = mat_from_json(l.at("res"));
      p.tr_[k] = mat_from_json(l.at("tr"));
    }
  }
  return p;
}

// ---- commands ----

ReportDocument tor_report(const Tower &t, int gen_level, int max_degree) {
  Catalog cat = Catalog::standard(t);
  std::vector<TorRow> rows = tor_table(t, gen_level, max_degree, &cat);
  ReportDocument doc;
  std::ostringstream title;
  title << "Tor over A[x at level " << gen_level << "] for C" << t.order(t.n);
  doc.title = title.str();
  for (const auto &r : rows) {
    ReportNode row("degree " + std::to_string(r.degree));
    row.add("answer", r.match.identified ? r.match.to_string() : "unidentified");
    if (r.match.identified && !r.match.names.empty())
      row.add("certificate", r.match.cert_hash);
    ReportNode lv("levels");
    for (int k = t.n; k >= 0; --k)
      lv.add("C" + std::to_string(t.order(k)), r.H.group_at(k).to_string());
    row.add(std::move(lv));
    if (!r.match.identified) row.add("fingerprint", fingerprint(r.H).to_string());
    doc.root.add(std::move(row));
  }
  return doc;
}

ReportDocument lewis_report(const std::string &name, const Tower &t) {
  Catalog cat = Catalog::standard(t);
  const MackeyPresentation *p = cat.find(name);
  MackeyPresentation holder;
  if (!p) {
    if (name == "Zbar" || name == "Z") {
      holder = constant_z(t);
      p = &holder;
    } else if (name == "Ae") {
      p = cat.find("A{C" + std::to_string(t.order(t.n)) + "/e}");
    }
  }
  if (!p) throw std::invalid_argument("unknown module name: " + name);
  ReportDocument doc;
  doc.title = "Lewis diagram: " + name;
  for (int k = t.n; k >= 0; --k) {
    ReportNode lv("C" + std::to_string(t.order(k)));
    lv.add("group", p->group_at(k).to_string());
    if (k >= 1) {
      lv.add("res", p->res_[k].to_string());
      lv.add("tr", p->tr_[k].to_string());
    }
    if (t.weyl_order(k) > 1) lv.add("weyl", p->weyl_[k].to_string());
    doc.root.add(std::move(lv));
  }
  return doc;
}

ReportDocument resolution_report(const Tower &t, int gen_level,
                                 bool check_exactness, long long cutoff) {
  MultiComplex grid = build_general(t, gen_level);
  ChainComplex total = totalize(grid);
  ReportDocument doc;
  doc.title = "Koszul-type resolution for C" + std::to_string(t.order(t.n));
  doc.root.add("length", std::to_string(total.length()));
  ReportNode cells("cells");
  for (int i = 0; i <= total.length(); ++i)
    cells.add("T" + std::to_string(i),
              total.mods[i].generating_gset().to_string(t));
  doc.root.add(std::move(cells));
  if (check_exactness) {
    std::vector<int> levels;
    for (int k = 0; k <= t.n; ++k) levels.push_back(k);
    ExactnessReport rep = graded_exactness(total, cutoff, levels);
    ReportNode ex("exactness");
    ex.add("cutoff", std::to_string(cutoff));
    int interior = 0;
    for (const auto &r : rep.rows)
      if (r.position > 0) interior += r.defect;
    ex.add("interior defect", std::to_string(interior));
    ex.add("resolves unit", rep.resolves_unit() ? "yes" : "no");
    for (const auto &r : rep.rows) {
      if (!r.defect) continue;
      std::ostringstream k;
      k << "defect@pos=" << r.position << ",level=" << r.level
        << ",deg=" << r.degree;
      ex.add(k.str(), r.homology.to_string());
    }
    doc.root.add(std::move(ex));
  }
  return doc;
}

// ---- verification cases ----

namespace {

struct NameRow {
  std::vector<std::pair<std::string, int>> names;
};

std::string names_str(const std::vector<std::pair<std::string, int>> &names) {
  if (names.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < names.size(); ++i) {
    if (i) os << " + ";
    os << names[i].first;
    if (names[i].second > 1) os << "^" << names[i].second;
  }
  return os.str();
}

VerifyOutcome verify_tor_names(const std::string &case_name, const Tower &t,
                               int gen_level,
                               const std::vector<NameRow> &expected) {
  VerifyOutcome out;
  out.name = case_name;
  Catalog cat = Catalog::standard(t);
  std::vector<TorRow> rows =
      tor_table(t, gen_level, (int)expected.size() - 1, &cat);
  out.pass = true;
  out.report.title = "verify " + case_name;
  for (size_t i = 0; i < expected.size(); ++i) {
    bool rowok =
        rows[i].match.identified && rows[i].match.names == expected[i].names;
    ReportNode row("degree " + std::to_string(i));
    row.add("expected", names_str(expected[i].names));
    row.add("computed", rows[i].match.identified ? rows[i].match.to_string()
                                                 : "unidentified");
    if (rows[i].match.identified && !rows[i].match.names.empty())
      row.add("certificate", rows[i].match.cert_hash);
    row.add("status", rowok ? "ok" : "MISMATCH");
    out.report.root.add(std::move(row));
    if (!rowok && out.pass) {
      out.pass = false;
      out.diff = "degree " + std::to_string(i) + ": expected " +
                 names_str(expected[i].names) + ", computed " +
                 (rows[i].match.identified
                      ? rows[i].match.to_string()
                      : "unidentified\n" + rows[i].H.describe());
    }
  }
  return out;
}

std::string orb(const Tower &t, int k) {
  std::string s = "C" + std::to_string(t.order(t.n)) + "/";
  return s + (k == 0 ? "e" : "C" + std::to_string(t.order(k)));
}

VerifyOutcome verify_green_fixed(const std::string &cname, int p) {
  Tower t{p, 1};
  std::vector<NameRow> expected(6);
  expected[0].names = {{"A", 1}};
  expected[1].names = {{"A", 1}};
  return verify_tor_names(cname, t, 1, expected);
}

VerifyOutcome verify_cp_tor(const std::string &cname, int p) {
  Tower t{p, 1};
  std::vector<NameRow> expected(p + 1);
  std::string ae = "A{" + orb(t, 0) + "}";
  expected[0].names = {{"A", 1}};
  expected[1].names = {{ae, 1}, {"I", 1}};
  for (int k = 2; k <= p - 1; ++k) {
    long long binom = 1;
    for (int i = 0; i < k; ++i) binom = binom * (p - i) / (i + 1);
    expected[k].names = {{ae, (int)(binom / p)}};
  }
  expected[p].names = {{"Zbar", 1}};
  return verify_tor_names(cname, t, 0, expected);
}

VerifyOutcome verify_c9_tor() {
  Tower t{3, 2};
  std::string ae = "A{" + orb(t, 0) + "}";
  std::string q1 = "A{" + orb(t, 1) + "}/res_0";
  std::string q2c3 = "A{" + orb(t, 2) + "}/res_1";
  std::string zb1 = "Zbar{" + orb(t, 1) + "}";
  std::vector<NameRow> expected(10);
  expected[0].names = {{"A", 1}};
  expected[1].names = {{ae, 1}, {q1, 1}, {q2c3, 1}};
  expected[2].names = {{ae, 4}, {q1, 1}};
  expected[3].names = {{ae, 9}, {"Inf(Z)", 1}, {zb1, 1}};
  expected[4].names = {{ae, 14}, {"L", 2}};
  expected[5].names = {{ae, 14}, {"L", 1}};
  expected[6].names = {{ae, 9}, {zb1, 1}};
  expected[7].names = {{ae, 4}, {"L", 1}};
  expected[8].names = {{ae, 1}};
  expected[9].names = {{"Zbar", 1}};
  // rows come back in catalog order; normalize the listing above
  Catalog cat = Catalog::standard(t);
  for (auto &row : expected) {
    std::vector<std::pair<std::string, int>> sorted;
    for (const auto &e : cat.entries)
      for (const auto &kv : row.names)
        if (kv.first == e.name) sorted.push_back(kv);
    row.names = sorted;
  }
  return verify_tor_names("c9-tor", t, 0, expected);
}

VerifyOutcome verify_exactness(const std::string &cname, const Tower &t,
                               long long cutoff) {
  VerifyOutcome out;
  out.name = cname;
  MultiComplex grid = build_general(t, 0);
  ChainComplex total = totalize(grid);
  std::vector<int> levels;
  for (int k = 0; k <= t.n; ++k) levels.push_back(k);
  ExactnessReport rep = graded_exactness(total, cutoff, levels);
  out.pass = rep.interior_exact() && rep.resolves_unit();
  out.report.title = "verify " + cname;
  out.report.root.add("cutoff", std::to_string(cutoff));
  out.report.root.add("interior exact", rep.interior_exact() ? "yes" : "no");
  out.report.root.add("resolves unit", rep.resolves_unit() ? "yes" : "no");
  out.report.root.add("slices checked", std::to_string(rep.rows.size()));
  for (const auto &r : rep.rows) {
    if (r.defect && out.diff.empty()) {
      std::ostringstream d;
      d << "defect at position " << r.position << ", level " << r.level
        << ", degree " << r.degree << ": " << r.homology.to_string();
      out.diff = d.str();
    }
  }
  return out;
}

VerifyOutcome verify_lemma_hkfirst() {
  VerifyOutcome out;
  out.name = "lemma-hkfirst-3";
  out.report.title = "verify lemma-hkfirst-3";
  out.pass = true;
  ChainComplex lift = build_cp_lift(3);
  const long long D = 6;
  auto slices = graded_homology_slices(lift, 0, D, {0, 1});
  // truncated H_0: the Burnside functor in degree 0 plus one augmentation
  // ideal summand for each norm power inside the window
  auto expect_h0 = [&](int level, long long d) {
    AbGroup g;
    if (d == 0) g.free_rank = level + 1;
    if (level == 1 && (d == 3 || d == 6)) g.free_rank = 1;
    return g;
  };
  for (int level = 0; level <= 1; ++level)
    for (long long d = 0; d <= D; ++d) {
      AbGroup got = slices.at({level, d});
      AbGroup want = expect_h0(level, d);
      ReportNode row("H0 level " + std::to_string(level) + " degree " +
                     std::to_string(d));
      row.add("computed", got.to_string());
      row.add("expected", want.to_string());
      out.report.root.add(std::move(row));
      if (!(got == want) && out.pass) {
        out.pass = false;
        out.diff = "H0 slice mismatch at level " + std::to_string(level) +
                   ", degree " + std::to_string(d) + ": computed " +
                   got.to_string() + ", expected " + want.to_string();
      }
    }
  // top homology is the kernel of restriction in the coefficients, degreewise
  auto top = graded_homology_slices(lift, 3, D, {0, 1});
  TambaraSystem S = lift.sys;
  for (long long d = 0; d <= D; ++d) {
    AbGroup got = top.at({1, d});
    long long cd = d - 3; // the top generator sits in internal degree p
    int expect_rank = 0;
    if (cd >= 0) {
      RBasis src = r_basis_of_degree(S, 1, cd);
      RBasis dst = r_basis_of_degree(S, 0, cd);
      IntMat res_mat(dst.size(), src.size());
      for (int j = 0; j < src.size(); ++j) {
        std::vector<Int> col = dst.expand(r_res(S, src.element(j), 0));
        for (size_t r = 0; r < col.size(); ++r)
          if (!col[r].is_zero()) res_mat.col[j].push_back({(int)r, col[r]});
      }
      expect_rank = kernel_basis(res_mat).cols;
    }
    AbGroup want;
    want.free_rank = expect_rank;
    ReportNode row("H3 top level degree " + std::to_string(d));
    row.add("computed", got.to_string());
    row.add("expected", want.to_string());
    out.report.root.add(std::move(row));
    if (!(got == want) && out.pass) {
      out.pass = false;
      out.diff = "H3 slice mismatch at degree " + std::to_string(d) +
                 ": computed " + got.to_string() + ", expected " +
                 want.to_string();
    }
    AbGroup und = top.at({0, d});
    if (!und.is_zero() && out.pass) {
      out.pass = false;
      out.diff = "H3 underlying level nonzero at degree " + std::to_string(d);
    }
  }
  return out;
}

VerifyOutcome verify_c9_pages() {
  VerifyOutcome out;
  out.name = "c9-pages";
  out.report.title = "verify c9-pages";
  out.pass = true;
  Tower t{3, 2};
  MultiComplex grid = build_general(t, 0);
  MultiComplex bc = base_change(grid);
  PageGrid pg = first_page(bc);

  // named building blocks
  MackeyPresentation ker1 = minimized(kernel_subfunctor(t, 1, 0).P);
  MackeyPresentation ker2e = minimized(kernel_subfunctor(t, 2, 0).P);
  MackeyPresentation ker2c3 = minimized(kernel_subfunctor(t, 2, 1).P);
  MackeyPresentation q1 = free_quotient_by_res(t, 1, 0);
  MackeyPresentation q2e = free_quotient_by_res(t, 2, 0);
  MackeyPresentation q2c3 = free_quotient_by_res(t, 2, 1);
  MackeyPresentation zb1 = minimized(zbar_free(t, 1));
  MackeyPresentation L = l_functor(t);

  // corner entries named in the page tables: the restrictions of the
  // top-level kernel classes generate the subfunctor S; the corners are
  // ker(res_e)/S and the ambient modulo S
  GSet topg;
  topg.add(2, 1);
  MackeyPresentation ambA = free_mackey(t, topg);
  std::vector<IntMat> kerlat(3), slat(3);
  for (int k = 0; k <= 2; ++k) {
    kerlat[k] = IntMat(ambA.gens(k), 0);
    slat[k] = IntMat(ambA.gens(k), 0);
  }
  kerlat[2] = level_res_kernel(ambA, 2, 0);
  kerlat = subfunctor_closure(ambA, kerlat);
  slat[1] = ambA.res_[2] * kerlat[2];
  slat = subfunctor_closure(ambA, slat);
  MackeyPresentation exotic_quot = minimized(quotient_by(ambA, slat));
  MackeyPresentation exotic_sub;
  {
    Cell kc = subfunctor_cell(ambA, kerlat);
    for (int k = 0; k <= 2; ++k) {
      IntMat rel(kc.P.gens(k), slat[k].cols);
      Solver s(kerlat[k]);
      for (int j = 0; j < slat[k].cols; ++j) {
        std::vector<Int> b(ambA.gens(k), Int(0));
        for (const auto &e : slat[k].col[j]) b[e.first] = e.second;
        std::vector<Int> x;
        if (!s.solve(b, x))
          throw std::logic_error("page fixture: S is not inside the kernel");
        for (int r = 0; r < kc.P.gens(k); ++r)
          if (!x[r].is_zero()) rel.col[j].push_back({r, x[r]});
      }
      kc.P.levels[k].rels = rel;
    }
    exotic_sub = minimized(kc.P);
  }

  struct Entry {
    std::vector<const MackeyPresentation *> parts; // empty = zero
    bool free_cell = false;
    bool free_plus_zbar = false;
  };
  auto table_entry = [&](int page, int r, int s, int tt) {
    Entry e;
    if (page == 0) {
      if (tt == 0 && s == 0) {
        e.free_cell = true;
      } else if (tt == 0 && s == 1) {
        if (r == 9) e.parts = {&ker1};
        else if (r == 6) e.parts = {&ker1, &ker1, &q1};
        else if (r == 3) e.parts = {&ker1, &q1, &q1};
        else if (r == 0) e.parts = {&q1};
      } else if (tt == 0 && s == 2) {
        if (r == 9) e.parts = {&ker1};
        else if (r == 6) e.parts = {&ker1, &ker1, &ker1};
        else if (r == 3) e.parts = {&ker1, &ker1, &q1};
        else if (r == 0) e.parts = {&q1};
      } else if (tt == 0 && s == 3) {
        if (r == 9) e.parts = {&ker2e};
        else if (r == 6 || r == 3) e.parts = {&ker1};
        else if (r == 0) e.parts = {&q2e};
      } else if (tt == 1 && (s == 0 || s == 3)) {
        if (r == 9) e.parts = {&ker2e};
        else if (r == 6 || r == 3) e.parts = {&ker1};
        else if (r == 0) e.parts = {&q2e};
      } else { // tt == 1, s in {1, 2}
        if (r == 9 || r == 6 || r == 3) e.parts = {&ker1, &ker1, &ker1};
        else if (r == 0) e.parts = {&q1};
      }
      return e;
    }
    // page 1: vertical homology of the horizontal homology
    if (tt == 0) {
      if (s == 0) {
        if (r == 9) e.parts = {&exotic_quot};
        else if (r == 6 || r == 3) e.free_plus_zbar = true;
        else e.free_cell = true;
      } else if (s == 1) {
        if (r == 6) e.parts = {&L};
        else if (r == 3) e.parts = {&L, &L};
        else if (r == 0) e.parts = {&q1};
      } else if (s == 2) {
        if (r == 3) e.parts = {&L};
        else if (r == 0) e.parts = {&q1};
      } else {
        if (r == 9) e.parts = {&ker2e};
        else if (r == 0) e.parts = {&q2e};
      }
    } else {
      if (s == 0) {
        if (r == 9) e.parts = {&exotic_sub};
        else if (r == 0) e.parts = {&q2c3};
      } else if (s == 3) {
        if (r == 9) e.parts = {&ker2e};
        else if (r == 0) e.parts = {&ker2c3};
      }
    }
    return e;
  };

  std::map<std::string, Fingerprint> memo;
  auto expected_fp = [&](const Entry &en, const std::vector<int> &v) {
    std::ostringstream key;
    if (en.free_cell)
      key << "free:" << pg.bases.at(v).mod->generating_gset().to_string(t);
    else if (en.free_plus_zbar)
      key << "free9+zbar";
    else
      for (const auto *p : en.parts) key << p << "+";
    auto it = memo.find(key.str());
    if (it != memo.end()) return it->second;
    MackeyPresentation expect;
    if (en.free_cell) {
      expect = presentation_of(pg.bases.at(v));
    } else if (en.free_plus_zbar) {
      GSet g;
      g.add(0, 9);
      expect = direct_sum(free_mackey(t, g), zb1);
    } else {
      expect = *en.parts[0];
      for (size_t i = 1; i < en.parts.size(); ++i)
        expect = direct_sum(expect, *en.parts[i]);
    }
    Fingerprint fp = fingerprint(expect);
    memo[key.str()] = fp;
    return fp;
  };

  auto check_page = [&](int page, const char *label) {
    for (int r = 0; r <= 9; ++r)
      for (int s = 0; s <= 3; ++s)
        for (int tt = 0; tt <= 1; ++tt) {
          Entry en = table_entry(page, r, s, tt);
          std::vector<int> v{r, s, tt};
          const Cell &cell = pg.cells.at(v);
          std::ostringstream keyname;
          keyname << label << " (" << r << "," << s << "," << tt << ")";
          bool ok;
          if (en.parts.empty() && !en.free_cell && !en.free_plus_zbar) {
            ok = cell.P.is_zero();
          } else if (en.free_cell) {
            // untouched cells come back verbatim; compare structurally and
            // only fall back to invariants when the transforms reshaped them
            MackeyPresentation amb = presentation_of(pg.bases.at(v));
            ok = true;
            for (int k = 0; k <= 2 && ok; ++k) {
              ok = cell.P.gens(k) == amb.gens(k) &&
                   cell.P.levels[k].rels.cols == 0 &&
                   cell.P.weyl_[k] == amb.weyl_[k] &&
                   (k == 0 || (cell.P.res_[k] == amb.res_[k] &&
                               cell.P.tr_[k] == amb.tr_[k]));
            }
            if (!ok) ok = fingerprint(cell.P) == expected_fp(en, v);
          } else {
            ok = fingerprint(cell.P) == expected_fp(en, v);
          }
          if (!ok && out.diff.empty()) {
            out.pass = false;
            out.diff = keyname.str() + " mismatch; computed:\n" +
                       cell.P.describe();
          }
          ReportNode row(keyname.str());
          row.add("status", ok ? "ok" : "MISMATCH");
          out.report.root.add(std::move(row));
        }
  };

  page_step(pg, 0);
  check_page(0, "horizontal");
  page_step(pg, 1);
  check_page(1, "vertical");
  return out;
}

} // namespace

std::vector<std::string> verification_case_names() {
  return {"green-fixed-c2",   "green-fixed-c3", "cp-tor-3",
          "cp-tor-5",         "c9-tor",         "c9-pages",
          "cone-exactness-3", "c9-exactness",   "lemma-hkfirst-3"};
}

VerifyOutcome run_verification(const std::string &name) {
  if (name == "green-fixed-c2") return verify_green_fixed(name, 2);
  if (name == "green-fixed-c3") return verify_green_fixed(name, 3);
  if (name == "cp-tor-3") return verify_cp_tor(name, 3);
  if (name == "cp-tor-5") return verify_cp_tor(name, 5);
  if (name == "c9-tor") return verify_c9_tor();
  if (name == "c9-pages") return verify_c9_pages();
  if (name == "cone-exactness-3") return verify_exactness(name, Tower{3, 1}, 6);
  if (name == "c9-exactness") return verify_exactness(name, Tower{3, 2}, 3);
  if (name == "lemma-hkfirst-3") return verify_lemma_hkfirst();
  throw std::invalid_argument("unknown verification case: " + name);
}

} // namespace tamarack
