#include "tamarack/mackey.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tamarack {

namespace {

IntMat empty_cols(int rows) { return IntMat(rows, 0); }

// canonical lattice basis (nonzero HNF columns)
IntMat lattice_basis(const IntMat &cols) {
  HnfResult h = hnf_cols(cols, false);
  std::vector<int> keep;
  for (int j = 0; j < h.h.cols; ++j)
    if (!h.h.col[j].empty()) keep.push_back(j);
  return h.h.cols_subset(keep);
}

bool lattice_equal(const IntMat &a, const IntMat &b) {
  return lattice_basis(a) == lattice_basis(b);
}

// kernel of [a | b], projected to the a-variables
IntMat proj_kernel(const IntMat &a, const IntMat &b) {
  IntMat k = kernel_basis(a.hstack(b));
  IntMat proj(a.cols, k.cols);
  for (int j = 0; j < k.cols; ++j)
    for (const auto &e : k.col[j])
      if (e.first < a.cols) proj.col[j].push_back({e.first, e.second});
  return lattice_basis(proj);
}

// solve basis * X = cols; throws when some column is outside the span
IntMat express(const IntMat &basis, const IntMat &cols) {
  Solver s(basis);
  IntMat x(basis.cols, cols.cols);
  for (int j = 0; j < cols.cols; ++j) {
    std::vector<Int> b(basis.rows, Int(0));
    for (const auto &e : cols.col[j]) b[e.first] = e.second;
    std::vector<Int> xb;
    if (!s.solve(b, xb)) throw std::logic_error("express: column outside span");
    for (int i = 0; i < basis.cols; ++i)
      if (!xb[i].is_zero()) x.col[j].push_back({i, xb[i]});
  }
  return x;
}

// solve [basis | nulls] * [X; Y] = cols, return X
IntMat express_mod(const IntMat &basis, const IntMat &nulls, const IntMat &cols) {
  Solver s(basis.hstack(nulls));
  IntMat x(basis.cols, cols.cols);
  for (int j = 0; j < cols.cols; ++j) {
    std::vector<Int> b(basis.rows, Int(0));
    for (const auto &e : cols.col[j]) b[e.first] = e.second;
    std::vector<Int> xb;
    if (!s.solve(b, xb))
      throw std::logic_error("express_mod: column outside span");
    for (int i = 0; i < basis.cols; ++i)
      if (!xb[i].is_zero()) x.col[j].push_back({i, xb[i]});
  }
  return x;
}

bool cols_in_span(const IntMat &span, const IntMat &cols) {
  Solver s(span);
  for (int j = 0; j < cols.cols; ++j) {
    std::vector<Int> b(span.rows, Int(0));
    for (const auto &e : cols.col[j]) b[e.first] = e.second;
    std::vector<Int> x;
    if (!s.solve(b, x)) return false;
  }
  return true;
}

AbGroup map_coker(const IntMat &f, const IntMat &rels_dst) {
  return cokernel_invariants(f.hstack(rels_dst), f.rows);
}

AbGroup map_ker(const IntMat &f, const IntMat &rels_src, const IntMat &rels_dst) {
  if (rels_src.cols == 0) {
    // kernel of a map out of a free group is free; only its rank is needed
    AbGroup g;
    int rk_full = hnf_cols(f.hstack(rels_dst), false).rank();
    int rk_rels = hnf_cols(rels_dst, false).rank();
    g.free_rank = f.cols - (rk_full - rk_rels);
    return g;
  }
  IntMat k = proj_kernel(f, rels_dst);
  if (k.cols == 0) return AbGroup{};
  IntMat x = express(k, rels_src);
  return cokernel_invariants(x, k.cols);
}

} // namespace

bool MackeyPresentation::is_zero() const {
  for (int k = 0; k <= tower.n; ++k)
    if (!group_at(k).is_zero()) return false;
  return true;
}

AbGroup MackeyPresentation::group_at(int k) const {
  return cokernel_invariants(levels[k].rels, levels[k].gens);
}

std::string MackeyPresentation::describe() const {
  std::ostringstream os;
  for (int k = tower.n; k >= 0; --k) {
    os << "level " << k << ": " << group_at(k).to_string();
    if (k) os << "\n";
  }
  return os.str();
}

MackeyMorphism zero_morphism(const MackeyPresentation &src,
                             const MackeyPresentation &dst) {
  MackeyMorphism f;
  for (int k = 0; k <= src.tower.n; ++k)
    f.m.push_back(IntMat(dst.gens(k), src.gens(k)));
  return f;
}

MackeyMorphism identity_morphism(const MackeyPresentation &p) {
  MackeyMorphism f;
  for (int k = 0; k <= p.tower.n; ++k) f.m.push_back(IntMat::identity(p.gens(k)));
  return f;
}

namespace {

bool zero_mod(const IntMat &m, const IntMat &rels) {
  if (m.is_zero()) return true;
  return cols_in_span(rels, m);
}

} // namespace

std::vector<std::string> check_axioms(const MackeyPresentation &p) {
  std::vector<std::string> bad;
  int n = p.tower.n, pr = p.tower.p;
  auto chk = [&](bool ok, const std::string &what) {
    if (!ok) bad.push_back(what);
  };
  // top Weyl action trivial
  chk(zero_mod(p.weyl_[n] - IntMat::identity(p.gens(n)), p.levels[n].rels),
      "weyl at the top level is not the identity");
  for (int k = 0; k <= n; ++k) {
    IntMat w = IntMat::identity(p.gens(k));
    long long ord = p.tower.weyl_order(k);
    for (long long i = 0; i < ord; ++i) w = p.weyl_[k] * w;
    chk(zero_mod(w - IntMat::identity(p.gens(k)), p.levels[k].rels),
        "weyl order does not divide the Weyl group order at level " +
            std::to_string(k));
    chk(zero_mod(p.weyl_[k] * p.levels[k].rels, p.levels[k].rels),
        "weyl does not descend through relations at level " + std::to_string(k));
  }
  for (int k = 1; k <= n; ++k) {
    // double coset: res tr = sum of the p Weyl translates in the kernel of
    // the projection W(k-1) -> W(k)
    IntMat sum(p.gens(k - 1), p.gens(k - 1));
    IntMat w = IntMat::identity(p.gens(k - 1));
    long long sub = p.tower.weyl_order(k); // step p^(n-k)
    IntMat step = IntMat::identity(p.gens(k - 1));
    for (long long i = 0; i < sub; ++i) step = p.weyl_[k - 1] * step;
    for (int i = 0; i < pr; ++i) {
      sum = sum + w;
      w = step * w;
    }
    chk(zero_mod(p.res_[k] * p.tr_[k] - sum, p.levels[k - 1].rels),
        "double coset law fails at level " + std::to_string(k));
    chk(zero_mod(p.res_[k] * p.weyl_[k] - p.weyl_[k - 1] * p.res_[k],
                 p.levels[k - 1].rels),
        "res not Weyl-equivariant at level " + std::to_string(k));
    chk(zero_mod(p.tr_[k] * p.weyl_[k - 1] - p.weyl_[k] * p.tr_[k],
                 p.levels[k].rels),
        "tr not Weyl-equivariant at level " + std::to_string(k));
    chk(zero_mod(p.tr_[k] * (step - IntMat::identity(p.gens(k - 1))),
                 p.levels[k].rels),
        "transfer does not kill the sub-Weyl action at level " + std::to_string(k));
    chk(zero_mod((step - IntMat::identity(p.gens(k - 1))) * p.res_[k],
                 p.levels[k - 1].rels),
        "restriction image is not sub-Weyl fixed at level " + std::to_string(k));
    chk(zero_mod(p.res_[k] * p.levels[k].rels, p.levels[k - 1].rels),
        "res does not descend through relations at level " + std::to_string(k));
    chk(zero_mod(p.tr_[k] * p.levels[k - 1].rels, p.levels[k].rels),
        "tr does not descend through relations at level " + std::to_string(k));
  }
  return bad;
}

std::vector<std::string> check_morphism(const MackeyPresentation &src,
                                        const MackeyPresentation &dst,
                                        const MackeyMorphism &f) {
  std::vector<std::string> bad;
  int n = src.tower.n;
  for (int k = 0; k <= n; ++k) {
    if (!zero_mod(f.m[k] * src.levels[k].rels, dst.levels[k].rels))
      bad.push_back("relations not preserved at level " + std::to_string(k));
    if (!zero_mod(f.m[k] * src.weyl_[k] - dst.weyl_[k] * f.m[k],
                  dst.levels[k].rels))
      bad.push_back("weyl equivariance fails at level " + std::to_string(k));
  }
  for (int k = 1; k <= n; ++k) {
    if (!zero_mod(f.m[k - 1] * src.res_[k] - dst.res_[k] * f.m[k],
                  dst.levels[k - 1].rels))
      bad.push_back("res naturality fails at level " + std::to_string(k));
    if (!zero_mod(f.m[k] * src.tr_[k] - dst.tr_[k] * f.m[k - 1],
                  dst.levels[k].rels))
      bad.push_back("tr naturality fails at level " + std::to_string(k));
  }
  return bad;
}

MackeyPresentation direct_sum(const MackeyPresentation &a,
                              const MackeyPresentation &b) {
  assert(a.tower == b.tower);
  MackeyPresentation s;
  s.tower = a.tower;
  int n = a.tower.n;
  s.levels.resize(n + 1);
  s.res_.resize(n + 1);
  s.tr_.resize(n + 1);
  s.weyl_.resize(n + 1);
  auto block = [&](const IntMat &x, const IntMat &y) {
    IntMat m(x.rows + y.rows, x.cols + y.cols);
    for (int j = 0; j < x.cols; ++j) m.col[j] = x.col[j];
    for (int j = 0; j < y.cols; ++j) {
      for (const auto &e : y.col[j])
        m.col[x.cols + j].push_back({x.rows + e.first, e.second});
    }
    return m;
  };
  for (int k = 0; k <= n; ++k) {
    s.levels[k].gens = a.gens(k) + b.gens(k);
    s.levels[k].rels = block(a.levels[k].rels, b.levels[k].rels);
    s.weyl_[k] = block(a.weyl_[k], b.weyl_[k]);
    if (k) {
      s.res_[k] = block(a.res_[k], b.res_[k]);
      s.tr_[k] = block(a.tr_[k], b.tr_[k]);
    }
  }
  s.res_[0] = IntMat();
  s.tr_[0] = IntMat();
  return s;
}

ModuleLevelBases level_bases(const FreeModule &m) {
  assert(!m.sys.has_generator); // finite levels only over Burnside coefficients
  ModuleLevelBases b;
  b.mod = &m;
  for (int k = 0; k <= m.sys.tower.n; ++k) b.basis.emplace_back(m, k, -1);
  return b;
}

MackeyPresentation presentation_of(const ModuleLevelBases &b) {
  const FreeModule &m = *b.mod;
  int n = m.sys.tower.n;
  MackeyPresentation p;
  p.tower = m.sys.tower;
  p.levels.resize(n + 1);
  p.res_.resize(n + 1);
  p.tr_.resize(n + 1);
  p.weyl_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    p.levels[k].gens = b.basis[k].size();
    p.levels[k].rels = empty_cols(p.levels[k].gens);
  }
  auto matrix_of = [&](int from, int to, auto &&op) {
    IntMat mat(b.basis[to].size(), b.basis[from].size());
    for (int j = 0; j < b.basis[from].size(); ++j) {
      ModElem e = b.basis[from].element(j);
      std::vector<Int> c = b.basis[to].expand(op(e));
      for (size_t r = 0; r < c.size(); ++r)
        if (!c[r].is_zero()) mat.col[j].push_back({(int)r, c[r]});
    }
    return mat;
  };
  for (int k = 0; k <= n; ++k) {
    p.weyl_[k] = matrix_of(k, k, [&](const ModElem &e) { return mod_weyl(m, e, 1); });
    if (k) {
      p.res_[k] = matrix_of(k, k - 1,
                            [&](const ModElem &e) { return mod_res(m, e, k - 1); });
      p.tr_[k] = matrix_of(k - 1, k,
                           [&](const ModElem &e) { return mod_tr(m, e, k); });
    }
  }
  return p;
}

std::vector<IntMat> morphism_matrices(const ModHom &h,
                                      const ModuleLevelBases &src,
                                      const ModuleLevelBases &dst) {
  int n = src.mod->sys.tower.n;
  std::vector<IntMat> out;
  for (int k = 0; k <= n; ++k) {
    IntMat mat(dst.basis[k].size(), src.basis[k].size());
    for (int j = 0; j < src.basis[k].size(); ++j) {
      std::vector<Int> c = dst.basis[k].expand(apply_hom(h, src.basis[k].element(j)));
      for (size_t r = 0; r < c.size(); ++r)
        if (!c[r].is_zero()) mat.col[j].push_back({(int)r, c[r]});
    }
    out.push_back(std::move(mat));
  }
  return out;
}

MackeyPresentation free_mackey(const Tower &t, const GSet &gens) {
  FreeModule m;
  m.sys = TambaraSystem::burnside(t);
  int idx = 0;
  for (const auto &kv : gens.counts)
    for (long long i = 0; i < kv.second; ++i)
      m.gens.push_back({"g" + std::to_string(idx++) + "@" + std::to_string(kv.first),
                        kv.first, 0});
  ModuleLevelBases b = level_bases(m);
  return presentation_of(b);
}

Cell cell_of(const MackeyPresentation &p) {
  Cell c;
  c.P = p;
  for (int k = 0; k <= p.tower.n; ++k) {
    c.reps.push_back(IntMat::identity(p.gens(k)));
    c.null.push_back(p.levels[k].rels);
  }
  return c;
}

std::vector<IntMat> induced_matrices(const Cell &src,
                                     const std::vector<IntMat> &ambient,
                                     const Cell &dst) {
  std::vector<IntMat> out;
  for (size_t k = 0; k < ambient.size(); ++k)
    out.push_back(express_mod(dst.reps[k], dst.null[k], ambient[k] * src.reps[k]));
  return out;
}

Cell cell_homology_step(const Cell &mid, const std::vector<IntMat> &din,
                        const std::vector<IntMat> &dout, const Cell *next) {
  const MackeyPresentation &P = mid.P;
  int n = P.tower.n;
  Cell out;
  out.P.tower = P.tower;
  out.P.levels.resize(n + 1);
  out.P.res_.resize(n + 1);
  out.P.tr_.resize(n + 1);
  out.P.weyl_.resize(n + 1);
  std::vector<IntMat> Z(n + 1);
  for (int k = 0; k <= n; ++k) {
    IntMat d = dout.empty() ? IntMat(0, P.gens(k)) : dout[k];
    IntMat nrels = next ? next->P.levels[k].rels : IntMat(d.rows, 0);
    Z[k] = proj_kernel(d, nrels);
    IntMat B = (din.empty() ? IntMat(P.gens(k), 0) : din[k]).hstack(P.levels[k].rels);
    IntMat X = express(Z[k], B);
    out.P.levels[k].gens = Z[k].cols;
    out.P.levels[k].rels = X;
    out.reps.push_back(mid.reps[k] * Z[k]);
    IntMat nn = mid.null[k];
    if (!din.empty()) nn = nn.hstack(mid.reps[k] * din[k]);
    out.null.push_back(lattice_basis(nn.hstack(mid.reps[k] * P.levels[k].rels)));
  }
  for (int k = 0; k <= n; ++k) {
    out.P.weyl_[k] = express(Z[k], P.weyl_[k] * Z[k]);
    if (k) {
      out.P.res_[k] = express(Z[k - 1], P.res_[k] * Z[k]);
      out.P.tr_[k] = express(Z[k], P.tr_[k] * Z[k - 1]);
    }
  }
  return out;
}

Cell cell_homology(const MackeyPresentation &mid, const std::vector<IntMat> &din,
                   const std::vector<IntMat> &dout,
                   const MackeyPresentation *next) {
  Cell c = cell_of(mid);
  Cell nx;
  if (next) nx = cell_of(*next);
  return cell_homology_step(c, din, dout, next ? &nx : nullptr);
}

void minimize_cell(Cell &c) {
  MackeyPresentation &P = c.P;
  int n = P.tower.n;
  std::vector<IntMat> Uinv(n + 1), U(n + 1);
  std::vector<std::vector<int>> keep(n + 1);
  std::vector<MackeyPresentation::Level> newlv(n + 1);
  for (int k = 0; k <= n; ++k) {
    SnfResult s = snf(P.levels[k].rels, true);
    U[k] = s.u;
    // invert the unimodular row transform
    IntMat inv(U[k].rows, U[k].cols);
    Solver sol(U[k]);
    for (int j = 0; j < U[k].cols; ++j) {
      std::vector<Int> b(U[k].rows, Int(0));
      b[j] = Int(1);
      std::vector<Int> x;
      bool ok = sol.solve(b, x);
      assert(ok);
      (void)ok;
      for (int i = 0; i < (int)x.size(); ++i)
        if (!x[i].is_zero()) inv.col[j].push_back({i, x[i]});
    }
    Uinv[k] = inv;
    int g = P.gens(k);
    std::vector<Int> d(g, Int(0));
    for (int i = 0; i < (int)s.factors.size(); ++i) d[i] = s.factors[i];
    for (int i = 0; i < g; ++i)
      if (!(d[i].is_one())) keep[k].push_back(i);
    newlv[k].gens = (int)keep[k].size();
    newlv[k].rels = IntMat(newlv[k].gens, 0);
    for (int i = 0; i < (int)keep[k].size(); ++i) {
      const Int &di = d[keep[k][i]];
      if (!di.is_zero()) {
        IntMat colm(newlv[k].gens, 1);
        colm.col[0].push_back({i, di});
        newlv[k].rels = newlv[k].rels.hstack(colm);
      }
    }
  }
  auto conv = [&](const IntMat &m, int kd, int ks) {
    IntMat t = U[kd] * m * Uinv[ks];
    IntMat outm((int)keep[kd].size(), (int)keep[ks].size());
    std::vector<int> rowmap(t.rows, -1);
    for (int i = 0; i < (int)keep[kd].size(); ++i) rowmap[keep[kd][i]] = i;
    for (int j = 0; j < (int)keep[ks].size(); ++j)
      for (const auto &e : t.col[keep[ks][j]])
        if (rowmap[e.first] >= 0) outm.col[j].push_back({rowmap[e.first], e.second});
    return outm;
  };
  MackeyPresentation Q;
  Q.tower = P.tower;
  Q.levels = newlv;
  Q.res_.resize(n + 1);
  Q.tr_.resize(n + 1);
  Q.weyl_.resize(n + 1);
  std::vector<IntMat> nreps;
  for (int k = 0; k <= n; ++k) {
    Q.weyl_[k] = conv(P.weyl_[k], k, k);
    if (k) {
      Q.res_[k] = conv(P.res_[k], k - 1, k);
      Q.tr_[k] = conv(P.tr_[k], k, k - 1);
    }
    IntMat r = c.reps[k] * Uinv[k];
    nreps.push_back(r.cols_subset(keep[k]));
  }
  c.P = std::move(Q);
  c.reps = std::move(nreps);
}

MackeyPresentation minimized(const MackeyPresentation &p) {
  Cell c = cell_of(p);
  minimize_cell(c);
  return c.P;
}

std::vector<IntMat> subfunctor_closure(const MackeyPresentation &amb,
                                       std::vector<IntMat> seed) {
  int n = amb.tower.n;
  for (int k = 0; k <= n; ++k) seed[k] = lattice_basis(seed[k]);
  bool changed = true;
  while (changed) {
    changed = false;
    auto grow = [&](int k, const IntMat &add) {
      IntMat merged = lattice_basis(seed[k].hstack(add));
      if (!(merged == seed[k])) {
        seed[k] = merged;
        changed = true;
      }
    };
    for (int k = n; k >= 1; --k) grow(k - 1, amb.res_[k] * seed[k]);
    for (int k = 1; k <= n; ++k) grow(k, amb.tr_[k] * seed[k - 1]);
    for (int k = 0; k <= n; ++k) grow(k, amb.weyl_[k] * seed[k]);
  }
  return seed;
}

Cell subfunctor_cell(const MackeyPresentation &amb,
                     const std::vector<IntMat> &lattices) {
  int n = amb.tower.n;
  for (int k = 0; k <= n; ++k) assert(amb.levels[k].rels.cols == 0);
  Cell c;
  c.P.tower = amb.tower;
  c.P.levels.resize(n + 1);
  c.P.res_.resize(n + 1);
  c.P.tr_.resize(n + 1);
  c.P.weyl_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    c.P.levels[k].gens = lattices[k].cols;
    c.P.levels[k].rels = empty_cols(lattices[k].cols);
    c.reps.push_back(lattices[k]);
    c.null.push_back(IntMat(amb.gens(k), 0));
  }
  for (int k = 0; k <= n; ++k) {
    c.P.weyl_[k] = express(lattices[k], amb.weyl_[k] * lattices[k]);
    if (k) {
      c.P.res_[k] = express(lattices[k - 1], amb.res_[k] * lattices[k]);
      c.P.tr_[k] = express(lattices[k], amb.tr_[k] * lattices[k - 1]);
    }
  }
  return c;
}

MackeyPresentation quotient_by(const MackeyPresentation &amb,
                               const std::vector<IntMat> &sub) {
  MackeyPresentation q = amb;
  for (int k = 0; k <= amb.tower.n; ++k)
    q.levels[k].rels = lattice_basis(q.levels[k].rels.hstack(sub[k]));
  return q;
}

IntMat level_res_kernel(const MackeyPresentation &p, int from, int to) {
  assert(to < from);
  IntMat f = p.res_[from];
  for (int k = from - 1; k > to; --k) f = p.res_[k] * f;
  return proj_kernel(f, p.levels[to].rels);
}

Fingerprint fingerprint(const MackeyPresentation &p) {
  Fingerprint fp;
  int n = p.tower.n;
  for (int k = 0; k <= n; ++k)
    fp.items.push_back({"G" + std::to_string(k), p.group_at(k)});
  for (int k = 1; k <= n; ++k) {
    fp.items.push_back({"coker res" + std::to_string(k),
                        map_coker(p.res_[k], p.levels[k - 1].rels)});
    fp.items.push_back({"ker res" + std::to_string(k),
                        map_ker(p.res_[k], p.levels[k].rels, p.levels[k - 1].rels)});
    fp.items.push_back({"coker tr" + std::to_string(k),
                        map_coker(p.tr_[k], p.levels[k].rels)});
    fp.items.push_back({"ker tr" + std::to_string(k),
                        map_ker(p.tr_[k], p.levels[k - 1].rels, p.levels[k].rels)});
    fp.items.push_back(
        {"coker res.tr" + std::to_string(k),
         map_coker(p.res_[k] * p.tr_[k], p.levels[k - 1].rels)});
    fp.items.push_back({"coker tr.res" + std::to_string(k),
                        map_coker(p.tr_[k] * p.res_[k], p.levels[k].rels)});
  }
  for (int k = 0; k <= n; ++k) {
    IntMat w1 = p.weyl_[k] - IntMat::identity(p.gens(k));
    fp.items.push_back({"coker w-1@" + std::to_string(k),
                        map_coker(w1, p.levels[k].rels)});
    fp.items.push_back(
        {"ker w-1@" + std::to_string(k),
         map_ker(w1, p.levels[k].rels, p.levels[k].rels)});
  }
  return fp;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < items.size(); ++i) {
    if (i) os << "; ";
    os << items[i].first << "=" << items[i].second.to_string();
  }
  return os.str();
}

MackeyPresentation constant_z(const Tower &t) {
  MackeyPresentation p;
  p.tower = t;
  int n = t.n;
  p.levels.resize(n + 1);
  p.res_.resize(n + 1);
  p.tr_.resize(n + 1);
  p.weyl_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    p.levels[k].gens = 1;
    p.levels[k].rels = empty_cols(1);
    p.weyl_[k] = IntMat::identity(1);
    if (k) {
      p.res_[k] = IntMat::from_rows({{1}});
      p.tr_[k] = IntMat::from_rows({{t.p}});
    }
  }
  return p;
}

MackeyPresentation inflation_z(const Tower &t) {
  assert(t.n == 2);
  MackeyPresentation p;
  p.tower = t;
  p.levels.resize(3);
  p.res_.resize(3);
  p.tr_.resize(3);
  p.weyl_.resize(3);
  p.levels[0].gens = 0;
  p.levels[0].rels = empty_cols(0);
  p.levels[1].gens = 1;
  p.levels[1].rels = empty_cols(1);
  p.levels[2].gens = 1;
  p.levels[2].rels = empty_cols(1);
  p.weyl_[0] = IntMat::identity(0);
  p.weyl_[1] = IntMat::identity(1);
  p.weyl_[2] = IntMat::identity(1);
  p.res_[1] = IntMat(0, 1);
  p.tr_[1] = IntMat(1, 0);
  p.res_[2] = IntMat::from_rows({{1}});
  p.tr_[2] = IntMat::from_rows({{t.p}});
  return p;
}

MackeyPresentation l_functor(const Tower &t) {
  assert(t.n == 2);
  MackeyPresentation p;
  p.tower = t;
  p.levels.resize(3);
  p.res_.resize(3);
  p.tr_.resize(3);
  p.weyl_.resize(3);
  p.levels[0].gens = 0;
  p.levels[0].rels = empty_cols(0);
  p.levels[1].gens = 3;
  p.levels[1].rels = IntMat::from_rows({{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  p.levels[2].gens = 1;
  p.levels[2].rels = IntMat::from_rows({{3}});
  p.weyl_[0] = IntMat::identity(0);
  p.weyl_[1] = IntMat::from_rows({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}});
  p.weyl_[2] = IntMat::identity(1);
  p.res_[1] = IntMat(0, 3);
  p.tr_[1] = IntMat(3, 0);
  p.res_[2] = IntMat::from_rows({{1}, {1}, {1}});
  p.tr_[2] = IntMat::from_rows({{1, 1, 1}});
  return p;
}

MackeyPresentation augmentation_ideal(const Tower &t) {
  MackeyPresentation a = free_mackey(t, [&] {
    GSet g;
    g.add(t.n, 1);
    return g;
  }());
  MackeyPresentation z = constant_z(t);
  // the cardinality map A -> Zbar
  std::vector<IntMat> card;
  for (int k = 0; k <= t.n; ++k) {
    IntMat m(1, a.gens(k));
    // generators of A at level k are the Burnside basis classes j = 0..k
    for (int j = 0; j <= k; ++j) m.col[j].push_back({0, Int(ipow(t.p, k - j))});
    card.push_back(std::move(m));
  }
  Cell ker = cell_homology(a, {}, card, &z);
  minimize_cell(ker);
  return ker.P;
}

MackeyPresentation zbar_free(const Tower &t, int gen_level) {
  FreeModule m;
  m.sys = TambaraSystem::burnside(t);
  m.gens.push_back({"g", gen_level, 0});
  ModuleLevelBases b = level_bases(m);
  MackeyPresentation amb = presentation_of(b);
  // kill the augmentation ideal action levelwise
  std::vector<IntMat> seed;
  for (int k = 0; k <= t.n; ++k) {
    IntMat s(amb.gens(k), 0);
    for (int i = 0; i < b.basis[k].size(); ++i) {
      ModElem e = b.basis[k].element(i);
      for (int j = 0; j < k; ++j) {
        BurnsideElem cls = BurnsideElem::basis(t, k, j);
        cls.c[k] -= Int(ipow(t.p, k - j));
        ModElem prod = mod_scale(m, e, r_from_burnside(m.sys, cls));
        std::vector<Int> v = b.basis[k].expand(prod);
        IntMat colm(amb.gens(k), 1);
        for (size_t r = 0; r < v.size(); ++r)
          if (!v[r].is_zero()) colm.col[0].push_back({(int)r, v[r]});
        s = s.hstack(colm);
      }
    }
    seed.push_back(lattice_basis(s));
  }
  seed = subfunctor_closure(amb, seed);
  return minimized(quotient_by(amb, seed));
}

MackeyPresentation free_quotient_by_res(const Tower &t, int gen_level,
                                        int res_to) {
  GSet g;
  g.add(gen_level, 1);
  MackeyPresentation amb = free_mackey(t, g);
  // seed: the restrictions of the generator symbols to res_to
  std::vector<IntMat> seed;
  for (int k = 0; k <= t.n; ++k) seed.push_back(IntMat(amb.gens(k), 0));
  IntMat f = amb.res_[gen_level];
  for (int k = gen_level - 1; k > res_to; --k) f = amb.res_[k] * f;
  seed[res_to] = f; // images of every level-gen generator column
  seed = subfunctor_closure(amb, seed);
  return minimized(quotient_by(amb, seed));
}

Cell kernel_subfunctor(const Tower &t, int gen_level, int res_to) {
  GSet g;
  g.add(gen_level, 1);
  MackeyPresentation amb = free_mackey(t, g);
  std::vector<IntMat> seed;
  for (int k = 0; k <= t.n; ++k) seed.push_back(IntMat(amb.gens(k), 0));
  seed[gen_level] = level_res_kernel(amb, gen_level, res_to);
  seed = subfunctor_closure(amb, seed);
  return subfunctor_cell(amb, seed);
}

const MackeyPresentation *Catalog::find(const std::string &name) const {
  for (const auto &e : entries)
    if (e.name == name) return &e.P;
  return nullptr;
}

Catalog Catalog::standard(const Tower &t) {
  Catalog c;
  c.tower = t;
  auto orbit_name = [&](int k) {
    std::ostringstream os;
    os << "C" << t.order(t.n) << "/";
    if (k == 0)
      os << "e";
    else
      os << "C" << t.order(k);
    return os.str();
  };
  std::vector<Fingerprint> seen;
  auto add = [&](const std::string &name, MackeyPresentation p) {
    Fingerprint fp = fingerprint(p);
    for (const auto &s : seen)
      if (s == fp) return; // keep one name per isomorphism type
    seen.push_back(std::move(fp));
    c.entries.push_back({name, std::move(p)});
  };
  // free Mackey functors, biggest first
  for (int k = 0; k < t.n; ++k) {
    GSet g;
    g.add(k, 1);
    add("A{" + orbit_name(k) + "}", free_mackey(t, g));
  }
  if (t.n == 2) {
    add("Inf(Z)", inflation_z(t));
    add("Zbar{" + orbit_name(1) + "}", minimized(zbar_free(t, 1)));
    add("L", l_functor(t));
  }
  add("I", augmentation_ideal(t));
  for (int k = 1; k <= t.n; ++k)
    for (int to = 0; to < k; ++to)
      add("A{" + orbit_name(k) + "}/res_" + std::to_string(to),
          minimized(free_quotient_by_res(t, k, to)));
  if (t.n == 2) {
    Cell k1 = kernel_subfunctor(t, 1, 0);
    minimize_cell(k1);
    add("ker(res)@A{" + orbit_name(1) + "}", k1.P);
    Cell k2 = kernel_subfunctor(t, 2, 0);
    minimize_cell(k2);
    add("ker(res_e)@A{" + orbit_name(2) + "}", k2.P);
  }
  add("Zbar", constant_z(t));
  {
    GSet g;
    g.add(t.n, 1);
    add("A", free_mackey(t, g));
  }
  return c;
}

// ---------- hom spaces and matching ----------

namespace {

struct LinBuilder {
  int nvars = 0;
  std::vector<std::map<int, Int>> rows;
  int new_var() { return nvars++; }
  int new_row() {
    rows.emplace_back();
    return (int)rows.size() - 1;
  }
  void add(int r, int v, const Int &c) {
    if (c.is_zero()) return;
    Int &slot = rows[r][v];
    slot += c;
    if (slot.is_zero()) rows[r].erase(v);
  }
  IntMat matrix() const {
    IntMat m((int)rows.size(), nvars);
    for (int r = 0; r < (int)rows.size(); ++r)
      for (const auto &kv : rows[r]) m.col[kv.first].push_back({r, kv.second});
    for (auto &cc : m.col)
      std::sort(cc.begin(), cc.end(),
                [](const auto &a, const auto &b) { return a.first < b.first; });
    return m;
  }
};

struct HomProblem {
  const MackeyPresentation *src;
  const MackeyPresentation *dst;
  LinBuilder lb;
  std::vector<int> hoff; // var offset of h[k]
  int hvar(int k, int r, int c) const {
    return hoff[k] + r * src->gens(k) + c;
  }
  // rows for: L * h[ka] * Is - Id * h[kb] * R == 0  (mod rels at level kmod)
  // each named product contributes entries; columns of C-side drive equations
  void congruence(int ka, const IntMat *L, int kb, const IntMat *R, int kmod,
                  int eq_cols, int sign_b) {
    const IntMat &rels = dst->levels[kmod].rels;
    int gm = dst->gens(kmod);
    for (int cc = 0; cc < eq_cols; ++cc) {
      std::vector<int> rowid(gm);
      for (int r = 0; r < gm; ++r) rowid[r] = lb.new_row();
      if (L) {
        // (L h[ka])[r,cc] = sum_i L[r,i] h[ka][i,cc]
        for (int j = 0; j < L->cols; ++j)
          for (const auto &e : L->col[j])
            lb.add(rowid[e.first], hvar(ka, j, cc), e.second);
      } else {
        for (int r = 0; r < gm; ++r) lb.add(rowid[r], hvar(ka, r, cc), Int(1));
      }
      if (R) {
        // (h[kb] R)[r,cc] = sum_j h[kb][r,j] R[j,cc]
        for (const auto &e : R->col[cc])
          for (int r = 0; r < gm; ++r)
            lb.add(rowid[r], hvar(kb, r, e.first), Int(sign_b) * e.second);
      } else if (kb >= 0) {
        for (int r = 0; r < gm; ++r)
          lb.add(rowid[r], hvar(kb, r, cc), Int(sign_b));
      }
      for (int j = 0; j < rels.cols; ++j) {
        int aux = lb.new_var();
        for (const auto &e : rels.col[j]) lb.add(rowid[e.first], aux, e.second);
      }
    }
  }
};

} // namespace

HomSpace hom_space(const MackeyPresentation &src, const MackeyPresentation &dst) {
  int n = src.tower.n;
  HomProblem hp;
  hp.src = &src;
  hp.dst = &dst;
  for (int k = 0; k <= n; ++k) {
    hp.hoff.push_back(hp.lb.nvars);
    hp.lb.nvars += dst.gens(k) * src.gens(k);
  }
  int hcount = hp.lb.nvars;
  for (int k = 0; k <= n; ++k) {
    // h[k] * rels_src ≡ 0
    const IntMat &rs = src.levels[k].rels;
    for (int j = 0; j < rs.cols; ++j) {
      int gm = dst.gens(k);
      std::vector<int> rowid(gm);
      for (int r = 0; r < gm; ++r) rowid[r] = hp.lb.new_row();
      for (const auto &e : rs.col[j])
        for (int r = 0; r < gm; ++r)
          hp.lb.add(rowid[r], hp.hvar(k, r, e.first), e.second);
      const IntMat &rels = dst.levels[k].rels;
      for (int jj = 0; jj < rels.cols; ++jj) {
        int aux = hp.lb.new_var();
        for (const auto &e : rels.col[jj]) hp.lb.add(rowid[e.first], aux, e.second);
      }
    }
    // weyl naturality
    hp.congruence(k, &dst.weyl_[k], k, &src.weyl_[k], k, src.gens(k), -1);
  }
  for (int k = 1; k <= n; ++k) {
    hp.congruence(k, &dst.res_[k], k - 1, &src.res_[k], k - 1, src.gens(k), -1);
    hp.congruence(k - 1, &dst.tr_[k], k, &src.tr_[k], k, src.gens(k - 1), -1);
  }
  IntMat sys = hp.lb.matrix();
  IntMat full = kernel_basis(sys);
  IntMat proj(hcount, full.cols);
  for (int j = 0; j < full.cols; ++j)
    for (const auto &e : full.col[j])
      if (e.first < hcount) proj.col[j].push_back({e.first, e.second});
  HomSpace out;
  out.basis = lattice_basis(proj);
  for (int k = 0; k <= n; ++k) {
    out.dims_src.push_back(src.gens(k));
    out.dims_dst.push_back(dst.gens(k));
  }
  return out;
}

MackeyMorphism HomSpace::morphism(const std::vector<Int> &coords) const {
  std::vector<Int> flat = basis.apply(coords);
  MackeyMorphism f;
  int off = 0;
  for (size_t k = 0; k < dims_src.size(); ++k) {
    IntMat m(dims_dst[k], dims_src[k]);
    for (int r = 0; r < dims_dst[k]; ++r)
      for (int c = 0; c < dims_src[k]; ++c) {
        const Int &v = flat[off + r * dims_src[k] + c];
        if (!v.is_zero()) m.add_to(r, c, v);
      }
    off += dims_dst[k] * dims_src[k];
    f.m.push_back(std::move(m));
  }
  return f;
}

namespace {

// solve for g: dst -> src with g f ≡ id_src (split retraction), g natural
bool solve_retraction(const MackeyPresentation &src,
                      const MackeyPresentation &dst, const MackeyMorphism &f,
                      MackeyMorphism &g_out) {
  // unknowns: g[k] (src.gens x dst.gens) plus aux; equations as in hom_space
  // for naturality, plus g f = id mod rels_src.
  int n = src.tower.n;
  HomProblem hp;
  hp.src = &dst; // g goes dst -> src
  hp.dst = &src;
  for (int k = 0; k <= n; ++k) {
    hp.hoff.push_back(hp.lb.nvars);
    hp.lb.nvars += src.gens(k) * dst.gens(k);
  }
  int gcount = hp.lb.nvars;
  for (int k = 0; k <= n; ++k) {
    const IntMat &rs = dst.levels[k].rels;
    for (int j = 0; j < rs.cols; ++j) {
      int gm = src.gens(k);
      std::vector<int> rowid(gm);
      for (int r = 0; r < gm; ++r) rowid[r] = hp.lb.new_row();
      for (const auto &e : rs.col[j])
        for (int r = 0; r < gm; ++r)
          hp.lb.add(rowid[r], hp.hvar(k, r, e.first), e.second);
      const IntMat &rels = src.levels[k].rels;
      for (int jj = 0; jj < rels.cols; ++jj) {
        int aux = hp.lb.new_var();
        for (const auto &e : rels.col[jj]) hp.lb.add(rowid[e.first], aux, e.second);
      }
    }
    hp.congruence(k, &src.weyl_[k], k, &dst.weyl_[k], k, dst.gens(k), -1);
  }
  for (int k = 1; k <= n; ++k) {
    hp.congruence(k, &src.res_[k], k - 1, &dst.res_[k], k - 1, dst.gens(k), -1);
    hp.congruence(k - 1, &src.tr_[k], k, &dst.tr_[k], k, dst.gens(k - 1), -1);
  }
  // g f = id_src mod rels_src: rows per (level, src-gen column)
  std::vector<Int> rhs(hp.lb.rows.size(), Int(0));
  for (int k = 0; k <= n; ++k) {
    int gs = src.gens(k);
    const IntMat &fk = f.m[k];
    for (int c = 0; c < gs; ++c) {
      std::vector<int> rowid(gs);
      for (int r = 0; r < gs; ++r) rowid[r] = hp.lb.new_row();
      // (g f)[r,c] = sum_j g[r,j] f[j,c]
      for (const auto &e : fk.col[c])
        for (int r = 0; r < gs; ++r)
          hp.lb.add(rowid[r], hp.hvar(k, r, e.first), e.second);
      const IntMat &rels = src.levels[k].rels;
      for (int jj = 0; jj < rels.cols; ++jj) {
        int aux = hp.lb.new_var();
        for (const auto &e : rels.col[jj]) hp.lb.add(rowid[e.first], aux, e.second);
      }
      rhs.resize(hp.lb.rows.size(), Int(0));
      for (int r = 0; r < gs; ++r) rhs[rowid[r]] = (r == c) ? Int(1) : Int(0);
    }
  }
  rhs.resize(hp.lb.rows.size(), Int(0));
  IntMat sys = hp.lb.matrix();
  std::vector<Int> sol;
  if (!solve(sys, rhs, sol)) return false;
  MackeyMorphism g;
  for (int k = 0; k <= n; ++k) {
    IntMat m(src.gens(k), dst.gens(k));
    for (int r = 0; r < src.gens(k); ++r)
      for (int c = 0; c < dst.gens(k); ++c) {
        const Int &v = sol[hp.hvar(k, r, c)];
        if (!v.is_zero()) m.add_to(r, c, v);
      }
    g.m.push_back(std::move(m));
  }
  g_out = std::move(g);
  return true;
}

std::vector<MackeyMorphism> split_candidates(const HomSpace &hs,
                                             int max_pairs = 400) {
  std::vector<MackeyMorphism> cands;
  int d = hs.basis.cols;
  for (int i = 0; i < d; ++i) {
    std::vector<Int> c(d, Int(0));
    c[i] = Int(1);
    cands.push_back(hs.morphism(c));
    c[i] = Int(-1);
    cands.push_back(hs.morphism(c));
  }
  int pairs = 0;
  for (int i = 0; i < d && pairs < max_pairs; ++i)
    for (int j = i + 1; j < d && pairs < max_pairs; ++j)
      for (int si = -1; si <= 1 && pairs < max_pairs; si += 2)
        for (int sj = -1; sj <= 1 && pairs < max_pairs; sj += 2) {
          std::vector<Int> c(d, Int(0));
          c[i] = Int(si);
          c[j] = Int(sj);
          cands.push_back(hs.morphism(c));
          ++pairs;
        }
  return cands;
}

uint64_t fnv1a(const std::string &s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string morphism_dump(const MackeyMorphism &f) {
  std::ostringstream os;
  for (const auto &m : f.m) os << m.to_string() << "|";
  return os.str();
}

} // namespace

std::optional<std::pair<MackeyMorphism, MackeyMorphism>>
find_isomorphism(const MackeyPresentation &a, const MackeyPresentation &b) {
  // quick invariant screen
  if (!(fingerprint(a) == fingerprint(b))) return std::nullopt;
  HomSpace hs = hom_space(a, b);
  for (const auto &f : split_candidates(hs)) {
    MackeyMorphism g;
    if (!solve_retraction(a, b, f, g)) continue;
    // f g = id_b as well?
    bool two_sided = true;
    for (int k = 0; k <= a.tower.n && two_sided; ++k) {
      IntMat fg = f.m[k] * g.m[k] - IntMat::identity(b.gens(k));
      if (!zero_mod(fg, b.levels[k].rels)) two_sided = false;
    }
    if (!two_sided) continue;
    if (!check_morphism(a, b, f).empty()) continue;
    if (!check_morphism(b, a, g).empty()) continue;
    return std::make_pair(f, g);
  }
  return std::nullopt;
}

std::string MatchResult::to_string() const {
  if (!identified) return "unidentified";
  if (names.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &kv : names) {
    if (!first) os << " + ";
    first = false;
    os << kv.first;
    if (kv.second > 1) os << "^" << kv.second;
  }
  return os.str();
}

MatchResult match_catalog(const MackeyPresentation &m, const Catalog &cat) {
  MatchResult out;
  struct Peel {
    const CatalogEntry *entry;
    MackeyMorphism f;      // C -> M'
    MackeyMorphism g;      // M' -> C
    std::vector<IntMat> iota; // next M'' gens -> M' gens
  };
  std::vector<Peel> peels;
  MackeyPresentation cur = minimized(m);
  int guard = 0;
  while (!cur.is_zero()) {
    if (++guard > 200) return out; // unidentified
    bool advanced = false;
    for (const auto &entry : cat.entries) {
      const MackeyPresentation &C = entry.P;
      HomSpace hs = hom_space(C, cur);
      if (hs.basis.cols == 0) continue;
      for (const auto &f : split_candidates(hs)) {
        bool nz = false;
        for (const auto &mm : f.m)
          if (!mm.is_zero()) nz = true;
        if (!nz) continue;
        MackeyMorphism g;
        if (!solve_retraction(C, cur, f, g)) continue;
        // accept: split off C; continue with ker(g)
        Cell ker = cell_homology(cur, {}, g.m, &C);
        minimize_cell(ker);
        Peel p{&entry, f, g, ker.reps};
        peels.push_back(std::move(p));
        cur = ker.P;
        advanced = true;
        break;
      }
      if (advanced) break;
    }
    if (!advanced) return out; // unidentified; still sound
  }
  // assemble the two-sided certificate N = sum of peeled entries -> M
  MackeyPresentation N;
  bool have_n = false;
  std::vector<IntMat> F; // N gens -> M gens (on the minimized m)
  MackeyPresentation M0 = minimized(m);
  int n = m.tower.n;
  for (int i = (int)peels.size() - 1; i >= 0; --i) {
    const Peel &p = peels[i];
    if (!have_n) {
      N = p.entry->P;
      F = p.f.m;
      have_n = true;
    } else {
      MackeyPresentation N2 = direct_sum(p.entry->P, N);
      std::vector<IntMat> F2;
      for (int k = 0; k <= n; ++k) {
        IntMat rest = p.iota[k] * F[k];
        IntMat blk = p.f.m[k].hstack(rest);
        F2.push_back(blk);
      }
      N = std::move(N2);
      F = std::move(F2);
    }
  }
  if (!have_n) {
    // zero module: empty decomposition
    out.identified = true;
    out.cert_hash = "0";
    return out;
  }
  MackeyMorphism Fm;
  Fm.m = F;
  MackeyMorphism Gm;
  if (!solve_retraction(N, M0, Fm, Gm)) return out;
  bool two_sided = true;
  for (int k = 0; k <= n && two_sided; ++k) {
    IntMat fg = Fm.m[k] * Gm.m[k] - IntMat::identity(M0.gens(k));
    if (!zero_mod(fg, M0.levels[k].rels)) two_sided = false;
  }
  if (!two_sided) return out;
  if (!check_morphism(N, M0, Fm).empty()) return out;
  if (!check_morphism(M0, N, Gm).empty()) return out;
  out.identified = true;
  std::map<std::string, int> mult;
  for (const auto &p : peels) mult[p.entry->name]++;
  // deterministic order: catalog order
  for (const auto &e : cat.entries)
    if (mult.count(e.name)) out.names.push_back({e.name, mult[e.name]});
  std::ostringstream hs;
  hs << std::hex << fnv1a(morphism_dump(Fm) + "#" + morphism_dump(Gm));
  out.cert_hash = hs.str();
  return out;
}

std::string lewis_diagram(const MackeyPresentation &p) {
  std::ostringstream os;
  for (int k = p.tower.n; k >= 0; --k) {
    os << "level C" << p.tower.order(k) << ": " << p.group_at(k).to_string()
       << "\n";
    if (k) {
      os << "  res -> " << p.res_[k].to_string() << "\n";
      os << "  tr <- " << p.tr_[k].to_string() << "\n";
    }
    if (p.tower.weyl_order(k) > 1)
      os << "  weyl: " << p.weyl_[k].to_string() << "\n";
  }
  return os.str();
}

} // namespace tamarack
