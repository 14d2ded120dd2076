#include "tamarack/homology.hpp"

#include <cassert>
#include <sstream>

#include "tamarack/parallel.hpp"

namespace tamarack {

PreparedComplex prepare(ChainComplex c) {
  PreparedComplex pc;
  pc.c = std::move(c);
  int len = pc.c.length();
  pc.bases.resize(len + 1);
  pc.pres.resize(len + 1);
  pc.dmat.resize(len + 1);
  parallel_for(len + 1, [&](int i) {
    pc.bases[i] = level_bases(pc.c.mods[i]);
    pc.pres[i] = presentation_of(pc.bases[i]);
  });
  for (int i = 1; i <= len; ++i)
    pc.dmat[i] = morphism_matrices(pc.c.d[i], pc.bases[i], pc.bases[i - 1]);
  return pc;
}

Cell homology_at(const PreparedComplex &pc, int i) {
  int len = pc.c.length();
  std::vector<IntMat> din, dout;
  const MackeyPresentation *next = nullptr;
  if (i + 1 <= len) din = pc.dmat[i + 1];
  if (i >= 1) {
    dout = pc.dmat[i];
    next = &pc.pres[i - 1];
  }
  Cell h = cell_homology(pc.pres[i], din, dout, next);
  minimize_cell(h);
  return h;
}

std::vector<TorRow> tor_table(const Tower &t, int gen_level, int max_degree,
                              const Catalog *cat) {
  MultiComplex grid = build_general(t, gen_level);
  ChainComplex total = totalize(grid);
  PreparedComplex pc = prepare(base_change(total));
  int len = pc.c.length();
  int rows = max_degree + 1;
  std::vector<TorRow> out(rows);
  std::vector<Cell> cells(rows);
  parallel_for(std::min(rows, len + 1),
               [&](int i) { cells[i] = homology_at(pc, i); });
  for (int i = 0; i < rows; ++i) {
    out[i].degree = i;
    if (i > len) {
      out[i].H.tower = t;
      out[i].H.levels.resize(t.n + 1);
      out[i].H.res_.resize(t.n + 1);
      out[i].H.tr_.resize(t.n + 1);
      out[i].H.weyl_.resize(t.n + 1);
      for (int k = 0; k <= t.n; ++k) {
        out[i].H.levels[k].gens = 0;
        out[i].H.levels[k].rels = IntMat(0, 0);
        out[i].H.weyl_[k] = IntMat(0, 0);
        if (k) {
          out[i].H.res_[k] = IntMat(0, 0);
          out[i].H.tr_[k] = IntMat(0, 0);
        }
      }
      if (cat) out[i].match = match_catalog(out[i].H, *cat);
      continue;
    }
    out[i].H = cells[i].P;
    if (cat) out[i].match = match_catalog(out[i].H, *cat);
  }
  return out;
}

PageGrid first_page(const MultiComplex &bc) {
  assert(!bc.sys.has_generator);
  PageGrid pg;
  pg.tower = bc.sys.tower;
  pg.dims = bc.dims;
  std::vector<const std::vector<int> *> keys;
  for (const auto &kv : bc.cells) keys.push_back(&kv.first);
  std::vector<ModuleLevelBases> bases(keys.size());
  std::vector<MackeyPresentation> pres(keys.size());
  parallel_for((int)keys.size(), [&](int i) {
    bases[i] = level_bases(bc.cells.at(*keys[i]));
    pres[i] = presentation_of(bases[i]);
  });
  for (size_t i = 0; i < keys.size(); ++i) {
    pg.bases.emplace(*keys[i], std::move(bases[i]));
    pg.cells.emplace(*keys[i], cell_of(pres[i]));
  }
  for (const auto &kv : bc.diff) {
    const std::vector<int> &v = kv.first.first;
    std::vector<int> w = v;
    --w[kv.first.second];
    pg.ambient[kv.first] =
        morphism_matrices(kv.second, pg.bases.at(v), pg.bases.at(w));
  }
  return pg;
}

void page_step(PageGrid &pg, int axis) {
  std::vector<const std::vector<int> *> keys;
  for (const auto &kv : pg.cells) keys.push_back(&kv.first);
  std::vector<Cell> next(keys.size());
  parallel_for((int)keys.size(), [&](int idx) {
    const std::vector<int> &v = *keys[idx];
    const Cell &mid = pg.cells.at(v);
    std::vector<IntMat> din, dout;
    const Cell *nx = nullptr;
    std::vector<int> up = v;
    ++up[axis];
    auto upit = pg.cells.find(up);
    if (upit != pg.cells.end()) {
      auto amb = pg.ambient.find({up, axis});
      if (amb != pg.ambient.end())
        din = induced_matrices(upit->second, amb->second, mid);
    }
    std::vector<int> dn = v;
    --dn[axis];
    auto dnit = pg.cells.find(dn);
    if (v[axis] > 0 && dnit != pg.cells.end()) {
      auto amb = pg.ambient.find({v, axis});
      if (amb != pg.ambient.end()) {
        dout = induced_matrices(mid, amb->second, dnit->second);
        nx = &dnit->second;
      }
    }
    Cell h = cell_homology_step(mid, din, dout, nx);
    minimize_cell(h);
    next[idx] = std::move(h);
  });
  for (size_t i = 0; i < keys.size(); ++i) pg.cells.at(*keys[i]) = std::move(next[i]);
  pg.axes_done.push_back(axis);
}

int ExactnessReport::total_defect() const {
  int d = 0;
  for (const auto &r : rows) d += r.defect;
  return d;
}

bool ExactnessReport::interior_exact() const {
  for (const auto &r : rows)
    if (r.position > 0 && r.defect) return false;
  return true;
}

bool ExactnessReport::resolves_unit() const {
  for (const auto &r : rows)
    if (r.position == 0 && r.defect) return false;
  return true;
}

ExactnessReport graded_exactness(const ChainComplex &c, long long cutoff,
                                 const std::vector<int> &levels) {
  ExactnessReport rep;
  rep.cutoff = cutoff;
  int len = c.length();
  struct Job {
    int pos;
    int level;
    long long deg;
  };
  std::vector<Job> jobs;
  for (int pos = 0; pos <= len; ++pos)
    for (int level : levels)
      for (long long d = 0; d <= cutoff; ++d) jobs.push_back({pos, level, d});
  std::vector<ExactnessRow> rows(jobs.size());
  parallel_for((int)jobs.size(), [&](int ji) {
    const Job &job = jobs[ji];
    ExactnessRow row;
    row.position = job.pos;
    row.level = job.level;
    row.degree = job.deg;
    ModBasis mid(c.mods[job.pos], job.level, job.deg);
    if (job.pos == 0) {
      // cokernel of d1 against the Burnside functor
      IntMat d1(mid.size(), 0);
      if (len >= 1) {
        ModBasis src(c.mods[1], job.level, job.deg);
        d1 = degree_matrix(c.d[1], src, mid);
        row.im_rank = hnf_cols(d1, false).rank();
      }
      row.homology = cokernel_invariants(d1, mid.size());
      AbGroup expected;
      if (job.deg == 0) expected.free_rank = job.level + 1;
      row.defect = row.homology == expected ? 0 : 1;
      rows[ji] = row;
      return;
    }
    ModBasis dst(c.mods[job.pos - 1], job.level, job.deg);
    IntMat dout = degree_matrix(c.d[job.pos], mid, dst);
    IntMat zmat = kernel_basis(dout);
    row.ker_rank = zmat.cols;
    IntMat din(mid.size(), 0);
    if (job.pos + 1 <= len) {
      ModBasis src(c.mods[job.pos + 1], job.level, job.deg);
      din = degree_matrix(c.d[job.pos + 1], src, mid);
    }
    row.im_rank = hnf_cols(din, false).rank();
    // homology group of the slice
    IntMat x(zmat.cols, 0);
    {
      Solver s(zmat);
      IntMat xx(zmat.cols, din.cols);
      for (int j = 0; j < din.cols; ++j) {
        std::vector<Int> b(mid.size(), Int(0));
        for (const auto &e : din.col[j]) b[e.first] = e.second;
        std::vector<Int> sol;
        bool ok = s.solve(b, sol);
        assert(ok && "boundaries are cycles");
        (void)ok;
        for (int r = 0; r < zmat.cols; ++r)
          if (!sol[r].is_zero()) xx.col[j].push_back({r, sol[r]});
      }
      x = std::move(xx);
    }
    row.homology = cokernel_invariants(x, zmat.cols);
    row.defect = row.homology.is_zero() ? 0 : 1;
    rows[ji] = row;
  });
  rep.rows = std::move(rows);
  return rep;
}

std::map<std::pair<int, long long>, AbGroup>
graded_homology_slices(const ChainComplex &c, int position, long long cutoff,
                       const std::vector<int> &levels) {
  std::map<std::pair<int, long long>, AbGroup> out;
  ExactnessReport rep = graded_exactness(c, cutoff, levels);
  // recompute just the requested position from the report rows
  for (const auto &r : rep.rows)
    if (r.position == position) out[{r.level, r.degree}] = r.homology;
  return out;
}

} // namespace tamarack
