#include "tamarack/intmat.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tamarack {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.col[i].push_back({i, Int(1)});
  return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long long>> &d) {
  int r = (int)d.size();
  int c = r ? (int)d[0].size() : 0;
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (d[i][j]) m.col[j].push_back({i, Int(d[i][j])});
  return m;
}

Int IntMat::get(int r, int c) const {
  for (const auto &e : col[c])
    if (e.first == r) return e.second;
  return Int(0);
}

void IntMat::set(int r, int c, Int v) {
  auto &cc = col[c];
  auto it = std::lower_bound(cc.begin(), cc.end(), r,
                             [](const auto &e, int row) { return e.first < row; });
  if (it != cc.end() && it->first == r) {
    if (v.is_zero())
      cc.erase(it);
    else
      it->second = std::move(v);
  } else if (!v.is_zero()) {
    cc.insert(it, {r, std::move(v)});
  }
}

void IntMat::add_to(int r, int c, const Int &v) {
  if (v.is_zero()) return;
  auto &cc = col[c];
  auto it = std::lower_bound(cc.begin(), cc.end(), r,
                             [](const auto &e, int row) { return e.first < row; });
  if (it != cc.end() && it->first == r) {
    it->second += v;
    if (it->second.is_zero()) cc.erase(it);
  } else {
    cc.insert(it, {r, v});
  }
}

int IntMat::nnz() const {
  int n = 0;
  for (const auto &c : col) n += (int)c.size();
  return n;
}

bool IntMat::is_zero() const { return nnz() == 0; }

IntMat IntMat::transpose() const {
  IntMat t(cols, rows);
  for (int j = 0; j < cols; ++j)
    for (const auto &e : col[j]) t.col[e.first].push_back({j, e.second});
  for (auto &c : t.col)
    std::sort(c.begin(), c.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
  return t;
}

IntMat IntMat::hstack(const IntMat &o) const {
  assert(rows == o.rows);
  IntMat m(rows, cols + o.cols);
  for (int j = 0; j < cols; ++j) m.col[j] = col[j];
  for (int j = 0; j < o.cols; ++j) m.col[cols + j] = o.col[j];
  return m;
}

IntMat IntMat::vstack(const IntMat &o) const {
  assert(cols == o.cols);
  IntMat m(rows + o.rows, cols);
  for (int j = 0; j < cols; ++j) {
    m.col[j] = col[j];
    for (const auto &e : o.col[j]) m.col[j].push_back({rows + e.first, e.second});
  }
  return m;
}

IntMat IntMat::cols_subset(const std::vector<int> &idx) const {
  IntMat m(rows, (int)idx.size());
  for (size_t k = 0; k < idx.size(); ++k) m.col[k] = col[idx[k]];
  return m;
}

IntMat IntMat::scaled(const Int &s) const {
  IntMat m(rows, cols);
  if (s.is_zero()) return m;
  for (int j = 0; j < cols; ++j) {
    m.col[j] = col[j];
    for (auto &e : m.col[j]) e.second *= s;
  }
  return m;
}

std::vector<Int> IntMat::apply(const std::vector<Int> &x) const {
  assert((int)x.size() == cols);
  std::vector<Int> y(rows, Int(0));
  for (int j = 0; j < cols; ++j) {
    if (x[j].is_zero()) continue;
    for (const auto &e : col[j]) y[e.first] += e.second * x[j];
  }
  return y;
}

IntMat operator*(const IntMat &a, const IntMat &b) {
  assert(a.cols == b.rows);
  IntMat m(a.rows, b.cols);
  for (int j = 0; j < b.cols; ++j) {
    std::map<int, Int> acc;
    for (const auto &e : b.col[j])
      for (const auto &f : a.col[e.first]) {
        Int &slot = acc[f.first];
        slot += f.second * e.second;
      }
    for (auto &kv : acc)
      if (!kv.second.is_zero()) m.col[j].push_back({kv.first, std::move(kv.second)});
  }
  return m;
}

IntMat operator+(const IntMat &a, const IntMat &b) {
  assert(a.rows == b.rows && a.cols == b.cols);
  IntMat m = a;
  for (int j = 0; j < b.cols; ++j)
    for (const auto &e : b.col[j]) m.add_to(e.first, j, e.second);
  return m;
}

IntMat operator-(const IntMat &a, const IntMat &b) {
  return a + b.scaled(Int(-1));
}

bool operator==(const IntMat &a, const IntMat &b) {
  return a.rows == b.rows && a.cols == b.cols && a.col == b.col;
}

std::string IntMat::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows; ++r) {
    os << (r ? "\n" : "") << "[";
    for (int c = 0; c < cols; ++c) os << (c ? " " : "") << get(r, c);
    os << "]";
  }
  return os.str();
}

namespace {

// Elimination workspace with row and column indices.
struct Elim {
  int rows, cols;
  std::vector<std::map<int, Int>> row; // row -> (col -> val)
  std::vector<std::set<int>> colrows;  // col -> rows with nonzero
  IntMat *u = nullptr;                 // row ops mirror (left transform)
  IntMat *v = nullptr;                 // col ops mirror (right transform)

  Elim(const IntMat &m, IntMat *u_, IntMat *v_)
      : rows(m.rows), cols(m.cols), row(m.rows), colrows(m.cols), u(u_), v(v_) {
    for (int j = 0; j < m.cols; ++j)
      for (const auto &e : m.col[j]) {
        row[e.first][j] = e.second;
        colrows[j].insert(e.first);
      }
  }

  Int get(int r, int c) const {
    auto it = row[r].find(c);
    return it == row[r].end() ? Int(0) : it->second;
  }

  void put(int r, int c, Int val) {
    if (val.is_zero()) {
      row[r].erase(c);
      colrows[c].erase(r);
    } else {
      row[r][c] = std::move(val);
      colrows[c].insert(r);
    }
  }

  // row[i] += q * row[k]
  void row_axpy(int i, int k, const Int &q) {
    if (q.is_zero()) return;
    for (const auto &e : std::map<int, Int>(row[k])) {
      Int nv = get(i, e.first) + e.second * q;
      put(i, e.first, std::move(nv));
    }
    if (u) {
      for (int j = 0; j < u->cols; ++j) {
        Int add = u->get(k, j) * q;
        if (!add.is_zero()) u->add_to(i, j, add);
      }
    }
  }

  void row_swap(int i, int k) {
    if (i == k) return;
    std::map<int, Int> ri = row[i], rk = row[k];
    for (const auto &e : ri) put(i, e.first, Int(0));
    for (const auto &e : rk) put(k, e.first, Int(0));
    for (const auto &e : rk) put(i, e.first, e.second);
    for (const auto &e : ri) put(k, e.first, e.second);
    if (u)
      for (int j = 0; j < u->cols; ++j) {
        Int a = u->get(i, j), b = u->get(k, j);
        u->set(i, j, b);
        u->set(k, j, a);
      }
  }

  void row_negate(int i) {
    for (auto &e : row[i]) e.second = -e.second;
    if (u)
      for (int j = 0; j < u->cols; ++j) u->set(i, j, -u->get(i, j));
  }

  // col[j] += q * col[k]
  void col_axpy(int j, int k, const Int &q) {
    if (q.is_zero()) return;
    for (int r : std::set<int>(colrows[k])) {
      Int nv = get(r, j) + get(r, k) * q;
      put(r, j, std::move(nv));
    }
    if (v) col_axpy_mat(*v, j, k, q);
  }

  void col_swap(int j, int k) {
    if (j == k) return;
    std::set<int> rj = colrows[j], rk = colrows[k];
    std::map<int, Int> savj, savk;
    for (int r : rj) savj[r] = get(r, j);
    for (int r : rk) savk[r] = get(r, k);
    for (auto &e : savj) put(e.first, j, Int(0));
    for (auto &e : savk) put(e.first, k, Int(0));
    for (auto &e : savk) put(e.first, j, e.second);
    for (auto &e : savj) put(e.first, k, e.second);
    if (v) std::swap(v->col[j], v->col[k]);
  }

  void col_negate_op(int j) {
    for (int r : std::set<int>(colrows[j])) put(r, j, -get(r, j));
    if (v)
      for (auto &e : v->col[j]) e.second = -e.second;
  }

  IntMat to_mat() const {
    IntMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
      for (const auto &kv : row[r]) m.col[kv.first].push_back({r, kv.second});
    for (auto &cc : m.col)
      std::sort(cc.begin(), cc.end(),
                [](const auto &a, const auto &b) { return a.first < b.first; });
    return m;
  }

private:
  static void col_axpy_mat(IntMat &m, int j, int k, const Int &q) {
    for (const auto &e : m.col[k]) m.add_to(e.first, j, e.second * q);
  }
};

} // namespace

HnfResult hnf_cols(const IntMat &m, bool want_u) {
  HnfResult res;
  IntMat u;
  if (want_u) u = IntMat::identity(m.cols);
  Elim w(m, nullptr, want_u ? &u : nullptr);

  int c = 0;
  for (int r = 0; r < m.rows && c < m.cols; ++r) {
    for (;;) {
      int jmin = -1;
      Int best;
      int live = 0;
      for (const auto &kv : w.row[r]) {
        if (kv.first < c) continue;
        ++live;
        if (jmin < 0 || Int::cmp_abs(kv.second, best) < 0) {
          jmin = kv.first;
          best = kv.second;
        }
      }
      if (jmin < 0) break; // row r has no pivot among free columns
      if (live == 1) {
        w.col_swap(c, jmin);
        if (w.get(r, c).is_neg()) w.col_negate_op(c);
        Int piv = w.get(r, c);
        // normalize the row-r entries of earlier pivot columns
        for (const auto &kv : std::map<int, Int>(w.row[r])) {
          if (kv.first >= c) continue;
          Int q = Int::fdiv(kv.second, piv);
          if (!q.is_zero()) w.col_axpy(kv.first, c, -q);
        }
        res.pivots.push_back({r, c});
        ++c;
        break;
      }
      // eliminate against the smallest entry
      Int piv = w.get(r, jmin);
      for (const auto &kv : std::map<int, Int>(w.row[r])) {
        if (kv.first < c || kv.first == jmin) continue;
        Int q = kv.second / piv; // truncated; |remainder| < |piv|
        if (!q.is_zero()) w.col_axpy(kv.first, jmin, -q);
      }
    }
  }
  res.h = w.to_mat();
  if (want_u) res.u = std::move(u);
  return res;
}

IntMat kernel_basis(const IntMat &m) {
  HnfResult r = hnf_cols(m);
  std::vector<int> free_cols;
  int c0 = r.rank();
  for (int j = c0; j < m.cols; ++j) {
    assert(r.h.col[j].empty());
    free_cols.push_back(j);
  }
  return r.u.cols_subset(free_cols);
}

Solver::Solver(const IntMat &m) : m_(m), hnf_(hnf_cols(m)) {}

bool Solver::solve(const std::vector<Int> &b, std::vector<Int> &x) const {
  std::vector<Int> res = b;
  std::vector<Int> y(m_.cols, Int(0));
  for (const auto &pc : hnf_.pivots) {
    int r = pc.first, c = pc.second;
    if (res[r].is_zero()) continue;
    Int piv = hnf_.h.get(r, c);
    Int q, rem;
    Int::divmod(res[r], piv, q, rem);
    if (!rem.is_zero()) return false;
    y[c] = q;
    for (const auto &e : hnf_.h.col[c]) res[e.first] -= e.second * q;
  }
  for (const auto &v : res)
    if (!v.is_zero()) return false;
  x = hnf_.u.apply(y);
  return true;
}

bool solve(const IntMat &m, const std::vector<Int> &b, std::vector<Int> &x) {
  return Solver(m).solve(b, x);
}

bool solve_mod(const IntMat &a, const IntMat &rels, const std::vector<Int> &b,
               std::vector<Int> &x) {
  IntMat ext = a.hstack(rels);
  std::vector<Int> full;
  if (!solve(ext, b, full)) return false;
  x.assign(full.begin(), full.begin() + a.cols);
  return true;
}

SnfResult snf(const IntMat &m, bool want_transforms) {
  SnfResult out;
  out.with_transforms = want_transforms;
  IntMat u, v;
  if (want_transforms) {
    u = IntMat::identity(m.rows);
    v = IntMat::identity(m.cols);
  }
  Elim w(m, want_transforms ? &u : nullptr, want_transforms ? &v : nullptr);

  int t = 0;
  int nmax = std::min(m.rows, m.cols);
  std::vector<Int> diag;
  while (t < nmax) {
    // pivot choice: smallest |value|, tie-break by fill-in estimate;
    // stop scanning soon after a unit pivot shows up
    int pr = -1, pc = -1;
    Int best;
    long best_fill = 0;
    int since_unit = -1;
    for (int r = t; r < m.rows; ++r) {
      for (const auto &e : w.row[r]) {
        if (e.first < t) continue;
        long fill = (long)(w.row[r].size() - 1) *
                    (long)(w.colrows[e.first].size() - 1);
        int cmp = pr < 0 ? -1 : Int::cmp_abs(e.second, best);
        if (pr < 0 || cmp < 0 || (cmp == 0 && fill < best_fill)) {
          pr = r;
          pc = e.first;
          best = e.second;
          best_fill = fill;
        }
        if (Int::cmp_abs(best, Int(1)) == 0) {
          if (best_fill == 0) break;
          if (since_unit < 0) since_unit = 0;
          if (++since_unit > 64) break;
        }
      }
      if (pr >= 0 && Int::cmp_abs(best, Int(1)) == 0 &&
          (best_fill == 0 || since_unit > 64))
        break;
    }
    if (pr < 0) break; // matrix is zero below t
    w.row_swap(t, pr);
    w.col_swap(t, pc);

    for (;;) {
      // clear column t with row ops
      bool touched = false;
      Int piv = w.get(t, t);
      for (int r : std::set<int>(w.colrows[t])) {
        if (r == t) continue;
        Int val = w.get(r, t);
        Int q = val / piv;
        w.row_axpy(r, t, -q);
        if (!w.get(r, t).is_zero()) {
          // remainder smaller than pivot: swap up and restart
          w.row_swap(t, r);
          touched = true;
          break;
        }
      }
      if (touched) continue;
      // clear row t with col ops
      piv = w.get(t, t);
      for (const auto &e : std::map<int, Int>(w.row[t])) {
        if (e.first == t) continue;
        Int q = e.second / piv;
        w.col_axpy(e.first, t, -q);
        if (!w.get(t, e.first).is_zero()) {
          w.col_swap(t, e.first);
          touched = true;
          break;
        }
      }
      if (!touched) break;
    }
    if (w.get(t, t).is_neg()) w.row_negate(t);
    diag.push_back(w.get(t, t));
    ++t;
  }

  // enforce divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < (int)diag.size(); ++i) {
      Int r = diag[i + 1] % diag[i];
      if (r.is_zero()) continue;
      changed = true;
      // 2x2 block [a 0; 0 b] -> [g 0; 0 ab/g]
      Int a = diag[i], b = diag[i + 1];
      Int g = Int::gcd(a, b);
      Int l = (a * b).div_exact(g);
      if (want_transforms) {
        // col i += col i+1 ; then re-eliminate the 2x2 block explicitly
        w.col_axpy(i, i + 1, Int(1));
        // now block is [a 0; b b]; clear via euclid
        for (;;) {
          Int aii = w.get(i, i);
          if (aii.is_zero()) {
            w.row_swap(i, i + 1);
            continue;
          }
          Int x10 = w.get(i + 1, i);
          if (!x10.is_zero()) {
            Int q = x10 / aii;
            w.row_axpy(i + 1, i, -q);
            if (!w.get(i + 1, i).is_zero()) {
              w.row_swap(i, i + 1);
              continue;
            }
          }
          Int x01 = w.get(i, i + 1);
          if (!x01.is_zero()) {
            Int q = x01 / w.get(i, i);
            w.col_axpy(i + 1, i, -q);
            if (!w.get(i, i + 1).is_zero()) {
              w.col_swap(i, i + 1);
              continue;
            }
          }
          break;
        }
        if (w.get(i, i).is_neg()) w.row_negate(i);
        if (w.get(i + 1, i + 1).is_neg()) w.row_negate(i + 1);
        diag[i] = w.get(i, i);
        diag[i + 1] = w.get(i + 1, i + 1);
      } else {
        diag[i] = g;
        diag[i + 1] = l;
      }
    }
  }
  out.factors = std::move(diag);
  if (want_transforms) {
    out.u = std::move(u);
    out.v = std::move(v);
  }
  return out;
}

std::vector<Int> snf_reference(const IntMat &m) {
  // dense textbook elimination; full pivoting on every sweep
  int R = m.rows, C = m.cols;
  std::vector<std::vector<Int>> a(R, std::vector<Int>(C, Int(0)));
  for (int j = 0; j < C; ++j)
    for (const auto &e : m.col[j]) a[e.first][j] = e.second;
  std::vector<Int> diag;
  int t = 0;
  while (t < R && t < C) {
    bool clean = false;
    bool empty = false;
    while (!clean) {
      int pr = -1, pc = -1;
      for (int r = t; r < R; ++r)
        for (int c = t; c < C; ++c)
          if (!a[r][c].is_zero() &&
              (pr < 0 || Int::cmp_abs(a[r][c], a[pr][pc]) < 0)) {
            pr = r;
            pc = c;
          }
      if (pr < 0) {
        empty = true;
        break;
      }
      std::swap(a[t], a[pr]);
      for (int r = 0; r < R; ++r) std::swap(a[r][t], a[r][pc]);
      clean = true;
      for (int r = t + 1; r < R; ++r) {
        if (a[r][t].is_zero()) continue;
        Int q = a[r][t] / a[t][t];
        for (int c = t; c < C; ++c) a[r][c] -= q * a[t][c];
        if (!a[r][t].is_zero()) clean = false;
      }
      for (int c = t + 1; c < C; ++c) {
        if (a[t][c].is_zero()) continue;
        Int q = a[t][c] / a[t][t];
        for (int r = t; r < R; ++r) a[r][c] -= q * a[r][t];
        if (!a[t][c].is_zero()) clean = false;
      }
    }
    if (empty) break;
    if (a[t][t].is_neg())
      for (int c = t; c < C; ++c) a[t][c] = -a[t][c];
    diag.push_back(a[t][t]);
    ++t;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i + 1 < (int)diag.size(); ++i) {
      if ((diag[i + 1] % diag[i]).is_zero()) continue;
      Int g = Int::gcd(diag[i], diag[i + 1]);
      Int l = (diag[i] * diag[i + 1]).div_exact(g);
      diag[i] = g;
      diag[i + 1] = l;
      changed = true;
    }
  }
  return diag;
}

AbGroup cokernel_invariants(const IntMat &m, int ambient_rank) {
  SnfResult s = snf(m);
  AbGroup g;
  g.free_rank = ambient_rank - s.rank();
  for (const auto &d : s.factors)
    if (!d.is_one()) g.torsion.push_back(d);
  return g;
}

std::string AbGroup::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto &d : torsion) {
    if (!first) os << " + ";
    os << "Z/" << d;
    first = false;
  }
  return os.str();
}

} // namespace tamarack
