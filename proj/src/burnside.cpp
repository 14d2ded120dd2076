#include "tamarack/burnside.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tamarack {

BurnsideElem BurnsideElem::unit(const Tower &t, int lvl) {
  BurnsideElem b(t, lvl);
  b.c[lvl] = Int(1);
  return b;
}

BurnsideElem BurnsideElem::basis(const Tower &t, int lvl, int j) {
  assert(0 <= j && j <= lvl);
  BurnsideElem b(t, lvl);
  b.c[j] = Int(1);
  return b;
}

BurnsideElem BurnsideElem::integer(const Tower &t, int lvl, Int m) {
  BurnsideElem b(t, lvl);
  b.c[lvl] = std::move(m);
  return b;
}

bool BurnsideElem::is_zero() const {
  for (const auto &v : c)
    if (!v.is_zero()) return false;
  return true;
}

bool BurnsideElem::is_integer() const {
  for (int j = 0; j < level; ++j)
    if (!c[j].is_zero()) return false;
  return true;
}

bool BurnsideElem::operator==(const BurnsideElem &o) const {
  return tower == o.tower && level == o.level && c == o.c;
}

BurnsideElem &BurnsideElem::operator+=(const BurnsideElem &o) {
  assert(level == o.level);
  for (int j = 0; j <= level; ++j) c[j] += o.c[j];
  return *this;
}

BurnsideElem &BurnsideElem::operator-=(const BurnsideElem &o) {
  assert(level == o.level);
  for (int j = 0; j <= level; ++j) c[j] -= o.c[j];
  return *this;
}

BurnsideElem BurnsideElem::scaled(const Int &s) const {
  BurnsideElem b = *this;
  for (auto &v : b.c) v *= s;
  return b;
}

std::string BurnsideElem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int j = level; j >= 0; --j) {
    if (c[j].is_zero()) continue;
    Int v = c[j];
    if (!first) {
      os << (v.is_neg() ? " - " : " + ");
      if (v.is_neg()) v = -v;
    }
    first = false;
    if (j == level) {
      os << v;
    } else {
      if (!(v.is_one())) os << v << "*";
      os << "[C" << tower.order(level) << "/";
      if (j == 0)
        os << "e]";
      else
        os << "C" << tower.order(j) << "]";
    }
  }
  return os.str();
}

BurnsideElem mul(const BurnsideElem &a, const BurnsideElem &b) {
  if (a.level != b.level || !(a.tower == b.tower))
    throw std::invalid_argument("burnside mul: level mismatch");
  int k = a.level;
  BurnsideElem out(a.tower, k);
  for (int i = 0; i <= k; ++i) {
    if (a.c[i].is_zero()) continue;
    for (int j = 0; j <= k; ++j) {
      if (b.c[j].is_zero()) continue;
      // [C/C_i][C/C_j] = p^(k - max(i,j)) [C/C_min(i,j)]
      Int m = Int(ipow(a.tower.p, k - std::max(i, j)));
      out.c[std::min(i, j)] += a.c[i] * b.c[j] * m;
    }
  }
  return out;
}

BurnsideElem res(const BurnsideElem &a, int to) {
  if (to > a.level) throw std::invalid_argument("burnside res: target above level");
  BurnsideElem out(a.tower, to);
  for (int j = 0; j <= a.level; ++j) {
    if (a.c[j].is_zero()) continue;
    int mj = std::min(j, to);
    // p^(level-j) points, orbits of size p^(to-mj)
    Int cnt = Int(ipow(a.tower.p, a.level - j - to + mj));
    out.c[mj] += a.c[j] * cnt;
  }
  return out;
}

BurnsideElem tr(const BurnsideElem &a, int to) {
  if (to < a.level) throw std::invalid_argument("burnside tr: target below level");
  BurnsideElem out(a.tower, to);
  for (int j = 0; j <= a.level; ++j) out.c[j] = a.c[j];
  return out;
}

std::vector<Int> marks(const BurnsideElem &a) {
  std::vector<Int> mk(a.level + 1, Int(0));
  for (int i = 0; i <= a.level; ++i)
    for (int j = i; j <= a.level; ++j)
      mk[i] += a.c[j] * Int(ipow(a.tower.p, a.level - j));
  return mk;
}

BurnsideElem from_marks(const Tower &t, int level, const std::vector<Int> &mk) {
  assert((int)mk.size() == level + 1);
  BurnsideElem out(t, level);
  for (int j = level; j >= 0; --j) {
    Int rest(0);
    for (int j2 = j + 1; j2 <= level; ++j2)
      rest += out.c[j2] * Int(ipow(t.p, level - j2));
    out.c[j] = (mk[j] - rest).div_exact(Int(ipow(t.p, level - j)));
  }
  return out;
}

BurnsideElem norm(const BurnsideElem &a, int to) {
  if (to < a.level) throw std::invalid_argument("burnside norm: target below level");
  std::vector<Int> in = marks(a);
  std::vector<Int> out(to + 1);
  for (int i = 0; i <= to; ++i) {
    int mi = std::min(i, a.level);
    unsigned long long e = (unsigned long long)ipow(a.tower.p, to - std::max(i, a.level));
    out[i] = Int::pow(in[mi], e);
  }
  return from_marks(a.tower, to, out);
}

BurnsideElem norm_int(const Tower &t, const Int &a, int k) {
  if (k == 0) return BurnsideElem::integer(t, 0, a);
  if (k == 1) {
    // a + ((a^p - a)/p) t
    BurnsideElem out(t, 1);
    out.c[1] = a;
    out.c[0] = (Int::pow(a, t.p) - a).div_exact(Int(t.p));
    return out;
  }
  return norm(BurnsideElem::integer(t, 0, a), k);
}

Int cardinality(const BurnsideElem &a) {
  Int s(0);
  for (int j = 0; j <= a.level; ++j)
    s += a.c[j] * Int(ipow(a.tower.p, a.level - j));
  return s;
}

} // namespace tamarack
