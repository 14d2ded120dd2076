#include "tamarack/tambara.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace tamarack {

int expo_total(const Expo &e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

Expo expo_shift(const Expo &e, long long s) {
  long long L = (long long)e.size();
  Expo out(e.size(), 0);
  s = ((s % L) + L) % L;
  for (long long i = 0; i < L; ++i) out[(i + s) % L] = e[i];
  return out;
}

Expo expo_pull(const Expo &e, long long target_len) {
  assert(target_len % (long long)e.size() == 0);
  Expo out(target_len, 0);
  for (long long i = 0; i < target_len; ++i) out[i] = e[i % e.size()];
  return out;
}

Expo expo_fold(const Expo &e, long long target_len) {
  assert((long long)e.size() % target_len == 0);
  Expo out(target_len, 0);
  for (long long i = 0; i < (long long)e.size(); ++i) out[i % target_len] += e[i];
  return out;
}

bool RElem::is_zero() const {
  if (!scalar.is_zero()) return false;
  return poly.empty() && qpart.empty();
}

bool RElem::operator==(const RElem &o) const {
  return level == o.level && scalar == o.scalar && poly == o.poly &&
         qpart == o.qpart;
}

RElem r_zero(const TambaraSystem &S, int level) {
  RElem e;
  e.level = level;
  e.scalar = BurnsideElem::zero(S.tower, level);
  return e;
}

RElem r_one(const TambaraSystem &S, int level) {
  RElem e = r_zero(S, level);
  e.scalar = BurnsideElem::unit(S.tower, level);
  return e;
}

RElem r_from_burnside(const TambaraSystem &S, const BurnsideElem &b) {
  RElem e = r_zero(S, b.level);
  e.scalar = b;
  return e;
}

RElem r_from_int(const TambaraSystem &S, int level, const Int &v) {
  RElem e = r_zero(S, level);
  e.scalar = BurnsideElem::integer(S.tower, level, v);
  return e;
}

RElem r_x(const TambaraSystem &S, int level, long long i) {
  assert(S.poly_level(level));
  Expo e(S.num_vars(), 0);
  e[i % S.num_vars()] = 1;
  return r_monomial(S, level, e);
}

RElem r_monomial(const TambaraSystem &S, int level, const Expo &e,
                 const BurnsideElem &coeff) {
  assert(S.poly_level(level));
  assert((long long)e.size() == S.num_vars());
  RElem out = r_zero(S, level);
  if (coeff.is_zero()) return out;
  if (expo_total(e) == 0)
    out.scalar = coeff;
  else
    out.poly[e] = coeff;
  return out;
}

RElem r_monomial(const TambaraSystem &S, int level, const Expo &e) {
  return r_monomial(S, level, e, BurnsideElem::unit(S.tower, level));
}

Expo canonical_orbit(const TambaraSystem &S, int level, int j, const Expo &u) {
  (void)j;
  long long L = (long long)u.size();
  long long step = S.tower.weyl_order(level) % L; // shift unit mod L
  Expo best = u;
  if (step == 0) return best;
  // walk the subgroup of Z/L generated by step
  for (long long s = step; s != 0; s = (s + step) % L) {
    Expo cand = expo_shift(u, s);
    if (best < cand) best = cand; // lexicographically greatest translate
  }
  return best;
}

RElem r_q(const TambaraSystem &S, int level, int j, const Expo &u,
          const Int &coeff) {
  assert(!S.poly_level(level) && S.has_generator);
  assert(0 <= j && j <= level);
  assert((long long)u.size() == S.q_len(j));
  RElem out = r_zero(S, level);
  if (coeff.is_zero()) return out;
  if (expo_total(u) == 0) {
    // relation (i): q^j_0 is the Burnside class [C/C_j]
    out.scalar = BurnsideElem::basis(S.tower, level, j).scaled(coeff);
    return out;
  }
  QKey k{j, canonical_orbit(S, level, j, u)};
  out.qpart[k] = coeff;
  return out;
}

RElem r_add(const RElem &a, const RElem &b) {
  assert(a.level == b.level);
  RElem out = a;
  out.scalar += b.scalar;
  for (const auto &kv : b.poly) {
    auto it = out.poly.find(kv.first);
    if (it == out.poly.end())
      out.poly[kv.first] = kv.second;
    else {
      it->second += kv.second;
      if (it->second.is_zero()) out.poly.erase(it);
    }
  }
  for (const auto &kv : b.qpart) {
    Int &slot = out.qpart[kv.first];
    slot += kv.second;
    if (slot.is_zero()) out.qpart.erase(kv.first);
  }
  return out;
}

RElem r_sub(const RElem &a, const RElem &b) { return r_add(a, r_scale(b, Int(-1))); }

RElem r_scale(const RElem &a, const Int &s) {
  if (s.is_zero()) {
    RElem z;
    z.level = a.level;
    z.scalar = BurnsideElem::zero(a.scalar.tower, a.level);
    return z;
  }
  RElem out = a;
  out.scalar = out.scalar.scaled(s);
  for (auto &kv : out.poly) kv.second = kv.second.scaled(s);
  for (auto &kv : out.qpart) kv.second *= s;
  return out;
}

namespace {

// accumulate b into a
void acc(RElem &a, const RElem &b) { a = r_add(a, b); }

} // namespace

RElem r_mul(const TambaraSystem &S, const RElem &a, const RElem &b) {
  assert(a.level == b.level);
  int lvl = a.level;
  RElem out = r_zero(S, lvl);
  out.scalar = mul(a.scalar, b.scalar);
  if (S.poly_level(lvl)) {
    for (const auto &ka : a.poly) {
      // poly x scalar
      if (!b.scalar.is_zero()) acc(out, r_monomial(S, lvl, ka.first, mul(ka.second, b.scalar)));
      for (const auto &kb : b.poly) {
        Expo e(ka.first.size());
        for (size_t i = 0; i < e.size(); ++i) e[i] = ka.first[i] + kb.first[i];
        acc(out, r_monomial(S, lvl, e, mul(ka.second, kb.second)));
      }
    }
    for (const auto &kb : b.poly)
      if (!a.scalar.is_zero())
        acc(out, r_monomial(S, lvl, kb.first, mul(a.scalar, kb.second)));
    return out;
  }
  // level above the generator: relation (iii)
  auto scalar_times_q = [&](const BurnsideElem &sc, const QKey &k, const Int &cf) {
    for (int i = 0; i <= lvl; ++i) {
      if (sc.c[i].is_zero()) continue;
      Int coeff = sc.c[i] * cf;
      if (i >= k.j) {
        // [C/C_i] q^j_u = p^(lvl - i) q^j_u
        acc(out, r_q(S, lvl, k.j, k.u, coeff * Int(ipow(S.tower.p, lvl - i))));
      } else {
        // sum of p^(lvl - j) translated pullbacks
        Expo base = expo_pull(k.u, S.q_len(i));
        long long step = S.tower.weyl_order(lvl);
        long long terms = ipow(S.tower.p, lvl - k.j);
        for (long long g = 0; g < terms; ++g)
          acc(out, r_q(S, lvl, i, expo_shift(base, g * step), coeff));
      }
    }
  };
  for (const auto &ka : a.qpart) scalar_times_q(b.scalar, ka.first, ka.second);
  for (const auto &kb : b.qpart) scalar_times_q(a.scalar, kb.first, kb.second);
  for (const auto &ka : a.qpart)
    for (const auto &kb : b.qpart) {
      const QKey *lo = &ka.first, *hi = &kb.first;
      if (lo->j > hi->j) std::swap(lo, hi);
      Int coeff = ka.second * kb.second;
      Expo w = expo_pull(hi->u, S.q_len(lo->j));
      long long step = S.tower.weyl_order(lvl);
      long long terms = ipow(S.tower.p, lvl - hi->j);
      for (long long g = 0; g < terms; ++g) {
        Expo sum = expo_shift(w, g * step);
        for (size_t i = 0; i < sum.size(); ++i) sum[i] += lo->u[i];
        acc(out, r_q(S, lvl, lo->j, sum, coeff));
      }
    }
  return out;
}

RElem r_res(const TambaraSystem &S, const RElem &a, int to) {
  if (to > a.level) throw std::invalid_argument("r_res: target above level");
  if (to == a.level) return a;
  int lvl = a.level;
  RElem out = r_zero(S, to);
  out.scalar = res(a.scalar, to);
  if (S.poly_level(lvl)) {
    for (const auto &kv : a.poly)
      acc(out, r_monomial(S, to, kv.first, res(kv.second, to)));
    return out;
  }
  for (const auto &kv : a.qpart) {
    int j = kv.first.j;
    int jm = std::min(j, to);
    long long terms = ipow(S.tower.p, lvl - std::max(j, to));
    long long step = S.tower.weyl_order(lvl);
    Expo base = kv.first.u;
    if (S.q_len(jm) != (long long)base.size()) base = expo_pull(base, S.q_len(jm));
    for (long long g = 0; g < terms; ++g) {
      Expo sh = expo_shift(base, g * step);
      if (S.poly_level(to)) {
        // lands in the polynomial ring with coefficient [C_{p^to}/C_{p^jm}]
        acc(out, r_monomial(S, to, sh,
                            BurnsideElem::basis(S.tower, to, jm).scaled(kv.second)));
      } else {
        acc(out, r_q(S, to, jm, sh, kv.second));
      }
    }
  }
  return out;
}

RElem r_tr(const TambaraSystem &S, const RElem &a, int to) {
  if (to < a.level) throw std::invalid_argument("r_tr: target below level");
  if (to == a.level) return a;
  int lvl = a.level;
  RElem out = r_zero(S, to);
  out.scalar = tr(a.scalar, to);
  if (S.poly_level(lvl)) {
    if (S.poly_level(to)) {
      for (const auto &kv : a.poly) out.poly[kv.first] = tr(kv.second, to);
    } else {
      for (const auto &kv : a.poly)
        for (int j = 0; j <= lvl; ++j)
          if (!kv.second.c[j].is_zero())
            acc(out, r_q(S, to, j, kv.first, kv.second.c[j]));
    }
    return out;
  }
  for (const auto &kv : a.qpart)
    acc(out, r_q(S, to, kv.first.j, kv.first.u, kv.second));
  return out;
}

RElem r_weyl(const TambaraSystem &S, const RElem &a, long long power) {
  RElem out = r_zero(S, a.level);
  out.scalar = a.scalar;
  for (const auto &kv : a.poly) {
    Expo e = expo_shift(kv.first, power);
    out.poly[e] = kv.second;
  }
  for (const auto &kv : a.qpart)
    acc(out, r_q(S, a.level, kv.first.j, expo_shift(kv.first.u, power), kv.second));
  return out;
}

RElem r_norm_monomial(const TambaraSystem &S, const RElem &a, int to) {
  if (!S.norms_available)
    throw std::domain_error("norm: no norms in this indexing category");
  if (to < a.level) throw std::invalid_argument("norm: target below level");
  int lvl = a.level;
  // pure Burnside element: coinduction of G-sets
  if (a.poly.empty() && a.qpart.empty()) {
    return r_from_burnside(S, norm(a.scalar, to));
  }
  if (!a.scalar.is_zero())
    throw std::domain_error("norm of a sum is out of scope");
  if (to == lvl) return a;
  RElem out = r_zero(S, to);
  if (S.poly_level(lvl)) {
    if (lvl < S.gen_level)
      throw std::domain_error("norm below the generator level is out of scope");
    if (a.poly.size() != 1) throw std::domain_error("norm of a sum is out of scope");
    const auto &kv = *a.poly.begin();
    Int c;
    if (kv.second == BurnsideElem::unit(S.tower, lvl))
      c = Int(1);
    else if (kv.second == BurnsideElem::unit(S.tower, lvl).scaled(Int(-1)))
      c = Int(-1);
    else
      throw std::domain_error("norm requires a unit coefficient");
    Expo w = expo_fold(kv.first, S.q_len(to));
    if (S.poly_level(to)) {
      // m = n only: nothing to fold
      return r_monomial(S, to, w, BurnsideElem::unit(S.tower, to).scaled(c));
    }
    return r_q(S, to, to, w, c);
  }
  if (a.qpart.size() != 1) throw std::domain_error("norm of a sum is out of scope");
  const auto &kv = *a.qpart.begin();
  if (kv.first.j != lvl)
    throw std::domain_error("norm of a transfer class is out of scope");
  if (!(kv.second.is_one() || kv.second == Int(-1)))
    throw std::domain_error("norm requires a unit coefficient");
  return r_q(S, to, to, expo_fold(kv.first.u, S.q_len(to)), kv.second);
}

BurnsideElem r_augment(const TambaraSystem &S, const RElem &a) {
  (void)S;
  return a.scalar;
}

long long q_degree(const TambaraSystem &S, const QKey &k) {
  return ipow(S.tower.p, std::max(k.j, S.gen_level) - S.gen_level) *
         (long long)expo_total(k.u);
}

std::optional<long long> r_degree(const TambaraSystem &S, const RElem &a) {
  std::optional<long long> d;
  auto meet = [&](long long v) -> bool {
    if (!d) {
      d = v;
      return true;
    }
    return *d == v;
  };
  if (!a.scalar.is_zero() && !meet(0)) return std::nullopt;
  for (const auto &kv : a.poly)
    if (!meet(expo_total(kv.first))) return std::nullopt;
  for (const auto &kv : a.qpart)
    if (!meet(q_degree(S, kv.first))) return std::nullopt;
  if (!d) d = 0;
  return d;
}

namespace {

std::string expo_str(const Expo &e, const char *var) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!first) os << " ";
    os << var << "(" << i << ")";
    if (e[i] != 1) os << "^" << e[i];
    first = false;
  }
  return os.str();
}

std::string q_name(const TambaraSystem &S, int level, const QKey &k) {
  std::ostringstream os;
  int m = S.gen_level, n = S.tower.n;
  if (k.j >= m && n - m <= 2) {
    // paper-style names: t / n for one step, t' / s / n' on the top of two
    int depth = level - m;     // 1 or 2 above the generator level
    int fam = k.j - m;         // 0: transferred monomial, else norms
    std::string nm;
    if (fam == 0)
      nm = depth == 1 ? "t" : "t'";
    else if (fam == 1 && k.j == level)
      nm = "n";
    else if (fam == 1)
      nm = "s";
    else
      nm = "n'";
    if ((fam == 1 && k.j == level && k.u.size() == 1) ||
        (fam == 2 && k.u.size() == 1)) {
      os << nm;
      if (k.u[0] != 1) os << "^" << k.u[0];
      return os.str();
    }
    if (fam == 0 || fam == 1) {
      os << nm << "_{";
      for (size_t i = 0; i < k.u.size(); ++i) {
        if (i) os << ",";
        os << k.u[i];
      }
      os << "}";
      return os.str();
    }
  }
  os << "q[" << k.j << "]_{";
  for (size_t i = 0; i < k.u.size(); ++i) {
    if (i) os << ",";
    os << k.u[i];
  }
  os << "}";
  return os.str();
}

} // namespace

std::string r_to_string(const TambaraSystem &S, const RElem &a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const std::string &coeff, const std::string &body, bool neg) {
    if (!first) os << (neg ? " - " : " + ");
    else if (neg)
      os << "-";
    first = false;
    if (!coeff.empty()) {
      os << coeff;
      if (!body.empty()) os << "*";
    }
    os << body;
  };
  if (!a.scalar.is_zero()) emit("", a.scalar.to_string(), false);
  for (const auto &kv : a.poly) {
    std::string c;
    bool neg = false;
    if (kv.second == BurnsideElem::unit(S.tower, a.level)) {
    } else if (kv.second == BurnsideElem::unit(S.tower, a.level).scaled(Int(-1))) {
      neg = true;
    } else {
      c = "(" + kv.second.to_string() + ")";
    }
    emit(c, expo_str(kv.first, "x"), neg);
  }
  for (const auto &kv : a.qpart) {
    std::string c;
    bool neg = kv.second.is_neg();
    Int v = neg ? -kv.second : kv.second;
    if (!v.is_one()) c = v.to_string();
    emit(c, q_name(S, a.level, kv.first), neg);
  }
  return os.str();
}

std::vector<Expo> compositions(long long length, long long total) {
  std::vector<Expo> out;
  Expo cur(length, 0);
  // iterative enumeration of weak compositions
  std::function<void(long long, long long)> rec = [&](long long pos, long long left) {
    if (pos == length - 1) {
      cur[pos] = (int)left;
      out.push_back(cur);
      return;
    }
    for (long long v = 0; v <= left; ++v) {
      cur[pos] = (int)v;
      rec(pos + 1, left - v);
    }
  };
  if (length == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  rec(0, total);
  return out;
}

RElem RBasis::element(int i) const {
  const RBasisEntry &e = entries[i];
  switch (e.kind) {
  case RBasisEntry::Scalar:
    return r_from_burnside(sys, BurnsideElem::basis(sys.tower, level, e.burnside_j));
  case RBasisEntry::Poly:
    return r_monomial(sys, level, e.mono,
                      BurnsideElem::basis(sys.tower, level, e.burnside_j));
  case RBasisEntry::Q:
  default: {
    RElem r = r_zero(sys, level);
    r.qpart[e.q] = Int(1);
    return r;
  }
  }
}

std::vector<Int> RBasis::expand(const RElem &e) const {
  std::vector<Int> out(entries.size(), Int(0));
  auto put = [&](int idx, const Int &v) { out[idx] += v; };
  for (int j = 0; j < (int)e.scalar.c.size(); ++j) {
    if (e.scalar.c[j].is_zero()) continue;
    auto it = scalar_index.find(j);
    if (it == scalar_index.end())
      throw std::logic_error("RBasis::expand: scalar outside slice");
    put(it->second, e.scalar.c[j]);
  }
  for (const auto &kv : e.poly) {
    for (int j = 0; j < (int)kv.second.c.size(); ++j) {
      if (kv.second.c[j].is_zero()) continue;
      auto it = poly_index.find({j, kv.first});
      if (it == poly_index.end())
        throw std::logic_error("RBasis::expand: monomial outside slice");
      put(it->second, kv.second.c[j]);
    }
  }
  for (const auto &kv : e.qpart) {
    auto it = q_index.find(kv.first);
    if (it == q_index.end())
      throw std::logic_error("RBasis::expand: q-class outside slice");
    put(it->second, kv.second);
  }
  return out;
}

RBasis r_basis_of_degree(const TambaraSystem &S, int level, long long d) {
  RBasis b;
  b.sys = S;
  b.level = level;
  b.degree = d;
  auto add_scalar = [&](int j) {
    b.scalar_index[j] = (int)b.entries.size();
    b.entries.push_back({RBasisEntry::Scalar, j, {}, {}});
  };
  auto add_poly = [&](int j, const Expo &e) {
    b.poly_index[{j, e}] = (int)b.entries.size();
    b.entries.push_back({RBasisEntry::Poly, j, e, {}});
  };
  auto add_q = [&](const QKey &k) {
    b.q_index[k] = (int)b.entries.size();
    b.entries.push_back({RBasisEntry::Q, 0, {}, k});
  };
  if (!S.has_generator) {
    if (d == 0)
      for (int j = 0; j <= level; ++j) add_scalar(j);
    return b;
  }
  if (S.poly_level(level)) {
    if (d == 0) {
      for (int j = 0; j <= level; ++j) add_scalar(j);
    } else {
      for (const auto &e : compositions(S.num_vars(), d))
        for (int j = 0; j <= level; ++j) add_poly(j, e);
    }
    return b;
  }
  if (d == 0) {
    for (int j = 0; j <= level; ++j) add_scalar(j);
    return b;
  }
  for (int j = 0; j <= level; ++j) {
    long long w = ipow(S.tower.p, std::max(j, S.gen_level) - S.gen_level);
    if (d % w) continue;
    for (const auto &u : compositions(S.q_len(j), d / w)) {
      if (expo_total(u) == 0) continue;
      if (canonical_orbit(S, level, j, u) != u) continue;
      add_q(QKey{j, u});
    }
  }
  return b;
}

} // namespace tamarack
