#include "tamarack/group_lattice.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tamarack {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long long Tower::order(int k) const {
  assert(valid_level(k));
  return ipow(p, k);
}

long long Tower::weyl_order(int k) const {
  assert(valid_level(k));
  return ipow(p, n - k);
}

void GSet::add(int level, long long mult) {
  if (mult == 0) return;
  counts[level] += mult;
  if (counts[level] == 0) counts.erase(level);
}

long long GSet::cardinality(const Tower &t) const {
  long long c = 0;
  for (const auto &kv : counts) c += kv.second * t.weyl_order(kv.first);
  return c;
}

std::string GSet::to_string(const Tower &t) const {
  if (counts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print top orbits first
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (!first) os << " + ";
    if (it->second != 1) os << it->second << "(";
    os << "C" << t.order(t.n) << "/";
    if (it->first == 0)
      os << "e";
    else
      os << "C" << t.order(it->first);
    if (it->second != 1) os << ")";
    first = false;
  }
  return os.str();
}

GSet orbit_product(const Tower &t, int a, int b) {
  assert(t.valid_level(a) && t.valid_level(b));
  GSet g;
  g.add(std::min(a, b), ipow(t.p, t.n - std::max(a, b)));
  return g;
}

int sort_parity(std::vector<int> v) {
  int sign = 1;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j)
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
  return sign;
}

CanonSet canonicalize_set(const std::vector<int> &set, long long M) {
  CanonSet out;
  if (set.empty()) return out;
  std::vector<int> best;
  int best_shift = 0;
  for (int s : set) {
    std::vector<int> cand;
    cand.reserve(set.size());
    for (int i : set) cand.push_back(int(((i - s) % M + M) % M));
    std::sort(cand.begin(), cand.end());
    if (best.empty() || cand < best) {
      best = cand;
      best_shift = s;
    }
  }
  out.canon = best;
  out.shift = best_shift;
  std::vector<int> shifted;
  shifted.reserve(best.size());
  for (int c : out.canon) shifted.push_back(int((c + best_shift) % M));
  out.sign = sort_parity(shifted);
  return out;
}

long long set_stabilizer_order(const std::vector<int> &set, long long M, int p) {
  if (set.empty()) return M;
  std::vector<int> s = set;
  std::sort(s.begin(), s.end());
  // smallest translation step fixing the set generates the stabilizer
  for (long long step = 1; step < M; step *= p) {
    std::vector<int> sh;
    sh.reserve(s.size());
    for (int i : s) sh.push_back(int((i + step) % M));
    std::sort(sh.begin(), sh.end());
    if (sh == s) return M / step;
  }
  return 1;
}

std::vector<std::vector<int>> subsets_of_size(long long M, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > M) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == M - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  if (k == 0) out.assign(1, {});
  return out;
}

WedgeDecomposition wedge_orbit_decomposition(const Tower &t, int level, int k) {
  assert(t.valid_level(level) && k >= 0);
  WedgeDecomposition out;
  long long M = t.weyl_order(level); // |C_{p^n}/C_{p^level}|
  if (k > M) return out;
  if (k == 0) {
    out.orbits.add(t.n, 1);
    out.generators.push_back({{}, t.n});
    return out;
  }
  std::vector<std::vector<int>> seen;
  for (const auto &s : subsets_of_size(M, k)) {
    CanonSet c = canonicalize_set(s, M);
    if (c.canon != s) continue; // not the canonical representative
    long long stab = set_stabilizer_order(s, M, t.p);
    int stab_exp = level;
    long long q = stab;
    while (q > 1) {
      q /= t.p;
      ++stab_exp;
    }
    out.orbits.add(stab_exp, 1);
    out.generators.push_back({s, stab_exp});
  }
  return out;
}

std::vector<int> incidence_set(const std::vector<int> &I, long long Mi,
                               const std::vector<int> &J, long long Mj) {
  assert(Mi % Mj == 0 || Mj == 1);
  std::vector<int> out;
  for (int i : I) {
    int c = coset_of(i, Mj);
    if (std::find(J.begin(), J.end(), c) != J.end()) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace tamarack
