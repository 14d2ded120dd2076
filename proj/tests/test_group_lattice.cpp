#include "doctest.h"

#include <set>

#include "tamarack/group_lattice.hpp"

using namespace tamarack;

namespace {

// brute-force orbit count of C_{p^n}/C_{p^a} x C_{p^n}/C_{p^b} under the
// diagonal translation action
GSet orbit_product_oracle(const Tower &t, int a, int b) {
  long long Ma = t.weyl_order(a), Mb = t.weyl_order(b), N = t.weyl_order(0);
  std::set<std::pair<long long, long long>> seen;
  GSet out;
  for (long long x = 0; x < Ma; ++x)
    for (long long y = 0; y < Mb; ++y) {
      if (seen.count({x, y})) continue;
      long long size = 0;
      for (long long g = 0; g < N; ++g) {
        auto pt = std::make_pair((x + g) % Ma, (y + g) % Mb);
        if (!seen.count(pt)) {
          seen.insert(pt);
          ++size;
        }
      }
      // orbit size p^(n-k) determines the level k
      int k = t.n;
      long long s = size;
      while (s > 1) {
        s /= t.p;
        --k;
      }
      out.add(k, 1);
    }
  return out;
}

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

} // namespace

TEST_CASE("weyl group orders") {
  CHECK(Tower{3, 2}.weyl_order(1) == 3);
  CHECK(Tower{3, 2}.weyl_order(2) == 1);
  CHECK(Tower{5, 1}.weyl_order(0) == 5);
}

TEST_CASE("orbit products") {
  Tower c9{3, 2};
  GSet point = orbit_product(c9, 2, 1);
  CHECK(point.counts == std::map<int, long long>{{1, 1}});
  Tower c3{3, 1};
  GSet free3 = orbit_product(c3, 0, 0);
  CHECK(free3.counts == std::map<int, long long>{{0, 3}});
  GSet mid = orbit_product(c9, 1, 1);
  CHECK(mid.counts == std::map<int, long long>{{1, 3}});
  // against the enumeration oracle, all pairs on two towers
  for (const Tower &t : {Tower{3, 2}, Tower{5, 1}})
    for (int a = 0; a <= t.n; ++a)
      for (int b = 0; b <= t.n; ++b)
        CHECK(orbit_product(t, a, b) == orbit_product_oracle(t, a, b));
  // cardinality multiplicativity
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      CHECK(orbit_product(c9, a, b).cardinality(c9) ==
            c9.weyl_order(a) * c9.weyl_order(b));
}

TEST_CASE("wedge orbit decomposition for C9") {
  Tower t{3, 2};
  // multiplicities of (wedge^k of the free orbit)/Sigma_k
  std::map<int, std::map<int, long long>> expected = {
      {1, {{0, 1}}},         {2, {{0, 4}}},  {3, {{0, 9}, {1, 1}}},
      {4, {{0, 14}}},        {5, {{0, 14}}}, {6, {{0, 9}, {1, 1}}},
      {7, {{0, 4}}},         {8, {{0, 1}}},  {9, {{2, 1}}},
  };
  for (const auto &kv : expected) {
    WedgeDecomposition w = wedge_orbit_decomposition(t, 0, kv.first);
    CHECK(w.orbits.counts == kv.second);
  }
  CHECK(wedge_orbit_decomposition(t, 0, 10).orbits.empty());
  // binomial mass: sum of orbit sizes = C(9, k)
  for (int k = 0; k <= 9; ++k) {
    WedgeDecomposition w = wedge_orbit_decomposition(t, 0, k);
    CHECK(w.orbits.cardinality(t) == binom(9, k));
  }
  // canonical representatives ascend and contain 0
  WedgeDecomposition w3 = wedge_orbit_decomposition(t, 0, 3);
  for (const auto &g : w3.generators) {
    REQUIRE(!g.index_set.empty());
    CHECK(g.index_set.front() == 0);
    for (size_t i = 1; i < g.index_set.size(); ++i)
      CHECK(g.index_set[i - 1] < g.index_set[i]);
  }
}

TEST_CASE("wedge orbits are free away from symmetric degrees") {
  Tower t{5, 1};
  for (int k = 1; k <= 4; ++k) {
    WedgeDecomposition w = wedge_orbit_decomposition(t, 0, k);
    for (const auto &g : w.generators) CHECK(g.stabilizer == 0);
    CHECK(w.orbits.counts.at(0) == binom(5, k) / 5);
  }
  WedgeDecomposition top = wedge_orbit_decomposition(t, 0, 5);
  CHECK(top.orbits.counts == std::map<int, long long>{{1, 1}});
}

TEST_CASE("incidence sets") {
  CHECK(incidence_set({0, 1, 3}, 9, {0}, 3) == std::vector<int>{0, 3});
  CHECK(incidence_set({0, 1, 3}, 9, {}, 3).empty());
  std::vector<int> all;
  for (int i = 0; i < 9; ++i) all.push_back(i);
  CHECK(incidence_set(all, 9, {0, 1, 2}, 3) == all);
  // monotone and contained in I
  std::vector<int> inc = incidence_set({0, 2, 4, 6}, 9, {0, 1}, 3);
  for (int i : inc)
    CHECK(std::find(all.begin(), all.end(), i) != all.end());
  CHECK(inc == std::vector<int>{0, 4, 6});
}

TEST_CASE("canonical set representatives carry consistent signs") {
  // translating {1,2} of Z/3 to the canonical {0,1}
  CanonSet c = canonicalize_set({1, 2}, 3);
  CHECK(c.canon == std::vector<int>{0, 1});
  CHECK(c.shift == 1);
  // parity of sorting (1,2) is even
  CHECK(c.sign == 1);
  CanonSet d = canonicalize_set({2, 0}, 3);
  CHECK(d.canon == std::vector<int>{0, 1});
  // stabilizer orders
  CHECK(set_stabilizer_order({0, 3, 6}, 9, 3) == 3);
  CHECK(set_stabilizer_order({0, 1}, 9, 3) == 1);
  CHECK(set_stabilizer_order({0, 1, 2}, 3, 3) == 3);
}
