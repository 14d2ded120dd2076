#include "doctest.h"

#include <random>

#include "tamarack/intmat.hpp"

using namespace tamarack;

namespace {

IntMat random_mat(std::mt19937 &rng, int r, int c, int lo = -9, int hi = 9,
                  double density = 0.7) {
  std::uniform_int_distribution<int> val(lo, hi);
  std::uniform_real_distribution<double> keep(0.0, 1.0);
  IntMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (keep(rng) < density) {
        int v = val(rng);
        if (v) m.set(i, j, Int(v));
      }
  return m;
}

} // namespace

TEST_CASE("hnf: M u = h with echelon pivots") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 80; ++trial) {
    IntMat m = random_mat(rng, 5, 7);
    HnfResult h = hnf_cols(m);
    CHECK(m * h.u == h.h);
    int prev = -1;
    for (const auto &pc : h.pivots) {
      CHECK(pc.first > prev);
      prev = pc.first;
      CHECK(!h.h.get(pc.first, pc.second).is_zero());
      // entries above a pivot vanish
      for (const auto &e : h.h.col[pc.second]) CHECK(e.first >= pc.first);
    }
  }
}

TEST_CASE("kernel basis spans the kernel") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    IntMat m = random_mat(rng, 4, 6);
    IntMat k = kernel_basis(m);
    CHECK((m * k).is_zero());
    // completeness: rank(kernel) + rank(m) == cols
    CHECK(hnf_cols(k, false).rank() + hnf_cols(m, false).rank() == m.cols);
  }
}

TEST_CASE("solver finds integer solutions when they exist") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    IntMat m = random_mat(rng, 5, 4);
    std::vector<Int> x0;
    std::uniform_int_distribution<int> val(-4, 4);
    for (int j = 0; j < 4; ++j) x0.push_back(Int(val(rng)));
    std::vector<Int> b = m.apply(x0);
    std::vector<Int> x;
    REQUIRE(solve(m, b, x));
    CHECK(m.apply(x) == b);
  }
  // an unsolvable system
  IntMat m = IntMat::from_rows({{2}});
  std::vector<Int> x;
  CHECK(!solve(m, {Int(3)}, x));
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMat::from_rows({{2, 0}, {0, 6}})).factors ==
        std::vector<Int>{Int(2), Int(6)});
  CHECK(snf(IntMat::from_rows({{2, 4}, {6, 8}})).factors ==
        std::vector<Int>{Int(2), Int(4)});
  CHECK(snf(IntMat(3, 3)).factors.empty());
}

TEST_CASE("snf agrees with the dense full-pivot reference") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> dim(1, 8);
  for (int trial = 0; trial < 60; ++trial) {
    IntMat m = random_mat(rng, dim(rng), dim(rng));
    CHECK(snf(m).factors == snf_reference(m));
  }
}

TEST_CASE("snf transforms diagonalize") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    IntMat m = random_mat(rng, 4, 5);
    SnfResult s = snf(m, true);
    IntMat d = s.u * m * s.v;
    // check diagonal with the invariant factors
    for (int j = 0; j < d.cols; ++j)
      for (const auto &e : d.col[j]) {
        CHECK(e.first == j);
        CHECK(e.second == s.factors[j]);
      }
  }
}

TEST_CASE("cokernel invariants") {
  // Z^2 / <(2,0),(0,6)> = Z/2 + Z/6
  AbGroup g = cokernel_invariants(IntMat::from_rows({{2, 0}, {0, 6}}), 2);
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<Int>{Int(2), Int(6)});
  AbGroup h = cokernel_invariants(IntMat(3, 0), 3);
  CHECK(h.free_rank == 3);
  CHECK(h.to_string() == "Z^3");
}
