#include "doctest.h"

#include <random>
#include <stdexcept>

#include "tamarack/tambara.hpp"

using namespace tamarack;

namespace {

RElem q_elem(const TambaraSystem &S, int level, int j, const Expo &u,
             long long c = 1) {
  return r_q(S, level, j, u, Int(c));
}

// sparse random element with a handful of terms of degree <= maxdeg
RElem random_elem(std::mt19937 &rng, const TambaraSystem &S, int level,
                  long long maxdeg) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> nterms(1, 5);
  std::uniform_int_distribution<long long> deg(0, maxdeg);
  RElem out = r_zero(S, level);
  int terms = nterms(rng);
  for (int t = 0; t < terms; ++t) {
    RBasis b = r_basis_of_degree(S, level, deg(rng));
    if (b.size() == 0) continue;
    std::uniform_int_distribution<int> pick(0, b.size() - 1);
    int v = val(rng);
    if (v) out = r_add(out, r_scale(b.element(pick(rng)), Int(v)));
  }
  return out;
}

} // namespace

TEST_CASE("free C3 Tambara functor relations") {
  Tower t{3, 1};
  TambaraSystem S = TambaraSystem::free_tambara(t, 0);
  RElem t100 = q_elem(S, 1, 0, {1, 0, 0});
  RElem t110 = q_elem(S, 1, 0, {1, 1, 0});
  RElem t200 = q_elem(S, 1, 0, {2, 0, 0});
  RElem n = q_elem(S, 1, 1, {1});
  // t_100^2 = t_200 + 2 t_110
  CHECK(r_mul(S, t100, t100) == r_add(t200, r_scale(t110, Int(2))));
  // n t_ijk = t_{i+1,j+1,k+1}
  RElem t011 = q_elem(S, 1, 0, {2, 1, 1});
  CHECK(r_mul(S, n, t100) == t011);
  // t_000^2 = 3 t_000 holds in the Burnside part
  RElem t000 = r_from_burnside(S, BurnsideElem::basis(t, 1, 0));
  CHECK(r_mul(S, t000, t000) == r_scale(t000, Int(3)));
  // cyclic identification
  CHECK(q_elem(S, 1, 0, {0, 1, 1}) == q_elem(S, 1, 0, {1, 0, 1}));
}

TEST_CASE("restriction formulas") {
  Tower t{3, 1};
  TambaraSystem S = TambaraSystem::free_tambara(t, 0);
  RElem t100 = q_elem(S, 1, 0, {1, 0, 0});
  RElem sum = r_add(r_add(r_x(S, 0, 0), r_x(S, 0, 1)), r_x(S, 0, 2));
  CHECK(r_res(S, t100, 0) == sum);
  RElem n = q_elem(S, 1, 1, {1});
  CHECK(r_res(S, n, 0) == r_monomial(S, 0, {1, 1, 1}));
  CHECK(r_res(S, r_one(S, 1), 0) == r_one(S, 0));
}

TEST_CASE("transfer formulas") {
  Tower t{3, 1};
  TambaraSystem S = TambaraSystem::free_tambara(t, 0);
  CHECK(r_tr(S, r_monomial(S, 0, {1, 1, 0}), 1) == q_elem(S, 1, 0, {1, 1, 0}));
  CHECK(r_tr(S, r_one(S, 0), 1) ==
        r_from_burnside(S, BurnsideElem::basis(t, 1, 0)));
  Tower t9{3, 2};
  TambaraSystem S9 = TambaraSystem::free_tambara(t9, 0);
  RElem n0 = q_elem(S9, 1, 1, {1, 0, 0});
  CHECK(r_tr(S9, n0, 2) == q_elem(S9, 2, 1, {1, 0, 0}));
}

TEST_CASE("norms of monomials") {
  Tower t{3, 1};
  TambaraSystem S = TambaraSystem::free_tambara(t, 0);
  RElem x1 = r_x(S, 0, 1);
  CHECK(r_norm_monomial(S, x1, 1) == q_elem(S, 1, 1, {1}));
  CHECK(r_norm_monomial(S, r_one(S, 0), 1) == r_one(S, 1));
  Tower t9{3, 2};
  TambaraSystem S9 = TambaraSystem::free_tambara(t9, 0);
  CHECK(r_norm_monomial(S9, r_x(S9, 0, 0), 2) == q_elem(S9, 2, 2, {1}));
  // norm of a sum is out of scope
  RElem s = r_add(r_x(S, 0, 0), r_x(S, 0, 1));
  CHECK_THROWS_AS((void)r_norm_monomial(S, s, 1), std::domain_error);
  // norm of a transfer class is out of scope
  CHECK_THROWS_AS((void)r_norm_monomial(S9, q_elem(S9, 1, 0, {1, 0, 0, 0, 0, 0, 0, 0, 0}), 2),
                  std::domain_error);
}

TEST_CASE("augmentation") {
  Tower t{3, 1};
  TambaraSystem S = TambaraSystem::free_tambara(t, 0);
  CHECK(r_augment(S, q_elem(S, 1, 0, {1, 0, 0})).is_zero());
  RElem e = r_add(r_from_burnside(S, BurnsideElem::basis(t, 1, 0)),
                  r_from_int(S, 1, Int(2)));
  BurnsideElem expect(t, 1);
  expect.c[0] = Int(1);
  expect.c[1] = Int(2);
  CHECK(r_augment(S, e) == expect);
  CHECK(r_augment(S, q_elem(S, 1, 1, {1})).is_zero());
}

TEST_CASE("degreewise bases") {
  Tower t{3, 1};
  TambaraSystem S = TambaraSystem::free_tambara(t, 0);
  RBasis top3 = r_basis_of_degree(S, 1, 3);
  CHECK(top3.size() == 5); // t300 t210 t120 t111 n
  RBasis top0 = r_basis_of_degree(S, 1, 0);
  CHECK(top0.size() == 2); // Burnside basis of A(C_3)
  RBasis und2 = r_basis_of_degree(S, 0, 2);
  CHECK(und2.size() == 6);
  // expansion round trip
  for (int i = 0; i < top3.size(); ++i) {
    std::vector<Int> coords = top3.expand(top3.element(i));
    for (int j = 0; j < top3.size(); ++j)
      CHECK(coords[j] == Int(i == j ? 1 : 0));
  }
}

TEST_CASE("frobenius reciprocity and double coset, randomized") {
  std::mt19937 rng(17);
  for (const Tower &t : {Tower{3, 1}, Tower{3, 2}}) {
    TambaraSystem S = TambaraSystem::free_tambara(t, 0);
    for (int rep = 0; rep < 40; ++rep) {
      int hi = t.n, lo = t.n - 1;
      RElem y = random_elem(rng, S, hi, 3);
      RElem a = random_elem(rng, S, lo, 3);
      CHECK(r_tr(S, r_mul(S, r_res(S, y, lo), a), hi) ==
            r_mul(S, y, r_tr(S, a, hi)));
      // res tr = sum of Weyl translates over the index-p subgroup
      RElem rt = r_res(S, r_tr(S, a, hi), lo);
      RElem sum = r_zero(S, lo);
      long long step = t.weyl_order(hi);
      for (int i = 0; i < t.p; ++i)
        sum = r_add(sum, r_weyl(S, a, i * step));
      CHECK(rt == sum);
    }
  }
}

TEST_CASE("normal form is confluent against the underlying polynomial model") {
  std::mt19937 rng(19);
  for (const Tower &t : {Tower{3, 1}, Tower{5, 1}, Tower{3, 2}}) {
    TambaraSystem S = TambaraSystem::free_tambara(t, 0);
    for (int rep = 0; rep < 25; ++rep) {
      for (int level = 1; level <= t.n; ++level) {
        RElem a = random_elem(rng, S, level, 4);
        RElem b = random_elem(rng, S, level, 4);
        RElem prod = r_mul(S, a, b);
        CHECK(r_res(S, prod, 0) ==
              r_mul(S, r_res(S, a, 0), r_res(S, b, 0)));
        // res is a ring homomorphism to every lower level
        for (int to = 0; to < level; ++to)
          CHECK(r_res(S, prod, to) ==
                r_mul(S, r_res(S, a, to), r_res(S, b, to)));
      }
    }
  }
}

TEST_CASE("weyl action basics") {
  Tower t{3, 2};
  TambaraSystem S = TambaraSystem::free_tambara(t, 0);
  RElem a = q_elem(S, 1, 0, {1, 2, 0, 0, 0, 0, 0, 0, 0});
  // order divides the Weyl group order
  CHECK(r_weyl(S, a, t.weyl_order(1)) == a);
  // top level: full cyclic identification makes the action trivial
  RElem b = q_elem(S, 2, 0, {1, 2, 0, 0, 0, 0, 0, 0, 0});
  CHECK(r_weyl(S, b, 1) == b);
  // degree bookkeeping
  CHECK(*r_degree(S, a) == 3);
  CHECK(*r_degree(S, r_tr(S, a, 2)) == 3);
  CHECK(*r_degree(S, r_norm_monomial(S, r_x(S, 0, 0), 2)) == 9);
}

TEST_CASE("green fixed-generator system") {
  Tower t{3, 1};
  TambaraSystem S = TambaraSystem::free_green_fixed(t);
  RElem x = r_x(S, 1, 0);
  CHECK(r_res(S, x, 0) == r_x(S, 0, 0));
  // tr(a x^i) = tr(a) x^i
  RElem ax = r_monomial(S, 0, {2}, BurnsideElem::unit(t, 0).scaled(Int(5)));
  RElem up = r_tr(S, ax, 1);
  CHECK(up == r_monomial(S, 1, {2},
                         BurnsideElem::basis(t, 1, 0).scaled(Int(5))));
  CHECK_THROWS_AS((void)r_norm_monomial(S, r_x(S, 0, 0), 1), std::domain_error);
}
