#include "doctest.h"

#include "tamarack/complexes.hpp"

using namespace tamarack;

TEST_CASE("the C3 Koszul lift matches the worked differentials") {
  ChainComplex k = build_cp_lift(3);
  REQUIRE(k.length() == 3);
  CHECK(k.mods[0].generating_gset().counts == std::map<int, long long>{{1, 1}});
  CHECK(k.mods[1].generating_gset().counts == std::map<int, long long>{{0, 1}});
  CHECK(k.mods[2].generating_gset().counts == std::map<int, long long>{{0, 1}});
  CHECK(k.mods[3].generating_gset().counts == std::map<int, long long>{{1, 1}});
  const TambaraSystem &S = k.sys;
  // d2 at the top: tr(z0^z1) -> (x2 - x1) tr(z0)
  ModElem trz01 = mod_tr(k.mods[2], mod_gen(k.mods[2], 0), 1);
  ModElem im = apply_hom(k.d[2], trz01);
  ModElem expect = mod_zero(k.mods[1], 1);
  {
    RElem coeff = r_sub(r_x(S, 0, 2), r_x(S, 0, 1));
    ModElem tmp = mod_zero(k.mods[1], 0);
    mod_add_term(k.mods[1], tmp, 0, 0, coeff);
    expect = mod_tr(k.mods[1], tmp, 1);
  }
  CHECK(im == expect);
  // d3 at the top: N(z) -> x2 tr(z0 ^ z1)
  ModElem im3 = apply_hom(k.d[3], mod_gen(k.mods[3], 0));
  ModElem expect3;
  {
    ModElem tmp = mod_zero(k.mods[2], 0);
    mod_add_term(k.mods[2], tmp, 0, 0, r_x(S, 0, 2));
    expect3 = mod_tr(k.mods[2], tmp, 1);
  }
  CHECK(im3 == expect3);
  CHECK(complex_squares_to_zero(k));
}

TEST_CASE("the C5 lift has the binomial generator counts") {
  ChainComplex k = build_cp_lift(5);
  CHECK(k.mods[2].num_gens() == 2); // C(5,2)/5
  CHECK(k.mods[3].num_gens() == 2);
  CHECK(k.mods[4].num_gens() == 1);
  CHECK(complex_squares_to_zero(k));
}

TEST_CASE("p = 2 is rejected by the wedge constructions") {
  CHECK_THROWS(build_cp_lift(2));
  CHECK_THROWS((void)build_general(Tower{2, 1}, 0));
  // but the fixed-level generator is fine
  MultiComplex g = build_general(Tower{2, 1}, 1);
  CHECK(g.cells.size() == 2);
}

TEST_CASE("divided complex and the comparison map") {
  ChainComplex kdiv = build_cp_divided(3);
  ChainComplex k = build_cp_lift(3);
  CHECK(complex_squares_to_zero(kdiv));
  const TambaraSystem &S = k.sys;
  // divided differentials carry unit coefficients
  ModElem d1 = apply_hom(kdiv.d[1], mod_gen(kdiv.mods[1], 0));
  ModElem expect = mod_zero(kdiv.mods[0], 0);
  mod_add_term(kdiv.mods[0], expect, 0, 0, r_one(S, 0));
  CHECK(d1 == expect);
  // chain map property of the comparison
  std::vector<ModHom> f = build_cp_comparison(kdiv, k);
  for (int i = 1; i <= 3; ++i) {
    ModHom lhs = compose(f[i - 1], kdiv.d[i]);
    ModHom rhs = compose(k.d[i], f[i]);
    for (size_t g = 0; g < lhs.images.size(); ++g)
      CHECK(mod_sub(lhs.images[g], rhs.images[g]).is_zero());
  }
  // f in degree 1 multiplies by the complementary variables
  ModElem f1 = apply_hom(f[1], mod_gen(kdiv.mods[1], 0));
  ModElem ex = mod_zero(k.mods[1], 0);
  mod_add_term(k.mods[1], ex, 0, 0, r_monomial(S, 0, {0, 1, 1}));
  CHECK(f1 == ex);
  // f at the top is the identity on the generator
  ModElem ftop = apply_hom(f[3], mod_gen(kdiv.mods[3], 0));
  CHECK(ftop == mod_gen(k.mods[3], 0));
}

TEST_CASE("general grid at (3,1) reproduces the lift along the first axis") {
  MultiComplex g = build_general(Tower{3, 1}, 0);
  ChainComplex k = build_cp_lift(3);
  for (int i = 0; i <= 3; ++i) {
    const FreeModule *cell = g.cell({i, 0});
    REQUIRE(cell);
    CHECK(cell->generating_gset() == k.mods[i].generating_gset());
  }
  for (int i = 1; i <= 3; ++i) {
    const ModHom *d = g.differential({i, 0}, 0);
    REQUIRE(d);
    for (int gi = 0; gi < k.mods[i].num_gens(); ++gi) {
      // same canonical generators in the same order
      CHECK(d->images[gi].terms == k.d[i].images[gi].terms);
    }
  }
}

TEST_CASE("C9 tricomplex: cells, corners, and sample differentials") {
  MultiComplex mc = build_c9_tricomplex();
  Tower t{3, 2};
  // generating sets of the first row follow the wedge table
  CHECK(mc.cell({3, 0, 0})->generating_gset().counts ==
        std::map<int, long long>{{0, 9}, {1, 1}});
  CHECK(mc.cell({3, 1, 0})->generating_gset().counts ==
        std::map<int, long long>{{0, 27}, {1, 3}});
  CHECK(mc.cell({9, 3, 1})->generating_gset().counts ==
        std::map<int, long long>{{2, 1}});
  CHECK(mc.cell({0, 3, 0})->generating_gset().counts ==
        std::map<int, long long>{{2, 1}});
  const TambaraSystem &S = mc.sys;
  // d_{0,0,1}(v) = nm(x) at the top
  {
    const ModHom *d = mc.differential({0, 0, 1}, 2);
    REQUIRE(d);
    ModElem expect = mod_zero(*mc.cell({0, 0, 0}), 2);
    mod_add_term(*mc.cell({0, 0, 0}), expect, 0, 0, r_q(S, 2, 2, {1}, Int(1)));
    CHECK(d->images[0] == expect);
  }
  // find the generator z{0,1,3}^u{0} in cell (3,1,0) and check the
  // vertical differential x^(6) z{0,1,3}
  {
    const auto &meta = mc.meta.at({3, 1, 0});
    int idx = -1;
    for (int i = 0; i < (int)meta.size(); ++i) {
      if (meta[i].tuple.idx[0] == std::vector<int>{0, 1, 3} &&
          meta[i].tuple.idx[1] == std::vector<int>{0})
        idx = i;
    }
    REQUIRE(idx >= 0);
    const ModHom *d = mc.differential({3, 1, 0}, 1);
    REQUIRE(d);
    const auto &dmeta = mc.meta.at({3, 0, 0});
    int target = -1;
    for (int i = 0; i < (int)dmeta.size(); ++i)
      if (dmeta[i].tuple.idx[0] == std::vector<int>{0, 1, 3}) target = i;
    REQUIRE(target >= 0);
    ModElem expect = mod_zero(*mc.cell({3, 0, 0}), 0);
    mod_add_term(*mc.cell({3, 0, 0}), expect, target, 0, r_x(S, 0, 6));
    CHECK(d->images[idx] == expect);
  }
  // the (0,3,0) corner: d_{0,1,0}(N(u)) = tr(nm(x) * u-wedge translate)
  {
    const ModHom *d = mc.differential({0, 3, 0}, 1);
    REQUIRE(d);
    const FreeModule &dst = *mc.cell({0, 2, 0});
    ModElem tmp = mod_zero(dst, 1);
    mod_add_term(dst, tmp, 0, 1, r_q(S, 1, 1, {1, 0, 0}, Int(1)));
    CHECK(d->images[0] == mod_tr(dst, tmp, 2));
  }
}

TEST_CASE("C9 tricomplex agrees with the general construction") {
  MultiComplex a = build_c9_tricomplex();
  MultiComplex b = build_general(Tower{3, 2}, 0);
  REQUIRE(a.cells.size() == b.cells.size());
  for (const auto &kv : a.cells) {
    const FreeModule *other = b.cell(kv.first);
    REQUIRE(other);
    CHECK(kv.second.generating_gset() == other->generating_gset());
  }
  for (const auto &kv : a.diff) {
    const ModHom *other = b.differential(kv.first.first, kv.first.second);
    REQUIRE(other);
    for (size_t g = 0; g < kv.second.images.size(); ++g)
      CHECK(kv.second.images[g].terms == other->images[g].terms);
  }
}

TEST_CASE("totalized lengths follow the geometric sum") {
  ChainComplex t31 = totalize(build_general(Tower{3, 1}, 0));
  CHECK(t31.length() == 4);
  CHECK(complex_squares_to_zero(t31));
  ChainComplex t32 = totalize(build_general(Tower{3, 2}, 0));
  CHECK(t32.length() == 13);
  ChainComplex green = totalize(build_general(Tower{3, 1}, 1));
  CHECK(green.length() == 1);
}

TEST_CASE("totalization of a single row is the row itself") {
  MultiComplex g = build_general(Tower{3, 1}, 0);
  // restrict to the bottom row as its own grid
  MultiComplex row;
  row.sys = g.sys;
  row.dims = 2;
  for (const auto &kv : g.cells)
    if (kv.first[1] == 0) {
      row.cells.emplace(kv.first, kv.second);
      row.meta.emplace(kv.first, g.meta.at(kv.first));
    }
  for (const auto &kv : g.diff)
    if (kv.first.first[1] == 0 && kv.first.second == 0) {
      ModHom h;
      std::vector<int> w = kv.first.first;
      --w[0];
      h.source = &row.cells.at(kv.first.first);
      h.target = &row.cells.at(w);
      h.images = kv.second.images;
      row.diff[kv.first] = std::move(h);
    }
  ChainComplex tot = totalize(row);
  ChainComplex lift = build_cp_lift(3);
  REQUIRE(tot.length() == lift.length());
  for (int i = 1; i <= tot.length(); ++i)
    for (int gi = 0; gi < tot.mods[i].num_gens(); ++gi)
      CHECK(tot.d[i].images[gi].terms == lift.d[i].images[gi].terms);
}

TEST_CASE("base change kills the lift differentials but not the divided ones") {
  ChainComplex k = base_change(build_cp_lift(3));
  for (int i = 1; i <= 3; ++i) CHECK(k.d[i].is_zero());
  ChainComplex kdiv = base_change(build_cp_divided(3));
  CHECK(!kdiv.d[1].is_zero());
  CHECK(!kdiv.d[2].is_zero());
  CHECK(complex_squares_to_zero(kdiv));
  // base change of the identity is the identity
  ChainComplex cone = build_cp_cone(3);
  ChainComplex bc = base_change(cone);
  CHECK(complex_squares_to_zero(bc));
}

TEST_CASE("degrees are homogeneous across every built differential") {
  for (const Tower &t : {Tower{3, 1}, Tower{5, 1}}) {
    MultiComplex g = build_general(t, 0);
    for (const auto &kv : g.diff) {
      const ModHom &h = kv.second;
      for (int gi = 0; gi < h.source->num_gens(); ++gi) {
        long long d = h.source->gens[gi].degree;
        for (const auto &term : h.images[gi].terms) {
          const ModGen &tg = h.target->gens[term.first.first];
          auto cd = r_degree(h.target->sys, term.second);
          REQUIRE(cd.has_value());
          CHECK(tg.degree + *cd == d);
        }
      }
    }
  }
}
