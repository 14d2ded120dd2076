#include "doctest.h"

#include "tamarack/mackey.hpp"

using namespace tamarack;

namespace {

GSet single(int level) {
  GSet g;
  g.add(level, 1);
  return g;
}

} // namespace

TEST_CASE("free Mackey functor levels and maps") {
  Tower t{3, 1};
  MackeyPresentation ae = free_mackey(t, single(0));
  CHECK(ae.gens(0) == 3);
  CHECK(ae.gens(1) == 1);
  // res(tr z) = z0 + z1 + z2
  CHECK(ae.res_[1].to_string() == "[1]\n[1]\n[1]");
  CHECK(check_axioms(ae).empty());
  Tower t9{3, 2};
  MackeyPresentation mid = free_mackey(t9, single(1));
  CHECK(mid.gens(0) == 3);
  CHECK(mid.gens(1) == 6);
  CHECK(mid.gens(2) == 2);
  CHECK(check_axioms(mid).empty());
  MackeyPresentation a = free_mackey(t9, single(2));
  CHECK(a.gens(2) == 3); // the Burnside ring of C9
  CHECK(check_axioms(a).empty());
}

TEST_CASE("axioms catch corrupted data") {
  Tower t{3, 1};
  MackeyPresentation ae = free_mackey(t, single(0));
  ae.tr_[1].add_to(0, 1, Int(1)); // break the transfer
  CHECK(!check_axioms(ae).empty());
}

TEST_CASE("named functors satisfy the axioms") {
  Tower t9{3, 2};
  CHECK(check_axioms(constant_z(t9)).empty());
  CHECK(check_axioms(inflation_z(t9)).empty());
  CHECK(check_axioms(l_functor(t9)).empty());
  CHECK(check_axioms(augmentation_ideal(t9)).empty());
  // tr res = 3 at the top of L
  MackeyPresentation L = l_functor(t9);
  IntMat tr_res = L.tr_[2] * L.res_[2];
  CHECK(tr_res == IntMat::from_rows({{3}}));
  // groups of the named functors
  CHECK(constant_z(t9).group_at(0).to_string() == "Z");
  CHECK(l_functor(t9).group_at(1).to_string() == "Z/3 + Z/3 + Z/3");
  CHECK(l_functor(t9).group_at(0).is_zero());
  MackeyPresentation I = augmentation_ideal(t9);
  CHECK(I.group_at(0).is_zero());
  CHECK(I.group_at(1).to_string() == "Z");
  CHECK(I.group_at(2).to_string() == "Z^2");
}

TEST_CASE("zbar free module has constant levels") {
  Tower t9{3, 2};
  MackeyPresentation zb = minimized(zbar_free(t9, 1));
  CHECK(zb.group_at(0).to_string() == "Z^3");
  CHECK(zb.group_at(1).to_string() == "Z^3");
  CHECK(zb.group_at(2).to_string() == "Z");
  CHECK(check_axioms(zb).empty());
  MackeyPresentation q = free_quotient_by_res(t9, 1, 0);
  CHECK(q.group_at(0).is_zero());
  CHECK(q.group_at(1).to_string() == "Z^3");
  CHECK(q.group_at(2).to_string() == "Z");
  // they are genuinely different objects
  CHECK(!(fingerprint(zb) == fingerprint(q)));
}

TEST_CASE("homology of the zero pair returns the object") {
  Tower t{3, 1};
  MackeyPresentation ae = free_mackey(t, single(0));
  Cell h = cell_homology(ae, {}, {}, nullptr);
  CHECK(fingerprint(h.P) == fingerprint(ae));
  auto iso = find_isomorphism(h.P, ae);
  CHECK(iso.has_value());
}

TEST_CASE("homology of multiplication by p on the constant functor") {
  Tower t{3, 1};
  MackeyPresentation z = constant_z(t);
  MackeyMorphism three = identity_morphism(z);
  for (auto &m : three.m) m = m.scaled(Int(3));
  Cell h = cell_homology(z, three.m, {}, nullptr);
  minimize_cell(h);
  CHECK(h.P.group_at(0).to_string() == "Z/3");
  CHECK(h.P.group_at(1).to_string() == "Z/3");
  // res is the identity on the quotients
  CHECK(check_axioms(h.P).empty());
}

TEST_CASE("fingerprints separate the catalog") {
  Tower t{3, 1};
  Catalog cat3 = Catalog::standard(t);
  for (size_t i = 0; i < cat3.entries.size(); ++i)
    for (size_t j = i + 1; j < cat3.entries.size(); ++j)
      CHECK(!(fingerprint(cat3.entries[i].P) == fingerprint(cat3.entries[j].P)));
  REQUIRE(cat3.find("A") != nullptr);
  CHECK(!(fingerprint(*cat3.find("A")) == fingerprint(constant_z(t))));
  Tower t9{3, 2};
  Catalog cat9 = Catalog::standard(t9);
  for (size_t i = 0; i < cat9.entries.size(); ++i)
    for (size_t j = i + 1; j < cat9.entries.size(); ++j)
      CHECK(!(fingerprint(cat9.entries[i].P) == fingerprint(cat9.entries[j].P)));
}

TEST_CASE("direct sums add levelwise invariants") {
  Tower t{3, 2};
  MackeyPresentation a = l_functor(t);
  MackeyPresentation b = constant_z(t);
  MackeyPresentation s = direct_sum(a, b);
  for (int k = 0; k <= 2; ++k) {
    AbGroup ga = a.group_at(k), gb = b.group_at(k), gs = s.group_at(k);
    CHECK(gs.free_rank == ga.free_rank + gb.free_rank);
    CHECK(gs.torsion.size() == ga.torsion.size() + gb.torsion.size());
  }
  CHECK(check_axioms(s).empty());
}

TEST_CASE("match_catalog identifies direct sums with certificates") {
  Tower t{3, 1};
  Catalog cat = Catalog::standard(t);
  // zero module
  MackeyPresentation zero;
  zero.tower = t;
  zero.levels.resize(2);
  zero.res_.resize(2);
  zero.tr_.resize(2);
  zero.weyl_.resize(2);
  for (int k = 0; k <= 1; ++k) {
    zero.levels[k].gens = 0;
    zero.levels[k].rels = IntMat(0, 0);
    zero.weyl_[k] = IntMat(0, 0);
  }
  zero.res_[1] = IntMat(0, 0);
  zero.tr_[1] = IntMat(0, 0);
  MatchResult mz = match_catalog(zero, cat);
  CHECK(mz.identified);
  CHECK(mz.names.empty());
  // A{C3/e} + I
  MackeyPresentation m =
      direct_sum(free_mackey(t, single(0)), augmentation_ideal(t));
  MatchResult r = match_catalog(m, cat);
  REQUIRE(r.identified);
  REQUIRE(r.names.size() == 2);
  CHECK(r.names[0].first == "A{C3/e}");
  CHECK(r.names[0].second == 1);
  CHECK(r.names[1].first == "I");
  CHECK(r.names[1].second == 1);
  CHECK(!r.cert_hash.empty());
}

TEST_CASE("subfunctor and quotient machinery") {
  Tower t9{3, 2};
  Cell ker = kernel_subfunctor(t9, 1, 0);
  CHECK(check_axioms(ker.P).empty());
  // one kernel class per Weyl translate of the generator, plus its transfer
  MackeyPresentation kmin = minimized(ker.P);
  CHECK(kmin.group_at(0).is_zero());
  CHECK(kmin.group_at(1).to_string() == "Z^3");
  CHECK(kmin.group_at(2).to_string() == "Z");
}
