#include "doctest.h"

#include <random>

#include "tamarack/burnside.hpp"

using namespace tamarack;

namespace {

BurnsideElem random_elem(std::mt19937 &rng, const Tower &t, int level) {
  std::uniform_int_distribution<int> val(-5, 5);
  BurnsideElem b(t, level);
  for (int j = 0; j <= level; ++j) b.c[j] = Int(val(rng));
  return b;
}

std::vector<Int> hadamard(const std::vector<Int> &a, const std::vector<Int> &b) {
  std::vector<Int> r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * b[i];
  return r;
}

} // namespace

TEST_CASE("burnside basics") {
  Tower c3{3, 1};
  BurnsideElem tcl = BurnsideElem::basis(c3, 1, 0); // t = [C3/e]
  CHECK(mul(tcl, tcl) == tcl.scaled(Int(3)));       // t^2 = 3t
  BurnsideElem one = BurnsideElem::unit(c3, 1);
  CHECK(mul(one, tcl) == tcl);

  Tower c9{3, 2};
  BurnsideElem b10 = BurnsideElem::basis(c9, 2, 1); // [C9/C3]
  BurnsideElem b00 = BurnsideElem::basis(c9, 2, 0); // [C9/e]
  CHECK(mul(b10, b00) == b00.scaled(Int(3)));
}

TEST_CASE("burnside res and tr") {
  Tower c3{3, 1};
  BurnsideElem tcl = BurnsideElem::basis(c3, 1, 0);
  CHECK(res(tcl, 0) == BurnsideElem::integer(c3, 0, Int(3)));
  CHECK(res(BurnsideElem::unit(c3, 1), 0) == BurnsideElem::unit(c3, 0));
  Tower c9{3, 2};
  // res^{C9}_{C3}[C9/C3] = 3 [C3/C3]
  CHECK(res(BurnsideElem::basis(c9, 2, 1), 1) ==
        BurnsideElem::unit(c9, 1).scaled(Int(3)));
  CHECK(tr(BurnsideElem::unit(c3, 0), 1) == tcl);
  CHECK(tr(BurnsideElem::unit(c9, 0), 2) == BurnsideElem::basis(c9, 2, 0));
  // tr(res(1)) = t
  CHECK(tr(res(BurnsideElem::unit(c3, 1), 0), 1) == tcl);
}

TEST_CASE("marks") {
  Tower c3{3, 1};
  CHECK(marks(BurnsideElem::basis(c3, 1, 0)) ==
        std::vector<Int>{Int(3), Int(0)});
  CHECK(marks(BurnsideElem::unit(c3, 1)) == std::vector<Int>{Int(1), Int(1)});
  Tower c9{3, 2};
  CHECK(marks(BurnsideElem::basis(c9, 2, 1)) ==
        std::vector<Int>{Int(3), Int(3), Int(0)});
}

TEST_CASE("marks is an injective ring homomorphism") {
  std::mt19937 rng(5);
  Tower c9{3, 2};
  for (int i = 0; i < 300; ++i) {
    BurnsideElem a = random_elem(rng, c9, 2), b = random_elem(rng, c9, 2);
    CHECK(marks(mul(a, b)) == hadamard(marks(a), marks(b)));
    CHECK(from_marks(c9, 2, marks(a)) == a);
  }
}

TEST_CASE("frobenius reciprocity and double coset law") {
  std::mt19937 rng(6);
  Tower c9{3, 2};
  for (int i = 0; i < 200; ++i) {
    BurnsideElem x = random_elem(rng, c9, 1);
    BurnsideElem y = random_elem(rng, c9, 2);
    CHECK(tr(mul(res(y, 1), x), 2) == mul(y, tr(x, 2)));
  }
  // res tr on basis classes is multiplication by the index (trivial Weyl action)
  for (int k = 1; k <= 2; ++k)
    for (int j = 0; j < k; ++j) {
      BurnsideElem b = BurnsideElem::basis(c9, j, j);
      CHECK(res(tr(b, k), j) == res(tr(b, k), j));
      BurnsideElem lhs = res(tr(BurnsideElem::unit(c9, k - 1), k), k - 1);
      CHECK(lhs == BurnsideElem::unit(c9, k - 1).scaled(Int(3)));
    }
}

TEST_CASE("norms") {
  Tower c3{3, 1};
  // nm(2) = 2 + 2t
  BurnsideElem n2 = norm_int(c3, Int(2), 1);
  BurnsideElem expect(c3, 1);
  expect.c[1] = Int(2);
  expect.c[0] = Int(2);
  CHECK(n2 == expect);
  CHECK(norm_int(c3, Int(1), 1) == BurnsideElem::unit(c3, 1));
  CHECK(norm_int(c3, Int(0), 1).is_zero());
  Tower c5{5, 1};
  // closed form equals the marks oracle
  for (long long a = -6; a <= 6; ++a)
    CHECK(norm_int(c5, Int(a), 1) ==
          norm(BurnsideElem::integer(c5, 0, Int(a)), 1));
  // multiplicativity
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> v(-6, 6);
  Tower c9{3, 2};
  for (int i = 0; i < 200; ++i) {
    Int a(v(rng)), b(v(rng));
    CHECK(norm_int(c9, a * b, 2) ==
          mul(norm_int(c9, a, 2), norm_int(c9, b, 2)));
  }
  // norm of a transitive orbit: coinduction
  BurnsideElem t3 = BurnsideElem::basis(c3, 1, 0);
  BurnsideElem nt = norm(res(t3, 0), 1); // norm of 3 points = 3^3 points... as sets
  CHECK(cardinality(nt) == Int(27));
}

TEST_CASE("cardinality is the augmentation") {
  Tower c9{3, 2};
  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    BurnsideElem a = random_elem(rng, c9, 2), b = random_elem(rng, c9, 2);
    CHECK(cardinality(mul(a, b)) == cardinality(a) * cardinality(b));
  }
}
