#include "doctest.h"

#include <random>

#include "tamarack/bigint.hpp"

using namespace tamarack;

TEST_CASE("bigint small arithmetic agrees with int64") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 2000; ++i) {
    long long a = d(rng), b = d(rng);
    CHECK((Int(a) + Int(b)) == Int(a + b));
    CHECK((Int(a) - Int(b)) == Int(a - b));
    CHECK((Int(a) * Int(b)) == Int(a * b));
    if (b != 0) {
      CHECK(Int(a) / Int(b) == Int(a / b));
      CHECK(Int(a) % Int(b) == Int(a % b));
    }
  }
}

TEST_CASE("bigint multiword multiplication and division") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> d(0, (1LL << 62));
  for (int i = 0; i < 300; ++i) {
    Int a = Int(d(rng)) * Int(d(rng)) * Int(d(rng));
    Int b = Int(d(rng)) * Int(d(rng));
    if (b.is_zero()) continue;
    Int q, r;
    Int::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(Int::cmp_abs(r, b) < 0);
  }
}

TEST_CASE("bigint string round trip") {
  Int v = Int::from_string("-123456789012345678901234567890");
  CHECK(v.to_string() == "-123456789012345678901234567890");
  CHECK(Int(0).to_string() == "0");
  CHECK(Int::from_string("42") == Int(42));
}

TEST_CASE("bigint pow and gcd") {
  CHECK(Int::pow(Int(3), 20) == Int(3486784401LL));
  CHECK(Int::gcd(Int(24), Int(-36)) == Int(12));
  CHECK(Int::gcd(Int(0), Int(-7)) == Int(7));
  CHECK(Int(10).div_exact(Int(5)) == Int(2));
  CHECK(Int::fdiv(Int(-7), Int(2)) == Int(-4));
  CHECK(Int::fdiv(Int(7), Int(2)) == Int(3));
}
