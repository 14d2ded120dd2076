#ifndef TAMARACK_BURNSIDE_HPP
#define TAMARACK_BURNSIDE_HPP

#include <string>
#include <vector>

#include "tamarack/bigint.hpp"
#include "tamarack/group_lattice.hpp"

namespace tamarack {

// Element of the Burnside ring A(C_{p^level}) in the transitive-orbit basis:
// c[j] is the coefficient of [C_{p^level}/C_{p^j}].
struct BurnsideElem {
  Tower tower;
  int level = 0;
  std::vector<Int> c; // size level+1

  BurnsideElem() = default;
  BurnsideElem(const Tower &t, int lvl) : tower(t), level(lvl), c(lvl + 1) {}

  static BurnsideElem zero(const Tower &t, int lvl) { return {t, lvl}; }
  static BurnsideElem unit(const Tower &t, int lvl);
  static BurnsideElem basis(const Tower &t, int lvl, int j);
  static BurnsideElem integer(const Tower &t, int lvl, Int m);

  bool is_zero() const;
  bool is_integer() const; // only the unit class
  bool operator==(const BurnsideElem &o) const;

  BurnsideElem &operator+=(const BurnsideElem &o);
  BurnsideElem &operator-=(const BurnsideElem &o);
  friend BurnsideElem operator+(BurnsideElem a, const BurnsideElem &b) { return a += b; }
  friend BurnsideElem operator-(BurnsideElem a, const BurnsideElem &b) { return a -= b; }
  BurnsideElem scaled(const Int &s) const;

  std::string to_string() const;
};

// product in A(C_{p^k}); levels must agree
BurnsideElem mul(const BurnsideElem &a, const BurnsideElem &b);

// restriction to a lower level
BurnsideElem res(const BurnsideElem &a, int to);

// transfer (induction) to a higher level
BurnsideElem tr(const BurnsideElem &a, int to);

// fixed-point counts (marks): index i = |X^{C_{p^i}}|, i = 0..level
std::vector<Int> marks(const BurnsideElem &a);

// inverse of the mark homomorphism; divisions must clear
BurnsideElem from_marks(const Tower &t, int level, const std::vector<Int> &mk);

// multiplicative norm (coinduction) from a.level up to `to`, via marks
BurnsideElem norm(const BurnsideElem &a, int to);

// norm of an integer from the trivial subgroup to level k.
// k = 1 uses the closed form a + ((a^p - a)/p) t; general k via marks.
BurnsideElem norm_int(const Tower &t, const Int &a, int k);

// cardinality (mark at the trivial subgroup); the augmentation A -> Z
Int cardinality(const BurnsideElem &a);

} // namespace tamarack

#endif
