#ifndef TAMARACK_TAMBARA_HPP
#define TAMARACK_TAMBARA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamarack/burnside.hpp"

namespace tamarack {

// Coefficient system: the free incomplete Tambara functor on one generator
// x at level C_{p^n}/C_{p^m}, or (with has_generator = false) the Burnside
// functor itself, which every complex is base-changed to.
//
// Levels at or below m are polynomial rings over the Burnside ring in the
// Weyl translates of x. Levels above m are presented by classes
// q^j_u = tr_j^level(nm_m^j(x^u)); elements are kept in the single-q normal
// form: a Burnside constant plus an integer combination of q-classes with
// nonzero exponent orbit.
struct TambaraSystem {
  Tower tower;
  int gen_level = 0;          // m
  bool has_generator = true;  // false: plain Burnside coefficients
  bool norms_available = true;

  static TambaraSystem free_tambara(const Tower &t, int m) {
    return {t, m, true, true};
  }
  static TambaraSystem free_green_fixed(const Tower &t) {
    return {t, t.n, true, false};
  }
  static TambaraSystem burnside(const Tower &t) { return {t, 0, false, false}; }

  long long num_vars() const {
    return has_generator ? tower.weyl_order(gen_level) : 0;
  }
  bool poly_level(int level) const {
    return has_generator && level <= gen_level;
  }
  // index-vector length for a q-class with transfer source j
  long long q_len(int j) const {
    return tower.weyl_order(std::max(j, gen_level));
  }
  bool operator==(const TambaraSystem &o) const {
    return tower == o.tower && gen_level == o.gen_level &&
           has_generator == o.has_generator &&
           norms_available == o.norms_available;
  }
};

using Expo = std::vector<int>; // exponent vector

int expo_total(const Expo &e);
Expo expo_shift(const Expo &e, long long s);          // u'[i+s] = u[i]
Expo expo_pull(const Expo &e, long long target_len);  // pullback along Z/N -> Z/len(e)
Expo expo_fold(const Expo &e, long long target_len);  // push forward (sum fibers)

// q^j_u with u nonzero, canonical for the level of the element holding it
struct QKey {
  int j;
  Expo u;
  bool operator<(const QKey &o) const {
    if (j != o.j) return j < o.j;
    return u < o.u;
  }
  bool operator==(const QKey &o) const { return j == o.j && u == o.u; }
};

// one level of the free incomplete Tambara functor, normal form
struct RElem {
  int level = 0;
  BurnsideElem scalar;              // degree-zero part
  std::map<Expo, BurnsideElem> poly; // levels <= m: nonconstant monomials
  std::map<QKey, Int> qpart;        // levels > m

  bool is_zero() const;
  bool operator==(const RElem &o) const;
};

RElem r_zero(const TambaraSystem &S, int level);
RElem r_one(const TambaraSystem &S, int level);
RElem r_from_burnside(const TambaraSystem &S, const BurnsideElem &b);
RElem r_from_int(const TambaraSystem &S, int level, const Int &v);
// the variable x^(i) at a polynomial level
RElem r_x(const TambaraSystem &S, int level, long long i);
RElem r_monomial(const TambaraSystem &S, int level, const Expo &e,
                 const BurnsideElem &coeff);
RElem r_monomial(const TambaraSystem &S, int level, const Expo &e);
// c * q^j_u at a level above m (u need not be canonical)
RElem r_q(const TambaraSystem &S, int level, int j, const Expo &u,
          const Int &coeff);

// canonical representative of u modulo the identification at `level`
// (shifts by multiples of p^(n-level)); lexicographically greatest translate
Expo canonical_orbit(const TambaraSystem &S, int level, int j, const Expo &u);

RElem r_add(const RElem &a, const RElem &b);
RElem r_sub(const RElem &a, const RElem &b);
RElem r_scale(const RElem &a, const Int &s);
RElem r_mul(const TambaraSystem &S, const RElem &a, const RElem &b);
RElem r_res(const TambaraSystem &S, const RElem &a, int to);
RElem r_tr(const TambaraSystem &S, const RElem &a, int to);
RElem r_weyl(const TambaraSystem &S, const RElem &a, long long power);

// norm of a monomial (unit +-1 coefficient) or of a pure Burnside element.
// Throws std::domain_error for sums: the norm-of-a-sum formula is out of scope.
RElem r_norm_monomial(const TambaraSystem &S, const RElem &a, int to);

// ring map R -> A killing the generator
BurnsideElem r_augment(const TambaraSystem &S, const RElem &a);

// internal x-degree of basis keys; res and tr preserve it, norms scale it
long long q_degree(const TambaraSystem &S, const QKey &k);
// homogeneous degree of an element, if it has one (zero element: degree 0)
std::optional<long long> r_degree(const TambaraSystem &S, const RElem &a);

std::string r_to_string(const TambaraSystem &S, const RElem &a);

// Z-basis of the degree-d slice of R(C_{p^n}/C_{p^level})
struct RBasisEntry {
  enum Kind { Scalar, Poly, Q } kind;
  int burnside_j = 0; // Scalar/Poly: which orbit class multiplies the monomial
  Expo mono;          // Poly
  QKey q;             // Q
};
struct RBasis {
  TambaraSystem sys;
  int level = 0;
  long long degree = 0;
  std::vector<RBasisEntry> entries;
  std::map<std::pair<int, Expo>, int> poly_index; // (burnside_j, mono)
  std::map<QKey, int> q_index;
  std::map<int, int> scalar_index; // burnside_j -> entry

  int size() const { return (int)entries.size(); }
  RElem element(int i) const;
  // coordinates of a (degree-homogeneous) element in this basis
  std::vector<Int> expand(const RElem &e) const;
};
RBasis r_basis_of_degree(const TambaraSystem &S, int level, long long d);

// all exponent vectors of given length summing to total
std::vector<Expo> compositions(long long length, long long total);

} // namespace tamarack

#endif
