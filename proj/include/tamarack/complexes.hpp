#ifndef TAMARACK_COMPLEXES_HPP
#define TAMARACK_COMPLEXES_HPP

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "tamarack/freemod.hpp"

namespace tamarack {

// Multi-index tuple of wedge index sets, one per axis. Axis a holds subsets
// of Z/p^(n-m-a); the whole tuple is taken up to simultaneous translation.
struct GridTuple {
  std::vector<std::vector<int>> idx; // ascending per axis
  bool operator<(const GridTuple &o) const { return idx < o.idx; }
  bool operator==(const GridTuple &o) const { return idx == o.idx; }
};

struct GridGenInfo {
  GridTuple tuple; // canonical representative
  int level = 0;   // stabilizer exponent in C_{p^n}
};

struct ChainComplex {
  TambaraSystem sys;
  std::deque<FreeModule> mods; // positions 0..length
  std::vector<ModHom> d;       // d[i]: mods[i] -> mods[i-1]; d[0] unused
  int length() const { return (int)mods.size() - 1; }
};

struct MultiComplex {
  TambaraSystem sys;
  int dims = 1; // axes 0..dims-1; axis a sits at level gen_level + a
  std::map<std::vector<int>, FreeModule> cells;
  std::map<std::vector<int>, std::vector<GridGenInfo>> meta;
  std::map<std::pair<std::vector<int>, int>, ModHom> diff; // (v, axis)

  const FreeModule *cell(const std::vector<int> &v) const;
  const ModHom *differential(const std::vector<int> &v, int axis) const;
};

// canonical joint representative; tuple = translate(canon, shift), and
// re-sorting the translated per-axis tuples has total parity `sign`
struct TupleCanon {
  GridTuple canon;
  long long shift = 0;
  int sign = 1;
  int level = 0;
};
TupleCanon canonicalize_tuple(const TambaraSystem &S, const GridTuple &t);

// internal degree of the generator for a tuple (wedge degree minus the
// denominator degree)
long long tuple_degree(const TambaraSystem &S, const GridTuple &t, int level);

// the full Koszul-type multicomplex resolving the Burnside functor over
// A[x at level p^m] for C_{p^n}; p odd unless m = n
MultiComplex build_general(const Tower &t, int m);

// explicit constructions for C_p (odd p) on an underlying generator
ChainComplex build_cp_lift(int p);
ChainComplex build_cp_divided(int p);
// comparison map between them, induced by u -> nm(x)
std::vector<ModHom> build_cp_comparison(const ChainComplex &divided,
                                        const ChainComplex &lift);
ChainComplex build_cp_cone(int p);

// explicit tricomplex at p = 3, n = 2 with the worked corner differentials
MultiComplex build_c9_tricomplex();

ChainComplex totalize(const MultiComplex &mc);

ChainComplex base_change(const ChainComplex &c);
MultiComplex base_change(const MultiComplex &mc);

// composite of adjacent differentials normalizes to zero (whole complex)
bool complex_squares_to_zero(const ChainComplex &c);
// d^2 = 0 along every axis and all direction pairs commute
bool multicomplex_commutes(const MultiComplex &mc);

std::string complex_summary(const ChainComplex &c);
std::string complex_dump_json(const MultiComplex &mc);

} // namespace tamarack

#endif
