#ifndef TAMARACK_GROUP_LATTICE_HPP
#define TAMARACK_GROUP_LATTICE_HPP

#include <map>
#include <string>
#include <vector>

namespace tamarack {

// Ambient group C_{p^n}. Subgroups are C_{p^k}, addressed by the exponent k.
struct Tower {
  int p = 3;
  int n = 1;

  bool valid_level(int k) const { return 0 <= k && k <= n; }
  // |C_{p^k}|
  long long order(int k) const;
  // |W(C_{p^k})| = p^{n-k}
  long long weyl_order(int k) const;

  bool operator==(const Tower &o) const { return p == o.p && n == o.n; }
};

long long ipow(long long b, int e);

// Formal disjoint union of orbits C_{p^n}/C_{p^k}: level exponent -> multiplicity.
struct GSet {
  std::map<int, long long> counts;

  void add(int level, long long mult = 1);
  long long cardinality(const Tower &t) const;
  bool empty() const { return counts.empty(); }
  bool operator==(const GSet &o) const { return counts == o.counts; }
  std::string to_string(const Tower &t) const;
};

// Orbit decomposition of C_{p^n}/C_{p^a} x C_{p^n}/C_{p^b}.
GSet orbit_product(const Tower &t, int a, int b);

// --- index-set combinatorics over Z/M (M a power of p) ---

// i + C_{p^{j'}} as an element of C_{p^n}/C_{p^{j'}}: reduce the index.
inline int coset_of(int i, long long modulus) { return int(i % modulus); }

// Canonical representative of a subset of Z/M under translation:
// the lexicographically smallest ascending tuple (it contains 0).
// set = (canon + shift) mod M, and sorting the shifted tuple of canon
// into ascending order has parity `sign`.
struct CanonSet {
  std::vector<int> canon;
  int shift = 0;
  int sign = 1;
};
CanonSet canonicalize_set(const std::vector<int> &set, long long M);

// parity of the permutation sorting v ascending (+1/-1); v has distinct entries
int sort_parity(std::vector<int> v);

// order of the translation stabilizer of set inside Z/M (a power of p)
long long set_stabilizer_order(const std::vector<int> &set, long long M, int p);

// Wedge generator: one canonical orbit representative of (wedge^k T)/Sigma_k.
struct WedgeGenerator {
  std::vector<int> index_set; // canonical ascending representative
  int stabilizer;             // subgroup exponent of the full stabilizer in C_{p^n}
};

// Orbit type of (wedge^k C_{p^n}/C_{p^j})/Sigma_k plus canonical representatives.
struct WedgeDecomposition {
  GSet orbits;
  std::vector<WedgeGenerator> generators;
};
WedgeDecomposition wedge_orbit_decomposition(const Tower &t, int level, int k);

// Inc(I, J) = { i in I : i + C_{p^{j+1}} in J }, ascending.
// I lives in Z/Mi, J in Z/Mj with Mj | Mi.
std::vector<int> incidence_set(const std::vector<int> &I, long long Mi,
                               const std::vector<int> &J, long long Mj);

// all k-subsets of {0..M-1}, ascending
std::vector<std::vector<int>> subsets_of_size(long long M, int k);

} // namespace tamarack

#endif
