#ifndef TAMARACK_INTMAT_HPP
#define TAMARACK_INTMAT_HPP

#include <string>
#include <utility>
#include <vector>

#include "tamarack/bigint.hpp"

namespace tamarack {

// Sparse integer matrix, column-major. Columns hold (row, value) pairs
// sorted by row with no explicit zeros.
struct IntMat {
  int rows = 0, cols = 0;
  std::vector<std::vector<std::pair<int, Int>>> col;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), col(c) {}

  static IntMat identity(int n);
  static IntMat from_rows(const std::vector<std::vector<long long>> &d);

  Int get(int r, int c) const;
  void set(int r, int c, Int v);
  void add_to(int r, int c, const Int &v);

  int nnz() const;
  bool is_zero() const;

  IntMat transpose() const;
  IntMat hstack(const IntMat &o) const;
  IntMat vstack(const IntMat &o) const;
  IntMat cols_subset(const std::vector<int> &idx) const;
  IntMat scaled(const Int &s) const;

  std::vector<Int> apply(const std::vector<Int> &x) const; // M x
  friend IntMat operator*(const IntMat &a, const IntMat &b);
  friend IntMat operator+(const IntMat &a, const IntMat &b);
  friend IntMat operator-(const IntMat &a, const IntMat &b);
  friend bool operator==(const IntMat &a, const IntMat &b);

  std::string to_string() const;
};

struct HnfResult {
  IntMat h;                               // m * u = h, column echelon
  IntMat u;                               // unimodular
  std::vector<std::pair<int, int>> pivots; // (row, col), rows increasing
  int rank() const { return (int)pivots.size(); }
};

// Column-style Hermite normal form. Deterministic.
HnfResult hnf_cols(const IntMat &m, bool want_u = true);

// Lattice basis of ker(M); columns of the result.
IntMat kernel_basis(const IntMat &m);

// Reusable integer linear solver for a fixed matrix.
class Solver {
public:
  explicit Solver(const IntMat &m);
  // solve m x = b over Z; false if no integer solution
  bool solve(const std::vector<Int> &b, std::vector<Int> &x) const;
  int rank() const { return hnf_.rank(); }

private:
  IntMat m_;
  HnfResult hnf_;
};

bool solve(const IntMat &m, const std::vector<Int> &b, std::vector<Int> &x);
// solve [a | rels] * [x; y] = b, return the x part
bool solve_mod(const IntMat &a, const IntMat &rels, const std::vector<Int> &b,
               std::vector<Int> &x);

struct SnfResult {
  std::vector<Int> factors; // nonzero invariant factors, d1 | d2 | ...
  IntMat u, v;              // if requested: u * m * v = diag(factors)
  bool with_transforms = false;
  int rank() const { return (int)factors.size(); }
};

// Smith normal form with pivoting that prefers units and low fill-in.
SnfResult snf(const IntMat &m, bool want_transforms = false);

// Textbook full-pivot elimination, dense; test oracle for snf().
std::vector<Int> snf_reference(const IntMat &m);

// Invariants of a finitely generated abelian group.
struct AbGroup {
  int free_rank = 0;
  std::vector<Int> torsion; // nontrivial factors, dividing chain
  bool operator==(const AbGroup &o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
};

// Z^ambient / colspan(m)
AbGroup cokernel_invariants(const IntMat &m, int ambient_rank);

} // namespace tamarack

#endif
