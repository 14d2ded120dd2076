#ifndef TAMARACK_HOMOLOGY_HPP
#define TAMARACK_HOMOLOGY_HPP

#include <map>
#include <string>
#include <vector>

#include "tamarack/complexes.hpp"
#include "tamarack/mackey.hpp"

namespace tamarack {

// Base-changed chain complex with levelwise bases, presentations and
// differential matrices extracted once.
struct PreparedComplex {
  ChainComplex c;
  std::vector<ModuleLevelBases> bases;
  std::vector<MackeyPresentation> pres;
  std::vector<std::vector<IntMat>> dmat; // dmat[i]: matrices of d[i], i >= 1
};
PreparedComplex prepare(ChainComplex c);

// minimized homology Mackey functor at one homological degree
Cell homology_at(const PreparedComplex &pc, int i);

struct TorRow {
  int degree = 0;
  MackeyPresentation H;
  MatchResult match;
};
// The full pipeline: general grid -> totalize -> base change -> homology.
// cat may be null to skip identification.
std::vector<TorRow> tor_table(const Tower &t, int gen_level, int max_degree,
                              const Catalog *cat);

// --- iterated page homology of a base-changed multicomplex ---

struct PageGrid {
  Tower tower;
  int dims = 1;
  std::map<std::vector<int>, Cell> cells;
  std::map<std::vector<int>, ModuleLevelBases> bases;
  std::map<std::pair<std::vector<int>, int>, std::vector<IntMat>> ambient;
  std::vector<int> axes_done;
};
PageGrid first_page(const MultiComplex &bc);
void page_step(PageGrid &pg, int axis);

// --- truncated graded exactness over the Tambara coefficients ---

struct ExactnessRow {
  int position = 0;
  int level = 0;
  long long degree = 0;
  int ker_rank = 0;
  int im_rank = 0;
  int defect = 0;   // 0 iff the slice homology vanishes (or matches A at pos 0)
  AbGroup homology; // slice homology (position > 0) or cokernel (position 0)
};

struct ExactnessReport {
  long long cutoff = 0;
  std::vector<ExactnessRow> rows;
  int total_defect() const;
  bool interior_exact() const; // zero defect at all positions > 0
  bool resolves_unit() const;  // position-0 cokernel is A in degree 0, else 0
};

ExactnessReport graded_exactness(const ChainComplex &c, long long cutoff,
                                 const std::vector<int> &levels);

// degreewise invariants of H_position of an R-linear complex
// (coker of d_{position+1} restricted to cycles), per (level, degree)
std::map<std::pair<int, long long>, AbGroup>
graded_homology_slices(const ChainComplex &c, int position, long long cutoff,
                       const std::vector<int> &levels);

} // namespace tamarack

#endif
