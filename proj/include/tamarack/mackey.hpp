#ifndef TAMARACK_MACKEY_HPP
#define TAMARACK_MACKEY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamarack/freemod.hpp"
#include "tamarack/intmat.hpp"

namespace tamarack {

// Finitely generated Mackey functor, presented levelwise by generators and
// integer relation columns, with adjacent restriction/transfer matrices and
// the action of the chosen Weyl generator on each level.
struct MackeyPresentation {
  Tower tower;
  struct Level {
    int gens = 0;
    IntMat rels; // columns in Z^gens
  };
  std::vector<Level> levels;  // index 0..n
  std::vector<IntMat> res_;   // res_[k]: level k -> k-1 (k >= 1)
  std::vector<IntMat> tr_;    // tr_[k]: level k-1 -> k (k >= 1)
  std::vector<IntMat> weyl_;  // weyl_[k]: level k -> k

  int gens(int k) const { return levels[k].gens; }
  bool is_zero() const;
  AbGroup group_at(int k) const;
  std::string describe() const;
};

// levelwise matrices on generators, commuting with structure maps mod relations
struct MackeyMorphism {
  std::vector<IntMat> m; // m[k]: src gens(k) -> dst gens(k)
};

MackeyMorphism zero_morphism(const MackeyPresentation &src,
                             const MackeyPresentation &dst);
MackeyMorphism identity_morphism(const MackeyPresentation &p);

// structural validation; returns human-readable violations (empty = pass)
std::vector<std::string> check_axioms(const MackeyPresentation &p);
std::vector<std::string> check_morphism(const MackeyPresentation &src,
                                        const MackeyPresentation &dst,
                                        const MackeyMorphism &f);

MackeyPresentation direct_sum(const MackeyPresentation &a,
                              const MackeyPresentation &b);

// --- extraction from free modules over the Burnside system ---

// levelwise bases of a free module; reused to express differentials
struct ModuleLevelBases {
  const FreeModule *mod = nullptr;
  std::vector<ModBasis> basis; // one per level 0..n
};
ModuleLevelBases level_bases(const FreeModule &m);
MackeyPresentation presentation_of(const ModuleLevelBases &b);
std::vector<IntMat> morphism_matrices(const ModHom &h,
                                      const ModuleLevelBases &src,
                                      const ModuleLevelBases &dst);

// free Mackey functor on a G-set of generators (Burnside coefficients)
MackeyPresentation free_mackey(const Tower &t, const GSet &gens);

// --- subquotient machinery with ambient bookkeeping ---

// A subquotient of an ambient generator space: presentation plus ambient
// representatives of its generators and the ambient vectors that vanish in it.
struct Cell {
  MackeyPresentation P;
  std::vector<IntMat> reps; // ambient coords of P's generators
  std::vector<IntMat> null; // ambient columns equal to zero in P
};

Cell cell_of(const MackeyPresentation &p); // reps = id, null = rels
// matrix of an ambient map through subquotient cells
std::vector<IntMat> induced_matrices(const Cell &src,
                                     const std::vector<IntMat> &ambient,
                                     const Cell &dst);

// homology of dst <-dout- mid <-din- src where the matrices act on the
// generators of `mid`; target relations live in `next`.
Cell cell_homology(const MackeyPresentation &mid,
                   const std::vector<IntMat> &din,
                   const std::vector<IntMat> &dout,
                   const MackeyPresentation *next);

// homology inside an existing cell (page step)
Cell cell_homology_step(const Cell &mid, const std::vector<IntMat> &din,
                        const std::vector<IntMat> &dout, const Cell *next);

// SNF-reduce the presentation, dropping unit generators; reps follow along
void minimize_cell(Cell &c);
MackeyPresentation minimized(const MackeyPresentation &p);

// --- submodules / quotients of free Mackey functors ---

// smallest subfunctor of `amb` containing the given level lattices
std::vector<IntMat> subfunctor_closure(const MackeyPresentation &amb,
                                       std::vector<IntMat> seed);
// presentation of a subfunctor of a relation-free ambient, via its lattices
Cell subfunctor_cell(const MackeyPresentation &amb,
                     const std::vector<IntMat> &lattices);
MackeyPresentation quotient_by(const MackeyPresentation &amb,
                               const std::vector<IntMat> &sub);

// kernel lattice of res from level k to k-1 ... down to `to`
IntMat level_res_kernel(const MackeyPresentation &p, int from, int to);

// --- fingerprints and identification ---

struct Fingerprint {
  std::vector<std::pair<std::string, AbGroup>> items;
  bool operator==(const Fingerprint &o) const { return items == o.items; }
  std::string to_string() const;
};
Fingerprint fingerprint(const MackeyPresentation &p);

struct CatalogEntry {
  std::string name;
  MackeyPresentation P;
};

struct Catalog {
  Tower tower;
  std::vector<CatalogEntry> entries;
  static Catalog standard(const Tower &t);
  const MackeyPresentation *find(const std::string &name) const;
};

// named constructions
MackeyPresentation constant_z(const Tower &t);
MackeyPresentation inflation_z(const Tower &t); // Inf from the index-p subgroup
MackeyPresentation l_functor(const Tower &t);   // the 3-torsion answer at C_9
MackeyPresentation augmentation_ideal(const Tower &t);
MackeyPresentation zbar_free(const Tower &t, int gen_level);
MackeyPresentation free_quotient_by_res(const Tower &t, int gen_level,
                                        int res_to);
Cell kernel_subfunctor(const Tower &t, int gen_level, int res_to);

struct MatchResult {
  bool identified = false;
  std::vector<std::pair<std::string, int>> names; // (name, multiplicity)
  std::string cert_hash;                          // hash of the verified iso pair
  std::string to_string() const;
};

// greedy peeling with verified split certificates; never misidentifies
MatchResult match_catalog(const MackeyPresentation &m, const Catalog &cat);

// full hom lattice Hom(C, M); columns of the result index levelwise matrices,
// flattened per level
struct HomSpace {
  std::vector<std::pair<int, std::pair<int, int>>> vars; // (level, (row,col))
  IntMat basis; // vars x dim
  MackeyMorphism morphism(const std::vector<Int> &coords) const;
  std::vector<int> dims_src, dims_dst;
};
HomSpace hom_space(const MackeyPresentation &src, const MackeyPresentation &dst);

// exact isomorphism test with certificates
std::optional<std::pair<MackeyMorphism, MackeyMorphism>>
find_isomorphism(const MackeyPresentation &a, const MackeyPresentation &b);

// JSON serialization (schema mackey-presentation/1)
std::string mackey_to_json(const MackeyPresentation &p);
MackeyPresentation mackey_from_json(const std::string &json_text);

std::string lewis_diagram(const MackeyPresentation &p);

} // namespace tamarack

#endif
