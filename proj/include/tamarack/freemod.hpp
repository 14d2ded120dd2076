#ifndef TAMARACK_FREEMOD_HPP
#define TAMARACK_FREEMOD_HPP

#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "tamarack/intmat.hpp"
#include "tamarack/tambara.hpp"

namespace tamarack {

// generator of a free module over the coefficient system
struct ModGen {
  std::string label;
  int level = 0;      // orbit level of the generator
  long long degree = 0; // internal degree
};

struct FreeModule {
  TambaraSystem sys;
  std::vector<ModGen> gens;

  int num_gens() const { return (int)gens.size(); }
  GSet generating_gset() const;
  long long symbol_count(int level) const; // symbols per level, all gens
};

// Element of one level of a free module. Basis symbols are indexed by
// (generator, Weyl translate a):
//   level >= gen.level: tr(coeff * weyl^a gen), coeff in R(gen.level)
//   level <  gen.level: coeff * res(weyl^a gen), coeff in R(level)
struct ModElem {
  int level = 0;
  std::map<std::pair<int, long long>, RElem> terms;

  bool is_zero() const { return terms.empty(); }
  bool operator==(const ModElem &o) const {
    return level == o.level && terms == o.terms;
  }
};

ModElem mod_zero(const FreeModule &M, int level);
ModElem mod_gen(const FreeModule &M, int g); // the generator at its own level
// canonical insert (reduces the translate, twisting tr coefficients)
void mod_add_term(const FreeModule &M, ModElem &e, int g, long long a, RElem c);
ModElem mod_add(const ModElem &a, const ModElem &b);
ModElem mod_sub(const ModElem &a, const ModElem &b);
ModElem mod_scale_int(const ModElem &a, const Int &s);
// action of r in R(level)
ModElem mod_scale(const FreeModule &M, const ModElem &a, const RElem &r);
ModElem mod_res(const FreeModule &M, const ModElem &a, int to);
ModElem mod_tr(const FreeModule &M, const ModElem &a, int to);
ModElem mod_weyl(const FreeModule &M, const ModElem &a, long long power);

std::string mod_to_string(const FreeModule &M, const ModElem &e);

// module homomorphism, given by generator images at the generators' levels
struct ModHom {
  const FreeModule *source = nullptr;
  const FreeModule *target = nullptr;
  std::vector<ModElem> images; // one per source generator

  bool is_zero() const;
};

ModHom hom_zero(const FreeModule &src, const FreeModule &dst);
ModHom hom_identity(const FreeModule &m);
ModElem apply_hom(const ModHom &h, const ModElem &e);
ModHom compose(const ModHom &g, const ModHom &h); // g after h
ModHom hom_add(const ModHom &a, const ModHom &b);

// Z-basis of the degree slice of a module level; degree < 0 selects the whole
// level (finite only over the Burnside system).
class ModBasis {
public:
  ModBasis(const FreeModule &M, int level, long long degree);

  struct Entry {
    int gen;
    long long a;
    int rb_entry;
  };

  int size() const { return (int)entries_.size(); }
  const FreeModule &module() const { return *mod_; }
  int level() const { return level_; }
  ModElem element(int idx) const;
  const Entry &entry(int idx) const { return entries_[idx]; }
  std::vector<Int> expand(const ModElem &e) const;
  std::string describe(int idx) const;

private:
  const FreeModule *mod_;
  int level_;
  long long degree_;
  std::vector<Entry> entries_;
  std::map<std::pair<int, long long>, const RBasis *> slice_; // (gen,a)->coeff basis
  std::map<std::tuple<int, long long, int>, int> index_;
  std::vector<std::unique_ptr<RBasis>> owned_;
  friend class ModBasisCache;
};

// matrix of a degree-homogeneous hom on the degree-d slice at a level
IntMat degree_matrix(const ModHom &h, int level, long long d);
IntMat degree_matrix(const ModHom &h, const ModBasis &src, const ModBasis &dst);

} // namespace tamarack

#endif
