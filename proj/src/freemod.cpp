#include "tamarack/freemod.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace tamarack {

GSet FreeModule::generating_gset() const {
  GSet g;
  for (const auto &gen : gens) g.add(gen.level, 1);
  return g;
}

long long FreeModule::symbol_count(int level) const {
  long long c = 0;
  for (const auto &gen : gens)
    c += sys.tower.weyl_order(std::max(level, gen.level));
  return c;
}

ModElem mod_zero(const FreeModule &M, int level) {
  (void)M;
  ModElem e;
  e.level = level;
  return e;
}

ModElem mod_gen(const FreeModule &M, int g) {
  ModElem e = mod_zero(M, M.gens[g].level);
  e.terms[{g, 0}] = r_one(M.sys, M.gens[g].level);
  return e;
}

void mod_add_term(const FreeModule &M, ModElem &e, int g, long long a, RElem c) {
  if (c.is_zero()) return;
  const ModGen &gen = M.gens[g];
  long long full = M.sys.tower.weyl_order(gen.level); // symbol orbit size
  a = ((a % full) + full) % full;
  if (e.level >= gen.level) {
    long long arange = M.sys.tower.weyl_order(e.level);
    long long rep = a % arange;
    long long s = a - rep;
    if (s != 0) c = r_weyl(M.sys, c, -s); // tr eats translates, twisting coeffs
    a = rep;
    assert(c.level == gen.level);
  } else {
    assert(c.level == e.level);
  }
  auto key = std::make_pair(g, a);
  auto it = e.terms.find(key);
  if (it == e.terms.end()) {
    e.terms.emplace(key, std::move(c));
  } else {
    it->second = r_add(it->second, c);
    if (it->second.is_zero()) e.terms.erase(it);
  }
}

ModElem mod_add(const ModElem &a, const ModElem &b) {
  assert(a.level == b.level);
  ModElem out = a;
  for (const auto &kv : b.terms) {
    auto it = out.terms.find(kv.first);
    if (it == out.terms.end()) {
      out.terms.emplace(kv.first, kv.second);
    } else {
      it->second = r_add(it->second, kv.second);
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

ModElem mod_sub(const ModElem &a, const ModElem &b) {
  return mod_add(a, mod_scale_int(b, Int(-1)));
}

ModElem mod_scale_int(const ModElem &a, const Int &s) {
  ModElem out;
  out.level = a.level;
  if (s.is_zero()) return out;
  for (const auto &kv : a.terms) out.terms[kv.first] = r_scale(kv.second, s);
  return out;
}

ModElem mod_scale(const FreeModule &M, const ModElem &a, const RElem &r) {
  ModElem out = mod_zero(M, a.level);
  if (r.is_zero()) return out;
  for (const auto &kv : a.terms) {
    const ModGen &gen = M.gens[kv.first.first];
    RElem c = a.level >= gen.level
                  ? r_mul(M.sys, r_res(M.sys, r, gen.level), kv.second)
                  : r_mul(M.sys, r, kv.second);
    mod_add_term(M, out, kv.first.first, kv.first.second, std::move(c));
  }
  return out;
}

ModElem mod_res(const FreeModule &M, const ModElem &a, int to) {
  if (to > a.level) throw std::invalid_argument("mod_res: target above level");
  ModElem out = mod_zero(M, to);
  for (const auto &kv : a.terms) {
    int g = kv.first.first;
    long long apos = kv.first.second;
    const ModGen &gen = M.gens[g];
    const RElem &c = kv.second;
    if (a.level <= gen.level) {
      // res-symbol: restrict the coefficient
      mod_add_term(M, out, g, apos, r_res(M.sys, c, to));
      continue;
    }
    long long spread = ipow(M.sys.tower.p, a.level - std::max(to, gen.level));
    long long step = M.sys.tower.weyl_order(a.level);
    for (long long i = 0; i < spread; ++i) {
      long long g_shift = i * step;
      RElem cc = r_weyl(M.sys, c, g_shift); // res of tr twists by Weyl translates
      if (to < gen.level) cc = r_res(M.sys, cc, to);
      mod_add_term(M, out, g, apos + g_shift, std::move(cc));
    }
  }
  return out;
}

ModElem mod_tr(const FreeModule &M, const ModElem &a, int to) {
  if (to < a.level) throw std::invalid_argument("mod_tr: target below level");
  ModElem out = mod_zero(M, to);
  for (const auto &kv : a.terms) {
    int g = kv.first.first;
    const ModGen &gen = M.gens[g];
    RElem c = kv.second;
    if (a.level < gen.level)
      c = r_tr(M.sys, c, std::min(to, gen.level));
    mod_add_term(M, out, g, kv.first.second, std::move(c));
  }
  return out;
}

ModElem mod_weyl(const FreeModule &M, const ModElem &a, long long power) {
  ModElem out = mod_zero(M, a.level);
  for (const auto &kv : a.terms)
    mod_add_term(M, out, kv.first.first, kv.first.second + power,
                 r_weyl(M.sys, kv.second, power));
  return out;
}

std::string mod_to_string(const FreeModule &M, const ModElem &e) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &kv : e.terms) {
    if (!first) os << " + ";
    first = false;
    const ModGen &gen = M.gens[kv.first.first];
    os << "(" << r_to_string(M.sys, kv.second) << ")";
    if (e.level >= gen.level) {
      os << "*tr[";
    } else {
      os << "*res[";
    }
    if (kv.first.second) os << "w^" << kv.first.second << " ";
    os << gen.label << "]";
  }
  return os.str();
}

bool ModHom::is_zero() const {
  for (const auto &im : images)
    if (!im.is_zero()) return false;
  return true;
}

ModHom hom_zero(const FreeModule &src, const FreeModule &dst) {
  ModHom h;
  h.source = &src;
  h.target = &dst;
  for (const auto &g : src.gens) h.images.push_back(mod_zero(dst, g.level));
  return h;
}

ModHom hom_identity(const FreeModule &m) {
  ModHom h;
  h.source = &m;
  h.target = &m;
  for (int i = 0; i < m.num_gens(); ++i) h.images.push_back(mod_gen(m, i));
  return h;
}

ModElem apply_hom(const ModHom &h, const ModElem &e) {
  const FreeModule &src = *h.source;
  const FreeModule &dst = *h.target;
  ModElem out = mod_zero(dst, e.level);
  for (const auto &kv : e.terms) {
    int g = kv.first.first;
    long long a = kv.first.second;
    const ModGen &gen = src.gens[g];
    ModElem im = mod_weyl(dst, h.images[g], a);
    if (e.level >= gen.level) {
      im = mod_scale(dst, im, kv.second); // coefficient at gen.level
      im = mod_tr(dst, im, e.level);
    } else {
      im = mod_res(dst, im, e.level);
      im = mod_scale(dst, im, kv.second);
    }
    out = mod_add(out, im);
  }
  return out;
}

ModHom compose(const ModHom &g, const ModHom &h) {
  if (h.target != g.source)
    throw std::invalid_argument("compose: source/target mismatch");
  ModHom out;
  out.source = h.source;
  out.target = g.target;
  for (const auto &im : h.images) out.images.push_back(apply_hom(g, im));
  return out;
}

ModHom hom_add(const ModHom &a, const ModHom &b) {
  assert(a.source == b.source && a.target == b.target);
  ModHom out = a;
  for (size_t i = 0; i < out.images.size(); ++i)
    out.images[i] = mod_add(out.images[i], b.images[i]);
  return out;
}

ModBasis::ModBasis(const FreeModule &M, int level, long long degree)
    : mod_(&M), level_(level), degree_(degree) {
  assert(degree >= 0 || !M.sys.has_generator);
  for (int g = 0; g < M.num_gens(); ++g) {
    const ModGen &gen = M.gens[g];
    int clevel = std::min(level, gen.level);
    long long cdeg = degree < 0 ? 0 : degree - gen.degree;
    if (degree >= 0 && cdeg < 0) continue;
    long long arange = M.sys.tower.weyl_order(std::max(level, gen.level));
    for (long long a = 0; a < arange; ++a) {
      auto key = std::make_pair(g, a);
      owned_.push_back(
          std::make_unique<RBasis>(r_basis_of_degree(M.sys, clevel, cdeg)));
      const RBasis *rb = owned_.back().get();
      slice_[key] = rb;
      for (int i = 0; i < rb->size(); ++i) {
        index_[{g, a, i}] = (int)entries_.size();
        entries_.push_back({g, a, i});
      }
    }
  }
}

ModElem ModBasis::element(int idx) const {
  const Entry &e = entries_[idx];
  const RBasis *rb = slice_.at({e.gen, e.a});
  ModElem out = mod_zero(*mod_, level_);
  mod_add_term(*mod_, out, e.gen, e.a, rb->element(e.rb_entry));
  return out;
}

std::vector<Int> ModBasis::expand(const ModElem &e) const {
  std::vector<Int> out(entries_.size(), Int(0));
  for (const auto &kv : e.terms) {
    auto it = slice_.find(kv.first);
    if (it == slice_.end())
      throw std::logic_error("ModBasis::expand: symbol outside slice");
    std::vector<Int> coords = it->second->expand(kv.second);
    for (size_t i = 0; i < coords.size(); ++i) {
      if (coords[i].is_zero()) continue;
      out[index_.at({kv.first.first, kv.first.second, (int)i})] += coords[i];
    }
  }
  return out;
}

std::string ModBasis::describe(int idx) const {
  const Entry &e = entries_[idx];
  std::ostringstream os;
  os << mod_->gens[e.gen].label;
  if (e.a) os << "@w^" << e.a;
  os << "#" << e.rb_entry;
  return os.str();
}

IntMat degree_matrix(const ModHom &h, const ModBasis &src, const ModBasis &dst) {
  IntMat m(dst.size(), src.size());
  for (int j = 0; j < src.size(); ++j) {
    ModElem im = apply_hom(h, src.element(j));
    std::vector<Int> coords = dst.expand(im);
    for (size_t r = 0; r < coords.size(); ++r)
      if (!coords[r].is_zero()) m.col[j].push_back({(int)r, coords[r]});
  }
  return m;
}

IntMat degree_matrix(const ModHom &h, int level, long long d) {
  ModBasis src(*h.source, level, d);
  ModBasis dst(*h.target, level, d);
  return degree_matrix(h, src, dst);
}

} // namespace tamarack
