// Acceptance suite. Each criterion prints one PASS/FAIL line; the binary
// exits nonzero if any criterion fails. Thresholds are pinned here.
#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "tamarack/report.hpp"

using namespace tamarack;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void report(int idx, const std::string &what, bool pass, double sec,
            const std::string &detail = "") {
  std::printf("[%s] criterion %d: %s (%.1fs)%s%s\n", pass ? "PASS" : "FAIL",
              idx, what.c_str(), sec, detail.empty() ? "" : " -- ",
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

bool run_case(const std::string &name, std::string &detail) {
  VerifyOutcome out = run_verification(name);
  if (!out.pass && detail.empty()) detail = out.name + ": " + out.diff;
  return out.pass;
}

BurnsideElem random_burnside(std::mt19937 &rng, const Tower &t, int level) {
  std::uniform_int_distribution<int> val(-5, 5);
  BurnsideElem b(t, level);
  for (int j = 0; j <= level; ++j) b.c[j] = Int(val(rng));
  return b;
}

RElem random_relem(std::mt19937 &rng, const TambaraSystem &S, int level,
                   long long maxdeg) {
  std::uniform_int_distribution<int> val(-3, 3);
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<long long> deg(0, maxdeg);
  RElem out = r_zero(S, level);
  int terms = nterms(rng);
  for (int i = 0; i < terms; ++i) {
    RBasis b = r_basis_of_degree(S, level, deg(rng));
    if (b.size() == 0) continue;
    std::uniform_int_distribution<int> pick(0, b.size() - 1);
    int v = val(rng);
    if (v) out = r_add(out, r_scale(b.element(pick(rng)), Int(v)));
  }
  return out;
}

} // namespace

int main() {
  std::printf("acceptance suite\n");

  { // 1. Tor over the free Green functor on a fixed generator, C2 and C3
    Timer tm;
    std::string detail;
    bool ok = run_case("green-fixed-c2", detail) &&
              run_case("green-fixed-c3", detail);
    report(1, "green fixed-generator Tor (C2, C3): A, A, then zero", ok,
           tm.seconds(), detail);
  }

  { // 2. C_p Tor tables for p = 3 and p = 5, certified identifications
    Timer tm;
    std::string detail;
    bool ok3 = run_case("cp-tor-3", detail);
    bool ok5 = run_case("cp-tor-5", detail);
    report(2, "C_p Tor tables (p = 3, 5)", ok3 && ok5, tm.seconds(), detail);
  }

  { // 3. the ten rows of the C9 Tor table
    Timer tm;
    std::string detail;
    bool ok = run_case("c9-tor", detail);
    report(3, "C9 Tor table, ten rows with certificates", ok, tm.seconds(),
           detail);
  }

  { // 4. resolution lengths 4 and 13
    Timer tm;
    ChainComplex t31 = totalize(build_general(Tower{3, 1}, 0));
    ChainComplex t32 = totalize(build_general(Tower{3, 2}, 0));
    bool ok = t31.length() == 4 && t32.length() == 13;
    for (int i = 0; i <= t31.length(); ++i)
      ok = ok && t31.mods[i].num_gens() > 0;
    for (int i = 0; i <= t32.length(); ++i)
      ok = ok && t32.mods[i].num_gens() > 0;
    report(4, "resolution lengths 4 and 13", ok, tm.seconds());
  }

  { // 5. d^2 = 0 symbolically, all direction pairs
    Timer tm;
    bool ok = true;
    std::string detail;
    for (const Tower &t :
         {Tower{3, 1}, Tower{5, 1}, Tower{7, 1}, Tower{3, 2}}) {
      MultiComplex g = build_general(t, 0);
      if (!multicomplex_commutes(g)) {
        ok = false;
        detail = "grid fails at p=" + std::to_string(t.p) +
                 ", n=" + std::to_string(t.n);
        break;
      }
      if (!complex_squares_to_zero(totalize(g))) {
        ok = false;
        detail = "totalization fails at p=" + std::to_string(t.p);
        break;
      }
    }
    report(5, "chain complex integrity at (3,1), (5,1), (7,1), (3,2)", ok,
           tm.seconds(), detail);
  }

  { // 6. graded exactness: C3 cone to degree 6, C9 total to degree 3
    Timer tm;
    std::string detail;
    bool ok = run_case("cone-exactness-3", detail);
    bool ok2 = run_case("c9-exactness", detail);
    report(6, "graded exactness certificates (C3 cutoff 6, C9 cutoff 3)",
           ok && ok2, tm.seconds(), detail);
  }

  { // 7. homology of the first lift for p = 3
    Timer tm;
    std::string detail;
    bool ok = run_case("lemma-hkfirst-3", detail);
    report(7, "first-lift homology: H0 and the top kernel, degreewise", ok,
           tm.seconds(), detail);
  }

  { // 8. appendix page fixtures for the base-changed C9 grid
    Timer tm;
    std::string detail;
    bool ok = run_case("c9-pages", detail);
    report(8, "C9 page homology against the two Tor-page tables", ok,
           tm.seconds(), detail);
  }

  { // 9. property suites
    Timer tm;
    bool ok = true;
    std::string detail;
    std::mt19937 rng(2026);

    // Burnside marks is a ring homomorphism: 1000 random products
    {
      Tower t{3, 2};
      for (int i = 0; i < 1000 && ok; ++i) {
        BurnsideElem a = random_burnside(rng, t, 2);
        BurnsideElem b = random_burnside(rng, t, 2);
        std::vector<Int> ma = marks(a), mb = marks(b), mp = marks(mul(a, b));
        for (size_t k = 0; k < mp.size(); ++k)
          if (!(mp[k] == ma[k] * mb[k])) ok = false;
        if (!(from_marks(t, 2, ma) == a)) ok = false;
      }
      if (!ok) detail = "marks homomorphism";
    }

    // SNF against the dense full-pivot oracle: 200 matrices up to 8x8
    if (ok) {
      std::uniform_int_distribution<int> dim(1, 8), val(-9, 9);
      for (int i = 0; i < 200 && ok; ++i) {
        IntMat m(dim(rng), dim(rng));
        for (int r = 0; r < m.rows; ++r)
          for (int c = 0; c < m.cols; ++c) {
            int v = val(rng);
            if (v && (rng() & 1)) m.set(r, c, Int(v));
          }
        if (!(snf(m).factors == snf_reference(m))) ok = false;
      }
      if (!ok) detail = "snf oracle";
    }

    // Mackey axioms and Frobenius reciprocity: 1000 randomized instances
    if (ok) {
      Tower t9{3, 2};
      TambaraSystem S = TambaraSystem::free_tambara(t9, 0);
      std::vector<MackeyPresentation> pool;
      GSet g1, g2;
      g1.add(0, 1);
      g2.add(1, 1);
      pool.push_back(free_mackey(t9, g1));
      pool.push_back(free_mackey(t9, g2));
      pool.push_back(l_functor(t9));
      pool.push_back(constant_z(t9));
      pool.push_back(augmentation_ideal(t9));
      int checked = 0;
      while (checked < 1000 && ok) {
        const MackeyPresentation &p = pool[checked % pool.size()];
        if (!check_axioms(p).empty()) ok = false;
        ++checked;
        for (int rep = 0; rep < 5 && ok; ++rep) {
          int hi = 1 + (int)(rng() % 2);
          RElem y = random_relem(rng, S, hi, 3);
          RElem a = random_relem(rng, S, hi - 1, 3);
          if (!(r_tr(S, r_mul(S, r_res(S, y, hi - 1), a), hi) ==
                r_mul(S, y, r_tr(S, a, hi))))
            ok = false;
          ++checked;
        }
      }
      if (!ok) detail = "mackey axioms / frobenius";
    }

    // normal-form confluence against the underlying polynomial model:
    // 500 random products across (3,1), (5,1), (3,2)
    if (ok) {
      int done = 0;
      for (const Tower &t : {Tower{3, 1}, Tower{5, 1}, Tower{3, 2}}) {
        TambaraSystem S = TambaraSystem::free_tambara(t, 0);
        for (int i = 0; i < 167 && ok; ++i) {
          int level = 1 + (int)(rng() % t.n);
          RElem a = random_relem(rng, S, level, 4);
          RElem b = random_relem(rng, S, level, 4);
          RElem prod = r_mul(S, a, b);
          if (!(r_res(S, prod, 0) ==
                r_mul(S, r_res(S, a, 0), r_res(S, b, 0))))
            ok = false;
          ++done;
        }
      }
      if (done < 500) ok = false;
      if (!ok) detail = "normal form confluence";
    }

    report(9, "property suites (axioms, snf oracle, marks, confluence)", ok,
           tm.seconds(), detail);
  }

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
