// End-to-end acceptance suite: one line per criterion, nonzero exit on
// any hard failure. Flagged outcomes (documented formula mismatches)
// are reported but do not fail the run where the criterion permits them.
#include <chrono>
#include <cstdio>
#include <future>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "endolie/census.hpp"
#include "endolie/endo.hpp"
#include "endolie/repro.hpp"
#include "endolie/weyl.hpp"

using namespace endolie;

namespace {

struct Outcome {
  bool pass = true;
  bool flagged = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

AlgebraPtr alg(const std::string& name, i64 p) {
  return build_algebra(preset(name, p));
}

// 1. Exhaustive census over F_2 for sl2-u1 p=2: 1/0/1 classes at n=1,2,3.
Outcome criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  auto a = alg("sl2-u1", 2);
  size_t want[] = {1, 0, 1};
  std::ostringstream os;
  for (int n = 1; n <= 3; ++n) {
    auto rep = endotrivial_census(a, n);
    os << "n=" << n << ":" << rep.representatives.size() << " ";
    if (rep.representatives.size() != want[n - 1]) o.pass = false;
  }
  double s = seconds_since(t0);
  if (s >= 60) o.pass = false;
  os << "(" << s << "s)";
  o.detail = os.str();
  return o;
}

// 2. 200 seeded stacks P^a + X per preset, p in {2,3}: multiplicities
// and complements recovered exactly.
Outcome criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  auto run_config = [](const std::string& name, i64 p) {
    auto a = alg(name, p);
    const auto& ps = get_pims(a);
    std::mt19937_64 rng(1234 + p);
    int ok = 0;
    for (int it = 0; it < 100; ++it) {
      int i = static_cast<int>(rng() % ps.pims.size());
      int mult = static_cast<int>(rng() % 3);
      // projective-free cargo: a syzygy of a character / simple
      ModuleRep x = strip_projectives(
          syzygy(ps.pims[rng() % ps.pims.size()].top_simple, 1));
      if (x.dim == 0) x = trivial_module(a);  // syzygy of a projective top
      ModuleRep m = x;
      for (int c = 0; c < mult; ++c) m = direct_sum(m, ps.pims[i].module);
      // shuffle the basis so the summands are not block-visible
      Mat g = random_invertible(p, m.dim, rng);
      Mat gi = *g.inverse();
      ModuleRep shuffled = m;
      for (auto& act : shuffled.act) act = gi * act * g;
      shuffled.grading.reset();
      auto sp = dade_split(shuffled, i);
      if (sp.multiplicity == mult &&
          is_isomorphic(sp.complement, x) == Iso::Yes)
        ++ok;
    }
    return ok;
  };
  std::vector<std::future<int>> jobs;
  int total = 0;
  for (const auto& name : preset_names())
    for (i64 p : {2, 3}) {
      total += 100;
      jobs.push_back(
          std::async(std::launch::async, run_config, name, p));
    }
  int ok = 0;
  for (auto& j : jobs) ok += j.get();
  double s = seconds_since(t0);
  o.pass = (ok == total) && s < 120;
  o.detail = std::to_string(ok) + "/" + std::to_string(total) +
             " stacks recovered (" + std::to_string(s) + "s)";
  return o;
}

// 3. Group law over sl2-u1, p in {3,5}: Omega^a + Omega^b = Omega^{a+b}.
Outcome criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  int checked = 0, ok = 0;
  for (i64 p : {3, 5}) {
    auto a = alg("sl2-u1", p);
    auto k = trivial_module(a);
    std::vector<ModuleRep> omega;
    for (int n = -4; n <= 4; ++n) omega.push_back(syzygy(k, n));
    auto om = [&](int n) { return omega[n + 4]; };
    for (int x = -2; x <= 2; ++x)
      for (int y = -2; y <= 2; ++y) {
        ++checked;
        ModuleRep sum = strip_projectives(tensor(om(x), om(y)));
        if (is_isomorphic(sum, om(x + y)) == Iso::Yes) ++ok;
      }
  }
  double s = seconds_since(t0);
  o.pass = (ok == checked) && s < 60;
  o.detail = std::to_string(ok) + "/" + std::to_string(checked) +
             " pairs (" + std::to_string(s) + "s)";
  return o;
}

// 4. strip(V(2p)) = Omega^2(k) over sl2-g1 for p in {2,3}; the odd-n
// closed formulas are evaluated and may come back FLAGGED.
Outcome criterion4() {
  Outcome o;
  std::ostringstream os;
  for (i64 p : {2, 3}) {
    auto a = alg("sl2-g1", p);
    auto k = trivial_module(a);
    ModuleRep even = strip_projectives(build_weyl_sl2(a, 2 * p));
    bool even_ok = is_isomorphic(even, syzygy(k, 2)) == Iso::Yes;
    if (!even_ok) o.pass = false;
    os << "p=" << p << " even:" << (even_ok ? "ok" : "FAIL");
    ModuleRep odd = strip_projectives(build_weyl_sl2(a, 2 * (p - 2)));
    bool odd_ok = is_isomorphic(odd, syzygy(k, 1)) == Iso::Yes;
    if (!odd_ok) o.flagged = true;
    os << " odd-formula:" << (odd_ok ? "ok" : "flagged") << " ";
  }
  o.detail = os.str();
  return o;
}

// 5. Steinberg towers: strip(K_n) = Omega^n(k) for n <= 4 over sl2-g1
// (P = St (x) St, p in {2,3}) and sl3-b1 p=2.
Outcome criterion5() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  std::ostringstream os;
  auto run = [&](const AlgebraPtr& a, const ModuleRep& pmod,
                 const std::string& label) {
    auto seq = steinberg_lift_sequence(pmod, 4);
    ModuleRep cur = trivial_module(a);
    for (int n = 0; n <= 4; ++n) {
      if (n > 0) cur = syzygy_step(cur).omega;
      if (is_isomorphic(seq[n], strip_projectives(cur)) != Iso::Yes) {
        o.pass = false;
        os << label << " n=" << n << ":FAIL ";
        return;
      }
    }
    os << label << ":ok ";
  };
  for (i64 p : {2, 3}) {
    auto a = alg("sl2-g1", p);
    auto st = steinberg_sl2(a);
    run(a, tensor(st, st), "sl2-g1 p=" + std::to_string(p));
  }
  {
    auto a = alg("sl3-b1", 2);
    run(a, projective_cover(trivial_module(a)).p, "sl3-b1 p=2");
  }
  double s = seconds_since(t0);
  if (s >= 300) o.pass = false;
  os << "(" << s << "s)";
  o.detail = os.str();
  return o;
}

// 6. The SL3 p=2 Omega^2 suite.
Outcome criterion6() {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  auto rep = repro_sl3_omega2("");
  std::ostringstream os;
  for (const auto& c : rep.checks) {
    if (c.verdict == Verdict::Pass) continue;
    // the graded-hom realization is strictly weaker than full Borel
    // equivariance; its nonzero value is a documented model limitation
    if (c.verdict == Verdict::Flagged &&
        c.name.find("graded_hom") != std::string::npos) {
      o.flagged = true;
      os << "graded_hom computed " << c.computed
         << " (weight-preserving maps only; expected 0 under full "
            "equivariance) ";
    } else {
      o.pass = false;
      os << c.name << ":" << c.computed << " ";
    }
  }
  double s = seconds_since(t0);
  if (s >= 120) o.pass = false;
  os << "(" << s << "s)";
  o.detail = os.str();
  return o;
}

// 7. Twist stability: 20 seeded torus-scaling automorphisms over
// sl3-b1 p=2 fix Omega^n(k) for n in {1,2}.
Outcome criterion7() {
  Outcome o;
  auto a = alg("sl3-b1", 2);
  auto k = trivial_module(a);
  ModuleRep o1 = syzygy(k, 1), o2 = syzygy(k, 2);
  std::mt19937_64 rng(42);
  int ok = 0;
  for (int it = 0; it < 20; ++it) {
    std::vector<i64> t(2);
    for (auto& v : t) v = 1 + static_cast<i64>(rng() % (a->pres.p - 1));
    Mat phi = torus_scaling_automorphism(a->pres, t);
    if (is_stable_under(o1, phi) == Iso::Yes &&
        is_stable_under(o2, phi) == Iso::Yes)
      ++ok;
  }
  o.pass = ok == 20;
  o.detail = std::to_string(ok) + "/20 twists fix both syzygies";
  return o;
}

// 8. Restrictions of Omega^n(k) (sl2-g1 p=3) to the unipotent
// subalgebra along f and along the Weyl twist (e) have equal degrees.
Outcome criterion8() {
  Outcome o;
  auto g = alg("sl2-g1", 3);
  auto u = alg("sl2-u1", 3);
  auto k = trivial_module(g);
  std::ostringstream os;
  for (int n : {1, 2}) {
    ModuleRep om = syzygy(k, n);
    auto rf = restrict_along(om, u, {{0, 0, 1}});  // f -> f
    auto re = restrict_along(om, u, {{1, 0, 0}});  // f -> e
    auto d1 = syzygy_degree(rf, 6);
    auto d2 = syzygy_degree(re, 6);
    bool ok = d1.n && d2.n && *d1.n == *d2.n;
    if (!ok) o.pass = false;
    os << "n=" << n << ": deg_f="
       << (d1.n ? std::to_string(*d1.n) : "none") << " deg_e="
       << (d2.n ? std::to_string(*d2.n) : "none") << " ";
  }
  o.detail = os.str();
  return o;
}

// 9. Structural invariants.
Outcome criterion9() {
  Outcome o;
  std::ostringstream os;
  // Omega then Omega^{-1} is the stable identity
  {
    auto a = alg("sl2-b1", 3);
    auto m = syzygy(trivial_module(a), 1);
    bool ok = is_isomorphic(strip_projectives(syzygy(syzygy(m, 1), -1)),
                            m) == Iso::Yes;
    if (!ok) o.pass = false;
    os << "omega-cancel:" << (ok ? "ok" : "FAIL") << " ";
  }
  // dual is an involution on the nose
  {
    auto a = alg("sl3-u1", 2);
    auto m = syzygy(trivial_module(a), 1);
    auto dd = dual(dual(m));
    bool ok = true;
    for (int i = 0; i < a->pres.d(); ++i) ok &= dd.act[i] == m.act[i];
    if (!ok) o.pass = false;
    os << "dual-involution:" << (ok ? "ok" : "FAIL") << " ";
  }
  // L(p-2) is endotrivial for sl2-g1, p in {3,5}
  for (i64 p : {3, 5}) {
    auto a = alg("sl2-g1", p);
    bool ok = is_endotrivial(build_weyl_sl2(a, p - 2));
    if (!ok) o.pass = false;
    os << "L(p-2) p=" << p << ":" << (ok ? "ok" : "FAIL") << " ";
  }
  // minimal resolution dims over k[f]/f^p alternate p-1, 1
  for (i64 p : {3, 5}) {
    auto a = alg("sl2-u1", p);
    ModuleRep cur = trivial_module(a);
    bool ok = true;
    for (int n = 1; n <= 4; ++n) {
      cur = syzygy_step(cur).omega;
      int want = n % 2 == 1 ? static_cast<int>(p) - 1 : 1;
      ok &= cur.dim == want;
    }
    if (!ok) o.pass = false;
    os << "resolution p=" << p << ":" << (ok ? "ok" : "FAIL") << " ";
  }
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    Outcome (*fn)();
  };
  Entry entries[] = {
      {"census finiteness (sl2-u1 p=2, n=1..3)", criterion1},
      {"dade splitting on seeded stacks", criterion2},
      {"endotrivial group law (sl2-u1 p=3,5)", criterion3},
      {"sl2 Weyl identification of Omega^2", criterion4},
      {"steinberg stable-lift towers", criterion5},
      {"sl3 p=2 Omega^2 suite", criterion6},
      {"torus-twist stability (sl3-b1 p=2)", criterion7},
      {"syzygy-degree matching under Weyl twist", criterion8},
      {"structural invariant suite", criterion9},
  };
  int fails = 0;
  for (size_t i = 0; i < sizeof(entries) / sizeof(entries[0]); ++i) {
    Outcome o = entries[i].fn();
    const char* verdict =
        o.pass ? (o.flagged ? "PASS (flagged)" : "PASS") : "FAIL";
    if (!o.pass) ++fails;
    std::printf("criterion %zu [%s]: %s — %s\n", i + 1, verdict,
                entries[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return fails == 0 ? 0 : 1;
}
