#include "endolie/census.hpp"

#include "endolie/endo.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

namespace endolie {

namespace {

/// Relation check on raw generator matrices (check_valid without the
/// ModuleRep packaging, to keep the hot loop lean).
bool satisfies_relations(const AlgebraPtr& alg, const std::vector<Mat>& g) {
  const auto& pres = alg->pres;
  const int d = pres.d();
  PrimeField f(pres.p);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Mat lhs = g[i] * g[j] - g[j] * g[i];
      Mat rhs(pres.p, g[0].rows(), g[0].cols());
      for (int k = 0; k < d; ++k) {
        i64 c = f.reduce(pres.brackets[i][j][k]);
        if (c) rhs = rhs + g[k].scaled(c);
      }
      if (!(lhs == rhs)) return false;
    }
  for (int i = 0; i < d; ++i) {
    Mat rhs(pres.p, g[0].rows(), g[0].cols());
    for (int k = 0; k < d; ++k) {
      i64 c = f.reduce(pres.p_power[i][k]);
      if (c) rhs = rhs + g[k].scaled(c);
    }
    if (!(g[i].pow(pres.p) == rhs)) return false;
  }
  return true;
}

/// Nilpotent Jordan matrix for a partition (parts are block sizes).
Mat jordan_nilpotent(i64 p, int n, const std::vector<int>& parts) {
  Mat m(p, n, n);
  int off = 0;
  for (int part : parts) {
    for (int i = 0; i + 1 < part; ++i) m.set(off + i, off + i + 1, 1);
    off += part;
  }
  return m;
}

void partitions_bounded(int n, int maxpart, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, maxpart); part >= 1; --part) {
    if (!cur.empty() && part > cur.back()) continue;
    cur.push_back(part);
    partitions_bounded(n - part, maxpart, cur, out);
    cur.pop_back();
  }
}

bool exhaustive_fits(i64 p, int cells, u64 budget) {
  long double total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= static_cast<long double>(p);
    if (total > static_cast<long double>(budget)) return false;
  }
  return true;
}

}  // namespace

ModuleRep point_to_module(const AlgebraPtr& alg, const VarietyPoint& pt) {
  ModuleRep m;
  m.alg = alg;
  m.dim = pt.gens.empty() ? 0 : pt.gens[0].rows();
  m.act = pt.gens;
  return m;
}

void enumerate_points(const AlgebraPtr& alg, int n, const CensusOptions& opt,
                      const std::function<bool(const VarietyPoint&)>& f) {
  const auto& pres = alg->pres;
  const i64 p = pres.p;
  const int d = pres.d();
  const int cells = d * n * n;
  if (n == 0) {
    VarietyPoint pt;
    for (int i = 0; i < d; ++i) pt.gens.push_back(Mat(p, 0, 0));
    f(pt);
    return;
  }
  auto materialize = [&](const std::vector<i64>& flat) {
    VarietyPoint pt;
    for (int i = 0; i < d; ++i) {
      Mat g(p, n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          g.set(r, c, flat[(static_cast<size_t>(i) * n + r) * n + c]);
      pt.gens.push_back(std::move(g));
    }
    return pt;
  };
  if (opt.exhaustive) {
    if (!exhaustive_fits(p, cells, opt.budget))
      throw std::invalid_argument(
          "exhaustive scan exceeds the point budget; use sampling");
    std::vector<i64> flat(cells, 0);
    for (;;) {
      VarietyPoint pt = materialize(flat);
      if (satisfies_relations(alg, pt.gens))
        if (!f(pt)) return;
      int i = cells - 1;
      while (i >= 0 && ++flat[i] == p) flat[i--] = 0;
      if (i < 0) break;
    }
    return;
  }
  std::mt19937_64 rng(opt.seed ^ 0xce4525ULL);
  for (u64 it = 0; it < opt.sample; ++it) {
    std::vector<i64> flat(cells);
    for (int i = 0; i < cells; ++i) flat[i] = static_cast<i64>(rng() % p);
    VarietyPoint pt = materialize(flat);
    if (satisfies_relations(alg, pt.gens))
      if (!f(pt)) return;
  }
}

bool no_projective_submodule_test(const ModuleRep& m_fixed,
                                  const VarietyPoint& sigma, int i, int s) {
  ModuleRep l = point_to_module(m_fixed.alg, sigma);
  ModuleRep t = tensor(m_fixed, l);
  const auto& pim = get_pims(m_fixed.alg).pims.at(i);
  return socle_element_action(t, m_fixed.alg, i).rank() < s * pim.t;
}

CensusReport endotrivial_census(const AlgebraPtr& alg, int n,
                                const CensusOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  CensusReport rep;
  rep.algebra = alg->pres.tag;
  rep.n = n;
  rep.p = alg->pres.p;
  rep.sampled = !opt.exhaustive;

  auto classify = [&](const ModuleRep& m) {
    ++rep.valid_points;
    if (!is_endotrivial(m)) return;
    ++rep.endotrivial_points;
    for (size_t c = 0; c < rep.representatives.size(); ++c) {
      Iso iso = is_isomorphic(rep.representatives[c], m, opt.seed);
      if (iso == Iso::Yes) {
        ++rep.orbit_counts[c];
        return;
      }
      if (iso == Iso::Indeterminate) {
        ++rep.indeterminate_points;
        return;
      }
    }
    rep.representatives.push_back(m);
    rep.orbit_counts.push_back(1);
  };

  if (alg->pres.d() == 1 && opt.exhaustive && n > 0) {
    // d = 1: isomorphism classes are conjugacy orbits of one p-nilpotent
    // matrix, so scanning Jordan canonical forms (partitions with parts
    // <= p) covers every class once.
    rep.reduced = true;
    std::vector<std::vector<int>> parts;
    std::vector<int> cur;
    partitions_bounded(n, static_cast<int>(alg->pres.p), cur, parts);
    for (const auto& part : parts) {
      ++rep.points_scanned;
      VarietyPoint pt;
      pt.gens.push_back(jordan_nilpotent(alg->pres.p, n, part));
      if (satisfies_relations(alg, pt.gens))
        classify(point_to_module(alg, pt));
    }
  } else {
    enumerate_points(alg, n, opt, [&](const VarietyPoint& pt) {
      ++rep.points_scanned;
      classify(point_to_module(alg, pt));
      return true;
    });
  }
  rep.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::vector<ModuleRep> one_dim_twist_orbit(const AlgebraPtr& alg,
                                           const ModuleRep& m) {
  const auto& pres = alg->pres;
  auto tor = pres.torus_indices();
  int count = 1;
  for (size_t i = 0; i < tor.size(); ++i) count *= static_cast<int>(pres.p);
  std::vector<ModuleRep> out;
  std::vector<i64> hv(tor.size(), 0);
  for (int idx = 0; idx < count; ++idx) {
    ModuleRep cand = tensor(character_module_hvals(alg, hv), m);
    bool fresh = true;
    for (const auto& known : out)
      if (is_isomorphic(known, cand) == Iso::Yes) fresh = false;
    if (fresh) out.push_back(cand);
    for (int i = static_cast<int>(tor.size()) - 1; i >= 0; --i) {
      if (++hv[i] < pres.p) break;
      hv[i] = 0;
    }
  }
  return out;
}

}  // namespace endolie
