#include "endolie/structure.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "endolie/weyl.hpp"

namespace endolie {

namespace {

/// Iteratively intersects kernels; returns a basis of the joint kernel.
Mat joint_kernel(i64 p, int dim, const std::vector<Mat>& mats) {
  Mat basis = Mat::identity(p, dim);
  for (const auto& m : mats) {
    if (basis.cols() == 0) break;
    Mat k = (m * basis).kernel();
    basis = basis * k;
  }
  return basis;
}

/// Applies the PBW monomial with the given full exponent vector to v.
std::vector<i64> mon_apply(const ModuleRep& m, const std::vector<int>& e,
                           std::vector<i64> v) {
  for (int i = m.alg->pres.d() - 1; i >= 0; --i)
    for (int k = 0; k < e[i]; ++k) v = m.act[i].apply(v);
  return v;
}

/// Exponent vectors of the induced-module basis: monomials supported on
/// the nilpotent slots, lexicographic with the last slot fastest.
std::vector<std::vector<int>> induced_exps(const PBWAlgebra& alg) {
  auto nil = alg.pres.nilpotent_indices();
  const int p = static_cast<int>(alg.pres.p);
  int n = 1;
  for (size_t i = 0; i < nil.size(); ++i) n *= p;
  std::vector<std::vector<int>> out;
  std::vector<int> e(alg.pres.d(), 0);
  for (int idx = 0; idx < n; ++idx) {
    out.push_back(e);
    for (int i = static_cast<int>(nil.size()) - 1; i >= 0; --i) {
      if (++e[nil[i]] < p) break;
      e[nil[i]] = 0;
    }
  }
  return out;
}

/// Product over nilpotent generators of act(f_i)^(p-1), in basis order.
Mat f_top_matrix(const ModuleRep& m) {
  const auto& g = m.alg->pres;
  Mat r = Mat::identity(g.p, m.dim);
  for (int i : g.nilpotent_indices()) r = r * m.act[i].pow(g.p - 1);
  return r;
}

/// Projector onto the joint hvals-eigenspace of the torus generators:
/// product of I - (act(h_t) - c_t)^(p-1).
Mat torus_projector(const ModuleRep& m, const std::vector<i64>& hvals) {
  const auto& g = m.alg->pres;
  Mat r = Mat::identity(g.p, m.dim);
  auto tor = g.torus_indices();
  for (size_t t = 0; t < tor.size(); ++t) {
    Mat d = m.act[tor[t]] - Mat::identity(g.p, m.dim).scaled(hvals[t]);
    r = r * (Mat::identity(g.p, m.dim) - d.pow(g.p - 1));
  }
  return r;
}

std::vector<i64> rand_vec(i64 p, int n, std::mt19937_64& rng) {
  std::vector<i64> v(n);
  for (int i = 0; i < n; ++i) v[i] = static_cast<i64>(rng() % p);
  return v;
}

ModuleRep ungraded(const ModuleRep& m) {
  ModuleRep r = m;
  r.grading.reset();
  return r;
}

/// Full matrix of the hom P_i -> M sending the cyclic generator to v.
Mat hom_from_generator_image(const Pim& pim, const ModuleRep& m,
                             const std::vector<i64>& v) {
  const auto& alg = *m.alg;
  if (!pim.u_is_element) {
    auto exps = induced_exps(alg);
    Mat psi(alg.pres.p, m.dim, pim.module.dim);
    for (int b = 0; b < pim.module.dim; ++b) {
      auto col = mon_apply(m, exps[b], v);
      for (int r = 0; r < m.dim; ++r) psi.set(r, b, col[r]);
    }
    return psi;
  }
  // generic: psi * cyclic_cols = (monomials applied to v)
  Mat img(alg.pres.p, m.dim, alg.dim);
  for (int e = 0; e < alg.dim; ++e) {
    auto col = mon_apply(m, alg.exps[e], v);
    for (int r = 0; r < m.dim; ++r) img.set(r, e, col[r]);
  }
  auto sol = pim.cyclic_cols.transpose().solve_matrix(img.transpose());
  if (!sol) throw std::logic_error("cyclic hom solve failed");
  return sol->transpose();
}

/// Generator-image candidates for Hom(P_i, M): a basis of the solution
/// space {v : ann(g).v = 0} (the torus eigenspace in the triangular case).
Mat hom_generator_images(const Pim& pim, const ModuleRep& m) {
  if (!pim.u_is_element) return torus_eigenspace(m, pim.hvals);
  std::vector<Mat> conds;
  for (const auto& k : pim.ann_basis) conds.push_back(act_element(m, k));
  return joint_kernel(m.alg->pres.p, m.dim, conds);
}

/// Radical columns straight from an explicit jacobson basis (used while
/// the pim cache is still being built).
Mat radical_cols_from_jacobson(const ModuleRep& m,
                               const std::vector<std::vector<i64>>& jac) {
  Mat cols(m.alg->pres.p, m.dim, 0);
  for (const auto& j : jac) cols = Mat::hstack(cols, act_element(m, j));
  return cols.column_space();
}

void build_pims_triangular(const AlgebraPtr& alg, PimSet& out);
void build_pims_sl2g1(const AlgebraPtr& alg, PimSet& out);

}  // namespace

Mat torus_eigenspace(const ModuleRep& m, const std::vector<i64>& hvals) {
  const auto& g = m.alg->pres;
  auto tor = g.torus_indices();
  if (hvals.size() != tor.size())
    throw std::invalid_argument("torus value count");
  std::vector<Mat> mats;
  for (size_t t = 0; t < tor.size(); ++t)
    mats.push_back(m.act[tor[t]] - Mat::identity(g.p, m.dim).scaled(hvals[t]));
  return joint_kernel(g.p, m.dim, mats);
}

Mat graded_column_space(const Mat& cols,
                        const std::vector<Weight>* row_weights) {
  if (!row_weights) return cols.column_space();
  std::map<Weight, std::vector<int>> groups;
  for (int c = 0; c < cols.cols(); ++c) {
    std::optional<Weight> w;
    for (int r = 0; r < cols.rows(); ++r)
      if (cols.at(r, c) != 0) {
        if (w && *w != (*row_weights)[r]) return cols.column_space();
        w = (*row_weights)[r];
      }
    if (w) groups[*w].push_back(c);
  }
  Mat out(cols.p(), cols.rows(), 0);
  for (const auto& [w, idx] : groups)
    out = Mat::hstack(out, cols.select_cols(idx).column_space());
  return out;
}

HomSpace hom_space(const ModuleRep& m, const ModuleRep& n) {
  if (m.alg != n.alg) throw std::invalid_argument("algebra mismatch");
  const auto& g = m.alg->pres;
  const int dm = m.dim, dn = n.dim;
  PrimeField f(g.p);
  // unknowns T (dn x dm), equations T*act_M(x) - act_N(x)*T = 0
  Mat sys(g.p, g.d() * dn * dm, dn * dm);
  for (int i = 0; i < g.d(); ++i) {
    const Mat& a = m.act[i];
    const Mat& b = n.act[i];
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) {
        int row = (i * dn + r) * dm + c;
        for (int k = 0; k < dm; ++k)
          sys.set(row, r * dm + k,
                  f.add(sys.at(row, r * dm + k), a.at(k, c)));
        for (int k = 0; k < dn; ++k)
          sys.set(row, k * dm + c,
                  f.sub(sys.at(row, k * dm + c), b.at(r, k)));
      }
  }
  Mat ker = sys.kernel();
  HomSpace h;
  h.source = &m;
  h.target = &n;
  for (int j = 0; j < ker.cols(); ++j) {
    Mat t(g.p, dn, dm);
    for (int r = 0; r < dn; ++r)
      for (int c = 0; c < dm; ++c) t.set(r, c, ker.at(r * dm + c, j));
    h.basis.push_back(t);
  }
  return h;
}

ModuleRep induced_pim(const AlgebraPtr& alg, const std::vector<i64>& hvals,
                      const std::optional<Weight>& base) {
  if (!alg->triangular)
    throw std::invalid_argument("induced modules need a triangular preset");
  const auto& g = alg->pres;
  PrimeField f(g.p);
  auto tor = g.torus_indices();
  if (hvals.size() != tor.size())
    throw std::invalid_argument("torus value count");
  auto exps = induced_exps(*alg);
  int n = static_cast<int>(exps.size());
  std::map<std::vector<int>, int> idx;
  for (int b = 0; b < n; ++b) idx[exps[b]] = b;
  ModuleRep m;
  m.alg = alg;
  m.dim = n;
  for (int i = 0; i < g.d(); ++i) {
    Mat a(g.p, n, n);
    for (int b = 0; b < n; ++b) {
      auto col = alg->left_gen[i].col(alg->index_of(exps[b]));
      for (int k = 0; k < alg->dim; ++k) {
        if (col[k] == 0) continue;
        const auto& e = alg->exps[k];
        i64 scal = col[k];
        std::vector<int> nilpart(g.d(), 0);
        for (int s = 0; s < g.d(); ++s)
          if (g.nilpotent[s]) nilpart[s] = e[s];
        for (size_t t = 0; t < tor.size(); ++t)
          scal = f.mul(scal, f.pow(f.reduce(hvals[t]), e[tor[t]]));
        int row = idx.at(nilpart);
        a.set(row, b, f.add(a.at(row, b), scal));
      }
    }
    m.act.push_back(a);
  }
  if (base) {
    if (!g.weights) throw std::invalid_argument("algebra has no weights");
    std::vector<Weight> grad;
    for (int b = 0; b < n; ++b) {
      Weight w = *base;
      for (int s = 0; s < g.d(); ++s)
        w = weight_add(w, weight_scale(exps[b][s], (*g.weights)[s]));
      grad.push_back(w);
    }
    m.grading = grad;
  }
  auto rep = check_valid(m);
  if (!rep.ok)
    throw std::logic_error("induced module invalid: " + rep.violation);
  return m;
}

const PimSet& get_pims(const AlgebraPtr& alg) {
  std::lock_guard<std::mutex> lock(alg->pim_mutex);
  if (!alg->pim_cache) {
    auto set = std::make_shared<PimSet>();
    if (alg->triangular)
      build_pims_triangular(alg, *set);
    else if (alg->pres.tag == "sl2-g1")
      build_pims_sl2g1(alg, *set);
    else
      throw std::invalid_argument("unsupported algebra class");
    alg->pim_cache = set;
  }
  return *alg->pim_cache;
}

Mat socle_element_action(const ModuleRep& m, const AlgebraPtr& alg, int i) {
  const auto& pim = get_pims(alg).pims.at(i);
  if (pim.u_is_element) return act_element(m, pim.u);
  return f_top_matrix(m) * torus_projector(m, pim.hvals);
}

Mat radical_basis(const ModuleRep& m) {
  const auto& g = m.alg->pres;
  if (m.alg->triangular) {
    Mat cols(g.p, m.dim, 0);
    for (int i : g.nilpotent_indices()) cols = Mat::hstack(cols, m.act[i]);
    const std::vector<Weight>* rw = m.graded() ? &(*m.grading) : nullptr;
    Mat basis = graded_column_space(cols, rw);
    for (;;) {
      Mat bigger = basis;
      for (int i = 0; i < g.d(); ++i)
        bigger = Mat::hstack(bigger, m.act[i] * basis);
      bigger = graded_column_space(bigger, rw);
      if (bigger.cols() == basis.cols()) break;
      basis = bigger;
    }
    return basis;
  }
  return radical_cols_from_jacobson(m, get_pims(m.alg).jacobson);
}

ModuleRep radical_module(const ModuleRep& m) {
  return sub_module(m, radical_basis(m)).module;
}

SubModule socle(const ModuleRep& m) {
  const auto& g = m.alg->pres;
  std::vector<Mat> mats;
  if (m.alg->triangular) {
    for (int i : g.nilpotent_indices()) mats.push_back(m.act[i]);
  } else {
    for (const auto& j : get_pims(m.alg).jacobson)
      mats.push_back(act_element(m, j));
  }
  return sub_module(m, joint_kernel(g.p, m.dim, mats));
}

QuotientModule top(const ModuleRep& m) {
  return quotient_module(m, radical_basis(m));
}

std::vector<Mat> pim_hom_candidates(const ModuleRep& m, int pim_index) {
  const auto& pim = get_pims(m.alg).pims.at(pim_index);
  Mat images = hom_generator_images(pim, m);
  std::vector<Mat> out;
  for (int j = 0; j < images.cols(); ++j)
    out.push_back(hom_from_generator_image(pim, m, images.col(j)));
  return out;
}

SplitResult dade_split(const ModuleRep& m_in, int pim_index) {
  const auto& alg = m_in.alg;
  const auto& ps = get_pims(alg);
  const auto& pim = ps.pims.at(pim_index);
  const i64 p = alg->pres.p;
  ModuleRep m = ungraded(m_in);
  SplitResult res;
  res.complement = m;
  res.inclusion = Mat(p, m.dim, 0);
  res.projection = Mat(p, 0, m.dim);
  if (m.dim == 0) return res;
  Mat u_act = socle_element_action(m, alg, pim_index);
  int r = u_act.rank();
  if (r % pim.t != 0)
    throw std::logic_error("socle rank not divisible by pim socle rank");
  int a = r / pim.t;
  res.multiplicity = a;
  if (a == 0) return res;
  const int dp = pim.module.dim;
  // forward maps with independent socle images
  std::vector<Mat> cands;
  {
    Mat images = hom_generator_images(pim, m);
    for (int j = 0; j < images.cols(); ++j)
      cands.push_back(hom_from_generator_image(pim, m, images.col(j)));
  }
  std::vector<Mat> chosen;
  Mat soc_img(p, m.dim, 0);
  std::mt19937_64 rng(0x5eedULL);
  size_t next = 0;
  int tries = 0;
  while (static_cast<int>(chosen.size()) < a) {
    Mat psi(p, 0, 0);
    if (next < cands.size()) {
      psi = cands[next++];
    } else {
      if (++tries > 2000)
        throw std::logic_error("could not assemble independent pim copies");
      auto c = rand_vec(p, static_cast<int>(cands.size()), rng);
      psi = Mat(p, m.dim, dp);
      for (size_t s = 0; s < cands.size(); ++s)
        if (c[s]) psi = psi + cands[s].scaled(c[s]);
    }
    Mat s = psi * pim.socle_basis;
    Mat test = Mat::hstack(soc_img, s);
    if (test.rank() == soc_img.cols() + pim.socle_basis.cols()) {
      soc_img = test;
      chosen.push_back(psi);
    }
  }
  Mat big_psi(p, m.dim, 0);
  for (const auto& c : chosen) big_psi = Mat::hstack(big_psi, c);
  // retraction candidates through the dual pim
  ModuleRep d = dual(m);
  const auto& dpim = ps.pims.at(pim.dual_index);
  std::vector<Mat> thetas;
  {
    Mat images = hom_generator_images(dpim, d);
    for (int j = 0; j < images.cols(); ++j) {
      Mat s = hom_from_generator_image(dpim, d, images.col(j));
      thetas.push_back(pim.sigma_inv_t * s.transpose());
    }
  }
  if (thetas.empty()) throw std::logic_error("no retraction candidates");
  const int nc = static_cast<int>(thetas.size());
  // solve sum_n c[n] * (theta_n psi_s) = delta_{rs} I per block row
  Mat sys(p, a * dp * dp, nc);
  for (int n = 0; n < nc; ++n)
    for (int s = 0; s < a; ++s) {
      Mat t = thetas[n] * chosen[s];
      for (int x = 0; x < dp; ++x)
        for (int y = 0; y < dp; ++y)
          sys.set((s * dp + x) * dp + y, n, t.at(x, y));
    }
  Mat rhs(p, a * dp * dp, a);
  for (int rblk = 0; rblk < a; ++rblk)
    for (int x = 0; x < dp; ++x)
      rhs.set((rblk * dp + x) * dp + x, rblk, 1);
  auto coef = sys.solve_matrix(rhs);
  if (!coef) throw std::logic_error("no retraction solves the split");
  Mat big_theta(p, 0, m.dim);
  for (int rblk = 0; rblk < a; ++rblk) {
    Mat th(p, dp, m.dim);
    for (int n = 0; n < nc; ++n)
      if (coef->at(n, rblk)) th = th + thetas[n].scaled(coef->at(n, rblk));
    big_theta = Mat::vstack(big_theta, th);
  }
  if (!(big_theta * big_psi == Mat::identity(p, a * dp)))
    throw std::logic_error("retraction verification failed");
  res.inclusion = big_psi;
  res.projection = big_theta;
  res.complement = sub_module(m, big_theta.kernel()).module;
  return res;
}

ModuleRep strip_projectives(const ModuleRep& m_in) {
  const auto& ps = get_pims(m_in.alg);
  ModuleRep cur = ungraded(m_in);
  for (size_t i = 0; i < ps.pims.size(); ++i)
    cur = dade_split(cur, static_cast<int>(i)).complement;
  for (size_t i = 0; i < ps.pims.size(); ++i)
    if (socle_element_action(cur, m_in.alg, static_cast<int>(i)).rank() != 0)
      throw std::logic_error("strip left a projective summand");
  return cur;
}

std::optional<Mat> find_invertible(const HomSpace& h, u64 seed) {
  if (h.basis.empty()) return std::nullopt;
  const i64 p = h.basis[0].p();
  auto invertible = [](const Mat& t) {
    return t.rows() == t.cols() && t.rank() == t.rows();
  };
  for (const auto& b : h.basis)
    if (invertible(b)) return b;
  const int n = h.dim();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int it = 0; it < 500; ++it) {
    Mat t(p, h.basis[0].rows(), h.basis[0].cols());
    for (int j = 0; j < n; ++j) {
      i64 c = static_cast<i64>(rng() % p);
      if (c) t = t + h.basis[j].scaled(c);
    }
    if (invertible(t)) return t;
  }
  if (n <= 6) {
    std::vector<i64> c(n, 0);
    for (;;) {
      int k = 0;
      while (k < n && ++c[k] == p) c[k++] = 0;
      if (k == n) break;
      Mat t(p, h.basis[0].rows(), h.basis[0].cols());
      for (int j = 0; j < n; ++j)
        if (c[j]) t = t + h.basis[j].scaled(c[j]);
      if (invertible(t)) return t;
    }
  }
  return std::nullopt;
}

Iso is_isomorphic(const ModuleRep& m, const ModuleRep& n, u64 seed) {
  if (m.alg != n.alg) throw std::invalid_argument("algebra mismatch");
  if (m.dim != n.dim) return Iso::No;
  if (m.dim == 0) return Iso::Yes;
  const auto& g = m.alg->pres;
  for (int i = 0; i < g.d(); ++i) {
    Mat a = m.act[i], b = n.act[i];
    for (int k = 1; k < g.p; ++k) {
      if (a.rank() != b.rank()) return Iso::No;
      a = a * m.act[i];
      b = b * n.act[i];
    }
  }
  for (int t : g.torus_indices())
    for (i64 c = 0; c < g.p; ++c) {
      Mat im = m.act[t] - Mat::identity(g.p, m.dim).scaled(c);
      Mat in = n.act[t] - Mat::identity(g.p, n.dim).scaled(c);
      if (im.rank() != in.rank()) return Iso::No;
    }
  HomSpace h = hom_space(m, n);
  if (h.basis.empty()) return Iso::No;
  if (find_invertible(h, seed)) return Iso::Yes;
  return h.dim() <= 6 ? Iso::No : Iso::Indeterminate;
}

std::vector<ModuleRep> decompose(const ModuleRep& m_in, u64 seed) {
  ModuleRep m = m_in;
  if (m.dim == 0) return {};
  HomSpace end = hom_space(m, m);
  const i64 p = m.alg->pres.p;
  auto try_split = [&](const Mat& z) -> std::optional<std::pair<Mat, Mat>> {
    Mat n = z.pow(m.dim);
    int r = n.rank();
    if (r == 0 || r == m.dim) return std::nullopt;
    return std::make_pair(n.kernel(), n.column_space());
  };
  std::optional<std::pair<Mat, Mat>> split;
  for (const auto& z : end.basis) {
    for (i64 c = 0; c < p && !split; ++c)
      split = try_split(z - Mat::identity(p, m.dim).scaled(c));
    if (split) break;
  }
  if (!split) {
    std::mt19937_64 rng(seed ^ 0xda7aba5eULL);
    for (int it = 0; it < 400 && !split; ++it) {
      Mat z(p, m.dim, m.dim);
      for (const auto& b : end.basis) {
        i64 c = static_cast<i64>(rng() % p);
        if (c) z = z + b.scaled(c);
      }
      for (i64 c = 0; c < p && !split; ++c)
        split = try_split(z - Mat::identity(p, m.dim).scaled(c));
    }
  }
  if (!split) return {m};
  auto left = decompose(sub_module(m, split->first).module, seed + 1);
  auto right = decompose(sub_module(m, split->second).module, seed + 2);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

Cover projective_cover(const ModuleRep& m) {
  const auto& alg = m.alg;
  const auto& ps = get_pims(alg);
  const i64 p = alg->pres.p;
  if (m.dim == 0) {
    Cover c;
    c.p = zero_module(alg);
    c.surjection = Mat(p, 0, 0);
    return c;
  }
  QuotientModule t = top(m);
  bool graded_path = alg->triangular && m.graded() && t.module.graded();
  if (graded_path) {
    auto tor = alg->pres.torus_indices();
    ModuleRep cover;
    cover.alg = alg;
    cover.dim = 0;
    cover.act.assign(alg->pres.d(), Mat(p, 0, 0));
    cover.grading = std::vector<Weight>{};
    Mat surj(p, m.dim, 0);
    for (int j = 0; j < t.module.dim; ++j) {
      Weight nu = (*t.module.grading)[j];
      std::vector<int> block;
      for (int r = 0; r < m.dim; ++r)
        if ((*m.grading)[r] == nu) block.push_back(r);
      Mat bmat(p, m.dim, static_cast<int>(block.size()));
      for (size_t s = 0; s < block.size(); ++s)
        bmat.set(block[s], static_cast<int>(s), 1);
      std::vector<i64> e(t.module.dim, 0);
      e[j] = 1;
      auto x = (t.projection * bmat).solve(e);
      if (!x) throw std::logic_error("no homogeneous lift of top vector");
      auto v = bmat.apply(*x);
      std::vector<i64> hv;
      for (size_t s = 0; s < tor.size(); ++s) hv.push_back(nu[s]);
      Pim tmp;
      tmp.module = induced_pim(alg, hv, nu);
      tmp.hvals = hv;
      tmp.u_is_element = false;
      Mat psi = hom_from_generator_image(tmp, m, v);
      ModuleRep merged;
      merged.alg = alg;
      merged.dim = cover.dim + tmp.module.dim;
      for (int i = 0; i < alg->pres.d(); ++i)
        merged.act.push_back(Mat::diag_sum(cover.act[i], tmp.module.act[i]));
      std::vector<Weight> gw = *cover.grading;
      gw.insert(gw.end(), tmp.module.grading->begin(),
                tmp.module.grading->end());
      merged.grading = gw;
      cover = merged;
      surj = Mat::hstack(surj, psi);
    }
    if ((t.projection * surj).rank() != t.module.dim || surj.rank() != m.dim)
      throw std::logic_error("graded cover is not surjective");
    Cover c;
    c.p = cover;
    c.surjection = surj;
    return c;
  }
  // ungraded route, over all pims
  ModuleRep m0 = ungraded(m);
  ModuleRep cover = ungraded(zero_module(alg));
  Mat surj(p, m.dim, 0);
  Mat composed(p, t.module.dim, 0);  // achieved image inside the top
  for (size_t i = 0; i < ps.pims.size(); ++i) {
    auto cands = pim_hom_candidates(m0, static_cast<int>(i));
    if (cands.empty()) continue;
    Mat all(p, t.module.dim, 0);
    for (const auto& c : cands) all = Mat::hstack(all, t.projection * c);
    int reachable = Mat::hstack(composed, all).rank();
    std::mt19937_64 rng(0xc0ffeeULL + i);
    size_t next = 0;
    int tries = 0;
    while (composed.rank() < reachable) {
      Mat psi(p, 0, 0);
      if (next < cands.size()) {
        psi = cands[next++];
      } else {
        if (++tries > 2000)
          throw std::logic_error("cover assembly stalled");
        auto c = rand_vec(p, static_cast<int>(cands.size()), rng);
        psi = Mat(p, m.dim, ps.pims[i].module.dim);
        for (size_t s = 0; s < cands.size(); ++s)
          if (c[s]) psi = psi + cands[s].scaled(c[s]);
      }
      Mat test = Mat::hstack(composed, t.projection * psi);
      if (test.rank() > composed.rank()) {
        composed = test;
        cover = direct_sum(cover, ungraded(ps.pims[i].module));
        surj = Mat::hstack(surj, psi);
      }
    }
  }
  if (composed.rank() != t.module.dim || surj.rank() != m.dim)
    throw std::logic_error("cover is not surjective");
  Cover c;
  c.p = cover;
  c.surjection = surj;
  return c;
}

Hull injective_hull(const ModuleRep& m) {
  Cover c = projective_cover(dual(m));
  Hull h;
  h.i = dual(c.p);
  h.injection = c.surjection.transpose();
  return h;
}

Mat kernel_of_map(const Mat& f, const std::vector<Weight>* domain_weights) {
  if (!domain_weights) return f.kernel();
  std::map<Weight, std::vector<int>> groups;
  for (int c = 0; c < f.cols(); ++c) groups[(*domain_weights)[c]].push_back(c);
  Mat out(f.p(), f.cols(), 0);
  for (const auto& [w, idx] : groups) {
    Mat k = f.select_cols(idx).kernel();
    Mat emb(f.p(), f.cols(), k.cols());
    for (size_t r = 0; r < idx.size(); ++r)
      for (int c = 0; c < k.cols(); ++c)
        emb.set(idx[r], c, k.at(static_cast<int>(r), c));
    out = Mat::hstack(out, emb);
  }
  return out;
}

Mat random_matrix(i64 p, int rows, int cols, std::mt19937_64& rng) {
  Mat m(p, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.set(r, c, static_cast<i64>(rng() % p));
  return m;
}

Mat random_invertible(i64 p, int n, std::mt19937_64& rng) {
  for (;;) {
    Mat m = random_matrix(p, n, n, rng);
    if (m.rank() == n) return m;
  }
}

namespace {

void build_pims_triangular(const AlgebraPtr& alg, PimSet& out) {
  const auto& g = alg->pres;
  PrimeField f(g.p);
  auto tor = g.torus_indices();
  auto nil = g.nilpotent_indices();
  int count = 1;
  for (size_t i = 0; i < tor.size(); ++i) count *= static_cast<int>(g.p);
  std::vector<std::vector<i64>> chars;
  std::vector<i64> hv(tor.size(), 0);
  for (int idx = 0; idx < count; ++idx) {
    chars.push_back(hv);
    for (int i = static_cast<int>(tor.size()) - 1; i >= 0; --i) {
      if (++hv[i] < g.p) break;
      hv[i] = 0;
    }
  }
  auto exps = induced_exps(*alg);
  int socle_index = -1;
  for (size_t b = 0; b < exps.size(); ++b) {
    bool istop = true;
    for (int i : nil)
      if (exps[b][i] != g.p - 1) istop = false;
    if (istop) socle_index = static_cast<int>(b);
  }
  for (int i = 0; i < count; ++i) {
    Pim pim;
    pim.hvals = chars[i];
    pim.module = induced_pim(alg, chars[i], std::nullopt);
    pim.u_is_element = false;
    pim.t = 1;
    pim.top_simple = ungraded(character_module_hvals(alg, chars[i]));
    pim.socle_basis = Mat(g.p, pim.module.dim, 1);
    pim.socle_basis.set(socle_index, 0, 1);
    out.pims.push_back(std::move(pim));
  }
  for (int i = 0; i < count; ++i) {
    Pim& pim = out.pims[i];
    // socle character of P(lambda), negated, is the top of the dual
    std::vector<i64> mu;
    for (size_t t = 0; t < tor.size(); ++t) {
      i64 s = chars[i][t];
      for (int ni : nil)
        s = f.add(s, f.mul(f.reduce(g.p - 1),
                           f.reduce(g.brackets[tor[t]][ni][ni])));
      mu.push_back(f.neg(s));
    }
    int j = -1;
    for (int k = 0; k < count; ++k)
      if (chars[k] == mu) j = k;
    if (j < 0) throw std::logic_error("dual character not found");
    pim.dual_index = j;
    ModuleRep d = dual(pim.module);
    Mat eig = torus_eigenspace(d, mu);
    std::optional<Mat> sigma;
    for (int c = 0; c < eig.cols() && !sigma; ++c) {
      Mat s = hom_from_generator_image(out.pims[j], d, eig.col(c));
      if (s.rank() == pim.module.dim) sigma = s;
    }
    std::mt19937_64 rng(0x51D0ULL + i);
    for (int it = 0; it < 500 && !sigma; ++it) {
      auto cf = rand_vec(g.p, eig.cols(), rng);
      std::vector<i64> v(d.dim, 0);
      PrimeField pf(g.p);
      for (int c = 0; c < eig.cols(); ++c)
        for (int r = 0; r < d.dim; ++r)
          v[r] = pf.add(v[r], pf.mul(cf[c], eig.at(r, c)));
      Mat s = hom_from_generator_image(out.pims[j], d, v);
      if (s.rank() == pim.module.dim) sigma = s;
    }
    if (!sigma) throw std::logic_error("dual pim isomorphism not found");
    pim.sigma_inv_t = sigma->inverse()->transpose();
  }
}

void build_pims_sl2g1(const AlgebraPtr& alg, PimSet& out) {
  const auto& g = alg->pres;
  const i64 p = g.p;
  std::vector<ModuleRep> simples;
  for (i64 m = 0; m < p; ++m)
    simples.push_back(ungraded(build_weyl_sl2(alg, m)));
  // Jacobson radical of A = joint annihilator of the simples
  ModuleRep reg = ungraded(regular_module(alg));
  {
    int rows = 0;
    for (const auto& s : simples) rows += s.dim * s.dim;
    Mat sys(p, rows, alg->dim);
    int off = 0;
    for (const auto& s : simples) {
      for (int e = 0; e < alg->dim; ++e) {
        std::vector<i64> unit(alg->dim, 0);
        unit[e] = 1;
        Mat a = act_element(s, unit);
        for (int r = 0; r < s.dim; ++r)
          for (int c = 0; c < s.dim; ++c)
            sys.set(off + r * s.dim + c, e, a.at(r, c));
      }
      off += s.dim * s.dim;
    }
    Mat j = sys.kernel();
    for (int c = 0; c < j.cols(); ++c) out.jacobson.push_back(j.col(c));
  }
  ModuleRep st = ungraded(steinberg_sl2(alg));
  std::vector<ModuleRep> pim_mods;
  for (i64 m = 0; m < p; ++m) {
    auto factors = decompose(tensor(st, simples[m]));
    for (auto& fac : factors) {
      bool fresh = true;
      for (const auto& known : pim_mods)
        if (is_isomorphic(known, fac) == Iso::Yes) fresh = false;
      if (fresh) pim_mods.push_back(fac);
    }
  }
  if (static_cast<int>(pim_mods.size()) != p)
    throw std::logic_error("unexpected pim count for sl2-g1");
  std::vector<Mat> jact;
  for (const auto& j : out.jacobson) jact.push_back(alg->left_mult(j));
  Mat soc_reg = joint_kernel(p, alg->dim, jact);
  ModuleRep soc_mod = sub_module(reg, soc_reg).module;
  for (auto& pm : pim_mods) {
    Pim pim;
    pim.module = pm;
    pim.u_is_element = true;
    Mat radp = radical_cols_from_jacobson(pm, out.jacobson);
    QuotientModule t = quotient_module(pm, radp);
    int which = -1;
    for (size_t s = 0; s < simples.size(); ++s)
      if (is_isomorphic(t.module, simples[s]) == Iso::Yes)
        which = static_cast<int>(s);
    if (which < 0) throw std::logic_error("pim top is not simple");
    pim.top_simple = simples[which];
    std::vector<Mat> jp;
    for (const auto& j : out.jacobson) jp.push_back(act_element(pm, j));
    pim.socle_basis = joint_kernel(p, pm.dim, jp);
    ModuleRep socp = sub_module(pm, pim.socle_basis).module;
    int soc_type = -1;
    for (size_t s = 0; s < simples.size(); ++s)
      if (is_isomorphic(socp, simples[s]) == Iso::Yes)
        soc_type = static_cast<int>(s);
    if (soc_type < 0) throw std::logic_error("pim socle is not simple");
    HomSpace iso = hom_space(simples[soc_type], soc_mod);
    std::optional<std::vector<i64>> u;
    int trank = 0;
    for (const auto& phi : iso.basis) {
      std::vector<i64> e0(simples[soc_type].dim, 0);
      e0[0] = 1;
      auto cand = soc_reg.apply(phi.apply(e0));
      Mat ua = act_element(pm, cand);
      if (ua.rank() > 0) {
        u = cand;
        trank = ua.rank();
        break;
      }
    }
    if (!u) throw std::logic_error("no socle element acts on the pim");
    pim.u = *u;
    pim.t = trank;
    // cyclic generator: first coordinate vector outside the radical
    int gidx = -1;
    for (int r = 0; r < pm.dim && gidx < 0; ++r) {
      Mat test = radp;
      Mat unit(p, pm.dim, 1);
      unit.set(r, 0, 1);
      if (Mat::hstack(test, unit).rank() == radp.cols() + 1) gidx = r;
    }
    if (gidx < 0) throw std::logic_error("no cyclic generator");
    std::vector<i64> gvec(pm.dim, 0);
    gvec[gidx] = 1;
    Mat cyc(p, pm.dim, alg->dim);
    for (int e = 0; e < alg->dim; ++e) {
      auto col = mon_apply(pm, alg->exps[e], gvec);
      for (int r = 0; r < pm.dim; ++r) cyc.set(r, e, col[r]);
    }
    if (cyc.rank() != pm.dim) throw std::logic_error("generator is not cyclic");
    pim.cyclic_cols = cyc;
    Mat ann = cyc.kernel();
    for (int c = 0; c < ann.cols(); ++c) pim.ann_basis.push_back(ann.col(c));
    out.pims.push_back(std::move(pim));
  }
  for (size_t i = 0; i < out.pims.size(); ++i) {
    Pim& pim = out.pims[i];
    ModuleRep d = dual(pim.module);
    for (size_t j = 0; j < out.pims.size() && pim.dual_index < 0; ++j) {
      HomSpace h = hom_space(out.pims[j].module, d);
      auto sigma = find_invertible(h);
      if (sigma) {
        pim.dual_index = static_cast<int>(j);
        pim.sigma_inv_t = sigma->inverse()->transpose();
      }
    }
    if (pim.dual_index < 0)
      throw std::logic_error("dual pim isomorphism not found");
  }
}

}  // namespace

}  // namespace endolie
