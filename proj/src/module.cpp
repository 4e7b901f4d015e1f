#include "endolie/module.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace endolie {

namespace {

void require_same_algebra(const ModuleRep& a, const ModuleRep& b) {
  if (a.alg != b.alg) throw std::invalid_argument("algebra mismatch");
}

}  // namespace

ValidityReport check_valid(const ModuleRep& m) {
  const auto& g = m.alg->pres;
  PrimeField f(g.p);
  if (static_cast<int>(m.act.size()) != g.d())
    return {false, "generator count mismatch"};
  for (int i = 0; i < g.d(); ++i)
    if (m.act[i].rows() != m.dim || m.act[i].cols() != m.dim ||
        m.act[i].p() != g.p)
      return {false, "action matrix shape mismatch at " + g.names[i]};
  for (int i = 0; i < g.d(); ++i)
    for (int j = i + 1; j < g.d(); ++j) {
      Mat lhs = m.act[i] * m.act[j] - m.act[j] * m.act[i];
      Mat rhs(g.p, m.dim, m.dim);
      for (int k = 0; k < g.d(); ++k) {
        i64 c = f.reduce(g.brackets[i][j][k]);
        if (c) rhs = rhs + m.act[k].scaled(c);
      }
      if (!(lhs == rhs))
        return {false, "bracket [" + g.names[i] + "," + g.names[j] + "]"};
    }
  for (int i = 0; i < g.d(); ++i) {
    Mat pw(g.p, m.dim, m.dim);
    for (int k = 0; k < g.d(); ++k) {
      i64 c = f.reduce(g.p_power[i][k]);
      if (c) pw = pw + m.act[k].scaled(c);
    }
    if (!(m.act[i].pow(g.p) == pw))
      return {false, "p-power of " + g.names[i]};
  }
  if (m.graded()) {
    if (static_cast<int>(m.grading->size()) != m.dim)
      return {false, "grading size mismatch"};
    if (!g.weights) return {false, "graded module over unweighted algebra"};
    for (int i = 0; i < g.d(); ++i) {
      Weight wi = (*g.weights)[i];
      for (int r = 0; r < m.dim; ++r)
        for (int c = 0; c < m.dim; ++c)
          if (m.act[i].at(r, c) != 0 &&
              (*m.grading)[r] != weight_add((*m.grading)[c], wi))
            return {false, "grading violated by " + g.names[i]};
    }
  }
  return {true, ""};
}

ModuleRep zero_module(const AlgebraPtr& alg) {
  ModuleRep m;
  m.alg = alg;
  m.dim = 0;
  for (int i = 0; i < alg->pres.d(); ++i)
    m.act.push_back(Mat(alg->pres.p, 0, 0));
  if (alg->pres.weights) m.grading = std::vector<Weight>{};
  return m;
}

ModuleRep trivial_module(const AlgebraPtr& alg) {
  return character_module(alg, Weight(alg->pres.rank, 0));
}

ModuleRep character_module_hvals(const AlgebraPtr& alg,
                                 const std::vector<i64>& hvals) {
  const auto& g = alg->pres;
  auto tor = g.torus_indices();
  if (hvals.size() != tor.size())
    throw std::invalid_argument("need one value per torus generator");
  ModuleRep m;
  m.alg = alg;
  m.dim = 1;
  m.act.assign(g.d(), Mat(g.p, 1, 1));
  PrimeField f(g.p);
  for (size_t j = 0; j < tor.size(); ++j)
    m.act[tor[j]].set(0, 0, f.reduce(hvals[j]));
  auto rep = check_valid(m);
  if (!rep.ok) throw std::invalid_argument("invalid character: " + rep.violation);
  return m;
}

ModuleRep character_module(const AlgebraPtr& alg, const Weight& lambda) {
  const auto& g = alg->pres;
  if (static_cast<int>(lambda.size()) != g.rank)
    throw std::invalid_argument("weight rank mismatch");
  std::vector<i64> hv;
  for (size_t j = 0; j < g.torus_indices().size(); ++j)
    hv.push_back(lambda.size() > j ? lambda[j] : 0);
  ModuleRep m = character_module_hvals(alg, hv);
  if (g.weights) m.grading = std::vector<Weight>{lambda};
  return m;
}

ModuleRep regular_module(const AlgebraPtr& alg) {
  ModuleRep m;
  m.alg = alg;
  m.dim = alg->dim;
  m.act = alg->left_gen;
  if (alg->pres.weights) {
    std::vector<Weight> grad;
    for (int idx = 0; idx < alg->dim; ++idx) {
      Weight w(alg->pres.rank, 0);
      for (int i = 0; i < alg->pres.d(); ++i)
        w = weight_add(w, weight_scale(alg->exps[idx][i],
                                       (*alg->pres.weights)[i]));
      grad.push_back(w);
    }
    m.grading = grad;
  }
  return m;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  require_same_algebra(a, b);
  ModuleRep m;
  m.alg = a.alg;
  m.dim = a.dim + b.dim;
  for (int i = 0; i < a.alg->pres.d(); ++i)
    m.act.push_back(Mat::diag_sum(a.act[i], b.act[i]));
  if (a.graded() && b.graded()) {
    std::vector<Weight> g = *a.grading;
    g.insert(g.end(), b.grading->begin(), b.grading->end());
    m.grading = g;
  }
  return m;
}

ModuleRep tensor(const ModuleRep& a, const ModuleRep& b) {
  require_same_algebra(a, b);
  ModuleRep m;
  m.alg = a.alg;
  m.dim = a.dim * b.dim;
  Mat ia = Mat::identity(a.alg->pres.p, a.dim);
  Mat ib = Mat::identity(a.alg->pres.p, b.dim);
  for (int i = 0; i < a.alg->pres.d(); ++i)
    m.act.push_back(a.act[i].kron(ib) + ia.kron(b.act[i]));
  if (a.graded() && b.graded()) {
    std::vector<Weight> g;
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < b.dim; ++c)
        g.push_back(weight_add((*a.grading)[r], (*b.grading)[c]));
    m.grading = g;
  }
  return m;
}

ModuleRep dual(const ModuleRep& m) {
  ModuleRep r;
  r.alg = m.alg;
  r.dim = m.dim;
  for (const auto& a : m.act) r.act.push_back(a.transpose().scaled(-1));
  if (m.graded()) {
    std::vector<Weight> g;
    for (const auto& w : *m.grading) g.push_back(weight_neg(w));
    r.grading = g;
  }
  return r;
}

ModuleRep twist(const ModuleRep& m, const Mat& phi) {
  const auto& g = m.alg->pres;
  if (phi.rows() != g.d() || phi.cols() != g.d())
    throw std::invalid_argument("automorphism shape mismatch");
  ModuleRep r;
  r.alg = m.alg;
  r.dim = m.dim;
  for (int i = 0; i < g.d(); ++i) r.act.push_back(act_lie(m, phi.col(i)));
  if (m.graded()) {
    bool keeps = true;
    for (int i = 0; i < g.d() && keeps; ++i)
      for (int j = 0; j < g.d() && keeps; ++j)
        if (i != j && phi.at(i, j) != 0) keeps = false;
    for (int t : g.torus_indices())
      if (phi.at(t, t) != 1) keeps = false;
    if (keeps) r.grading = m.grading;
  }
  auto rep = check_valid(r);
  if (!rep.ok)
    throw std::invalid_argument("twist by a non-automorphism: " + rep.violation);
  return r;
}

ModuleRep frobenius_twist_trivial(const AlgebraPtr& alg,
                                  const std::vector<Weight>& ws) {
  ModuleRep m;
  m.alg = alg;
  m.dim = static_cast<int>(ws.size());
  m.act.assign(alg->pres.d(), Mat(alg->pres.p, m.dim, m.dim));
  std::vector<Weight> g;
  for (const auto& w : ws) g.push_back(weight_scale(alg->pres.p, w));
  m.grading = g;
  return m;
}

ModuleRep restrict_along(const ModuleRep& m, const AlgebraPtr& sub,
                         const std::vector<std::vector<i64>>& images) {
  const auto& s = sub->pres;
  const auto& h = m.alg->pres;
  if (s.p != h.p) throw std::invalid_argument("characteristic mismatch");
  if (static_cast<int>(images.size()) != s.d())
    throw std::invalid_argument("need one image per sub-generator");
  // Lie-level bracket compatibility of the embedding
  PrimeField f(s.p);
  for (int i = 0; i < s.d(); ++i)
    for (int j = 0; j < s.d(); ++j) {
      std::vector<i64> lhs(h.d(), 0);
      for (int k = 0; k < s.d(); ++k) {
        i64 c = f.reduce(s.brackets[i][j][k]);
        for (int t = 0; t < h.d(); ++t)
          lhs[t] = f.add(lhs[t], f.mul(c, f.reduce(images[k][t])));
      }
      auto rhs = h.ad_of(images[i]).apply(images[j]);
      if (lhs != rhs)
        throw std::invalid_argument("embedding does not respect brackets");
    }
  ModuleRep r;
  r.alg = sub;
  r.dim = m.dim;
  for (int i = 0; i < s.d(); ++i) r.act.push_back(act_lie(m, images[i]));
  auto rep = check_valid(r);
  if (!rep.ok)
    throw std::invalid_argument("embedding is not restricted: " + rep.violation);
  return r;
}

Mat act_lie(const ModuleRep& m, const std::vector<i64>& lie) {
  const auto& g = m.alg->pres;
  if (static_cast<int>(lie.size()) != g.d())
    throw std::invalid_argument("lie coefficient size");
  PrimeField f(g.p);
  Mat r(g.p, m.dim, m.dim);
  for (int i = 0; i < g.d(); ++i) {
    i64 c = f.reduce(lie[i]);
    if (c) r = r + m.act[i].scaled(c);
  }
  return r;
}

Mat act_element(const ModuleRep& m, const std::vector<i64>& a) {
  const auto& alg = *m.alg;
  const auto& g = alg.pres;
  if (static_cast<int>(a.size()) != alg.dim)
    throw std::invalid_argument("element size");
  PrimeField f(g.p);
  // cache generator powers on demand
  std::vector<std::vector<Mat>> pows(g.d());
  auto gen_pow = [&](int i, int e) -> const Mat& {
    auto& v = pows[i];
    if (v.empty()) v.push_back(Mat::identity(g.p, m.dim));
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * m.act[i]);
    return v[e];
  };
  Mat r(g.p, m.dim, m.dim);
  for (int idx = 0; idx < alg.dim; ++idx) {
    i64 c = f.reduce(a[idx]);
    if (c == 0) continue;
    Mat term = Mat::identity(g.p, m.dim);
    bool first = true;
    for (int i = 0; i < g.d(); ++i) {
      int e = alg.exps[idx][i];
      if (e == 0) continue;
      term = first ? gen_pow(i, e) : term * gen_pow(i, e);
      first = false;
    }
    r = r + term.scaled(c);
  }
  return r;
}

SubModule sub_module(const ModuleRep& m, const Mat& basis) {
  if (basis.rows() != m.dim) throw std::invalid_argument("basis row count");
  if (basis.rank() != basis.cols())
    throw std::invalid_argument("basis columns dependent");
  SubModule s;
  s.module.alg = m.alg;
  s.module.dim = basis.cols();
  for (const auto& a : m.act) {
    auto x = basis.solve_matrix(a * basis);
    if (!x) throw std::invalid_argument("basis is not action-stable");
    s.module.act.push_back(*x);
  }
  s.inclusion = basis;
  if (m.graded()) {
    std::vector<Weight> g;
    bool homog = true;
    for (int c = 0; c < basis.cols() && homog; ++c) {
      std::optional<Weight> w;
      for (int r = 0; r < basis.rows(); ++r) {
        if (basis.at(r, c) == 0) continue;
        if (!w)
          w = (*m.grading)[r];
        else if (*w != (*m.grading)[r])
          homog = false;
      }
      g.push_back(w.value_or(Weight(m.alg->pres.rank, 0)));
    }
    if (homog) s.module.grading = g;
  }
  return s;
}

QuotientModule quotient_module(const ModuleRep& m, const Mat& basis) {
  if (basis.rows() != m.dim) throw std::invalid_argument("basis row count");
  const i64 p = m.alg->pres.p;
  // pivot rows of the subspace = pivot columns of basis^T
  RowEchelon re(basis.transpose());
  std::vector<bool> is_pivot_row(m.dim, false);
  for (int c : re.pivots) is_pivot_row[c] = true;
  std::vector<int> comp;
  for (int r = 0; r < m.dim; ++r)
    if (!is_pivot_row[r]) comp.push_back(r);
  int k = static_cast<int>(comp.size());
  // section of the complement coordinates
  Mat section(p, m.dim, k);
  for (int j = 0; j < k; ++j) section.set(comp[j], j, 1);
  Mat full = Mat::hstack(basis.column_space(), section);
  auto inv = full.inverse();
  if (!inv) throw std::logic_error("quotient basis assembly failed");
  Mat proj(p, k, m.dim);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < m.dim; ++c)
      proj.set(r, c, inv->at(m.dim - k + r, c));
  QuotientModule q;
  q.module.alg = m.alg;
  q.module.dim = k;
  for (const auto& a : m.act) q.module.act.push_back(proj * a * section);
  q.projection = proj;
  auto rep = check_valid(q.module);
  if (!rep.ok) throw std::invalid_argument("basis is not action-stable");
  if (m.graded()) {
    bool homog = true;
    for (int c = 0; c < basis.cols() && homog; ++c) {
      std::optional<Weight> w;
      for (int r = 0; r < basis.rows(); ++r) {
        if (basis.at(r, c) == 0) continue;
        if (!w)
          w = (*m.grading)[r];
        else if (*w != (*m.grading)[r])
          homog = false;
      }
    }
    if (homog) {
      std::vector<Weight> g;
      for (int j = 0; j < k; ++j) g.push_back((*m.grading)[comp[j]]);
      q.module.grading = g;
    }
  }
  return q;
}

WeightDiagram weight_diagram(const ModuleRep& m) {
  if (!m.graded()) throw std::invalid_argument("weight diagram needs a grading");
  WeightDiagram d;
  d.nodes = *m.grading;
  RootData rd(m.alg->pres.rank);
  const auto& g = m.alg->pres;
  for (int i = 0; i < g.d(); ++i) {
    if (!g.nilpotent[i]) continue;
    Weight wi = (*g.weights)[i];
    // only simple-root generators draw arrows
    int root = -1;
    for (int s = 0; s < g.rank; ++s)
      if (wi == weight_neg(rd.simple_root(s))) root = s;
    if (root < 0) continue;
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < m.dim; ++c)
        if (m.act[i].at(r, c) != 0) d.arrows.push_back({c, r, root});
  }
  std::sort(d.arrows.begin(), d.arrows.end());
  d.arrows.erase(std::unique(d.arrows.begin(), d.arrows.end()), d.arrows.end());
  return d;
}

bool same_weight_multiset(const std::vector<Weight>& a,
                          const std::vector<Weight>& b) {
  auto x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

}  // namespace endolie
