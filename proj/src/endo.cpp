#include "endolie/endo.hpp"

#include <algorithm>
#include <stdexcept>

namespace endolie {

namespace {

bool has_projective_part(const ModuleRep& m) {
  const auto& ps = get_pims(m.alg);
  for (size_t i = 0; i < ps.pims.size(); ++i)
    if (socle_element_action(m, m.alg, static_cast<int>(i)).rank() != 0)
      return true;
  return false;
}

ModuleRep strip_if_needed(const ModuleRep& m) {
  return has_projective_part(m) ? strip_projectives(m) : m;
}

/// Flattened vector of a hom matrix for rank computations.
void push_flat(Mat& stack, const Mat& t) {
  Mat col(t.p(), t.rows() * t.cols(), 1);
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.cols(); ++c) col.set(r * t.cols() + c, 0, t.at(r, c));
  stack = Mat::hstack(stack, col);
}

/// Weight-shift component of an intertwiner between graded modules:
/// keeps entries (r, c) with target_w[r] - source_w[c] == shift.
Mat shift_component(const Mat& t, const std::vector<Weight>& source_w,
                    const std::vector<Weight>& target_w, const Weight& shift) {
  Mat out(t.p(), t.rows(), t.cols());
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.cols(); ++c)
      if (t.at(r, c) != 0 && weight_sub(target_w[r], source_w[c]) == shift)
        out.set(r, c, t.at(r, c));
  return out;
}

std::vector<Weight> shifts_of(const Mat& t, const std::vector<Weight>& sw,
                              const std::vector<Weight>& tw) {
  std::vector<Weight> out;
  for (int r = 0; r < t.rows(); ++r)
    for (int c = 0; c < t.cols(); ++c)
      if (t.at(r, c) != 0) {
        Weight s = weight_sub(tw[r], sw[c]);
        if (std::find(out.begin(), out.end(), s) == out.end())
          out.push_back(s);
      }
  return out;
}

}  // namespace

SyzygyStep syzygy_step(const ModuleRep& m) {
  Cover c = projective_cover(m);
  const std::vector<Weight>* dw =
      c.p.graded() ? &(*c.p.grading) : nullptr;
  Mat ker = kernel_of_map(c.surjection, dw);
  SyzygyStep st;
  st.pterm = c.p;
  st.map = ker;
  st.omega = sub_module(c.p, ker).module;
  return st;
}

ModuleRep syzygy(const ModuleRep& m_in, int n) {
  ModuleRep m = strip_if_needed(m_in);
  if (n == 0) return m;
  if (n < 0) return dual(syzygy(dual(m), -n));
  for (int i = 0; i < n; ++i) m = syzygy_step(m).omega;
  return m;
}

bool is_endotrivial(const ModuleRep& m) {
  ModuleRep s = strip_projectives(tensor(m, dual(m)));
  if (s.dim != 1) return false;
  for (const auto& a : s.act)
    if (!a.is_zero()) return false;
  return true;
}

Ext1 ext1(const ModuleRep& m, const ModuleRep& n) {
  SyzygyStep st = syzygy_step(strip_if_needed(m));
  HomSpace h = hom_space(st.omega, n);
  HomSpace cover_h = hom_space(st.pterm, n);
  const i64 p = n.alg->pres.p;
  // Hom(Omega, N) modulo maps factoring through the cover.
  Mat all(p, n.dim * st.omega.dim, 0);
  for (const auto& t : h.basis) push_flat(all, t);
  Mat img(p, n.dim * st.omega.dim, 0);
  for (const auto& t : cover_h.basis) push_flat(img, t * st.map);
  Ext1 e;
  e.dim = all.rank() - img.rank();
  if (st.omega.graded() && n.graded()) {
    const auto& sw = *st.omega.grading;
    const auto& tw = *n.grading;
    std::vector<Weight> shifts;
    for (const auto& t : h.basis)
      for (const auto& s : shifts_of(t, sw, tw))
        if (std::find(shifts.begin(), shifts.end(), s) == shifts.end())
          shifts.push_back(s);
    std::sort(shifts.begin(), shifts.end());
    std::vector<Weight> carrier_weights;
    for (const auto& s : shifts) {
      Mat hs(p, n.dim * st.omega.dim, 0);
      for (const auto& t : h.basis)
        push_flat(hs, shift_component(t, sw, tw, s));
      Mat is(p, n.dim * st.omega.dim, 0);
      for (const auto& t : cover_h.basis)
        push_flat(is, shift_component(t * st.map, sw, tw, s));
      int d = hs.rank() - is.rank();
      if (d > 0) {
        e.by_weight[s] = d;
        for (int i = 0; i < d; ++i) carrier_weights.push_back(s);
      }
    }
    ModuleRep car;
    car.alg = n.alg;
    car.dim = static_cast<int>(carrier_weights.size());
    for (int i = 0; i < n.alg->pres.d(); ++i)
      car.act.push_back(Mat(p, car.dim, car.dim));
    car.grading = carrier_weights;
    e.carrier = car;
  }
  return e;
}

int graded_hom(const ModuleRep& m, const ModuleRep& n) {
  if (!m.graded() || !n.graded())
    throw std::invalid_argument("graded_hom needs graded modules");
  HomSpace h = hom_space(m, n);
  const i64 p = m.alg->pres.p;
  Weight zero((*m.grading)[0].size(), 0);
  if (m.dim == 0 || n.dim == 0) return 0;
  Mat stack(p, n.dim * m.dim, 0);
  for (const auto& t : h.basis)
    push_flat(stack, shift_component(t, *m.grading, *n.grading, zero));
  return stack.rank();
}

EndoClass endo_class(const ModuleRep& m) {
  ModuleRep s = strip_if_needed(m);
  if (!is_endotrivial(s))
    throw std::invalid_argument("module is not endotrivial");
  return EndoClass{std::move(s)};
}

EndoClass class_add(const EndoClass& a, const EndoClass& b) {
  return endo_class(tensor(a.rep, b.rep));
}

EndoClass class_neg(const EndoClass& c) { return endo_class(dual(c.rep)); }

SyzygyDegree syzygy_degree(const ModuleRep& m, int bound) {
  ModuleRep s = strip_if_needed(m);
  SyzygyDegree out;
  ModuleRep up = trivial_module(m.alg);
  ModuleRep down = trivial_module(m.alg);
  for (int n = 0; n <= bound; ++n) {
    if (n > 0) {
      up = syzygy_step(up).omega;
      down = dual(syzygy_step(dual(down)).omega);
    }
    for (int sign : {+1, -1}) {
      if (n == 0 && sign < 0) continue;
      const ModuleRep& cand = sign > 0 ? up : down;
      Iso iso = is_isomorphic(s, cand);
      if (iso == Iso::Yes) {
        out.n = sign * n;
        return out;
      }
      if (iso == Iso::Indeterminate) out.indeterminate = true;
    }
  }
  return out;
}

std::vector<ModuleRep> steinberg_lift_sequence(const ModuleRep& p_mod,
                                               int n) {
  const auto& alg = p_mod.alg;
  if (has_projective_part(trivial_module(alg)) ||
      strip_projectives(p_mod).dim != 0)
    throw std::invalid_argument("first argument must be projective");
  HomSpace h = hom_space(p_mod, trivial_module(alg));
  Mat eps;
  for (const auto& t : h.basis)
    if (!t.is_zero()) {
      eps = t;
      break;
    }
  if (eps.rows() != 1 || eps.is_zero())
    throw std::invalid_argument("no surjection onto the trivial module");
  std::vector<ModuleRep> seq{trivial_module(alg)};
  for (int m = 0; m < n; ++m) {
    const ModuleRep& k = seq.back();
    ModuleRep t = tensor(p_mod, k);
    Mat map = eps.kron(Mat::identity(eps.p(), k.dim));
    ModuleRep ker = sub_module(t, map.kernel()).module;
    seq.push_back(strip_projectives(ker));
  }
  return seq;
}

Iso is_stable_under(const ModuleRep& m, const Mat& phi) {
  return is_isomorphic(twist(m, phi), m);
}

std::optional<int> is_direct_power(const ModuleRep& z, const ModuleRep& m) {
  if (m.dim == 0 || z.dim % m.dim != 0) return std::nullopt;
  auto parts = decompose(z);
  for (const auto& part : parts)
    if (is_isomorphic(part, m) != Iso::Yes) return std::nullopt;
  return static_cast<int>(parts.size());
}

Iso is_stable_lift(const ModuleRep& k_restricted, const ModuleRep& m) {
  return is_isomorphic(strip_projectives(k_restricted),
                       strip_projectives(m));
}

}  // namespace endolie
