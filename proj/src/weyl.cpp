#include "endolie/weyl.hpp"

#include <stdexcept>

namespace endolie {

ModuleRep build_weyl_sl2(const AlgebraPtr& alg, i64 m) {
  if (alg->pres.tag != "sl2-g1")
    throw std::invalid_argument("Weyl modules are built over sl2-g1");
  if (m < 0) throw std::invalid_argument("highest weight must be >= 0");
  const i64 p = alg->pres.p;
  int n = static_cast<int>(m) + 1;
  Mat e(p, n, n), h(p, n, n), f(p, n, n);
  for (int i = 0; i < n; ++i) {
    h.set(i, i, m - 2 * i);
    if (i + 1 < n) f.set(i + 1, i, i + 1);
    if (i > 0) e.set(i - 1, i, m - i + 1);
  }
  ModuleRep v;
  v.alg = alg;
  v.dim = n;
  v.act = {e, h, f};  // matches the (e,h,f) basis order of the preset
  std::vector<Weight> grad;
  for (int i = 0; i < n; ++i) grad.push_back({m - 2 * i});
  v.grading = grad;
  auto rep = check_valid(v);
  if (!rep.ok) throw std::logic_error("Weyl module invalid: " + rep.violation);
  return v;
}

ModuleRep steinberg_sl2(const AlgebraPtr& alg) {
  return build_weyl_sl2(alg, alg->pres.p - 1);
}

}  // namespace endolie
