#include "endolie/pbw.hpp"

#include <sstream>
#include <stdexcept>

namespace endolie {

namespace {

struct Term {
  i64 coeff;
  std::vector<int> word;
};

/// Rewrites a generator word into the PBW basis: adjacent swaps introduce
/// bracket terms, runs of length p collapse through the p-power map.
/// Terminates because swaps lower the inversion count at fixed length and
/// the other moves shorten the word.
void straighten_into(const LiePresentation& g, std::vector<int> word,
                     i64 coeff, std::vector<i64>& out,
                     const std::vector<int>& strides) {
  PrimeField f(g.p);
  std::vector<Term> work;
  work.push_back({f.reduce(coeff), std::move(word)});
  while (!work.empty()) {
    Term t = std::move(work.back());
    work.pop_back();
    if (t.coeff == 0) continue;
    const auto& w = t.word;
    int inv = -1;
    for (size_t k = 0; k + 1 < w.size(); ++k)
      if (w[k] > w[k + 1]) {
        inv = static_cast<int>(k);
        break;
      }
    if (inv >= 0) {
      int a = w[inv], b = w[inv + 1];
      Term swapped = t;
      std::swap(swapped.word[inv], swapped.word[inv + 1]);
      work.push_back(std::move(swapped));
      const auto& c = g.brackets[a][b];
      for (int m = 0; m < g.d(); ++m) {
        i64 cm = f.reduce(c[m]);
        if (cm == 0) continue;
        Term nt;
        nt.coeff = f.mul(t.coeff, cm);
        nt.word.reserve(w.size() - 1);
        nt.word.insert(nt.word.end(), w.begin(), w.begin() + inv);
        nt.word.push_back(m);
        nt.word.insert(nt.word.end(), w.begin() + inv + 2, w.end());
        work.push_back(std::move(nt));
      }
      continue;
    }
    // sorted word: collapse any run of length >= p
    int run_start = -1;
    for (size_t k = 0; k < w.size(); ++k) {
      size_t s = k;
      while (k + 1 < w.size() && w[k + 1] == w[s]) ++k;
      if (static_cast<i64>(k - s + 1) >= g.p) {
        run_start = static_cast<int>(s);
        break;
      }
    }
    if (run_start >= 0) {
      int gi = w[run_start];
      const auto& pw = g.p_power[gi];
      for (int m = 0; m < g.d(); ++m) {
        i64 cm = f.reduce(pw[m]);
        if (cm == 0) continue;
        Term nt;
        nt.coeff = f.mul(t.coeff, cm);
        nt.word.reserve(w.size() - g.p + 1);
        nt.word.insert(nt.word.end(), w.begin(), w.begin() + run_start);
        nt.word.push_back(m);
        nt.word.insert(nt.word.end(), w.begin() + run_start + g.p, w.end());
        work.push_back(std::move(nt));
      }
      continue;
    }
    // basis monomial
    size_t idx = 0;
    for (int gi : w) idx += strides[gi];
    out[idx] = f.add(out[idx], t.coeff);
  }
}

std::vector<int> expand_word(const std::vector<int>& e) {
  std::vector<int> w;
  for (size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) w.push_back(static_cast<int>(i));
  return w;
}

}  // namespace

int PBWAlgebra::index_of(const std::vector<int>& e) const {
  if (static_cast<int>(e.size()) != pres.d())
    throw std::invalid_argument("exponent vector size");
  size_t idx = 0;
  for (int i = 0; i < pres.d(); ++i) {
    if (e[i] < 0 || e[i] >= pres.p) throw std::out_of_range("exponent");
    idx = idx * pres.p + e[i];
  }
  return static_cast<int>(idx);
}

std::vector<i64> PBWAlgebra::product(const std::vector<i64>& a,
                                     const std::vector<i64>& b) const {
  if (static_cast<int>(a.size()) != dim || static_cast<int>(b.size()) != dim)
    throw std::invalid_argument("element size");
  PrimeField f(pres.p);
  std::vector<int> strides(pres.d());
  int s = 1;
  for (int i = pres.d() - 1; i >= 0; --i) {
    strides[i] = s;
    s *= static_cast<int>(pres.p);
  }
  std::vector<i64> out(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (a[i] == 0) continue;
    auto wi = expand_word(exps[i]);
    for (int j = 0; j < dim; ++j) {
      i64 c = f.mul(f.reduce(a[i]), f.reduce(b[j]));
      if (c == 0) continue;
      auto w = wi;
      auto wj = expand_word(exps[j]);
      w.insert(w.end(), wj.begin(), wj.end());
      straighten_into(pres, std::move(w), c, out, strides);
    }
  }
  return out;
}

Mat PBWAlgebra::left_mult(const std::vector<i64>& a) const {
  Mat m(pres.p, dim, dim);
  for (int j = 0; j < dim; ++j) {
    std::vector<i64> ej(dim, 0);
    ej[j] = 1;
    auto col = product(a, ej);
    for (int i = 0; i < dim; ++i) m.set(i, j, col[i]);
  }
  return m;
}

std::vector<i64> PBWAlgebra::embed_lie(const std::vector<i64>& lie) const {
  if (static_cast<int>(lie.size()) != pres.d())
    throw std::invalid_argument("lie coefficient size");
  std::vector<i64> out(dim, 0);
  PrimeField f(pres.p);
  std::vector<int> e(pres.d(), 0);
  for (int i = 0; i < pres.d(); ++i) {
    e[i] = 1;
    out[index_of(e)] = f.reduce(lie[i]);
    e[i] = 0;
  }
  return out;
}

std::vector<i64> PBWAlgebra::one() const {
  std::vector<i64> v(dim, 0);
  v[0] = 1;
  return v;
}

std::string PBWAlgebra::monomial_str(int idx) const {
  const auto& e = exps[idx];
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < pres.d(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << pres.names[i];
    if (e[i] > 1) os << "^" << e[i];
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

AlgebraPtr build_algebra(const LiePresentation& pres) {
  pres.validate();
  auto alg = std::make_shared<PBWAlgebra>();
  alg->pres = pres;
  i64 dim = 1;
  for (int i = 0; i < pres.d(); ++i) {
    dim *= pres.p;
    if (dim > (1 << 20)) throw std::invalid_argument("algebra too large");
  }
  alg->dim = static_cast<int>(dim);
  alg->exps.resize(alg->dim);
  {
    std::vector<int> e(pres.d(), 0);
    for (int idx = 0; idx < alg->dim; ++idx) {
      alg->exps[idx] = e;
      for (int i = pres.d() - 1; i >= 0; --i) {
        if (++e[i] < pres.p) break;
        e[i] = 0;
      }
    }
  }
  std::vector<int> strides(pres.d());
  int s = 1;
  for (int i = pres.d() - 1; i >= 0; --i) {
    strides[i] = s;
    s *= static_cast<int>(pres.p);
  }
  alg->left_gen.reserve(pres.d());
  for (int g = 0; g < pres.d(); ++g) {
    Mat m(pres.p, alg->dim, alg->dim);
    for (int j = 0; j < alg->dim; ++j) {
      std::vector<int> w;
      w.push_back(g);
      auto wj = expand_word(alg->exps[j]);
      w.insert(w.end(), wj.begin(), wj.end());
      std::vector<i64> col(alg->dim, 0);
      straighten_into(pres, std::move(w), 1, col, strides);
      for (int i = 0; i < alg->dim; ++i) m.set(i, j, col[i]);
    }
    alg->left_gen.push_back(std::move(m));
  }
  alg->triangular = pres.is_triangular();
  alg->f_top.assign(pres.d(), 0);
  for (int i : pres.nilpotent_indices())
    alg->f_top[i] = static_cast<int>(pres.p) - 1;
  // sanity: the regular representation must satisfy the relations
  PrimeField f(pres.p);
  for (int i = 0; i < pres.d(); ++i) {
    for (int j = 0; j < pres.d(); ++j) {
      Mat lhs = alg->left_gen[i] * alg->left_gen[j] -
                alg->left_gen[j] * alg->left_gen[i];
      Mat rhs(pres.p, alg->dim, alg->dim);
      for (int k = 0; k < pres.d(); ++k) {
        i64 c = f.reduce(pres.brackets[i][j][k]);
        if (c) rhs = rhs + alg->left_gen[k].scaled(c);
      }
      if (!(lhs == rhs))
        throw std::logic_error("regular representation violates a bracket");
    }
    Mat pw(pres.p, alg->dim, alg->dim);
    for (int k = 0; k < pres.d(); ++k) {
      i64 c = f.reduce(pres.p_power[i][k]);
      if (c) pw = pw + alg->left_gen[k].scaled(c);
    }
    if (!(alg->left_gen[i].pow(pres.p) == pw))
      throw std::logic_error("regular representation violates a p-power");
  }
  return alg;
}

}  // namespace endolie
