#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "endolie/lie.hpp"
#include "endolie/matrix.hpp"

namespace endolie {

struct PimSet;  // defined in structure.hpp; cached here once computed

/// The restricted enveloping algebra u(g) on the PBW basis of ordered
/// monomials x_1^{e_1}...x_d^{e_d}, 0 <= e_i < p, in lexicographic order
/// (last exponent fastest). Elements are dense coefficient vectors.
struct PBWAlgebra {
  LiePresentation pres;
  int dim = 0;  // p^d
  std::vector<std::vector<int>> exps;
  std::vector<Mat> left_gen;  // left regular matrix per Lie generator

  int index_of(const std::vector<int>& e) const;
  const std::vector<int>& exponents(int idx) const { return exps[idx]; }

  /// Product of two elements given as dense coefficient vectors.
  std::vector<i64> product(const std::vector<i64>& a,
                           const std::vector<i64>& b) const;
  /// Left-multiplication matrix of an element on the algebra.
  Mat left_mult(const std::vector<i64>& a) const;
  /// Degree-one embedding of a Lie-coefficient vector.
  std::vector<i64> embed_lie(const std::vector<i64>& lie_coeffs) const;
  /// Counit: coefficient of the identity monomial.
  i64 counit(const std::vector<i64>& a) const { return a[0]; }
  std::vector<i64> one() const;

  bool triangular = false;
  /// Exponent vector with p-1 in every nilpotent slot, 0 elsewhere.
  std::vector<int> f_top;

  std::string monomial_str(int idx) const;

  mutable std::shared_ptr<const PimSet> pim_cache;
  mutable std::mutex pim_mutex;
};

using AlgebraPtr = std::shared_ptr<const PBWAlgebra>;

/// Builds u(g): validates the presentation, computes the PBW basis and
/// the regular representation by straightening. Throws on inconsistent
/// presentations.
AlgebraPtr build_algebra(const LiePresentation& pres);

}  // namespace endolie
