#pragma once

#include <string>
#include <vector>

#include "endolie/matrix.hpp"

namespace endolie {

/// Integer weight in the fundamental-weight basis of the ambient root
/// system (A1 or A2). Rank-0 weights are empty vectors.
using Weight = std::vector<i64>;

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(i64 c, const Weight& a);
Weight weight_neg(const Weight& a);
std::string weight_str(const Weight& a);

/// Root data of type A_rank (rank 1 or 2) in fundamental-weight coords.
struct RootData {
  int rank;

  explicit RootData(int r);

  /// Simple root alpha_i (0-based) in fundamental coords:
  /// the i-th row of the Cartan matrix.
  Weight simple_root(int i) const;
  Weight rho() const;  // (1, ..., 1)

  /// <lambda, alpha_i^vee> = i-th fundamental coordinate.
  i64 pairing(const Weight& lambda, int i) const;

  /// Simple reflection s_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i.
  Weight reflect(int i, const Weight& lambda) const;

  /// Dot action s_i . lambda = s_i(lambda + rho) - rho.
  Weight dot_action(int i, const Weight& lambda) const;

  /// Coordinates of lambda in the simple-root basis, as exact rationals
  /// num/den with a common denominator dividing det(Cartan).
  struct RootCoords {
    std::vector<i64> num;
    i64 den;
  };
  RootCoords to_root_basis(const Weight& lambda) const;
};

}  // namespace endolie
