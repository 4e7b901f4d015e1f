#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endolie/matrix.hpp"
#include "endolie/weight.hpp"

namespace endolie {

/// Presentation of a restricted Lie algebra over F_p: structure constants,
/// p-power map, optional X(T)-weights, nilpotency flags.
struct LiePresentation {
  i64 p = 2;
  std::vector<std::string> names;
  /// brackets[i][j] = coefficients of [x_i, x_j] in the basis (full table).
  std::vector<std::vector<std::vector<i64>>> brackets;
  /// p_power[i] = coefficients of x_i^{[p]}.
  std::vector<std::vector<i64>> p_power;
  std::optional<std::vector<Weight>> weights;
  std::vector<bool> nilpotent;
  /// Ambient root-system rank for weight arithmetic (0 when no weights).
  int rank = 0;
  /// Preset name when built by preset(), empty for hand-made algebras.
  std::string tag;

  int d() const { return static_cast<int>(names.size()); }
  std::vector<i64> bracket(int i, int j) const { return brackets[i][j]; }

  /// Checks antisymmetry, Jacobi, and (ad x)^p = ad(x^{[p]}); throws on
  /// the first violated relation.
  void validate() const;

  /// Adjoint matrix of x_i on the Lie algebra itself.
  Mat ad(int i) const;
  Mat ad_of(const std::vector<i64>& coeffs) const;

  /// True when the algebra is a torus-plus-nilpotent triangular algebra
  /// (all simple u(g)-modules one-dimensional).
  bool is_triangular() const;
  std::vector<int> torus_indices() const;
  std::vector<int> nilpotent_indices() const;
};

/// Built-in presets: sl2-u1, sl2-b1, sl2-g1, sl3-u1, sl3-b1.
LiePresentation preset(const std::string& name, i64 p);
std::vector<std::string> preset_names();

/// Algebra automorphisms as matrices on the Lie basis (columns = images).
/// Every returned map is verified to preserve brackets and p-powers.
Mat torus_scaling_automorphism(const LiePresentation& g,
                               const std::vector<i64>& t);
/// Weyl twist for sl2-g1: s maps e -> -f, f -> -e, h -> -h; word is a
/// sequence of simple-reflection indices (only index 0 for A1).
Mat weyl_automorphism(const LiePresentation& g, const std::vector<int>& word);
/// Arbitrary user-supplied map, verified.
Mat custom_automorphism(const LiePresentation& g, const Mat& m);
bool is_lie_automorphism(const LiePresentation& g, const Mat& m);

/// Image of a weight under an automorphism that permutes/scales weight
/// vectors; defined for torus-scaling (identity on X(T)) and Weyl words.
Weight weyl_weight_action(const RootData& rd, const std::vector<int>& word,
                          const Weight& w);

}  // namespace endolie
