#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "endolie/pbw.hpp"

namespace endolie {

/// A finite-dimensional u(g)-module: one action matrix per Lie generator,
/// optional X(T)-weight grading on the chosen basis.
struct ModuleRep {
  AlgebraPtr alg;
  int dim = 0;
  std::vector<Mat> act;
  std::optional<std::vector<Weight>> grading;

  bool graded() const { return grading.has_value(); }
};

struct ValidityReport {
  bool ok = true;
  std::string violation;  // first violated relation, empty when ok
};

ValidityReport check_valid(const ModuleRep& m);

ModuleRep zero_module(const AlgebraPtr& alg);
ModuleRep trivial_module(const AlgebraPtr& alg);
/// One-dimensional module where torus generator j acts by hvals[j] and
/// nilpotent generators act by zero.
ModuleRep character_module_hvals(const AlgebraPtr& alg,
                                 const std::vector<i64>& hvals);
/// Character of an integral weight: torus values are the fundamental
/// coordinates mod p; carries the weight as its grading.
ModuleRep character_module(const AlgebraPtr& alg, const Weight& lambda);
/// Left regular module; graded when the presentation has weights.
ModuleRep regular_module(const AlgebraPtr& alg);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);
ModuleRep tensor(const ModuleRep& a, const ModuleRep& b);
ModuleRep dual(const ModuleRep& m);
/// Twist by a Lie-algebra automorphism phi (matrix on the Lie basis):
/// the new action of x is the old action of phi(x). The grading survives
/// only diagonal automorphisms fixing the torus generators.
ModuleRep twist(const ModuleRep& m, const Mat& phi);
/// Zero-action module graded by p * (input weights).
ModuleRep frobenius_twist_trivial(const AlgebraPtr& alg,
                                  const std::vector<Weight>& ws);
/// Restriction along an embedding of Lie algebras: images[i] gives the
/// coefficients of the image of the i-th sub-generator in the big Lie
/// basis. The embedding is verified (brackets and module relations).
ModuleRep restrict_along(const ModuleRep& m, const AlgebraPtr& sub,
                         const std::vector<std::vector<i64>>& images);

/// Action matrix of a Lie element / of a general algebra element.
Mat act_lie(const ModuleRep& m, const std::vector<i64>& lie_coeffs);
Mat act_element(const ModuleRep& m, const std::vector<i64>& a);

struct SubModule {
  ModuleRep module;
  Mat inclusion;  // dim(ambient) x dim(sub)
};
struct QuotientModule {
  ModuleRep module;
  Mat projection;  // dim(quot) x dim(ambient)
};

/// Submodule on an explicit basis (columns of full column rank, required
/// to be action-stable; throws otherwise).
SubModule sub_module(const ModuleRep& m, const Mat& basis);
/// Quotient by the span of the given action-stable columns.
QuotientModule quotient_module(const ModuleRep& m, const Mat& basis);

struct WeightDiagram {
  std::vector<Weight> nodes;
  /// (from node, to node, simple root index)
  std::vector<std::array<int, 3>> arrows;
};
WeightDiagram weight_diagram(const ModuleRep& m);

/// Multiset compare helper for gradings.
bool same_weight_multiset(const std::vector<Weight>& a,
                          const std::vector<Weight>& b);

}  // namespace endolie
