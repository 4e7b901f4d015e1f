#pragma once

#include <optional>
#include <random>
#include <vector>

#include "endolie/module.hpp"

namespace endolie {

using u64 = std::uint64_t;

/// Basis of the space of intertwiners source -> target.
struct HomSpace {
  const ModuleRep* source = nullptr;
  const ModuleRep* target = nullptr;
  std::vector<Mat> basis;  // each dim(target) x dim(source)
  int dim() const { return static_cast<int>(basis.size()); }
};

HomSpace hom_space(const ModuleRep& m, const ModuleRep& n);

/// Projective indecomposable data used by the splitting routines.
struct Pim {
  ModuleRep module;
  /// Triangular presets: torus character of the top (one value per torus
  /// generator); the socle element acts as f_top composed with the
  /// character projector.
  std::vector<i64> hvals;
  /// Generic (sl2-g1) presets: the socle element as an algebra element.
  std::vector<i64> u;
  bool u_is_element = false;
  int t = 1;  // rank of the socle element on the PIM itself
  ModuleRep top_simple;
  int dual_index = -1;  // P_i^* isomorphic to P_{dual_index}
  /// With sigma: P_j -> P_i^* a fixed isomorphism (j = dual_index),
  /// maps M -> P_i are sigma_inv_t * S^T for S in Hom(P_j, M^*).
  Mat sigma_inv_t;
  /// Generic presets: full-row-rank matrix of columns (monomial . g) for
  /// a cyclic generator g, and a basis of its annihilator in A.
  Mat cyclic_cols;
  std::vector<std::vector<i64>> ann_basis;
  Mat socle_basis;  // basis of soc(P) inside P, t columns
};

struct PimSet {
  std::vector<Pim> pims;
  /// Basis of rad(A) as algebra elements; empty for triangular presets
  /// (there the radical is generated by the nilpotent directions).
  std::vector<std::vector<i64>> jacobson;
};

/// Induced module A (x)_{u(t)} lambda for triangular presets; basis =
/// monomials in the nilpotent generators. Graded when base is given.
ModuleRep induced_pim(const AlgebraPtr& alg, const std::vector<i64>& hvals,
                      const std::optional<Weight>& base);

/// PIMs of the algebra, built once and cached: induced modules for
/// triangular presets, regular-module-driven decomposition for sl2-g1.
const PimSet& get_pims(const AlgebraPtr& alg);

/// Action matrix of the i-th PIM's socle element on M.
Mat socle_element_action(const ModuleRep& m, const AlgebraPtr& alg, int i);

ModuleRep radical_module(const ModuleRep& m);
Mat radical_basis(const ModuleRep& m);  // columns spanning rad(A).M
SubModule socle(const ModuleRep& m);
QuotientModule top(const ModuleRep& m);

struct SplitResult {
  int multiplicity = 0;
  ModuleRep complement;
  Mat inclusion;   // P^a -> M
  Mat projection;  // M -> P^a, projection*inclusion = identity
};

/// Splits off every copy of the i-th PIM: M isomorphic to
/// P_i^multiplicity + complement, with witness maps.
SplitResult dade_split(const ModuleRep& m, int pim_index);
ModuleRep strip_projectives(const ModuleRep& m);

enum class Iso { No, Yes, Indeterminate };
Iso is_isomorphic(const ModuleRep& m, const ModuleRep& n, u64 seed = 0);

/// Krull-Schmidt decomposition via Fitting splittings of End(M).
std::vector<ModuleRep> decompose(const ModuleRep& m, u64 seed = 0);

struct Cover {
  ModuleRep p;
  Mat surjection;  // dim(M) x dim(P)
};
Cover projective_cover(const ModuleRep& m);

struct Hull {
  ModuleRep i;
  Mat injection;  // dim(I) x dim(M)
};
Hull injective_hull(const ModuleRep& m);

/// Searches a Hom space for an invertible element: basis, seeded random
/// combinations, exhaustive scan when |Hom| <= p^6.
std::optional<Mat> find_invertible(const HomSpace& h, u64 seed = 0);

/// Seeded helpers shared by tests and the census.
Mat random_matrix(i64 p, int rows, int cols, std::mt19937_64& rng);
Mat random_invertible(i64 p, int n, std::mt19937_64& rng);

/// Column space computed weight-block by weight-block so homogeneous
/// inputs stay homogeneous.
Mat graded_column_space(const Mat& cols, const std::vector<Weight>* row_weights);

/// Kernel of a linear map; when the domain carries weights (and the map
/// is weight-preserving) the kernel is computed blockwise so its basis
/// stays homogeneous.
Mat kernel_of_map(const Mat& f, const std::vector<Weight>* domain_weights);

/// Spanning set of Hom(P_i, M) as full matrices, through the cyclic
/// structure of the PIM (eigenspace route for triangular presets).
std::vector<Mat> pim_hom_candidates(const ModuleRep& m, int pim_index);

/// Joint eigenspace of the torus generators for the given values.
Mat torus_eigenspace(const ModuleRep& m, const std::vector<i64>& hvals);

}  // namespace endolie
