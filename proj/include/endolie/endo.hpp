#pragma once

#include <map>
#include <optional>

#include "endolie/structure.hpp"

namespace endolie {

/// Syzygy with its embedding into / projection from the minimal
/// projective (injective) term.
struct SyzygyStep {
  ModuleRep omega;
  ModuleRep pterm;  // cover (n>0) or hull (n<0)
  Mat map;          // inclusion omega -> pterm, or projection pterm -> omega
};

/// Omega^n(M): n > 0 iterates kernels of minimal projective covers,
/// n < 0 uses the dual route, n = 0 strips. The result is always
/// projective-free; gradings survive on triangular presets.
ModuleRep syzygy(const ModuleRep& m, int n);
/// One cover step with the witness maps (used by Ext and tests).
SyzygyStep syzygy_step(const ModuleRep& m);

/// strip(M (x) M^*) isomorphic to k.
bool is_endotrivial(const ModuleRep& m);

struct Ext1 {
  int dim = 0;
  /// Weight -> dimension of the homogeneous Ext piece (graded inputs).
  std::map<Weight, int> by_weight;
  /// Zero-action module graded by the Ext weights (graded inputs).
  std::optional<ModuleRep> carrier;
};
Ext1 ext1(const ModuleRep& m, const ModuleRep& n);

/// Dimension of the space of weight-preserving intertwiners.
int graded_hom(const ModuleRep& m, const ModuleRep& n);

/// Endotrivial class: projective-free representative with a verified
/// certificate strip(M (x) M^*) = k.
struct EndoClass {
  ModuleRep rep;
};
EndoClass endo_class(const ModuleRep& m);  // throws if not endotrivial
EndoClass class_add(const EndoClass& a, const EndoClass& b);
EndoClass class_neg(const EndoClass& c);

struct SyzygyDegree {
  std::optional<int> n;
  bool indeterminate = false;  // some comparison was inconclusive
};
/// Least |n| with strip(M) isomorphic to Omega^n(k), |n| <= bound.
SyzygyDegree syzygy_degree(const ModuleRep& m, int bound);

/// K_0 = k, K_{m+1} = ker(P (x) K_m -> K_m) via the counit surjection
/// of P, stripped of projective summands at every step (the stable
/// class is unchanged). Entries satisfy K_m isomorphic to Omega^m(k)
/// stably.
std::vector<ModuleRep> steinberg_lift_sequence(const ModuleRep& p_mod,
                                               int n);

/// Stability predicates.
Iso is_stable_under(const ModuleRep& m, const Mat& phi);
std::optional<int> is_direct_power(const ModuleRep& z, const ModuleRep& m);
Iso is_stable_lift(const ModuleRep& k_restricted, const ModuleRep& m);

}  // namespace endolie
