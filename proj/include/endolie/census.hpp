#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "endolie/structure.hpp"

namespace endolie {

/// A point of the representation variety: one n x n matrix per Lie
/// generator, satisfying every algebra relation.
struct VarietyPoint {
  std::vector<Mat> gens;
};

struct CensusOptions {
  bool exhaustive = true;
  u64 sample = 0;  // number of seeded draws when not exhaustive
  u64 seed = 0;
  u64 budget = u64(1) << 26;  // max points scanned in exhaustive mode
};

struct CensusReport {
  std::string algebra;
  int n = 0;
  i64 p = 2;
  bool sampled = false;
  /// True when the d = 1 canonical-form reduction was applied (points
  /// are then conjugacy-class representatives, not raw matrices).
  bool reduced = false;
  u64 points_scanned = 0;
  u64 valid_points = 0;
  u64 endotrivial_points = 0;
  u64 indeterminate_points = 0;
  std::vector<ModuleRep> representatives;
  std::vector<u64> orbit_counts;  // points per class, aligned with reps
  double wall_seconds = 0.0;
};

/// Streams every relation-satisfying point (exhaustive: lexicographic
/// over entries; sampling: seeded uniform draws filtered by relations).
/// Returning false from the callback stops the stream. Throws when the
/// exhaustive space exceeds the budget and sampling is off.
void enumerate_points(const AlgebraPtr& alg, int n,
                      const CensusOptions& opt,
                      const std::function<bool(const VarietyPoint&)>& f);

/// Lemma-style closed-set predicate: true iff
/// rank(u_i on M (x) L_sigma) < s * t_i.
bool no_projective_submodule_test(const ModuleRep& m_fixed,
                                  const VarietyPoint& sigma, int i, int s);

/// Exhaustive (or sampled) classification of endotrivial modules of
/// dimension n over F_p.
CensusReport endotrivial_census(const AlgebraPtr& alg, int n,
                                const CensusOptions& opt = {});

/// All tensor twists of M by one-dimensional modules, deduped.
std::vector<ModuleRep> one_dim_twist_orbit(const AlgebraPtr& alg,
                                           const ModuleRep& m);

ModuleRep point_to_module(const AlgebraPtr& alg, const VarietyPoint& pt);

}  // namespace endolie
