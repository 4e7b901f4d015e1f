#pragma once

#include "endolie/module.hpp"

namespace endolie {

/// Restriction of the SL2 Weyl module V(m) to the given algebra, which
/// must be sl2-g1 (or a preset embedding target handled by the caller
/// via restrict_along). Basis v_0..v_m with
///   f.v_i = (i+1) v_{i+1},  e.v_i = (m-i+1) v_{i-1},  h.v_i = (m-2i) v_i,
/// reduced mod p; carries the weight grading v_i -> (m-2i).
ModuleRep build_weyl_sl2(const AlgebraPtr& alg, i64 m);

/// The Steinberg module St = V(p-1) over sl2-g1.
ModuleRep steinberg_sl2(const AlgebraPtr& alg);

}  // namespace endolie
