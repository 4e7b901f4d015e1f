#pragma once

#include <string>
#include <vector>

#include "endolie/endo.hpp"

namespace endolie {

enum class Verdict { Pass, Fail, Flagged };

struct CheckRecord {
  std::string name;
  std::string source;  // where the expected value comes from
  std::string expected;
  std::string computed;
  Verdict verdict = Verdict::Pass;
};

struct ReproReport {
  std::string suite;
  std::string params;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;
  Verdict overall() const {
    Verdict v = Verdict::Pass;
    for (const auto& c : checks) {
      if (c.verdict == Verdict::Fail) return Verdict::Fail;
      if (c.verdict == Verdict::Flagged) v = Verdict::Flagged;
    }
    return v;
  }
};

/// Minimal resolutions of k and L(p-2) over sl2-g1: dimensions, tops of
/// the projective terms, and Weyl-module identifications of the
/// syzygies. The even-n identifications are asserted; the odd-n closed
/// formulas are evaluated and flagged on mismatch.
ReproReport repro_sl2_table(i64 p, int max_n);

/// The SL3 p=2 second-syzygy analysis over sl3-b1: dimension and weight
/// multiset, top, radical decomposition, indecomposability, Ext bound,
/// graded-hom obstruction, and the Steinberg stable lift. Optionally
/// emits the weight diagram as DOT.
ReproReport repro_sl3_omega2(const std::string& dot_path);

/// The natural 3-dimensional module of sl3 restricted to the preset
/// (sl3-b1 or sl3-u1), with its weight grading.
ModuleRep natural_sl3(const AlgebraPtr& alg);

}  // namespace endolie
