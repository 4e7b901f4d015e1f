#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endolie/census.hpp"

using namespace endolie;

namespace {
AlgebraPtr alg(const char* name, i64 p) {
  return build_algebra(preset(name, p));
}
}  // namespace

TEST_CASE("point enumeration counts square-zero matrices") {
  auto a = alg("sl2-u1", 2);
  int count = 0;
  enumerate_points(a, 2, {}, [&](const VarietyPoint&) {
    ++count;
    return true;
  });
  // 2x2 matrices over F_2 with f^2 = 0: the zero matrix plus the three
  // nonzero ones with trace 0 and det 0
  CHECK(count == 4);
  int n1 = 0;
  enumerate_points(a, 1, {}, [&](const VarietyPoint&) {
    ++n1;
    return true;
  });
  CHECK(n1 == 1);
}

TEST_CASE("census class counts for the order-two group algebra") {
  auto a = alg("sl2-u1", 2);
  auto r1 = endotrivial_census(a, 1);
  CHECK(r1.representatives.size() == 1);
  auto r2 = endotrivial_census(a, 2);
  CHECK(r2.representatives.size() == 0);
  auto r3 = endotrivial_census(a, 3);
  CHECK(r3.representatives.size() == 1);
  CHECK(r3.indeterminate_points == 0);
}

TEST_CASE("canonical-form reduction agrees with the raw scan") {
  auto a = alg("sl2-u1", 2);
  CensusOptions raw;
  // force the raw path by pretending d > 1 is not available: use the
  // sampled mode with full coverage instead
  raw.exhaustive = false;
  raw.sample = 4000;
  raw.seed = 7;
  auto sampled = endotrivial_census(a, 2, raw);
  auto reduced = endotrivial_census(a, 2);
  CHECK(sampled.representatives.size() == reduced.representatives.size());
}

TEST_CASE("projective submodule rank test matches dade ground truth") {
  auto a = alg("sl2-u1", 3);
  VarietyPoint triv;
  triv.gens.push_back(Mat(3, 1, 1));
  auto reg = regular_module(a);
  auto k = trivial_module(a);
  CHECK_FALSE(no_projective_submodule_test(reg, triv, 0, 1));
  CHECK(no_projective_submodule_test(k, triv, 0, 1));
  CHECK_FALSE(no_projective_submodule_test(k, triv, 0, 0));
}

TEST_CASE("budget enforcement") {
  auto a = alg("sl3-u1", 2);
  CensusOptions opt;
  opt.budget = 8;
  CHECK_THROWS(enumerate_points(a, 2, opt, [](const VarietyPoint&) {
    return true;
  }));
}

TEST_CASE("one dimensional twist orbit") {
  auto a = alg("sl3-b1", 2);
  auto k = character_module_hvals(a, {0, 0});
  auto orbit = one_dim_twist_orbit(a, k);
  CHECK(orbit.size() == 4);  // X(T)/2X(T)
  auto u = alg("sl2-u1", 3);
  auto orbit2 = one_dim_twist_orbit(u, trivial_module(u));
  CHECK(orbit2.size() == 1);
}
