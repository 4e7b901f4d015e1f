#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endolie/module.hpp"
#include "endolie/weyl.hpp"

using namespace endolie;

namespace {
AlgebraPtr alg(const char* name, i64 p) {
  return build_algebra(preset(name, p));
}
}  // namespace

TEST_CASE("regular module is valid and graded") {
  auto a = alg("sl2-b1", 3);
  auto r = regular_module(a);
  CHECK(check_valid(r).ok);
  CHECK(r.dim == 9);
  REQUIRE(r.graded());
  // monomials f^i h^j have weight -2i
  int minus2 = 0, zero = 0;
  for (const auto& w : *r.grading) {
    if (w == Weight{-2}) ++minus2;
    if (w == Weight{0}) ++zero;
  }
  CHECK(zero == 3);
  CHECK(minus2 == 3);
}

TEST_CASE("tensor dual and twist keep validity") {
  auto a = alg("sl2-g1", 3);
  auto v1 = build_weyl_sl2(a, 1);
  auto v2 = build_weyl_sl2(a, 2);
  CHECK(check_valid(v1).ok);
  CHECK(check_valid(v2).ok);
  auto t = tensor(v1, v2);
  CHECK(t.dim == 6);
  CHECK(check_valid(t).ok);
  auto d = dual(t);
  CHECK(check_valid(d).ok);
  Mat w = weyl_automorphism(a->pres, {0});
  auto tw = twist(v2, w);
  CHECK(check_valid(tw).ok);
}

TEST_CASE("dual is an involution up to equality of matrices") {
  auto a = alg("sl3-u1", 2);
  auto r = regular_module(a);
  auto dd = dual(dual(r));
  for (int i = 0; i < a->pres.d(); ++i) CHECK(dd.act[i] == r.act[i]);
}

TEST_CASE("weyl module relations over sl2-g1") {
  auto a = alg("sl2-g1", 5);
  auto v = build_weyl_sl2(a, 3);
  CHECK(v.dim == 4);
  CHECK(check_valid(v).ok);
  // h v_0 = 3 v_0
  std::vector<i64> v0(4, 0);
  v0[0] = 1;
  CHECK(v.act[1].apply(v0)[0] == 3);
}

TEST_CASE("sub and quotient modules") {
  auto a = alg("sl2-u1", 3);
  auto r = regular_module(a);  // k[f]/f^3, basis 1, f, f^2
  // span(f, f^2) is a submodule
  Mat basis(3, 3, 2);
  basis.set(1, 0, 1);
  basis.set(2, 1, 1);
  auto s = sub_module(r, basis);
  CHECK(s.module.dim == 2);
  CHECK(check_valid(s.module).ok);
  auto q = quotient_module(r, basis);
  CHECK(q.module.dim == 1);
  CHECK(q.module.act[0].is_zero());
  // span(1) is not a submodule
  Mat bad(3, 3, 1);
  bad.set(0, 0, 1);
  CHECK_THROWS(sub_module(r, bad));
}

TEST_CASE("character modules and grading") {
  auto a = alg("sl3-b1", 2);
  auto c = character_module(a, Weight{1, 1});
  CHECK(c.dim == 1);
  CHECK(check_valid(c).ok);
  REQUIRE(c.graded());
  CHECK((*c.grading)[0] == Weight{1, 1});
}

TEST_CASE("restriction along an embedding") {
  auto big = alg("sl2-g1", 3);
  auto small = alg("sl2-u1", 3);
  auto v = build_weyl_sl2(big, 2);
  // f |-> f (index 2 in [e, h, f])
  auto res = restrict_along(v, small, {{0, 0, 1}});
  CHECK(res.dim == 3);
  CHECK(check_valid(res).ok);
  // e is also nilpotent: f |-> e works too
  auto res2 = restrict_along(v, small, {{1, 0, 0}});
  CHECK(check_valid(res2).ok);
  // f |-> h is not an embedding of a nilpotent algebra
  CHECK_THROWS(restrict_along(v, small, {{0, 1, 0}}));
}

TEST_CASE("weight diagram of the natural sl3 restriction") {
  auto a = alg("sl3-b1", 2);
  auto r = character_module(a, Weight{1, 0});
  CHECK(weight_diagram(r).nodes.size() == 1);
}
