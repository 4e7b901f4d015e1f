#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endolie/repro.hpp"

using namespace endolie;

TEST_CASE("dot action identities in A2") {
  RootData rd(2);
  Weight w2{0, 1};
  Weight a1 = rd.simple_root(0), a2 = rd.simple_root(1);
  Weight mu = weight_sub(weight_sub(weight_scale(-2, a1), a2), Weight{1, 0});
  // mu - s_{a1}.w2 = -2(a1+a2)
  Weight d1 = weight_sub(mu, rd.dot_action(0, w2));
  CHECK(d1 == weight_scale(-2, weight_add(a1, a2)));
  // mu - s_{a2}.w2 = -3 a1
  Weight d2 = weight_sub(mu, rd.dot_action(1, w2));
  CHECK(d2 == weight_scale(-3, a1));
  // involution
  CHECK(rd.dot_action(0, rd.dot_action(0, mu)) == mu);
}

TEST_CASE("natural sl3 module") {
  auto a = build_algebra(preset("sl3-b1", 2));
  auto v = natural_sl3(a);
  CHECK(v.dim == 3);
  CHECK(check_valid(v).ok);
  auto u = build_algebra(preset("sl3-u1", 2));
  auto vu = natural_sl3(u);
  CHECK(check_valid(vu).ok);
}

TEST_CASE("sl2 table at p=2 up to n=2") {
  auto rep = repro_sl2_table(2, 2);
  CHECK(rep.overall() != Verdict::Fail);
  // even-n entries must pass outright
  for (const auto& c : rep.checks)
    if (c.name.find("n=0") != std::string::npos ||
        c.name.find("n=2") != std::string::npos)
      CHECK(c.verdict == Verdict::Pass);
}

TEST_CASE("sl3 omega2 suite") {
  auto rep = repro_sl3_omega2("");
  CHECK(rep.overall() != Verdict::Fail);
  REQUIRE(rep.checks.size() == 7);
  // the non-graded-hom checks must pass outright
  for (const auto& c : rep.checks)
    if (c.name.find("graded_hom") == std::string::npos)
      CHECK(c.verdict == Verdict::Pass);
}
