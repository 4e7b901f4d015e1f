#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "endolie/matrix.hpp"

using namespace endolie;

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.neg(0) == 0);
  CHECK(f.neg(2) == 5);
  CHECK_THROWS(PrimeField(9));
  CHECK(PrimeField::is_prime(2147483647));
  CHECK_FALSE(PrimeField::is_prime(2147483649));
}

TEST_CASE("rank kernel solve over F_5") {
  // 2x + 3y = 1, 4x + y = 3 over F_5: det = 2-12 = -10 = 0, singular
  Mat a(5, 2, 2);
  a.set(0, 0, 2);
  a.set(0, 1, 3);
  a.set(1, 0, 4);
  a.set(1, 1, 1);
  CHECK(a.rank() == 1);
  Mat k = a.kernel();
  CHECK(k.cols() == 1);
  CHECK((a * k).is_zero());
  CHECK_FALSE(a.solve({1, 3}).has_value());
  auto x = a.solve({1, 2});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == std::vector<i64>{1, 2});

  Mat b(5, 2, 2);
  b.set(0, 0, 1);
  b.set(0, 1, 2);
  b.set(1, 0, 3);
  b.set(1, 1, 4);
  auto inv = b.inverse();
  REQUIRE(inv.has_value());
  CHECK(b * *inv == Mat::identity(5, 2));
}

TEST_CASE("kronecker product shape and values") {
  Mat a(3, 2, 1);
  a.set(0, 0, 1);
  a.set(1, 0, 2);
  Mat b(3, 1, 2);
  b.set(0, 0, 1);
  b.set(0, 1, 2);
  Mat k = a.kron(b);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.at(0, 1) == 2);
  CHECK(k.at(1, 0) == 2);
  CHECK(k.at(1, 1) == 1);  // 2*2 = 4 = 1 mod 3
}

TEST_CASE("deterministic echelon pivots") {
  Mat m(7, 3, 4);
  i64 vals[3][4] = {{0, 1, 2, 3}, {0, 2, 4, 6}, {1, 0, 0, 5}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 4; ++c) m.set(r, c, vals[r][c]);
  RowEchelon e(m);
  CHECK(e.rank() == 2);
  CHECK(e.pivots == std::vector<int>{0, 1});
  Mat cs = m.column_space();
  CHECK(cs.cols() == 2);
  CHECK(cs.col(0) == std::vector<i64>{0, 0, 1});
  CHECK(cs.col(1) == std::vector<i64>{1, 2, 0});
}

TEST_CASE("power and stack helpers") {
  Mat n(5, 2, 2);
  n.set(0, 1, 1);
  CHECK(n.pow(2).is_zero());
  CHECK(n.pow(0) == Mat::identity(5, 2));
  Mat h = Mat::hstack(n, Mat::identity(5, 2));
  CHECK(h.cols() == 4);
  CHECK(h.rank() == 2);
  Mat v = Mat::vstack(n, Mat::identity(5, 2));
  CHECK(v.rows() == 4);
  CHECK(Mat::diag_sum(n, n).rank() == 2);
}
