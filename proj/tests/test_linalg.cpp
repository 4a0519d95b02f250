#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "radhom/matrix.hpp"

using namespace radhom;

namespace {

Mat random_mat(Field f, std::mt19937_64& rng, std::size_t r, std::size_t c, int density) {
  Mat m(f, r, c);
  std::uniform_int_distribution<int> coin(0, 99), val(-4, 4);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density) m.set(i, j, val(rng));
  return m;
}

const Field kFields[] = {Field::prime(2), Field::prime(5), Field::prime(1009), Field::rationals()};

}  // namespace

TEST_CASE("rref of identity, zero and a rank-one matrix over F_2") {
  Field f2 = Field::prime(2);
  auto id = rref(Mat::identity(f2, 2));
  CHECK(id.matrix == Mat::identity(f2, 2));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1});
  auto z = rref(Mat(f2, 3, 2));
  CHECK(z.matrix.is_zero());
  CHECK(z.pivots.empty());
  auto r = rref(Mat::from_ints(f2, {{1, 1}, {1, 1}}));
  CHECK(r.matrix == Mat::from_ints(f2, {{1, 1}, {0, 0}}));
  CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel basis examples") {
  Field q = Field::rationals();
  CHECK(kernel_basis(Mat::identity(q, 4)).cols() == 0);
  Mat k = kernel_basis(Mat(q, 2, 3));
  CHECK(k.cols() == 3);
  CHECK(rank(k) == 3);
  Mat v = kernel_basis(Mat::from_ints(q, {{1, 2}}));
  REQUIRE(v.cols() == 1);
  CHECK(v.at(0, 0) == v.at(1, 0) * Scalar(q, -2));
  CHECK((Mat::from_ints(q, {{1, 2}}) * v).is_zero());
}

TEST_CASE("solve examples") {
  Field f5 = Field::prime(5);
  Mat b = Mat::from_ints(f5, {{2}, {3}});
  auto x = solve(Mat::identity(f5, 2), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK_FALSE(solve(Mat(f5, 2, 2), b));
  auto y = solve(Mat::from_ints(f5, {{1, 1}, {0, 1}}), b);
  REQUIRE(y);
  CHECK(*y == Mat::from_ints(f5, {{4}, {3}}));
}

TEST_CASE("scalar arithmetic reduces modulo p and keeps rationals exact") {
  Field f7 = Field::prime(7);
  CHECK(Scalar(f7, -1) == Scalar(f7, 6));
  CHECK((Scalar(f7, 3) * Scalar(f7, 3).inverse()).is_one());
  Field q = Field::rationals();
  CHECK(Scalar::parse(q, "2/4") == Scalar(q, mpq_class(1, 2)));
  CHECK(Scalar::parse(f7, "1/2") == Scalar(f7, 4));
}

TEST_CASE("property: rank-nullity, kernel and image over every field") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(0, 9);
  for (const Field& f : kFields) {
    CAPTURE(f.name());
    for (int t = 0; t < 150; ++t) {
      const std::size_t r = dim(rng), c = dim(rng);
      Mat m = random_mat(f, rng, r, c, 45);
      const std::size_t rk = rank(m);
      Mat k = kernel_basis(m);
      CHECK(rk + k.cols() == c);
      CHECK((m * k).is_zero());
      CHECK(rank(k) == k.cols());
      Mat im = image_basis(m);
      CHECK(im.cols() == rk);
      CHECK(rank(m.transpose()) == rk);
      auto kc = kernel_with_coordinates(m);
      for (std::size_t j = 0; j < kc.free.size(); ++j)
        for (std::size_t i = 0; i < kc.free.size(); ++i)
          CHECK(kc.basis.at(kc.free[i], j) == Scalar(f, i == j ? 1 : 0));
    }
  }
}

TEST_CASE("property: solve returns a solution exactly when b lies in the image") {
  std::mt19937_64 rng(11);
  for (const Field& f : kFields) {
    for (int t = 0; t < 100; ++t) {
      Mat m = random_mat(f, rng, 5, 4, 40);
      Mat x = random_mat(f, rng, 4, 1, 70);
      Mat b = m * x;
      auto s = solve(m, b);
      REQUIRE(s);
      CHECK(m * *s == b);
      Mat other = random_mat(f, rng, 5, 1, 80);
      auto s2 = solve(m, other);
      Mat aug = Mat::hstack(f, 5, {&m, &other});
      CHECK(s2.has_value() == (rank(aug) == rank(m)));
    }
  }
}

TEST_CASE("complement basis completes a span") {
  std::mt19937_64 rng(3);
  Field f = Field::prime(1009);
  for (int t = 0; t < 50; ++t) {
    Mat s = random_mat(f, rng, 6, 3, 50);
    Mat c = complement_basis(s);
    Mat both = Mat::hstack(f, 6, {&s, &c});
    CHECK(rank(both) == 6);
    CHECK(c.cols() == 6 - rank(s));
  }
}
