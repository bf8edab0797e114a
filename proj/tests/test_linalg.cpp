#include <doctest.h>

#include <random>

#include "pcurve/linalg.hpp"

using namespace pcurve;

TEST_CASE("rank, nullspace and inverse over F7") {
  const Field f = FieldSpec::create(7, 1);
  Matrix m(f, 3, 3);
  const int v[3][3] = {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) = f->from_int(v[i][j]);
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  for (const auto& x : Vector(m * ns[0])) CHECK(x.is_zero());
  CHECK(!inverse(m));
  m.at(1, 0) = f->from_int(3);
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == Matrix::identity(f, 3));
  CHECK(inverse(Matrix(f, 0, 0))->rows() == 0);
}

TEST_CASE("property: rank-nullity and span solving") {
  const Field f = FieldSpec::create(2, 3);
  const auto el = f->elements();
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1), dim(1, 7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = trial % 3 ? el[pick(rng)] : f->zero();
    CHECK(rank(m) + nullspace(m).size() == c);
    CHECK(rank(m) == rank(m.transpose()));
  }
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> basis;
    Matrix stack(f, 8, 0);
    while (basis.size() < 4) {
      Vector v(8);
      for (auto& e : v) e = el[pick(rng)];
      basis.push_back(v);
      if (rank(Matrix::from_columns(f, 8, basis)) < basis.size()) basis.pop_back();
    }
    const SpanSolver solver(f, 8, basis);
    Vector coeff(4);
    for (auto& e : coeff) e = el[pick(rng)];
    const Vector target = Matrix::from_columns(f, 8, basis) * coeff;
    CHECK(solver.solve(target) == coeff);
  }
}
