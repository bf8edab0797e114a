#include <doctest.h>

#include <random>

#include "pcurve/error.hpp"
#include "pcurve/parse.hpp"
#include "pcurve/poly.hpp"

using namespace pcurve;

TEST_CASE("grlex order") {
  GrlexGreater gt;
  CHECK(gt({2, 0, 0}, {1, 1, 0}));
  CHECK(gt({1, 1, 0}, {1, 0, 1}));
  CHECK(gt({0, 0, 3}, {2, 0, 0}));
}

TEST_CASE("binomial expansion in characteristic 2 and 3") {
  const Ring r2 = PolyRing::create(FieldSpec::create(2, 1), 3);
  const MultiPoly x = MultiPoly::variable(r2, 0), y = MultiPoly::variable(r2, 1);
  CHECK((x + y).pow(2) == x.pow(2) + y.pow(2));
  CHECK((x + y).pow(3).size() == 4);
  const Ring r3 = PolyRing::create(FieldSpec::create(3, 1), 3);
  const MultiPoly a = MultiPoly::variable(r3, 0), b = MultiPoly::variable(r3, 1);
  CHECK((a + b).pow(3) == a.pow(3) + b.pow(3));
  CHECK((a + b).pow(2).coefficient({1, 1, 0}) == r3->field()->from_int(2));
}

TEST_CASE("derivatives reduce falling factorials mod p") {
  const Ring r = PolyRing::create(FieldSpec::create(2, 1), 3);
  const MultiPoly f = parse_poly("x^2*y + x^3", r);
  CHECK(partial_derivative(f, 0) == parse_poly("x^2", r));
  CHECK(partial_derivative(f, 0, 2).is_zero());
}

TEST_CASE("pth_root and dehomogenize") {
  const Ring r = PolyRing::create(FieldSpec::create(2, 2), 3);
  const MultiPoly f = parse_poly("t*x^2 + y^4", r, {{"t", r->field()->generator()}});
  CHECK(pth_root(f).frobenius() == f);
  CHECK_THROWS_AS(pth_root(parse_poly("x*y", r)), Error);
  CHECK(dehomogenize(parse_poly("x^2 + y*z", r), 2) == parse_poly("x^2 + y", r));
  CHECK_THROWS_AS(dehomogenize(parse_poly("x^2 + y", r), 2), Error);
}

TEST_CASE("evaluate") {
  const Field f = FieldSpec::create(7, 1);
  const Ring r = PolyRing::create(f, 3);
  const std::vector<FieldElement> pt = {f->from_int(1), f->from_int(2), f->from_int(3)};
  CHECK(evaluate(parse_poly("x^5 + y^3*z^2", r), pt) == f->from_int(1 + 72));
}

TEST_CASE("parser") {
  const Field f = FieldSpec::create(2, 2);
  const Ring r = PolyRing::create(f, 3);
  const MultiPoly sextic =
      parse_poly("x^3*y^3 + x^3*z^3 + y^3*z^3 + lambda*z^6", r, {{"lambda", f->generator()}}, true);
  CHECK(sextic.size() == 4);
  CHECK(sextic.degree() == 6);
  CHECK(sextic.coefficient({0, 0, 6}) == f->generator());
  CHECK(parse_poly("(x+y)^2", r) == parse_poly("x^2+y^2", r));
  try {
    parse_poly("x + ", r);
    FAIL("accepted");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 4);
  }
  try {
    parse_poly("x + w", r);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundIdentifier);
  }
  try {
    parse_poly("x^2 + y", r, {}, true);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomogeneous);
  }
  CHECK(parse_binding("A=t+1", f).second == f->parse("t+1"));
}

TEST_CASE("property: ring axioms and Frobenius on random polynomials") {
  const Field f = FieldSpec::create(3, 2);
  const Ring r = PolyRing::create(f, 3);
  const auto el = f->elements();
  std::mt19937 rng(2);
  std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
  std::uniform_int_distribution<int> ex(0, 3);
  auto random_poly = [&] {
    MultiPoly p(r);
    for (int i = 0; i < 4; ++i) p.add_term({ex(rng), ex(rng), ex(rng)}, el[pick(rng)]);
    return p;
  };
  for (int i = 0; i < 50; ++i) {
    const MultiPoly a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a.pow(3) == a.frobenius());
    CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
    CHECK(pth_root(a.frobenius()) == a);
  }
}
