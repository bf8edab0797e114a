#include <doctest.h>

#include <random>

#include "pcurve/error.hpp"
#include "pcurve/parse.hpp"
#include "pcurve/planecurve.hpp"

using namespace pcurve;

namespace {

PlaneCurveSpec curve(unsigned p, unsigned k, const std::string& text) {
  const Ring r = PolyRing::create(FieldSpec::create(p, k), 3);
  return PlaneCurveSpec(parse_poly(text, r, {}, true));
}

}  // namespace

TEST_CASE("elliptic curves: supersingular exactly for the classical primes") {
  // y^2 = x^3 + x is supersingular iff p = 3 mod 4
  for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
    const auto c = curve(p, 1, "y^2*z - x^3 - x*z^2");
    CHECK(c.arithmetic_genus() == 1);
    CHECK(invariants(c).sigma == (p % 4 == 3 ? 0u : 1u));
  }
  // y^2 = x^3 + 1 is supersingular iff p = 2 mod 3
  for (unsigned p : {5u, 7u, 11u, 13u}) {
    const auto c = curve(p, 1, "y^2*z - x^3 - z^3");
    CHECK(invariants(c).sigma == (p % 3 == 2 ? 0u : 1u));
    CHECK(rank(cartier_manin(c, 1).matrix) == rank(hasse_witt(c).matrix));
  }
}

TEST_CASE("Fermat quartic") {
  const auto c3 = curve(3, 1, "x^4 + y^4 + z^4");
  const auto inv3 = invariants(c3);
  CHECK(inv3.pa == 3);
  CHECK(inv3.sigma == 0);
  CHECK(inv3.a_number == 3);  // superspecial
  CHECK(hasse_witt(c3).matrix.is_zero());
  const auto inv5 = invariants(curve(5, 1, "x^4 + y^4 + z^4"));
  CHECK(inv5.sigma == 3);
  CHECK(inv5.a_number == 0);
}

TEST_CASE("image table labels") {
  const Field f4 = FieldSpec::create(2, 2);
  const Ring r = PolyRing::create(f4, 3);
  const PlaneCurveSpec c(
      parse_poly("x^3*y^3 + x^3*z^3 + y^3*z^3 + lambda*z^6", r, {{"lambda", f4->generator()}}, true));
  const auto table = image_table(hasse_witt(c));
  REQUIRE(table.size() == 10);
  // lex b1 = (1,2,3) is the reference beta_8, mapped to lambda * beta_7 = lambda * b6
  CHECK(table[0] == "F(b1) = t*b6");
  CHECK(table[8] == "F(b9) = b8");
  CHECK(table[9] == "F(b10) = 0");
}

TEST_CASE("spec validation") {
  const Ring r = PolyRing::create(FieldSpec::create(2, 1), 3);
  CHECK_THROWS_AS(PlaneCurveSpec(parse_poly("x^2 + y", r)), Error);
  CHECK_THROWS_AS(PlaneCurveSpec(MultiPoly(r)), Error);
  CHECK(adjoint_basis(4).size() == 3);
  CHECK(adjoint_basis(6).size() == 10);
}

TEST_CASE("Cartier-Manin agrees with Hasse-Witt on random quartics") {
  std::mt19937 rng(8);
  for (unsigned p : {3u, 5u}) {
    const Field f = FieldSpec::create(p, 1);
    const Ring r = PolyRing::create(f, 3);
    std::uniform_int_distribution<int> coeff(0, static_cast<int>(p) - 1);
    int tested = 0;
    while (tested < 10) {
      MultiPoly poly(r);
      for (int a = 0; a <= 4; ++a)
        for (int b = 0; a + b <= 4; ++b) poly.add_term({a, b, 4 - a - b}, f->from_int(coeff(rng)));
      if (poly.is_zero()) continue;
      const PlaneCurveSpec c(poly);
      try {
        const SemilinearMap cm = cartier_manin(c);
        const SemilinearMap hw = hasse_witt(c);
        CHECK(rank(cm.matrix) == rank(hw.matrix));
        CHECK(stable_rank(cm) == stable_rank(hw));
        ++tested;
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroPartialFy);
      }
    }
  }
}

TEST_CASE("Laurent series and the formal Cartier operator") {
  const Field f = FieldSpec::create(3, 1);
  LaurentSeries a(f, 5), b(f, 4);
  a.set(-1, f->one());
  a.set(0, f->from_int(2));
  b.set(1, f->one());
  const LaurentSeries c = a * b;
  CHECK(c.order() == 3);  // min(5 + 1, 4 - 1)
  CHECK(c.coefficient(0) == f->one());
  CHECK_THROWS_AS(c.coefficient(4), Error);

  LaurentSeries w(f, 10);
  w.set(2, f->one());   // t^{p-1} dt -> dt
  w.set(-1, f->from_int(2));  // dt/t is fixed
  w.set(1, f->one());   // killed
  const LaurentSeries cw = formal_cartier(w);
  CHECK(cw.order() == 3);
  CHECK(cw.coefficient(0) == f->one());
  CHECK(cw.coefficient(-1) == f->from_int(2));
  CHECK(cw.coefficient(1).is_zero());
  CHECK_THROWS_AS(formal_cartier(w, 5), Error);
}

TEST_CASE("residue duality closed form") {
  const Field f = FieldSpec::create(2, 2);
  LaurentSeries g(f, 3), w(f, 9);
  g.set(-1, f->generator());
  g.set(1, f->one());
  w.set(1, f->one());
  w.set(-3, f->generator());
  const auto d = residue_duality(g, w);
  CHECK(d.holds);
  CHECK(d.lhs == d.rhs);
  CHECK(d.lhs == d.closed_form);
}
