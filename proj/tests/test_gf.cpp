#include <doctest.h>

#include <random>

#include "pcurve/error.hpp"
#include "pcurve/gf.hpp"

using namespace pcurve;

TEST_CASE("default moduli") {
  CHECK(FieldSpec::create(2, 2)->modulus_string() == "t^2+t+1");
  CHECK(FieldSpec::create(2, 4)->modulus_string() == "t^4+t+1");
  CHECK(FieldSpec::create(2, 3)->modulus_string() == "t^3+t+1");
  CHECK(FieldSpec::create(3, 2)->modulus_string() == "t^2+1");
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FieldSpec::create(4, 1), Error);
  try {
    FieldSpec::create(2, 2, "t^2+1");
    FAIL("reducible modulus accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReducibleModulus);
  }
  try {
    FieldSpec::create(2, 3, "t^2+t+1");
    FAIL("wrong degree accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
}

TEST_CASE("F4 arithmetic table") {
  const Field f = FieldSpec::create(2, 2);
  const auto t = f->generator();
  CHECK(t * t == t + f->one());
  CHECK(t * (t + f->one()) == f->one());
  CHECK(t.inverse() == t + f->one());
  CHECK(t.frobenius() == t + f->one());
  CHECK(t.pth_root() == t + f->one());
  CHECK(t.pow(3) == f->one());
  CHECK(f->elements().size() == 4);
}

TEST_CASE("F7 prime field") {
  const Field f = FieldSpec::create(7, 1);
  CHECK(f->from_int(3).inverse() == f->from_int(5));
  CHECK(f->from_int(-1) == f->from_int(6));
  CHECK(f->parse("-1") == f->from_int(6));
  CHECK(f->from_int(3).frobenius() == f->from_int(3));
  CHECK_THROWS_AS(f->zero().inverse(), Error);
}

TEST_CASE("parse and print round trip") {
  const Field f = FieldSpec::create(3, 3);
  for (const auto& x : f->elements()) CHECK(f->parse(x.to_string()) == x);
  CHECK(FieldSpec::create(2, 2)->parse("t^2") == FieldSpec::create(2, 2)->parse("t+1"));
}

TEST_CASE("field mismatch") {
  const auto a = FieldSpec::create(2, 2)->one();
  const auto b = FieldSpec::create(2, 4)->one();
  CHECK_THROWS_AS(a + b, Error);
}

TEST_CASE("property: field axioms and Frobenius on random elements") {
  std::mt19937 rng(1);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 4}, {3, 2}, {5, 3}, {7, 2}}) {
    const Field f = FieldSpec::create(p, k);
    const auto el = f->elements();
    std::uniform_int_distribution<std::size_t> pick(0, el.size() - 1);
    for (int i = 0; i < 200; ++i) {
      const auto a = el[pick(rng)], b = el[pick(rng)], c = el[pick(rng)];
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b).frobenius() == a.frobenius() + b.frobenius());
      CHECK((a * b).frobenius() == a.frobenius() * b.frobenius());
      CHECK(a.frobenius() == a.pow(p));
      CHECK(a.frobenius(k) == a);
      CHECK(a.pth_root().frobenius() == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == f->one());
    }
  }
}

TEST_CASE("irreducibility oracle: count of monic irreducibles of degree 4 over F2 is 3") {
  int count = 0;
  for (unsigned v = 0; v < 16; ++v) {
    UPoly f = {v & 1, (v >> 1) & 1, (v >> 2) & 1, (v >> 3) & 1, 1};
    count += upoly::is_irreducible(2, f);
  }
  CHECK(count == 3);
}
