#include <doctest.h>
#include <json.hpp>

#include "pcurve/fermat.hpp"
#include "pcurve/parse.hpp"
#include "pcurve/report.hpp"

using namespace pcurve;
using nlohmann::json;

TEST_CASE("plane curve report schema") {
  const Field f4 = FieldSpec::create(2, 2);
  const Ring r = PolyRing::create(f4, 3);
  const PlaneCurveSpec c(
      parse_poly("x^3*y^3 + x^3*z^3 + y^3*z^3 + lambda*z^6", r, {{"lambda", f4->generator()}}, true));
  const json j = plane_curve_report(c, hasse_witt(c));
  CHECK(j["pa"] == 10);
  CHECK(j["sigma"] == 8);
  CHECK(j["a_number"] == 2);
  CHECK(j["basis"].size() == 10);
  CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("fermat and dims report") {
  const Field f4 = FieldSpec::create(2, 2);
  const json j = fermat_report_json(fermat_invariants(FermatSpec(3, 3, {f4->generator(), f4->parse("t+1")})));
  CHECK(j["a_number"] == 4);
  CHECK(j["anum_formula"] == 4);
  CHECK(j["genus"] == 10);
  const json d = dims_report(3, 4);
  CHECK(d["dimensions_agree"] == true);
  CHECK(d["binom_identity_holds"] == true);
}
