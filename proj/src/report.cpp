#include "pcurve/report.hpp"

#include <limits>
#include <string>

namespace pcurve {

using nlohmann::json;

namespace {

// Counts are emitted as numbers when they fit, as decimal strings otherwise.
json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json tuple_json(const Tuple& t) { return json(t); }

std::string rs_key(const std::pair<int, int>& rs) {
  return std::to_string(rs.first) + "," + std::to_string(rs.second);
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json plane_curve_report(const PlaneCurveSpec& c, const SemilinearMap& hw) {
  const PlaneInvariants inv = invariants(c, hw);
  json basis = json::array();
  for (std::size_t i = 0; i < c.basis()->size(); ++i)
    basis.push_back(c.basis()->label(i, c.f().ring()->names()));
  return {
      {"p", c.field()->characteristic()},
      {"k", c.field()->degree()},
      {"modulus", c.field()->modulus_string()},
      {"polynomial", c.f().to_string()},
      {"degree", c.degree()},
      {"pa", inv.pa},
      {"sigma", inv.sigma},
      {"a_number", inv.a_number},
      {"basis", basis},
      {"hasse_witt", matrix_to_json(hw.matrix)},
      {"images", image_table(hw)},
  };
}

json cartier_report(const PlaneCurveSpec& c, const SemilinearMap& cm, const SemilinearMap& hw) {
  json basis = json::array();
  for (const auto& [a, b] : adjoint_basis(c.degree()))
    basis.push_back("x^" + std::to_string(a) + "*y^" + std::to_string(b) + " dx/f_y");
  const std::size_t rank_cm = rank(cm.matrix), rank_hw = rank(hw.matrix);
  return {
      {"p", c.field()->characteristic()},
      {"k", c.field()->degree()},
      {"degree", c.degree()},
      {"pa", c.arithmetic_genus()},
      {"basis", basis},
      {"cartier_manin", matrix_to_json(cm.matrix)},
      {"images", image_table(cm, "C")},
      {"rank_cartier", rank_cm},
      {"rank_hasse_witt", rank_hw},
      {"a_number_cartier", a_number(cm)},
      {"a_number_hasse_witt", a_number(hw)},
      {"ranks_agree", rank_cm == rank_hw},
  };
}

json genericity_json(const GenericityCertificate& cert) {
  json a = json::array();
  for (const auto& v : cert.a_values) {
    a.push_back({{"r", v.r},
                 {"s", v.s},
                 {"l", v.l},
                 {"q", v.q},
                 {"value", v.value ? json(v.value->to_string()) : json(nullptr)},
                 {"applicable", v.value.has_value()}});
  }
  json b = json::array();
  for (const auto& v : cert.b_values)
    b.push_back({{"b", v.b}, {"c", v.c}, {"subset", v.subset}, {"value", v.value.to_string()}});
  return {{"A", a}, {"B", b}, {"all_nonzero", cert.all_nonzero}};
}

json fermat_report_json(const FermatReport& r) {
  json S = json::object(), T = json::object();
  for (const auto& [rs, c] : r.S_cardinalities) S[rs_key(rs)] = c;
  for (const auto& [rs, c] : r.T_cardinalities) T[rs_key(rs)] = c;
  json terms = json::array();
  for (const auto& t : r.prank.terms)
    terms.push_back({{"t", t.t},
                     {"lambda_indices", t.lambda_indices},
                     {"sigma", t.sigma ? json(*t.sigma) : json(nullptr)}});
  json columns = json::array();
  for (const auto& c : r.columns)
    columns.push_back({{"r", c.r}, {"s", c.s}, {"tuple", tuple_json(c.tuple)},
                       {"zero_column", c.zero_column}, {"in_T", c.in_T}});
  json out = {
      {"m", r.m},
      {"n", r.n},
      {"p", r.p},
      {"k", r.k},
      {"lambdas", r.lambdas},
      {"genus", big(r.genus)},
      {"h1_dim", big(r.h1)},
      {"basis_size", r.g},
      {"span_matches_kernel", r.span_matches_kernel},
      {"sigma", r.sigma},
      {"a_number", r.a_number},
      {"anum_formula", r.anum_formula ? json(*r.anum_formula) : json(nullptr)},
      {"genericity", genericity_json(r.certificate)},
      {"prank_lower_bound", r.prank.value},
      {"prank_terms", terms},
      {"prank_bound_complete", r.prank.complete},
      {"S_cardinalities", S},
      {"T_cardinalities", T},
      {"columns", columns},
      {"flags", r.flags},
  };
  if (r.T00_closed_form)
    out["T00_closed_form"] = {{"with_binomial", big(r.T00_closed_form->with_binomial)},
                              {"without_binomial", big(r.T00_closed_form->without_binomial)}};
  return out;
}

json jacobian_report(const JacobianDecomposition& d, const SmoothModel& s, const std::vector<std::string>& flags) {
  return {
      {"dim_G", d.dim_G},
      {"toric_rank", d.toric_rank},
      {"unipotent_dim", d.unipotent_dim},
      {"g", s.g},
      {"sigma_smooth", s.sigma},
      {"a_lower_bound", s.a_lower_bound},
      {"ordinary", s.ordinary},
      {"flags", flags},
  };
}

json preset_report(const SingularFermatPreset& preset) {
  json points = json::array();
  for (const auto& pt : preset.points)
    points.push_back({{"coordinates", pt.coordinates}, {"type", pt.datum.to_string()}});
  return {
      {"m", preset.m},
      {"n", preset.n},
      {"points", points},
      {"dim_G", preset.decomposition.dim_G},
      {"toric_rank", preset.decomposition.toric_rank},
      {"unipotent_dim", preset.decomposition.unipotent_dim},
      {"toric_rank_enumerated", preset.toric_rank_enumerated},
      {"toric_rank_closed_form", preset.toric_rank_closed_form},
      {"relations", preset.relations},
      {"flags", preset.flags},
  };
}

json dims_report(int m, int n) {
  json identities = json::array();
  bool all_equal = true;
  for (int t = 0; t < n; ++t) {
    const BinomIdentity id = binom_identity(n, t);
    all_equal = all_equal && id.equal;
    identities.push_back({{"t", t}, {"lhs", big(id.lhs)}, {"rhs", big(id.rhs)}, {"equal", id.equal}});
  }
  json card = json::array();
  for (int t = 0; t <= n - 2; ++t) {
    BoundedCompositionQuery q = BoundedCompositionQuery::uniform(static_cast<std::size_t>(n) + 1, 1, m,
                                                                 static_cast<std::int64_t>(n - 1) * m);
    q.lower[0] = static_cast<std::int64_t>(t) * m + 1;
    q.upper[0] = static_cast<std::int64_t>(t + 1) * m;
    const BigInt counted = count_compositions(q);
    const BigInt closed = card_S_t0_closed_form(m, n, t);
    card.push_back({{"t", t}, {"counted", big(counted)}, {"closed_form", big(closed)}, {"equal", counted == closed}});
  }
  const std::vector<int> degrees(static_cast<std::size_t>(n - 1), m);
  const BigInt g = genus(m, n), h1 = h1_dim(m, n), ci = complete_intersection_h(n, degrees, 1, 0);
  return {
      {"m", m},
      {"n", n},
      {"genus", big(g)},
      {"h1_dim", big(h1)},
      {"complete_intersection_h1", big(ci)},
      {"dimensions_agree", g == h1 && h1 == ci},
      {"binom_identity", identities},
      {"binom_identity_holds", all_equal},
      {"card_S_t0", card},
  };
}

}  // namespace pcurve
