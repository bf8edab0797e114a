// pcurve: p-rank and a-number of curves in characteristic p.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pcurve/error.hpp"
#include "pcurve/fermat.hpp"
#include "pcurve/jacobian.hpp"
#include "pcurve/parse.hpp"
#include "pcurve/planecurve.hpp"
#include "pcurve/report.hpp"

using nlohmann::json;
using namespace pcurve;

namespace {

constexpr int kOk = 0, kUsage = 2, kParse = 3, kVerification = 4, kDiscrepancy = 5;

struct Common {
  std::string format = "table";
  bool strict = false;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnboundIdentifier:
    case ErrorCode::NotHomogeneous:
    case ErrorCode::DegreeMismatch:
      return kParse;
    case ErrorCode::BasisVerificationFailed:
    case ErrorCode::ImageEscapesSpan:
    case ErrorCode::BasisEscape:
    case ErrorCode::InconsistentInvariants:
    case ErrorCode::InsufficientPrecision:
      return kVerification;
    default:
      return kUsage;
  }
}

Field make_field(std::uint32_t p, unsigned k, const std::string& modulus) {
  if (modulus.empty()) return FieldSpec::create(p, k);
  return FieldSpec::create(p, k, modulus);
}

FieldElement parse_element(const Field& field, const std::string& text) {
  if (field->degree() == 1 && text.find('t') != std::string::npos)
    throw Error(ErrorCode::InvalidArgument, "'" + text + "' uses the generator t but --ext is 1");
  return field->parse(text);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

void print_matrix(std::ostream& os, const json& rows) {
  for (const auto& row : rows) {
    os << "  [";
    bool first = true;
    for (const auto& e : row) {
      os << (first ? "" : ", ") << e.get<std::string>();
      first = false;
    }
    os << "]\n";
  }
}

void print_scalar(std::ostream& os, const std::string& key, const json& v) {
  os << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

// Writes the report and returns the exit code implied by its flags.
int emit(const Common& opt, const json& report, const std::function<void(std::ostream&)>& table) {
  if (opt.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    table(std::cout);
  }
  bool flagged = false;
  if (report.contains("flags")) {
    for (const auto& f : report["flags"]) {
      std::cerr << "warning: " << f.get<std::string>() << '\n';
      flagged = true;
    }
  }
  return (flagged && opt.strict) ? kDiscrepancy : kOk;
}

struct PlaneArgs {
  std::uint32_t p = 2;
  unsigned ext = 1;
  std::string modulus;
  std::string poly;
  std::vector<std::string> params;
  std::size_t chart = 2;
  bool cartier = false;
};

PlaneCurveSpec build_plane(const PlaneArgs& a) {
  const Field field = make_field(a.p, a.ext, a.modulus);
  const Ring ring = PolyRing::create(field, 3);
  ParameterBindings bindings;
  for (const auto& text : a.params) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::SyntaxError, "expected name=value, got '" + text + "'");
    bindings.insert_or_assign(text.substr(0, eq), parse_element(field, text.substr(eq + 1)));
  }
  return PlaneCurveSpec(parse_poly(a.poly, ring, bindings, true));
}

int run_plane(const Common& opt, const PlaneArgs& a) {
  const PlaneCurveSpec c = build_plane(a);
  const SemilinearMap hw = hasse_witt(c);
  json report = plane_curve_report(c, hw);
  if (a.cartier) {
    const SemilinearMap cm = cartier_manin(c, a.chart);
    report["cartier"] = cartier_report(c, cm, hw);
  }
  return emit(opt, report, [&](std::ostream& os) {
    print_scalar(os, "curve", report["polynomial"]);
    os << "field: F_" << a.p << "^" << a.ext << " (modulus " << report["modulus"].get<std::string>() << ")\n";
    print_scalar(os, "pa", report["pa"]);
    os << "basis:";
    for (std::size_t i = 0; i < report["basis"].size(); ++i)
      os << " b" << i + 1 << "=" << report["basis"][i].get<std::string>();
    os << '\n';
    for (const auto& line : report["images"]) os << "  " << line.get<std::string>() << '\n';
    print_scalar(os, "sigma", report["sigma"]);
    print_scalar(os, "a_number", report["a_number"]);
    if (a.cartier) {
      const json& cr = report["cartier"];
      os << "cartier-manin:\n";
      print_matrix(os, cr["cartier_manin"]);
      print_scalar(os, "rank_cartier", cr["rank_cartier"]);
      print_scalar(os, "rank_hasse_witt", cr["rank_hasse_witt"]);
    }
  });
}

int run_cartier(const Common& opt, const PlaneArgs& a) {
  const PlaneCurveSpec c = build_plane(a);
  const SemilinearMap hw = hasse_witt(c);
  const SemilinearMap cm = cartier_manin(c, a.chart);
  json report = cartier_report(c, cm, hw);
  report["flags"] = json::array();
  if (!report["ranks_agree"].get<bool>()) report["flags"].push_back("Cartier-Manin and Hasse-Witt ranks differ");
  return emit(opt, report, [&](std::ostream& os) {
    print_scalar(os, "pa", report["pa"]);
    for (const auto& line : report["images"]) os << "  " << line.get<std::string>() << '\n';
    os << "cartier-manin:\n";
    print_matrix(os, report["cartier_manin"]);
    for (const char* key : {"rank_cartier", "rank_hasse_witt", "a_number_cartier", "a_number_hasse_witt"})
      print_scalar(os, key, report[key]);
  });
}

struct FermatArgs {
  int m = 3, n = 3;
  std::uint32_t p = 2;
  unsigned ext = 2;
  std::string modulus;
  std::string lambdas;
  std::string basis = "complete";
};

int run_fermat(const Common& opt, const FermatArgs& a) {
  const Field field = make_field(a.p, a.ext, a.modulus);
  std::vector<FieldElement> lambdas;
  for (const auto& s : split(a.lambdas, ',')) lambdas.push_back(parse_element(field, s));
  const FermatSpec spec(a.m, a.n, lambdas);
  const FermatReport r = fermat_invariants(spec);
  json report = fermat_report_json(r);
  report["basis_mode"] = a.basis;
  if (a.basis == "squarefree") {
    // throws BasisVerificationFailed where the truncated corrections are not enough
    const FermatFrobenius fm = frobenius_matrix(spec, BasisChoice::theorem2, BasisMode::squarefree);
    if (stable_rank(fm.map) != r.sigma || a_number(fm.map) != r.a_number)
      throw Error(ErrorCode::BasisVerificationFailed, "squarefree basis gives different invariants");
  }
  return emit(opt, report, [&](std::ostream& os) {
    os << "curve: C^" << a.m << "(" << a.lambdas << ") in P^" << a.n << " over F_" << a.p << "^" << a.ext << '\n';
    for (const char* key : {"genus", "h1_dim", "basis_size", "span_matches_kernel", "sigma", "a_number",
                            "anum_formula", "prank_lower_bound"})
      print_scalar(os, key, report[key]);
    print_scalar(os, "genericity_all_nonzero", report["genericity"]["all_nonzero"]);
    print_scalar(os, "S_cardinalities", report["S_cardinalities"]);
    print_scalar(os, "T_cardinalities", report["T_cardinalities"]);
  });
}

int run_dims(const Common& opt, int m, int n) {
  if (m < 2 || n < 2) throw Error(ErrorCode::InvalidArgument, "need m >= 2 and n >= 2");
  json report = dims_report(m, n);
  report["flags"] = json::array();
  if (!report["dimensions_agree"].get<bool>()) report["flags"].push_back("genus and h1 formulas disagree");
  if (!report["binom_identity_holds"].get<bool>()) report["flags"].push_back("binomial identity fails");
  for (const auto& row : report["card_S_t0"])
    if (!row["equal"].get<bool>())
      report["flags"].push_back("closed form for Card(S(" + std::to_string(row["t"].get<int>()) +
                                ",0)) disagrees with enumeration");
  return emit(opt, report, [&](std::ostream& os) {
    for (const char* key : {"m", "n", "genus", "h1_dim", "complete_intersection_h1", "dimensions_agree",
                            "binom_identity_holds"})
      print_scalar(os, key, report[key]);
    for (const auto& row : report["card_S_t0"])
      os << "Card(S(" << row["t"] << ",0)): counted " << row["counted"] << ", closed form " << row["closed_form"]
         << '\n';
  });
}

struct JacobianArgs {
  std::optional<long long> pa, sigma, anum;
  std::vector<std::string> sing;
  std::string preset;
};

int run_jacobian(const Common& opt, const JacobianArgs& a) {
  if (!a.preset.empty()) {
    const auto parts = split(a.preset, ',');
    if (parts.size() != 2) throw Error(ErrorCode::InvalidArgument, "--fermat-preset expects M,N");
    const SingularFermatPreset preset = singular_fermat_preset(std::stoi(parts[0]), std::stoi(parts[1]));
    const json report = preset_report(preset);
    return emit(opt, report, [&](std::ostream& os) {
      os << "singular points: " << report["points"].size() << " of type " << report["points"][0]["type"].get<std::string>()
         << '\n';
      for (const char* key : {"dim_G", "toric_rank", "unipotent_dim", "toric_rank_enumerated", "toric_rank_closed_form"})
        print_scalar(os, key, report[key]);
      for (const auto& rel : report["relations"]) os << "  " << rel.get<std::string>() << '\n';
    });
  }
  if (!a.pa || !a.sigma || !a.anum)
    throw Error(ErrorCode::InvalidArgument, "--pa, --sigma and --anum are required without --fermat-preset");
  std::vector<SingularityDatum> data;
  for (const auto& s : a.sing) data.push_back(parse_singularity(s));
  const JacobianDecomposition d = decompose(data);
  const SmoothModel model = smooth_model_invariants(*a.pa, *a.sigma, *a.anum, d);
  const json report = jacobian_report(d, model, {});
  return emit(opt, report, [&](std::ostream& os) {
    for (const char* key : {"dim_G", "toric_rank", "unipotent_dim", "g", "sigma_smooth", "a_lower_bound", "ordinary"})
      print_scalar(os, key, report[key]);
  });
}

// ---- selftest ----

struct Check {
  std::string name;
  std::string status;  // pass | fail | discrepancy
  std::string detail;
};

Check expect(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok ? "pass" : "fail", detail};
}

std::vector<Check> selftest_checks() {
  std::vector<Check> checks;

  {  // sextic over F_4
    const Field f4 = FieldSpec::create(2, 2);
    const Ring ring = PolyRing::create(f4, 3);
    const FieldElement lambda = f4->generator();
    const PlaneCurveSpec c(parse_poly("x^3*y^3 + x^3*z^3 + y^3*z^3 + lambda*z^6", ring, {{"lambda", lambda}}, true));
    const SemilinearMap hw = hasse_witt(c);
    // reference beta_1..beta_10 as lexicographic basis positions
    const std::vector<std::size_t> beta = {1, 2, 4, 6, 7, 8, 5, 0, 3, 9};
    Matrix expected(f4, 10, 10);
    const std::vector<std::pair<int, int>> unit = {{1, 3}, {2, 4}, {3, 1}, {4, 2}, {5, 6}, {6, 5}};
    for (auto [from, to] : unit) expected.at(beta[to - 1], beta[from - 1]) = f4->one();
    for (int to : {8, 9, 10}) expected.at(beta[to - 1], beta[6]) = f4->one();
    expected.at(beta[6], beta[7]) = lambda;
    const PlaneInvariants inv = invariants(c, hw);
    checks.push_back(expect("sextic p=2 image table", hw.matrix == expected, "F(b1)=b3 ... F(b8)=lambda*b7, F(b9)=F(b10)=0"));
    checks.push_back(expect("sextic p=2 invariants", inv.sigma == 8 && inv.a_number == 2 && inv.pa == 10,
                            "sigma=" + std::to_string(inv.sigma) + " a=" + std::to_string(inv.a_number) +
                                " pa=" + std::to_string(inv.pa)));
    const SemilinearMap cm = cartier_manin(c);
    checks.push_back(expect("sextic duality", rank(cm.matrix) == rank(hw.matrix) && a_number(cm) == a_number(hw),
                            "rank C = " + std::to_string(rank(cm.matrix))));
  }

  {  // quintic over F_7
    const Field f7 = FieldSpec::create(7, 1);
    const Ring ring = PolyRing::create(f7, 3);
    const PlaneCurveSpec c(parse_poly("x^5 + y^3*z^2 + A*x*y*z^3 + B*x*z^4", ring,
                                      {{"A", f7->from_int(2)}, {"B", f7->from_int(3)}}, true));
    const SemilinearMap hw = hasse_witt(c);
    const PlaneInvariants inv = invariants(c, hw);
    const SemilinearMap cm = cartier_manin(c);
    checks.push_back(expect("quintic p=7 pa", inv.pa == 6, "pa=" + std::to_string(inv.pa)));
    checks.push_back(expect("quintic duality", rank(cm.matrix) == rank(hw.matrix) && a_number(cm) == a_number(hw),
                            "rank F = " + std::to_string(rank(hw.matrix))));
    checks.push_back({"quintic p=7 sigma", inv.sigma == 1 ? "pass" : "discrepancy",
                      "computed sigma=" + std::to_string(inv.sigma) + " a=" + std::to_string(inv.a_number) +
                          ", expected sigma=1"});
  }

  {  // normalization of singular curves
    const auto d = decompose({SingularityDatum::ordinary(3, 2)});
    const auto s = smooth_model_invariants(10, 8, 2, d);
    checks.push_back(expect("two ordinary triple points", d.dim_G == 6 && d.toric_rank == 4 && s.g == 4 &&
                                                              s.sigma == 4 && s.a_lower_bound == 0 && s.ordinary,
                            "g=4 sigma=4 ordinary"));
    const auto dc = decompose({SingularityDatum::cusp(5)});
    const auto sc = smooth_model_invariants(6, 1, 0, dc);
    checks.push_back(expect("cusp z^2=x^5", dc.toric_rank == 0 && dc.dim_G == 2 && sc.sigma == 1, "sigma(X)=sigma(X')"));
  }

  {  // dimension formulas
    checks.push_back(expect("complete intersection h1 (n=2, d=6)", complete_intersection_h(2, {6}, 1, 0) == 10, "10"));
    bool all = true;
    for (int n = 1; n <= 12; ++n)
      for (int t = 0; t < n; ++t) all = all && binom_identity(n, t).equal;
    checks.push_back(expect("binomial identity 0 <= t < n <= 12", all, "78 cases"));
    checks.push_back(expect("genus = h1 for (3,3), (5,3), (3,4)",
                            genus(3, 3) == 10 && h1_dim(3, 3) == 10 && genus(5, 3) == 76 && h1_dim(5, 3) == 76 &&
                                genus(3, 4) == 55 && h1_dim(3, 4) == 55,
                            "10, 76, 55"));
  }

  {  // Fermat (3,3) over F_4
    const Field f4 = FieldSpec::create(2, 2);
    const FermatSpec spec(3, 3, {f4->generator(), f4->parse("t+1")});
    const FermatReport r = fermat_invariants(spec);
    checks.push_back(expect("fermat (3,3) basis and kernel", r.g == 10 && r.span_matches_kernel, "10-dimensional"));
    checks.push_back(expect("fermat (3,3) a-number", r.a_number == 4 && r.anum_formula == 4u,
                            "a=" + std::to_string(r.a_number)));
  }

  {  // singular Fermat preset
    const auto preset = singular_fermat_preset(2, 3);
    checks.push_back({"singular fermat toric rank", preset.toric_rank_enumerated == preset.toric_rank_closed_form ? "pass" : "discrepancy",
                      "enumerated " + std::to_string(preset.toric_rank_enumerated) + ", closed form " +
                          std::to_string(preset.toric_rank_closed_form)});
  }
  return checks;
}

int run_selftest(const Common& opt) {
  const auto checks = selftest_checks();
  json report = {{"checks", json::array()}, {"flags", json::array()}};
  bool failed = false;
  for (const auto& c : checks) {
    report["checks"].push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
    if (c.status == "fail") failed = true;
    if (c.status == "discrepancy") report["flags"].push_back(c.name + ": " + c.detail);
  }
  const int code = emit(opt, report, [&](std::ostream& os) {
    for (const auto& c : checks) os << c.status << "  " << c.name << "  (" << c.detail << ")\n";
  });
  return failed ? kVerification : code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-rank and a-number of curves in characteristic p"};
  app.require_subcommand(1);
  Common opt;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--strict", opt.strict, "exit 5 when a discrepancy flag is raised");
  };

  PlaneArgs plane;
  auto add_plane = [&](CLI::App* sub) {
    sub->add_option("--p", plane.p, "characteristic")->required();
    sub->add_option("--ext", plane.ext, "extension degree k of F_{p^k}");
    sub->add_option("--modulus", plane.modulus, "defining polynomial in t");
    sub->add_option("--poly", plane.poly, "homogeneous f(x,y,z)")->required();
    sub->add_option("--param", plane.params, "name=value binding (repeatable)");
    sub->add_option("--chart", plane.chart, "variable set to 1 for the Cartier-Manin matrix (0,1,2)");
    add_common(sub);
  };
  auto* plane_cmd = app.add_subcommand("plane-curve", "Hasse-Witt matrix, p-rank and a-number of a plane curve");
  add_plane(plane_cmd);
  plane_cmd->add_flag("--cartier", plane.cartier, "also compute the Cartier-Manin matrix");
  auto* cartier_cmd = app.add_subcommand("cartier", "Cartier-Manin matrix of a plane curve");
  add_plane(cartier_cmd);

  FermatArgs fermat;
  auto* fermat_cmd = app.add_subcommand("fermat", "invariants of a generalized Fermat curve");
  fermat_cmd->add_option("--m", fermat.m, "degree")->required();
  fermat_cmd->add_option("--n", fermat.n, "ambient dimension")->required();
  fermat_cmd->add_option("--p", fermat.p, "characteristic")->required();
  fermat_cmd->add_option("--ext", fermat.ext, "extension degree k of F_{p^k}");
  fermat_cmd->add_option("--modulus", fermat.modulus, "defining polynomial in t");
  fermat_cmd->add_option("--lambda", fermat.lambdas, "comma-separated lambda_0..lambda_{n-2}")->required();
  fermat_cmd->add_option("--basis", fermat.basis, "correction terms of the explicit basis")
      ->check(CLI::IsMember({"complete", "squarefree"}));
  add_common(fermat_cmd);

  int dm = 0, dn = 0;
  auto* dims_cmd = app.add_subcommand("dims", "genus, h1 and counting identities");
  dims_cmd->add_option("--m", dm, "degree")->required();
  dims_cmd->add_option("--n", dn, "ambient dimension")->required();
  add_common(dims_cmd);

  JacobianArgs jac;
  auto* jac_cmd = app.add_subcommand("jacobian", "invariants of the smooth model from singularity data");
  jac_cmd->add_option("--pa", jac.pa, "arithmetic genus of the singular curve");
  jac_cmd->add_option("--sigma", jac.sigma, "p-rank of the singular curve");
  jac_cmd->add_option("--anum", jac.anum, "a-number of the singular curve");
  jac_cmd->add_option("--sing", jac.sing, "ordinary:B[:N] | cusp:R[:N] | diagonal:M[:N] (repeatable)");
  jac_cmd->add_option("--fermat-preset", jac.preset, "M,N: singular points of C^M(1,1,...) in P^N");
  add_common(jac_cmd);

  auto* self_cmd = app.add_subcommand("selftest", "recompute the reference examples");
  add_common(self_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*plane_cmd) return run_plane(opt, plane);
    if (*cartier_cmd) return run_cartier(opt, plane);
    if (*fermat_cmd) return run_fermat(opt, fermat);
    if (*dims_cmd) return run_dims(opt, dm, dn);
    if (*jac_cmd) return run_jacobian(opt, jac);
    if (*self_cmd) return run_selftest(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
