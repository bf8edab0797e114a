#include <doctest.h>

#include "pcurve/error.hpp"
#include "pcurve/fermat.hpp"

using namespace pcurve;

namespace {

FermatSpec make(int m, int n, unsigned k, const std::vector<std::string>& lambdas) {
  const Field f = FieldSpec::create(2, k);
  std::vector<FieldElement> v;
  for (const auto& s : lambdas) v.push_back(f->parse(s));
  return FermatSpec(m, n, v);
}

}  // namespace

TEST_CASE("genus and h1") {
  CHECK(genus(3, 2) == 1);
  CHECK(genus(3, 3) == 10);
  CHECK(genus(5, 3) == 76);
  CHECK(genus(3, 4) == 55);
  for (int m = 2; m <= 7; ++m)
    for (int n = 2; n <= 6; ++n) CHECK(genus(m, n) == h1_dim(m, n));
  CHECK(complete_intersection_h(2, {6}, 1, 0) == 10);
  CHECK(complete_intersection_h(2, {4}, 1, 0) == 3);
}

TEST_CASE("counting identity: sum of |S(r,s)| is h1") {
  for (int m : {3, 5})
    for (int n : {3, 4}) {
      const FermatSpec spec = make(m, n, 4, n == 3 ? std::vector<std::string>{"t", "t^2"}
                                                   : std::vector<std::string>{"t", "t^2", "t^3"});
      std::size_t total = 0;
      for (int r = 0; r <= n - 2; ++r)
        for (int s = 0; r + s <= n - 2; ++s) total += enumerate_S(spec, r, s).tuples.size();
      CHECK(BigInt(total) == h1_dim(m, n));
      for (int t = 0; t <= n - 2; ++t)
        CHECK(BigInt(enumerate_S(spec, t, 0).tuples.size()) == card_S_t0_closed_form(m, n, t));
    }
}

TEST_CASE("(3,3) over F4") {
  const FermatSpec spec = make(3, 3, 2, {"t", "t+1"});
  CHECK(spec.smooth());
  CHECK(spec.ambient()->size() == 10);
  const auto basis = basis_theorem2(spec);
  CHECK(basis.size() == 10);
  // S(0,0) already has h1 elements; S(1,0) and S(0,1) are empty here
  for (const auto& b : basis) CHECK(b.r + b.s == 0);
  CHECK(enumerate_S(spec, 1, 0).tuples.empty());
  CHECK(same_span(kernel_basis(spec), std::vector<CohomologyClass>{}) == false);
  const auto t2 = frobenius_matrix(spec, BasisChoice::theorem2);
  const auto ker = frobenius_matrix(spec, BasisChoice::kernel);
  CHECK(stable_rank(t2.map) == stable_rank(ker.map));
  CHECK(a_number(t2.map) == a_number(ker.map));
  CHECK(a_number(t2.map) == 4);
  const auto squarefree = basis_theorem2(spec, BasisMode::squarefree);
  CHECK(squarefree.size() == 10);
  CHECK(enumerate_T(spec, 0, 0).tuples.size() + enumerate_T(spec, 1, 0).tuples.size() +
            enumerate_T(spec, 0, 1).tuples.size() ==
        4);
  const auto report = fermat_invariants(spec);
  CHECK(report.flags.empty());
  CHECK(report.T00_closed_form.has_value());
}

TEST_CASE("degenerate lambdas are not smooth") {
  const Field f = FieldSpec::create(2, 2);
  CHECK(!FermatSpec(3, 3, {f->generator(), f->generator()}).smooth());
  CHECK(!FermatSpec(3, 3, {f->zero(), f->one()}).smooth());
}

TEST_CASE("squarefree corrections break down once r or s reaches 2") {
  const FermatSpec spec = make(3, 5, 4, {"t", "t^2", "t^3", "t^3+t"});
  try {
    basis_theorem2(spec, BasisMode::squarefree);
    FAIL("squarefree basis verified");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BasisVerificationFailed);
  }
  CHECK(BigInt(basis_theorem2(spec).size()) == h1_dim(3, 5));
}

TEST_CASE("genericity certificate and p-rank bound at (3,3)") {
  const FermatSpec spec = make(3, 3, 2, {"t", "t+1"});
  const auto cert = genericity(spec);
  CHECK(cert.all_nonzero);
  CHECK(!cert.a_values.empty());
  CHECK(cert.b_values.empty());  // no r + s <= (n-2)/2 with r + s >= 1
  const auto bound = prank_lower_bound(spec);
  CHECK(bound.complete);
  CHECK(bound.value <= static_cast<long long>(stable_rank(frobenius_matrix(spec).map)));
}
