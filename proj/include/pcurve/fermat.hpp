#ifndef PCURVE_FERMAT_HPP
#define PCURVE_FERMAT_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcurve/cohomology.hpp"
#include "pcurve/combinatorics.hpp"
#include "pcurve/poly.hpp"

namespace pcurve {

// ---- dimension formulas ----

// 1 + m^{n-1}((m-1)(n-1) - 2)/2
BigInt genus(int m, int n);
// sum_i (-1)^i C(n-1, i) C((n-i-1)m - 1, n)
BigInt h1_dim(int m, int n);
// h^t(O_Y(-r)) for Y the complete intersection of the first n-t hypersurfaces
// of the given degrees in P^n.
BigInt complete_intersection_h(int n, const std::vector<int>& degrees, int t, int r);

struct BinomIdentity {
  BigInt lhs;  // sum_i (-1)^i C(t+1-i, t-i) C(n+1, i)
  BigInt rhs;  // (-1)^t C(n-1, t)
  bool equal = false;
};
BinomIdentity binom_identity(int n, int t);

// sum_{i=0}^{n-t-2} (-1)^i C(n+1, i) C((n-t-i-1)m - 1, n)
BigInt card_S_t0_closed_form(int m, int n, int t);

struct TClosedForm {
  BigInt with_binomial;     // T_i carrying its C(n+1, i) factor twice
  BigInt without_binomial;  // the outer C(n+1, i) factor dropped
};
// The two readings of the |T(0,0)| closed form; p = 2, m odd.
TClosedForm card_T00_closed_form(int m, int n);

// ---- the curve ----

/// C^m(lambda_0, ..., lambda_{n-2}) in P^n, cut out by
/// f_i = lambda_i x0^m + x1^m + x_{i+2}^m.
class FermatSpec {
 public:
  FermatSpec(int m, int n, std::vector<FieldElement> lambdas);

  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  unsigned p() const noexcept { return field_->characteristic(); }
  const std::vector<FieldElement>& lambdas() const noexcept { return lambdas_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<MultiPoly>& equations() const noexcept { return f_; }
  // lambda_i nonzero and pairwise distinct.
  bool smooth() const noexcept { return smooth_; }
  // dual_basis(n, (n-1)m), where H^1 lives.
  const DualBasisPtr& ambient() const noexcept { return ambient_; }
  // dual_basis(n, (n-2)m), the target of multiplication by f_i.
  const DualBasisPtr& relations() const noexcept { return relations_; }

  // The curve cut out by the given lambda indices, in P^{size+1}.
  FermatSpec sub_curve(const std::vector<std::size_t>& indices) const;

 private:
  int m_, n_;
  Field field_;
  std::vector<FieldElement> lambdas_;
  Ring ring_;
  std::vector<MultiPoly> f_;
  bool smooth_;
  DualBasisPtr ambient_, relations_;
};

using Tuple = std::vector<int>;

struct IndexSet {
  int r = 0, s = 0;
  std::vector<Tuple> tuples;
};

// rm < a0 <= (r+1)m, sm < a1 <= (s+1)m, 0 < a_i <= m (i >= 2), sum (n-1)m.
IndexSet enumerate_S(const FermatSpec& spec, int r, int s);
// T(0,0): at least three coordinates <= (m-1)/2. T(r,s), r+s >= 1: the union
// of the four half-interval cases. Only for p = 2 and m odd.
IndexSet enumerate_T(const FermatSpec& spec, int r, int s);
bool in_T(const FermatSpec& spec, int r, int s, const Tuple& a);

struct BetaEntry {
  int l = 0, q = 0;
  std::vector<int> indices;  // i_1 <= ... <= i_{l+q} in {2..n}; repeats only in complete mode
  FieldElement value;
};

struct BasisElement {
  int r = 0, s = 0;
  Tuple leading;
  CohomologyClass expansion;
  std::vector<BetaEntry> beta_table;
};

// complete: correction terms over all multisets of indices; squarefree:
// strictly increasing index sets only, which is exact only for r, s <= 1.
enum class BasisMode { complete, squarefree };

// Ordered by (r+s, r, leading tuple). Verifies the count against h1_dim,
// that f_i * alpha reduces to zero, and linear independence; throws
// BasisVerificationFailed otherwise.
std::vector<BasisElement> basis_theorem2(const FermatSpec& spec, BasisMode mode = BasisMode::complete);

// Joint kernel of multiplication by the f_i, H^n(O(-(n-1)m)) -> H^n(O(-(n-2)m)).
std::vector<CohomologyClass> kernel_basis(const FermatSpec& spec);

// rank [A | B] == rank A == rank B
bool same_span(const std::vector<CohomologyClass>& a, const std::vector<CohomologyClass>& b);

enum class BasisChoice { theorem2, kernel };

struct FermatFrobenius {
  SemilinearMap map;
  std::size_t fast_path_columns = 0;  // theorem2 columns read off leading monomials
  std::size_t solved_columns = 0;     // columns that needed the linear solve
};

// Image of alpha is reduce((prod f_i)^{p-1} alpha^p). Throws ImageEscapesSpan
// if an image is outside the span of the basis.
FermatFrobenius frobenius_matrix(const FermatSpec& spec, BasisChoice choice = BasisChoice::theorem2,
                                 BasisMode mode = BasisMode::complete);
FermatFrobenius frobenius_matrix(const FermatSpec& spec, const std::vector<BasisElement>& basis);
FermatFrobenius frobenius_matrix(const FermatSpec& spec, const std::vector<CohomologyClass>& basis);

struct GenericityCertificate {
  struct AValue {
    int r = 0, s = 0;
    int l = 0, q = 0;
    std::optional<FieldElement> value;  // nullopt: no pair (l, q) fits
  };
  struct BValue {
    int b = 0, c = 0;
    std::vector<int> subset;  // I_{b+c} within {2..n}
    FieldElement value;
  };
  std::vector<AValue> a_values;
  std::vector<BValue> b_values;
  bool all_nonzero = true;
};

GenericityCertificate genericity(const FermatSpec& spec);

struct PrankBoundTerm {
  int t = 0;
  std::vector<std::size_t> lambda_indices;
  std::optional<std::size_t> sigma;  // nullopt when the sub-curve is degenerate
};

struct PrankBound {
  long long value = 0;
  std::vector<PrankBoundTerm> terms;
  bool complete = true;  // false when some sub-curve was skipped
};

PrankBound prank_lower_bound(const FermatSpec& spec);

struct ColumnCheck {
  int r = 0, s = 0;
  Tuple tuple;
  bool zero_column = false;
  bool in_T = false;
};

struct FermatReport {
  int m = 0, n = 0;
  unsigned p = 0, k = 0;
  std::vector<std::string> lambdas;
  BigInt genus, h1;
  std::size_t g = 0;
  std::size_t sigma = 0;
  std::size_t a_number = 0;
  std::optional<std::size_t> anum_formula;  // p = 2, m odd
  PrankBound prank;
  GenericityCertificate certificate;
  std::map<std::pair<int, int>, std::size_t> S_cardinalities;
  std::map<std::pair<int, int>, std::size_t> T_cardinalities;
  std::vector<ColumnCheck> columns;  // p = 2, m odd
  std::optional<TClosedForm> T00_closed_form;
  bool span_matches_kernel = false;
  std::vector<std::string> flags;
};

FermatReport fermat_invariants(const FermatSpec& spec);

}  // namespace pcurve

#endif  // PCURVE_FERMAT_HPP
