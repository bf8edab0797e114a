#include "pcurve/planecurve.hpp"

#include <algorithm>
#include <sstream>

#include "pcurve/error.hpp"

namespace pcurve {

PlaneCurveSpec::PlaneCurveSpec(MultiPoly f) : f_(std::move(f)), d_(0) {
  if (!f_.ring() || f_.ring()->nvars() != 3) throw Error(ErrorCode::ArityMismatch, "plane curves need three variables");
  if (f_.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial does not define a curve");
  if (!f_.is_polynomial()) throw Error(ErrorCode::InvalidArgument, "negative exponents in a curve equation");
  if (!f_.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, f_.to_string());
  d_ = f_.degree();
  if (d_ < 1) throw Error(ErrorCode::InvalidArgument, "curve degree must be positive");
  basis_ = DualBasis::create(2, d_);
}

SemilinearMap hasse_witt(const PlaneCurveSpec& c) {
  const unsigned p = c.field()->characteristic();
  const MultiPoly fp1 = c.f().pow(p - 1);
  const auto& basis = c.basis();
  const Ring& ring = c.f().ring();
  if (basis->size() == 0) return {Matrix(c.field(), 0, 0), Twist::p, "dual monomial basis"};
  return semilinear_matrix(
      basis,
      [&](std::size_t j) {
        MultiPoly beta_p = MultiPoly::monomial(ring, basis->exponents(j)).frobenius();
        return reduce(fp1 * beta_p, basis);
      },
      Twist::p, "dual monomial basis");
}

PlaneInvariants invariants(const PlaneCurveSpec& c, const SemilinearMap& hw) {
  return {stable_rank(hw), a_number(hw), c.arithmetic_genus()};
}

PlaneInvariants invariants(const PlaneCurveSpec& c) { return invariants(c, hasse_witt(c)); }

std::vector<std::string> image_table(const SemilinearMap& m, const std::string& symbol) {
  std::vector<std::string> lines;
  for (std::size_t j = 0; j < m.dim(); ++j) {
    std::ostringstream os;
    os << symbol << "(b" << j + 1 << ") = ";
    bool first = true;
    for (std::size_t i = 0; i < m.dim(); ++i) {
      const FieldElement& c = m.matrix.at(i, j);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      if (!c.is_one()) {
        const std::string cs = c.to_string();
        os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << '*';
      }
      os << 'b' << i + 1;
    }
    if (first) os << '0';
    lines.push_back(os.str());
  }
  return lines;
}

std::vector<std::pair<int, int>> adjoint_basis(int d) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a <= d - 3; ++a)
    for (int b = 0; a + b <= d - 3; ++b) out.emplace_back(a, b);
  return out;
}

SemilinearMap cartier_manin(const PlaneCurveSpec& c, std::size_t infinity_var) {
  if (infinity_var > 2) throw Error(ErrorCode::ArityMismatch, "infinity_var must be 0, 1 or 2");
  const Field& field = c.field();
  const unsigned p = field->characteristic();
  const Ring& ring = c.f().ring();
  std::vector<std::size_t> affine;
  for (std::size_t v = 0; v < 3; ++v)
    if (v != infinity_var) affine.push_back(v);
  const std::size_t vx = affine[0], vy = affine[1];

  const MultiPoly f = dehomogenize(c.f(), infinity_var);
  if (partial_derivative(f, vy).is_zero())
    throw Error(ErrorCode::ZeroPartialFy, "f_y vanishes identically in the chosen chart");
  const MultiPoly fp1 = f.pow(p - 1);

  const auto basis = adjoint_basis(c.degree());
  std::map<std::pair<int, int>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

  Matrix m(field, basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    ExponentVector e(3, 0);
    e[vx] = basis[j].first;
    e[vy] = basis[j].second;
    const MultiPoly h = MultiPoly::monomial(ring, e);
    MultiPoly g = partial_derivative(partial_derivative(fp1 * h, vx, p - 1), vy, p - 1);
    const MultiPoly image = pth_root(g);
    for (const auto& [ex, coef] : image.terms()) {
      auto it = index.find({ex[vx], ex[vy]});
      if (it == index.end())
        throw Error(ErrorCode::BasisEscape, "Cartier image of basis element " + std::to_string(j + 1) +
                                                " leaves the adjoint basis");
      m.at(it->second, j) += coef;
    }
  }
  return {std::move(m), Twist::p_inverse, "adjoint differentials x^a y^b dx/f_y"};
}

void LaurentSeries::set(std::int64_t n, const FieldElement& c) {
  if (n >= order_) return;
  if (c.is_zero()) {
    coeffs_.erase(n);
  } else {
    coeffs_.insert_or_assign(n, c);
  }
}

FieldElement LaurentSeries::coefficient(std::int64_t n) const {
  if (n >= order_) throw Error(ErrorCode::InsufficientPrecision, "coefficient of t^" + std::to_string(n) +
                                                                      " is beyond the truncation order");
  auto it = coeffs_.find(n);
  return it == coeffs_.end() ? field_->zero() : it->second;
}

std::int64_t LaurentSeries::valuation() const { return coeffs_.empty() ? order_ : coeffs_.begin()->first; }

LaurentSeries LaurentSeries::operator*(const LaurentSeries& rhs) const {
  if (!field_->same_as(*rhs.field_)) throw Error(ErrorCode::FieldMismatch, "series over different fields");
  const std::int64_t order = std::min(order_ + rhs.valuation(), rhs.order_ + valuation());
  LaurentSeries out(field_, order);
  for (const auto& [i, a] : coeffs_) {
    for (const auto& [j, b] : rhs.coeffs_) {
      if (i + j >= order) break;
      out.set(i + j, (out.coeffs_.count(i + j) ? out.coeffs_.at(i + j) : field_->zero()) + a * b);
    }
  }
  return out;
}

LaurentSeries LaurentSeries::frobenius() const {
  const std::int64_t p = field_->characteristic();
  LaurentSeries out(field_, order_ * p);
  for (const auto& [n, a] : coeffs_) out.set(n * p, a.frobenius());
  return out;
}

FieldElement LaurentSeries::residue() const { return coefficient(-1); }

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

LaurentSeries formal_cartier(const LaurentSeries& omega, std::optional<std::int64_t> required_order) {
  const std::int64_t p = omega.field()->characteristic();
  // t^{e} of the output comes from t^{p(e+1)-1}, known when p(e+1) <= order.
  const std::int64_t order = floor_div(omega.order(), p);
  if (required_order && order < *required_order)
    throw Error(ErrorCode::InsufficientPrecision, "input truncated at " + std::to_string(omega.order()) +
                                                      ", need at least " + std::to_string(p * *required_order));
  LaurentSeries out(omega.field(), order);
  for (const auto& [n, a] : omega.coeffs()) {
    if ((n + 1) % p != 0) continue;
    out.set((n + 1) / p - 1, a.pth_root());
  }
  return out;
}

ResidueDuality residue_duality(const LaurentSeries& f, const LaurentSeries& omega) {
  const std::int64_t p = f.field()->characteristic();
  ResidueDuality r;
  r.lhs = (f.frobenius() * omega).residue();
  r.rhs = (f * formal_cartier(omega)).residue().frobenius();
  r.closed_form = f.field()->zero();
  for (const auto& [i, a] : f.coeffs()) {
    const std::int64_t j = -p * i - 1;
    if (j < omega.valuation()) continue;
    r.closed_form += a.frobenius() * omega.coefficient(j);
  }
  r.holds = r.lhs == r.rhs && r.lhs == r.closed_form;
  return r;
}

bool residue_duality_check(const LaurentSeries& f, const LaurentSeries& omega) {
  return residue_duality(f, omega).holds;
}

}  // namespace pcurve
