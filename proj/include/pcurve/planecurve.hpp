#ifndef PCURVE_PLANECURVE_HPP
#define PCURVE_PLANECURVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcurve/cohomology.hpp"
#include "pcurve/poly.hpp"

namespace pcurve {

/// A plane curve f(x, y, z) = 0 in P^2, possibly singular.
class PlaneCurveSpec {
 public:
  // f must be a nonzero homogeneous polynomial in three variables of degree >= 3.
  explicit PlaneCurveSpec(MultiPoly f);

  const MultiPoly& f() const noexcept { return f_; }
  const Field& field() const noexcept { return f_.ring()->field(); }
  int degree() const noexcept { return d_; }
  // (d-1)(d-2)/2
  int arithmetic_genus() const noexcept { return (d_ - 1) * (d_ - 2) / 2; }
  const DualBasisPtr& basis() const noexcept { return basis_; }

 private:
  MultiPoly f_;
  int d_;
  DualBasisPtr basis_;
};

// Frobenius on H^1 in the dual basis of H^2(P^2, O(-d)): column j is
// reduce(f^{p-1} b_j^p).
SemilinearMap hasse_witt(const PlaneCurveSpec& c);

struct PlaneInvariants {
  std::size_t sigma = 0;
  std::size_t a_number = 0;
  int pa = 0;
};

PlaneInvariants invariants(const PlaneCurveSpec& c);
PlaneInvariants invariants(const PlaneCurveSpec& c, const SemilinearMap& hw);

// "F(b1) = b3 + t*b2" lines, one per basis element (1-based labels).
std::vector<std::string> image_table(const SemilinearMap& m, const std::string& symbol = "F");

// Basis {x^a y^b dx/f_y : a + b <= d - 3} of the Cartier-Manin matrix, in
// lexicographic order of (a, b).
std::vector<std::pair<int, int>> adjoint_basis(int d);

// Cartier operator on regular differentials via the Stohr-Voloch formula in
// the affine chart infinity_var = 1. Twist is p_inverse.
SemilinearMap cartier_manin(const PlaneCurveSpec& c, std::size_t infinity_var = 2);

/// Truncated Laurent series sum a_n t^n; coefficients at exponents >= order
/// are unknown.
class LaurentSeries {
 public:
  LaurentSeries(Field field, std::int64_t order) : field_(std::move(field)), order_(order) {}

  const Field& field() const noexcept { return field_; }
  std::int64_t order() const noexcept { return order_; }
  const std::map<std::int64_t, FieldElement>& coeffs() const noexcept { return coeffs_; }

  // Terms at or beyond the truncation order are ignored.
  void set(std::int64_t n, const FieldElement& c);
  FieldElement coefficient(std::int64_t n) const;
  // Lowest exponent with a nonzero coefficient, or order() if none is known.
  std::int64_t valuation() const;

  LaurentSeries operator*(const LaurentSeries& rhs) const;
  // sum a_n^p t^{pn}
  LaurentSeries frobenius() const;
  // Coefficient of t^{-1}.
  FieldElement residue() const;

 private:
  Field field_;
  std::int64_t order_;
  std::map<std::int64_t, FieldElement> coeffs_;
};

// C(sum a_n t^n dt) = sum a_{pn-1}^{1/p} t^{n-1} dt. With required_order set,
// throws InsufficientPrecision unless the result is known below it.
LaurentSeries formal_cartier(const LaurentSeries& omega, std::optional<std::int64_t> required_order = {});

struct ResidueDuality {
  FieldElement lhs;          // Res(f^p omega)
  FieldElement rhs;          // Res(f C(omega))^p
  FieldElement closed_form;  // sum_i a_i^p b_{-pi-1}
  bool holds = false;
};

ResidueDuality residue_duality(const LaurentSeries& f, const LaurentSeries& omega);
bool residue_duality_check(const LaurentSeries& f, const LaurentSeries& omega);

}  // namespace pcurve

#endif  // PCURVE_PLANECURVE_HPP
