#ifndef PCURVE_POLY_HPP
#define PCURVE_POLY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pcurve/gf.hpp"

namespace pcurve {

// One signed exponent per ring variable. Negative entries make Laurent
// monomials; a cohomology monomial 1/(x0^a0 ... xn^an) is stored as
// (-a0, ..., -an).
using ExponentVector = std::vector<int>;

int total_degree(const ExponentVector& e);

// Graded lexicographic order, largest first: higher total degree precedes,
// ties broken lexicographically with x0 > x1 > ...
struct GrlexGreater {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

class PolyRing;
using Ring = std::shared_ptr<const PolyRing>;

class PolyRing {
 public:
  static Ring create(Field field, std::vector<std::string> names);
  // x,y,z for three variables, x0..x{n-1} otherwise.
  static Ring create(Field field, std::size_t nvars);

  const Field& field() const noexcept { return field_; }
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  bool same_as(const PolyRing& other) const noexcept;

 private:
  PolyRing(Field field, std::vector<std::string> names)
      : field_(std::move(field)), names_(std::move(names)) {}
  Field field_;
  std::vector<std::string> names_;
};

/// Sparse (Laurent) polynomial over a PolyRing. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using TermMap = std::map<ExponentVector, FieldElement, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(Ring ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(Ring ring, const FieldElement& c);
  static MultiPoly monomial(Ring ring, ExponentVector e, const FieldElement& c);
  static MultiPoly monomial(Ring ring, ExponentVector e);
  static MultiPoly variable(Ring ring, std::size_t index);

  const Ring& ring() const noexcept { return ring_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  FieldElement coefficient(const ExponentVector& e) const;

  // Adds c * x^e in place.
  void add_term(const ExponentVector& e, const FieldElement& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly scaled(const FieldElement& c) const;
  // Repeated squaring. In characteristic p the result for e = p is checked
  // against frobenius().
  MultiPoly pow(unsigned e) const;
  // Coefficients raised to the p-th power and every exponent multiplied by p.
  MultiPoly frobenius() const;

  bool is_homogeneous() const noexcept;
  // Total degree of the (homogeneous or not) leading term; 0 for zero.
  int degree() const noexcept;
  bool is_polynomial() const noexcept;  // no negative exponents

  std::string to_string() const;

 private:
  void check_ring(const MultiPoly& other) const;
  Ring ring_;
  TermMap terms_;
};

// Iterated formal derivative d^order/dx_var^order. Falling-factorial factors
// are reduced mod p, so e.g. d/dx x^2 = 0 over F_2.
MultiPoly partial_derivative(const MultiPoly& a, std::size_t var, unsigned order = 1);

// b with b^p = a; throws NotAPthPower if some exponent is not divisible by p.
MultiPoly pth_root(const MultiPoly& a);

// Sets variable `var` to 1 (the ring is kept; that exponent becomes 0).
// Throws NotHomogeneous when a is not homogeneous.
MultiPoly dehomogenize(const MultiPoly& a, std::size_t var);

// Evaluates at a point; negative exponents need nonzero coordinates.
FieldElement evaluate(const MultiPoly& a, std::span<const FieldElement> point);

}  // namespace pcurve

#endif  // PCURVE_POLY_HPP
