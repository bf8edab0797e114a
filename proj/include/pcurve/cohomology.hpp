#ifndef PCURVE_COHOMOLOGY_HPP
#define PCURVE_COHOMOLOGY_HPP

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pcurve/linalg.hpp"
#include "pcurve/poly.hpp"

namespace pcurve {

class DualBasis;
using DualBasisPtr = std::shared_ptr<const DualBasis>;

/// Monomial basis 1/(x0^a0 ... xn^an), sum a_j = s, every a_j >= 1, of the
/// top cohomology H^n(P^n, O(-s)). Tuples are sorted lexicographically and
/// that order is the coordinate order of every matrix built on the basis.
class DualBasis {
 public:
  static DualBasisPtr create(int n, int s);

  int n() const noexcept { return n_; }
  int s() const noexcept { return s_; }
  std::size_t size() const noexcept { return tuples_.size(); }
  // Positive exponents (a0, ..., an) of the i-th element.
  const std::vector<int>& tuple(std::size_t i) const { return tuples_.at(i); }
  const std::vector<std::vector<int>>& tuples() const noexcept { return tuples_; }
  // Laurent exponent vector (-a0, ..., -an).
  ExponentVector exponents(std::size_t i) const;
  std::optional<std::size_t> index_of_tuple(const std::vector<int>& a) const;
  std::optional<std::size_t> index_of_exponents(const ExponentVector& e) const;
  // "1/(x^a y^b z^c)" style label using the ring's names.
  std::string label(std::size_t i, const std::vector<std::string>& names) const;

 private:
  DualBasis(int n, int s);
  int n_, s_;
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, std::size_t> index_;
};

/// Element of H^n(P^n, O(-s)) in dual-basis coordinates.
class CohomologyClass {
 public:
  CohomologyClass(DualBasisPtr basis, Field field) : basis_(std::move(basis)), field_(std::move(field)) {}

  const DualBasisPtr& basis() const noexcept { return basis_; }
  const Field& field() const noexcept { return field_; }
  const std::map<std::size_t, FieldElement>& coords() const noexcept { return coords_; }
  bool is_zero() const noexcept { return coords_.empty(); }

  FieldElement coordinate(std::size_t i) const;
  void add(std::size_t i, const FieldElement& c);
  Vector dense() const;
  static CohomologyClass from_dense(DualBasisPtr basis, std::span<const FieldElement> v);
  // The class as a Laurent polynomial in `ring` (n+1 variables).
  MultiPoly to_poly(const Ring& ring) const;

  friend bool operator==(const CohomologyClass& a, const CohomologyClass& b);

 private:
  DualBasisPtr basis_;
  Field field_;
  std::map<std::size_t, FieldElement> coords_;
};

// Projects a Laurent polynomial of total degree -s onto the dual basis:
// terms with some exponent >= 0 are zero in cohomology and are dropped.
// Throws DegreeMismatch when some term has another degree.
CohomologyClass reduce(const MultiPoly& l, const DualBasisPtr& target);

enum class Twist { p, p_inverse };

/// Matrix of a semilinear operator; column j holds the image of basis
/// vector j, and applying the map to coordinates v is matrix * v^(twist).
struct SemilinearMap {
  Matrix matrix;
  Twist twist = Twist::p;
  std::string basis_label;

  std::size_t dim() const noexcept { return matrix.rows(); }
  Vector apply(std::span<const FieldElement> v) const;
  // Matrix of the `times`-fold composite (twist accumulates accordingly).
  Matrix iterate(std::size_t times) const;
};

SemilinearMap semilinear_matrix(const DualBasisPtr& basis,
                                const std::function<CohomologyClass(std::size_t)>& image_of,
                                Twist twist, std::string label);

// Dimension of the image of the g-fold composite, g = dim; equal to the
// dimension of the largest subspace on which the map is bijective.
std::size_t stable_rank(const SemilinearMap& m);
// dim ker of one application.
std::size_t a_number(const SemilinearMap& m);

}  // namespace pcurve

#endif  // PCURVE_COHOMOLOGY_HPP
