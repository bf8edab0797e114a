#include "pcurve/cohomology.hpp"

#include <algorithm>
#include <sstream>

#include "pcurve/error.hpp"

namespace pcurve {

DualBasisPtr DualBasis::create(int n, int s) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "ambient dimension must be >= 1");
  if (s < 0) throw Error(ErrorCode::InvalidArgument, "twist must be >= 0");
  return DualBasisPtr(new DualBasis(n, s));
}

DualBasis::DualBasis(int n, int s) : n_(n), s_(s) {
  // Compositions of s into n+1 positive parts, generated in lexicographic order.
  std::vector<int> a(static_cast<std::size_t>(n) + 1, 1);
  const int parts = n + 1;
  std::function<void(int, int)> fill = [&](int j, int remaining) {
    if (j == parts - 1) {
      if (remaining >= 1) {
        a[static_cast<std::size_t>(j)] = remaining;
        tuples_.push_back(a);
      }
      return;
    }
    for (int v = 1; v <= remaining - (parts - 1 - j); ++v) {
      a[static_cast<std::size_t>(j)] = v;
      fill(j + 1, remaining - v);
    }
  };
  fill(0, s);
  for (std::size_t i = 0; i < tuples_.size(); ++i) index_.emplace(tuples_[i], i);
}

ExponentVector DualBasis::exponents(std::size_t i) const {
  ExponentVector e = tuples_.at(i);
  for (auto& x : e) x = -x;
  return e;
}

std::optional<std::size_t> DualBasis::index_of_tuple(const std::vector<int>& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> DualBasis::index_of_exponents(const ExponentVector& e) const {
  std::vector<int> a(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) a[i] = -e[i];
  return index_of_tuple(a);
}

std::string DualBasis::label(std::size_t i, const std::vector<std::string>& names) const {
  std::ostringstream os;
  os << "1/(";
  const auto& a = tuples_.at(i);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (j) os << ' ';
    os << names.at(j);
    if (a[j] != 1) os << '^' << a[j];
  }
  os << ')';
  return os.str();
}

FieldElement CohomologyClass::coordinate(std::size_t i) const {
  auto it = coords_.find(i);
  return it == coords_.end() ? field_->zero() : it->second;
}

void CohomologyClass::add(std::size_t i, const FieldElement& c) {
  if (i >= basis_->size()) throw Error(ErrorCode::InconsistentBasis, "coordinate index out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(i, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

Vector CohomologyClass::dense() const {
  Vector v(basis_->size(), field_->zero());
  for (const auto& [i, c] : coords_) v[i] = c;
  return v;
}

CohomologyClass CohomologyClass::from_dense(DualBasisPtr basis, std::span<const FieldElement> v) {
  if (v.size() != basis->size()) throw Error(ErrorCode::InconsistentBasis, "vector length mismatch");
  if (v.empty()) throw Error(ErrorCode::InvalidArgument, "cannot infer the field of an empty vector");
  CohomologyClass c(basis, v.front().field());
  for (std::size_t i = 0; i < v.size(); ++i) c.add(i, v[i]);
  return c;
}

MultiPoly CohomologyClass::to_poly(const Ring& ring) const {
  if (ring->nvars() != static_cast<std::size_t>(basis_->n()) + 1)
    throw Error(ErrorCode::ArityMismatch, "ring does not match the ambient space");
  MultiPoly r(ring);
  for (const auto& [i, c] : coords_) r.add_term(basis_->exponents(i), c);
  return r;
}

bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
  return a.basis_->n() == b.basis_->n() && a.basis_->s() == b.basis_->s() && a.coords_ == b.coords_;
}

CohomologyClass reduce(const MultiPoly& l, const DualBasisPtr& target) {
  if (l.ring()->nvars() != static_cast<std::size_t>(target->n()) + 1)
    throw Error(ErrorCode::ArityMismatch, "polynomial ring does not match the ambient space");
  CohomologyClass out(target, l.ring()->field());
  for (const auto& [e, c] : l.terms()) {
    if (total_degree(e) != -target->s())
      throw Error(ErrorCode::DegreeMismatch, "term of degree " + std::to_string(total_degree(e)) +
                                                 " in a reduction to degree " + std::to_string(-target->s()));
    if (std::any_of(e.begin(), e.end(), [](int x) { return x >= 0; })) continue;
    out.add(*target->index_of_exponents(e), c);
  }
  return out;
}

Vector SemilinearMap::apply(std::span<const FieldElement> v) const {
  Vector twisted(v.begin(), v.end());
  for (auto& a : twisted) a = twist == Twist::p ? a.frobenius() : a.pth_root();
  return matrix * std::span<const FieldElement>(twisted);
}

namespace {

// (P_a, a) o (P_b, b) = (P_a * P_b^(p^{+-a}), a + b)
Matrix compose(const Matrix& left, std::size_t left_steps, const Matrix& right, Twist twist) {
  const int power = static_cast<int>(left_steps % 1000000);
  return left * right.twisted(twist == Twist::p ? power : -power);
}

}  // namespace

Matrix SemilinearMap::iterate(std::size_t times) const {
  Matrix result = Matrix::identity(matrix.field(), dim());
  std::size_t result_steps = 0;
  Matrix base = matrix;
  std::size_t base_steps = 1;
  while (times) {
    if (times & 1) {
      result = compose(result, result_steps, base, twist);
      result_steps += base_steps;
    }
    times >>= 1;
    if (times) {
      base = compose(base, base_steps, base, twist);
      base_steps *= 2;
    }
  }
  return result;
}

SemilinearMap semilinear_matrix(const DualBasisPtr& basis,
                                const std::function<CohomologyClass(std::size_t)>& image_of,
                                Twist twist, std::string label) {
  std::vector<Vector> columns;
  columns.reserve(basis->size());
  Field field;
  for (std::size_t j = 0; j < basis->size(); ++j) {
    CohomologyClass image = image_of(j);
    if (image.basis() != basis && !(image.basis()->n() == basis->n() && image.basis()->s() == basis->s()))
      throw Error(ErrorCode::InconsistentBasis, "image expressed in a different basis");
    field = image.field();
    columns.push_back(image.dense());
  }
  if (!field) throw Error(ErrorCode::InvalidArgument, "empty basis needs an explicit field");
  return {Matrix::from_columns(field, basis->size(), columns), twist, std::move(label)};
}

std::size_t stable_rank(const SemilinearMap& m) {
  const std::size_t g = m.dim();
  if (g == 0) return 0;
  const Matrix pg = m.iterate(g);
  const std::size_t r = rank(pg);
  // The image chain is decreasing and has length <= g, so it is stable by step g.
  const std::size_t next = rank(pg * m.matrix.twisted(m.twist == Twist::p ? static_cast<int>(g % 1000000)
                                                                            : -static_cast<int>(g % 1000000)));
  if (next != r) throw Error(ErrorCode::InvalidArgument, "rank did not stabilize after g iterations");
  return r;
}

std::size_t a_number(const SemilinearMap& m) { return m.dim() - rank(m.matrix); }

}  // namespace pcurve
