#include "pcurve/poly.hpp"

#include <numeric>
#include <algorithm>
#include <sstream>

#include "pcurve/error.hpp"

namespace pcurve {

int total_degree(const ExponentVector& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexGreater::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

Ring PolyRing::create(Field field, std::vector<std::string> names) {
  if (!field) throw Error(ErrorCode::InvalidArgument, "ring needs a field");
  return Ring(new PolyRing(std::move(field), std::move(names)));
}

Ring PolyRing::create(Field field, std::size_t nvars) {
  std::vector<std::string> names;
  if (nvars == 3) {
    names = {"x", "y", "z"};
  } else {
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
  }
  return create(std::move(field), std::move(names));
}

bool PolyRing::same_as(const PolyRing& other) const noexcept {
  return this == &other || (names_.size() == other.names_.size() && field_->same_as(*other.field_));
}

MultiPoly MultiPoly::constant(Ring ring, const FieldElement& c) {
  const std::size_t n = ring->nvars();
  return monomial(std::move(ring), ExponentVector(n, 0), c);
}

MultiPoly MultiPoly::monomial(Ring ring, ExponentVector e, const FieldElement& c) {
  if (e.size() != ring->nvars()) throw Error(ErrorCode::ArityMismatch, "exponent vector length");
  MultiPoly r(std::move(ring));
  r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::monomial(Ring ring, ExponentVector e) {
  const FieldElement one = ring->field()->one();
  return monomial(std::move(ring), std::move(e), one);
}

MultiPoly MultiPoly::variable(Ring ring, std::size_t index) {
  ExponentVector e(ring->nvars(), 0);
  if (index >= e.size()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  e[index] = 1;
  return monomial(std::move(ring), std::move(e));
}

FieldElement MultiPoly::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ring_->field()->zero() : it->second;
}

void MultiPoly::add_term(const ExponentVector& e, const FieldElement& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_ring(const MultiPoly& other) const {
  if (!ring_ || !other.ring_ || !ring_->same_as(*other.ring_))
    throw Error(ErrorCode::RingMismatch, "operands belong to different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  check_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  check_ring(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_ring(b);
  MultiPoly r(a.ring_);
  ExponentVector e(a.ring_->nvars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (!a.ring_ || !b.ring_) return a.ring_ == b.ring_;
  return a.ring_->same_as(*b.ring_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::scaled(const FieldElement& c) const {
  MultiPoly r(ring_);
  if (c.is_zero()) return r;
  for (const auto& [e, a] : terms_) r.terms_.emplace(e, a * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(ring_, ring_->field()->one());
  MultiPoly base = *this;
  unsigned rest = e;
  while (rest) {
    if (rest & 1) result = result * base;
    rest >>= 1;
    if (rest) base = base * base;
  }
  if (e == ring_->field()->characteristic() && result != frobenius())
    throw Error(ErrorCode::InvalidArgument, "p-th power disagrees with the Frobenius map");
  return result;
}

MultiPoly MultiPoly::frobenius() const {
  const int p = static_cast<int>(ring_->field()->characteristic());
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    ExponentVector ep = e;
    for (auto& x : ep) x *= p;
    r.terms_.emplace(std::move(ep), c.frobenius());
  }
  return r;
}

bool MultiPoly::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (total_degree(e) != d) return false;
  return true;
}

int MultiPoly::degree() const noexcept {
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

bool MultiPoly::is_polynomial() const noexcept {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x < 0) return false;
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool constant = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    const bool unit = c.is_one();
    if (!unit || constant) {
      const std::string cs = c.to_string();
      const bool compound = cs.find('+') != std::string::npos;
      os << (compound && !constant ? "(" + cs + ")" : cs);
    }
    bool need_star = !unit || constant;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      need_star = true;
      os << ring_->names()[i];
      if (e[i] != 1) os << '^' << e[i];
    }
  }
  return os.str();
}

MultiPoly partial_derivative(const MultiPoly& a, std::size_t var, unsigned order) {
  if (var >= a.ring()->nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  const Field& field = a.ring()->field();
  const std::int64_t p = field->characteristic();
  MultiPoly r(a.ring());
  for (const auto& [e, c] : a.terms()) {
    // e (e-1) ... (e-order+1) mod p
    std::int64_t factor = 1;
    for (unsigned j = 0; j < order && factor != 0; ++j) {
      std::int64_t f = (static_cast<std::int64_t>(e[var]) - j) % p;
      if (f < 0) f += p;
      factor = factor * f % p;
    }
    if (factor == 0) continue;
    ExponentVector d = e;
    d[var] -= static_cast<int>(order);
    r.add_term(d, c.scaled(factor));
  }
  return r;
}

MultiPoly pth_root(const MultiPoly& a) {
  const int p = static_cast<int>(a.ring()->field()->characteristic());
  MultiPoly r(a.ring());
  for (const auto& [e, c] : a.terms()) {
    ExponentVector d = e;
    for (auto& x : d) {
      if (x % p != 0)
        throw Error(ErrorCode::NotAPthPower, "term " + MultiPoly::monomial(a.ring(), e, c).to_string() +
                                                 " has an exponent not divisible by p");
      x /= p;
    }
    r.add_term(d, c.pth_root());
  }
  return r;
}

MultiPoly dehomogenize(const MultiPoly& a, std::size_t var) {
  if (var >= a.ring()->nvars()) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
  if (!a.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, a.to_string());
  MultiPoly r(a.ring());
  for (const auto& [e, c] : a.terms()) {
    ExponentVector d = e;
    d[var] = 0;
    r.add_term(d, c);
  }
  return r;
}

FieldElement evaluate(const MultiPoly& a, std::span<const FieldElement> point) {
  if (point.size() != a.ring()->nvars())
    throw Error(ErrorCode::ArityMismatch, "point has " + std::to_string(point.size()) +
                                              " coordinates, ring has " + std::to_string(a.ring()->nvars()));
  FieldElement acc = a.ring()->field()->zero();
  for (const auto& [e, c] : a.terms()) {
    FieldElement term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] >= 0) {
        term *= point[i].pow(static_cast<std::uint64_t>(e[i]));
      } else {
        term *= point[i].inverse().pow(static_cast<std::uint64_t>(-e[i]));
      }
    }
    acc += term;
  }
  return acc;
}

}  // namespace pcurve
