#ifndef PCURVE_GF_HPP
#define PCURVE_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace pcurve {

class FieldSpec;
class FieldElement;

// Fields are shared, immutable descriptions; elements keep their field alive.
using Field = std::shared_ptr<const FieldSpec>;

// Dense univariate polynomial over F_p, coefficients low to high.
using UPoly = std::vector<std::uint32_t>;

/// F_{p^k} presented as F_p[t]/(modulus).
///
/// The modulus is monic of degree k and checked for irreducibility at
/// construction. When no modulus is supplied the first irreducible one in
/// the order of the integer sum c_0 + c_1 p + ... + c_{k-1} p^{k-1} is used,
/// so F_4 = F_2[t]/(t^2+t+1) and F_16 = F_2[t]/(t^4+t+1).
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
 public:
  static Field create(std::uint32_t p, unsigned k,
                      std::optional<UPoly> modulus = std::nullopt);
  static Field create(std::uint32_t p, unsigned k, std::string_view modulus);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  const UPoly& modulus() const noexcept { return modulus_; }
  std::string modulus_string() const;

  // Same characteristic and same modulus.
  bool same_as(const FieldSpec& other) const noexcept;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement generator() const;
  FieldElement from_int(std::int64_t value) const;
  FieldElement from_coeffs(std::span<const std::int64_t> coeffs) const;
  // Accepts the printed form, e.g. "t+1", "3*t^2+2", "-1"; powers of t are
  // reduced modulo the modulus.
  FieldElement parse(std::string_view text) const;

  // Every element in power-basis counting order; only for small fields.
  std::vector<FieldElement> elements() const;
  // p^k, or nullopt when it does not fit in 63 bits.
  std::optional<std::uint64_t> order() const noexcept;

 private:
  friend class FieldElement;
  using Coeffs = boost::container::small_vector<std::uint32_t, 8>;

  FieldSpec(std::uint32_t p, unsigned k, UPoly modulus);

  std::uint32_t add_mod(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub_mod(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t inv_mod(std::uint32_t a) const;
  Coeffs multiply(const Coeffs& a, const Coeffs& b) const;
  Coeffs inverse(const Coeffs& a) const;
  Coeffs apply_linear(const std::vector<Coeffs>& rows, const Coeffs& a) const;
  FieldElement make(Coeffs c) const;

  std::uint32_t p_;
  unsigned k_;
  UPoly modulus_;
  // frob_[i] = t^{ip}, root_[i] = t^{i p^{k-1}}; both reduced.
  std::vector<Coeffs> frob_;
  std::vector<Coeffs> root_;
};

/// An element of a FieldSpec. Value type; arithmetic between elements of
/// different fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;

  const Field& field() const noexcept { return field_; }
  std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), c_.size()}; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend bool operator==(const FieldElement& a, const FieldElement& b);

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement scaled(std::int64_t n) const;
  // a^(p^times); times may exceed k.
  FieldElement frobenius(unsigned times = 1) const;
  // The unique b with b^p = a.
  FieldElement pth_root() const;

  std::string to_string() const;

 private:
  friend class FieldSpec;
  FieldElement(Field f, FieldSpec::Coeffs c) : field_(std::move(f)), c_(std::move(c)) {}
  void check_same(const FieldElement& other) const;

  Field field_;
  FieldSpec::Coeffs c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

// Deterministic primality test for p < 2^32 (trial division).
bool is_prime(std::uint64_t p);

// Helpers over F_p[t] shared with the irreducibility check and the tests.
namespace upoly {
UPoly parse(std::uint32_t p, std::string_view text);
std::string to_string(const UPoly& a);
bool is_irreducible(std::uint32_t p, const UPoly& f);
}  // namespace upoly

}  // namespace pcurve

#endif  // PCURVE_GF_HPP
