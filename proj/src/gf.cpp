#include "pcurve/gf.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "pcurve/error.hpp"

namespace pcurve {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NotAPthPower: return "NotAPthPower";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InconsistentBasis: return "InconsistentBasis";
    case ErrorCode::ZeroPartialFy: return "ZeroPartialFy";
    case ErrorCode::BasisEscape: return "BasisEscape";
    case ErrorCode::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorCode::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorCode::BasisVerificationFailed: return "BasisVerificationFailed";
    case ErrorCode::ImageEscapesSpan: return "ImageEscapesSpan";
    case ErrorCode::InconsistentInvariants: return "InconsistentInvariants";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnboundIdentifier: return "UnboundIdentifier";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

namespace {

std::uint32_t pmul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t pinv(std::uint32_t a, std::uint32_t p) {
  // a^(p-2)
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce_signed(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  trim(r);
  return r;
}

// Remainder of a modulo f (f nonzero).
UPoly umod(UPoly a, const UPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = pinv(f.back(), p);
  while (a.size() > df) {
    const std::size_t shift = a.size() - 1 - df;
    const std::uint32_t q = pmul(a.back(), lead_inv, p);
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - pmul(q, f[i], p)) % p);
    trim(a);
  }
  return a;
}

UPoly ugcd(UPoly a, UPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = umod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t inv = pinv(a.back(), p);
    for (auto& c : a) c = pmul(c, inv, p);
  }
  return a;
}

UPoly upowmod(UPoly base, std::uint64_t e, const UPoly& f, std::uint32_t p) {
  UPoly result{1};
  base = umod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = umod(umul(result, base, p), f, p);
    e >>= 1;
    if (e) base = umod(umul(base, base, p), f, p);
  }
  return result;
}

struct Term {
  std::uint64_t exponent;
  std::int64_t coeff;
};

// Grammar: [sign] term (sign term)*, term := INT | INT '*' mono | mono,
// mono := 't' ['^' INT]. Whitespace is ignored.
std::vector<Term> parse_terms(std::string_view text) {
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> std::uint64_t {
    skip();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw SyntaxError(i, "expected integer");
    std::uint64_t v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10)
        throw SyntaxError(i, "integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(text[i] - '0');
      ++i;
    }
    return v;
  };
  auto read_mono = [&]() -> std::uint64_t {
    skip();
    if (i >= text.size() || text[i] != 't') throw SyntaxError(i, "expected 't'");
    ++i;
    skip();
    if (i < text.size() && text[i] == '^') {
      ++i;
      return read_int();
    }
    return 1;
  };

  skip();
  if (i >= text.size()) throw SyntaxError(i, "empty field element");
  bool first = true;
  while (true) {
    skip();
    std::int64_t sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw SyntaxError(i, "expected '+' or '-'");
    }
    first = false;
    skip();
    if (i >= text.size()) throw SyntaxError(i, "expected term");
    Term term{0, sign};
    if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      const std::uint64_t c = read_int();
      term.coeff = sign * static_cast<std::int64_t>(c % (std::uint64_t{1} << 62));
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        term.exponent = read_mono();
      }
    } else {
      term.exponent = read_mono();
    }
    terms.push_back(term);
    skip();
    if (i >= text.size()) break;
  }
  return terms;
}

}  // namespace

namespace upoly {

UPoly parse(std::uint32_t p, std::string_view text) {
  UPoly r;
  for (const Term& term : parse_terms(text)) {
    if (term.exponent > 1u << 20) throw SyntaxError(0, "exponent too large for a modulus");
    if (r.size() <= term.exponent) r.resize(term.exponent + 1, 0);
    r[term.exponent] = (r[term.exponent] + reduce_signed(term.coeff, p)) % p;
  }
  trim(r);
  return r;
}

std::string to_string(const UPoly& a) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (!a[i]) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << a[i];
      continue;
    }
    if (a[i] != 1) os << a[i] << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

bool is_irreducible(std::uint32_t p, const UPoly& f) {
  const std::size_t k = f.size() - 1;
  if (f.empty() || k == 0) return false;
  if (k == 1) return true;
  // f has no factor of degree d iff gcd(t^{p^d} - t, f) = 1; d <= k/2 suffices.
  UPoly h{0, 1};
  for (std::size_t d = 1; d <= k / 2; ++d) {
    h = upowmod(h, p, f, p);
    UPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (ugcd(f, diff, p).size() != 1) return false;
  }
  return true;
}

}  // namespace upoly

// ---------------------------------------------------------------------------

Field FieldSpec::create(std::uint32_t p, unsigned k, std::optional<UPoly> modulus) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  if (k == 0) throw Error(ErrorCode::DegreeMismatch, "extension degree must be >= 1");

  UPoly f;
  if (modulus) {
    f = *modulus;
    for (auto& c : f) c %= p;
    trim(f);
    if (f.size() != k + 1)
      throw Error(ErrorCode::DegreeMismatch, "modulus " + upoly::to_string(f) +
                                                 " does not have degree " + std::to_string(k));
    const std::uint32_t inv = pinv(f.back(), p);
    for (auto& c : f) c = pmul(c, inv, p);
    if (!upoly::is_irreducible(p, f))
      throw Error(ErrorCode::ReducibleModulus,
                  upoly::to_string(f) + " is reducible over F_" + std::to_string(p));
  } else {
    // Walk monic polynomials by increasing c_0 + c_1 p + ... until irreducible.
    f.assign(k + 1, 0);
    f[k] = 1;
    while (!upoly::is_irreducible(p, f)) {
      std::size_t i = 0;
      while (i < k && ++f[i] == p) f[i++] = 0;
      if (i == k) throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
    }
  }
  return Field(new FieldSpec(p, k, std::move(f)));
}

Field FieldSpec::create(std::uint32_t p, unsigned k, std::string_view modulus) {
  if (!is_prime(p) || p >= (1u << 31))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
  return create(p, k, upoly::parse(p, modulus));
}

FieldSpec::FieldSpec(std::uint32_t p, unsigned k, UPoly modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  // t^{ip} for i < k, then the inverse map obtained by iterating k-1 times.
  const UPoly t{0, 1};
  const UPoly tp = upowmod(t, p_, modulus_, p_);
  UPoly power{1};
  frob_.resize(k_);
  for (unsigned i = 0; i < k_; ++i) {
    Coeffs row(k_, 0);
    std::copy(power.begin(), power.end(), row.begin());
    frob_[i] = row;
    power = umod(umul(power, tp, p_), modulus_, p_);
  }
  root_.resize(k_);
  for (unsigned i = 0; i < k_; ++i) {
    Coeffs v(k_, 0);
    v[i] = 1;
    for (unsigned j = 0; j + 1 < k_; ++j) v = apply_linear(frob_, v);
    root_[i] = v;
  }
}

std::string FieldSpec::modulus_string() const { return upoly::to_string(modulus_); }

bool FieldSpec::same_as(const FieldSpec& other) const noexcept {
  return this == &other || (p_ == other.p_ && modulus_ == other.modulus_);
}

std::optional<std::uint64_t> FieldSpec::order() const noexcept {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k_; ++i) {
    if (q > (std::uint64_t{1} << 62) / p_) return std::nullopt;
    q *= p_;
  }
  return q;
}

FieldElement FieldSpec::make(Coeffs c) const { return FieldElement(shared_from_this(), std::move(c)); }

FieldElement FieldSpec::zero() const { return make(Coeffs(k_, 0)); }

FieldElement FieldSpec::one() const {
  Coeffs c(k_, 0);
  c[0] = 1 % p_;
  return make(std::move(c));
}

FieldElement FieldSpec::generator() const {
  const UPoly r = umod(UPoly{0, 1}, modulus_, p_);
  Coeffs c(k_, 0);
  std::copy(r.begin(), r.end(), c.begin());
  return make(std::move(c));
}

FieldElement FieldSpec::from_int(std::int64_t value) const {
  Coeffs c(k_, 0);
  c[0] = reduce_signed(value, p_);
  return make(std::move(c));
}

FieldElement FieldSpec::from_coeffs(std::span<const std::int64_t> coeffs) const {
  UPoly a(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) a[i] = reduce_signed(coeffs[i], p_);
  a = umod(std::move(a), modulus_, p_);
  Coeffs c(k_, 0);
  std::copy(a.begin(), a.end(), c.begin());
  return make(std::move(c));
}

FieldElement FieldSpec::parse(std::string_view text) const {
  FieldElement acc = zero();
  const FieldElement t = generator();
  for (const Term& term : parse_terms(text)) acc += t.pow(term.exponent).scaled(term.coeff);
  return acc;
}

std::vector<FieldElement> FieldSpec::elements() const {
  const auto q = order();
  if (!q || *q > (1u << 20))
    throw Error(ErrorCode::InvalidArgument, "field too large to enumerate");
  std::vector<FieldElement> out;
  out.reserve(*q);
  Coeffs c(k_, 0);
  for (std::uint64_t n = 0; n < *q; ++n) {
    out.push_back(make(c));
    std::size_t i = 0;
    while (i < k_ && ++c[i] == p_) c[i++] = 0;
  }
  return out;
}

std::uint32_t FieldSpec::add_mod(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint32_t s = a + b;  // p < 2^31, no overflow
  return s >= p_ ? s - p_ : s;
}

std::uint32_t FieldSpec::sub_mod(std::uint32_t a, std::uint32_t b) const noexcept {
  return a >= b ? a - b : a + p_ - b;
}

std::uint32_t FieldSpec::mul_mod(std::uint32_t a, std::uint32_t b) const noexcept {
  return pmul(a, b, p_);
}

std::uint32_t FieldSpec::inv_mod(std::uint32_t a) const { return pinv(a, p_); }

FieldSpec::Coeffs FieldSpec::multiply(const Coeffs& a, const Coeffs& b) const {
  if (k_ == 1) return Coeffs{mul_mod(a[0], b[0])};
  boost::container::small_vector<std::uint64_t, 16> prod(2 * k_ - 1, 0);
  // Products are < p^2 < 2^62; reduce after each accumulation to stay in range.
  for (unsigned i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
  }
  for (unsigned d = 2 * k_ - 2; d >= k_; --d) {
    const std::uint64_t q = prod[d];
    if (!q) continue;
    prod[d] = 0;
    // t^k = -(m_0 + ... + m_{k-1} t^{k-1})
    for (unsigned i = 0; i < k_; ++i)
      prod[d - k_ + i] = (prod[d - k_ + i] + (p_ - modulus_[i]) % p_ * q) % p_;
  }
  Coeffs r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
  return r;
}

FieldSpec::Coeffs FieldSpec::inverse(const Coeffs& a) const {
  if (std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; }))
    throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (k_ == 1) return Coeffs{inv_mod(a[0])};
  // Extended Euclid: maintain s with s*a = r (mod modulus).
  UPoly r0 = modulus_, r1(a.begin(), a.end());
  trim(r1);
  UPoly s0{}, s1{1};
  while (r1.size() > 1) {
    // q, r = divmod(r0, r1)
    UPoly rem = r0;
    UPoly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, 0);
    const std::uint32_t lead_inv = inv_mod(r1.back());
    while (rem.size() >= r1.size()) {
      const std::size_t shift = rem.size() - r1.size();
      const std::uint32_t c = mul_mod(rem.back(), lead_inv);
      q[shift] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] = sub_mod(rem[shift + i], mul_mod(c, r1[i]));
      trim(rem);
    }
    UPoly qs = umul(q, s1, p_);
    UPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = sub_mod(s2[i], qs[i]);
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since the modulus is irreducible.
  const std::uint32_t c = inv_mod(r1[0]);
  s1 = umod(std::move(s1), modulus_, p_);
  Coeffs out(k_, 0);
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = mul_mod(s1[i], c);
  return out;
}

FieldSpec::Coeffs FieldSpec::apply_linear(const std::vector<Coeffs>& rows, const Coeffs& a) const {
  Coeffs r(k_, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < k_; ++j) r[j] = add_mod(r[j], mul_mod(a[i], rows[i][j]));
  }
  return r;
}

// ---------------------------------------------------------------------------

void FieldElement::check_same(const FieldElement& other) const {
  if (!field_ || !other.field_ || !field_->same_as(*other.field_))
    throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

bool FieldElement::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(), [](std::uint32_t c) { return c == 0; });
}

bool FieldElement::is_one() const noexcept {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](std::uint32_t c) { return c == 0; });
}

FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  for (auto& c : r.c_) c = field_->sub_mod(0, c);
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  check_same(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_->add_mod(c_[i], rhs.c_[i]);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  check_same(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = field_->sub_mod(c_[i], rhs.c_[i]);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  check_same(rhs);
  c_ = field_->multiply(c_, rhs.c_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
  check_same(rhs);
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  c_ = field_->multiply(c_, field_->inverse(rhs.c_));
  return *this;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  if (!a.field_ || !b.field_) return a.field_ == b.field_ && a.c_ == b.c_;
  return a.field_->same_as(*b.field_) && a.c_ == b.c_;
}

FieldElement FieldElement::inverse() const {
  if (!field_) throw Error(ErrorCode::FieldMismatch, "detached element");
  return FieldElement(field_, field_->inverse(c_));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_->one();
  FieldElement base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

FieldElement FieldElement::scaled(std::int64_t n) const {
  const std::uint32_t s = reduce_signed(n, field_->p_);
  FieldElement r = *this;
  for (auto& c : r.c_) c = field_->mul_mod(c, s);
  return r;
}

FieldElement FieldElement::frobenius(unsigned times) const {
  times %= field_->k_;
  FieldElement r = *this;
  for (unsigned i = 0; i < times; ++i) r.c_ = field_->apply_linear(field_->frob_, r.c_);
  return r;
}

FieldElement FieldElement::pth_root() const {
  return FieldElement(field_, field_->apply_linear(field_->root_, c_));
}

std::string FieldElement::to_string() const {
  if (!field_) return "<detached>";
  return upoly::to_string(UPoly(c_.begin(), c_.end()));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

}  // namespace pcurve
