#include "pcurve/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "pcurve/error.hpp"

namespace pcurve {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring, const ParameterBindings& params)
      : text_(text), ring_(ring), params_(params) {}

  MultiPoly parse() {
    MultiPoly r = expr();
    skip();
    if (pos_ < text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(ring_);
    skip();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = primary();
    if (accept('^')) {
      skip();
      const std::size_t at = pos_;
      const unsigned long long e = integer();
      if (e > 100000) throw SyntaxError(at, "exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long long integer() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError(pos_, "expected integer");
    unsigned long long v = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (pos_ - start > 17) throw SyntaxError(start, "integer literal too large");
      v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
      ++pos_;
    }
    return v;
  }

  MultiPoly primary() {
    skip();
    if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected operand");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const unsigned long long v = integer();
      const auto p = ring_->field()->characteristic();
      return MultiPoly::constant(ring_, ring_->field()->from_int(static_cast<std::int64_t>(v % p)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (auto v = variable_index(name)) return MultiPoly::variable(ring_, *v);
      auto it = params_.find(name);
      if (it == params_.end()) throw Error(ErrorCode::UnboundIdentifier, name);
      if (!it->second.field()->same_as(*ring_->field()))
        throw Error(ErrorCode::FieldMismatch, "parameter " + name + " lives in another field");
      return MultiPoly::constant(ring_, it->second);
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::optional<std::size_t> variable_index(const std::string& name) const {
    const auto& names = ring_->names();
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return i;
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      const std::size_t idx = std::stoul(name.substr(1));
      if (idx < names.size()) return idx;
    }
    return std::nullopt;
  }

  std::string_view text_;
  const Ring& ring_;
  const ParameterBindings& params_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Ring& ring, const ParameterBindings& params,
                     bool require_homogeneous) {
  MultiPoly r = Parser(text, ring, params).parse();
  if (require_homogeneous && !r.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, r.to_string());
  return r;
}

std::pair<std::string, FieldElement> parse_binding(std::string_view text, const Field& field) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw SyntaxError(0, "expected name=value");
  std::string name(text.substr(0, eq));
  while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
  try {
    return {name, field->parse(text.substr(eq + 1))};
  } catch (const SyntaxError& e) {
    throw SyntaxError(eq + 1 + e.position(), "in value of " + name);
  }
}

}  // namespace pcurve
