#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "finite_field.hpp"
#include "function_field.hpp"
#include "skew_poly.hpp"
#include "upoly.hpp"

namespace skewlab {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

namespace detail {

inline bool symbol_allowed(const FiniteField&, char c) { return c == 'w' || c == 'x'; }
inline bool symbol_allowed(const FunctionField&, char c) { return c == 't' || c == 'a' || c == 'x'; }

inline FiniteField::elem symbol_value(const FiniteField& L, char) { return L.gen(); }
inline FunctionField::elem symbol_value(const FunctionField& L, char c) { return c == 't' ? L.t() : L.alpha(); }

// Recursive-descent evaluation in L[x; sigma]:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | symbol | '(' expr ')'
// Division is allowed only between constants.
template <class Field>
class ExprParser {
 public:
  using poly = SkewPoly<Field>;

  ExprParser(const Field& L, std::string_view text) : L_(L), s_(text) {}

  poly parse() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "empty expression");
    poly v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  poly constant(const typename Field::elem& c) const { return poly::constant(L_, c); }
  static bool is_constant(const poly& p) { return p.length() <= 1; }

  poly expr() {
    poly v = term();
    while (true) {
      if (accept('+'))
        v = v + term();
      else if (accept('-'))
        v = v - term();
      else
        return v;
    }
  }
  poly term() {
    poly v = unary();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        poly d = unary();
        if (!is_constant(v) || !is_constant(d)) throw ParseError(at, "division requires constant operands");
        if (d.is_zero()) throw ParseError(at, "division by zero");
        v = constant(L_.div(v.coeff(0), d.coeff(0)));
      } else {
        return v;
      }
    }
  }
  poly unary() {
    if (accept('-')) return -unary();
    return power();
  }
  poly power() {
    poly base = atom();
    skip();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool negative = accept('-');
    skip();
    const long long e = integer();
    if (negative) {
      if (!is_constant(base) || base.is_zero()) throw ParseError(at, "negative exponent needs a nonzero constant");
      return constant(L_.pow(base.coeff(0), -e));
    }
    if (is_constant(base)) return constant(L_.pow(base.coeff(0), e));
    poly r = constant(L_.one());
    for (long long i = 0; i < e; ++i) r = r * base;
    return r;
  }
  long long integer() {
    skip();
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 1'000'000'000) throw ParseError(start, "integer too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "expected an integer");
    return v;
  }
  poly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      poly v = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(L_.from_int(integer()));
    if (std::isalpha(static_cast<unsigned char>(c))) {
      if (!symbol_allowed(L_, c) || (pos_ + 1 < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_ + 1]))))
        throw ParseError(pos_, std::string("unknown symbol '") + c + "'");
      ++pos_;
      if (c == 'x') return poly::x_power(L_, 1);
      return constant(symbol_value(L_, c));
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  const Field& L_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class Field>
SkewPoly<Field> parse_skew(const Field& L, std::string_view text) {
  return detail::ExprParser<Field>(L, text).parse();
}

template <class Field>
typename Field::elem parse_element(const Field& L, std::string_view text) {
  const auto p = parse_skew(L, text);
  if (p.length() > 1) throw ParseError(0, "expected a field element, found a polynomial in x");
  return p.coeff(0);
}

// Element from a JSON number or string literal.
template <class Field>
typename Field::elem element_from_json(const Field& L, const nlohmann::json& j) {
  if (j.is_number_integer()) return L.from_int(j.get<long long>());
  if (j.is_string()) return parse_element(L, j.get<std::string>());
  throw std::invalid_argument("field element must be an integer or a string");
}

// Ascending coefficient list of a polynomial over the fixed field.
template <class Field>
upoly::poly<Field> central_from_json(const Field& L, const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("F must be a non-empty array of coefficients");
  upoly::poly<Field> out;
  for (const auto& c : j) out.push_back(element_from_json(L, c));
  upoly::trim(L, out);
  for (const auto& c : out)
    if (!L.in_base(c)) throw std::invalid_argument("F must have coefficients in the fixed field");
  return out;
}

struct FieldSpec {
  std::string kind;  // "finite" or "funcfield"
  unsigned p = 0, e = 1, n = 1, sigma_exp = 1, r = 0;
  std::vector<std::uint32_t> modulus;

  std::string describe() const {
    if (kind == "funcfield") return "funcfield:r=" + std::to_string(r);
    std::string s = "finite:p=" + std::to_string(p) + ",e=" + std::to_string(e) + ",n=" + std::to_string(n);
    if (sigma_exp != 1) s += ",sigma_exp=" + std::to_string(sigma_exp);
    return s;
  }
};

namespace detail {

inline unsigned parse_unsigned(const std::string& v, const std::string& key) {
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("field option '" + key + "' needs a non-negative integer");
  return static_cast<unsigned>(std::stoul(v));
}

}  // namespace detail

inline FieldSpec parse_field_spec(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) throw std::invalid_argument("field spec needs a 'kind'");
  FieldSpec f;
  f.kind = j.at("kind").get<std::string>();
  if (f.kind == "funcfield") {
    f.r = j.at("r").get<unsigned>();
  } else if (f.kind == "finite") {
    f.p = j.at("p").get<unsigned>();
    f.e = j.value("e", 1u);
    f.n = j.at("n").get<unsigned>();
    f.sigma_exp = j.value("sigma_exp", 1u);
    if (j.contains("modulus")) f.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  } else {
    throw std::invalid_argument("unknown field kind '" + f.kind + "'");
  }
  return f;
}

// "finite:p=3,e=1,n=4[,sigma_exp=1]", "funcfield:r=3" or a JSON object.
inline FieldSpec parse_field_spec(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') return parse_field_spec(nlohmann::json::parse(text));
  const auto colon = text.find(':');
  FieldSpec f;
  f.kind = text.substr(0, colon);
  if (f.kind != "finite" && f.kind != "funcfield") throw std::invalid_argument("unknown field kind '" + f.kind + "'");
  bool have_p = false, have_n = false, have_r = false;
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      const std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      start = comma == std::string::npos ? rest.size() + 1 : comma + 1;
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("field option '" + item + "' needs key=value");
      const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
      const unsigned v = detail::parse_unsigned(val, key);
      if (f.kind == "funcfield" && key == "r") {
        f.r = v;
        have_r = true;
      } else if (f.kind == "finite" && key == "p") {
        f.p = v;
        have_p = true;
      } else if (f.kind == "finite" && key == "e") {
        f.e = v;
      } else if (f.kind == "finite" && key == "n") {
        f.n = v;
        have_n = true;
      } else if (f.kind == "finite" && (key == "sigma_exp" || key == "j")) {
        f.sigma_exp = v;
      } else {
        throw std::invalid_argument("unknown field option '" + key + "'");
      }
    }
  }
  if (f.kind == "funcfield" && !have_r) throw std::invalid_argument("funcfield spec needs r");
  if (f.kind == "finite" && (!have_p || !have_n)) throw std::invalid_argument("finite field spec needs p and n");
  return f;
}

inline std::unique_ptr<FiniteField> make_finite_field(const FieldSpec& f) {
  if (!is_prime(f.p)) throw std::invalid_argument("p must be prime");
  return std::make_unique<FiniteField>(f.p, f.e, f.n, f.sigma_exp, f.modulus);
}

inline std::unique_ptr<FunctionField> make_function_field(const FieldSpec& f) {
  return std::make_unique<FunctionField>(f.r);
}

}  // namespace skewlab
