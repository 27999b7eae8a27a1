#ifndef APOLAR_PARSE_HPP
#define APOLAR_PARSE_HPP

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apolar/poly.hpp"

namespace apolar {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A polynomial whose coefficients depend polynomially on one parameter:
/// coefficients()[k] multiplies param^k.
template <ExactField K>
class ParametricPoly {
 public:
  ParametricPoly(K field, Ring ring, int n_vars, std::vector<Poly<K>> coefficients)
      : field_(std::move(field)), ring_(ring), n_(n_vars), coeffs_(std::move(coefficients)) {}

  const std::vector<Poly<K>>& coefficients() const { return coeffs_; }
  int n_vars() const { return n_; }
  Ring ring() const { return ring_; }
  int parameter_degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Poly<K> specialize(const typename K::value_type& t) const {
    Poly<K> out(field_, ring_, n_);
    auto tk = field_.one();
    for (const auto& c : coeffs_) {
      out += c.scaled(tk);
      tk = field_.mul(tk, t);
    }
    return out;
  }

 private:
  K field_;
  Ring ring_;
  int n_;
  std::vector<Poly<K>> coeffs_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, Ring ring, int n_vars, std::optional<char> parameter)
      : text_(text), ring_(ring), n_(n_vars), parameter_(parameter) {}

  /// (parameter power, monomial) -> rational coefficient
  std::map<std::pair<int, std::vector<int>>, mpq_class> run() {
    skip_ws();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      parse_term(sign);
      first = false;
    }
    return std::move(terms_);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  long long parse_uint(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) throw ParseError(std::string(what) + " too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
    return v;
  }

  mpq_class parse_coefficient() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    mpz_class num(std::string(text_.substr(start, pos_ - start)));
    mpz_class den = 1;
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected denominator", dstart);
      den = mpz_class(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0) throw ParseError("zero denominator", dstart);
    }
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }

  void parse_term(int sign) {
    mpq_class coeff = sign;
    std::vector<int> exps(n_, 0);
    int param_power = 0;
    bool have_factor = false;
    skip_ws();
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff *= parse_coefficient();
      have_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') {
        commit(param_power, exps, coeff);
        return;
      }
      ++pos_;
    }
    while (true) {
      skip_ws();
      if (at_end()) throw ParseError("expected a variable", pos_);
      const std::size_t start = pos_;
      const char c = peek();
      if (parameter_ && c == *parameter_) {
        ++pos_;
        param_power += parse_power();
      } else if (c == 'x' || c == 'a') {
        const Ring want = c == 'x' ? Ring::PolynomialP : Ring::OperatorS;
        if (want != ring_)
          throw ParseError(std::string("variable '") + c + "' does not belong to ring " +
                               ring_name(ring_),
                           start);
        ++pos_;
        const long long idx = parse_uint("variable index");
        if (idx >= n_)
          throw ParseError("variable index " + std::to_string(idx) + " >= n_vars " +
                               std::to_string(n_),
                           start);
        exps[idx] += parse_power();
        if (exps[idx] > 255) throw ParseError("exponent too large", start);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= parse_coefficient();
      } else {
        throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      have_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) throw ParseError("empty term", pos_);
    commit(param_power, exps, coeff);
  }

  int parse_power() {
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      return static_cast<int>(parse_uint("exponent"));
    }
    return 1;
  }

  void commit(int param_power, const std::vector<int>& exps, const mpq_class& c) {
    terms_[{param_power, exps}] += c;
  }

  std::string_view text_;
  Ring ring_;
  int n_;
  std::optional<char> parameter_;
  std::size_t pos_ = 0;
  std::map<std::pair<int, std::vector<int>>, mpq_class> terms_;
};

}  // namespace detail

/// Parses a polynomial in which the letter `parameter` may appear as an
/// extra scalar variable.
template <ExactField K>
ParametricPoly<K> parse_parametric(std::string_view text, const K& field, Ring ring, int n_vars,
                                   char parameter) {
  if (parameter == 'x' || parameter == 'a')
    throw std::invalid_argument("parameter letter clashes with variable names");
  auto raw = detail::PolyParser(text, ring, n_vars, parameter).run();
  int top = 0;
  for (const auto& [key, c] : raw)
    if (c != 0) top = std::max(top, key.first);
  std::vector<Poly<K>> coeffs(top + 1, Poly<K>(field, ring, n_vars));
  for (const auto& [key, c] : raw)
    coeffs[key.first].add_term(Monomial(n_vars, key.second), field.from_rational(c));
  return ParametricPoly<K>(field, ring, n_vars, std::move(coeffs));
}

/// Grammar: terms joined by '+'/'-'; a term is an optional coefficient
/// (integer or p/q) and '*'-separated factors x<i> (ring P) or a<i>
/// (ring S), each with an optional ^<e>. Whitespace is ignored.
template <ExactField K>
Poly<K> parse_poly(std::string_view text, const K& field, Ring ring, int n_vars) {
  auto raw = detail::PolyParser(text, ring, n_vars, std::nullopt).run();
  Poly<K> p(field, ring, n_vars);
  for (const auto& [key, c] : raw) p.add_term(Monomial(n_vars, key.second), field.from_rational(c));
  return p;
}

namespace detail {

template <ExactField K>
std::pair<bool, std::string> coefficient_text(const K& k, const typename K::value_type& c) {
  if constexpr (is_rational_field_v<K>) {
    if (sgn(c) < 0) return {true, mpq_class(-c).get_str()};
    return {false, c.get_str()};
  } else {
    return {false, k.to_string(c)};
  }
}

inline std::string monomial_text(const Monomial& m, Ring ring) {
  const char letter = ring == Ring::PolynomialP ? 'x' : 'a';
  std::string out;
  for (int i = 0; i < m.n_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += letter;
    out += std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

}  // namespace detail

/// Inverse of parse_poly on canonical polynomials; terms in descending
/// graded-lex order.
template <ExactField K>
std::string format_poly(const Poly<K>& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    auto [negative, magnitude] = detail::coefficient_text(p.field(), c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const std::string mono = detail::monomial_text(m, p.ring());
    if (mono.empty()) {
      out += magnitude;
    } else if (magnitude == "1") {
      out += mono;
    } else {
      out += magnitude + "*" + mono;
    }
  }
  return out;
}

}  // namespace apolar

#endif  // APOLAR_PARSE_HPP
