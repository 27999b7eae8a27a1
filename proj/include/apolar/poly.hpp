#ifndef APOLAR_POLY_HPP
#define APOLAR_POLY_HPP

#include <limits>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "apolar/field.hpp"
#include "apolar/monomial.hpp"

namespace apolar {

/// Which side of the apolarity pairing a polynomial lives on: the operator
/// ring S (variables a0, a1, ...) or the polynomial side P (x0, x1, ...).
enum class Ring { OperatorS, PolynomialP };

inline const char* ring_name(Ring r) { return r == Ring::OperatorS ? "S" : "P"; }
inline Ring dual_ring(Ring r) {
  return r == Ring::OperatorS ? Ring::PolynomialP : Ring::OperatorS;
}

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Degree reported for the zero polynomial.
inline constexpr int kDegreeOfZero = std::numeric_limits<int>::min();

template <ExactField K>
class Poly {
 public:
  using Field = K;
  using Scalar = typename K::value_type;
  using TermMap = std::map<Monomial, Scalar, GrlexLess>;

  Poly(K field, Ring ring, int n_vars) : field_(std::move(field)), ring_(ring), n_(n_vars) {
    if (n_vars < 1 || n_vars > kMaxVars) throw std::invalid_argument("bad number of variables");
  }

  static Poly constant(K field, Ring ring, int n_vars, const Scalar& c) {
    Poly p(std::move(field), ring, n_vars);
    p.add_term(Monomial(n_vars), c);
    return p;
  }
  static Poly term(K field, Ring ring, const Monomial& m, const Scalar& c) {
    Poly p(std::move(field), ring, m.n_vars());
    p.add_term(m, c);
    return p;
  }
  static Poly variable(K field, Ring ring, int n_vars, int i) {
    Poly p(field, ring, n_vars);
    p.add_term(Monomial::variable(n_vars, i), field.one());
    return p;
  }

  const K& field() const { return field_; }
  Ring ring() const { return ring_; }
  int n_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  int degree() const { return terms_.empty() ? kDegreeOfZero : terms_.rbegin()->first.degree(); }
  int min_degree() const { return terms_.empty() ? kDegreeOfZero : terms_.begin()->first.degree(); }
  bool is_homogeneous() const { return terms_.empty() || degree() == min_degree(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  /// Adds c*m, dropping the entry if it cancels.
  void add_term(const Monomial& m, const Scalar& c) {
    if (m.n_vars() != n_) throw std::invalid_argument("monomial has wrong number of variables");
    if (field_.is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const { return scaled(field_.neg(field_.one())); }

  Poly scaled(const Scalar& c) const {
    Poly r(field_, ring_, n_);
    if (field_.is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, field_.mul(v, c));
    return r;
  }

  /// Terms of exactly degree d.
  Poly homogeneous_part(int d) const {
    Poly r(field_, ring_, n_);
    for (const auto& [m, c] : terms_)
      if (m.degree() == d) r.terms_.emplace_hint(r.terms_.end(), m, c);
    return r;
  }

  /// Same polynomial, reinterpreted on the other side of the pairing.
  Poly with_ring(Ring r) const {
    Poly p = *this;
    p.ring_ = r;
    return p;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_ || a.n_ != b.n_ || a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [m, c] : a.terms_) {
      if (!(m == it->first) || !a.field_.equal(c, it->second)) return false;
      ++it;
    }
    return true;
  }

  void check_compatible(const Poly& o) const {
    if (o.n_ != n_) throw std::invalid_argument("polynomials have different numbers of variables");
    if (o.ring_ != ring_) throw RingMismatch("polynomials live in different rings");
    if (!(o.field_ == field_)) throw FieldError("polynomials live over different fields");
  }

 private:
  K field_;
  Ring ring_;
  int n_;
  TermMap terms_;
};

/// A homogeneous polynomial with a known degree (meaningful even when zero).
template <ExactField K>
class Form {
 public:
  Form(Poly<K> p, int degree) : poly_(std::move(p)), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("form degree must be nonnegative");
    for (const auto& [m, c] : poly_.terms())
      if (m.degree() != degree)
        throw std::invalid_argument("polynomial is not homogeneous of degree " +
                                    std::to_string(degree));
  }
  /// Requires a nonzero homogeneous polynomial.
  explicit Form(Poly<K> p) : Form(p, infer_degree(p)) {}

  const Poly<K>& poly() const { return poly_; }
  operator const Poly<K>&() const { return poly_; }
  int degree() const { return degree_; }
  int n_vars() const { return poly_.n_vars(); }
  Ring ring() const { return poly_.ring(); }
  const K& field() const { return poly_.field(); }
  bool is_zero() const { return poly_.is_zero(); }

  friend bool operator==(const Form& a, const Form& b) {
    return a.degree_ == b.degree_ && a.poly_ == b.poly_;
  }

 private:
  static int infer_degree(const Poly<K>& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot infer the degree of the zero form");
    if (!p.is_homogeneous()) throw std::invalid_argument("polynomial is not homogeneous");
    return p.degree();
  }

  Poly<K> poly_;
  int degree_;
};

/// Contraction: a^a o x^b = x^(b-a) when b >= a componentwise, else 0,
/// extended bilinearly. No factorials.
template <ExactField K>
Poly<K> contract(const Poly<K>& sigma, const Poly<K>& f) {
  if (sigma.ring() != Ring::OperatorS || f.ring() != Ring::PolynomialP)
    throw RingMismatch("contract expects an operator in S and a polynomial in P");
  if (sigma.n_vars() != f.n_vars()) throw std::invalid_argument("variable count mismatch");
  const K& k = f.field();
  Poly<K> out(k, Ring::PolynomialP, f.n_vars());
  for (const auto& [a, ca] : sigma.terms())
    for (const auto& [b, cb] : f.terms())
      if (a.divides(b)) out.add_term(b / a, k.mul(ca, cb));
  return out;
}

/// Pairing <sigma, f>: constant term of sigma o f. Monomials pair to 1
/// exactly when equal.
template <ExactField K>
typename K::value_type pairing(const Poly<K>& sigma, const Poly<K>& f) {
  return contract(sigma, f).coefficient(Monomial(f.n_vars()));
}

/// Divided-power product: x^a * x^b = prod_i C(a_i + b_i, a_i) x^(a+b).
template <ExactField K>
Poly<K> dp_mul(const Poly<K>& f, const Poly<K>& g) {
  if (f.ring() != Ring::PolynomialP || g.ring() != Ring::PolynomialP)
    throw RingMismatch("dp_mul expects two polynomials in P");
  f.check_compatible(g);
  const K& k = f.field();
  Poly<K> out(k, Ring::PolynomialP, f.n_vars());
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) {
      auto c = k.mul(ca, cb);
      for (int i = 0; i < f.n_vars(); ++i)
        if (a[i] > 0 && b[i] > 0) c = k.mul(c, binomial(k, a[i] + b[i], a[i]));
      out.add_term(a * b, c);
    }
  return out;
}

/// Ordinary commutative product in S.
template <ExactField K>
Poly<K> mul_s(const Poly<K>& p, const Poly<K>& q) {
  if (p.ring() != Ring::OperatorS || q.ring() != Ring::OperatorS)
    throw RingMismatch("mul_s expects two operators in S");
  p.check_compatible(q);
  const K& k = p.field();
  Poly<K> out(k, Ring::OperatorS, p.n_vars());
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) out.add_term(a * b, k.mul(ca, cb));
  return out;
}

/// sum_{|a| = 3} c^a x^a. Its annihilator is the ideal of the point [c]:
/// sigma o waring_cube(c) = sigma(c) times the lower-degree analogue.
template <ExactField K>
Form<K> waring_cube(const K& k, std::span<const typename K::value_type> c) {
  const int n = static_cast<int>(c.size());
  bool all_zero = true;
  for (const auto& v : c) all_zero = all_zero && k.is_zero(v);
  if (all_zero) throw std::invalid_argument("waring_cube of the zero vector");
  Poly<K> f(k, Ring::PolynomialP, n);
  for (const auto& m : monomial_basis(n, 3).monomials()) {
    auto coeff = k.one();
    for (int i = 0; i < n; ++i) coeff = k.mul(coeff, power(k, c[i], m[i]));
    f.add_term(m, coeff);
  }
  return Form<K>(std::move(f), 3);
}

/// Substitutes a_i -> a_i + w_i in an operator.
template <ExactField K>
Poly<K> substitute_shift(const Poly<K>& sigma, std::span<const typename K::value_type> w) {
  if (static_cast<int>(w.size()) != sigma.n_vars())
    throw std::invalid_argument("shift vector has wrong length");
  const K& k = sigma.field();
  const int n = sigma.n_vars();
  Poly<K> out(k, sigma.ring(), n);
  for (const auto& [m, c] : sigma.terms()) {
    Poly<K> acc = Poly<K>::constant(k, sigma.ring(), n, c);
    for (int i = 0; i < n; ++i) {
      if (m[i] == 0) continue;
      Poly<K> factor(k, sigma.ring(), n);
      for (int j = 0; j <= m[i]; ++j)
        factor.add_term(Monomial::variable(n, i, j),
                        k.mul(binomial(k, m[i], j), power(k, w[i], m[i] - j)));
      Poly<K> next(k, sigma.ring(), n);
      for (const auto& [a, ca] : acc.terms())
        for (const auto& [b, cb] : factor.terms()) next.add_term(a * b, k.mul(ca, cb));
      acc = std::move(next);
    }
    out += acc;
  }
  return out;
}

/// Homogeneous components, lowest degree first, zero components omitted.
template <ExactField K>
std::vector<Form<K>> graded_parts(const Poly<K>& f) {
  std::vector<Form<K>> parts;
  if (f.is_zero()) return parts;
  for (int d = f.min_degree(); d <= f.degree(); ++d) {
    auto part = f.homogeneous_part(d);
    if (!part.is_zero()) parts.emplace_back(std::move(part), d);
  }
  return parts;
}

template <ExactField K>
using SquareMatrix = std::vector<std::vector<typename K::value_type>>;

/// Linear change of coordinates on P, acting through divided powers: the
/// basis vector x_i goes to sum_j g[j][i] x_j and each x^a is treated as the
/// divided power x^[a]. This makes (g h).F = g.(h.F) and keeps contraction
/// equivariant, so apolar invariants are preserved. Needs char 0 or
/// char > deg F.
template <ExactField K>
Poly<K> change_of_basis(const Poly<K>& f, const SquareMatrix<K>& g) {
  if (f.ring() != Ring::PolynomialP) throw RingMismatch("change_of_basis acts on P");
  const K& k = f.field();
  const int n = f.n_vars();
  if (static_cast<int>(g.size()) != n) throw std::invalid_argument("matrix size mismatch");
  for (const auto& row : g)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("matrix is not square");
  {
    // singularity check by elimination on a copy
    auto m = g;
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (!k.is_zero(m[r][col])) { piv = r; break; }
      if (piv < 0) throw std::invalid_argument("change_of_basis: singular matrix");
      std::swap(m[piv], m[col]);
      const auto inv = k.inv(m[col][col]);
      for (int r = col + 1; r < n; ++r) {
        const auto factor = k.mul(m[r][col], inv);
        if (k.is_zero(factor)) continue;
        for (int c = col; c < n; ++c) m[r][c] = k.sub(m[r][c], k.mul(factor, m[col][c]));
      }
    }
  }
  if (f.is_zero()) return f;
  if (k.characteristic() != 0 && k.characteristic() <= static_cast<std::uint64_t>(f.degree()))
    throw FieldError("characteristic too small for divided-power substitution");

  auto factorial = [&](int e) {
    auto r = k.one();
    for (int i = 2; i <= e; ++i) r = k.mul(r, k.from_int(i));
    return r;
  };
  auto multi_factorial = [&](const Monomial& m) {
    auto r = k.one();
    for (int i = 0; i < n; ++i) r = k.mul(r, factorial(m[i]));
    return r;
  };
  // images of the variables as ordinary linear forms
  std::vector<Poly<K>> image;
  for (int i = 0; i < n; ++i) {
    Poly<K> l(k, Ring::PolynomialP, n);
    for (int j = 0; j < n; ++j) l.add_term(Monomial::variable(n, j), g[j][i]);
    image.push_back(std::move(l));
  }
  auto ordinary_mul = [&](const Poly<K>& a, const Poly<K>& b) {
    Poly<K> out(k, Ring::PolynomialP, n);
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) out.add_term(ma * mb, k.mul(ca, cb));
    return out;
  };
  Poly<K> ordinary(k, Ring::PolynomialP, n);
  for (const auto& [m, c] : f.terms()) {
    Poly<K> acc = Poly<K>::constant(k, Ring::PolynomialP, n, k.div(c, multi_factorial(m)));
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < m[i]; ++e) acc = ordinary_mul(acc, image[i]);
    ordinary += acc;
  }
  Poly<K> out(k, Ring::PolynomialP, n);
  for (const auto& [m, c] : ordinary.terms()) out.add_term(m, k.mul(c, multi_factorial(m)));
  return out;
}

/// Maps a rational polynomial into another field (reduction mod p).
template <ExactField K>
Poly<K> convert(const Poly<RationalField>& f, const K& k) {
  Poly<K> out(k, f.ring(), f.n_vars());
  for (const auto& [m, c] : f.terms()) out.add_term(m, k.from_rational(c));
  return out;
}

template <ExactField K>
Form<K> convert(const Form<RationalField>& f, const K& k) {
  return Form<K>(convert(f.poly(), k), f.degree());
}

}  // namespace apolar

#endif  // APOLAR_POLY_HPP
