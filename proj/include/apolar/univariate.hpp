#ifndef APOLAR_UNIVARIATE_HPP
#define APOLAR_UNIVARIATE_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

class InterpolationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial, coefficients low to high, no trailing
/// zeros. The zero polynomial has degree -1.
template <ExactField K>
class Univariate {
 public:
  using Scalar = typename K::value_type;

  explicit Univariate(K field) : field_(std::move(field)) {}
  Univariate(K field, std::vector<Scalar> coefficients)
      : field_(std::move(field)), c_(std::move(coefficients)) {
    trim();
  }
  static Univariate monomial(K field, int degree, Scalar coefficient) {
    std::vector<Scalar> c(degree + 1, field.zero());
    c[degree] = std::move(coefficient);
    return Univariate(std::move(field), std::move(c));
  }
  /// u - root
  static Univariate linear_factor(const K& field, const Scalar& root) {
    return Univariate(field, {field.neg(root), field.one()});
  }

  const K& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  Scalar coefficient(int i) const { return i < static_cast<int>(c_.size()) && i >= 0 ? c_[i] : field_.zero(); }
  Scalar leading() const { return c_.empty() ? field_.zero() : c_.back(); }

  Scalar operator()(const Scalar& u) const {
    Scalar acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, u), *it);
    return acc;
  }

  friend Univariate operator+(const Univariate& a, const Univariate& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a.coefficient(i), b.coefficient(i));
    return Univariate(a.field_, std::move(c));
  }
  friend Univariate operator-(const Univariate& a, const Univariate& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()), a.field_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a.coefficient(i), b.coefficient(i));
    return Univariate(a.field_, std::move(c));
  }
  friend Univariate operator*(const Univariate& a, const Univariate& b) {
    if (a.is_zero() || b.is_zero()) return Univariate(a.field_);
    const K& k = a.field_;
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, k.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a.c_[i], b.c_[j]));
    return Univariate(k, std::move(c));
  }
  Univariate scaled(const Scalar& s) const {
    std::vector<Scalar> c = c_;
    for (auto& x : c) x = field_.mul(x, s);
    return Univariate(field_, std::move(c));
  }
  Univariate monic() const { return is_zero() ? *this : scaled(field_.inv(leading())); }

  /// (quotient, remainder)
  std::pair<Univariate, Univariate> divmod(const Univariate& d) const {
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const K& k = field_;
    std::vector<Scalar> r = c_;
    if (degree() < d.degree()) return {Univariate(k), *this};
    std::vector<Scalar> q(degree() - d.degree() + 1, k.zero());
    const Scalar inv = k.inv(d.leading());
    for (int i = degree(); i >= d.degree(); --i) {
      const Scalar f = k.mul(r[i], inv);
      q[i - d.degree()] = f;
      if (k.is_zero(f)) continue;
      for (int j = 0; j <= d.degree(); ++j) r[i - d.degree() + j] = k.sub(r[i - d.degree() + j], k.mul(f, d.c_[j]));
    }
    return {Univariate(k, std::move(q)), Univariate(k, std::move(r))};
  }

  /// Quotient of an exact division; throws when the remainder is nonzero.
  Univariate exact_div(const Univariate& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
  }

  Univariate derivative() const {
    if (c_.size() <= 1) return Univariate(field_);
    std::vector<Scalar> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<long long>(i)));
    return Univariate(field_, std::move(c));
  }

  friend bool operator==(const Univariate& a, const Univariate& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.equal(a.c_[i], b.c_[i])) return false;
    return true;
  }

  std::string to_string(const std::string& var = "u") const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      if (field_.is_zero(c_[i])) continue;
      std::string c = field_.to_string(c_[i]);
      const bool negative = !c.empty() && c[0] == '-';
      if (negative) c.erase(0, 1);
      if (out.empty()) out = negative ? "-" : "";
      else out += negative ? " - " : " + ";
      const std::string x = i == 0 ? "" : var + (i > 1 ? "^" + std::to_string(i) : "");
      if (x.empty()) out += c;
      else if (c == "1") out += x;
      else out += c + "*" + x;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  K field_;
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
template <ExactField K>
Univariate<K> gcd(Univariate<K> a, Univariate<K> b) {
  while (!b.is_zero()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Unique polynomial of degree <= degree_bound through the samples. Extra
/// samples beyond degree_bound + 1 are used as consistency checks.
template <ExactField K>
Univariate<K> interpolate(const K& k, const std::vector<std::pair<typename K::value_type, typename K::value_type>>& samples,
                          int degree_bound) {
  using Scalar = typename K::value_type;
  const std::size_t need = static_cast<std::size_t>(degree_bound) + 1;
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  if (samples.size() < need)
    throw InterpolationError("need " + std::to_string(need) + " samples, got " + std::to_string(samples.size()));
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (k.equal(samples[i].first, samples[j].first)) throw InterpolationError("duplicate interpolation node");
  // Newton divided differences on the first need nodes
  std::vector<Scalar> coef(need);
  for (std::size_t i = 0; i < need; ++i) coef[i] = samples[i].second;
  for (std::size_t level = 1; level < need; ++level)
    for (std::size_t i = need - 1; i >= level; --i) {
      coef[i] = k.div(k.sub(coef[i], coef[i - 1]), k.sub(samples[i].first, samples[i - level].first));
      if (i == level) break;
    }
  Univariate<K> result(k);
  for (std::size_t i = need; i-- > 0;) {
    result = result * Univariate<K>::linear_factor(k, samples[i].first) + Univariate<K>(k, {coef[i]});
  }
  for (std::size_t i = need; i < samples.size(); ++i)
    if (!k.equal(result(samples[i].first), samples[i].second))
      throw InterpolationError("samples are inconsistent with degree bound " + std::to_string(degree_bound));
  return result;
}

/// Largest k with (u - root)^k dividing p.
template <ExactField K>
int multiplicity_at(const Univariate<K>& p, const typename K::value_type& root) {
  if (p.is_zero()) throw std::domain_error("multiplicity of a root of the zero polynomial");
  const auto factor = Univariate<K>::linear_factor(p.field(), root);
  int k = 0;
  Univariate<K> q = p;
  while (true) {
    auto [quot, rem] = q.divmod(factor);
    if (!rem.is_zero()) return k;
    q = std::move(quot);
    ++k;
  }
}

/// Yun's square-free decomposition: p = c * prod f_i^i with f_i monic,
/// square-free and pairwise coprime. Returns the nonconstant (f_i, i).
/// Needs char 0 or char > deg p.
template <ExactField K>
std::vector<std::pair<Univariate<K>, int>> squarefree_decomposition(const Univariate<K>& p) {
  const K& k = p.field();
  if (p.is_zero()) throw std::domain_error("square-free decomposition of zero");
  if (k.characteristic() != 0 && k.characteristic() <= static_cast<std::uint64_t>(p.degree()))
    throw FieldError("characteristic too small for square-free decomposition");
  std::vector<std::pair<Univariate<K>, int>> out;
  if (p.degree() == 0) return out;
  Univariate<K> a = gcd(p, p.derivative());
  Univariate<K> b = p.exact_div(a);
  Univariate<K> c = p.derivative().exact_div(a);
  Univariate<K> d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Univariate<K> f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(f, i);
    b = b.exact_div(f);
    c = d.exact_div(f);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace apolar

#endif  // APOLAR_UNIVARIATE_HPP
