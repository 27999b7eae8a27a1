#ifndef APOLAR_CONSTRUCTIONS_HPP
#define APOLAR_CONSTRUCTIONS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apolar/hilbert.hpp"
#include "apolar/random.hpp"

namespace apolar {

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maximum number of resampling attempts for "general" random inputs.
inline constexpr int kMaxAttempts = 10;

/// The 2-subsets {i < j} of {0..5}, lexicographic; index = Pluecker variable.
inline const std::vector<std::pair<int, int>>& pluecker_pairs() {
  static const std::vector<std::pair<int, int>> pairs = [] {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j) out.emplace_back(i, j);
    return out;
  }();
  return pairs;
}

inline int pluecker_index(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == j || i < 0 || j > 5) throw std::out_of_range("bad Pluecker pair");
  const auto& pairs = pluecker_pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (pairs[k] == std::make_pair(i, j)) return static_cast<int>(k);
  return -1;
}

/// Coefficients of w ^ w in the basis e_a ^ e_b ^ e_c ^ e_d (a < b < c < d),
/// halved: p_ab p_cd - p_ac p_bd + p_ad p_bc. Quadrics in 15 variables.
template <ExactField K>
std::vector<Form<K>> pluecker_quadrics(const K& k) {
  std::vector<Form<K>> out;
  const int n = 15;
  auto var = [&](int i, int j) { return Monomial::variable(n, pluecker_index(i, j)); };
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c)
        for (int d = c + 1; d < 6; ++d) {
          Poly<K> q(k, Ring::OperatorS, n);
          q.add_term(var(a, b) * var(c, d), k.one());
          q.add_term(var(a, c) * var(b, d), k.neg(k.one()));
          q.add_term(var(a, d) * var(b, c), k.one());
          out.emplace_back(std::move(q), 2);
        }
  return out;
}

/// Substitutes variable i -> images[i] (all in the same ring) into f.
template <ExactField K>
Poly<K> substitute_linear(const Poly<K>& f, const std::vector<Poly<K>>& images) {
  if (static_cast<int>(images.size()) != f.n_vars()) throw std::invalid_argument("wrong number of images");
  const K& k = f.field();
  const int m = images.front().n_vars();
  Poly<K> out(k, Ring::OperatorS, m);
  for (const auto& [mono, c] : f.terms()) {
    Poly<K> acc = Poly<K>::constant(k, Ring::OperatorS, m, c);
    for (int i = 0; i < f.n_vars(); ++i)
      for (int e = 0; e < mono[i]; ++e) acc = mul_s(acc, images[i]);
    out += acc;
  }
  return out;
}

template <ExactField K>
struct Gr26Section {
  Form<K> cubic;
  std::vector<Form<K>> quadrics;  // the substituted Pluecker quadrics
  int attempts = 1;
};

/// Restricts the Pluecker quadrics to the 6-dimensional linear space given by
/// p = W alpha (W is 15 x 6) and returns their common dual socle generator.
template <ExactField K>
Gr26Section<K> gr26_section_cubic(const Matrix<K>& w) {
  if (w.rows() != 15 || w.cols() != 6) throw std::invalid_argument("gr26_section_cubic expects a 15x6 matrix");
  const K& k = w.field();
  std::vector<Poly<K>> images;
  for (std::size_t r = 0; r < 15; ++r) {
    Poly<K> l(k, Ring::OperatorS, 6);
    for (int j = 0; j < 6; ++j) l.add_term(Monomial::variable(6, j), w(r, j));
    images.push_back(std::move(l));
  }
  std::vector<Form<K>> quadrics;
  for (const auto& q : pluecker_quadrics(k)) {
    auto s = substitute_linear(q.poly(), images);
    if (s.is_zero()) throw ApolarityError("a substituted Pluecker quadric vanishes");
    quadrics.emplace_back(std::move(s), 2);
  }
  auto cubic = dual_socle_generator(quadrics, 6);
  return {std::move(cubic), std::move(quadrics), 1};
}

template <ExactField K>
Matrix<K> random_matrix(const K& k, CounterRng& rng, std::size_t rows, std::size_t cols) {
  Matrix<K> m(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(k, rng);
  return m;
}

template <ExactField K>
std::vector<typename K::value_type> random_vector(const K& k, CounterRng& rng, std::size_t n) {
  std::vector<typename K::value_type> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(k, rng));
  return v;
}

/// Random W from the seed, resampled until the section is general: the
/// quadrics span a 15-dimensional space and the cubic is nondegenerate.
template <ExactField K>
Gr26Section<K> gr26_section_cubic(const K& k, std::uint64_t seed) {
  const CounterRng root(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CounterRng rng = root.split(attempt);
    try {
      auto s = gr26_section_cubic(random_matrix(k, rng, 15, 6));
      std::vector<Poly<K>> qs;
      for (const auto& q : s.quadrics) qs.push_back(q.poly());
      if (Subspace<K>::span(k, Ambient::graded(Ring::OperatorS, 6, 2), qs).dim() != 15) continue;
      if (!is_nondegenerate_cubic(s.cubic)) continue;
      s.attempts = attempt + 1;
      return s;
    } catch (const ApolarityError&) {
    }
  }
  throw ConstructionError("no general Gr(2,6) section after " + std::to_string(kMaxAttempts) + " attempts");
}

/// Sum of waring_cube over the points.
template <ExactField K>
Form<K> waring_sum(const K& k, const std::vector<std::vector<typename K::value_type>>& points, int n = 6) {
  if (points.empty()) throw std::invalid_argument("waring_sum of no points");
  Poly<K> f(k, Ring::PolynomialP, n);
  for (const auto& c : points) {
    if (static_cast<int>(c.size()) != n) throw std::invalid_argument("point has wrong dimension");
    f += waring_cube(k, std::span<const typename K::value_type>(c)).poly();
  }
  return Form<K>(std::move(f), 3);
}

template <ExactField K>
std::vector<std::vector<typename K::value_type>> random_points(const K& k, std::uint64_t seed, std::size_t count, int n = 6) {
  CounterRng rng(seed);
  std::vector<std::vector<typename K::value_type>> pts;
  while (pts.size() < count) {
    auto v = random_vector(k, rng, n);
    bool zero = true;
    for (const auto& x : v) zero = zero && k.is_zero(x);
    if (!zero) pts.push_back(std::move(v));
  }
  return pts;
}

/// Cubic in y_0..y_5, y_k the k-th quadric monomial of w_0, w_1, w_2, with
/// coefficient of y^mu equal to the coefficient of G at the product of the
/// quadric monomials in mu.
template <ExactField K>
Form<K> dvap_cubic(const Form<K>& g) {
  if (g.degree() != 6 || g.n_vars() != 3 || g.ring() != Ring::PolynomialP)
    throw std::invalid_argument("dvap_cubic expects a sextic in three variables");
  const K& k = g.field();
  const auto& quad = monomial_basis(3, 2);
  Poly<K> f(k, Ring::PolynomialP, 6);
  for (const auto& mu : monomial_basis(6, 3).monomials()) {
    Monomial nu(3);
    for (int i = 0; i < 6; ++i)
      for (int e = 0; e < mu[i]; ++e) nu = nu * quad[i];
    f.add_term(mu, g.poly().coefficient(nu));
  }
  return Form<K>(std::move(f), 3);
}

/// sum_{|a| = d} c^a x^a.
template <ExactField K>
Form<K> waring_power(const K& k, std::span<const typename K::value_type> c, int d) {
  const int n = static_cast<int>(c.size());
  Poly<K> f(k, Ring::PolynomialP, n);
  for (const auto& m : monomial_basis(n, d).monomials()) {
    auto coeff = k.one();
    for (int i = 0; i < n; ++i) coeff = k.mul(coeff, power(k, c[i], m[i]));
    f.add_term(m, coeff);
  }
  return Form<K>(std::move(f), d);
}

template <ExactField K>
Form<K> random_form(const K& k, CounterRng& rng, int n, int d) {
  Poly<K> f(k, Ring::PolynomialP, n);
  for (const auto& m : monomial_basis(n, d).monomials()) f.add_term(m, random_scalar(k, rng));
  return Form<K>(std::move(f), d);
}

/// Uniform random cubic, resampled until nondegenerate.
template <ExactField K>
Form<K> random_cubic(const K& k, std::uint64_t seed, int n = 6) {
  const CounterRng root(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CounterRng rng = root.split(attempt);
    auto f = random_form(k, rng, n, 3);
    if (!f.is_zero() && is_nondegenerate_cubic(f, n)) return f;
  }
  throw ConstructionError("no nondegenerate random cubic after " + std::to_string(kMaxAttempts) + " attempts");
}

/// Random sextic G with dvap_cubic(G) nondegenerate.
template <ExactField K>
std::pair<Form<K>, Form<K>> random_dvap_cubic(const K& k, std::uint64_t seed) {
  const CounterRng root(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    CounterRng rng = root.split(attempt);
    auto g = random_form(k, rng, 3, 6);
    auto f = dvap_cubic(g);
    if (!f.is_zero() && is_nondegenerate_cubic(f)) return {std::move(g), std::move(f)};
  }
  throw ConstructionError("no nondegenerate D_Vap cubic after " + std::to_string(kMaxAttempts) + " attempts");
}

template <ExactField K>
struct FiberPoint {
  Poly<K> polynomial;                         // F3 + Q
  std::vector<typename K::value_type> shift;  // support point for translated_apolar
};

/// The point (Q, w) of the fiber over [F3].
template <ExactField K>
FiberPoint<K> fiber_point(const Form<K>& f3, const Form<K>& q, std::vector<typename K::value_type> w) {
  if (!is_nondegenerate_cubic(f3, f3.n_vars())) throw std::invalid_argument("fiber_point expects a nondegenerate cubic");
  if (!q.is_zero() && q.degree() != 2) throw std::invalid_argument("fiber_point expects a quadric");
  if (static_cast<int>(w.size()) != f3.n_vars()) throw std::invalid_argument("shift vector has wrong length");
  return {f3.poly() + q.poly(), std::move(w)};
}

}  // namespace apolar

#endif  // APOLAR_CONSTRUCTIONS_HPP
