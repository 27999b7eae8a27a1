#ifndef APOLAR_PENCIL_HPP
#define APOLAR_PENCIL_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apolar/hilbert.hpp"
#include "apolar/random.hpp"
#include "apolar/univariate.hpp"

namespace apolar {

class PencilError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrics q_k(u) = constant_k + u * linear_k spanning Ann(F(u))_2 along
/// the pencil F(u) = u F1 + F2.
template <ExactField K>
struct QuadricFamily {
  std::vector<std::pair<Poly<K>, Poly<K>>> generators;

  int nonconstant_count() const {
    int c = 0;
    for (const auto& g : generators) c += g.second.is_zero() ? 0 : 1;
    return c;
  }

  std::vector<Poly<K>> at(const typename K::value_type& u) const {
    std::vector<Poly<K>> out;
    for (const auto& [b, a] : generators) out.push_back(b + a.scaled(u));
    return out;
  }
};

/// One generator per entry, parameter `u` of degree at most 1.
template <ExactField K>
QuadricFamily<K> parse_quadric_family(const std::vector<std::string>& lines, const K& k, int n = 6) {
  QuadricFamily<K> fam;
  for (const auto& line : lines) {
    auto p = parse_parametric(line, k, Ring::OperatorS, n, 'u');
    if (p.parameter_degree() > 1) throw PencilError("family generator is not linear in u: " + line);
    Poly<K> b = p.coefficients()[0];
    Poly<K> a = p.parameter_degree() == 1 ? p.coefficients()[1] : Poly<K>(k, Ring::OperatorS, n);
    for (const auto* q : {&b, &a})
      if (!q->is_zero() && (!q->is_homogeneous() || q->degree() != 2))
        throw PencilError("family generator is not a quadric: " + line);
    fam.generators.emplace_back(std::move(b), std::move(a));
  }
  return fam;
}

template <ExactField K>
QuadricFamily<K> convert(const QuadricFamily<RationalField>& f, const K& k) {
  QuadricFamily<K> out;
  for (const auto& [b, a] : f.generators) out.generators.emplace_back(convert(b, k), convert(a, k));
  return out;
}

struct PencilOptions {
  std::vector<Monomial> charts;  // cubic monomials; default x5^3 and x3 x5^2
  int extra_samples = 2;
  std::uint64_t seed = 0;
};

inline std::vector<Monomial> default_charts(int n) {
  Monomial a = Monomial::variable(n, n - 1);
  Monomial b = Monomial::variable(n, n - 3);
  return {a * a * a, b * a * a};
}

struct FactorInfo {
  int degree = 0;
  int multiplicity = 0;
  std::string root;  // "u=r" for linear factors
  friend bool operator==(const FactorInfo&, const FactorInfo&) = default;
};

template <ExactField K>
struct ChartResult {
  std::string chart;
  Univariate<K> raw;
  Univariate<K> unit;
  Univariate<K> normalized;
};

template <ExactField K>
struct PencilProfile {
  FieldSpec field;
  bool family_supplied = false;
  bool family_in_annihilator = true;
  std::string saturation;  // gcd of the 6x6 minors (computed family only)
  int degree_bound = 0;
  int total_degree = 0;
  std::size_t samples = 0;
  std::vector<ChartResult<K>> charts;
  bool charts_agree = false;
  bool identically_zero = false;
  int multiplicity_at_zero = 0;
  int multiplicity_at_infinity = 0;
  int distinct_roots = 0;
  std::vector<FactorInfo> factors;
};

namespace detail {

template <ExactField K>
std::vector<std::size_t> chart_columns(int n, const Monomial& chart) {
  const auto& s4 = monomial_basis(n, 4);
  std::vector<bool> dropped(s4.size(), false);
  for (int i = 0; i < n; ++i) dropped[s4.index_of(Monomial::variable(n, i) * chart)] = true;
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < s4.size(); ++c)
    if (!dropped[c]) keep.push_back(c);
  return keep;
}

/// det of the products q_i q_j projected away from the columns x_i * chart.
template <ExactField K>
typename K::value_type chart_minor(const K& k, int n, const Matrix<K>& quadrics, const std::vector<std::size_t>& keep) {
  Matrix<K> m(k, 0, keep.size());
  std::vector<typename K::value_type> prod, row(keep.size());
  for (std::size_t i = 0; i < quadrics.rows(); ++i)
    for (std::size_t j = i; j < quadrics.rows(); ++j) {
      dense_product<K>(k, n, 2, quadrics.row(i), 2, quadrics.row(j), prod);
      for (std::size_t c = 0; c < keep.size(); ++c) row[c] = prod[keep[c]];
      m.append_row(row);
    }
  if (m.rows() != m.cols()) throw PencilError("quadric family has the wrong size for a square evaluation matrix");
  return determinant(m);
}

/// det of (coefficient of x_i * chart in x_j F).
template <ExactField K>
typename K::value_type chart_unit(const K& k, const Poly<K>& f, const Monomial& chart) {
  const int n = f.n_vars();
  Matrix<K> m(k, n, n);
  for (int j = 0; j < n; ++j) {
    const auto g = dp_mul(Poly<K>::variable(k, Ring::PolynomialP, n, j), f);
    for (int i = 0; i < n; ++i) m(i, j) = g.coefficient(Monomial::variable(n, i) * chart);
  }
  return determinant(m);
}

inline std::string monomial_name(const Monomial& m) {
  std::string s;
  for (int i = 0; i < m.n_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace detail

/// Restriction of det ev to the line u F1 + v F2 (dehomogenized at v = 1),
/// computed by evaluation and interpolation in two affine charts of the
/// target. Without a supplied family, the annihilator is computed at each
/// sample and rescaled by the saturated Pluecker factor so the result is
/// a polynomial in u.
template <ExactField K>
PencilProfile<K> pencil_profile(const Form<K>& f1, const Form<K>& f2, const std::optional<QuadricFamily<K>>& family,
                                PencilOptions opts = {}) {
  using Scalar = typename K::value_type;
  const K& k = f1.field();
  const int n = f1.n_vars();
  if (f1.degree() != 3 || f2.degree() != 3 || f2.n_vars() != n) throw PencilError("pencil needs two cubics in the same ring");
  if (Subspace<K>::span(k, Ambient::graded(Ring::PolynomialP, n, 3), {f1.poly(), f2.poly()}).dim() != 2)
    throw PencilError("pencil endpoints are linearly dependent");
  if (opts.charts.empty()) opts.charts = default_charts(n);
  const std::size_t quad_dim = count_monomials(n, 2) - n;
  const auto s2 = Ambient::graded(Ring::OperatorS, n, 2);

  PencilProfile<K> out;
  out.field = k.spec();
  out.family_supplied = family.has_value();
  auto fu = [&](const Scalar& u) { return f1.poly().scaled(u) + f2.poly(); };

  // Computed family: fixed pivot columns and saturation gcd.
  std::vector<std::size_t> pivots, free_cols;
  Univariate<K> sat(k, {k.one()});
  CounterRng rng(opts.seed);
  if (family) {
    if (family->generators.size() != quad_dim) throw PencilError("family must have " + std::to_string(quad_dim) + " generators");
    out.degree_bound = static_cast<int>(quad_dim + 1) * family->nonconstant_count();
  } else {
    const Scalar u0 = k.from_int(rng.uniform_int(1, kCoefficientBound));
    const auto r0 = rref(catalecticant(Form<K>(fu(u0), 3), 2).transpose());
    if (r0.rank != static_cast<std::size_t>(n)) throw PencilError("pencil is degenerate at a general point");
    pivots = r0.pivots;
    for (std::size_t c = 0; c < s2.dim(); ++c)
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
    std::vector<Matrix<K>> probes;
    for (int t = 0; t < 3; ++t) {
      Matrix<K> r(k, s2.dim(), n);
      for (std::size_t i = 0; i < r.rows(); ++i)
        for (int j = 0; j < n; ++j) r(i, j) = random_scalar(k, rng);
      probes.push_back(std::move(r));
    }
    Univariate<K> g(k);
    for (const auto& r : probes) {
      std::vector<std::pair<Scalar, Scalar>> pts;
      for (int s = 1; s <= n + 1 + opts.extra_samples; ++s) {
        const Scalar u = k.from_int(s);
        pts.emplace_back(u, determinant(catalecticant(Form<K>(fu(u), 3), 2).transpose() * r));
      }
      g = gcd(g, interpolate(k, pts, n));
    }
    if (g.is_zero()) throw PencilError("pencil is degenerate at every point");
    sat = g;
    out.saturation = g.to_string();
    out.degree_bound = static_cast<int>(quad_dim + 1) * (n - g.degree());
  }
  out.total_degree = out.degree_bound - n;

  std::vector<std::vector<std::size_t>> keep;
  for (const auto& c : opts.charts) {
    if (c.degree() != 3 || c.n_vars() != n) throw PencilError("chart must be a cubic monomial");
    keep.push_back(detail::chart_columns<K>(n, c));
  }

  const std::size_t need = static_cast<std::size_t>(std::max(out.degree_bound, n)) + 1 + opts.extra_samples;
  std::vector<std::vector<std::pair<Scalar, Scalar>>> raw(opts.charts.size()), unit(opts.charts.size());
  for (long long s = 1; raw.front().size() < need; ++s) {
    if (s > 100000) throw PencilError("could not find enough good sample points");
    const Scalar u = k.from_int(s);
    if (k.is_zero(u)) continue;
    const auto f = fu(u);
    Matrix<K> q(k, 0, s2.dim());
    Scalar scale = k.one();
    if (family) {
      for (const auto& p : family->at(u)) q.append_row(s2.coordinates(p));
      if (raw.front().empty()) {
        for (const auto& p : family->at(u)) out.family_in_annihilator = out.family_in_annihilator && contract(p, f).is_zero();
      }
    } else {
      const Scalar gu = sat(u);
      if (k.is_zero(gu)) continue;
      const auto a = catalecticant(Form<K>(f, 3), 2).transpose();
      std::vector<std::size_t> rows(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) rows[i] = static_cast<std::size_t>(i);
      std::vector<std::size_t> order = pivots;
      order.insert(order.end(), free_cols.begin(), free_cols.end());
      const auto reordered = a.submatrix(rows, order);
      const Scalar c = determinant(a.submatrix(rows, pivots));
      if (k.is_zero(c)) continue;
      const auto red = rref(reordered);
      std::vector<Scalar> v(s2.dim());
      for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::fill(v.begin(), v.end(), k.zero());
        v[free_cols[fi]] = k.one();
        for (int i = 0; i < n; ++i) v[pivots[i]] = k.neg(red.reduced(i, n + fi));
        q.append_row(v);
      }
      scale = power(k, k.div(c, gu), quad_dim + 1);
    }
    for (std::size_t ci = 0; ci < opts.charts.size(); ++ci) {
      raw[ci].emplace_back(u, k.mul(scale, detail::chart_minor(k, n, q, keep[ci])));
      unit[ci].emplace_back(u, detail::chart_unit(k, f, opts.charts[ci]));
    }
  }
  out.samples = raw.front().size();

  for (std::size_t ci = 0; ci < opts.charts.size(); ++ci) {
    ChartResult<K> r{detail::monomial_name(opts.charts[ci]), interpolate(k, raw[ci], out.degree_bound),
                     interpolate(k, unit[ci], n), Univariate<K>(k)};
    if (r.unit.is_zero()) throw PencilError("chart " + r.chart + " does not cover the pencil");
    auto [quot, rem] = r.raw.divmod(r.unit);
    if (!rem.is_zero()) throw PencilError("chart determinant is not divisible by the chart unit");
    r.normalized = std::move(quot);
    out.charts.push_back(std::move(r));
  }

  const auto& lambda = out.charts.front().normalized;
  out.charts_agree = true;
  for (const auto& c : out.charts)
    out.charts_agree = out.charts_agree && (c.normalized == lambda || c.normalized == lambda.scaled(k.neg(k.one())));
  out.identically_zero = lambda.is_zero();
  if (out.identically_zero) return out;

  out.multiplicity_at_zero = multiplicity_at(lambda, k.zero());
  out.multiplicity_at_infinity = out.total_degree - lambda.degree();
  for (const auto& [f, mult] : squarefree_decomposition(lambda)) {
    FactorInfo fi{f.degree(), mult, ""};
    if (f.degree() == 1) fi.root = "u=" + k.to_string(k.neg(f.coefficient(0)));
    out.distinct_roots += f.degree();
    out.factors.push_back(std::move(fi));
  }
  if (out.multiplicity_at_infinity > 0) {
    out.distinct_roots += 1;
    out.factors.push_back({1, out.multiplicity_at_infinity, "v=0"});
  }
  return out;
}

/// Shape of a profile that is comparable across fields: sorted
/// (degree, multiplicity) pairs plus the orders at u = 0 and at infinity.
template <ExactField K>
std::vector<std::pair<int, int>> factor_pattern(const PencilProfile<K>& p) {
  std::vector<std::pair<int, int>> out;
  for (const auto& f : p.factors) out.emplace_back(f.degree, f.multiplicity);
  out.emplace_back(-1, p.multiplicity_at_zero);
  out.emplace_back(-2, p.multiplicity_at_infinity);
  out.emplace_back(-3, p.identically_zero ? 1 : 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apolar

#endif  // APOLAR_PENCIL_HPP
