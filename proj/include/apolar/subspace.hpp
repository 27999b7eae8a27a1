#ifndef APOLAR_SUBSPACE_HPP
#define APOLAR_SUBSPACE_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/poly.hpp"

namespace apolar {

/// Coordinate space of a graded range of S or P: the concatenation of the
/// monomial bases of degrees min_degree..max_degree.
struct Ambient {
  Ring ring = Ring::OperatorS;
  int n_vars = 1;
  int min_degree = 0;
  int max_degree = 0;

  static Ambient graded(Ring r, int n, int d) { return {r, n, d, d}; }
  static Ambient up_to(Ring r, int n, int d) { return {r, n, 0, d}; }

  std::size_t dim() const {
    std::size_t total = 0;
    for (int d = min_degree; d <= max_degree; ++d) total += count_monomials(n_vars, d);
    return total;
  }
  std::size_t offset(int degree) const {
    std::size_t total = 0;
    for (int d = min_degree; d < degree; ++d) total += count_monomials(n_vars, d);
    return total;
  }
  Ambient dual() const { return {dual_ring(ring), n_vars, min_degree, max_degree}; }

  template <ExactField K>
  std::vector<typename K::value_type> coordinates(const Poly<K>& p) const {
    if (p.ring() != ring) throw RingMismatch("polynomial lives in the wrong ring");
    if (p.n_vars() != n_vars) throw std::invalid_argument("variable count mismatch");
    std::vector<typename K::value_type> v(dim(), p.field().zero());
    for (const auto& [m, c] : p.terms()) {
      if (m.degree() < min_degree || m.degree() > max_degree)
        throw std::out_of_range("polynomial has terms outside the ambient degree range");
      v[offset(m.degree()) + monomial_basis(n_vars, m.degree()).index_of(m)] = c;
    }
    return v;
  }

  template <ExactField K>
  Poly<K> polynomial(const K& field, std::span<const typename K::value_type> v) const {
    if (v.size() != dim()) throw std::invalid_argument("coordinate vector has wrong length");
    Poly<K> p(field, ring, n_vars);
    std::size_t pos = 0;
    for (int d = min_degree; d <= max_degree; ++d)
      for (const auto& m : monomial_basis(n_vars, d).monomials()) p.add_term(m, v[pos++]);
    return p;
  }

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// A subspace of an Ambient coordinate space, stored canonically as the
/// rows of its reduced row echelon basis.
template <ExactField K>
class Subspace {
 public:
  using Scalar = typename K::value_type;

  Subspace(Ambient ambient, Matrix<K> rref_rows, std::vector<std::size_t> pivots)
      : ambient_(ambient), rows_(std::move(rref_rows)), pivots_(std::move(pivots)) {}

  static Subspace zero(const K& field, Ambient a) { return Subspace(a, Matrix<K>(field, 0, a.dim()), {}); }
  static Subspace full(const K& field, Ambient a) {
    std::vector<std::size_t> piv(a.dim());
    std::iota(piv.begin(), piv.end(), 0);
    return Subspace(a, Matrix<K>::identity(field, a.dim()), std::move(piv));
  }

  /// Span of the rows of m (coordinates in `a`).
  static Subspace span_rows(Ambient a, const Matrix<K>& m) {
    if (m.cols() != a.dim()) throw std::invalid_argument("matrix width differs from ambient dimension");
    auto r = rref(m);
    return Subspace(a, std::move(r.reduced), std::move(r.pivots));
  }

  static Subspace span(const K& field, Ambient a, const std::vector<Poly<K>>& polys) {
    EchelonBuilder<K> b(field, a.dim());
    for (const auto& p : polys) b.insert(a.coordinates(p));
    auto r = b.rref();
    return Subspace(a, std::move(r.reduced), std::move(r.pivots));
  }

  static Subspace from_builder(Ambient a, const EchelonBuilder<K>& b) {
    auto r = b.rref();
    return Subspace(a, std::move(r.reduced), std::move(r.pivots));
  }

  const Ambient& ambient() const { return ambient_; }
  const K& field() const { return rows_.field(); }
  std::size_t dim() const { return rows_.rows(); }
  std::size_t ambient_dim() const { return ambient_.dim(); }
  std::size_t codim() const { return ambient_dim() - dim(); }
  const Matrix<K>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::vector<Poly<K>> polynomials() const {
    std::vector<Poly<K>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(ambient_.polynomial(field(), rows_.row(i)));
    return out;
  }

  bool contains(std::span<const Scalar> v) const {
    const K& k = field();
    std::vector<Scalar> w(v.begin(), v.end());
    for (std::size_t i = 0; i < dim(); ++i) {
      const auto f = w[pivots_[i]];
      if (k.is_zero(f)) continue;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] = k.sub(w[j], k.mul(f, rows_(i, j)));
    }
    for (const auto& x : w)
      if (!k.is_zero(x)) return false;
    return true;
  }
  bool contains(const Poly<K>& p) const { return contains(ambient_.coordinates(p)); }

  bool contains(const Subspace& o) const {
    check_same_ambient(o);
    for (std::size_t i = 0; i < o.dim(); ++i)
      if (!contains(o.rows_.row(i))) return false;
    return true;
  }

  /// Orthogonal complement under the monomial pairing, which is diagonal in
  /// these coordinates; lives in the dual ring.
  Subspace perp() const {
    const K& k = field();
    const std::size_t n = ambient_dim();
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots_) is_pivot[p] = true;
    Matrix<K> out(k, 0, n);
    std::vector<Scalar> v(n, k.zero());
    std::vector<std::size_t> piv;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      std::fill(v.begin(), v.end(), k.zero());
      v[f] = k.one();
      for (std::size_t i = 0; i < dim(); ++i) v[pivots_[i]] = k.neg(rows_(i, f));
      out.append_row(v);
    }
    return span_rows(ambient_.dual(), out);
  }

  friend Subspace sum(const Subspace& a, const Subspace& b) {
    a.check_same_ambient(b);
    EchelonBuilder<K> builder(a.field(), a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) builder.insert(a.rows_.row(i));
    for (std::size_t i = 0; i < b.dim(); ++i) builder.insert(b.rows_.row(i));
    return from_builder(a.ambient_, builder);
  }

  friend Subspace intersect(const Subspace& a, const Subspace& b) {
    a.check_same_ambient(b);
    return sum(a.perp(), b.perp()).perp();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  void check_same_ambient(const Subspace& o) const {
    if (!(ambient_ == o.ambient_)) throw std::invalid_argument("subspaces live in different ambient spaces");
  }

  Ambient ambient_;
  Matrix<K> rows_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel of m as a subspace of the coordinate space `a`.
template <ExactField K>
Subspace<K> kernel_basis(const Matrix<K>& m, Ambient a) {
  return Subspace<K>::span_rows(a, kernel_matrix(m));
}

}  // namespace apolar

#endif  // APOLAR_SUBSPACE_HPP
