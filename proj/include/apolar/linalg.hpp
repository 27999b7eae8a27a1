#ifndef APOLAR_LINALG_HPP
#define APOLAR_LINALG_HPP

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "apolar/field.hpp"

namespace apolar {

/// Dense row-major matrix over an exact field.
template <ExactField K>
class Matrix {
 public:
  using Scalar = typename K::value_type;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(K field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const K& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Scalar> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_set, std::span<const std::size_t> col_set) const {
    Matrix s(field_, row_set.size(), col_set.size());
    for (std::size_t i = 0; i < row_set.size(); ++i)
      for (std::size_t j = 0; j < col_set.size(); ++j) s(i, j) = (*this)(row_set[i], col_set[j]);
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    const K& k = a.field_;
    Matrix out(k, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const auto& x = a(i, l);
        if (k.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = k.add(out(i, j), k.mul(x, b(l, j)));
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

 private:
  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

template <ExactField K>
struct RrefResult {
  Matrix<K> reduced;  // rank x cols, reduced row echelon form
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Incremental row echelon form. Rows are reduced on insertion against the
/// stored pivot rows (semi-echelon: every stored row vanishes on the pivot
/// columns of rows stored before it).
template <ExactField K>
class EchelonBuilder {
 public:
  using Scalar = typename K::value_type;

  EchelonBuilder(K field, std::size_t cols) : field_(std::move(field)), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return rank() == cols_; }

  /// Returns true when the row was independent of the stored rows.
  bool insert(std::span<const Scalar> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    if (full()) return false;
    work_.assign(values.begin(), values.end());
    const K& k = field_;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const std::size_t pc = pivots_[r];
      if (k.is_zero(work_[pc])) continue;
      const Scalar f = work_[pc];
      const Scalar* prow = rows_.data() + r * cols_;
      for (std::size_t j = pc; j < cols_; ++j)
        if (!k.is_zero(prow[j])) work_[j] = k.sub(work_[j], k.mul(f, prow[j]));
    }
    std::size_t pc = 0;
    while (pc < cols_ && k.is_zero(work_[pc])) ++pc;
    if (pc == cols_) return false;
    const Scalar inv = k.inv(work_[pc]);
    for (std::size_t j = pc; j < cols_; ++j) work_[j] = k.mul(work_[j], inv);
    rows_.insert(rows_.end(), work_.begin(), work_.end());
    pivots_.push_back(pc);
    return true;
  }

  RrefResult<K> rref() const {
    const K& k = field_;
    std::vector<std::size_t> order(pivots_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    Matrix<K> m(k, order.size(), cols_);
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < order.size(); ++i) {
      std::copy_n(rows_.begin() + order[i] * cols_, cols_, m.row(i).begin());
      piv.push_back(pivots_[order[i]]);
    }
    for (std::size_t i = m.rows(); i-- > 0;) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == i || k.is_zero(m(r, piv[i]))) continue;
        const Scalar f = m(r, piv[i]);
        for (std::size_t j = piv[i]; j < cols_; ++j)
          if (!k.is_zero(m(i, j))) m(r, j) = k.sub(m(r, j), k.mul(f, m(i, j)));
      }
    }
    return {std::move(m), piv.size(), std::move(piv)};
  }

 private:
  K field_;
  std::size_t cols_;
  std::vector<Scalar> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Scalar> work_;
};

/// Over Q rows are kept as primitive integer vectors and reduced by cross
/// multiplication, so no fractions appear until the final RREF.
template <>
class EchelonBuilder<RationalField> {
 public:
  using Scalar = mpq_class;

  EchelonBuilder(RationalField field, std::size_t cols) : field_(field), cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return rank() == cols_; }

  bool insert(std::span<const Scalar> values) {
    if (values.size() != cols_) throw std::invalid_argument("row length mismatch");
    if (full()) return false;
    mpz_class lcm = 1;
    for (const auto& v : values)
      if (v != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> w(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
      if (values[j] != 0) w[j] = values[j].get_num() * (lcm / values[j].get_den());
    mpz_class g, a, b;
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const std::size_t pc = pivots_[r];
      if (w[pc] == 0) continue;
      const auto& prow = rows_[r];
      mpz_gcd(g.get_mpz_t(), w[pc].get_mpz_t(), prow[pc].get_mpz_t());
      a = prow[pc] / g;
      b = w[pc] / g;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (prow[j] == 0) {
          if (w[j] != 0) w[j] *= a;
        } else {
          w[j] = a * w[j] - b * prow[j];
        }
      }
      make_primitive(w);
    }
    std::size_t pc = 0;
    while (pc < cols_ && w[pc] == 0) ++pc;
    if (pc == cols_) return false;
    make_primitive(w);
    if (w[pc] < 0)
      for (auto& x : w) x = -x;
    rows_.push_back(std::move(w));
    pivots_.push_back(pc);
    return true;
  }

  RrefResult<RationalField> rref() const {
    std::vector<std::size_t> order(pivots_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
    Matrix<RationalField> m(field_, order.size(), cols_);
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const auto& src = rows_[order[i]];
      const std::size_t pc = pivots_[order[i]];
      for (std::size_t j = 0; j < cols_; ++j)
        if (src[j] != 0) m(i, j) = mpq_class(src[j], src[pc]);
      for (std::size_t j = 0; j < cols_; ++j) m(i, j).canonicalize();
      piv.push_back(pc);
    }
    for (std::size_t i = m.rows(); i-- > 0;) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r == i || m(r, piv[i]) == 0) continue;
        const mpq_class f = m(r, piv[i]);
        for (std::size_t j = piv[i]; j < cols_; ++j)
          if (m(i, j) != 0) m(r, j) -= f * m(i, j);
      }
    }
    return {std::move(m), piv.size(), std::move(piv)};
  }

 private:
  static void make_primitive(std::vector<mpz_class>& w) {
    mpz_class g = 0;
    for (const auto& x : w)
      if (x != 0) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
      }
    if (g > 1)
      for (auto& x : w)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  RationalField field_;
  std::size_t cols_;
  std::vector<std::vector<mpz_class>> rows_;
  std::vector<std::size_t> pivots_;
};

template <ExactField K>
RrefResult<K> rref(const Matrix<K>& m) {
  EchelonBuilder<K> b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) b.insert(m.row(r));
  return b.rref();
}

template <ExactField K>
std::size_t rank(const Matrix<K>& m) {
  EchelonBuilder<K> b(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows() && !b.full(); ++r) b.insert(m.row(r));
  return b.rank();
}

/// Rows spanning {v : M v = 0}, in reduced row echelon form.
template <ExactField K>
Matrix<K> kernel_matrix(const Matrix<K>& m) {
  const K& k = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix<K> ker(k, 0, m.cols());
  std::vector<typename K::value_type> v(m.cols(), k.zero());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), k.zero());
    v[f] = k.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = k.neg(r.reduced(i, f));
    ker.append_row(v);
  }
  return rref(ker).reduced;
}

/// Determinant: Bareiss fraction-free elimination over Q (after clearing
/// row denominators), plain Gaussian elimination over F_p.
template <ExactField K>
typename K::value_type determinant(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const K& k = m.field();
  if (n == 0) return k.one();
  if constexpr (is_rational_field_v<K>) {
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    mpz_class scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class lcm = 1;
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
      for (std::size_t j = 0; j < n; ++j)
        if (m(i, j) != 0) a[i][j] = m(i, j).get_num() * (lcm / m(i, j).get_den());
      scale *= lcm;
    }
    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && a[piv][c] == 0) ++piv;
      if (piv == n) return mpq_class(0);
      if (piv != c) {
        std::swap(a[piv], a[c]);
        sign = -sign;
      }
      for (std::size_t i = c + 1; i < n; ++i) {
        for (std::size_t j = c + 1; j < n; ++j) {
          a[i][j] = a[c][c] * a[i][j] - a[i][c] * a[c][j];
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        a[i][c] = 0;
      }
      prev = a[c][c];
    }
    mpq_class d(a[n - 1][n - 1] * sign, scale);
    d.canonicalize();
    return d;
  } else {
    std::vector<typename K::value_type> a(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    auto det = k.one();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (piv < n && k.is_zero(a[piv * n + c])) ++piv;
      if (piv == n) return k.zero();
      if (piv != c) {
        for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
        det = k.neg(det);
      }
      const auto pivot = a[c * n + c];
      det = k.mul(det, pivot);
      const auto inv = k.inv(pivot);
      for (std::size_t i = c + 1; i < n; ++i) {
        const auto f = k.mul(a[i * n + c], inv);
        if (k.is_zero(f)) continue;
        for (std::size_t j = c + 1; j < n; ++j)
          a[i * n + j] = k.sub(a[i * n + j], k.mul(f, a[c * n + j]));
      }
    }
    return det;
  }
}

template <ExactField K>
typename K::value_type minor_det(const Matrix<K>& m, std::span<const std::size_t> row_set,
                                 std::span<const std::size_t> col_set) {
  if (row_set.size() != col_set.size()) throw std::invalid_argument("minor must be square");
  return determinant(m.submatrix(row_set, col_set));
}

}  // namespace apolar

#endif  // APOLAR_LINALG_HPP
