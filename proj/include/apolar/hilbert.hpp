#ifndef APOLAR_HILBERT_HPP
#define APOLAR_HILBERT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "apolar/apolarity.hpp"

namespace apolar {

namespace detail {

/// Product of two dense vectors of S_a and S_b, written into S_{a+b}.
template <ExactField K>
void dense_product(const K& k, int n, int a, std::span<const typename K::value_type> u, int b,
                   std::span<const typename K::value_type> v, std::vector<typename K::value_type>& out) {
  const auto& table = multiplication_table(n, a, b);
  out.assign(count_monomials(n, a + b), k.zero());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (k.is_zero(u[i])) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (k.is_zero(v[j])) continue;
      auto& slot = out[table(i, j)];
      slot = k.add(slot, k.mul(u[i], v[j]));
    }
  }
}

/// x_k * row for every variable k, where row lives in S_d.
template <ExactField K>
void insert_linear_multiples(const K& k, int n, int d, const Matrix<K>& rows, EchelonBuilder<K>& b) {
  std::vector<typename K::value_type> prod;
  const auto& s1 = monomial_basis(n, 1);
  std::vector<typename K::value_type> e(s1.size(), k.zero());
  for (std::size_t r = 0; r < rows.rows() && !b.full(); ++r)
    for (std::size_t var = 0; var < s1.size() && !b.full(); ++var) {
      std::fill(e.begin(), e.end(), k.zero());
      e[var] = k.one();
      dense_product<K>(k, n, 1, e, d, rows.row(r), prod);
      b.insert(prod);
    }
}

template <ExactField K>
void insert_products(const K& k, int n, int a, const Matrix<K>& lhs, int b_deg, const Matrix<K>& rhs, bool symmetric,
                     EchelonBuilder<K>& b) {
  std::vector<typename K::value_type> prod;
  for (std::size_t i = 0; i < lhs.rows() && !b.full(); ++i)
    for (std::size_t j = symmetric ? i : 0; j < rhs.rows() && !b.full(); ++j) {
      dense_product<K>(k, n, a, lhs.row(i), b_deg, rhs.row(j), prod);
      b.insert(prod);
    }
}

}  // namespace detail

class DegenerateCubicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

/// Generators of (I^2)_d, fed into b until it is full.
template <ExactField K>
void insert_square_generators(const K& k, int n, int d, const Matrix<K>& i2, const Matrix<K>& i3, const Matrix<K>* g4,
                              const Matrix<K>* prev, EchelonBuilder<K>& b) {
  switch (d) {
    case 4: insert_products(k, n, 2, i2, 2, i2, true, b); break;
    case 5: insert_products(k, n, 2, i2, 3, i3, false, b); break;
    case 6:
      insert_linear_multiples(k, n, 5, *prev, b);
      insert_products(k, n, 3, i3, 3, i3, true, b);
      insert_products(k, n, 2, i2, 4, *g4, false, b);
      break;
    case 7:
      insert_linear_multiples(k, n, 6, *prev, b);
      insert_products(k, n, 3, i3, 4, *g4, false, b);
      break;
    default: throw std::out_of_range("no square ideal generators in this degree");
  }
}

inline const PrimeField& probe_field() {
  static const PrimeField p(next_prime((std::uint64_t{1} << 61) + 0x5bd1e995ULL));
  return p;
}

inline std::optional<Matrix<PrimeField>> reduce_mod(const Matrix<RationalField>& m, const PrimeField& p) {
  Matrix<PrimeField> out(p, m.rows(), m.cols());
  try {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = p.from_rational(m(i, j));
  } catch (const FieldError&) {
    return std::nullopt;
  }
  return out;
}

/// Over Q: rank modulo p never exceeds the rank over Q, so a full slice
/// modulo p is full over Q. Avoids eliminating large rationals.
inline bool full_modulo_prime(int n, int d, const Matrix<RationalField>& i2, const Matrix<RationalField>& i3,
                              const Matrix<RationalField>* g4, const Matrix<RationalField>* prev) {
  const auto& p = probe_field();
  auto r2 = reduce_mod(i2, p), r3 = reduce_mod(i3, p);
  std::optional<Matrix<PrimeField>> rg, rp;
  if (g4) rg = reduce_mod(*g4, p);
  if (prev) rp = reduce_mod(*prev, p);
  if (!r2 || !r3 || (g4 && !rg) || (prev && !rp)) return false;
  EchelonBuilder<PrimeField> b(p, count_monomials(n, d));
  insert_square_generators(p, n, d, *r2, *r3, rg ? &*rg : nullptr, rp ? &*rp : nullptr, b);
  return b.full();
}

}  // namespace detail

/// Degree 4..7 pieces of I^2 for I = Ann(F), F a nondegenerate cubic.
/// I^2 contains all of S_d for d >= 8.
///
/// With I generated by I_2, I_3 and a complement G_4 of S_1 I_3 in S_4:
///   (I^2)_4 = I_2 I_2,  (I^2)_5 = I_2 I_3,
///   (I^2)_6 = S_1 (I^2)_5 + I_3 I_3 + I_2 G_4,
///   (I^2)_7 = S_1 (I^2)_6 + I_3 G_4.
template <ExactField K>
std::vector<Subspace<K>> square_ideal_slices(const Form<K>& f, int max_degree = 7) {
  if (!is_nondegenerate_cubic(f, f.n_vars()))
    throw DegenerateCubicError("square ideal requires a nondegenerate cubic");
  if (max_degree < 4 || max_degree > 7) throw std::out_of_range("square ideal slices are computed for degrees 4..7");
  const K& k = f.field();
  const int n = f.n_vars();
  const auto i2 = ann_degree(f, 2).basis();
  const auto i3 = ann_degree(f, 3).basis();
  auto ambient = [n](int d) { return Ambient::graded(Ring::OperatorS, n, d); };

  std::optional<Matrix<K>> g4;
  auto complement_g4 = [&]() {
    // complement of S_1 I_3 inside S_4, as unit vectors
    EchelonBuilder<K> s1i3(k, count_monomials(n, 4));
    detail::insert_linear_multiples(k, n, 3, i3, s1i3);
    const auto space = Subspace<K>::from_builder(ambient(4), s1i3);
    std::vector<bool> is_pivot(count_monomials(n, 4), false);
    for (auto p : space.pivots()) is_pivot[p] = true;
    Matrix<K> out(k, 0, count_monomials(n, 4));
    std::vector<typename K::value_type> e(count_monomials(n, 4), k.zero());
    for (std::size_t c = 0; c < is_pivot.size(); ++c) {
      if (is_pivot[c]) continue;
      std::fill(e.begin(), e.end(), k.zero());
      e[c] = k.one();
      out.append_row(e);
    }
    return out;
  };

  std::vector<Subspace<K>> slices;
  for (int d = 4; d <= max_degree; ++d) {
    const Matrix<K>* prev = d >= 6 ? &slices.back().basis() : nullptr;
    if (d >= 6 && slices.back().codim() == 0) {
      slices.push_back(Subspace<K>::full(k, ambient(d)));
      continue;
    }
    if (d >= 6 && !g4) g4 = complement_g4();
    const Matrix<K>* g = g4 ? &*g4 : nullptr;
    if constexpr (is_rational_field_v<K>) {
      if (d >= 5 && detail::full_modulo_prime(n, d, i2, i3, g, prev)) {
        slices.push_back(Subspace<K>::full(k, ambient(d)));
        continue;
      }
    }
    EchelonBuilder<K> b(k, count_monomials(n, d));
    detail::insert_square_generators(k, n, d, i2, i3, g, prev, b);
    slices.push_back(Subspace<K>::from_builder(ambient(d), b));
  }
  return slices;
}

template <ExactField K>
Subspace<K> square_ideal_degree(const Form<K>& f, int d) {
  return square_ideal_slices(f, d).back();
}

/// dim (I^2)^perp_d for d = 4..max_degree; only ranks, no bases. Over Q,
/// ranks that are already maximal modulo a prime are taken from there.
template <ExactField K>
std::map<int, std::size_t> square_ideal_perp_dims(const Form<K>& f, int max_degree = 7) {
  std::map<int, std::size_t> out;
  if constexpr (is_rational_field_v<K>) {
    if (!is_nondegenerate_cubic(f, f.n_vars()))
      throw DegenerateCubicError("square ideal requires a nondegenerate cubic");
    const int n = f.n_vars();
    const auto i2 = ann_degree(f, 2).basis();
    const auto i3 = ann_degree(f, 3).basis();
    const auto& p = detail::probe_field();
    const auto r2 = detail::reduce_mod(i2, p), r3 = detail::reduce_mod(i3, p);
    if (r2 && r3) {
      const std::size_t products = i2.rows() * (i2.rows() + 1) / 2;
      EchelonBuilder<PrimeField> b4(p, count_monomials(n, 4));
      detail::insert_square_generators<PrimeField>(p, n, 4, *r2, *r3, nullptr, nullptr, b4);
      if (b4.rank() == products) {
        out[4] = count_monomials(n, 4) - products;
      } else {
        EchelonBuilder<K> q4(f.field(), count_monomials(n, 4));
        detail::insert_square_generators<K>(f.field(), n, 4, i2, i3, nullptr, nullptr, q4);
        out[4] = count_monomials(n, 4) - q4.rank();
      }
      if (max_degree == 4) return out;
      if (detail::full_modulo_prime(n, 5, i2, i3, nullptr, nullptr)) {
        for (int d = 5; d <= max_degree; ++d) out[d] = 0;
        return out;
      }
    }
  }
  const auto slices = square_ideal_slices(f, max_degree);
  for (std::size_t i = 0; i < slices.size(); ++i) out[static_cast<int>(i) + 4] = slices[i].codim();
  return out;
}

/// dim (I^2)^perp_4 = 126 - dim (I^2)_4 for six variables.
template <ExactField K>
std::size_t perp4_dim(const Form<K>& f) {
  return square_ideal_perp_dims(f, 4).at(4);
}

/// Tangent space dimension at Spec Apolar(F): dim S/I^2 - dim S/I.
template <ExactField K>
int tangent_dimension(const Form<K>& f) {
  const int n = f.n_vars();
  std::size_t total = 0;
  for (int d = 0; d <= 3; ++d) total += count_monomials(n, d);
  for (const auto& [d, v] : square_ideal_perp_dims(f, 7)) total += v;
  return static_cast<int>(total) - (2 * n + 2);
}

/// Singular point / restricted Iliev-Ranestad divisor test.
template <ExactField K>
bool member_E(const Form<K>& f) {
  return perp4_dim(f) > static_cast<std::size_t>(f.n_vars());
}

/// Rows: degree-4 coordinates of q_i q_j, i <= j, for a basis of quadrics.
template <ExactField K>
Matrix<K> ev_product_matrix(const std::vector<Form<K>>& quadric_basis) {
  if (quadric_basis.size() != 15) throw std::invalid_argument("ev_product_matrix expects 15 quadrics, got " + std::to_string(quadric_basis.size()));
  const K& k = quadric_basis.front().field();
  const int n = quadric_basis.front().n_vars();
  const auto s2 = Ambient::graded(Ring::OperatorS, n, 2);
  Matrix<K> q(k, 0, s2.dim());
  for (const auto& f : quadric_basis) {
    if (f.degree() != 2 || f.ring() != Ring::OperatorS) throw std::invalid_argument("ev_product_matrix expects quadrics in S");
    q.append_row(s2.coordinates(f.poly()));
  }
  Matrix<K> out(k, 0, count_monomials(n, 4));
  std::vector<typename K::value_type> prod;
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = i; j < q.rows(); ++j) {
      detail::dense_product<K>(k, n, 2, q.row(i), 2, q.row(j), prod);
      out.append_row(prod);
    }
  return out;
}

/// x_i (divided-power product) F for each variable: the space V.F.
template <ExactField K>
std::vector<Poly<K>> linear_multiples(const Form<K>& f) {
  std::vector<Poly<K>> out;
  for (int i = 0; i < f.n_vars(); ++i)
    out.push_back(dp_mul(Poly<K>::variable(f.field(), Ring::PolynomialP, f.n_vars(), i), f.poly()));
  return out;
}

enum class Verdict { NonSmoothableCertified, SmoothableBoundary, Degenerate };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::NonSmoothableCertified: return "NonSmoothableCertified";
    case Verdict::SmoothableBoundary: return "SmoothableBoundary";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "?";
}

struct AnalysisReport {
  HilbertFunctionRecord hf;
  std::optional<std::size_t> dim_I2;
  std::map<int, std::size_t> perp_dims;  // degrees 4..7
  std::optional<int> tangent_dim;
  bool on_E = false;
  Verdict verdict = Verdict::Degenerate;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Full pointwise analysis. Tangent dimension 76 (< 84, the dimension of
/// the smoothable component) certifies that Apolar(F) is not smoothable.
template <ExactField K>
AnalysisReport certify_nonsmoothable(const Form<K>& f) {
  AnalysisReport r;
  r.hf = hilbert_function(f);
  const int n = f.n_vars();
  if (f.degree() != 3 || !is_nondegenerate_cubic(f, n)) {
    r.verdict = Verdict::Degenerate;
    return r;
  }
  r.dim_I2 = ann_degree(f, 2).dim();
  r.perp_dims = square_ideal_perp_dims(f, 7);
  int tangent = -(2 * n + 2);
  for (int d = 0; d <= 3; ++d) tangent += static_cast<int>(count_monomials(n, d));
  for (const auto& [d, v] : r.perp_dims) tangent += static_cast<int>(v);
  r.tangent_dim = tangent;
  r.on_E = r.perp_dims.at(4) > static_cast<std::size_t>(n);
  // perp_4 >= n always; equality is the smooth case
  const int smooth_value = tangent - static_cast<int>(r.perp_dims.at(4)) + n;
  r.verdict = tangent == smooth_value ? Verdict::NonSmoothableCertified : Verdict::SmoothableBoundary;
  return r;
}

/// Whether F3 + Q and F3 + Q' generate the same S-module, i.e. define the
/// same point of the fiber over [F3].
template <ExactField K>
bool fiber_equivalence(const Form<K>& f3, const Form<K>& q, const Form<K>& q_prime) {
  if (f3.degree() != 3 || q.degree() != 2 || q_prime.degree() != 2)
    throw std::invalid_argument("fiber_equivalence expects a cubic and two quadrics");
  return apolar_module(f3.poly() + q.poly(), 3) == apolar_module(f3.poly() + q_prime.poly(), 3);
}

}  // namespace apolar

#endif  // APOLAR_HILBERT_HPP
