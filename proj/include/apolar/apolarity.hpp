#ifndef APOLAR_APOLARITY_HPP
#define APOLAR_APOLARITY_HPP

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "apolar/linalg.hpp"
#include "apolar/parse.hpp"
#include "apolar/poly.hpp"
#include "apolar/subspace.hpp"

namespace apolar {

class ApolarityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Matrix of sigma -> sigma o F from S_r (rows, degree-r monomials) to
/// P_{d-r} (columns). Entry (a, b) is the coefficient of x^(a+b) in F.
template <ExactField K>
Matrix<K> catalecticant(const Form<K>& f, int r) {
  if (f.ring() != Ring::PolynomialP) throw RingMismatch("catalecticant of an operator");
  const int d = f.degree();
  if (r < 0 || r > d) throw std::out_of_range("catalecticant order " + std::to_string(r) + " outside [0, " + std::to_string(d) + "]");
  const int n = f.n_vars();
  const auto& rows = monomial_basis(n, r);
  const auto& cols = monomial_basis(n, d - r);
  const auto& table = multiplication_table(n, r, d - r);
  const auto dense = Ambient::graded(Ring::PolynomialP, n, d).coordinates(f.poly());
  Matrix<K> m(f.field(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = dense[table(i, j)];
  return m;
}

/// Degree-r piece of Ann(F); all of S_r when r > deg F.
template <ExactField K>
Subspace<K> ann_degree(const Form<K>& f, int r) {
  const auto ambient = Ambient::graded(Ring::OperatorS, f.n_vars(), r);
  if (r > f.degree()) return Subspace<K>::full(f.field(), ambient);
  return kernel_basis(catalecticant(f, r).transpose(), ambient);
}

struct HilbertFunctionRecord {
  std::vector<std::size_t> values;  // h(0..d)
  int socle_degree = 0;

  std::size_t length() const {
    std::size_t total = 0;
    for (auto v : values) total += v;
    return total;
  }
  friend bool operator==(const HilbertFunctionRecord&, const HilbertFunctionRecord&) = default;
};

template <ExactField K>
HilbertFunctionRecord hilbert_function(const Form<K>& f) {
  HilbertFunctionRecord h;
  h.socle_degree = f.degree();
  for (int r = 0; r <= f.degree(); ++r) h.values.push_back(rank(catalecticant(f, r)));
  return h;
}

/// Every linear form is a partial of F, i.e. HF = (1, n, n, 1).
template <ExactField K>
bool is_nondegenerate_cubic(const Form<K>& f, int n = 6) {
  if (f.degree() != 3 || f.n_vars() != n || f.ring() != Ring::PolynomialP) return false;
  return rank(catalecticant(f, 1)) == static_cast<std::size_t>(n);
}

/// The S-module S o f as a subspace of P_{<= deg f}.
template <ExactField K>
Subspace<K> apolar_module(const Poly<K>& f, int max_degree) {
  if (f.ring() != Ring::PolynomialP) throw RingMismatch("apolar module of an operator");
  const auto ambient = Ambient::up_to(Ring::PolynomialP, f.n_vars(), max_degree);
  EchelonBuilder<K> b(f.field(), ambient.dim());
  if (!f.is_zero()) {
    for (int e = 0; e <= f.degree(); ++e)
      for (const auto& m : monomial_basis(f.n_vars(), e).monomials())
        b.insert(ambient.coordinates(contract(Poly<K>::term(f.field(), Ring::OperatorS, m, f.field().one()), f)));
  }
  return Subspace<K>::from_builder(ambient, b);
}

/// dim S o f, the length of Apolar(f); zero for f = 0.
template <ExactField K>
std::size_t apolar_length(const Poly<K>& f) {
  if (f.is_zero()) return 0;
  return apolar_module(f, f.degree()).dim();
}

/// The cubic G, unique up to scalar, with q o G = 0 for all given quadrics.
/// Normalized so its first coefficient in graded-lex order is 1.
template <ExactField K>
Form<K> dual_socle_generator(const std::vector<Form<K>>& quadrics, int n = 6) {
  if (quadrics.empty()) throw ApolarityError("dual_socle_generator needs at least one quadric");
  const K& k = quadrics.front().field();
  const auto s3 = Ambient::graded(Ring::OperatorS, n, 3);
  EchelonBuilder<K> b(k, s3.dim());
  for (const auto& q : quadrics) {
    if (q.degree() != 2 || q.ring() != Ring::OperatorS || q.n_vars() != n)
      throw std::invalid_argument("dual_socle_generator expects quadrics in S");
    for (int i = 0; i < n; ++i) b.insert(s3.coordinates(mul_s(Poly<K>::variable(k, Ring::OperatorS, n, i), q.poly())));
  }
  const auto perp = Subspace<K>::from_builder(s3, b).perp();
  if (perp.dim() != 1)
    throw ApolarityError("common cubic perp has dimension " + std::to_string(perp.dim()) + ", expected 1");
  return Form<K>(perp.polynomials().front(), 3);
}

template <ExactField K>
struct TranslatedApolar {
  std::vector<Poly<K>> generators;
  std::size_t length = 0;
  std::vector<typename K::value_type> support;
};

/// Generators of the apolar ideal of f moved to the point w: each
/// generator tau of Ann(f) becomes tau(a - w), which vanishes at w. The
/// reported length is the colength of the translated generators.
template <ExactField K>
TranslatedApolar<K> translated_apolar(const Poly<K>& f, std::span<const typename K::value_type> w) {
  const K& k = f.field();
  const int n = f.n_vars();
  if (static_cast<int>(w.size()) != n) throw std::invalid_argument("translation vector has wrong length");
  TranslatedApolar<K> out;
  out.support.assign(w.begin(), w.end());
  const int top = f.is_zero() ? -1 : f.degree();

  // Ann(f) = ker(S_{<=top} -> P_{<=top}) + m^{top+1}
  std::vector<Poly<K>> ann;
  if (top >= 0) {
    const auto src = Ambient::up_to(Ring::OperatorS, n, top);
    const auto dst = Ambient::up_to(Ring::PolynomialP, n, top);
    Matrix<K> map(k, src.dim(), dst.dim());
    std::size_t row = 0;
    for (int e = 0; e <= top; ++e)
      for (const auto& m : monomial_basis(n, e).monomials()) {
        const auto image = dst.coordinates(contract(Poly<K>::term(k, Ring::OperatorS, m, k.one()), f));
        std::copy(image.begin(), image.end(), map.row(row++).begin());
      }
    for (auto& p : kernel_basis(map.transpose(), src).polynomials()) ann.push_back(std::move(p));
  }
  for (const auto& m : monomial_basis(n, top + 1).monomials())
    ann.push_back(Poly<K>::term(k, Ring::OperatorS, m, k.one()));

  std::vector<typename K::value_type> minus_w;
  for (const auto& x : w) minus_w.push_back(k.neg(x));
  for (const auto& g : ann) out.generators.push_back(substitute_shift(g, std::span<const typename K::value_type>(minus_w)));

  // Affine substitutions preserve the degree filtration, and the generators
  // already span J in degrees <= top + 1, so this quotient is S/J.
  const auto amb = Ambient::up_to(Ring::OperatorS, n, top + 1);
  EchelonBuilder<K> b(k, amb.dim());
  for (const auto& g : out.generators) b.insert(amb.coordinates(g));
  out.length = amb.dim() - b.rank();
  return out;
}

enum class FamilyFlag { Constant, Jump };

inline const char* family_flag_name(FamilyFlag f) { return f == FamilyFlag::Constant ? "CONSTANT" : "JUMP"; }

template <ExactField K>
struct FamilyProfile {
  std::vector<std::pair<typename K::value_type, std::size_t>> lengths;
  FamilyFlag flag = FamilyFlag::Constant;
};

/// apolar_length of each specialization of a one-parameter family.
template <ExactField K>
FamilyProfile<K> family_length_profile(const ParametricPoly<K>& family,
                                       const std::vector<typename K::value_type>& samples) {
  FamilyProfile<K> out;
  for (const auto& t : samples) out.lengths.emplace_back(t, apolar_length(family.specialize(t)));
  for (const auto& [t, len] : out.lengths)
    if (len != out.lengths.front().second) out.flag = FamilyFlag::Jump;
  return out;
}

/// Maximal length 2n + 2 holds exactly when the top cubic form is
/// nondegenerate; this always returns true for a correct implementation.
template <ExactField K>
bool leading_form_check(const Poly<K>& f) {
  if (f.degree() != 3) throw std::invalid_argument("leading_form_check expects a polynomial of degree 3");
  const int n = f.n_vars();
  const bool maximal = apolar_length(f) == static_cast<std::size_t>(2 * n + 2);
  return maximal == is_nondegenerate_cubic(Form<K>(f.homogeneous_part(3), 3), n);
}

}  // namespace apolar

#endif  // APOLAR_APOLARITY_HPP
