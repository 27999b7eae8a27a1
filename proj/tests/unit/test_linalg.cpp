#include "catch_amalgamated.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

using namespace apolar;
using namespace testing_helpers;

namespace {

Matrix<RationalField> random_int_matrix(CounterRng& rng, std::size_t r, std::size_t c, int bound, int zero_bias) {
  Matrix<RationalField> m(Q, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = rng.uniform_int(0, 9) < zero_bias ? 0 : rng.uniform_int(-bound, bound);
  return m;
}

std::vector<std::vector<oracle::u64>> to_oracle(const Matrix<RationalField>& m) {
  std::vector<std::vector<oracle::u64>> out(m.rows(), std::vector<oracle::u64>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = oracle::from_q(m(i, j));
  return out;
}

}  // namespace

TEST_CASE("rank agrees with the naive oracle", "[linalg][oracle]") {
  CounterRng rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform_int(1, 9));
    const auto c = static_cast<std::size_t>(rng.uniform_int(1, 9));
    const auto m = random_int_matrix(rng, r, c, 3, 6);
    CHECK(rank(m) == oracle::rank(to_oracle(m)));
    PrimeField k(oracle::P);
    Matrix<PrimeField> mp(k, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) mp(i, j) = k.from_rational(m(i, j));
    CHECK(rank(mp) == oracle::rank(to_oracle(m)));
  }
}

TEST_CASE("kernel is annihilated and has the right dimension", "[linalg]") {
  CounterRng rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_int_matrix(rng, 5, 8, 4, 5);
    const auto ker = kernel_matrix(m);
    CHECK(ker.rows() + rank(m) == m.cols());
    const auto prod = m * ker.transpose();
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
  }
}

TEST_CASE("determinant is multiplicative", "[linalg][property]") {
  CounterRng rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_int_matrix(rng, 5, 5, 5, 2), b = random_int_matrix(rng, 5, 5, 5, 2);
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
  Matrix<RationalField> m(Q, 2, 2);
  m(0, 0) = 1, m(0, 1) = 2, m(1, 0) = 3, m(1, 1) = 4;
  CHECK(determinant(m) == -2);
  CHECK(determinant(Matrix<RationalField>::identity(Q, 4)) == 1);
}

TEST_CASE("rref is reduced", "[linalg]") {
  CounterRng rng(24);
  const auto m = random_int_matrix(rng, 6, 7, 5, 3);
  const auto r = rref(m);
  REQUIRE(r.rank == rank(m));
  for (std::size_t i = 0; i < r.rank; ++i) {
    CHECK(r.reduced(i, r.pivots[i]) == 1);
    for (std::size_t j = 0; j < r.rank; ++j)
      if (j != i) CHECK(r.reduced(j, r.pivots[i]) == 0);
  }
}

TEST_CASE("perp is an involution and dimensions add up", "[linalg][property]") {
  const auto amb = Ambient::graded(Ring::OperatorS, 4, 2);
  CounterRng rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = Subspace<RationalField>::span_rows(amb, random_int_matrix(rng, 4, amb.dim(), 3, 5));
    const auto b = Subspace<RationalField>::span_rows(amb, random_int_matrix(rng, 5, amb.dim(), 3, 5));
    CHECK(a.perp().perp() == a);
    CHECK(a.perp().dim() == a.codim());
    CHECK(a.perp().ambient().ring == Ring::PolynomialP);
    const auto s = sum(a, b), i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("perp pairs through contraction", "[linalg]") {
  const auto amb = Ambient::graded(Ring::OperatorS, 3, 2);
  const auto v = Subspace<RationalField>::span(Q, amb, {sa("a0^2 - a1*a2", 3), sa("a0*a1", 3)});
  for (const auto& f : v.perp().polynomials())
    for (const auto& s : v.polynomials()) CHECK(contract(s, f).is_zero());
}

TEST_CASE("subspace checks ambient", "[linalg]") {
  const auto a = Subspace<RationalField>::full(Q, Ambient::graded(Ring::OperatorS, 3, 2));
  const auto b = Subspace<RationalField>::full(Q, Ambient::graded(Ring::OperatorS, 3, 3));
  CHECK_THROWS(sum(a, b));
  CHECK(Subspace<RationalField>::zero(Q, Ambient::graded(Ring::OperatorS, 3, 2)).perp() ==
        Subspace<RationalField>::full(Q, Ambient::graded(Ring::PolynomialP, 3, 2)));
}
