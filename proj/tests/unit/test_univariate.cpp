#include "catch_amalgamated.hpp"

#include "helpers.hpp"

using namespace apolar;
using namespace testing_helpers;

using U = Univariate<RationalField>;

TEST_CASE("interpolation recovers polynomials", "[univariate]") {
  const U p(Q, {3, 0, -2, 1});
  std::vector<std::pair<mpq_class, mpq_class>> samples;
  for (int u = 1; u <= 6; ++u) samples.emplace_back(u, p(mpq_class(u)));
  CHECK(interpolate(Q, samples, 3) == p);
  CHECK(interpolate(Q, samples, 5) == p);
  CHECK_THROWS_AS(interpolate(Q, samples, 1), InterpolationError);
  samples.push_back(samples.front());
  CHECK_THROWS_AS(interpolate(Q, samples, 3), InterpolationError);
}

TEST_CASE("division, gcd and multiplicities", "[univariate]") {
  const auto a = U::linear_factor(Q, 2), b = U::linear_factor(Q, -1);
  const auto p = a * a * a * b;
  CHECK(multiplicity_at(p, mpq_class(2)) == 3);
  CHECK(multiplicity_at(p, mpq_class(-1)) == 1);
  CHECK(multiplicity_at(p, mpq_class(0)) == 0);
  CHECK(gcd(p, a * b * b) == (a * b).monic());
  CHECK(p.exact_div(a * b) == a * a);
  CHECK_THROWS(p.exact_div(U::linear_factor(Q, 5)));
  const auto [q, r] = p.divmod(U(Q, {0, 0, 1}));
  CHECK(q * U(Q, {0, 0, 1}) + r == p);
}

TEST_CASE("square-free decomposition", "[univariate]") {
  const auto x = U::linear_factor(Q, 0);
  const U quad(Q, {1, 0, 1});  // u^2 + 1
  const auto p = (x * x * x * x * x).scaled(7) * quad * quad;
  const auto dec = squarefree_decomposition(p);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].second == 2);
  CHECK(dec[0].first == quad);
  CHECK(dec[1].second == 5);
  CHECK(dec[1].first == x);
  PrimeField small(5);
  CHECK_THROWS(squarefree_decomposition(Univariate<PrimeField>::monomial(small, 7, small.one())));
}

TEST_CASE("printing", "[univariate]") {
  CHECK(U::monomial(Q, 10, 512).to_string() == "512*u^10");
  CHECK(U(Q, {-1, 1}).to_string() == "u - 1");
  CHECK(U(Q).to_string() == "0");
}
