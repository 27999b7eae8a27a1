#include "catch_amalgamated.hpp"

#include "helpers.hpp"

using namespace apolar;
using namespace testing_helpers;

TEST_CASE("parser accepts the grammar", "[parse]") {
  const auto f = px("3/4*x0^2*x1 - x2 + 5");
  CHECK(f.coefficient(Monomial(6, {2, 1, 0, 0, 0, 0})) == mpq_class(3, 4));
  CHECK(f.coefficient(Monomial(6, {0, 0, 1, 0, 0, 0})) == -1);
  CHECK(f.coefficient(Monomial(6)) == 5);
  CHECK(px(" x0 * x0 ") == px("x0^2"));
  CHECK(px("x1 - x1").is_zero());
  CHECK(px("2*3*x0") == px("6*x0"));
}

TEST_CASE("parser errors", "[parse]") {
  CHECK_THROWS_AS(px(""), ParseError);
  CHECK_THROWS_AS(px("a0"), ParseError);
  CHECK_THROWS_AS(sa("x0"), ParseError);
  CHECK_THROWS_AS(px("x6"), ParseError);
  CHECK_THROWS_AS(px("x0 x1"), ParseError);
  CHECK_THROWS_AS(px("x0 + $"), ParseError);
  CHECK_THROWS_AS(px("x0 +"), ParseError);
  CHECK_THROWS_AS(px("1/0*x0"), std::exception);
  try {
    px("x0 + x9");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("format and parse round trip", "[parse][property]") {
  CounterRng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Poly<RationalField> p(Q, Ring::PolynomialP, 6);
    const int terms = static_cast<int>(rng.uniform_int(0, 6));
    for (int t = 0; t < terms; ++t) {
      Monomial m(6);
      for (int i = 0; i < 6; ++i) m.set(i, static_cast<int>(rng.uniform_int(0, 2)));
      mpq_class c(static_cast<long>(rng.uniform_int(-20, 20)), static_cast<unsigned long>(rng.uniform_int(1, 5)));
      c.canonicalize();
      p.add_term(m, c);
    }
    const auto text = format_poly(p);
    CHECK(px(text) == p);
    CHECK(format_poly(px(text)) == text);
  }
  CHECK(format_poly(px("0")) == "0");
  CHECK(format_poly(px("x5^3 - x0*x1*x2 + 1/2")) == "-x0*x1*x2 + x5^3 + 1/2");
}

TEST_CASE("prime field printing uses residues", "[parse]") {
  PrimeField k(7);
  CHECK(format_poly(parse_poly("-x0 + 1/2*x1", k, Ring::PolynomialP, 2)) == "6*x0 + 4*x1");
}

TEST_CASE("parametric polynomials", "[parse]") {
  const auto f = parse_parametric("t*x1^2 + x1*x2", Q, Ring::PolynomialP, 3, 't');
  CHECK(f.parameter_degree() == 1);
  CHECK(f.specialize(mpq_class(1)) == px("x1^2 + x1*x2", 3));
  CHECK(f.specialize(mpq_class(0)) == px("x1*x2", 3));
  const auto g = parse_parametric("a3*a5 + u*a0*a1 - u*a5^2", Q, Ring::OperatorS, 6, 'u');
  CHECK(g.coefficients()[1] == sa("a0*a1 - a5^2"));
  CHECK_THROWS(parse_parametric("x0", Q, Ring::PolynomialP, 2, 'x'));
}
