#include "catch_amalgamated.hpp"

#include "helpers.hpp"

using namespace apolar;
using namespace testing_helpers;

namespace {

// u*G + x5^3, annihilated by the reference family
Form<RationalField> f1() { return cubic(kAnnihilated); }
Form<RationalField> f2() { return cubic("x5^3"); }

}  // namespace

TEST_CASE("supplied family gives u^10 in both charts", "[pencil]") {
  const auto fam = parse_quadric_family(reference_family_lines(), Q);
  CHECK(fam.nonconstant_count() == 1);
  const auto p = pencil_profile(f1(), f2(), std::optional{fam});
  CHECK(p.family_supplied);
  CHECK(p.family_in_annihilator);
  CHECK(p.degree_bound == 16);
  CHECK(p.charts_agree);
  REQUIRE(p.charts.size() == 2);
  for (const auto& c : p.charts) CHECK(c.normalized == Univariate<RationalField>::monomial(Q, 10, 512));
  CHECK(p.total_degree == 10);
  CHECK(p.multiplicity_at_zero == 10);
  CHECK(p.distinct_roots == 1);
}

TEST_CASE("computed family matches the supplied one", "[pencil]") {
  const auto a = f1(), b = f2();
  const PrimeField k = test_primes().front();
  const auto supplied = pencil_profile(convert(a, k), convert(b, k), std::optional{convert(parse_quadric_family(reference_family_lines(), Q), k)});
  const auto computed = pencil_profile(convert(a, k), convert(b, k), std::optional<QuadricFamily<PrimeField>>{});
  CHECK(factor_pattern(supplied) == factor_pattern(computed));
  CHECK(computed.multiplicity_at_zero == 10);
  CHECK_FALSE(computed.family_supplied);
  CHECK(computed.saturation == "u^5");
}

TEST_CASE("generic pencil is a ninth power of a degree-ten form", "[pencil][slow]") {
  const PrimeField k = test_primes()[1];
  const auto p = pencil_profile(convert(random_cubic(Q, 1), k), convert(random_cubic(Q, 2), k),
                                std::optional<QuadricFamily<PrimeField>>{});
  CHECK_FALSE(p.identically_zero);
  CHECK(p.charts_agree);
  CHECK(p.total_degree == 90);
  REQUIRE(p.factors.size() == 1);
  CHECK(p.factors[0].degree == 10);
  CHECK(p.factors[0].multiplicity == 9);
}

TEST_CASE("pencil errors", "[pencil]") {
  CHECK_THROWS_AS(pencil_profile(f1(), f1(), std::optional<QuadricFamily<RationalField>>{}), PencilError);
  CHECK_THROWS(parse_quadric_family({"a0*a1*a2"}, Q));
  CHECK_THROWS(parse_quadric_family({"u^2*a0^2"}, Q));
  const auto fam = parse_quadric_family(reference_family_lines(), Q);
  // a family that does not annihilate the pencil is reported, not trusted
  const auto p = pencil_profile(cubic(kReference), f2(), std::optional{fam});
  CHECK_FALSE(p.family_in_annihilator);
}
