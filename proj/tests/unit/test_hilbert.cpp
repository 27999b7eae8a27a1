#include "catch_amalgamated.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

using namespace apolar;
using namespace testing_helpers;

TEST_CASE("perp dimensions of the square agree with the oracle", "[hilbert][oracle]") {
  std::vector<Form<RationalField>> cases{cubic(kReference), cubic(kAnnihilated), random_cubic(Q, 7),
                                         waring_sum(Q, random_points(Q, 8, 9)), gr26_section_cubic(Q, 3).cubic};
  for (const auto& f : cases) {
    const auto n = oracle::from_poly(f.poly());
    const auto dims = square_ideal_perp_dims(f, 5);
    CHECK(dims.at(4) == oracle::perp4(n, 6));
    CHECK(dims.at(5) == oracle::perp5(n, 6));
  }
}

TEST_CASE("reference cubics", "[hilbert]") {
  const auto annihilated = certify_nonsmoothable(cubic(kAnnihilated));
  CHECK(annihilated.hf.values == std::vector<std::size_t>{1, 6, 6, 1});
  CHECK(annihilated.dim_I2 == 15);
  CHECK(annihilated.perp_dims.at(4) == 6);
  CHECK(annihilated.tangent_dim == 76);
  CHECK_FALSE(annihilated.on_E);
  CHECK(annihilated.verdict == Verdict::NonSmoothableCertified);

  // as printed, the x0^2*x4 cubic has a much larger perp in degree 4
  const auto printed = certify_nonsmoothable(cubic(kReference));
  CHECK(printed.hf.values == std::vector<std::size_t>{1, 6, 6, 1});
  CHECK(printed.perp_dims.at(4) == 15);
  CHECK(printed.on_E);
  CHECK(printed.verdict == Verdict::SmoothableBoundary);

  const auto degenerate = certify_nonsmoothable(cubic("x5^3"));
  CHECK(degenerate.verdict == Verdict::Degenerate);
  CHECK_FALSE(degenerate.tangent_dim.has_value());
}

TEST_CASE("generic cubics are smooth points", "[hilbert]") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto f = random_cubic(Q, seed);
    CHECK(perp4_dim(f) == 6);
    CHECK(tangent_dimension(f) == 76);
    CHECK_FALSE(member_E(f));
  }
}

TEST_CASE("square slices contain the products and are orthogonal to linear multiples", "[hilbert]") {
  for (const auto& f : {cubic(kAnnihilated), random_cubic(Q, 4)}) {
    const auto slices = square_ideal_slices(f, 7);
    REQUIRE(slices.size() == 4);
    const auto i2 = ann_degree(f, 2).polynomials();
    for (std::size_t a = 0; a < i2.size(); a += 4)
      for (std::size_t b = a; b < i2.size(); b += 3) CHECK(slices[0].contains(mul_s(i2[a], i2[b])));
    // every element of (I^2)_4 kills the degree-4 multiples x_i F
    for (const auto& s : slices[0].polynomials())
      for (const auto& g : linear_multiples(f)) CHECK(contract(s, g).is_zero());
    const auto dims = square_ideal_perp_dims(f, 7);
    for (int d = 4; d <= 7; ++d) CHECK(dims.at(d) == slices[d - 4].codim());
  }
}

TEST_CASE("prime field results match rational ones", "[hilbert]") {
  const auto f = cubic(kAnnihilated);
  for (const auto& k : test_primes()) {
    const auto r = certify_nonsmoothable(convert(f, k));
    CHECK(r == certify_nonsmoothable(f));
  }
}

TEST_CASE("evaluation matrix of the quadric family", "[hilbert]") {
  std::vector<Form<RationalField>> qs;
  for (const auto& q : kFixedQuadrics) qs.emplace_back(sa(q), 2);
  qs.emplace_back(sa("a3*a5 + a0*a1 - a5^2"), 2);
  const auto ev = ev_product_matrix(qs);
  CHECK(ev.rows() == 120);
  CHECK(ev.cols() == 126);
  CHECK(rank(ev) == 120);
  qs.pop_back();
  CHECK_THROWS(ev_product_matrix(qs));
}

TEST_CASE("fiber equivalence", "[hilbert]") {
  const auto f3 = cubic(kAnnihilated);
  const Form<RationalField> q(px("x0^2 - x2*x5"), 2), zero(px("0"), 2);
  CHECK(fiber_equivalence(f3, q, q));
  CHECK(fiber_equivalence(f3, zero, zero));
  CHECK_FALSE(fiber_equivalence(f3, q, zero));
}
