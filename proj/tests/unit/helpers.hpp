#pragma once

#include <string>
#include <vector>

#include "apolar/apolar.hpp"
#include "apolar/cli.hpp"

namespace testing_helpers {

using apolar::Form;
using apolar::Poly;
using apolar::PrimeField;
using apolar::RationalField;
using apolar::Ring;

inline const RationalField Q{};

/// Three fixed large primes for cross-field checks.
inline std::vector<PrimeField> test_primes() {
  return {PrimeField(apolar::next_prime((1ULL << 61) + 17)), PrimeField(apolar::next_prime((1ULL << 61) + 123457)),
          PrimeField(apolar::next_prime(1000000000039ULL))};
}

inline Poly<RationalField> px(const std::string& s, int n = 6) { return apolar::parse_poly(s, Q, Ring::PolynomialP, n); }
inline Poly<RationalField> sa(const std::string& s, int n = 6) { return apolar::parse_poly(s, Q, Ring::OperatorS, n); }

template <apolar::ExactField K = RationalField>
Form<K> cubic(const std::string& s, const K& k = K{}) {
  return Form<K>(apolar::parse_poly(s, k, Ring::PolynomialP, 6), 3);
}

// The reference cubic and the 15 quadrics listed alongside it.
inline const std::string kReference = "x0*x1*x3 - x0^2*x4 + x1*x2^2 + x2*x4*x5 + x3*x5^2";
// The cubic those quadrics actually annihilate (x0*x4^2 in place of x0^2*x4).
inline const std::string kAnnihilated = "x0*x1*x3 - x0*x4^2 + x1*x2^2 + x2*x4*x5 + x3*x5^2";

inline const std::vector<std::string> kFixedQuadrics = {
    "a0^2",  "a0*a2", "-a0*a3 + a2^2", "a0*a4 + a2*a5", "a0*a5", "a1^2",  "a1*a2 - a4*a5",
    "a1*a3 + a4^2", "a1*a4", "a1*a5", "a2*a3", "a2*a4 - a3*a5", "a3^2", "a3*a4"};
inline const std::string kMovingQuadric = "a3*a5 + u*a0*a1 - u*a5^2";

inline std::vector<std::string> reference_family_lines() {
  auto lines = kFixedQuadrics;
  lines.push_back(kMovingQuadric);
  return lines;
}

}  // namespace testing_helpers
