#include "catch_amalgamated.hpp"

#include "helpers.hpp"

using namespace apolar;
using namespace testing_helpers;

TEST_CASE("prime field arithmetic matches 128-bit reference", "[field]") {
  const std::uint64_t p = next_prime((1ULL << 61) + 1001);
  PrimeField k(p);
  CounterRng rng(42);
  for (int i = 0; i < 2000; ++i) {
    const auto a = static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(p - 1)));
    const auto b = static_cast<std::uint64_t>(rng.uniform_int(0, static_cast<std::int64_t>(p - 1)));
    const auto ma = k.from_uint(a), mb = k.from_uint(b);
    CHECK(k.to_uint(k.add(ma, mb)) == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + b) % p));
    CHECK(k.to_uint(k.sub(ma, mb)) == static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) + p - b) % p));
    CHECK(k.to_uint(k.mul(ma, mb)) == static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p));
    if (a != 0) CHECK(k.to_uint(k.mul(ma, k.inv(ma))) == 1);
  }
}

TEST_CASE("prime field rejects bad moduli", "[field]") {
  CHECK_THROWS_AS(PrimeField(3), FieldError);
  CHECK_THROWS_AS(PrimeField(2), FieldError);
  CHECK_THROWS_AS(PrimeField(91), FieldError);
  CHECK_THROWS_AS(PrimeField(next_prime(1ULL << 62)), FieldError);
  CHECK_NOTHROW(PrimeField(5));
}

TEST_CASE("rationals reduce mod p unless the denominator vanishes", "[field]") {
  PrimeField k(7);
  CHECK(k.to_uint(k.from_rational(mpq_class(1, 2))) == 4);
  CHECK(k.to_uint(k.from_int(-1)) == 6);
  CHECK_THROWS_AS(k.from_rational(mpq_class(1, 14)), FieldError);
  CHECK_THROWS_AS(k.inv(k.zero()), std::domain_error);
  CHECK_THROWS_AS(Q.inv(Q.zero()), std::domain_error);
}

TEST_CASE("binomials and powers", "[field]") {
  CHECK(binomial(Q, 6, 3) == 20);
  CHECK(power(Q, mpq_class(2, 3), 3) == mpq_class(8, 27));
  PrimeField k(5);
  CHECK_THROWS_AS(binomial(k, 5, 1), FieldError);
  CHECK(k.to_uint(binomial(k, 4, 2)) == 1);
}

TEST_CASE("counter rng is reproducible and splits independently of consumption", "[random]") {
  CounterRng a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  CounterRng c(7);
  CHECK(a.split(3).next() == c.split(3).next());
  CHECK(c.split(3).next() != c.split(4).next());
  for (int i = 0; i < 1000; ++i) {
    const auto x = a.uniform_int(-3, 3);
    CHECK(x >= -3);
    CHECK(x <= 3);
  }
  CounterRng r(1);
  const auto primes = random_primes(r, 3);
  REQUIRE(primes.size() == 3);
  for (auto p : primes) {
    CHECK(is_prime(p));
    CHECK(p >= (1ULL << 61));
    CHECK(p < (1ULL << 62));
  }
  CHECK(primes[0] != primes[1]);
}
