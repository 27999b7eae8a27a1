#ifndef APOLAR_FIELD_HPP
#define APOLAR_FIELD_HPP

#include <gmp.h>
#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace apolar {

class FieldError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class FieldKind { Rationals, PrimeField };

/// Runtime description of a coefficient field, used at API boundaries
/// (CLI, reports). Computation is done through the typed field contexts
/// below.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t modulus = 0;

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint64_t p) { return {FieldKind::PrimeField, p}; }

  std::string name() const {
    return kind == FieldKind::Rationals ? std::string("Q")
                                        : "F_" + std::to_string(modulus);
  }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

inline bool is_prime(std::uint64_t n) {
  mpz_class z(std::to_string(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

/// Smallest prime >= n.
inline std::uint64_t next_prime(std::uint64_t n) {
  mpz_class z(std::to_string(n - 1));
  mpz_nextprime(z.get_mpz_t(), z.get_mpz_t());
  return std::stoull(z.get_str());
}

/// A field context: owns whatever is needed to do arithmetic on its
/// `value_type` (for F_p, the modulus and Montgomery constants).
template <class K>
concept ExactField = requires(const K& k, const typename K::value_type& a,
                              const mpq_class& q, long long n) {
  typename K::value_type;
  { k.zero() } -> std::same_as<typename K::value_type>;
  { k.one() } -> std::same_as<typename K::value_type>;
  { k.from_int(n) } -> std::same_as<typename K::value_type>;
  { k.from_rational(q) } -> std::same_as<typename K::value_type>;
  { k.add(a, a) } -> std::same_as<typename K::value_type>;
  { k.sub(a, a) } -> std::same_as<typename K::value_type>;
  { k.mul(a, a) } -> std::same_as<typename K::value_type>;
  { k.neg(a) } -> std::same_as<typename K::value_type>;
  { k.inv(a) } -> std::same_as<typename K::value_type>;
  { k.is_zero(a) } -> std::same_as<bool>;
  { k.equal(a, a) } -> std::same_as<bool>;
  { k.characteristic() } -> std::same_as<std::uint64_t>;
  { k.to_string(a) } -> std::same_as<std::string>;
  { k.spec() } -> std::same_as<FieldSpec>;
};

class RationalField {
 public:
  using value_type = mpq_class;

  value_type zero() const { return value_type(0); }
  value_type one() const { return value_type(1); }
  value_type from_int(long long n) const {
    return value_type(mpz_class(std::to_string(n)));
  }
  value_type from_rational(const mpq_class& q) const { return q; }

  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type inv(const value_type& a) const {
    if (sgn(a) == 0) throw FieldError("division by zero");
    return 1 / a;
  }
  value_type div(const value_type& a, const value_type& b) const {
    return mul(a, inv(b));
  }

  bool is_zero(const value_type& a) const { return sgn(a) == 0; }
  bool equal(const value_type& a, const value_type& b) const { return a == b; }
  std::uint64_t characteristic() const { return 0; }
  std::string to_string(const value_type& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }

  friend bool operator==(const RationalField&, const RationalField&) {
    return true;
  }
};

/// Z/p for a prime 3 < p < 2^62. Elements are stored in Montgomery form
/// (x * 2^64 mod p); zero maps to zero, so is_zero needs no conversion.
class PrimeField {
 public:
  using value_type = std::uint64_t;
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p <= 3 || p >= kMaxModulus || !is_prime(p))
      throw FieldError("modulus must be a prime with 3 < p < 2^62, got " +
                       std::to_string(p));
    std::uint64_t inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_pinv_ = ~inv + 1;
    const unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % p;
    r2_ = static_cast<std::uint64_t>((r * r) % p);
  }

  std::uint64_t modulus() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return from_uint(1); }
  value_type from_uint(std::uint64_t x) const { return mul(x % p_, r2_); }
  value_type from_int(long long n) const {
    if (n >= 0) return from_uint(static_cast<std::uint64_t>(n));
    const std::uint64_t m = static_cast<std::uint64_t>(-(n + 1)) + 1;
    return neg(from_uint(m));
  }
  value_type from_mpz(const mpz_class& z) const {
    mpz_class r;
    mpz_class pz(std::to_string(p_));
    mpz_mod(r.get_mpz_t(), z.get_mpz_t(), pz.get_mpz_t());
    return from_uint(std::stoull(r.get_str()));
  }
  value_type from_rational(const mpq_class& q) const {
    const value_type den = from_mpz(q.get_den());
    if (den == 0)
      throw FieldError("coefficient " + q.get_str() + " is not defined mod " +
                       std::to_string(p_));
    return mul(from_mpz(q.get_num()), inv(den));
  }
  std::uint64_t to_uint(value_type a) const { return redc(a); }

  value_type add(value_type a, value_type b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw FieldError("division by zero");
    // extended Euclid on the plain residue, then back to Montgomery form
    __int128 t = 0, new_t = 1;
    __int128 r = p_, new_r = redc(a);
    while (new_r != 0) {
      const __int128 q = r / new_r;
      __int128 tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return from_uint(static_cast<std::uint64_t>(t));
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  bool is_zero(value_type a) const { return a == 0; }
  bool equal(value_type a, value_type b) const { return a == b; }
  std::uint64_t characteristic() const { return p_; }
  std::string to_string(value_type a) const { return std::to_string(redc(a)); }
  FieldSpec spec() const { return FieldSpec::prime(p_); }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.p_ == b.p_;
  }

 private:
  std::uint64_t redc(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_pinv_;
    const std::uint64_t u = static_cast<std::uint64_t>(
        (t + static_cast<unsigned __int128>(m) * p_) >> 64);
    return u >= p_ ? u - p_ : u;
  }

  std::uint64_t p_;
  std::uint64_t neg_pinv_ = 0;
  std::uint64_t r2_ = 0;
};

static_assert(ExactField<RationalField>);
static_assert(ExactField<PrimeField>);

template <ExactField K>
inline constexpr bool is_rational_field_v = std::same_as<K, RationalField>;

/// Binomial coefficient as a field element; throws when the characteristic
/// divides it.
template <ExactField K>
typename K::value_type binomial(const K& field, unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  auto v = field.from_rational(mpq_class(b));
  if (field.is_zero(v))
    throw FieldError("characteristic " + std::to_string(field.characteristic()) +
                     " divides binomial(" + std::to_string(n) + "," +
                     std::to_string(k) + ")");
  return v;
}

template <ExactField K>
typename K::value_type power(const K& field, typename K::value_type base,
                             unsigned e) {
  auto result = field.one();
  while (e > 0) {
    if (e & 1u) result = field.mul(result, base);
    base = field.mul(base, base);
    e >>= 1u;
  }
  return result;
}

}  // namespace apolar

#endif  // APOLAR_FIELD_HPP
