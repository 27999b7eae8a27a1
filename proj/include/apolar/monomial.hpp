#ifndef APOLAR_MONOMIAL_HPP
#define APOLAR_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace apolar {

inline constexpr int kMaxVars = 16;

/// Exponent vector in at most kMaxVars variables with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int n_vars) : n_(check_vars(n_vars)) {}
  Monomial(int n_vars, std::span<const int> exponents) : n_(check_vars(n_vars)) {
    if (static_cast<int>(exponents.size()) != n_vars)
      throw std::invalid_argument("exponent vector length differs from n_vars");
    for (int i = 0; i < n_vars; ++i) set(i, exponents[i]);
  }
  Monomial(int n_vars, std::initializer_list<int> exponents)
      : Monomial(n_vars, std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(int n_vars, int i, int power = 1) {
    Monomial m(n_vars);
    m.set(i, power);
    return m;
  }

  int n_vars() const { return n_; }
  int degree() const { return deg_; }
  int operator[](int i) const { return exp_[i]; }

  void set(int i, int e) {
    if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
    if (e < 0 || e > 255) throw std::out_of_range("exponent out of range");
    deg_ = static_cast<std::uint16_t>(deg_ - exp_[i] + e);
    exp_[i] = static_cast<std::uint8_t>(e);
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < n_; ++i)
      if (exp_[i] > o.exp_[i]) return false;
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a.n_);
    for (int i = 0; i < a.n_; ++i) m.set(i, a.exp_[i] + b.exp_[i]);
    return m;
  }

  /// Exponent difference; caller guarantees b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial m(a.n_);
    for (int i = 0; i < a.n_; ++i) m.set(i, a.exp_[i] - b.exp_[i]);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.n_ == b.n_ && a.exp_ == b.exp_;
  }

  /// Graded lexicographic with x0 > x1 > ... ; true when a is smaller.
  friend bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ < b.deg_;
    for (int i = 0; i < a.n_; ++i)
      if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i];
    return false;
  }

  std::size_t hash() const {
    std::size_t h = n_;
    for (int i = 0; i < n_; ++i) h = h * 1000003u + exp_[i];
    return h;
  }

 private:
  static std::uint8_t check_vars(int n) {
    if (n < 1 || n > kMaxVars)
      throw std::invalid_argument("number of variables must be in [1, " +
                                  std::to_string(kMaxVars) + "]");
    return static_cast<std::uint8_t>(n);
  }

  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint8_t n_ = 0;
  std::uint16_t deg_ = 0;
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_less(a, b);
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Canonical list of all monomials of degree d in n variables, ordered
/// grlex-descending (x0^d first). Columns of every dense coordinate vector
/// in degree d follow this order.
class MonomialBasis {
 public:
  MonomialBasis(int n_vars, int degree) : n_(n_vars), d_(degree) {
    Monomial m(n_vars);
    fill(m, 0, degree);
    index_.reserve(list_.size());
    for (std::size_t i = 0; i < list_.size(); ++i) index_.emplace(list_[i], i);
  }

  int n_vars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return list_.size(); }
  const Monomial& operator[](std::size_t i) const { return list_[i]; }
  const std::vector<Monomial>& monomials() const { return list_; }

  std::size_t index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end())
      throw std::out_of_range("monomial not in basis of degree " + std::to_string(d_));
    return it->second;
  }

 private:
  void fill(Monomial& m, int var, int remaining) {
    if (var == n_ - 1) {
      m.set(var, remaining);
      list_.push_back(m);
      m.set(var, 0);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.set(var, e);
      fill(m, var + 1, remaining - e);
    }
    m.set(var, 0);
  }

  int n_;
  int d_;
  std::vector<Monomial> list_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

namespace detail {

template <class Key, class Value, class Make>
const Value& cached(const Key& key, Make make) {
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<const Value>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::make_unique<const Value>(make())).first;
  return *it->second;
}

}  // namespace detail

inline const MonomialBasis& monomial_basis(int n_vars, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  return detail::cached<std::pair<int, int>, MonomialBasis>(
      {n_vars, degree}, [&] { return MonomialBasis(n_vars, degree); });
}

/// Index table for products: entry [i * |B_b| + j] is the position of
/// B_a[i] * B_b[j] in B_{a+b}.
class MultiplicationTable {
 public:
  MultiplicationTable(int n_vars, int a, int b)
      : cols_(monomial_basis(n_vars, b).size()) {
    const auto& ba = monomial_basis(n_vars, a);
    const auto& bb = monomial_basis(n_vars, b);
    const auto& bc = monomial_basis(n_vars, a + b);
    table_.resize(ba.size() * bb.size());
    for (std::size_t i = 0; i < ba.size(); ++i)
      for (std::size_t j = 0; j < bb.size(); ++j)
        table_[i * cols_ + j] = static_cast<std::uint32_t>(bc.index_of(ba[i] * bb[j]));
  }

  std::uint32_t operator()(std::size_t i, std::size_t j) const {
    return table_[i * cols_ + j];
  }

 private:
  std::size_t cols_;
  std::vector<std::uint32_t> table_;
};

inline const MultiplicationTable& multiplication_table(int n_vars, int a, int b) {
  return detail::cached<std::tuple<int, int, int>, MultiplicationTable>(
      {n_vars, a, b}, [&] { return MultiplicationTable(n_vars, a, b); });
}

/// Number of monomials of degree exactly d in n variables.
inline std::size_t count_monomials(int n_vars, int degree) {
  if (degree < 0) return 0;
  std::size_t c = 1;
  for (int i = 1; i <= degree; ++i) c = c * (n_vars - 1 + i) / i;
  return c;
}

}  // namespace apolar

#endif  // APOLAR_MONOMIAL_HPP
