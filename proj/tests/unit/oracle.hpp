// Deliberately naive reference computations mod a small prime. Shares no
// code with the library beyond reading coefficients out of its polynomials.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "apolar/apolar.hpp"

namespace oracle {

using u64 = std::uint64_t;
using Exp = std::vector<int>;
using NPoly = std::map<Exp, u64>;

inline constexpr u64 P = 1000000007ULL;

inline u64 addm(u64 a, u64 b) { return (a + b) % P; }
inline u64 subm(u64 a, u64 b) { return (a + P - b) % P; }
inline u64 mulm(u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % P); }
inline u64 powm(u64 a, u64 e) {
  u64 r = 1;
  for (; e; e >>= 1, a = mulm(a, a))
    if (e & 1) r = mulm(r, a);
  return r;
}
inline u64 invm(u64 a) { return powm(a, P - 2); }
inline u64 from_q(const mpq_class& q) {
  mpz_class n = q.get_num() % static_cast<unsigned long>(P);
  if (n < 0) n += static_cast<unsigned long>(P);
  mpz_class d = q.get_den() % static_cast<unsigned long>(P);
  return mulm(n.get_ui(), invm(d.get_ui()));
}

inline NPoly from_poly(const apolar::Poly<apolar::RationalField>& f) {
  NPoly out;
  for (const auto& [m, c] : f.terms()) {
    Exp e(m.n_vars());
    for (int i = 0; i < m.n_vars(); ++i) e[i] = m[i];
    const u64 v = from_q(c);
    if (v) out[e] = v;
  }
  return out;
}

inline void monomials_rec(int n, int d, int i, Exp& cur, std::vector<Exp>& out) {
  if (i == n - 1) {
    cur[i] = d;
    out.push_back(cur);
    return;
  }
  for (int e = d; e >= 0; --e) {
    cur[i] = e;
    monomials_rec(n, d - e, i + 1, cur, out);
  }
}

inline std::vector<Exp> monomials(int n, int d) {
  std::vector<Exp> out;
  Exp cur(n, 0);
  monomials_rec(n, d, 0, cur, out);
  return out;
}

inline Exp add(const Exp& a, const Exp& b) {
  Exp c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

/// Row reduction on a copy; returns the rank.
inline std::size_t rank(std::vector<std::vector<u64>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = invm(m[r][c]);
    for (auto& x : m[r]) x = mulm(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = subm(m[i][j], mulm(f, m[r][j]));
    }
    ++r;
  }
  return r;
}

/// Null space of m (as column vectors), one vector per free column.
inline std::vector<std::vector<u64>> kernel(std::vector<std::vector<u64>> m, std::size_t cols) {
  std::vector<std::size_t> pivcol;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const u64 inv = invm(m[r][c]);
    for (auto& x : m[r]) x = mulm(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const u64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = subm(m[i][j], mulm(f, m[r][j]));
    }
    pivcol.push_back(c);
    ++r;
  }
  std::vector<std::vector<u64>> out;
  for (std::size_t f = 0; f < cols; ++f) {
    bool is_piv = false;
    for (auto c : pivcol) is_piv = is_piv || c == f;
    if (is_piv) continue;
    std::vector<u64> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = subm(0, m[i][f]);
    out.push_back(v);
  }
  return out;
}

/// Catalecticant with rows = degree-r operators, cols = degree-(d-r) monomials.
inline std::vector<std::vector<u64>> catalecticant(const NPoly& f, int n, int d, int r) {
  std::vector<std::vector<u64>> m;
  for (const auto& a : monomials(n, r)) {
    std::vector<u64> row;
    for (const auto& b : monomials(n, d - r)) {
      auto it = f.find(add(a, b));
      row.push_back(it == f.end() ? 0 : it->second);
    }
    m.push_back(row);
  }
  return m;
}

inline std::vector<std::size_t> hilbert_function(const NPoly& f, int n, int d) {
  std::vector<std::size_t> h;
  for (int r = 0; r <= d; ++r) h.push_back(rank(catalecticant(f, n, d, r)));
  return h;
}

/// Degree-r annihilators, as coefficient vectors over monomials(n, r).
inline std::vector<std::vector<u64>> annihilator(const NPoly& f, int n, int d, int r) {
  const auto cat = catalecticant(f, n, d, r);
  std::vector<std::vector<u64>> t(cat.empty() ? 0 : cat[0].size(), std::vector<u64>(cat.size()));
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = 0; j < cat[i].size(); ++j) t[j][i] = cat[i][j];
  return kernel(t, cat.size());
}

inline std::vector<std::vector<u64>> products(int n, int a, const std::vector<std::vector<u64>>& u, int b,
                                              const std::vector<std::vector<u64>>& v, bool symmetric) {
  const auto ma = monomials(n, a), mb = monomials(n, b), mc = monomials(n, a + b);
  std::map<Exp, std::size_t> idx;
  for (std::size_t i = 0; i < mc.size(); ++i) idx[mc[i]] = i;
  std::vector<std::vector<u64>> out;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = symmetric ? i : 0; j < v.size(); ++j) {
      std::vector<u64> row(mc.size(), 0);
      for (std::size_t x = 0; x < ma.size(); ++x) {
        if (!u[i][x]) continue;
        for (std::size_t y = 0; y < mb.size(); ++y) {
          if (!v[j][y]) continue;
          auto& s = row[idx[add(ma[x], mb[y])]];
          s = addm(s, mulm(u[i][x], v[j][y]));
        }
      }
      out.push_back(row);
    }
  return out;
}

/// dim S_4 - dim (Ann(F)_2)^2 for a cubic F.
inline std::size_t perp4(const NPoly& f, int n) {
  const auto i2 = annihilator(f, n, 3, 2);
  return monomials(n, 4).size() - rank(products(n, 2, i2, 2, i2, true));
}

/// dim S_5 - dim Ann_2 Ann_3.
inline std::size_t perp5(const NPoly& f, int n) {
  const auto i2 = annihilator(f, n, 3, 2);
  const auto i3 = annihilator(f, n, 3, 3);
  return monomials(n, 5).size() - rank(products(n, 2, i2, 3, i3, false));
}

}  // namespace oracle
