#pragma once

// Independent reference computations used only by the tests.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetacalc/graded_super.hpp"
#include "thetacalc/nilfilt.hpp"

namespace oracle {

using thetacalc::BigRational;
using thetacalc::Character;
using thetacalc::Mult;
using thetacalc::RationalMatrix;
using thetacalc::Weight;

// ---------------------------------------------------------------------------
// Weights of Lambda^k of the standard representation of Sp(2n), by subsets
// ---------------------------------------------------------------------------

/// Epsilon coordinates (l_1..l_n) to fundamental-weight labels for type C:
/// omega_i = e_1 + ... + e_i.
inline Weight c_labels(const std::vector<int>& eps) {
  const std::size_t n = eps.size();
  Weight a(n);
  for (std::size_t i = 0; i + 1 < n; ++i) a[i] = eps[i] - eps[i + 1];
  a[n - 1] = eps[n - 1];
  return a;
}

/// Character of Lambda^k(C^{2n}) by enumerating k-subsets of {+e_i, -e_i}.
inline Character exterior_of_standard_c(int n, int k) {
  Character out;
  const int m = 2 * n;
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> eps(static_cast<std::size_t>(n), 0);
    for (int b = 0; b < m; ++b)
      if (mask & (1u << b)) eps[static_cast<std::size_t>(b / 2)] += (b % 2 ? -1 : 1);
    ++out[c_labels(eps)];
  }
  return out;
}

/// Character of S^k(C^{2n}) by enumerating multisets of {+e_i, -e_i}.
inline Character symmetric_of_standard_c(int n, int k) {
  Character out;
  const int m = 2 * n;
  std::vector<int> counts(static_cast<std::size_t>(m), 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == m - 1) {
      counts[static_cast<std::size_t>(slot)] = left;
      std::vector<int> eps(static_cast<std::size_t>(n), 0);
      for (int b = 0; b < m; ++b) eps[static_cast<std::size_t>(b / 2)] += (b % 2 ? -1 : 1) * counts[static_cast<std::size_t>(b)];
      ++out[c_labels(eps)];
      return;
    }
    for (int c = 0; c <= left; ++c) {
      counts[static_cast<std::size_t>(slot)] = c;
      self(self, slot + 1, left - c);
    }
  };
  rec(rec, 0, k);
  return out;
}

// ---------------------------------------------------------------------------
// Hook-content formula for Sl(n+1)
// ---------------------------------------------------------------------------

inline boost::multiprecision::cpp_int sl_dim_hook_content(const Weight& a) {
  const int n = static_cast<int>(a.size()) + 1;  // Sl(n)
  std::vector<int> rows(static_cast<std::size_t>(n - 1), 0);
  for (int i = static_cast<int>(a.size()) - 1, acc = 0; i >= 0; --i) {
    acc += a[static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)] = acc;
  }
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < rows[i]; ++j) {
      int leg = 0;
      for (std::size_t r = i + 1; r < rows.size() && rows[r] > j; ++r) ++leg;
      const int arm = rows[i] - j - 1;
      num *= n + j - static_cast<int>(i);
      den *= arm + leg + 1;
    }
  return num / den;
}

// ---------------------------------------------------------------------------
// Super dimension counts
// ---------------------------------------------------------------------------

/// Graded dimensions of S^2 / Lambda^2 of a super space with even part d0 and
/// odd part d1 (super sense): returns {even, odd}.
inline std::pair<Mult, Mult> super_square_dims(Mult d0, Mult d1, bool symmetric) {
  if (symmetric) return {d0 * (d0 + 1) / 2 + d1 * (d1 - 1) / 2, d0 * d1};
  return {d0 * (d0 - 1) / 2 + d1 * (d1 + 1) / 2, d0 * d1};
}

// ---------------------------------------------------------------------------
// Exact linear algebra and Deligne's kernel/image filtration
// ---------------------------------------------------------------------------

using Vec = std::vector<BigRational>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<Vec>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const BigRational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const BigRational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Basis (as row vectors) of the span of the given vectors.
inline std::vector<Vec> span(std::vector<Vec> vs) {
  rref(vs);
  return vs;
}

inline std::vector<Vec> columns(const RationalMatrix& m) {
  std::vector<Vec> out(m.cols(), Vec(m.rows()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[j][i] = m(i, j);
  return out;
}

inline std::vector<Vec> image(const RationalMatrix& m) { return span(columns(m)); }

inline std::vector<Vec> kernel(const RationalMatrix& m) {
  std::vector<Vec> rows(m.rows(), Vec(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  const auto piv = rref(rows);
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::find(piv.begin(), piv.end(), free) != piv.end()) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -rows[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

/// Intersection of two subspaces given by bases: solve sum a_i u_i = sum b_j w_j.
inline std::vector<Vec> intersect(const std::vector<Vec>& u, const std::vector<Vec>& w, std::size_t n) {
  if (u.empty() || w.empty()) return {};
  RationalMatrix m(n, u.size() + w.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t r = 0; r < n; ++r) m(r, i) = u[i][r];
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t r = 0; r < n; ++r) m(r, u.size() + j) = -w[j][r];
  std::vector<Vec> out;
  for (const auto& sol : kernel(m)) {
    Vec v(n);
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t r = 0; r < n; ++r) v[r] += sol[i] * u[i][r];
    out.push_back(std::move(v));
  }
  return span(std::move(out));
}

inline RationalMatrix power(const RationalMatrix& m, int k) {
  RationalMatrix p = RationalMatrix::identity(m.rows());
  for (int i = 0; i < k; ++i) p = p * m;
  return p;
}

/// dim M_k of the monodromy filtration from the explicit subspace formula
/// M_k = sum over j >= max(0, -k) of ker N^{k+j+1} cap im N^j.
inline std::map<int, int> deligne_filtration_dims(const RationalMatrix& n) {
  const std::size_t dim = n.rows();
  int l = 0;
  while (!power(n, l + 1).is_zero()) ++l;
  std::map<int, int> m;
  for (int k = -l - 1; k <= l; ++k) {
    std::vector<Vec> acc;
    for (int j = std::max(0, -k); j <= l; ++j) {
      if (k + j + 1 < 0) continue;
      const auto piece = intersect(kernel(power(n, k + j + 1)), image(power(n, j)), dim);
      acc.insert(acc.end(), piece.begin(), piece.end());
    }
    m[k] = static_cast<int>(span(std::move(acc)).size());
  }
  return m;
}

/// Gr_k dims from the Deligne oracle.
inline std::map<int, int> deligne_gr(const RationalMatrix& n) {
  const auto m = deligne_filtration_dims(n);
  std::map<int, int> gr;
  for (const auto& [k, d] : m) {
    const auto prev = m.find(k - 1);
    const int g = d - (prev == m.end() ? 0 : prev->second);
    if (g) gr[k] = g;
  }
  return gr;
}

// ---------------------------------------------------------------------------
// Random generators
// ---------------------------------------------------------------------------

using Rng = std::mt19937_64;

/// Nilpotent matrix of size n: a random Jordan type conjugated by a random
/// product of elementary matrices with small integer entries.
inline RationalMatrix random_nilpotent(Rng& rng, std::size_t n) {
  RationalMatrix j(n, n);
  std::size_t pos = 0;
  std::uniform_int_distribution<int> block(1, static_cast<int>(std::min<std::size_t>(n, 5)));
  while (pos < n) {
    const std::size_t s = std::min<std::size_t>(static_cast<std::size_t>(block(rng)), n - pos);
    for (std::size_t i = 0; i + 1 < s; ++i) j(pos + i, pos + i + 1) = 1;
    pos += s;
  }
  RationalMatrix p = RationalMatrix::identity(n), pinv = RationalMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    const int c = coef(rng);
    if (c == 0) continue;
    RationalMatrix e = RationalMatrix::identity(n), einv = RationalMatrix::identity(n);
    e(a, b) = c;
    einv(a, b) = -c;
    p = p * e;
    pinv = einv * pinv;
  }
  return p * j * pinv;
}

}  // namespace oracle
