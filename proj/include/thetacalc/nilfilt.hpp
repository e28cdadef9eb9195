#pragma once

// Monodromy filtration of a nilpotent endomorphism of Q^n, reported as graded
// and primitive dimensions.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetacalc/errors.hpp"

namespace thetacalc {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  BigRational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigRational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  friend RationalMatrix operator*(const RationalMatrix& x, const RationalMatrix& y) {
    if (x.cols_ != y.rows_) throw InputError("matrix shapes do not match");
    RationalMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const BigRational& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j)
          if (y(k, j) != 0) out(i, j) += xik * y(k, j);
      }
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigRational> a_;
};

/// Parses "p/q", "p" or "-p/q".
inline BigRational parse_rational(const std::string& s) {
  try {
    const auto slash = s.find('/');
    if (slash == std::string::npos) return BigRational(BigInt(s));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + s + "'");
    return BigRational(BigInt(s.substr(0, slash)), den);
  } catch (const InputError&) {
    throw;
  } catch (const std::exception&) {
    throw InputError("not a rational number: '" + s + "'");
  }
}

/// Rank by fraction-free (Bareiss) elimination after clearing denominators row-wise.
inline std::size_t rank(const RationalMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  std::vector<std::vector<BigInt>> a(r, std::vector<BigInt>(c));
  for (std::size_t i = 0; i < r; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < c; ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
    for (std::size_t j = 0; j < c; ++j) a[i][j] = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  BigInt prev = 1;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < c && rk < r; ++col) {
    std::size_t p = rk;
    while (p < r && a[p][col] == 0) ++p;
    if (p == r) continue;
    std::swap(a[p], a[rk]);
    for (std::size_t i = rk + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j) a[i][j] = (a[rk][col] * a[i][j] - a[i][col] * a[rk][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rk][col];
    ++rk;
  }
  return rk;
}

struct FiltrationResult {
  int dimension = 0;
  std::vector<int> jordan_blocks;  // decreasing
  std::map<int, int> gr;           // i -> dim Gr_i, non-zero entries only
  std::map<int, int> primitive;    // k >= 0 -> dim P_{-k}, non-zero entries only

  int gr_dim(int i) const {
    auto it = gr.find(i);
    return it == gr.end() ? 0 : it->second;
  }
  int primitive_dim(int k) const {
    auto it = primitive.find(k);
    return it == primitive.end() ? 0 : it->second;
  }
  int top() const { return gr.empty() ? 0 : gr.rbegin()->first; }

  friend bool operator==(const FiltrationResult&, const FiltrationResult&) = default;
};

/// A block of size s adds 1 to Gr_i for i = s-1, s-3, ..., 1-s and to P_{1-s}.
inline FiltrationResult filtration_from_blocks(std::vector<int> blocks) {
  std::sort(blocks.rbegin(), blocks.rend());
  FiltrationResult f;
  for (int s : blocks) {
    if (s < 1) throw InputError("Jordan block sizes must be positive");
    f.dimension += s;
    for (int i = s - 1; i >= 1 - s; i -= 2) ++f.gr[i];
    ++f.primitive[s - 1];
  }
  f.jordan_blocks = std::move(blocks);
  return f;
}

/// Ranks of N^0, N^1, ... up to the first zero power.
inline std::vector<std::size_t> power_ranks(const RationalMatrix& n) {
  if (!n.square()) throw InputError("operator must be a square matrix");
  const std::size_t dim = n.rows();
  std::vector<std::size_t> ranks{dim};
  RationalMatrix p = RationalMatrix::identity(dim);
  while (ranks.back() > 0) {
    if (ranks.size() > dim) throw NotNilpotent("N^" + std::to_string(dim) + " is not zero");
    p = p * n;
    const std::size_t r = rank(p);
    if (r >= ranks.back()) throw NotNilpotent("rank of N^k stops decreasing at k = " + std::to_string(ranks.size()));
    ranks.push_back(r);
  }
  return ranks;
}

inline FiltrationResult monodromy_filtration(const RationalMatrix& n) {
  const auto r = power_ranks(n);
  auto at = [&](std::size_t k) -> long long { return k < r.size() ? static_cast<long long>(r[k]) : 0; };
  std::vector<int> blocks;
  for (std::size_t k = 1; k < r.size(); ++k) {
    // blocks of size >= k minus blocks of size >= k+1
    const long long exactly = (at(k - 1) - at(k)) - (at(k) - at(k + 1));
    for (long long i = 0; i < exactly; ++i) blocks.push_back(static_cast<int>(k));
  }
  return filtration_from_blocks(std::move(blocks));
}

/// Rows Gr_i (top first) with weight w + i; column k holds dim P_{-k} in the
/// rows -k, -k+2, ..., k.
inline std::string triangle_render(const FiltrationResult& f, int base_weight) {
  if (f.dimension == 0) return "";
  const int top = f.top();
  std::ostringstream os;
  for (int row = top; row >= -top; --row) {
    if (!f.gr_dim(row)) continue;
    std::string line = "Gr_" + std::to_string(row);
    line.resize(6, ' ');
    std::string w = "w=" + std::to_string(base_weight + row);
    w.resize(5, ' ');
    line += w + "|";
    for (int k = 0; k <= top; ++k) {
      std::string cell;
      const int p = f.primitive_dim(k);
      if (p && std::abs(row) <= k && (k - row) % 2 == 0) cell = std::to_string(p);
      cell.resize(4, ' ');
      line += " " + cell;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    line += "  (" + std::to_string(f.gr_dim(row)) + ")";
    os << line << "\n";
  }
  return os.str();
}

}  // namespace thetacalc
