// Test-side oracles, independent of the library's computation paths:
// exact rational arithmetic and a self-contained rational echelon/kernel.
#pragma once

#include "coadm/scalar.hpp"

#include <random>
#include <vector>

namespace oracle {

using coadm::BigInt;
using coadm::Rational;

inline long vp(BigInt n, long p) {
  long v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

inline long vp(const Rational& q, long p) {
  return vp(numerator(q), p) - vp(denominator(q), p);
}

inline BigInt pw(long p, long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= p;
  return r;
}

// q mod p^n as an integer residue in [0, p^n); denominator must be prime
// to p (shift by p^-vp first if needed).
inline BigInt mod_pn(const Rational& q, long p, long n) {
  BigInt m = pw(p, n);
  BigInt num = numerator(q) % m;
  if (num < 0) num += m;
  BigInt den = denominator(q) % m;
  // inverse by extended euclid
  BigInt r0 = m, r1 = den, s0 = 0, s1 = 1;
  while (r1 != 0) {
    BigInt qq = r0 / r1, r2 = r0 - qq * r1, s2 = s0 - qq * s1;
    r0 = r1; r1 = r2; s0 = s1; s1 = s2;
  }
  BigInt inv = s0 % m;
  if (inv < 0) inv += m;
  return num * inv % m;
}

// binomial(n, k) for integer n (possibly negative) via the recurrence
// binom(n,k) = binom(n-1,k-1) + binom(n-1,k), extended downward; kept
// independent of the library's product/factorial route.
inline Rational binom(long n, int k) {
  if (k < 0) return 0;
  // binom(n,k) = n(n-1)...(n-k+1)/k! computed as a sum over Pascal's rule
  // for nonnegative n; for negative n use the reflection (-1)^k binom(k-n-1, k).
  if (n < 0) {
    Rational r = binom(k - n - 1, k);
    return (k % 2 == 0) ? r : -r;
  }
  if (k > n) return 0;
  std::vector<Rational> row(static_cast<size_t>(k) + 1, Rational(0));
  row[0] = 1;
  for (long i = 1; i <= n; ++i)
    for (int j = std::min<long>(k, i); j >= 1; --j) row[j] += row[j - 1];
  return row[k];
}

using Mat = std::vector<std::vector<Rational>>;

// Textbook reduced row echelon form, leftmost pivots; returns pivot columns.
inline std::vector<int> rref(Mat& a) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_cols;
  int r = 0;
  for (int j = 0; j < cols && r < rows; ++j) {
    int pi = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][j] != 0) { pi = i; break; }
    if (pi < 0) continue;
    std::swap(a[pi], a[r]);
    Rational inv = Rational(1) / a[r][j];
    for (int k = 0; k < cols; ++k) a[r][k] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][j] == 0) continue;
      Rational f = a[i][j];
      for (int k = 0; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_cols.push_back(j);
    ++r;
  }
  return pivot_cols;
}

// Kernel basis in reduced echelon normal form: leading labels ascending,
// leading coefficient exactly 1.
inline std::vector<std::vector<Rational>> kernel(Mat a, long /*p*/) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  auto pivot_cols = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (int j : pivot_cols) is_pivot[j] = true;

  Mat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[f] = 1;
    for (size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  rref(basis);  // canonical presentation
  return basis;
}

}  // namespace oracle
