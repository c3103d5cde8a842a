#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

#include "mzsv/index.hpp"

namespace mzsv {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Standard binomial coefficient; 0 when k < 0 or k > n (n >= 0 assumed).
inline Int binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

/// Binomial with the boundary convention binom(b-1, b) = [b == 0].
///
/// Only arguments with a >= b-1 arise from the Ohno coefficients; anything
/// smaller is a caller bug.
inline Int binom_conv(long long a, long long b) {
  if (b < 0) throw std::domain_error("binom_conv: lower argument must be >= 0");
  if (a < b - 1) throw std::domain_error("binom_conv: requires a >= b - 1");
  if (a == b - 1) return b == 0 ? 1 : 0;
  return binom(a, b);
}

enum class OhnoKind { c1, c2 };

/// The coefficient c1(k,e) or c2(k,e):
///   c1 = prod_i binom(k_i + e_i + [i=1] - 2, e_i)
///   c2 = prod_i binom(k_i + e_i + [i=1] + [i=r] - 2, e_i)
inline Int ohno_coefficient(OhnoKind kind, const Index& k, const std::vector<int>& e) {
  const int r = k.depth();
  if (static_cast<int>(e.size()) != r || r < 1) {
    throw std::domain_error("ohno_coefficient: depth mismatch or empty index");
  }
  Int prod = 1;
  for (int i = 0; i < r; ++i) {
    long long shift = (i == 0 ? 1 : 0);
    if (kind == OhnoKind::c2) shift += (i == r - 1 ? 1 : 0);
    prod *= binom_conv(k.parts()[i] + e[i] + shift - 2, e[i]);
    if (prod == 0) return 0;
  }
  return prod;
}

/// All sequences of r nonnegative integers summing to m, first coordinate
/// descending (lexicographic from the largest first entry). r = 0 is allowed
/// and yields the empty sequence exactly when m = 0.
inline std::vector<std::vector<int>> compositions(int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r), 0);
  auto rec = [&](auto&& self, int rem, int pos) -> void {
    if (pos == r) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    if (pos == r - 1) {
      cur[pos] = rem;
      out.push_back(cur);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      cur[pos] = v;
      self(self, rem - v, pos + 1);
    }
  };
  rec(rec, m, 0);
  return out;
}

/// All indices of weight w (compositions of w into positive parts), depth
/// ascending then the compositions() order shifted by one in each slot.
inline std::vector<Index> indices_of_weight(int w) {
  std::vector<Index> out;
  if (w == 0) {
    out.emplace_back();
    return out;
  }
  for (int r = 1; r <= w; ++r) {
    for (auto& e : compositions(w - r, r)) {
      for (int& x : e) ++x;
      out.emplace_back(std::move(e));
    }
  }
  return out;
}

/// All nonempty indices of weight 1..w, weight ascending.
inline std::vector<Index> indices_up_to_weight(int w) {
  std::vector<Index> out;
  for (int v = 1; v <= w; ++v) {
    auto batch = indices_of_weight(v);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

struct Lemma33Result {
  Int lhs1, rhs1, lhs2, rhs2;
};

/// Both alternating binomial sums and their closed forms:
///   sum_a (-1)^a C(m+n, a+i)   C(a+i-1, a) C(m+n-a-i, m-a) = C(m+n, m+i)
///   sum_a (-1)^a C(m+n, a+i-1) C(a+i-1, a) C(m+n-a-i, m-a) = (-1)^m C(m+n, i-1)
inline Lemma33Result lemma33_check(int m, int n, int i) {
  if (m < 1 || n < 1 || i < 1 || i > n) {
    throw std::domain_error("lemma33_check: need m, n, i >= 1 with i <= n");
  }
  Lemma33Result res{0, 0, 0, 0};
  for (int a = 0; a <= m; ++a) {
    Int common = binom(a + i - 1, a) * binom(m + n - a - i, m - a);
    Int sign = (a % 2 == 0) ? 1 : -1;
    res.lhs1 += sign * binom(m + n, a + i) * common;
    res.lhs2 += sign * binom(m + n, a + i - 1) * common;
  }
  res.rhs1 = binom(m + n, m + i);
  res.rhs2 = (m % 2 == 0 ? 1 : -1) * binom(m + n, i - 1);
  return res;
}

}  // namespace mzsv
