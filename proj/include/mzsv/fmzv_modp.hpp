#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "mzsv/relations.hpp"

namespace mzsv {

inline long long mod_norm(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  return a;
}

/// Inverse by extended gcd; residues normalized to [0, p).
inline long long mod_inv(long long a, long long p) {
  a = mod_norm(a, p);
  long long r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::domain_error("mod_inv: not invertible");
  return mod_norm(s0, p);
}

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<long long> primes_in(long long lo, long long hi) {
  std::vector<long long> out;
  for (long long n = std::max<long long>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

inline long long pow_mod(long long b, long long e, long long p) {
  long long r = 1;
  b = mod_norm(b, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
  }
  return r;
}

/// Truncated harmonic chain sum mod p: strict chains m_1 < ... < m_r < p,
/// weak chains for the star variant. Prefix-sum dynamic program, O(depth*p).
inline long long eval_fmzv_p(const Index& k, long long p, bool star) {
  if (!is_prime(p)) throw std::domain_error("eval_fmzv_p: modulus must be prime");
  if (k.empty()) return 1 % p;
  const std::size_t n = static_cast<std::size_t>(p);  // values 0..p-1
  std::vector<long long> prev(n, 1), cur(n, 0);
  for (int j = 0; j < k.depth(); ++j) {
    const int kj = k.parts()[static_cast<std::size_t>(j)];
    cur[0] = 0;
    for (long long m = 1; m < p; ++m) {
      long long inv_pow = pow_mod(mod_inv(m, p), kj, p);
      long long lower = star ? prev[static_cast<std::size_t>(m)]
                             : prev[static_cast<std::size_t>(m - 1)];
      cur[static_cast<std::size_t>(m)] =
          (cur[static_cast<std::size_t>(m - 1)] + lower * inv_pow) % p;
    }
    std::swap(prev, cur);
  }
  return prev[n - 1];
}

/// B_n mod p by the Akiyama-Tanigawa transform carried out in F_p.
/// Sign convention B_1 = -1/2, matching the classical recurrence used as
/// the rational cross-check; only even n matters downstream.
inline long long bernoulli_mod_p(long long n, long long p) {
  if (!is_prime(p)) throw std::domain_error("bernoulli_mod_p: modulus must be prime");
  if (n < 0 || n > p - 2) {
    throw std::domain_error("bernoulli_mod_p: requires 0 <= n <= p-2");
  }
  std::vector<long long> a(static_cast<std::size_t>(n) + 1);
  for (long long j = 0; j <= n; ++j) {
    a[static_cast<std::size_t>(j)] = mod_inv(j + 1, p);
  }
  for (long long m = 1; m <= n; ++m) {
    for (long long j = 0; j <= n - m; ++j) {
      a[static_cast<std::size_t>(j)] =
          mod_norm((j + 1) * (a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(j + 1)]), p);
    }
  }
  long long b = a[0];
  if (n == 1) b = mod_norm(-b, p);  // transform yields B_1 = +1/2
  return b;
}

/// Z_A(k) at the prime p: B_{p-k}/k mod p.
inline long long z_a(int k, long long p) {
  if (k < 2) throw std::domain_error("z_a: requires k >= 2");
  if (p <= k + 1) throw std::domain_error("z_a: requires p > k+1");
  return bernoulli_mod_p(p - k, p) * mod_inv(k, p) % p;
}

/// Inclusive prime range; primes p <= max term weight + 2 are skipped per
/// instance, modelling equality up to finitely many coordinates.
struct PrimeWindow {
  long long p_min = 5;
  long long p_max = 199;
};

inline long long rat_mod(const Rat& q, long long p) {
  Int num = boost::multiprecision::numerator(q) % p;
  Int den = boost::multiprecision::denominator(q) % p;
  if (den == 0) throw std::domain_error("rat_mod: denominator divisible by p");
  long long n = static_cast<long long>(num);
  long long d = static_cast<long long>(den);
  return mod_norm(n * mod_inv(d, p), p);
}

/// Caches the per-(index, star, prime) chain sums across a sweep.
class ModpEvaluator {
 public:
  long long eval(const Index& k, bool star, long long p) {
    Key key{k.parts(), star, p};
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    long long v = eval_fmzv_p(k, p, star);
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(std::move(key), v);
    return v;
  }

 private:
  using Key = std::tuple<std::vector<int>, bool, long long>;
  std::map<Key, long long> cache_;
  std::mutex mu_;
};

/// One side of a finite-space relation at a single prime. Index terms use
/// the star or non-star chain sum per the value space; Z(k) terms go
/// through Bernoulli numbers.
inline long long eval_side_modp(const LinComb& x, bool star, long long p, ModpEvaluator& ev) {
  long long acc = 0;
  for (const auto& [t, c] : x.terms()) {
    long long coeff = rat_mod(c, p);
    long long val = 0;
    if (const auto* idx = std::get_if<Index>(&t)) {
      val = ev.eval(*idx, star, p);
    } else {
      val = z_a(std::get<ZConst>(t).k, p);
    }
    acc = (acc + coeff * val) % p;
  }
  return acc;
}

struct ModpCheckResult {
  std::string id;
  bool pass = true;
  int primes_checked = 0;
  long long witness_p = 0;  // failing prime, 0 if none
  long long lhs = 0, rhs = 0;  // at the witness prime, else the last retained prime
  long long last_p = 0;
};

/// Checks the instance at every retained prime of the window; any failure
/// at a retained prime fails the check and records the witness.
inline ModpCheckResult check_modp(const RelationInstance& inst, const PrimeWindow& window,
                                  ModpEvaluator& ev) {
  if (is_real_space(inst.space)) {
    throw std::domain_error("check_modp: instance lives in a real value space");
  }
  const bool star = is_star_space(inst.space);
  ModpCheckResult res;
  res.id = inst.id;
  for (long long p : primes_in(window.p_min, window.p_max)) {
    if (p <= inst.max_weight + 2) continue;
    long long lhs = eval_side_modp(inst.lhs, star, p, ev);
    long long rhs;
    if (inst.rhs_product) {
      rhs = ev.eval(inst.rhs_product->first, star, p) *
            ev.eval(inst.rhs_product->second, star, p) % p;
    } else {
      rhs = eval_side_modp(inst.rhs, star, p, ev);
    }
    ++res.primes_checked;
    res.lhs = lhs;
    res.rhs = rhs;
    res.last_p = p;
    if (lhs != rhs) {
      res.pass = false;
      res.witness_p = p;
      return res;
    }
  }
  return res;
}

struct RemarkRow {
  long long p;
  long long zeta_1_km1;  // z_A(1, k-1) at p
  long long z_value;     // Z_A(k) at p
  bool ratio_defined = false;
  long long ratio = 0;   // zeta_1_km1 / Z_A(k) mod p when defined
};

/// Side-by-side residues of z_A(1, k-1) and Z_A(k) per retained prime.
/// Emits the data only; no pass/fail judgment is made.
inline std::vector<RemarkRow> remark_diagnostic(int k, const PrimeWindow& window) {
  if (k < 2) throw std::domain_error("remark_diagnostic: requires k >= 2");
  std::vector<RemarkRow> rows;
  for (long long p : primes_in(window.p_min, window.p_max)) {
    if (p <= k + 1) continue;  // z_a needs p > k+1; everything above is kept
    RemarkRow row;
    row.p = p;
    Index idx = k == 2 ? Index{1, 1} : Index{1, k - 1};
    row.zeta_1_km1 = eval_fmzv_p(idx, p, false);
    row.z_value = z_a(k, p);
    if (row.z_value != 0) {
      row.ratio_defined = true;
      row.ratio = row.zeta_1_km1 * mod_inv(row.z_value, p) % p;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mzsv
