#pragma once

#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "mzsv/relations.hpp"

namespace mzsv {

/// A truncated-series value with an a-posteriori error estimate. The
/// estimate is heuristic (validated against closed-form anchors), not a
/// proven bound.
struct ApproxReal {
  double value = 0.0;
  double err = 0.0;
};

namespace detail {

inline double pow_small(double x, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace detail

/// Truncated nested series for z(k) (strict chains) or z*(k) (weak chains)
/// with all summation variables <= N. Prefix-sum dynamic program,
/// O(depth*N) time, with compensated summation at every level. The error
/// estimate is the outer-tail heuristic 2*S_{r-1}(N)*N^{1-k_r}/(k_r-1).
inline ApproxReal eval_nested(const Index& k, bool star, long long N) {
  if (!k.admissible()) throw std::domain_error("eval_nested requires an admissible index");
  if (N < 10) throw std::invalid_argument("eval_nested: truncation bound must be >= 10");
  if (k.empty()) return {1.0, 0.0};
  const int r = k.depth();
  // s[j] holds S_j(n); strict chains read s[j-1] from the previous n
  // (update levels top-down), weak chains from the current n (bottom-up).
  std::vector<double> s(static_cast<std::size_t>(r) + 1, 0.0);
  std::vector<double> comp(static_cast<std::size_t>(r) + 1, 0.0);
  s[0] = 1.0;
  auto accumulate = [&](int j, double x) {
    auto jj = static_cast<std::size_t>(j);
    double y = x - comp[jj];
    double t = s[jj] + y;
    comp[jj] = (t - s[jj]) - y;
    s[jj] = t;
  };
  for (long long n = 1; n <= N; ++n) {
    const double inv_n = 1.0 / static_cast<double>(n);
    if (star) {
      for (int j = 1; j <= r; ++j) {
        accumulate(j, s[static_cast<std::size_t>(j - 1)] *
                          detail::pow_small(inv_n, k.parts()[static_cast<std::size_t>(j - 1)]));
      }
    } else {
      for (int j = r; j >= 1; --j) {
        accumulate(j, s[static_cast<std::size_t>(j - 1)] *
                          detail::pow_small(inv_n, k.parts()[static_cast<std::size_t>(j - 1)]));
      }
    }
  }
  const int kr = k.parts().back();
  double err = 2.0 * s[static_cast<std::size_t>(r - 1)] *
               std::pow(static_cast<double>(N), 1.0 - kr) / (kr - 1);
  return {s[static_cast<std::size_t>(r)], err};
}

/// Shared evaluation cache for a verification sweep at fixed N. Safe for
/// concurrent use; at worst a value is computed twice.
class RealEvaluator {
 public:
  explicit RealEvaluator(long long N) : N_(N) {}

  long long truncation() const { return N_; }

  ApproxReal eval(const Index& k, bool star) {
    Key key{k.parts(), star};
    {
      std::lock_guard<std::mutex> lk(mu_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    ApproxReal v = eval_nested(k, star, N_);
    std::lock_guard<std::mutex> lk(mu_);
    cache_.emplace(std::move(key), v);
    return v;
  }

 private:
  using Key = std::pair<std::vector<int>, bool>;
  long long N_;
  std::map<Key, ApproxReal> cache_;
  std::mutex mu_;
};

/// Coefficient-weighted sum of nested-series values; the error estimates
/// add with absolute coefficients.
inline ApproxReal eval_side(const LinComb& x, ValueSpace space, RealEvaluator& ev) {
  if (!is_real_space(space)) throw std::domain_error("eval_side: real value space required");
  const bool star = is_star_space(space);
  ApproxReal acc;
  for (const auto& [t, c] : x.terms()) {
    const auto* idx = std::get_if<Index>(&t);
    if (!idx) throw std::domain_error("eval_side: cannot evaluate " + term_str(t) + " in a real space");
    ApproxReal v = ev.eval(*idx, star);
    double coeff = static_cast<double>(c);
    acc.value += coeff * v.value;
    acc.err += std::abs(coeff) * v.err;
  }
  return acc;
}

struct RealCheckResult {
  std::string id;
  ApproxReal lhs, rhs;
  double diff = 0.0;
  double tol = 0.0;
  bool pass = false;
};

inline RealCheckResult check_real(const RelationInstance& inst, double tol, RealEvaluator& ev) {
  if (!is_real_space(inst.space)) {
    throw std::domain_error("check_real: instance lives in a finite value space");
  }
  RealCheckResult res;
  res.id = inst.id;
  res.lhs = eval_side(inst.lhs, inst.space, ev);
  res.rhs = eval_side(inst.rhs, inst.space, ev);
  res.diff = std::abs(res.lhs.value - res.rhs.value);
  res.tol = tol;
  res.pass = res.diff <= tol;
  return res;
}

}  // namespace mzsv
