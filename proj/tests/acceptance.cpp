// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Tolerances and ranges are fixed here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <vector>

#include "mzsv/fmzv_modp.hpp"
#include "mzsv/mzv_real.hpp"

using namespace mzsv;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& what) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << std::endl;
  if (!ok) ++g_failures;
}

std::vector<Index> indices_including_empty(int max_w) {
  std::vector<Index> all{Index{}};
  auto rest = indices_up_to_weight(max_w);
  all.insert(all.end(), rest.begin(), rest.end());
  return all;
}

void criterion1() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  long count = 0;
  for (const Index& k : indices_including_empty(6)) {
    for (int m = 0; m <= 4; ++m) {
      auto [l, r] = lemma21_sides(k, m);
      if (l != r) ok = false;
      ++count;
    }
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 60.0;
  report(1, ok, "shuffle vs harmonic telescoping identity, " + std::to_string(count) +
                    " instances, wt(k) <= 6, m <= 4 (" + std::to_string(secs) + "s)");
}

void criterion2() {
  bool ok = true;
  for (const Index& k : indices_up_to_weight(6)) {
    for (int m = 0; m <= 4; ++m) {
      auto [l, r] = lemma22_sides(k, m);
      if (l != r) ok = false;
      // c2 support: a nonzero coefficient forces e_i = 0 at every interior
      // slot carrying component 1
      for (const auto& e : compositions(m, k.depth())) {
        if (ohno_coefficient(OhnoKind::c2, k, e) == 0) continue;
        for (int i = 1; i + 1 < k.depth(); ++i) {
          if (k.parts()[static_cast<std::size_t>(i)] == 1 && e[static_cast<std::size_t>(i)] != 0) {
            ok = false;
          }
        }
      }
    }
  }
  report(2, ok, "Hoffman-dual shuffle identity and c2 support, wt(k) <= 6, m <= 4");
}

void criterion3() {
  bool ok = true;
  for (int w = 0; w <= 10; ++w) {
    for (const Index& k : indices_of_weight(w)) {
      if (k.admissible()) {
        Index d = dagger(k);
        if (dagger(d) != k || d.weight() != k.weight()) ok = false;
        if (!k.empty() && d.depth() != k.weight() - k.depth()) ok = false;
      }
      if (!k.empty()) {
        Index h = hoffman_dual(k);
        if (hoffman_dual(h) != k || h.weight() != k.weight()) ok = false;
        if (dagger(raise_last(k)) != raise_last(reversed(h))) ok = false;
      }
    }
  }
  {
    auto all = indices_including_empty(5);
    for (const Index& a : all) {
      for (const Index& b : all) {
        if (shuffle(a, b) != shuffle(b, a)) ok = false;
        if (harmonic(a, b) != harmonic(b, a)) ok = false;
      }
    }
  }
  {
    auto all = indices_including_empty(3);
    for (const Index& a : all) {
      for (const Index& b : all) {
        for (const Index& c : all) {
          if (shuffle(shuffle(a, b), LinComb::term(c)) !=
              shuffle(LinComb::term(a), shuffle(b, c))) ok = false;
          if (harmonic(harmonic(a, b), LinComb::term(c)) !=
              harmonic(LinComb::term(a), harmonic(b, c))) ok = false;
        }
      }
    }
  }
  report(3, ok, "duality involutions and product laws (wt <= 10 / 5 / 3)");
}

void criterion4() {
  bool ok = true;
  for (int m = 1; m <= 8; ++m) {
    for (int n = 1; n <= 8; ++n) {
      for (int i = 1; i <= n; ++i) {
        auto res = lemma33_check(m, n, i);
        if (res.lhs1 != res.rhs1 || res.lhs2 != res.rhs2) ok = false;
      }
    }
  }
  report(4, ok, "both alternating binomial identities, i <= n <= 8, m <= 8");
}

void criterion5(ModpEvaluator& ev) {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  long count = 0;
  const PrimeWindow window{5, 199};
  // hand anchor at p = 5
  if (eval_fmzv_p(Index{3}, 5, true) != 0) ok = false;
  if (mod_norm(-(eval_fmzv_p(Index{2, 1}, 5, true) + eval_fmzv_p(Index{1, 2}, 5, true)), 5) != 0) {
    ok = false;
  }
  for (const auto& inst : enumerate_instances(Family::ohno_star_finite, EnumBounds{6})) {
    auto res = check_modp(inst, window, ev);
    if (!res.pass) {
      ok = false;
      std::cout << "  counterexample " << res.id << " at p=" << res.witness_p << "\n";
    }
    ++count;
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(5, ok, "finite-star Ohno-type relation mod p, wt(k)+m <= 6, primes <= 199, " +
                    std::to_string(count) + " instances (" + std::to_string(secs) + "s)");
}

void criterion6(ModpEvaluator& ev) {
  bool ok = true;
  const PrimeWindow window{5, 199};
  // hand anchors
  if (eval_fmzv_p(Index{1, 2}, 7, false) != 3) ok = false;
  if (eval_fmzv_p(Index{2, 1}, 5, false) != 4) ok = false;
  if (z_a(3, 5) != 2) ok = false;

  auto sweep = [&](Family f, int W, const char* label) {
    for (const auto& inst : enumerate_instances(f, EnumBounds{W})) {
      auto res = check_modp(inst, window, ev);
      if (!res.pass) {
        ok = false;
        std::cout << "  counterexample [" << label << "] " << res.id << " at p=" << res.witness_p
                  << "\n";
      }
    }
  };
  sweep(Family::oyama, 6, "oyama");
  sweep(Family::duality_finite, 7, "hoffman duality");
  sweep(Family::lemma25, 6, "shuffle-with-ones");
  sweep(Family::star_ones, 5, "star ones");
  sweep(Family::harmonic_hom, 6, "harmonic hom");
  sweep(Family::star_depth2, 7, "depth-2 closed form");
  sweep(Family::sum_finite, 7, "finite sum");
  sweep(Family::sum_finite_star, 7, "finite star sum");
  report(6, ok, "remaining finite-space families mod every retained prime <= 199");
}

void criterion7() {
  auto start = std::chrono::steady_clock::now();
  bool ok = true;
  // Plain truncation must reach the pinned tolerances; the deepest weight-7
  // index zeta({1}^5,2) has tail ~ (ln N)^5 / (5! N), which crosses 1e-4
  // only around N = 5e8. N = 1e9 leaves a 2x margin on the worst instance.
  RealEvaluator ev(1000000000);
  long count = 0;
  auto sweep = [&](Family f, int W, double tol, const char* label) {
    for (const auto& inst : enumerate_instances(f, EnumBounds{W})) {
      auto res = check_real(inst, tol, ev);
      ++count;
      if (!res.pass) {
        ok = false;
        std::cout << "  counterexample [" << label << "] " << res.id
                  << " diff=" << res.diff << "\n";
      }
    }
  };
  sweep(Family::duality_classical, 7, 1e-4, "duality");
  sweep(Family::ohno, 6, 1e-4, "ohno");
  sweep(Family::ohno_star, 6, 1e-4, "ohno star");
  sweep(Family::sum_classical, 7, 1e-4, "sum");
  sweep(Family::sum_classical_star, 7, 1e-4, "star sum");
  sweep(Family::kawashima_linear, 5, 1e-3, "kawashima linear");
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(7, ok, "real-side sweeps at N=1e9, " + std::to_string(count) + " instances (" +
                    std::to_string(secs) + "s)");
}

void criterion8() {
  bool ok = true;
  auto z2 = eval_nested(Index{2}, false, 10000000);
  if (std::abs(z2.value - 1.6449340668) > 1e-6) ok = false;
  // the nested tail at depth 2 carries a log factor, so the Euler anchors
  // run at N = 1e8 where plain truncation is comfortably inside 1e-6
  const long long N = 100000000;
  auto z12 = eval_nested(Index{1, 2}, false, N);
  auto z3 = eval_nested(Index{3}, false, N);
  if (std::abs(z12.value - z3.value) > 1e-6) ok = false;
  auto z12s = eval_nested(Index{1, 2}, true, N);
  if (std::abs(z12s.value - 2 * z3.value) > 1e-6) ok = false;
  report(8, ok, "numeric anchors: zeta(2), Euler zeta(1,2)=zeta(3), zeta*(1,2)=2zeta(3)");
}

void criterion9() {
  bool ok = true;
  // exact rational Bernoulli numbers via the classical recurrence
  std::vector<Rat> b(13);
  b[0] = 1;
  for (int m = 1; m <= 12; ++m) {
    Rat acc = 0;
    for (int j = 0; j < m; ++j) acc += Rat(binom(m + 1, j)) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / Rat(m + 1);
  }
  for (long long p : primes_in(5, 31)) {
    for (int n = 0; n <= 12 && n <= p - 2; ++n) {
      Int num = boost::multiprecision::numerator(b[static_cast<std::size_t>(n)]);
      Int den = boost::multiprecision::denominator(b[static_cast<std::size_t>(n)]);
      if (den % p == 0) continue;
      long long expect = mod_norm(static_cast<long long>(num % p) *
                                      mod_inv(static_cast<long long>(den % p), p),
                                  p);
      if (bernoulli_mod_p(n, p) != expect) ok = false;
    }
  }
  for (long long p : primes_in(23, 199)) {
    for (long long n = 3; n <= 19; n += 2) {
      if (bernoulli_mod_p(n, p) != 0) ok = false;
    }
  }
  report(9, ok, "Bernoulli mod p vs exact rationals (n <= 12, p <= 31); odd values vanish");
}

void criterion10() {
  bool ok = true;
  auto rows = remark_diagnostic(3, PrimeWindow{5, 199});
  if (rows.size() < 2 || rows[0].p != 5 || rows[1].p != 7) ok = false;
  if (ok) {
    if (rows[0].zeta_1_km1 != 1 || rows[0].z_value != 2) ok = false;
    if (rows[1].zeta_1_km1 != 3 || rows[1].z_value != 1) ok = false;
    for (const auto& row : rows) {
      if (!row.ratio_defined || row.ratio != 3) ok = false;
    }
  }
  report(10, ok, "remark diagnostic: (p=5: 1 vs 2), (p=7: 3 vs 1), constant ratio 3");
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  ModpEvaluator modp;
  criterion5(modp);
  criterion6(modp);
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::cout << (g_failures == 0 ? "all criteria pass" : std::to_string(g_failures) + " criteria fail")
            << std::endl;
  return g_failures == 0 ? 0 : 1;
}
