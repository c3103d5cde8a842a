#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "mzsv/lincomb.hpp"

namespace mzsv {

enum class ValueSpace { real_zeta, real_zeta_star, finite_zeta, finite_zeta_star };

inline const char* value_space_name(ValueSpace s) {
  switch (s) {
    case ValueSpace::real_zeta: return "real_zeta";
    case ValueSpace::real_zeta_star: return "real_zeta_star";
    case ValueSpace::finite_zeta: return "finite_zeta";
    case ValueSpace::finite_zeta_star: return "finite_zeta_star";
  }
  return "?";
}

inline bool is_real_space(ValueSpace s) {
  return s == ValueSpace::real_zeta || s == ValueSpace::real_zeta_star;
}

inline bool is_star_space(ValueSpace s) {
  return s == ValueSpace::real_zeta_star || s == ValueSpace::finite_zeta_star;
}

enum class Family {
  sum_classical,
  sum_classical_star,
  duality_classical,
  ohno,
  ohno_star,
  sum_finite,
  sum_finite_star,
  duality_finite,
  oyama,
  ohno_star_finite,
  kawashima_linear,
  lemma24,
  lemma25,
  star_ones,
  harmonic_hom,
  star_depth2,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::sum_classical: return "sum_classical";
    case Family::sum_classical_star: return "sum_classical_star";
    case Family::duality_classical: return "duality_classical";
    case Family::ohno: return "ohno";
    case Family::ohno_star: return "ohno_star";
    case Family::sum_finite: return "sum_finite";
    case Family::sum_finite_star: return "sum_finite_star";
    case Family::duality_finite: return "duality_finite";
    case Family::oyama: return "oyama";
    case Family::ohno_star_finite: return "ohno_star_finite";
    case Family::kawashima_linear: return "kawashima_linear";
    case Family::lemma24: return "lemma24";
    case Family::lemma25: return "lemma25";
    case Family::star_ones: return "star_ones";
    case Family::harmonic_hom: return "harmonic_hom";
    case Family::star_depth2: return "star_depth2";
  }
  return "?";
}

inline std::optional<Family> family_from_string(const std::string& s) {
  static const std::map<std::string, Family> table = {
      {"sum_classical", Family::sum_classical},
      {"sum_classical_star", Family::sum_classical_star},
      {"duality_classical", Family::duality_classical},
      {"ohno", Family::ohno},
      {"ohno_star", Family::ohno_star},
      {"sum_finite", Family::sum_finite},
      {"sum_finite_star", Family::sum_finite_star},
      {"duality_finite", Family::duality_finite},
      {"oyama", Family::oyama},
      {"ohno_star_finite", Family::ohno_star_finite},
      {"kawashima_linear", Family::kawashima_linear},
      {"lemma24", Family::lemma24},
      {"lemma25", Family::lemma25},
      {"star_ones", Family::star_ones},
      {"harmonic_hom", Family::harmonic_hom},
      {"star_depth2", Family::star_depth2},
  };
  auto it = table.find(s);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

/// One concrete relation: two symbolic sides and the value space in which
/// their equality is asserted.
struct RelationInstance {
  Family family;
  std::string id;
  ValueSpace space;
  LinComb lhs, rhs;
  /// harmonic_hom only: rhs is the product of the two star values.
  std::optional<std::pair<Index, Index>> rhs_product;
  /// Largest term weight on either side; drives the small-prime skip rule.
  int max_weight = 0;
  std::map<std::string, std::string> params;
};

namespace detail {

inline int term_weight(const Term& t) {
  if (const auto* idx = std::get_if<Index>(&t)) return idx->weight();
  return std::get<ZConst>(t).k;
}

inline int max_term_weight(const RelationInstance& inst) {
  int w = 0;
  for (const auto& [t, c] : inst.lhs.terms()) w = std::max(w, term_weight(t));
  for (const auto& [t, c] : inst.rhs.terms()) w = std::max(w, term_weight(t));
  if (inst.rhs_product) {
    w = std::max(w, inst.rhs_product->first.weight() + inst.rhs_product->second.weight());
  }
  return w;
}

inline void finish(RelationInstance& inst) { inst.max_weight = max_term_weight(inst); }

inline std::string idx_id(const Index& k) { return k.empty() ? "()" : k.str(); }

/// sum over wt(e)=m, dep(e)=dep(k) of (k + e).
inline LinComb ohno_sum(const Index& k, int m) {
  LinComb out;
  for (const auto& e : compositions(m, k.depth())) {
    out.add(Term(oplus(k, e)), 1);
  }
  return out;
}

/// Compositions k_1+...+k_r = k with every part >= 1 and part `slot` >= 2
/// (1-based), i.e. the summation range of the sum formulas.
inline std::vector<Index> sum_formula_range(int k, int r, int slot) {
  std::vector<Index> out;
  for (auto e : compositions(k - r, r)) {
    for (int& x : e) ++x;
    if (e[static_cast<std::size_t>(slot - 1)] < 2) continue;
    out.emplace_back(std::move(e));
  }
  return out;
}

}  // namespace detail

/// Sum formula (classical): sum over k_1+...+k_r=k, k_r>=2 of z(k_1..k_r)
/// equals z(k), star variant with the extra binom(k-1, r-1).
inline RelationInstance build_sum_classical(int k, int r, bool star) {
  if (r < 1 || k < r + 1) throw std::domain_error("sum formula requires 1 <= r <= k-1");
  RelationInstance inst;
  inst.family = star ? Family::sum_classical_star : Family::sum_classical;
  inst.space = star ? ValueSpace::real_zeta_star : ValueSpace::real_zeta;
  for (const auto& t : detail::sum_formula_range(k, r, r)) inst.lhs.add(Term(t), 1);
  inst.rhs = LinComb::term(Index{k}, star ? Rat(binom(k - 1, r - 1)) : Rat(1));
  inst.id = std::string(family_name(inst.family)) + "/k=" + std::to_string(k) + "/r=" + std::to_string(r);
  inst.params = {{"k", std::to_string(k)}, {"r", std::to_string(r)}};
  detail::finish(inst);
  return inst;
}

inline RelationInstance build_duality_classical(const Index& k) {
  if (!k.admissible()) throw std::domain_error("duality_classical requires an admissible index");
  RelationInstance inst;
  inst.family = Family::duality_classical;
  inst.space = ValueSpace::real_zeta;
  inst.lhs = LinComb::term(dagger(k));
  inst.rhs = LinComb::term(k);
  inst.id = "duality_classical/k=" + detail::idx_id(k);
  inst.params = {{"k", detail::idx_id(k)}};
  detail::finish(inst);
  return inst;
}

inline RelationInstance build_ohno(const Index& k, int m) {
  if (!k.admissible()) throw std::domain_error("ohno requires an admissible index");
  RelationInstance inst;
  inst.family = Family::ohno;
  inst.space = ValueSpace::real_zeta;
  inst.lhs = detail::ohno_sum(k, m);
  inst.rhs = detail::ohno_sum(dagger(k), m);
  inst.id = "ohno/k=" + detail::idx_id(k) + "/m=" + std::to_string(m);
  inst.params = {{"k", detail::idx_id(k)}, {"m", std::to_string(m)}};
  detail::finish(inst);
  return inst;
}

/// Ohno-type relation for star values:
///   sum c1(k,e) z*(k+e) = sum z*((k^dagger + e)^dagger).
inline RelationInstance build_ohno_star(const Index& k, int m) {
  if (k.empty() || !k.admissible()) {
    throw std::domain_error("ohno_star requires a nonempty admissible index");
  }
  RelationInstance inst;
  inst.family = Family::ohno_star;
  inst.space = ValueSpace::real_zeta_star;
  for (const auto& e : compositions(m, k.depth())) {
    inst.lhs.add(Term(oplus(k, e)), Rat(ohno_coefficient(OhnoKind::c1, k, e)));
  }
  inst.rhs = map_linear([](const Index& x) { return dagger(x); },
                        detail::ohno_sum(dagger(k), m));
  inst.id = "ohno_star/k=" + detail::idx_id(k) + "/m=" + std::to_string(m);
  inst.params = {{"k", detail::idx_id(k)}, {"m", std::to_string(m)}};
  detail::finish(inst);
  return inst;
}

/// Fixed-slot finite sum formula with the Bernoulli constant on the right.
inline RelationInstance build_sum_finite(int k, int r, int i, bool star) {
  if (i < 1 || i > r || r > k - 1) {
    throw std::domain_error("finite sum formula requires 1 <= i <= r <= k-1");
  }
  RelationInstance inst;
  inst.family = star ? Family::sum_finite_star : Family::sum_finite;
  inst.space = star ? ValueSpace::finite_zeta_star : ValueSpace::finite_zeta;
  for (const auto& t : detail::sum_formula_range(k, r, i)) inst.lhs.add(Term(t), 1);
  Int sign_i = (i % 2 == 0) ? 1 : -1;
  Int sign_r = (r % 2 == 0) ? 1 : -1;
  Int coeff = star ? sign_i * (sign_r * binom(k - 1, i - 1) + binom(k - 1, r - i))
                   : sign_i * (binom(k - 1, i - 1) + sign_r * binom(k - 1, r - i));
  inst.rhs = LinComb::zconst(k, Rat(coeff));
  inst.id = std::string(family_name(inst.family)) + "/k=" + std::to_string(k) +
            "/r=" + std::to_string(r) + "/i=" + std::to_string(i);
  inst.params = {{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"i", std::to_string(i)}};
  detail::finish(inst);
  return inst;
}

/// Hoffman duality: z*_F(k) = -z*_F(k^vee).
inline RelationInstance build_duality_finite(const Index& k) {
  if (k.empty()) throw std::domain_error("duality_finite requires a nonempty index");
  RelationInstance inst;
  inst.family = Family::duality_finite;
  inst.space = ValueSpace::finite_zeta_star;
  inst.lhs = LinComb::term(k);
  inst.rhs = LinComb::term(hoffman_dual(k), -1);
  inst.id = "duality_finite/k=" + detail::idx_id(k);
  inst.params = {{"k", detail::idx_id(k)}};
  detail::finish(inst);
  return inst;
}

/// Oyama's theorem: sum z_F(k+e) = sum z_F((k^vee + e)^vee).
inline RelationInstance build_oyama(const Index& k, int m) {
  if (k.empty()) throw std::domain_error("oyama requires a nonempty index");
  RelationInstance inst;
  inst.family = Family::oyama;
  inst.space = ValueSpace::finite_zeta;
  inst.lhs = detail::ohno_sum(k, m);
  inst.rhs = map_linear([](const Index& x) { return hoffman_dual(x); },
                        detail::ohno_sum(hoffman_dual(k), m));
  inst.id = "oyama/k=" + detail::idx_id(k) + "/m=" + std::to_string(m);
  inst.params = {{"k", detail::idx_id(k)}, {"m", std::to_string(m)}};
  detail::finish(inst);
  return inst;
}

/// Ohno-type relation for finite star values:
///   sum c2(k,e) z*_F(k+e) = -sum z*_F(k^vee + e).
inline RelationInstance build_ohno_star_finite(const Index& k, int m) {
  if (k.empty()) throw std::domain_error("ohno_star_finite requires a nonempty index");
  RelationInstance inst;
  inst.family = Family::ohno_star_finite;
  inst.space = ValueSpace::finite_zeta_star;
  for (const auto& e : compositions(m, k.depth())) {
    inst.lhs.add(Term(oplus(k, e)), Rat(ohno_coefficient(OhnoKind::c2, k, e)));
  }
  inst.rhs = -detail::ohno_sum(hoffman_dual(k), m);
  inst.id = "ohno_star_finite/k=" + detail::idx_id(k) + "/m=" + std::to_string(m);
  inst.params = {{"k", detail::idx_id(k)}, {"m", std::to_string(m)}};
  detail::finish(inst);
  return inst;
}

namespace detail {
inline Index star_plus(const Index& x) { return raise_last(hoffman_dual(x)); }
}

/// Linear part of Kawashima's relation: z*(P((k star l)^vee)) = 0.
inline RelationInstance build_kawashima_linear(const Index& k, const Index& l) {
  if (k.empty() || l.empty()) throw std::domain_error("kawashima_linear requires nonempty indices");
  RelationInstance inst;
  inst.family = Family::kawashima_linear;
  inst.space = ValueSpace::real_zeta_star;
  inst.lhs = map_linear(detail::star_plus, harmonic(k, l));
  inst.rhs = LinComb{};
  inst.id = "kawashima_linear/k=" + detail::idx_id(k) + "/l=" + detail::idx_id(l);
  inst.params = {{"k", detail::idx_id(k)}, {"l", detail::idx_id(l)}};
  detail::finish(inst);
  return inst;
}

/// z*(P((k sha {1}^m)^vee)) = sum_e z*(P((k+e)^vee)).
inline RelationInstance build_lemma24(const Index& k, int m) {
  if (k.empty()) throw std::domain_error("lemma24 requires a nonempty index");
  RelationInstance inst;
  inst.family = Family::lemma24;
  inst.space = ValueSpace::real_zeta_star;
  inst.lhs = map_linear(detail::star_plus, shuffle(k, ones(m)));
  inst.rhs = map_linear(detail::star_plus, detail::ohno_sum(k, m));
  inst.id = "lemma24/k=" + detail::idx_id(k) + "/m=" + std::to_string(m);
  inst.params = {{"k", detail::idx_id(k)}, {"m", std::to_string(m)}};
  detail::finish(inst);
  return inst;
}

/// z*_F(k sha {1}^m) = sum_e z*_F(k+e).
inline RelationInstance build_lemma25(const Index& k, int m) {
  RelationInstance inst;
  inst.family = Family::lemma25;
  inst.space = ValueSpace::finite_zeta_star;
  inst.lhs = shuffle(k, ones(m));
  inst.rhs = detail::ohno_sum(k, m);
  inst.id = "lemma25/k=" + detail::idx_id(k) + "/m=" + std::to_string(m);
  inst.params = {{"k", detail::idx_id(k)}, {"m", std::to_string(m)}};
  detail::finish(inst);
  return inst;
}

/// z*_F({1}^i) = 0.
inline RelationInstance build_star_ones(int i) {
  if (i < 1) throw std::domain_error("star_ones requires i >= 1");
  RelationInstance inst;
  inst.family = Family::star_ones;
  inst.space = ValueSpace::finite_zeta_star;
  inst.lhs = LinComb::term(ones(i));
  inst.rhs = LinComb{};
  inst.id = "star_ones/i=" + std::to_string(i);
  inst.params = {{"i", std::to_string(i)}};
  detail::finish(inst);
  return inst;
}

/// z*_F(k star l) = z*_F(k) z*_F(l); the right side stays a product node.
inline RelationInstance build_harmonic_hom(const Index& k, const Index& l) {
  RelationInstance inst;
  inst.family = Family::harmonic_hom;
  inst.space = ValueSpace::finite_zeta_star;
  inst.lhs = harmonic(k, l);
  inst.rhs_product = std::make_pair(k, l);
  inst.id = "harmonic_hom/k=" + detail::idx_id(k) + "/l=" + detail::idx_id(l);
  inst.params = {{"k", detail::idx_id(k)}, {"l", detail::idx_id(l)}};
  detail::finish(inst);
  return inst;
}

/// Depth-2 closed form: z*_F(k1,k2) = -(-1)^{k1} binom(k1+k2, k1) Z(k1+k2).
inline RelationInstance build_star_depth2(int k1, int k2) {
  if (k1 < 1 || k2 < 1) throw std::domain_error("star_depth2 requires k1, k2 >= 1");
  RelationInstance inst;
  inst.family = Family::star_depth2;
  inst.space = ValueSpace::finite_zeta_star;
  inst.lhs = LinComb::term(Index{k1, k2});
  Int coeff = -(k1 % 2 == 0 ? 1 : -1) * binom(k1 + k2, k1);
  inst.rhs = LinComb::zconst(k1 + k2, Rat(coeff));
  inst.id = "star_depth2/k=" + std::to_string(k1) + "," + std::to_string(k2);
  inst.params = {{"k", std::to_string(k1) + "," + std::to_string(k2)}};
  detail::finish(inst);
  return inst;
}

struct EnumBounds {
  /// Cap on wt(k)+m (Ohno-type families), wt(k)+wt(l) (pair families),
  /// the scalar weight k (sum families), or wt(k) (duality families).
  int max_total_weight = 6;
};

/// Every valid parameter combination within the bounds, each exactly once.
/// Order: total weight ascending; within a weight, indices in the
/// indices_of_weight order with m (or the partner index / slot parameters)
/// ascending innermost.
inline std::vector<RelationInstance> enumerate_instances(Family f, const EnumBounds& b) {
  const int W = b.max_total_weight;
  std::vector<RelationInstance> out;
  auto ohno_like = [&](auto&& build, bool allow_empty, bool require_admissible) {
    if (allow_empty) {
      for (int m = 0; m <= W; ++m) out.push_back(build(Index{}, m));
    }
    for (const Index& k : indices_up_to_weight(W)) {
      if (require_admissible && !k.admissible()) continue;
      for (int m = 0; m + k.weight() <= W; ++m) out.push_back(build(k, m));
    }
  };
  auto pair_family = [&](auto&& build) {
    for (int w = 2; w <= W; ++w) {
      for (int wk = 1; wk < w; ++wk) {
        for (const Index& k : indices_of_weight(wk)) {
          for (const Index& l : indices_of_weight(w - wk)) {
            out.push_back(build(k, l));
          }
        }
      }
    }
  };
  switch (f) {
    case Family::sum_classical:
    case Family::sum_classical_star:
      for (int k = 2; k <= W; ++k)
        for (int r = 1; r <= k - 1; ++r)
          out.push_back(build_sum_classical(k, r, f == Family::sum_classical_star));
      break;
    case Family::duality_classical:
      out.push_back(build_duality_classical(Index{}));
      for (const Index& k : indices_up_to_weight(W))
        if (k.admissible()) out.push_back(build_duality_classical(k));
      break;
    case Family::ohno:
      ohno_like([](const Index& k, int m) { return build_ohno(k, m); }, true, true);
      break;
    case Family::ohno_star:
      ohno_like([](const Index& k, int m) { return build_ohno_star(k, m); }, false, true);
      break;
    case Family::sum_finite:
    case Family::sum_finite_star:
      for (int k = 2; k <= W; ++k)
        for (int r = 1; r <= k - 1; ++r)
          for (int i = 1; i <= r; ++i)
            out.push_back(build_sum_finite(k, r, i, f == Family::sum_finite_star));
      break;
    case Family::duality_finite:
      for (const Index& k : indices_up_to_weight(W)) out.push_back(build_duality_finite(k));
      break;
    case Family::oyama:
      ohno_like([](const Index& k, int m) { return build_oyama(k, m); }, false, false);
      break;
    case Family::ohno_star_finite:
      ohno_like([](const Index& k, int m) { return build_ohno_star_finite(k, m); }, false, false);
      break;
    case Family::kawashima_linear:
      pair_family([](const Index& k, const Index& l) { return build_kawashima_linear(k, l); });
      break;
    case Family::lemma24:
      ohno_like([](const Index& k, int m) { return build_lemma24(k, m); }, false, false);
      break;
    case Family::lemma25:
      ohno_like([](const Index& k, int m) { return build_lemma25(k, m); }, true, false);
      break;
    case Family::star_ones:
      for (int i = 1; i <= W; ++i) out.push_back(build_star_ones(i));
      break;
    case Family::harmonic_hom:
      pair_family([](const Index& k, const Index& l) { return build_harmonic_hom(k, l); });
      break;
    case Family::star_depth2:
      for (int w = 2; w <= W; ++w)
        for (int k1 = 1; k1 < w; ++k1) out.push_back(build_star_depth2(k1, w - k1));
      break;
  }
  return out;
}

}  // namespace mzsv
