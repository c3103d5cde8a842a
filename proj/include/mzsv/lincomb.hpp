#pragma once

#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <variant>

#include "mzsv/combinatorics.hpp"
#include "mzsv/index.hpp"

namespace mzsv {

/// The symbolic constant Z(k), k >= 2. Only relation builders produce it;
/// the products never do.
struct ZConst {
  int k;
  friend auto operator<=>(const ZConst&, const ZConst&) = default;
};

/// Either an index or a Z(k) constant. Variant order puts all index terms
/// before all constants, each block lexicographic.
using Term = std::variant<Index, ZConst>;

inline std::string term_str(const Term& t) {
  if (const auto* idx = std::get_if<Index>(&t)) return idx->display();
  return "Z(" + std::to_string(std::get<ZConst>(t).k) + ")";
}

/// A finite rational-linear combination of Terms. Zero coefficients are
/// never stored, so map equality is linear-combination equality.
class LinComb {
 public:
  LinComb() = default;

  static LinComb term(Index k, Rat c = 1) {
    LinComb x;
    x.add(Term(std::move(k)), c);
    return x;
  }

  static LinComb zconst(int k, Rat c = 1) {
    if (k < 2) throw std::domain_error("Z(k) requires k >= 2");
    LinComb x;
    x.add(Term(ZConst{k}), c);
    return x;
  }

  LinComb& add(const Term& t, const Rat& c) {
    if (c == 0) return *this;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  LinComb& operator+=(const LinComb& o) {
    for (const auto& [t, c] : o.terms_) add(t, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    for (const auto& [t, c] : o.terms_) add(t, -c);
    return *this;
  }
  LinComb& operator*=(const Rat& q) {
    if (q == 0) {
      terms_.clear();
    } else {
      for (auto& [t, c] : terms_) c *= q;
    }
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator*(const Rat& q, LinComb a) { return a *= q; }
  friend LinComb operator-(LinComb a) { return a *= -1; }

  friend bool operator==(const LinComb&, const LinComb&) = default;

  const std::map<Term, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool pure_indices() const {
    for (const auto& [t, c] : terms_) {
      if (!std::holds_alternative<Index>(t)) return false;
    }
    return true;
  }

  /// "2*(1,1) - (2)" in canonical term order; "0" when empty.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : terms_) {
      Rat mag = c < 0 ? Rat(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (mag != 1) os << mag << "*";
      os << term_str(t);
      first = false;
    }
    return os.str();
  }

 private:
  std::map<Term, Rat> terms_;
};

inline Index ones(int m) {
  return Index(std::vector<int>(static_cast<std::size_t>(m), 1));
}

namespace detail {

/// (h, k) applied termwise; defined only for pure index combinations.
inline LinComb prepend(int h, const LinComb& x) {
  LinComb out;
  for (const auto& [t, c] : x.terms()) {
    const Index& k = std::get<Index>(t);
    std::vector<int> p;
    p.reserve(k.parts().size() + 1);
    p.push_back(h);
    p.insert(p.end(), k.parts().begin(), k.parts().end());
    out.add(Term(Index(std::move(p))), c);
  }
  return out;
}

inline LinComb shuffle_span(std::span<const int> a, std::span<const int> b) {
  if (a.empty()) return LinComb::term(Index(std::vector<int>(b.begin(), b.end())));
  if (b.empty()) return LinComb::term(Index(std::vector<int>(a.begin(), a.end())));
  LinComb r = prepend(a[0], shuffle_span(a.subspan(1), b));
  r += prepend(b[0], shuffle_span(a, b.subspan(1)));
  return r;
}

inline LinComb harmonic_span(std::span<const int> a, std::span<const int> b) {
  if (a.empty()) return LinComb::term(Index(std::vector<int>(b.begin(), b.end())));
  if (b.empty()) return LinComb::term(Index(std::vector<int>(a.begin(), a.end())));
  LinComb r = prepend(a[0], harmonic_span(a.subspan(1), b));
  r += prepend(b[0], harmonic_span(a, b.subspan(1)));
  r -= prepend(a[0] + b[0], harmonic_span(a.subspan(1), b.subspan(1)));
  return r;
}

inline void require_indices(const LinComb& x, const char* op) {
  if (!x.pure_indices()) {
    throw std::domain_error(std::string(op) + ": Z(k) terms are not allowed");
  }
}

}  // namespace detail

/// The component-level shuffle product, extended bilinearly. Components are
/// atomic letters here; this is not the iterated-integral shuffle.
inline LinComb shuffle(const LinComb& x, const LinComb& y) {
  detail::require_indices(x, "shuffle");
  detail::require_indices(y, "shuffle");
  LinComb out;
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      LinComb prod = detail::shuffle_span(std::get<Index>(tx).parts(), std::get<Index>(ty).parts());
      prod *= cx * cy;
      out += prod;
    }
  }
  return out;
}

/// The harmonic (stuffle) product, extended bilinearly.
inline LinComb harmonic(const LinComb& x, const LinComb& y) {
  detail::require_indices(x, "harmonic");
  detail::require_indices(y, "harmonic");
  LinComb out;
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      LinComb prod = detail::harmonic_span(std::get<Index>(tx).parts(), std::get<Index>(ty).parts());
      prod *= cx * cy;
      out += prod;
    }
  }
  return out;
}

inline LinComb shuffle(const Index& a, const Index& b) {
  return detail::shuffle_span(a.parts(), b.parts());
}

inline LinComb harmonic(const Index& a, const Index& b) {
  return detail::harmonic_span(a.parts(), b.parts());
}

/// Termwise application of an index map with coefficient merging.
inline LinComb map_linear(const std::function<Index(const Index&)>& f, const LinComb& x) {
  LinComb out;
  for (const auto& [t, c] : x.terms()) {
    const auto* idx = std::get_if<Index>(&t);
    if (!idx) throw std::domain_error("map_linear: cannot map the term " + term_str(t));
    out.add(Term(f(*idx)), c);
  }
  return out;
}

/// Both sides of k sha {1}^m = sum_{i<=m} sum_{wt(e)=m-i} (k+e) star {1}^i.
inline std::pair<LinComb, LinComb> lemma21_sides(const Index& k, int m) {
  LinComb left = shuffle(k, ones(m));
  LinComb right;
  for (int i = 0; i <= m; ++i) {
    for (const auto& e : compositions(m - i, k.depth())) {
      right += harmonic(oplus(k, e), ones(i));
    }
  }
  return {left, right};
}

/// Both sides of (k^vee sha {1}^m)^vee = sum_{wt(e)=m} c2(k,e) (k+e).
inline std::pair<LinComb, LinComb> lemma22_sides(const Index& k, int m) {
  if (k.empty()) throw std::domain_error("lemma22_sides requires a nonempty index");
  LinComb left = map_linear([](const Index& x) { return hoffman_dual(x); },
                            shuffle(hoffman_dual(k), ones(m)));
  LinComb right;
  for (const auto& e : compositions(m, k.depth())) {
    right.add(Term(oplus(k, e)), Rat(ohno_coefficient(OhnoKind::c2, k, e)));
  }
  return {left, right};
}

}  // namespace mzsv
