#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mzsv {

/// A finite sequence of positive integers, possibly empty.
///
/// Canonical text form is comma-separated with no spaces; the empty
/// index parses from "" and displays as "()".
class Index {
 public:
  Index() = default;

  explicit Index(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int c : parts_) {
      if (c < 1) throw std::domain_error("index component must be >= 1");
    }
  }

  Index(std::initializer_list<int> parts) : Index(std::vector<int>(parts)) {}

  static Index parse(std::string_view text) {
    std::string s;
    for (char c : text) {
      if (c != ' ' && c != '\t') s += c;
    }
    if (s.empty() || s == "()") return Index{};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("invalid index component '" + tok + "'");
      }
      if (v < 1) {
        throw std::invalid_argument("component must be >= 1, got '" + tok + "'");
      }
      parts.push_back(v);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return Index(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int depth() const { return static_cast<int>(parts_.size()); }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool admissible() const { return parts_.empty() || parts_.back() >= 2; }

  /// Canonical text form, e.g. "1,2"; empty index yields "".
  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  /// Parenthesized form used in reports, e.g. "(1,2)"; empty is "()".
  std::string display() const { return "(" + str() + ")"; }

  friend auto operator<=>(const Index&, const Index&) = default;

 private:
  std::vector<int> parts_;
};

struct IndexInfo {
  int weight = 0;
  int depth = 0;
  bool admissible = false;
};

inline IndexInfo classify(const Index& k) {
  return {k.weight(), k.depth(), k.admissible()};
}

/// The operator R: components in reverse order.
inline Index reversed(const Index& k) {
  std::vector<int> p(k.parts().rbegin(), k.parts().rend());
  return Index(std::move(p));
}

/// The operator P: last component raised by one. The result is admissible.
inline Index raise_last(const Index& k) {
  if (k.empty()) throw std::domain_error("raise_last requires a nonempty index");
  std::vector<int> p = k.parts();
  ++p.back();
  return Index(std::move(p));
}

/// Componentwise sum with a shift vector of nonnegative integers.
inline Index oplus(const Index& k, const std::vector<int>& e) {
  if (static_cast<int>(e.size()) != k.depth()) {
    throw std::domain_error("oplus: depth mismatch");
  }
  std::vector<int> p = k.parts();
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (e[i] < 0) throw std::domain_error("oplus: shift entries must be >= 0");
    p[i] += e[i];
  }
  return Index(std::move(p));
}

/// Dual of an admissible index.
///
/// Encode component c as the letter block "a b^{c-1}", reverse the word,
/// swap the letters, decode. Agrees with the run-length block description
/// of the dual; the empty index is self-dual.
inline Index dagger(const Index& k) {
  if (!k.admissible()) throw std::domain_error("dagger requires an admissible index");
  if (k.empty()) return k;
  std::string word;
  for (int c : k.parts()) {
    word += 'a';
    word.append(static_cast<std::size_t>(c - 1), 'b');
  }
  std::reverse(word.begin(), word.end());
  std::vector<int> out;
  for (char ch : word) {
    // swapped alphabet: 'b' opens a component, 'a' extends it
    if (ch == 'b') {
      out.push_back(1);
    } else {
      ++out.back();
    }
  }
  return Index(std::move(out));
}

/// Hoffman's dual of a nonempty index.
///
/// View a weight-w index as w units joined by w-1 separators, each either
/// a merge (inside a component) or a cut (between components); the dual
/// flips every separator. Total on nonempty indices and weight-preserving.
inline Index hoffman_dual(const Index& k) {
  if (k.empty()) throw std::domain_error("hoffman_dual requires a nonempty index");
  std::vector<bool> cut;  // separator i sits after unit i+1
  for (std::size_t i = 0; i < k.parts().size(); ++i) {
    for (int j = 0; j < k.parts()[i] - 1; ++j) cut.push_back(false);
    if (i + 1 < k.parts().size()) cut.push_back(true);
  }
  std::vector<int> out{1};
  for (bool c : cut) {
    if (!c) {  // flipped: merge became cut and vice versa
      out.push_back(1);
    } else {
      ++out.back();
    }
  }
  return Index(std::move(out));
}

}  // namespace mzsv
