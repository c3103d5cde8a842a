#include "catch_amalgamated.hpp"

#include "mzsv/combinatorics.hpp"
#include "mzsv/index.hpp"

using namespace mzsv;

namespace {

// Independent oracle for the dual: the run-length block description
// ({1}^{a_1-1}, b_1+1, ..., {1}^{a_s-1}, b_s+1) |-> ({1}^{b_s-1}, a_s+1, ..., {1}^{b_1-1}, a_1+1).
Index dagger_blocks(const Index& k) {
  REQUIRE(k.admissible());
  if (k.empty()) return k;
  std::vector<std::pair<int, int>> blocks;  // (a_i, b_i)
  std::size_t pos = 0;
  const auto& p = k.parts();
  while (pos < p.size()) {
    int a = 1;
    while (p[pos] == 1) {
      ++a;
      ++pos;
    }
    blocks.emplace_back(a, p[pos] - 1);
    ++pos;
  }
  std::vector<int> out;
  for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) {
    for (int j = 0; j < it->second - 1; ++j) out.push_back(1);
    out.push_back(it->first + 1);
  }
  return Index(out);
}

}  // namespace

TEST_CASE("parse_index") {
  CHECK(Index::parse("1,2") == Index{1, 2});
  CHECK(Index::parse("") == Index{});
  CHECK(Index::parse("()") == Index{});
  CHECK(Index::parse(" 2 , 1 ") == Index{2, 1});
  CHECK_THROWS_WITH(Index::parse("3,0"), Catch::Matchers::ContainsSubstring("must be >= 1"));
  CHECK_THROWS_WITH(Index::parse("1,x"), Catch::Matchers::ContainsSubstring("x"));
  CHECK_THROWS(Index::parse("1,-2"));
  CHECK_THROWS(Index::parse("1,,2"));
}

TEST_CASE("classify") {
  auto c = classify(Index{1, 2});
  CHECK(c.weight == 3);
  CHECK(c.depth == 2);
  CHECK(c.admissible);

  c = classify(Index{1, 1});
  CHECK(c.weight == 2);
  CHECK(c.depth == 2);
  CHECK_FALSE(c.admissible);

  c = classify(Index{});
  CHECK(c.weight == 0);
  CHECK(c.depth == 0);
  CHECK(c.admissible);
}

TEST_CASE("dagger examples") {
  CHECK(dagger(Index{2}) == Index{2});
  CHECK(dagger(Index{3}) == Index{1, 2});
  CHECK(dagger(Index{1, 2}) == Index{3});
  CHECK(dagger(Index{}) == Index{});
  CHECK_THROWS_AS(dagger(Index{2, 1}), std::domain_error);
}

TEST_CASE("hoffman_dual examples") {
  CHECK(hoffman_dual(Index{1}) == Index{1});
  CHECK(hoffman_dual(Index{2, 1}) == Index{1, 2});
  CHECK(hoffman_dual(Index{2}) == Index{1, 1});
  CHECK(hoffman_dual(Index{1, 1, 1}) == Index{3});
  CHECK_THROWS_AS(hoffman_dual(Index{}), std::domain_error);
}

TEST_CASE("reverse and raise_last") {
  CHECK(reversed(Index{1, 2}) == Index{2, 1});
  CHECK(reversed(Index{3}) == Index{3});
  CHECK(reversed(Index{}) == Index{});
  CHECK(raise_last(Index{1, 1}) == Index{1, 2});
  CHECK(raise_last(Index{2}) == Index{3});
  CHECK_THROWS_AS(raise_last(Index{}), std::domain_error);
}

TEST_CASE("oplus") {
  CHECK(oplus(Index{1, 2}, {0, 1}) == Index{1, 3});
  CHECK(oplus(Index{2}, {0}) == Index{2});
  CHECK_THROWS_AS(oplus(Index{1, 2}, {1}), std::domain_error);
}

TEST_CASE("duality laws, exhaustive to weight 12") {
  for (int w = 0; w <= 12; ++w) {
    for (const Index& k : indices_of_weight(w)) {
      if (k.admissible()) {
        Index d = dagger(k);
        CHECK(d == dagger_blocks(k));
        CHECK(d.weight() == k.weight());
        CHECK(dagger(d) == k);
        if (!k.empty()) CHECK(d.depth() == k.weight() - k.depth());
      }
      if (!k.empty()) {
        Index h = hoffman_dual(k);
        CHECK(h.weight() == k.weight());
        CHECK(hoffman_dual(h) == k);
      }
    }
  }
}

TEST_CASE("bridge identity dagger(P(l)) = P(R(l^vee)), weight <= 10") {
  for (int w = 1; w <= 10; ++w) {
    for (const Index& l : indices_of_weight(w)) {
      CHECK(dagger(raise_last(l)) == raise_last(reversed(hoffman_dual(l))));
    }
  }
}

TEST_CASE("parse/format round trip") {
  for (int w = 0; w <= 8; ++w) {
    for (const Index& k : indices_of_weight(w)) {
      CHECK(Index::parse(k.str()) == k);
    }
  }
}
