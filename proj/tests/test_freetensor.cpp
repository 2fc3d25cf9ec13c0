#include <random>

#include "doctest.h"
#include "koszul/words.hpp"

using namespace koszul;

TEST_CASE("enumerate_words conventions") {
  auto w22 = enumerate_words(2, 2);
  REQUIRE(w22.size() == 4);
  CHECK(w22[0] == Word{0, 0});
  CHECK(w22[1] == Word{0, 1});
  CHECK(w22[2] == Word{1, 0});
  CHECK(w22[3] == Word{1, 1});

  auto w30 = enumerate_words(3, 0);
  REQUIRE(w30.size() == 1);
  CHECK(w30[0].empty());

  auto w31 = enumerate_words(3, 1);
  REQUIRE(w31.size() == 3);
  CHECK(w31[2] == Word{2});
}

TEST_CASE("tensor_index is the base-d numeral") {
  CHECK(tensor_index(Word{0, 2}, 3) == 2);
  CHECK(tensor_index(Word{}, 3) == 0);
  CHECK(tensor_index(Word{1, 1}, 2) == 3);
}

TEST_CASE("tensor_index inverts enumeration for d <= 4, n <= 6") {
  for (std::uint32_t d = 1; d <= 4; ++d)
    for (std::uint32_t n = 0; n <= 6; ++n) {
      auto words = enumerate_words(d, n);
      for (std::uint32_t i = 0; i < words.size(); ++i) {
        CHECK(tensor_index(words[i], d) == i);
        CHECK(word_from_index(i, d, n) == words[i]);
      }
    }
}

TEST_CASE("size cap") {
  CHECK_THROWS_AS(word_count(4, 12), SizeCapExceeded);
  CHECK_THROWS_AS(enumerate_words(2, 3, 7), SizeCapExceeded);
}

TEST_CASE("concat on words and polys") {
  CHECK(concat(Word{0, 1}, Word{2}) == Word{0, 1, 2});

  NCPoly p = NCPoly::monomial(Word{0});
  p.add_term(Word{1}, 1);
  NCPoly q = NCPoly::monomial(Word{0});
  NCPoly pq = concat(p, q);  // (x + y) * x = xx + yx
  CHECK(pq.degree == 2);
  CHECK(pq.terms.at(Word{0, 0}) == 1);
  CHECK(pq.terms.at(Word{1, 0}) == 1);
  CHECK(pq.terms.size() == 2);

  NCPoly unit = NCPoly::monomial(Word{});
  CHECK(concat(p, unit) == p);
}

TEST_CASE("concat is associative and degree-additive on random polys") {
  std::mt19937 rng(777);
  auto random_poly = [&](std::uint32_t d, std::uint32_t deg) {
    NCPoly p;
    p.degree = deg;
    int terms = 1 + rng() % 3;
    for (int t = 0; t < terms; ++t) {
      Word w(deg);
      for (auto& c : w) c = static_cast<std::uint8_t>(rng() % d);
      p.add_term(std::move(w), static_cast<long long>(rng() % 7) - 3);
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    std::uint32_t d = 2 + rng() % 3;
    NCPoly a = random_poly(d, rng() % 3), b = random_poly(d, 1 + rng() % 2),
           c = random_poly(d, rng() % 3);
    CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    CHECK(concat(a, b).degree == a.degree + b.degree);
  }
}

TEST_CASE("embed_relation examples and counting") {
  NCPoly xy = NCPoly::monomial(Word{0, 1});
  std::vector<IntVec> got;
  embed_relation(xy, 0, 2, 2, [&](const IntVec& v) { got.push_back(v); });
  REQUIRE(got.size() == 1);
  CHECK(got[0] == IntVec{{tensor_index(Word{0, 1}, 2), 1}});

  NCPoly comm = NCPoly::monomial(Word{0, 1});
  comm.add_term(Word{1, 0}, -1);
  got.clear();
  embed_relation(comm, 0, 2, 2, [&](const IntVec& v) { got.push_back(v); });
  REQUIRE(got.size() == 1);
  CHECK(got[0] == IntVec{{1, 1}, {2, -1}});

  NCPoly xx = NCPoly::monomial(Word{0, 0});
  got.clear();
  embed_relation(xx, 1, 3, 2, [&](const IntVec& v) { got.push_back(v); });
  REQUIRE(got.size() == 2);  // left padding x and y
  CHECK(got[0] == IntVec{{tensor_index(Word{0, 0, 0}, 2), 1}});
  CHECK(got[1] == IntVec{{tensor_index(Word{1, 0, 0}, 2), 1}});

  // per position the stream has d^(n-2) vectors
  for (std::uint32_t d = 2; d <= 3; ++d)
    for (std::uint32_t n = 2; n <= 5; ++n) {
      std::size_t total = 0;
      for (std::uint32_t left = 0; left + 2 <= n; ++left) {
        std::size_t here = 0;
        embed_relation(xx, left, n, d, [&](const IntVec&) { ++here; });
        std::size_t expect = 1;
        for (std::uint32_t i = 0; i + 2 < n; ++i) expect *= d;
        CHECK(here == expect);
        total += here;
      }
      std::size_t expect_total = (n - 1);
      std::size_t dn2 = 1;
      for (std::uint32_t i = 0; i + 2 < n; ++i) dn2 *= d;
      CHECK(total == expect_total * dn2);
    }
}
