#include <doctest.h>

#include <stdexcept>

#include "nlhorn/errors.hpp"
#include "nlhorn/partition.hpp"
#include "oracles.hpp"

using namespace nlhorn;

TEST_CASE("construction trims and validates") {
  CHECK(Partition({3, 1, 1}) == Partition({3, 1, 1, 0, 0}));
  CHECK(Partition(std::vector<int>{}).empty());
  CHECK(Partition({0, 0}).empty());
  CHECK(Partition({3, 1}).part(1) == 3);
  CHECK(Partition({3, 1}).part(2) == 1);
  CHECK(Partition({3, 1}).part(7) == 0);
  CHECK(Partition({3, 1}).size() == 4);
  CHECK(Partition({3, 1}).rows() == 2);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("parse and print round-trip") {
  CHECK(Partition::parse("3,1,1") == Partition({3, 1, 1}));
  CHECK(Partition::parse("0").empty());
  CHECK(Partition::parse("").empty());
  CHECK(Partition::parse("3,1,1").str() == "3,1,1");
  CHECK(Partition{}.str() == "0");
  CHECK_THROWS_AS(Partition::parse("1,2"), ParseError);
  CHECK_THROWS_AS(Partition::parse("a"), ParseError);
  CHECK_THROWS_AS(Partition::parse("1,"), ParseError);
  for (const Partition& p : oracle::small_partitions(8)) CHECK(Partition::parse(p.str()) == p);
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition{}).empty());
  for (const Partition& p : oracle::small_partitions(9)) {
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(conjugate(p).size() == p.size());
  }
}

TEST_CASE("meet") {
  CHECK(meet(Partition({3, 1}), Partition({2, 2})) == Partition({2, 1}));
  for (const Partition& a : oracle::small_partitions(6))
    for (const Partition& b : oracle::small_partitions(6)) {
      const Partition m = meet(a, b);
      CHECK(m == meet(b, a));
      CHECK(contains(a, m));
      CHECK(contains(b, m));
      // meet commutes with conjugation
      CHECK(conjugate(m) == meet(conjugate(a), conjugate(b)));
    }
}

TEST_CASE("containment") {
  CHECK(contains(Partition({3, 2}), Partition({2, 2})));
  CHECK_FALSE(contains(Partition({3, 2}), Partition({2, 2, 1})));
  CHECK(contains(Partition({3, 2}), Partition{}));
  for (const Partition& a : oracle::small_partitions(6))
    for (const Partition& b : oracle::small_partitions(6))
      CHECK(contains(a, b) == contains(conjugate(a), conjugate(b)));
}

TEST_CASE("strips") {
  CHECK(is_horizontal_strip(Partition({2, 2}), Partition({2})));
  CHECK_FALSE(is_horizontal_strip(Partition({2, 2}), Partition({1})));
  CHECK(is_vertical_strip(Partition({2, 1}), Partition({1, 1})));
  CHECK(is_vertical_strip(Partition({1, 1}), Partition{}));
  CHECK_FALSE(is_vertical_strip(Partition({2}), Partition{}));
  // duality: outer/inner is a horizontal strip iff the conjugates form a vertical strip
  for (const Partition& a : oracle::small_partitions(7))
    for (const Partition& b : oracle::small_partitions(7))
      CHECK(is_horizontal_strip(a, b) == is_vertical_strip(conjugate(a), conjugate(b)));
}

TEST_CASE("box complement") {
  CHECK(box_complement(Partition({2, 1}), 3, 2) == Partition({2, 1}));
  CHECK(box_complement(Partition{}, 2, 2) == Partition({2, 2}));
  CHECK(box_complement(Partition({2, 2}), 2, 2).empty());
  CHECK_THROWS_AS(box_complement(Partition({3}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(box_complement(Partition({1, 1, 1}), 2, 2), std::invalid_argument);
  for (const Partition& p : oracle::small_partitions(6)) {
    const int h = p.rows() + 1, w = p.part(1) + 2;
    CHECK(box_complement(box_complement(p, w, h), w, h) == p);
  }
}

TEST_CASE("pad") {
  CHECK(pad(Partition({2, 1}), 4) == std::vector<int>{2, 1, 0, 0});
  CHECK_THROWS_AS(pad(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("index sets") {
  const IndexSet s({1, 3, 4}, 5);
  CHECK(s.card() == 3);
  CHECK(s.ambient() == 5);
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(2));
  CHECK(s.complement() == IndexSet({2, 5}, 5));
  CHECK(s.complement().complement() == s);
  CHECK(s.extended(2) == IndexSet({1, 3, 4, 6, 7}, 7));
  CHECK(s.str() == "{1,3,4}");
  CHECK(IndexSet::parse("{1,3,4}", 5) == s);
  CHECK(IndexSet::parse("{}").card() == 0);
  CHECK(IndexSet::parse("{2,4}").ambient() == 4);
  CHECK_THROWS_AS(IndexSet::parse("1,2"), ParseError);
  CHECK_THROWS_AS(IndexSet::parse("{2,1}"), ParseError);
  CHECK_THROWS_AS(IndexSet({0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(IndexSet({4}, 3), std::invalid_argument);
}

TEST_CASE("tau") {
  CHECK(tau(IndexSet::parse("{2,4}")) == Partition({2, 1}));
  CHECK(tau(IndexSet::parse("{1,2,3}")).empty());
  CHECK(tau(IndexSet({}, 4)).empty());
  CHECK(tau(IndexSet({5}, 5)) == Partition({4}));
  // tau is monotone in each element and kills prefixes
  for (int n = 1; n <= 4; ++n) {
    std::vector<int> prefix;
    for (int i = 1; i <= n; ++i) prefix.push_back(i);
    CHECK(tau(IndexSet(prefix, n)).empty());
  }
}
