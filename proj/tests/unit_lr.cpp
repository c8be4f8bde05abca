#include <doctest.h>

#include <stdexcept>

#include "nlhorn/lr.hpp"
#include "nlhorn/partition.hpp"
#include "oracles.hpp"

using namespace nlhorn;

TEST_CASE("pinned coefficients") {
  CHECK(oracle::lr_brute(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})) == 2);
  CHECK(lr_coefficient(Partition{}, Partition{}, Partition{}) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2, 1})) == 0);  // size mismatch
  CHECK(lr_coefficient(Partition({2}), Partition({2}), Partition({2, 1, 1})) == 0);
  CHECK(lr_positive(Partition({2}), Partition({2}), Partition({3, 1})));
  CHECK_FALSE(lr_positive(Partition({2}), Partition({2}), Partition({2, 1, 1})));
}

TEST_CASE("agrees with the brute oracle") {
  const auto smalls = oracle::small_partitions(6);
  for (const Partition& la : smalls)
    for (const Partition& mu : smalls) {
      if (mu.size() > la.size() || !contains(la, mu)) continue;
      for (const Partition& nu : smalls) {
        if (nu.size() != la.size() - mu.size()) continue;
        const long long expect = oracle::lr_brute(mu, nu, la);
        CHECK_MESSAGE(lr_coefficient(mu, nu, la) == expect,
                      mu.str(), " ", nu.str(), " ", la.str());
        CHECK(lr_positive(mu, nu, la) == (expect > 0));
      }
    }
}

TEST_CASE("commutativity and transpose symmetry") {
  const auto smalls = oracle::small_partitions(8);
  for (const Partition& la : smalls)
    for (const Partition& mu : smalls) {
      if (!contains(la, mu)) continue;
      for (const Partition& nu : smalls) {
        if (nu.size() != la.size() - mu.size()) continue;
        const long long c = lr_coefficient(mu, nu, la);
        CHECK(c == lr_coefficient(nu, mu, la));
        CHECK(c == lr_coefficient(conjugate(mu), conjugate(nu), conjugate(la)));
      }
    }
}

TEST_CASE("row Pieri rule is a horizontal strip indicator") {
  const auto smalls = oracle::small_partitions(7);
  for (const Partition& mu : smalls)
    for (const Partition& la : smalls) {
      if (!contains(la, mu)) continue;
      const long long p = la.size() - mu.size();
      const long long c = lr_coefficient(mu, Partition({static_cast<int>(p)}), la);
      CHECK(c == (is_horizontal_strip(la, mu) ? 1 : 0));
    }
}

TEST_CASE("box complement symmetry") {
  // c^la_{mu,nu} = c^{la^comp in n x (k+l)}_{mu^comp in n x k, nu^comp in n x l}
  const auto smalls = oracle::small_partitions(6);
  for (const Partition& la : smalls)
    for (const Partition& mu : smalls) {
      if (!contains(la, mu)) continue;
      for (const Partition& nu : smalls) {
        if (nu.size() != la.size() - mu.size()) continue;
        for (int n = std::max(la.part(1), 1); n <= la.part(1) + 1; ++n) {
          if (nu.part(1) > n) continue;  // nu must fit its box too
          for (int k = mu.rows(); k <= mu.rows() + 1; ++k) {
            for (int l = nu.rows(); l <= nu.rows() + 1; ++l) {
              if (la.rows() > k + l) continue;
              CHECK(lr_coefficient(mu, nu, la) ==
                    lr_coefficient(box_complement(mu, n, k), box_complement(nu, n, l),
                                   box_complement(la, n, k + l)));
            }
          }
        }
      }
    }
}

TEST_CASE("horn oracle") {
  CHECK_FALSE(lr_positive_horn(Partition({2}), Partition({2}), Partition({1, 1, 1, 1})));
  CHECK(lr_positive_horn(Partition({2}), Partition({2}), Partition({3, 1})));
  CHECK(lr_positive_horn(Partition{}, Partition{}, Partition{}));
  CHECK_THROWS_AS(lr_positive_horn(Partition({2}), Partition({2}), Partition({3})),
                  std::invalid_argument);

  // full agreement with the tableau engine on a small window
  const auto smalls = oracle::small_partitions(6);
  for (const Partition& la : smalls)
    for (const Partition& mu : smalls)
      for (const Partition& nu : smalls) {
        if (la.size() != mu.size() + nu.size()) continue;
        CHECK_MESSAGE(lr_positive_horn(mu, nu, la) == lr_positive(mu, nu, la),
                      mu.str(), " ", nu.str(), " ", la.str());
      }
}

TEST_CASE("cache invariance") {
  lr_clear_caches();
  const long long a = lr_coefficient(Partition({3, 2, 1}), Partition({3, 2, 1}),
                                     Partition({4, 4, 2, 1, 1}));
  const long long b = lr_coefficient(Partition({3, 2, 1}), Partition({3, 2, 1}),
                                     Partition({4, 4, 2, 1, 1}));
  lr_clear_caches();
  const long long c = lr_coefficient(Partition({3, 2, 1}), Partition({3, 2, 1}),
                                     Partition({4, 4, 2, 1, 1}));
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a == oracle::lr_brute(Partition({3, 2, 1}), Partition({3, 2, 1}),
                              Partition({4, 4, 2, 1, 1})));
}
