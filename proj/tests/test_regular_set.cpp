#include <doctest.h>

#include <random>

#include "wreathdec/regular_set.hpp"

using namespace wreathdec;

TEST_CASE("regularity test with witnesses") {
  CHECK(is_regular(pi_set(6).members()).regular);
  CHECK(is_regular(f_set(15)).regular);

  std::vector<Permutation> copies(11, Permutation::identity(11));
  const auto report = is_regular(copies);
  CHECK_FALSE(report.regular);
  CHECK(report.j == 0);
  CHECK(report.k1 == 0);
  CHECK(report.k2 == 1);

  CHECK_THROWS_AS(RegularSet{copies}, std::invalid_argument);

  // regularity restated: every point's image set is all of Z_m
  for (int m : {5, 8, 13}) {
    const RegularSet s = (m % 2 == 1 && m >= 5) ? f_regular_set(m) : pi_set(m);
    for (int j = 0; j < m; ++j) {
      std::vector<char> hit(static_cast<std::size_t>(m), 0);
      for (int k = 0; k < m; ++k) hit[static_cast<std::size_t>(s[k].apply(j))] = 1;
      CHECK(std::count(hit.begin(), hit.end(), 1) == m);
    }
  }
}

TEST_CASE("left translation preserves regularity") {
  CHECK(left_mul(Permutation::identity(8), pi_set(8)) == pi_set(8));

  // the mu-set of the even-m constructions
  const RegularSet mu = left_mul(Permutation::transposition(8, 1, 6), pi_set(8));
  CHECK(is_regular(mu.members()).regular);
  CHECK(mu[1] == compose(Permutation::transposition(8, 1, 6), pi(8, 1)));

  // the m = 11 translate
  const RegularSet r2 = left_mul(Permutation::transposition(11, 0, 10), f_regular_set(11));
  CHECK(is_regular(r2.members()).regular);
  CHECK(r2[3] == compose(Permutation::transposition(11, 0, 10), f_sigma(11, 3)));

  std::mt19937 rng(31337);
  for (int rep = 0; rep < 1000; ++rep) {
    const int pick = static_cast<int>(rng() % 3);
    const int m = (pick == 1) ? (5 + 2 * static_cast<int>(rng() % 6)) : (4 + static_cast<int>(rng() % 10));
    RegularSet base = (pick == 1) ? f_regular_set(m) : pi_set(m);
    if (pick == 2) base = left_mul(Permutation::transposition(m, 0, 1 + static_cast<int>(rng() % (m - 1))), base);
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation mu_rand = Permutation::from_images(std::move(img));
    CHECK(is_regular(left_mul(mu_rand, base).members()).regular);
  }
}

TEST_CASE("exactly one (m-1)-stabilizer per regular set") {
  CHECK(stabilizer_indices(pi_set(9)) == std::vector<int>{0});
  for (int m : {5, 7, 11, 15}) CHECK(stabilizer_indices(f_regular_set(m)) == std::vector<int>{0});
  CHECK(stabilizer_indices(left_mul(Permutation::transposition(10, 1, 8), pi_set(10))) == std::vector<int>{0});
  for (int m : {6, 9, 14}) {
    const RegularSet s = left_mul(Permutation::transposition(m, 2, 5), pi_set(m));
    CHECK(stabilizer_indices(s).size() == 1);
  }
}
