#include <doctest.h>

#include <random>

#include "wreathdec/permutation.hpp"

using namespace wreathdec;

namespace {

Permutation random_permutation(int m, std::mt19937& rng) {
  std::vector<int> img(static_cast<std::size_t>(m));
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(std::move(img));
}

// Test-side composition oracle: builds the image table point by point.
Permutation slow_compose(const Permutation& a, const Permutation& b) {
  std::vector<int> img;
  for (int j = 0; j < a.size(); ++j) img.push_back(b.apply(a.apply(j)));
  return Permutation::from_images(std::move(img));
}

}  // namespace

TEST_CASE("composition follows the left-to-right convention") {
  CHECK(compose(pi(7, 2), pi(7, 3)) == pi(7, 5));
  CHECK(compose(gamma(9, 1), gamma(9, -1)).is_identity());
  CHECK_THROWS_WITH_AS(compose(pi(5, 1), pi(7, 1)), "incompatible orders", std::invalid_argument);

  // hat(sigma_{m-2}) hat(sigma_2) = gamma_{-1} gamma_2 = gamma_1 for m = 1 (mod 4)
  for (int m : {5, 9, 13, 17}) {
    const auto f = f_set(m);
    CHECK(compose(truncate(f[static_cast<std::size_t>(m - 2)]), truncate(f[2])) == gamma(m, 1));
  }
}

TEST_CASE("composition properties on random samples") {
  std::mt19937 rng(20240811);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 14);
    const Permutation a = random_permutation(m, rng);
    const Permutation b = random_permutation(m, rng);
    const Permutation c = random_permutation(m, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, inverse(a)).is_identity());
    CHECK(compose(a, b) == slow_compose(a, b));
  }
}

TEST_CASE("cycle counting includes fixed points") {
  CHECK(cycle_count(Permutation::identity(5)) == 5);
  for (int m : {5, 9, 15, 27}) CHECK(cycle_count(gamma(m, 1)) == 2);

  // sigma_2 mu_7 for m = 11 with mu_i = (0,10) sigma_i is a full cycle
  const auto f = f_set(11);
  const Permutation mu7 = compose(Permutation::transposition(11, 0, 10), f[7]);
  const Permutation prod = compose(f[2], mu7);
  CHECK(cycle_count(prod) == 1);
  CHECK(format_cycles(prod) == format_cycles(parse_cycles("(10,4,3,2,1,0,9,8,5,7,6)", 11)));
}

TEST_CASE("truncation") {
  // (0,1,...,7) truncates to (0,...,6)(7)
  std::vector<int> full(8);
  std::iota(full.begin(), full.end(), 0);
  const Permutation sigma = Permutation::from_cycle(8, full);
  CHECK(truncate(sigma) == parse_cycles("(0,1,2,3,4,5,6)(7)", 8));

  CHECK_THROWS_AS(truncate(pi(6, 0)), std::invalid_argument);

  // pi_3 in S_5: evaluate sigma (4, 4^sigma) entrywise
  const Permutation p3 = pi(5, 3);
  std::vector<int> expected;
  const int top_image = p3.apply(4);
  for (int j = 0; j < 5; ++j) {
    int x = p3.apply(j);
    if (x == 4) x = top_image;
    else if (x == top_image) x = 4;
    expected.push_back(x);
  }
  CHECK(truncate(p3) == Permutation::from_images(expected));
  CHECK(truncate(p3) == parse_cycles("(0,3,1,2)(4)", 5));
}

TEST_CASE("truncation pointwise law on random non-stabilizers") {
  std::mt19937 rng(7);
  for (int m : {5, 8, 15}) {
    int done = 0;
    while (done < 300) {
      const Permutation a = random_permutation(m, rng);
      if (is_top_stabilizer(a)) continue;
      ++done;
      const Permutation hat = truncate(a);
      CHECK(hat.apply(m - 1) == m - 1);
      const int pre = inverse(a).apply(m - 1);
      CHECK(hat.apply(pre) == a.apply(m - 1));
      for (int j = 0; j < m - 1; ++j)
        if (j != pre) CHECK(hat.apply(j) == a.apply(j));
    }
  }
}

TEST_CASE("pi powers") {
  CHECK(pi(4, 0).is_identity());
  CHECK(pi(6, 2).apply(5) == 1);
  for (int m : {3, 6, 10})
    for (int i = -3; i <= 2 * m; ++i) CHECK(compose(pi(m, i), pi(m, 1 - i)) == pi(m, 1));
}

TEST_CASE("gamma powers and the exponent law") {
  CHECK(gamma(15, 7) == parse_cycles("(0,7)(1,8)(2,9)(3,10)(4,11)(5,12)(6,13)(14)", 15));
  CHECK(gamma(15, 3).apply(13) == 2);
  CHECK_THROWS_AS(gamma(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(gamma(3, 1), std::invalid_argument);
  for (int m : {5, 9, 13, 15, 21})
    for (int i = -2; i <= m + 3; ++i) CHECK(gamma(m, m - i) == gamma(m, -i + 1));
}

TEST_CASE("gamma matches repeated composition of gamma_1") {
  for (int m : {5, 9, 15}) {
    Permutation acc = Permutation::identity(m);
    for (int i = 1; i <= m - 1; ++i) {
      acc = compose(acc, gamma(m, 1));
      CHECK(acc == gamma(m, i));
    }
    // four-branch law spot check
    for (int i = -(m - 2); i <= m - 2; ++i) {
      if (i == 0) continue;
      const Permutation gi = gamma(m, i);
      for (int s = 0; s < m; ++s) {
        int expected;
        if (s == m - 1) expected = m - 1;
        else if (s + i >= m - 1) expected = s + i - (m - 1);
        else if (s + i < 0) expected = s + i + (m - 1);
        else expected = s + i;
        CHECK(gi.apply(s) == expected);
      }
    }
  }
}

TEST_CASE("f_set golden values") {
  CHECK(f_set(5)[4] == parse_cycles("(0,3,4,1,2)", 5));
  const auto f15 = f_set(15);
  CHECK(f15[1] == parse_cycles("(14,2,3,4,5,6,7,8,9,10,11,12,13,0,1)", 15));
  CHECK(f15[14] == parse_cycles("(0,3,13,4,12,5,11,6,10,7,9,8,14,1,2)", 15));
  CHECK(cycle_count(f15[14]) == 1);
  for (int m : {5, 7, 9, 11, 13, 15}) CHECK(cycle_count(f_set(m).back()) == 1);
}

TEST_CASE("remark law: truncating sigma_i gives gamma_i") {
  for (int m : {5, 7, 9, 13, 15, 21}) {
    const auto f = f_set(m);
    for (int i = 1; i <= m - 2; ++i) CHECK(truncate(f[static_cast<std::size_t>(i)]) == gamma(m, i));
  }
}

TEST_CASE("sigma_shift closed forms") {
  CHECK(sigma_shift(15, 5, 0) == compose(gamma(15, -4), Permutation::transposition(15, 14, 13)));
  CHECK(sigma_shift(15, 5, 0) == f_sigma(15, 10));
  CHECK(sigma_shift(15, 4, 2) == compose(gamma(15, -1), Permutation::transposition(15, 14, 8)));
  CHECK(sigma_shift(15, 4, 2) == f_sigma(15, 13));
  CHECK_THROWS_WITH_AS(sigma_shift(15, 3, 0), "index excluded by the shift-table precondition", std::invalid_argument);

  for (int m : {7, 11, 15, 19}) {
    const auto f = f_set(m);
    for (int i = 1; i <= m - 2; ++i)
      for (int t : {2, 1, 0, -2, -3, -4}) {
        const int target = m - i + t;
        if (target < 1 || target > m - 2 || target == m - 3) {
          CHECK_THROWS_AS(sigma_shift(m, i, t), std::invalid_argument);
        } else {
          CHECK(sigma_shift(m, i, t) == f[static_cast<std::size_t>(target)]);
        }
      }
  }
}

TEST_CASE("cycle notation parse and format") {
  CHECK(parse_cycles("(0,3,4,1,2)", 5) == Permutation::from_images({3, 2, 0, 4, 1}));
  CHECK(parse_cycles("(0)(1)", 2).is_identity());
  const std::string text = "(14,2,3,4,5,6,7,8,9,10,11,12,13,0,1)";
  CHECK(format_cycles(parse_cycles(text, 15)) == "(0,1,14,2,3,4,5,6,7,8,9,10,11,12,13)");
  CHECK(parse_cycles(format_cycles(parse_cycles(text, 15)), 15) == parse_cycles(text, 15));

  // canonical order: moving cycles by minimum, fixed points last
  CHECK(format_cycles(gamma(7, 2)) == "(0,2,4)(1,3,5)(6)");
  CHECK(format_cycles(Permutation::identity(3)) == "(0)(1)(2)");

  CHECK_THROWS_AS(parse_cycles("(0,0)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0,5)", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("0,1", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(0,1)(1,2)", 4), std::invalid_argument);
}

TEST_CASE("parse/format round-trips on random permutations") {
  std::mt19937 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 20);
    const Permutation a = random_permutation(m, rng);
    CHECK(parse_cycles(format_cycles(a), m) == a);
  }
}
