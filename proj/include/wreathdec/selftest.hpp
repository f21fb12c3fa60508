#pragma once

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "wreathdec/twined.hpp"
#include "wreathdec/verify.hpp"

namespace wreathdec {

// Reference tables: the full F_15 family and the order-11 pair products, kept
// verbatim as golden data for regression checks.
namespace golden {

inline const std::vector<std::string>& f15_cycles() {
  static const std::vector<std::string> table{
      "(0)(1)(2)(3)(4)(5)(6)(7)(8)(9)(10)(11)(12)(13)(14)",
      "(14,2,3,4,5,6,7,8,9,10,11,12,13,0,1)",
      "(14,9,11,13,1,3,5,7)(2,4,6,8,10,12,0)",
      "(14,3,6,9,12,1,4,7,10,13,2,5,8,11,0)",
      "(14,10,0,4,8,12,2,6)(1,5,9,13,3,7,11)",
      "(14,4,9,0,5,10,1,6,11,2,7,12,3,8,13)",
      "(14,11,3,9,1,7,13,5)(2,8,0,6,12,4,10)",
      "(14,5,12)(1,8)(2,9)(3,10)(4,11)(6,13)(0,7)",
      "(14,12,6,0,8,2,10,4)(1,9,3,11,5,13,7)",
      "(14,6,1,10,5,0,9,4,13,8,3,12,7,2,11)",
      "(14,13,9,5,1,11,7,3)(2,12,8,4,0,10,6)",
      "(14,7,4,1,12,9,6,3,0,11,8,5,2,13,10)",
      "(14,0,12,10,8,6,4,2)(1,13,11,9,7,5,3)",
      "(14,8,7,6,5,4,3,2,1,0,13,12,11,10,9)",
      "(0,3,13,4,12,5,11,6,10,7,9,8,14,1,2)"};
  return table;
}

struct PairProduct {
  int first;   // index into R_1
  int second;  // index into R_2
  std::string cycles;
};

// m = 11, c = 5: R_1 = F_11, R_2 = (0,10) F_11, pairs (sigma_i, mu_j).
inline const std::vector<PairProduct>& m11_c5_truncated() {
  static const std::vector<PairProduct> table{
      {1, 0, "(1,2,3,4,5,6,7,8,9,0)(10)"},
      {5, 1, "(1,7,3,9,5,2,8,4,0,6)(10)"},
      {8, 6, "(1,5,6,0,4,8,2,9,3,7)(10)"},
      {9, 9, "(1,6,4,2,0,8,9,7,5,3)(10)"},
      {10, 10, "(1,0,9,8,7,3,4,5,6,2)(10)"}};
  return table;
}
inline const std::vector<PairProduct>& m11_c5_hamiltonian() {
  static const std::vector<PairProduct> table{
      {2, 7, "(10,4,3,2,1,0,9,8,5,7,6)"},
      {3, 8, "(10,1,2,3,4,5,6,7,0,8,9)"},
      {4, 5, "(10,3,2,1,0,9,8,7,6,4,5)"},
      {6, 3, "(10,2,1,0,9,8,7,6,5,4,3)"},
      {7, 4, "(10,9,0,1,2,3,8,4,5,6,7)"},
      {0, 2, "(10,2,4,6,8,0,7,9,1,3,5)"}};
  return table;
}

// m = 11, c = 7: R_1 = (10,1,2,3,4,5) F_11, R_2 = F_11, pairs (mu_i, sigma_j).
inline const std::vector<PairProduct>& m11_c7_truncated() {
  static const std::vector<PairProduct> table{
      {2, 6, "(1,0,8,6,4,9,7,5,3,2)(10)"},
      {3, 1, "(1,6,0,5,4,9,3,8,2,7)(10)"},
      {5, 9, "(1,6,0,4,9,5,3,8,2,7)(10)"},
      {6, 8, "(1,6,0,4,9,3,8,2,5,7)(10)"},
      {7, 7, "(1,6,0,4,9,3,8,5,2,7)(10)"},
      {9, 5, "(1,6,0,4,9,3,8,2,7,5)(10)"},
      {10, 10, "(1,3,5,2,4,6,0,9,8,7)(10)"}};
  return table;
}
inline const std::vector<PairProduct>& m11_c7_hamiltonian() {
  static const std::vector<PairProduct> table{
      {1, 4, "(10,8,3,9,4,0,5,6,1,7,2)"},
      {4, 0, "(10,5,8,2,7,1,6,0,4,9,3)"},
      {8, 3, "(10,2,4,6,7,8,9,0,1,3,5)"},
      {0, 2, "(10,3,6,8,0,2,5,7,9,1,4)"}};
  return table;
}

}  // namespace golden

// One pass/fail line per check. Returns true iff everything passed.
class SelfTest {
public:
  explicit SelfTest(std::ostream& os) : os_(os) {}

  bool check(const std::string& name, bool ok) {
    os_ << (ok ? "[PASS] " : "[FAIL] ") << name << '\n';
    all_ok_ = all_ok_ && ok;
    return ok;
  }

  bool run_appendix() {
    {
      bool ok = true;
      const auto f15 = f_set(15);
      const auto& table = golden::f15_cycles();
      for (int i = 0; i < 15; ++i)
        ok = ok && (format_cycles(f15[static_cast<std::size_t>(i)]) ==
                    format_cycles(parse_cycles(table[static_cast<std::size_t>(i)], 15)));
      check("F_15 family matches its reference listing (15/15)", ok);
    }
    {
      const auto f = f_set(11);
      const Permutation t = Permutation::transposition(11, 0, 10);
      bool trunc_ok = true, ham_ok = true;
      for (const auto& row : golden::m11_c5_truncated()) {
        const Permutation prod = compose(truncate(f[static_cast<std::size_t>(row.first)]),
                                         truncate(compose(t, f[static_cast<std::size_t>(row.second)])));
        trunc_ok = trunc_ok && (prod == parse_cycles(row.cycles, 11));
      }
      for (const auto& row : golden::m11_c5_hamiltonian()) {
        const Permutation prod =
            compose(f[static_cast<std::size_t>(row.first)], compose(t, f[static_cast<std::size_t>(row.second)]));
        ham_ok = ham_ok && (prod == parse_cycles(row.cycles, 11));
      }
      check("order-11, 5-twisted pair products match the reference listing", trunc_ok && ham_ok);
    }
    {
      const auto f = f_set(11);
      const Permutation g6 = Permutation::from_cycle(11, {10, 1, 2, 3, 4, 5});
      bool trunc_ok = true, ham_ok = true;
      for (const auto& row : golden::m11_c7_truncated()) {
        const Permutation prod = compose(truncate(compose(g6, f[static_cast<std::size_t>(row.first)])),
                                         truncate(f[static_cast<std::size_t>(row.second)]));
        trunc_ok = trunc_ok && (prod == parse_cycles(row.cycles, 11));
      }
      for (const auto& row : golden::m11_c7_hamiltonian()) {
        const Permutation prod =
            compose(compose(g6, f[static_cast<std::size_t>(row.first)]), f[static_cast<std::size_t>(row.second)]);
        ham_ok = ham_ok && (prod == parse_cycles(row.cycles, 11));
      }
      check("order-11, 7-twisted pair products match the reference listing", trunc_ok && ham_ok);
    }
    {
      bool ok = true;
      for (int c : {5, 7}) ok = ok && is_c_twined(construct_base(11, c)).pass;
      check("order-11 twisted bases certify", ok);
    }
    return all_ok_;
  }

  bool run_invariants() {
    {
      bool ok = true;
      for (int m = 5; m <= 41; m += 2) ok = ok && is_regular(f_set(m)).regular;
      check("F_m regular for odd m up to 41", ok);
    }
    {
      bool ok = true;
      for (int m = 5; m <= 41; m += 2) {
        const auto f = f_set(m);
        for (int i = 1; i <= m - 2 && ok; ++i) ok = (truncate(f[static_cast<std::size_t>(i)]) == gamma(m, i));
      }
      check("truncating sigma_i yields gamma_i", ok);
    }
    {
      bool ok = true;
      for (int m = 5; m <= 41; m += 2) {
        const auto f = f_set(m);
        for (int i = 1; i <= m - 2 && ok; ++i)
          for (int t : {2, 1, 0, -2, -3, -4}) {
            const int target = m - i + t;
            if (target < 1 || target > m - 2 || target == m - 3) continue;
            ok = ok && (sigma_shift(m, i, t) == f[static_cast<std::size_t>(target)]);
          }
      }
      check("shift table agrees with the F_m construction up to 41", ok);
    }
    {
      bool ok = true;
      for (int m = 4; m <= 16; ++m)
        for (int c = 0; c <= m - 2; ++c) {
          if (c == 1 || (m % 2 == 0 && c % 2 == 1)) continue;
          ok = ok && is_c_twined(construct_base(m, c)).pass;
        }
      check("twisted bases certify for every supported (m, c) with m up to 16", ok);
    }
    return all_ok_;
  }

  bool all_ok() const { return all_ok_; }

private:
  std::ostream& os_;
  bool all_ok_ = true;
};

}  // namespace wreathdec
