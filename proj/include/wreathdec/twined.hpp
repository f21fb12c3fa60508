#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wreathdec/errors.hpp"
#include "wreathdec/permutation.hpp"
#include "wreathdec/regular_set.hpp"

namespace wreathdec {

// n-tuple of permutations encoding a directed 2-factor of C_n wr K_m: layer i
// contributes the arcs (i_j, (i+1)_{j^{perms[i]}}).
struct FactorTuple {
  std::vector<Permutation> perms;

  FactorTuple() = default;
  explicit FactorTuple(std::vector<Permutation> p) : perms(std::move(p)) {
    if (perms.size() < 2) throw std::invalid_argument("factor tuple needs n >= 2");
    for (const auto& q : perms)
      if (q.size() != perms.front().size()) throw std::invalid_argument("incompatible orders");
  }
  FactorTuple(Permutation a, Permutation b) : FactorTuple(std::vector<Permutation>{std::move(a), std::move(b)}) {}

  int n() const { return static_cast<int>(perms.size()); }
  int m() const { return perms.front().size(); }

  Permutation product() const {
    Permutation acc = perms.front();
    for (std::size_t i = 1; i < perms.size(); ++i) acc = compose(acc, perms[i]);
    return acc;
  }

  friend bool operator==(const FactorTuple& a, const FactorTuple& b) = default;
};

enum class TupleKind { Hamiltonian, TruncatedHamiltonian, Other };

struct TupleTraits {
  bool hamiltonian = false;
  bool truncated_hamiltonian = false;
};

inline TupleTraits classify(const FactorTuple& f) {
  TupleTraits t;
  t.hamiltonian = (cycle_count(f.product()) == 1);
  bool no_stabilizer = true;
  for (const auto& p : f.perms)
    if (is_top_stabilizer(p)) { no_stabilizer = false; break; }
  if (no_stabilizer) {
    Permutation acc = truncate(f.perms.front());
    for (std::size_t i = 1; i < f.perms.size(); ++i) acc = compose(acc, truncate(f.perms[i]));
    t.truncated_hamiltonian = (cycle_count(acc) == 2);
  }
  return t;
}

inline TupleKind tuple_kind(const FactorTuple& f) {
  const TupleTraits t = classify(f);
  if (t.hamiltonian) return TupleKind::Hamiltonian;
  if (t.truncated_hamiltonian) return TupleKind::TruncatedHamiltonian;
  return TupleKind::Other;
}

// c-twined 2-factorization of C_n wr K_m: m tuples whose coordinate columns
// are regular sets, split into c truncated hamiltonian tuples (D_T) and m-c
// hamiltonian tuples (D_H).
class TwinedFactorization {
public:
  static TwinedFactorization checked(int n, int m, int c, std::vector<FactorTuple> twisted,
                                     std::vector<FactorTuple> straight) {
    TwinedFactorization tf;
    tf.n_ = n;
    tf.m_ = m;
    tf.c_ = c;
    tf.twisted_ = std::move(twisted);
    tf.straight_ = std::move(straight);
    tf.validate();
    return tf;
  }

  int n() const { return n_; }
  int m() const { return m_; }
  int c() const { return c_; }
  const std::vector<FactorTuple>& twisted() const { return twisted_; }
  const std::vector<FactorTuple>& straight() const { return straight_; }

  // D_T first, then D_H; the order used for padding and assembly.
  std::vector<FactorTuple> all_tuples() const {
    std::vector<FactorTuple> out = twisted_;
    out.insert(out.end(), straight_.begin(), straight_.end());
    return out;
  }

  friend bool operator==(const TwinedFactorization& a, const TwinedFactorization& b) = default;

private:
  void validate() const {
    if (c_ < 0 || c_ > m_ - 2) throw internal_defect("twist count outside [0, m-2]");
    if (static_cast<int>(twisted_.size()) != c_) throw internal_defect("|D_T| != c");
    if (static_cast<int>(straight_.size()) != m_ - c_) throw internal_defect("|D_H| != m-c");
    for (const auto& f : twisted_) {
      if (f.n() != n_ || f.m() != m_) throw internal_defect("tuple shape mismatch");
      if (!classify(f).truncated_hamiltonian) throw internal_defect("D_T tuple not truncated hamiltonian");
    }
    for (const auto& f : straight_) {
      if (f.n() != n_ || f.m() != m_) throw internal_defect("tuple shape mismatch");
      if (!classify(f).hamiltonian) throw internal_defect("D_H tuple not hamiltonian");
    }
    for (int pos = 0; pos < n_; ++pos) {
      std::vector<Permutation> column;
      column.reserve(static_cast<std::size_t>(m_));
      for (const auto& f : twisted_) column.push_back(f.perms[static_cast<std::size_t>(pos)]);
      for (const auto& f : straight_) column.push_back(f.perms[static_cast<std::size_t>(pos)]);
      if (!is_regular(column).regular) throw internal_defect("coordinate column not regular");
    }
  }

  int n_ = 2, m_ = 0, c_ = 0;
  std::vector<FactorTuple> twisted_, straight_;
};

// Bookkeeping carried by a recipe: m = 2k+1 where applicable, the index set I,
// the chosen subset M_t, and a recipe tag for logs and tests.
struct RecipeContext {
  std::string name;
  int m = 0;
  int k = 0;
  int c = 0;
  int t = 0;
  std::vector<int> index_set;
  std::vector<int> chosen;
};

struct RecipePairs {
  RegularSet r1;
  RegularSet r2;
  std::vector<std::pair<int, int>> pairs;  // (index into r1, index into r2)
  RecipeContext ctx;
};

struct CompletionLog {
  bool triggered = false;
  std::string recipe;
  std::vector<std::pair<int, int>> dropped;  // listed pairs that are neither kind
  std::vector<std::pair<int, int>> added;
  std::uint64_t bijections_tried = 0;
};

namespace detail {

inline std::vector<int> first_elements(const std::vector<int>& v, int t) {
  if (t < 0 || t > static_cast<int>(v.size()))
    throw std::invalid_argument("twist count outside the recipe's range");
  return std::vector<int>(v.begin(), v.begin() + t);
}

inline bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace detail

// m even: R_1 = (1,m-2)Pi_m (2 <= c <= m-4) or (0,m-1)Pi_m (c = m-2),
// R_2 = Pi_m. The first case lists m-2 pairs; complete_partial finishes it.
inline RecipePairs recipe_even_even(int m, int c) {
  if (m < 4 || m % 2 != 0) throw std::invalid_argument("recipe_even_even requires even m >= 4");
  if (c % 2 != 0 || c < 2 || c > m - 2) throw std::invalid_argument("recipe_even_even requires even c in [2, m-2]");
  const RegularSet base = pi_set(m);
  RecipeContext ctx;
  ctx.m = m;
  ctx.c = c;
  std::vector<std::pair<int, int>> pairs;
  if (c == m - 2) {
    ctx.name = "even-case2";
    for (int i = 1; i <= m - 3; ++i) pairs.emplace_back(i, m - i - 1);
    pairs.emplace_back(0, 1);
    pairs.emplace_back(m - 1, m - 1);
    pairs.emplace_back(m - 2, 0);
    return {left_mul(Permutation::transposition(m, 0, m - 1), base), base, std::move(pairs), std::move(ctx)};
  }
  ctx.name = "even-case1";
  ctx.t = c / 2;
  for (int i = 3; i <= m - 3; i += 2) ctx.index_set.push_back(i);
  ctx.chosen = detail::first_elements(ctx.index_set, ctx.t);
  for (int i : ctx.chosen) {
    pairs.emplace_back(i, m - i + 1);
    pairs.emplace_back(i + 1, m - i - 2);
  }
  for (int i : ctx.index_set) {
    if (detail::contains(ctx.chosen, i)) continue;
    pairs.emplace_back(i, m - i - 2);
    pairs.emplace_back(i + 1, m - i + 1);
  }
  pairs.emplace_back(0, 2);
  pairs.emplace_back(m - 1, m - 1);
  return {left_mul(Permutation::transposition(m, 1, m - 2), base), base, std::move(pairs), std::move(ctx)};
}

// m odd, c even: one construction per congruence class of m, all built over
// F_m or its gamma-translates; each lists all m pairs.
inline RecipePairs recipe_odd_even(int m, int c) {
  if (m < 5 || m % 2 == 0) throw std::invalid_argument("recipe_odd_even requires odd m >= 5");
  if (c % 2 != 0 || c < 2 || c > m - 3) throw std::invalid_argument("recipe_odd_even requires even c in [2, m-3]");
  RecipeContext ctx;
  ctx.m = m;
  ctx.k = (m - 1) / 2;
  ctx.c = c;
  std::vector<std::pair<int, int>> pairs;
  const RegularSet f = f_regular_set(m);
  if (m % 4 == 1) {
    ctx.name = "odd-even-1mod4";
    ctx.t = (c - 2) / 2;
    for (int i = 1; i <= m - 7; ++i)
      if (i % 4 == 1 || i % 4 == 2) ctx.index_set.push_back(i);
    ctx.chosen = detail::first_elements(ctx.index_set, ctx.t);
    pairs.emplace_back(m - 2, 2);
    pairs.emplace_back(m - 3, 3);
    for (int i : ctx.chosen) {
      if (i % 4 == 1) {
        pairs.emplace_back(i, m - i - 2);
        pairs.emplace_back(i + 3, m - i - 3);
      } else {
        pairs.emplace_back(i, m - i);
        pairs.emplace_back(i + 1, m - i - 3);
      }
    }
    pairs.emplace_back(0, m - 1);
    pairs.emplace_back(m - 1, 0);
    pairs.emplace_back(m - 4, 1);
    for (int i : ctx.index_set) {
      if (detail::contains(ctx.chosen, i)) continue;
      if (i % 4 == 1) {
        pairs.emplace_back(i, m - i - 3);
        pairs.emplace_back(i + 3, m - i - 2);
      } else {
        pairs.emplace_back(i, m - i - 3);
        pairs.emplace_back(i + 1, m - i);
      }
    }
    return {f, f, std::move(pairs), std::move(ctx)};
  }
  const RegularSet r1 = left_mul(gamma(m, 1), f);
  const RegularSet r2 = left_mul(gamma(m, -1), f);
  if (m % 12 == 3) {
    ctx.name = "odd-even-3mod12";
    ctx.t = (c - 2) / 2;
    for (int i = 3; i <= m - 4; i += 2) ctx.index_set.push_back(i);
    ctx.chosen = detail::first_elements(ctx.index_set, ctx.t);
    pairs.emplace_back(1, 2);
    pairs.emplace_back(2, 1);
    for (int i : ctx.chosen) {
      pairs.emplace_back(i, m - i);
      pairs.emplace_back(i + 1, m - i + 1);
    }
    pairs.emplace_back(0, m - 1);
    pairs.emplace_back(m - 1, 0);
    for (int i = 3; i <= m - 2; ++i)
      if (!detail::contains(ctx.chosen, i) && !detail::contains(ctx.chosen, i - 1))
        pairs.emplace_back(i, m - i + 1);
    return {r1, r2, std::move(pairs), std::move(ctx)};
  }
  ctx.name = "odd-even-7or11mod12";
  ctx.t = c / 2;
  for (int i = 1; i <= m - 3; ++i)
    if (i % 4 == 1 || i % 4 == 2) ctx.index_set.push_back(i);
  ctx.chosen = detail::first_elements(ctx.index_set, ctx.t);
  for (int i : ctx.chosen) {
    if (i % 4 == 1) {
      pairs.emplace_back(i, m - i - 2);
      pairs.emplace_back(i + 3, m - i - 3);
    } else {
      pairs.emplace_back(i, m - i);
      pairs.emplace_back(i + 1, m - i - 3);
    }
  }
  pairs.emplace_back(0, 1);
  pairs.emplace_back(m - 2, 0);
  pairs.emplace_back(m - 1, m - 1);
  for (int i : ctx.index_set) {
    if (detail::contains(ctx.chosen, i)) continue;
    if (i % 4 == 1) {
      pairs.emplace_back(i, m - i - 3);
      pairs.emplace_back(i + 3, m - i - 2);
    } else {
      pairs.emplace_back(i, m - i - 3);
      pairs.emplace_back(i + 1, m - i);
    }
  }
  return {r1, r2, std::move(pairs), std::move(ctx)};
}

namespace detail {

// High odd twist counts for m == 3, 5 (mod 6): R_1 = (1,2,3,4) F_m,
// R_2 = F_m. The pair shapes are anchors plus blocks
// (mu_i, sigma_{m-i-5}), (mu_{i+1}, sigma_{m-i-4}) and singles
// (mu_i, sigma_{m-i-4}); block/single placement over positions 1..m-5 is
// chosen by a kind-aware tiling so that every single is a hamiltonian pair
// and every block pair is truncated hamiltonian.
inline RecipePairs recipe_odd_odd_tiled(int m, int c) {
  const RegularSet r2 = f_regular_set(m);
  const RegularSet r1 = left_mul(Permutation::from_cycle(m, {1, 2, 3, 4}), r2);
  RecipeContext ctx;
  ctx.name = (m % 6 == 3) ? "odd-odd-3mod6" : "odd-odd-5mod6";
  ctx.m = m;
  ctx.k = (m - 1) / 2;
  ctx.c = c;

  const int top = m - 5;  // positions 1..top
  const int blocks = (c - 3) / 2;
  std::vector<char> single_ok(static_cast<std::size_t>(top + 1), 0);
  std::vector<char> block_ok(static_cast<std::size_t>(top + 1), 0);
  for (int p = 1; p <= top; ++p) {
    single_ok[static_cast<std::size_t>(p)] =
        classify(FactorTuple(r1[p], r2[m - p - 4])).hamiltonian ? 1 : 0;
    if (p + 1 <= top)
      block_ok[static_cast<std::size_t>(p)] =
          (classify(FactorTuple(r1[p], r2[m - p - 5])).truncated_hamiltonian &&
           classify(FactorTuple(r1[p + 1], r2[m - p - 4])).truncated_hamiltonian)
              ? 1
              : 0;
  }
  // feas[p][d]: positions p..top can be tiled with exactly d blocks.
  std::vector<std::vector<char>> feas(static_cast<std::size_t>(top + 3),
                                      std::vector<char>(static_cast<std::size_t>(blocks + 1), 0));
  feas[static_cast<std::size_t>(top + 1)][0] = 1;
  for (int p = top; p >= 1; --p)
    for (int d = 0; d <= blocks; ++d) {
      bool ok = false;
      if (single_ok[static_cast<std::size_t>(p)] && feas[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(d)])
        ok = true;
      if (!ok && d >= 1 && p + 1 <= top && block_ok[static_cast<std::size_t>(p)] &&
          feas[static_cast<std::size_t>(p + 2)][static_cast<std::size_t>(d - 1)])
        ok = true;
      feas[static_cast<std::size_t>(p)][static_cast<std::size_t>(d)] = ok ? 1 : 0;
    }
  if (!feas[1][static_cast<std::size_t>(blocks)])
    throw internal_defect("no block/single tiling for this twist count");

  std::vector<int> block_starts, singles;
  int p = 1, d = blocks;
  while (p <= top) {
    if (single_ok[static_cast<std::size_t>(p)] && feas[static_cast<std::size_t>(p + 1)][static_cast<std::size_t>(d)]) {
      singles.push_back(p);
      ++p;
    } else {
      block_starts.push_back(p);
      p += 2;
      --d;
    }
  }
  ctx.t = static_cast<int>(block_starts.size());
  ctx.chosen = block_starts;

  std::vector<std::pair<int, int>> pairs;
  pairs.emplace_back(m - 4, m - 4);
  pairs.emplace_back(m - 2, m - 1);
  pairs.emplace_back(m - 1, m - 2);
  for (int b : block_starts) {
    pairs.emplace_back(b, m - b - 5);
    pairs.emplace_back(b + 1, m - b - 4);
  }
  pairs.emplace_back(m - 3, 0);
  pairs.emplace_back(0, m - 3);
  for (int s : singles) pairs.emplace_back(s, m - s - 4);
  return {r1, r2, std::move(pairs), std::move(ctx)};
}

}  // namespace detail

// m odd, c odd: low twist counts via (1,m-1) F_m or (0,m-1) F_m, high twist
// counts via the congruence-class recipes, m = 11 with c in {5, 7} from the
// explicit tables. When ranges overlap the lower-range recipe wins.
inline RecipePairs recipe_odd_odd(int m, int c) {
  if (m < 5 || m % 2 == 0) throw std::invalid_argument("recipe_odd_odd requires odd m >= 5");
  if (c % 2 == 0 || c < 3 || c > m - 2) throw std::invalid_argument("recipe_odd_odd requires odd c in [3, m-2]");
  RecipeContext ctx;
  ctx.m = m;
  ctx.k = (m - 1) / 2;
  ctx.c = c;
  std::vector<std::pair<int, int>> pairs;
  const RegularSet f = f_regular_set(m);

  if (m == 11 && (c == 5 || c == 7)) {
    if (c == 5) {
      ctx.name = "m11-c5";
      pairs = {{1, 0}, {5, 1}, {8, 6}, {9, 9}, {10, 10},
               {2, 7}, {3, 8}, {4, 5}, {6, 3}, {7, 4}, {0, 2}};
      return {f, left_mul(Permutation::transposition(m, 0, 10), f), std::move(pairs), std::move(ctx)};
    }
    ctx.name = "m11-c7";
    pairs = {{2, 6}, {3, 1}, {5, 9}, {6, 8}, {7, 7}, {9, 5}, {10, 10},
             {1, 4}, {4, 0}, {8, 3}, {0, 2}};
    return {left_mul(Permutation::from_cycle(m, {10, 1, 2, 3, 4, 5}), f), f, std::move(pairs), std::move(ctx)};
  }

  if (m % 4 == 1 && c <= (m + 1) / 2) {
    ctx.name = "odd-odd-1mod4-low";
    ctx.t = (c - 3) / 2;
    for (int i = 3; i <= m - 6; i += 4) ctx.index_set.push_back(i);
    ctx.chosen = detail::first_elements(ctx.index_set, ctx.t);
    pairs.emplace_back(0, 1);
    pairs.emplace_back(m - 2, m - 2);
    pairs.emplace_back(m - 1, m - 1);
    for (int i : ctx.chosen) {
      pairs.emplace_back(i, m - i - 3);
      pairs.emplace_back(i + 3, m - i - 2);
    }
    pairs.emplace_back(2, 0);
    for (int i = 1; i <= m - 4; i += 2)
      if (!detail::contains(ctx.chosen, i)) pairs.emplace_back(i, m - i - 2);
    for (int i = 4; i <= m - 3; i += 2)
      if (!detail::contains(ctx.chosen, i - 3)) pairs.emplace_back(i, m - i);
    return {left_mul(Permutation::transposition(m, 1, m - 1), f), f, std::move(pairs), std::move(ctx)};
  }

  const bool low_3mod8 = (m % 8 == 3 && c <= (m - 5) / 2);
  const bool low_7mod8 = (m % 8 == 7 && c <= (m - 1) / 2);
  if (low_3mod8 || low_7mod8) {
    ctx.name = low_3mod8 ? "odd-odd-3mod8-low" : "odd-odd-7mod8-low";
    ctx.t = (c - 3) / 2;
    const int hi = low_3mod8 ? m - 13 : m - 7;
    for (int i = 5; i <= hi; ++i)
      if (i % 8 == 5 || i % 8 == 6) ctx.index_set.push_back(i);
    ctx.chosen = detail::first_elements(ctx.index_set, ctx.t);
    pairs.emplace_back(m - 2, m - 2);
    pairs.emplace_back(m - 1, m - 1);
    pairs.emplace_back(0, 1);
    for (int i : ctx.chosen) {
      pairs.emplace_back(i, m - i - 5);
      if (i % 8 == 5) pairs.emplace_back(i + 5, m - i - 2);
      else pairs.emplace_back(i + 3, m - i);
    }
    pairs.emplace_back(2, 0);
    for (int i = 1; i <= m - 4; i += 2)
      if (!detail::contains(ctx.chosen, i) && !detail::contains(ctx.chosen, i - 3)) pairs.emplace_back(i, m - i - 2);
    for (int i = 4; i <= m - 3; i += 2)
      if (!detail::contains(ctx.chosen, i) && !detail::contains(ctx.chosen, i - 5)) pairs.emplace_back(i, m - i);
    return {left_mul(Permutation::transposition(m, 0, m - 1), f), f, std::move(pairs), std::move(ctx)};
  }

  if (m % 6 == 1 && c >= (m + 2) / 3) {
    ctx.name = "odd-odd-1mod6-high";
    ctx.t = (c - (m + 2) / 3) / 2;
    for (int i = 4; i <= m - 3; ++i)
      if (i % 6 == 0 || i % 6 == 4) ctx.index_set.push_back(i);
    ctx.chosen = detail::first_elements(ctx.index_set, ctx.t);
    pairs.emplace_back(m - 1, m - 1);
    pairs.emplace_back(0, 1);
    for (int i : ctx.chosen) {
      pairs.emplace_back(i, m - i + 1);
      pairs.emplace_back(i + 1, m - i);
    }
    for (int i = 3; i <= m - 4; ++i)
      if (i % 6 == 2 || i % 6 == 3) pairs.emplace_back(i, m - i + 1);
    pairs.emplace_back(1, 2);
    pairs.emplace_back(2, 0);
    for (int i = 4; i <= m - 3; ++i)
      if ((i % 6 == 0 || i % 6 == 4) && !detail::contains(ctx.chosen, i)) pairs.emplace_back(i, m - i);
    for (int i = 5; i <= m - 2; ++i)
      if ((i % 6 == 1 || i % 6 == 5) && !detail::contains(ctx.chosen, i - 1)) pairs.emplace_back(i, m - i + 2);
    return {left_mul(Permutation::from_cycle(m, {m - 1, 1, 2, 3}), f), f, std::move(pairs), std::move(ctx)};
  }

  if ((m % 6 == 3 && c >= m / 3 + 4) || (m % 6 == 5 && c >= (m + 1) / 3 + 5))
    return detail::recipe_odd_odd_tiled(m, c);

  throw internal_defect("no recipe covers this (m, c); coverage argument violated");
}

// Finishes a (possibly partial) pair list into a certified factorization.
// Listed pairs that turn out to be neither hamiltonian nor truncated
// hamiltonian are returned to the pool; unused coordinates are then matched
// by exhaustive search over bijections in lexicographic order, accepting the
// first assignment that reaches exactly c truncated hamiltonian and m-c
// hamiltonian tuples.
inline TwinedFactorization complete_partial(const RegularSet& r1, const RegularSet& r2,
                                            const std::vector<std::pair<int, int>>& listed, int c,
                                            CompletionLog* log = nullptr) {
  const int m = r1.order();
  if (r2.order() != m) throw std::invalid_argument("incompatible orders");
  if (c < 0 || c > m - 2) throw std::invalid_argument("twist count outside [0, m-2]");
  std::vector<char> used1(static_cast<std::size_t>(m), 0), used2(static_cast<std::size_t>(m), 0);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(listed.size());
  for (const auto& [a, b] : listed) {
    if (a < 0 || a >= m || b < 0 || b >= m) throw std::invalid_argument("pair index out of range");
    if (used1[static_cast<std::size_t>(a)] || used2[static_cast<std::size_t>(b)])
      throw std::invalid_argument("pair list reuses a coordinate");
    const TupleTraits t = classify(FactorTuple(r1[a], r2[b]));
    if (!t.hamiltonian && !t.truncated_hamiltonian) {
      if (log) log->dropped.emplace_back(a, b);
      continue;  // back into the pool
    }
    used1[static_cast<std::size_t>(a)] = 1;
    used2[static_cast<std::size_t>(b)] = 1;
    pairs.emplace_back(a, b);
  }
  std::vector<int> free1, free2;
  for (int i = 0; i < m; ++i) {
    if (!used1[static_cast<std::size_t>(i)]) free1.push_back(i);
    if (!used2[static_cast<std::size_t>(i)]) free2.push_back(i);
  }
  if (free1.size() != free2.size()) throw std::invalid_argument("recipe completion failed: unequal unused counts");
  if (free1.size() > 6) throw std::invalid_argument("recipe completion failed: more than 6 unused coordinates");

  const auto try_assignment = [&](const std::vector<int>& match) -> std::optional<TwinedFactorization> {
    std::vector<std::pair<int, int>> full = pairs;
    for (std::size_t i = 0; i < free1.size(); ++i) full.emplace_back(free1[i], match[i]);
    std::vector<TupleTraits> traits;
    traits.reserve(full.size());
    int trunc_only = 0, ham_only = 0, both = 0;
    for (const auto& [a, b] : full) {
      const TupleTraits t = classify(FactorTuple(r1[a], r2[b]));
      if (!t.hamiltonian && !t.truncated_hamiltonian) return std::nullopt;
      if (t.hamiltonian && t.truncated_hamiltonian) ++both;
      else if (t.truncated_hamiltonian) ++trunc_only;
      else ++ham_only;
      traits.push_back(t);
    }
    if (trunc_only > c || ham_only > m - c || trunc_only + both < c) return std::nullopt;
    std::vector<FactorTuple> twisted, straight;
    int need_t = c - trunc_only;
    for (std::size_t i = 0; i < full.size(); ++i) {
      FactorTuple f(r1[full[i].first], r2[full[i].second]);
      if (traits[i].truncated_hamiltonian && !traits[i].hamiltonian) twisted.push_back(std::move(f));
      else if (traits[i].hamiltonian && !traits[i].truncated_hamiltonian) straight.push_back(std::move(f));
      else if (need_t > 0) { twisted.push_back(std::move(f)); --need_t; }
      else straight.push_back(std::move(f));
    }
    return TwinedFactorization::checked(2, m, c, std::move(twisted), std::move(straight));
  };

  std::vector<int> match = free2;
  std::uint64_t tried = 0;
  do {
    ++tried;
    if (auto tf = try_assignment(match)) {
      if (log && !free1.empty()) {
        log->triggered = true;
        log->bijections_tried = tried;
        for (std::size_t i = 0; i < free1.size(); ++i) log->added.emplace_back(free1[i], match[i]);
      }
      return *tf;
    }
  } while (std::next_permutation(match.begin(), match.end()));
  throw internal_defect("recipe completion failed");
}

// Zero-twined base: tuples (pi_i, pi_{-i}, ..., pi_i, pi_{1-i}); every column
// is Pi_m and every product telescopes to pi_1.
inline TwinedFactorization zero_twined(int m, int n) {
  if (m < 2) throw std::invalid_argument("zero_twined requires m >= 2");
  if (n < 2 || n % 2 != 0) throw unsupported_case("odd-n construction out of scope");
  std::vector<FactorTuple> straight;
  straight.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::vector<Permutation> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int q = 0; q + 1 < n; ++q) coords.push_back(q % 2 == 0 ? pi(m, i) : pi(m, -i));
    coords.push_back(pi(m, 1 - i));
    straight.emplace_back(std::move(coords));
  }
  return TwinedFactorization::checked(n, m, 0, {}, std::move(straight));
}

// n = 2 twisted bases for every supported (m, c). The one open case,
// m even with c odd, is reported as such.
inline TwinedFactorization construct_base(int m, int c, CompletionLog* log = nullptr) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (c < 0 || c > m - 2) throw std::invalid_argument("twist count outside [0, m-2]");
  if (c == 0) return zero_twined(m, 2);
  if (m < 4) throw std::invalid_argument("twisted bases require m >= 4");
  if (c == 1) throw unsupported_case("c = 1 corresponds to a directed-cycle factor; out of scope");
  if (m % 2 == 0 && c % 2 == 1) throw unsupported_case("open case: m even with odd twist count is not constructible here");
  RecipePairs recipe = (m % 2 == 0)   ? recipe_even_even(m, c)
                       : (c % 2 == 0) ? recipe_odd_even(m, c)
                                      : recipe_odd_odd(m, c);
  if (log) log->recipe = recipe.ctx.name;
  return complete_partial(recipe.r1, recipe.r2, recipe.pairs, c, log);
}

// Stretches an n = 2 factorization to even n >= 4: tuple i gains leading
// coordinates (pi_{i+1}, pi_{-i-1}) repeated; the pair's product and hat
// product are unchanged.
inline TwinedFactorization pad(const TwinedFactorization& base, int n) {
  if (base.n() != 2) throw std::invalid_argument("pad expects an n = 2 base");
  if (n % 2 != 0) throw std::invalid_argument("pad target length must be even");
  if (n == 2) return base;
  if (n < 2) throw std::invalid_argument("pad target length must be at least 2");
  const int m = base.m();
  const auto tuples = base.all_tuples();
  std::vector<FactorTuple> twisted, straight;
  for (int i = 0; i < static_cast<int>(tuples.size()); ++i) {
    std::vector<Permutation> coords;
    coords.reserve(static_cast<std::size_t>(n));
    for (int rep = 0; rep < (n - 2) / 2; ++rep) {
      coords.push_back(pi(m, i + 1));
      coords.push_back(pi(m, -i - 1));
    }
    coords.push_back(tuples[static_cast<std::size_t>(i)].perms[0]);
    coords.push_back(tuples[static_cast<std::size_t>(i)].perms[1]);
    if (i < base.c()) twisted.emplace_back(std::move(coords));
    else straight.emplace_back(std::move(coords));
  }
  return TwinedFactorization::checked(n, m, base.c(), std::move(twisted), std::move(straight));
}

}  // namespace wreathdec
