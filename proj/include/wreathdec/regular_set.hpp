#pragma once

#include <utility>
#include <vector>

#include "wreathdec/permutation.hpp"

namespace wreathdec {

// Outcome of the regularity test. On failure carries a witness point j whose
// images under members k1 and k2 collide.
struct RegularityReport {
  bool regular = true;
  int j = -1;
  int k1 = -1;
  int k2 = -1;
};

// m permutations form a regular set when the images of every point are
// pairwise distinct; the layers then partition the arcs between consecutive
// levels of C_n wr K_m.
inline RegularityReport is_regular(const std::vector<Permutation>& members) {
  if (members.empty()) throw std::invalid_argument("empty member list");
  const int m = members.front().size();
  for (const auto& p : members)
    if (p.size() != m) throw std::invalid_argument("incompatible orders");
  if (static_cast<int>(members.size()) != m) return {false, -1, -1, -1};
  std::vector<int> owner(static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j) {
    std::fill(owner.begin(), owner.end(), -1);
    for (int k = 0; k < m; ++k) {
      const int v = members[static_cast<std::size_t>(k)].apply(j);
      if (owner[static_cast<std::size_t>(v)] >= 0)
        return {false, j, owner[static_cast<std::size_t>(v)], k};
      owner[static_cast<std::size_t>(v)] = k;
    }
  }
  return {};
}

// Regular permutation set of order m. Construction always validates.
class RegularSet {
public:
  explicit RegularSet(std::vector<Permutation> members) : members_(std::move(members)) {
    const auto report = is_regular(members_);
    if (!report.regular) throw std::invalid_argument("not a regular permutation set");
  }

  int order() const { return static_cast<int>(members_.size()); }
  const std::vector<Permutation>& members() const { return members_; }
  const Permutation& operator[](int k) const { return members_[static_cast<std::size_t>(k)]; }

  friend bool operator==(const RegularSet& a, const RegularSet& b) = default;

private:
  std::vector<Permutation> members_;
};

// mu * S = {mu s_0, mu s_1, ...} is again regular.
inline RegularSet left_mul(const Permutation& mu, const RegularSet& s) {
  if (mu.size() != s.order()) throw std::invalid_argument("incompatible orders");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(s.order()));
  for (const auto& member : s.members()) out.push_back(compose(mu, member));
  return RegularSet(std::move(out));
}

// Indices of members fixing m-1. A regular set has exactly one.
inline std::vector<int> stabilizer_indices(const RegularSet& s) {
  std::vector<int> out;
  for (int k = 0; k < s.order(); ++k)
    if (is_top_stabilizer(s[k])) out.push_back(k);
  return out;
}

inline RegularSet pi_set(int m) {
  std::vector<Permutation> members;
  members.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) members.push_back(pi(m, i));
  return RegularSet(std::move(members));
}

inline RegularSet f_regular_set(int m) { return RegularSet(f_set(m)); }

}  // namespace wreathdec
