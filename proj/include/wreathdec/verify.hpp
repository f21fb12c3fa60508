#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wreathdec/twined.hpp"
#include "wreathdec/wreath.hpp"

namespace wreathdec {

// Verification verdict. A failure always carries a reproducible witness.
struct Certificate {
  bool pass = true;
  std::string kind;               // e.g. "duplicated-arc", "wrong-kind"
  std::vector<long long> data;    // witness coordinates
  std::string detail;

  static Certificate ok() { return {}; }
  static Certificate fail(std::string k, std::vector<long long> d, std::string text) {
    Certificate c;
    c.pass = false;
    c.kind = std::move(k);
    c.data = std::move(d);
    c.detail = std::move(text);
    return c;
  }
  explicit operator bool() const { return pass; }
};

namespace vdetail {

// The verifier keeps its own orbit machinery (union-find) so that it shares
// no cycle-walking code with the constructors.
struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(a)] = b;
  }
  int components() {
    int n = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++n;
    return n;
  }
};

template <typename Map>
inline int orbit_components(int n, Map&& next) {
  UnionFind uf(n);
  for (int j = 0; j < n; ++j) uf.unite(j, next(j));
  return uf.components();
}

// Image of j under the truncation of p, evaluated without forming the
// truncated permutation.
inline int hat_apply(const Permutation& p, int j) {
  const int m = p.size();
  const int x = p.apply(j);
  const int top_image = p.apply(m - 1);
  if (x == m - 1) return top_image;
  if (x == top_image) return m - 1;
  return x;
}

inline int tuple_orbit_count(const FactorTuple& f, bool truncated) {
  return orbit_components(f.m(), [&](int j) {
    int x = j;
    for (const auto& p : f.perms) x = truncated ? hat_apply(p, x) : p.apply(x);
    return x;
  });
}

}  // namespace vdetail

// Pass iff the arc sets are pairwise disjoint, cover A(d) exactly, and each is
// a single directed cycle through every vertex.
inline Certificate is_ham_decomposition(const Digraph& d, const std::vector<std::vector<Arc>>& cycles) {
  const int v = d.vertex_count();
  std::map<Arc, int> owner;
  for (int k = 0; k < static_cast<int>(cycles.size()); ++k) {
    for (const Arc& a : cycles[static_cast<std::size_t>(k)]) {
      if (!d.has_arc(a))
        return Certificate::fail("foreign-arc", {a.tail, a.head, k},
                                 "cycle contains an arc absent from the digraph");
      const auto [it, fresh] = owner.emplace(a, k);
      if (!fresh)
        return Certificate::fail("duplicated-arc", {a.tail, a.head, it->second, k},
                                 "arc appears in two cycles");
    }
  }
  for (const Arc& a : d.arcs())
    if (!owner.count(a))
      return Certificate::fail("uncovered-arc", {a.tail, a.head}, "arc not covered by any cycle");
  for (int k = 0; k < static_cast<int>(cycles.size()); ++k) {
    const auto& cyc = cycles[static_cast<std::size_t>(k)];
    if (static_cast<int>(cyc.size()) != v)
      return Certificate::fail("broken-cycle", {k, static_cast<long long>(cyc.size())},
                               "cycle length differs from the vertex count");
    std::vector<int> succ(static_cast<std::size_t>(v), -1), indeg(static_cast<std::size_t>(v), 0);
    for (const Arc& a : cyc) {
      if (succ[static_cast<std::size_t>(a.tail)] != -1)
        return Certificate::fail("broken-cycle", {k, a.tail}, "vertex with out-degree above one");
      succ[static_cast<std::size_t>(a.tail)] = a.head;
      if (++indeg[static_cast<std::size_t>(a.head)] > 1)
        return Certificate::fail("broken-cycle", {k, a.head}, "vertex with in-degree above one");
    }
    for (int x = 0; x < v; ++x)
      if (succ[static_cast<std::size_t>(x)] == -1)
        return Certificate::fail("broken-cycle", {k, x}, "vertex missing from cycle");
    const int comps = vdetail::orbit_components(v, [&](int j) { return succ[static_cast<std::size_t>(j)]; });
    if (comps != 1)
      return Certificate::fail("broken-cycle", {k, comps}, "arc set splits into several cycles");
  }
  return Certificate::ok();
}

// Pass iff every coordinate column is a regular set, D_T holds exactly c
// truncated hamiltonian tuples and D_H holds m-c hamiltonian tuples. The raw
// overload checks untrusted material that never passed a constructor.
inline Certificate is_c_twined_parts(int n, int m, int c, const std::vector<FactorTuple>& twisted,
                                     const std::vector<FactorTuple>& straight) {
  if (static_cast<int>(twisted.size()) != c)
    return Certificate::fail("wrong-count", {c, static_cast<long long>(twisted.size())},
                             "|D_T| differs from c");
  if (static_cast<int>(straight.size()) != m - c)
    return Certificate::fail("wrong-count", {m - c, static_cast<long long>(straight.size())},
                             "|D_H| differs from m-c");
  std::vector<const FactorTuple*> tuples;
  for (const auto& f : twisted) tuples.push_back(&f);
  for (const auto& f : straight) tuples.push_back(&f);
  for (const auto* f : tuples)
    if (f->n() != n || f->m() != m)
      return Certificate::fail("shape", {f->n(), f->m()}, "tuple shape mismatch");
  for (int pos = 0; pos < n; ++pos) {
    for (int j = 0; j < m; ++j) {
      std::vector<int> owner(static_cast<std::size_t>(m), -1);
      for (int k = 0; k < m; ++k) {
        const int img = tuples[static_cast<std::size_t>(k)]->perms[static_cast<std::size_t>(pos)].apply(j);
        if (owner[static_cast<std::size_t>(img)] >= 0)
          return Certificate::fail("column-not-regular", {pos, j, owner[static_cast<std::size_t>(img)], k},
                                   "two tuples send the same point to the same image");
        owner[static_cast<std::size_t>(img)] = k;
      }
    }
  }
  for (int k = 0; k < c; ++k) {
    const auto& f = twisted[static_cast<std::size_t>(k)];
    for (int pos = 0; pos < n; ++pos)
      if (f.perms[static_cast<std::size_t>(pos)].apply(m - 1) == m - 1)
        return Certificate::fail("wrong-kind", {k, pos}, "D_T tuple contains an (m-1)-stabilizer");
    if (vdetail::tuple_orbit_count(f, true) != 2)
      return Certificate::fail("wrong-kind", {k}, "D_T tuple is not truncated hamiltonian");
  }
  for (int k = 0; k < m - c; ++k) {
    const auto& f = straight[static_cast<std::size_t>(k)];
    if (vdetail::tuple_orbit_count(f, false) != 1)
      return Certificate::fail("wrong-kind", {c + k}, "D_H tuple is not hamiltonian");
  }
  return Certificate::ok();
}

inline Certificate is_c_twined(const TwinedFactorization& tf) {
  return is_c_twined_parts(tf.n(), tf.m(), tf.c(), tf.twisted(), tf.straight());
}

enum class SearchStatus { Found, ProvenNone, BudgetExhausted };

struct HamDecompositionSearch {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::vector<std::vector<Arc>> cover;
  std::uint64_t nodes = 0;
};

namespace vdetail {

// Exhaustive backtracking over arc colorings into r classes, each forced to
// close into a single spanning cycle. Colors of the arcs out of vertex 0 are
// fixed up front; color classes are interchangeable, so this loses no
// decompositions.
struct ColoringSearch {
  int v = 0;
  int r = 0;
  std::vector<Arc> arcs;                        // sorted by (tail, head)
  std::vector<std::vector<int>> succ, pred;     // per color
  std::vector<int> color;
  std::uint64_t nodes = 0, budget = 0;
  bool exhausted_budget = false;
  std::optional<std::vector<std::vector<Arc>>> found;

  bool closes_short_cycle(int c, const Arc& a) const {
    // following successors from a.head; if we reach a.tail the new arc closes
    // a cycle, acceptable only when it spans all v vertices.
    int x = a.head;
    int len = 1;
    while (true) {
      const int nxt = succ[static_cast<std::size_t>(c)][static_cast<std::size_t>(x)];
      if (nxt < 0) return false;  // open path, fine
      x = nxt;
      ++len;
      if (x == a.tail) return len != v;
    }
  }

  void run(std::size_t idx) {
    if (found || exhausted_budget) return;
    if (++nodes > budget) {
      exhausted_budget = true;
      return;
    }
    if (idx == arcs.size()) {
      std::vector<std::vector<Arc>> cover(static_cast<std::size_t>(r));
      for (std::size_t i = 0; i < arcs.size(); ++i)
        cover[static_cast<std::size_t>(color[i])].push_back(arcs[i]);
      found = std::move(cover);
      return;
    }
    const Arc a = arcs[idx];
    const int limit = (a.tail == 0) ? 1 : r;  // vertex-0 arcs pre-colored by position
    for (int c = 0; c < r && !found && !exhausted_budget; ++c) {
      int use = c;
      if (a.tail == 0) {
        if (c >= limit) break;
        use = precolor(idx);
      }
      if (succ[static_cast<std::size_t>(use)][static_cast<std::size_t>(a.tail)] >= 0) continue;
      if (pred[static_cast<std::size_t>(use)][static_cast<std::size_t>(a.head)] >= 0) continue;
      if (closes_short_cycle(use, a)) continue;
      succ[static_cast<std::size_t>(use)][static_cast<std::size_t>(a.tail)] = a.head;
      pred[static_cast<std::size_t>(use)][static_cast<std::size_t>(a.head)] = a.tail;
      color[idx] = use;
      run(idx + 1);
      succ[static_cast<std::size_t>(use)][static_cast<std::size_t>(a.tail)] = -1;
      pred[static_cast<std::size_t>(use)][static_cast<std::size_t>(a.head)] = -1;
      color[idx] = -1;
    }
  }

  int precolor(std::size_t idx) const {
    // arcs are sorted, so the arcs with tail 0 are a prefix; their rank is
    // their color.
    return static_cast<int>(idx);
  }
};

}  // namespace vdetail

// Exhaustive search for a hamiltonian decomposition. ProvenNone only after
// full exhaustion of the (symmetry-reduced) tree; running out of budget is
// reported as inconclusive.
inline HamDecompositionSearch search_ham_decomposition(const Digraph& d, std::uint64_t budget) {
  HamDecompositionSearch out;
  const auto outd = d.out_degrees();
  const auto ind = d.in_degrees();
  const int r = outd.empty() ? 0 : outd.front();
  for (int x = 0; x < d.vertex_count(); ++x)
    if (outd[static_cast<std::size_t>(x)] != r || ind[static_cast<std::size_t>(x)] != r) {
      out.status = SearchStatus::ProvenNone;  // degree condition fails outright
      return out;
    }
  if (r == 0) {
    out.status = SearchStatus::Found;
    return out;
  }
  vdetail::ColoringSearch cs;
  cs.v = d.vertex_count();
  cs.r = r;
  cs.arcs = d.arcs();
  cs.succ.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(cs.v), -1));
  cs.pred.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(cs.v), -1));
  cs.color.assign(cs.arcs.size(), -1);
  cs.budget = budget;
  cs.run(0);
  out.nodes = cs.nodes;
  if (cs.found) {
    out.status = SearchStatus::Found;
    out.cover = *cs.found;
    for (auto& cyc : out.cover) std::sort(cyc.begin(), cyc.end());
  } else if (cs.exhausted_budget) {
    out.status = SearchStatus::BudgetExhausted;
  } else {
    out.status = SearchStatus::ProvenNone;
  }
  return out;
}

struct TwinedSearch {
  SearchStatus status = SearchStatus::BudgetExhausted;
  std::optional<TwinedFactorization> found;
  std::uint64_t tried = 0;
  std::string family;
};

// Experimental probe: looks for an n = 2 c-twined factorization over a
// restricted family of regular-set pairs (transposition translates of Pi_m
// and F_m against Pi_m / F_m), trying every bijection between the two sets.
// Exhaustion is claimed only relative to this family.
inline TwinedSearch search_twined(int m, int c, std::uint64_t budget) {
  TwinedSearch out;
  out.family = "left-translates t*B with t in {id} U transpositions, B in {Pi_m, F_m}; all pairings";
  if (m < 2 || c < 0 || c > m - 2) throw std::invalid_argument("search_twined requires 0 <= c <= m-2");
  if (m > 7) throw std::invalid_argument("search_twined exhaustive mode is limited to m <= 7");

  std::vector<RegularSet> bases;
  bases.push_back(pi_set(m));
  if (m >= 5 && m % 2 == 1) bases.push_back(f_regular_set(m));
  std::vector<Permutation> translates{Permutation::identity(m)};
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) translates.push_back(Permutation::transposition(m, a, b));

  std::vector<int> match(static_cast<std::size_t>(m));
  for (const auto& base1 : bases) {
    for (const auto& tr : translates) {
      const RegularSet r1 = left_mul(tr, base1);
      for (const auto& r2 : bases) {
        std::vector<std::vector<TupleTraits>> traits(static_cast<std::size_t>(m),
                                                     std::vector<TupleTraits>(static_cast<std::size_t>(m)));
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j)
            traits[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                classify(FactorTuple(r1[i], r2[j]));
        for (int i = 0; i < m; ++i) match[static_cast<std::size_t>(i)] = i;
        do {
          if (++out.tried > budget) {
            out.status = SearchStatus::BudgetExhausted;
            return out;
          }
          int trunc = 0, ham = 0;
          bool viable = true;
          for (int i = 0; i < m && viable; ++i) {
            const TupleTraits t = traits[static_cast<std::size_t>(i)][static_cast<std::size_t>(match[static_cast<std::size_t>(i)])];
            if (t.truncated_hamiltonian && trunc < c) ++trunc;
            else if (t.hamiltonian) ++ham;
            else viable = false;
          }
          if (viable && trunc == c && ham == m - c) {
            std::vector<FactorTuple> twisted, straight;
            int need = c;
            for (int i = 0; i < m; ++i) {
              FactorTuple f(r1[i], r2[match[static_cast<std::size_t>(i)]]);
              const TupleTraits t = classify(f);
              if (t.truncated_hamiltonian && need > 0) { twisted.push_back(std::move(f)); --need; }
              else straight.push_back(std::move(f));
            }
            out.status = SearchStatus::Found;
            out.found = TwinedFactorization::checked(2, m, c, std::move(twisted), std::move(straight));
            return out;
          }
        } while (std::next_permutation(match.begin(), match.end()));
      }
    }
  }
  out.status = SearchStatus::ProvenNone;  // none within the declared family
  return out;
}

}  // namespace wreathdec
