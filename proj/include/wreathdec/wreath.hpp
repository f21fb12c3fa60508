#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wreathdec/twined.hpp"

namespace wreathdec {

struct Arc {
  int tail = 0;
  int head = 0;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Strict digraph: no loops, no repeated arcs. Arcs kept sorted.
class Digraph {
public:
  Digraph() = default;
  Digraph(int vertices, std::vector<Arc> arcs) : vertices_(vertices), arcs_(std::move(arcs)) {
    if (vertices_ < 1) throw std::invalid_argument("digraph needs at least one vertex");
    std::sort(arcs_.begin(), arcs_.end());
    for (std::size_t i = 0; i < arcs_.size(); ++i) {
      const Arc& a = arcs_[i];
      if (a.tail < 0 || a.tail >= vertices_ || a.head < 0 || a.head >= vertices_)
        throw std::invalid_argument("arc endpoint out of range");
      if (a.tail == a.head) throw std::invalid_argument("strict digraph forbids loops");
      if (i > 0 && arcs_[i - 1] == a) throw std::invalid_argument("strict digraph forbids repeated arcs");
    }
  }

  int vertex_count() const { return vertices_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  bool has_arc(const Arc& a) const { return std::binary_search(arcs_.begin(), arcs_.end(), a); }

  std::vector<int> out_degrees() const {
    std::vector<int> d(static_cast<std::size_t>(vertices_), 0);
    for (const Arc& a : arcs_) ++d[static_cast<std::size_t>(a.tail)];
    return d;
  }
  std::vector<int> in_degrees() const {
    std::vector<int> d(static_cast<std::size_t>(vertices_), 0);
    for (const Arc& a : arcs_) ++d[static_cast<std::size_t>(a.head)];
    return d;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

private:
  int vertices_ = 1;
  std::vector<Arc> arcs_;
};

inline Digraph dicycle(int n) {
  if (n < 2) throw std::invalid_argument("directed cycle needs n >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return Digraph(n, std::move(arcs));
}

inline Digraph empty_digraph(int m) {
  if (m < 1) throw std::invalid_argument("digraph needs at least one vertex");
  return Digraph(m, {});
}

inline Digraph circulant(int m, const std::vector<int>& steps) {
  if (m < 2) throw std::invalid_argument("circulant needs m >= 2");
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<Arc> arcs;
  for (int s : steps) {
    if (s < 1 || s > m - 1) throw std::invalid_argument("circulant step out of range");
    if (seen[static_cast<std::size_t>(s)]) throw std::invalid_argument("repeated circulant step");
    seen[static_cast<std::size_t>(s)] = 1;
    for (int j = 0; j < m; ++j) arcs.push_back({j, (j + s) % m});
  }
  return Digraph(m, std::move(arcs));
}

// Vertex (i, j) of G wr H encoded as i*m + j.
struct WreathVertex {
  int level = 0;
  int slot = 0;
  friend auto operator<=>(const WreathVertex&, const WreathVertex&) = default;
};

inline int encode_vertex(const WreathVertex& v, int m) { return v.level * m + v.slot; }
inline WreathVertex decode_vertex(int code, int m) { return {code / m, code % m}; }

// Arc (g1,h1) -> (g2,h2) iff g1 -> g2 in G, or g1 = g2 and h1 -> h2 in H.
inline Digraph wreath_product(const Digraph& g, const Digraph& h) {
  const int n = g.vertex_count();
  const int m = h.vertex_count();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(g.arc_count()) * static_cast<std::size_t>(m) * static_cast<std::size_t>(m) +
               static_cast<std::size_t>(n) * static_cast<std::size_t>(h.arc_count()));
  for (const Arc& a : g.arcs())
    for (int j1 = 0; j1 < m; ++j1)
      for (int j2 = 0; j2 < m; ++j2) arcs.push_back({a.tail * m + j1, a.head * m + j2});
  for (int i = 0; i < n; ++i)
    for (const Arc& a : h.arcs()) arcs.push_back({i * m + a.tail, i * m + a.head});
  return Digraph(n * m, std::move(arcs));
}

// Expands an n-tuple into its 2-factor of C_n wr K_m: n*m arcs
// (i_j, (i+1)_{j^{perms[i]}}) in encoded form.
inline std::vector<Arc> tuple_arcs(const FactorTuple& f) {
  const int n = f.n();
  const int m = f.m();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j)
      arcs.push_back({i * m + j, ((i + 1) % n) * m + f.perms[static_cast<std::size_t>(i)].apply(j)});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

// A digraph together with a decomposition of all its arcs into directed
// hamiltonian cycles (each cycle given as an arc list).
struct HamCycleCover {
  Digraph digraph{1, {}};
  std::vector<std::vector<Arc>> cycles;
};

namespace detail {

// Backtracking accumulation of c pairwise arc-disjoint hamiltonian cycles on
// Z_m, searched in lexicographic vertex order. Cycles start at 0.
struct CycleAccumulator {
  int m = 0;
  int target = 0;
  std::uint64_t budget = 0;
  std::uint64_t nodes = 0;
  std::vector<std::vector<char>> used;
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<char> visited;

  bool arc_used(int u, int v) const { return used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] != 0; }
  void set_arc(int u, int v, char x) { used[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = x; }

  bool next_cycle() {
    if (static_cast<int>(cycles.size()) == target) return true;
    path.assign(1, 0);
    visited.assign(static_cast<std::size_t>(m), 0);
    visited[0] = 1;
    return extend();
  }

  bool extend() {
    if (++nodes > budget) return false;
    if (static_cast<int>(path.size()) == m) {
      if (arc_used(path.back(), 0)) return false;
      const std::vector<int> cycle = path;
      for (int i = 0; i < m; ++i)
        set_arc(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % m)], 1);
      cycles.push_back(cycle);
      const std::vector<int> saved_path = path;
      const std::vector<char> saved_visited = visited;
      if (next_cycle()) return true;
      cycles.pop_back();
      for (int i = 0; i < m; ++i)
        set_arc(cycle[static_cast<std::size_t>(i)], cycle[static_cast<std::size_t>((i + 1) % m)], 0);
      path = saved_path;
      visited = saved_visited;
      return false;
    }
    const int u = path.back();
    for (int v = 1; v < m; ++v) {
      if (visited[static_cast<std::size_t>(v)] || arc_used(u, v)) continue;
      path.push_back(v);
      visited[static_cast<std::size_t>(v)] = 1;
      if (extend()) return true;
      path.pop_back();
      visited[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }
};

}  // namespace detail

// Builds a test H on m vertices with a decomposition into c hamiltonian
// cycles. Uses rotation cycles of coprime circulant steps when enough exist,
// otherwise a backtracking accumulation of arc-disjoint hamiltonian cycles.
inline HamCycleCover make_test_h(int m, int c, std::uint64_t budget = 50'000'000ULL) {
  if (m < 2) throw std::invalid_argument("make_test_h requires m >= 2");
  if (c < 0 || c > m - 2) throw std::invalid_argument("cycle count outside [0, m-2]");
  if (c == 0) return {empty_digraph(m), {}};
  std::vector<int> steps;
  for (int s = 1; s < m && static_cast<int>(steps.size()) < c; ++s)
    if (std::gcd(s, m) == 1) steps.push_back(s);
  if (static_cast<int>(steps.size()) == c) {
    HamCycleCover out;
    out.digraph = circulant(m, steps);
    for (int s : steps) {
      std::vector<Arc> cyc;
      cyc.reserve(static_cast<std::size_t>(m));
      for (int j = 0; j < m; ++j) cyc.push_back({j, (j + s) % m});
      std::sort(cyc.begin(), cyc.end());
      out.cycles.push_back(std::move(cyc));
    }
    return out;
  }
  detail::CycleAccumulator acc;
  acc.m = m;
  acc.target = c;
  acc.budget = budget;
  acc.used.assign(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
  if (!acc.next_cycle())
    throw std::runtime_error("make_test_h: cycle accumulation exhausted its budget");
  HamCycleCover out;
  std::vector<Arc> all;
  for (const auto& seq : acc.cycles) {
    std::vector<Arc> cyc;
    cyc.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      cyc.push_back({seq[static_cast<std::size_t>(i)], seq[static_cast<std::size_t>((i + 1) % m)]});
    std::sort(cyc.begin(), cyc.end());
    all.insert(all.end(), cyc.begin(), cyc.end());
    out.cycles.push_back(std::move(cyc));
  }
  out.digraph = Digraph(m, std::move(all));
  return out;
}

}  // namespace wreathdec
