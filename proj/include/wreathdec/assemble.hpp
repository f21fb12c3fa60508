#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wreathdec/errors.hpp"
#include "wreathdec/twined.hpp"
#include "wreathdec/verify.hpp"
#include "wreathdec/wreath.hpp"

namespace wreathdec {

// Per-level bijections translating design slots of the twined factorization
// into the standard labeling of H's copy inside level i. Slot m-1 maps to the
// apex vertex; the slots hit by the c twisted tuples map to the apex's
// successors on the corresponding cover cycles.
struct LevelRelabeling {
  std::vector<Permutation> phi;  // phi[i]: design slot -> H vertex

  int apply(int level, int slot) const { return phi[static_cast<std::size_t>(level)].apply(slot); }
};

// A claimed partition of A(G wr H) into directed hamiltonian cycles, with a
// provenance tag per cycle and the verifier's certificate.
struct WreathDecomposition {
  int n = 0;   // |V(G)|
  int m = 0;   // |V(H)|
  int g = 1;   // cycles in G's cover
  int c = 0;   // cycles in H's cover
  Digraph digraph{1, {}};
  std::vector<std::vector<Arc>> cycles;
  std::vector<std::string> tags;
  Certificate certificate;
};

namespace adetail {

inline void check_single_cycle(const std::vector<Arc>& arcs, int vertices, const char* what) {
  std::vector<int> succ(static_cast<std::size_t>(vertices), -1);
  if (static_cast<int>(arcs.size()) != vertices) throw internal_defect(std::string(what) + ": wrong arc count");
  for (const Arc& a : arcs) {
    if (succ[static_cast<std::size_t>(a.tail)] != -1) throw internal_defect(std::string(what) + ": out-degree above one");
    succ[static_cast<std::size_t>(a.tail)] = a.head;
  }
  int x = 0, steps = 0;
  do {
    if (succ[static_cast<std::size_t>(x)] < 0) throw internal_defect(std::string(what) + ": dead end");
    x = succ[static_cast<std::size_t>(x)];
    ++steps;
  } while (x != 0 && steps <= vertices);
  if (steps != vertices) throw internal_defect(std::string(what) + ": not a single spanning cycle");
}

}  // namespace adetail

// Splits a truncated hamiltonian 2-factor, joined with one directed m-cycle
// per level, into two hamiltonian cycles. Level cycles are given in final
// labels; phi translates the tuple's design slots. Each level cycle must
// contain the arc out of that level's apex toward the slot prescribed by the
// incoming permutation.
inline std::pair<std::vector<Arc>, std::vector<Arc>> gamma_split(
    const FactorTuple& f, const std::vector<std::vector<Arc>>& level_cycles, const LevelRelabeling& relabel) {
  const int n = f.n();
  const int m = f.m();
  if (!classify(f).truncated_hamiltonian)
    throw std::invalid_argument("gamma_split requires a truncated hamiltonian tuple");
  if (static_cast<int>(level_cycles.size()) != n || static_cast<int>(relabel.phi.size()) != n)
    throw std::invalid_argument("one level cycle and one relabeling per level required");

  std::vector<Arc> c0, c1;
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n;
    const auto& sigma = f.perms[static_cast<std::size_t>(prev)];
    const int apex = relabel.apply(i, m - 1);
    const int succ_slot = sigma.apply(m - 1);
    const int succ = relabel.apply(i, succ_slot);
    const Arc apex_out{i * m + apex, i * m + succ};
    bool found = false;
    for (const Arc& a : level_cycles[static_cast<std::size_t>(i)]) {
      if (a == apex_out) { found = true; continue; }
      c0.push_back(a);  // the dipath P_i
    }
    if (!found)
      throw std::invalid_argument("level cycle misses the arc out of the apex");
    c1.push_back(apex_out);
    // vertical arcs entering level i
    for (int j = 0; j < m; ++j) {
      const Arc vert{prev * m + relabel.apply(prev, j), i * m + relabel.apply(i, sigma.apply(j))};
      if (j == m - 1) c0.push_back(vert);
      else c1.push_back(vert);
    }
  }
  adetail::check_single_cycle(c0, n * m, "gamma_split C0");
  adetail::check_single_cycle(c1, n * m, "gamma_split C1");
  std::sort(c0.begin(), c0.end());
  std::sort(c1.begin(), c1.end());
  return {std::move(c0), std::move(c1)};
}

namespace adetail {

// Successor of the apex vertex on each cover cycle; also asserts the cycles
// leave the apex through pairwise distinct arcs.
inline std::vector<int> apex_successors(const HamCycleCover& cover, int apex) {
  std::vector<int> succ;
  std::vector<char> seen(static_cast<std::size_t>(cover.digraph.vertex_count()), 0);
  for (const auto& cyc : cover.cycles) {
    int found = -1;
    for (const Arc& a : cyc)
      if (a.tail == apex) {
        if (found >= 0) throw std::invalid_argument("cover cycle leaves the apex twice");
        found = a.head;
      }
    if (found < 0) throw std::invalid_argument("cover cycle misses the apex");
    if (seen[static_cast<std::size_t>(found)]) throw internal_defect("two cover cycles share the apex arc");
    seen[static_cast<std::size_t>(found)] = 1;
    succ.push_back(found);
  }
  return succ;
}

// phi_i per level: slot m-1 -> apex, prescribed slots -> cover successors,
// remaining slots -> remaining vertices in increasing order.
inline LevelRelabeling build_relabeling(const TwinedFactorization& tf, const std::vector<int>& apex_succ,
                                        int apex) {
  const int n = tf.n();
  const int m = tf.m();
  const int c = tf.c();
  LevelRelabeling out;
  for (int i = 0; i < n; ++i) {
    const int prev = (i + n - 1) % n;
    std::vector<int> image(static_cast<std::size_t>(m), -1);
    std::vector<char> taken(static_cast<std::size_t>(m), 0);
    image[static_cast<std::size_t>(m - 1)] = apex;
    taken[static_cast<std::size_t>(apex)] = 1;
    for (int k = 0; k < c; ++k) {
      const int slot = tf.twisted()[static_cast<std::size_t>(k)].perms[static_cast<std::size_t>(prev)].apply(m - 1);
      if (slot == m - 1) throw internal_defect("twisted tuple stabilizes the apex slot");
      if (image[static_cast<std::size_t>(slot)] != -1) throw internal_defect("prescribed slots collide");
      const int target = apex_succ[static_cast<std::size_t>(k)];
      if (taken[static_cast<std::size_t>(target)]) throw internal_defect("prescribed targets collide");
      image[static_cast<std::size_t>(slot)] = target;
      taken[static_cast<std::size_t>(target)] = 1;
    }
    int next_free = 0;
    for (int slot = 0; slot < m; ++slot) {
      if (image[static_cast<std::size_t>(slot)] != -1) continue;
      while (taken[static_cast<std::size_t>(next_free)]) ++next_free;
      image[static_cast<std::size_t>(slot)] = next_free;
      taken[static_cast<std::size_t>(next_free)] = 1;
    }
    out.phi.push_back(Permutation::from_images(std::move(image)));
  }
  return out;
}

inline std::vector<Arc> relabeled_tuple_arcs(const FactorTuple& f, const LevelRelabeling& relabel) {
  const int n = f.n();
  const int m = f.m();
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int i = 0; i < n; ++i) {
    const int next = (i + 1) % n;
    for (int j = 0; j < m; ++j)
      arcs.push_back({i * m + relabel.apply(i, j),
                      next * m + relabel.apply(next, f.perms[static_cast<std::size_t>(i)].apply(j))});
  }
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

}  // namespace adetail

// Hamiltonian decomposition of C_n wr H from a c-twined base and a cover of H
// by c hamiltonian cycles. Emits m + c cycles of length n*m in H's standard
// labeling and certifies the result.
inline WreathDecomposition assemble_cn_wr_h(int n, const Digraph& h, const std::vector<std::vector<Arc>>& h_cover) {
  if (n < 2 || n % 2 != 0) throw unsupported_case("odd-n construction out of scope");
  const int m = h.vertex_count();
  const int c = static_cast<int>(h_cover.size());
  if (c > m - 2) throw std::invalid_argument("cover has more than m-2 cycles");
  {
    const Certificate cert = is_ham_decomposition(h, h_cover);
    if (!cert) throw std::invalid_argument("H cover is not a hamiltonian decomposition: " + cert.detail);
  }
  const TwinedFactorization base = pad(construct_base(m, c), n);

  const int apex = 0;
  HamCycleCover cover{h, h_cover};
  const std::vector<int> apex_succ = adetail::apex_successors(cover, apex);
  const LevelRelabeling relabel = adetail::build_relabeling(base, apex_succ, apex);

  WreathDecomposition out;
  out.n = n;
  out.m = m;
  out.g = 1;
  out.c = c;
  out.digraph = wreath_product(dicycle(n), h);

  for (int k = 0; k < c; ++k) {
    std::vector<std::vector<Arc>> level_cycles;
    for (int i = 0; i < n; ++i) {
      std::vector<Arc> cyc;
      for (const Arc& a : h_cover[static_cast<std::size_t>(k)]) cyc.push_back({i * m + a.tail, i * m + a.head});
      level_cycles.push_back(std::move(cyc));
    }
    auto [c0, c1] = gamma_split(base.twisted()[static_cast<std::size_t>(k)], level_cycles, relabel);
    out.cycles.push_back(std::move(c0));
    out.tags.push_back("gamma-split:" + std::to_string(k) + "/0");
    out.cycles.push_back(std::move(c1));
    out.tags.push_back("gamma-split:" + std::to_string(k) + "/1");
  }
  for (int k = 0; k < m - c; ++k) {
    out.cycles.push_back(adetail::relabeled_tuple_arcs(base.straight()[static_cast<std::size_t>(k)], relabel));
    out.tags.push_back("hamiltonian-tuple:" + std::to_string(c + k));
  }
  out.certificate = is_ham_decomposition(out.digraph, out.cycles);
  if (!out.certificate) throw internal_defect("assembled decomposition failed certification: " + out.certificate.detail);
  return out;
}

// Hamiltonian decomposition of G wr H: the first cover cycle of G carries the
// C_n wr H decomposition, every further cover cycle an expanded zero-twined
// factorization of C_n wr K_m. Yields g*m + c cycles.
inline WreathDecomposition assemble_g_wr_h(const HamCycleCover& g_cover, const Digraph& h,
                                           const std::vector<std::vector<Arc>>& h_cover) {
  const Digraph& g = g_cover.digraph;
  const int n = g.vertex_count();
  const int m = h.vertex_count();
  const int c = static_cast<int>(h_cover.size());
  if (n % 2 != 0) throw unsupported_case("odd |V(G)| out of scope");
  if (g_cover.cycles.empty()) throw std::invalid_argument("G cover needs at least one cycle");
  {
    const Certificate cert = is_ham_decomposition(g, g_cover.cycles);
    if (!cert) throw std::invalid_argument("G cover is not a hamiltonian decomposition: " + cert.detail);
  }
  const int gcount = static_cast<int>(g_cover.cycles.size());
  if (m % 2 == 0 && c % 2 == 1)
    throw unsupported_case("requires external C_n wr C_m construction (m even, odd twist count)");

  // vertex order of a cover cycle of G, starting at 0
  const auto cycle_order = [&](const std::vector<Arc>& cyc) {
    std::vector<int> succ(static_cast<std::size_t>(n), -1);
    for (const Arc& a : cyc) succ[static_cast<std::size_t>(a.tail)] = a.head;
    std::vector<int> order{0};
    for (int x = succ[0]; x != 0; x = succ[static_cast<std::size_t>(x)]) order.push_back(x);
    if (static_cast<int>(order.size()) != n) throw std::invalid_argument("G cover cycle does not span G");
    return order;
  };

  WreathDecomposition out;
  out.n = n;
  out.m = m;
  out.g = gcount;
  out.c = c;
  out.digraph = wreath_product(g, h);

  const WreathDecomposition first = assemble_cn_wr_h(n, h, h_cover);
  const std::vector<int> order0 = cycle_order(g_cover.cycles.front());
  for (std::size_t k = 0; k < first.cycles.size(); ++k) {
    std::vector<Arc> mapped;
    mapped.reserve(first.cycles[k].size());
    for (const Arc& a : first.cycles[k])
      mapped.push_back({order0[static_cast<std::size_t>(a.tail / m)] * m + a.tail % m,
                        order0[static_cast<std::size_t>(a.head / m)] * m + a.head % m});
    std::sort(mapped.begin(), mapped.end());
    out.cycles.push_back(std::move(mapped));
    out.tags.push_back("g-cycle:0/" + first.tags[k]);
  }
  for (int r = 1; r < gcount; ++r) {
    const std::vector<int> order = cycle_order(g_cover.cycles[static_cast<std::size_t>(r)]);
    const TwinedFactorization zt = zero_twined(m, n);
    for (int k = 0; k < m; ++k) {
      const FactorTuple& f = zt.straight()[static_cast<std::size_t>(k)];
      std::vector<Arc> arcs;
      arcs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
          arcs.push_back({order[static_cast<std::size_t>(i)] * m + j,
                          order[static_cast<std::size_t>((i + 1) % n)] * m +
                              f.perms[static_cast<std::size_t>(i)].apply(j)});
      std::sort(arcs.begin(), arcs.end());
      out.cycles.push_back(std::move(arcs));
      out.tags.push_back("kbar-factor:" + std::to_string(r) + "/" + std::to_string(k));
    }
  }
  out.certificate = is_ham_decomposition(out.digraph, out.cycles);
  if (!out.certificate) throw internal_defect("assembled decomposition failed certification: " + out.certificate.detail);
  return out;
}

}  // namespace wreathdec
