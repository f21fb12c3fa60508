#include <doctest.h>

#include "wreathdec/assemble.hpp"
#include "wreathdec/json_io.hpp"

using namespace wreathdec;

TEST_CASE("gamma split of the m = 4 case-2 pair") {
  // f = (omega_0, pi_1) with omega_0 = (0,3): truncated hamiltonian
  const Permutation omega0 = Permutation::transposition(4, 0, 3);
  const FactorTuple f(omega0, pi(4, 1));
  REQUIRE(classify(f).truncated_hamiltonian);

  // rotation 4-cycles per level, identity relabeling
  LevelRelabeling identity_phi;
  identity_phi.phi = {Permutation::identity(4), Permutation::identity(4)};
  std::vector<std::vector<Arc>> level_cycles(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) level_cycles[static_cast<std::size_t>(i)].push_back({i * 4 + j, i * 4 + (j + 1) % 4});

  // apex slot 3 maps into the level cycle: arc (i_3, i_{3^sigma}) must lie on it.
  // 3^{omega_0} = 0 and 3^{pi_1} = 0, and (i_3, i_0) is a rotation arc.
  const auto [c0, c1] = gamma_split(f, level_cycles, identity_phi);
  CHECK(c0.size() == 8);
  CHECK(c1.size() == 8);

  std::vector<int> outdeg(8, 0), indeg(8, 0);
  for (const Arc& a : c0) {
    ++outdeg[static_cast<std::size_t>(a.tail)];
    ++indeg[static_cast<std::size_t>(a.head)];
  }
  for (int v = 0; v < 8; ++v) {
    CHECK(outdeg[static_cast<std::size_t>(v)] == 1);
    CHECK(indeg[static_cast<std::size_t>(v)] == 1);
  }

  // together they decompose the union digraph
  std::vector<Arc> all = c0;
  all.insert(all.end(), c1.begin(), c1.end());
  std::sort(all.begin(), all.end());
  const Digraph gamma_digraph(8, all);
  CHECK(is_ham_decomposition(gamma_digraph, {c0, c1}).pass);

  // a level cycle missing the apex-out arc is rejected
  auto bad_cycles = level_cycles;
  for (auto& a : bad_cycles[0]) a = {a.head, a.tail};  // reversed rotation misses (0_3, 0_0)? no: contains (0_0,0_3)
  CHECK_THROWS_AS(gamma_split(f, bad_cycles, identity_phi), std::invalid_argument);

  const FactorTuple ham(pi(4, 1), pi(4, 0));
  CHECK_THROWS_AS(gamma_split(ham, level_cycles, identity_phi), std::invalid_argument);
}

TEST_CASE("assemble C_n wr H") {
  {
    const HamCycleCover h = make_test_h(4, 2);
    const WreathDecomposition dec = assemble_cn_wr_h(2, h.digraph, h.cycles);
    CHECK(dec.certificate.pass);
    CHECK(dec.cycles.size() == 6);
    for (const auto& cyc : dec.cycles) CHECK(cyc.size() == 8);
    CHECK(dec.digraph.arc_count() == 48);
    // cycle count equals the uniform out-degree
    for (int d : dec.digraph.out_degrees()) CHECK(d == 6);
  }
  {
    const HamCycleCover h = make_test_h(5, 2);
    const WreathDecomposition dec = assemble_cn_wr_h(4, h.digraph, h.cycles);
    CHECK(dec.certificate.pass);
    CHECK(dec.cycles.size() == 7);
    for (const auto& cyc : dec.cycles) CHECK(cyc.size() == 20);
  }
  {
    // c = 0 reduces to the zero-twined expansion
    const WreathDecomposition dec = assemble_cn_wr_h(2, empty_digraph(5), {});
    CHECK(dec.certificate.pass);
    CHECK(dec.cycles.size() == 5);
  }
  {
    // odd twist count over odd m exercises the gamma-split with c = 3
    const HamCycleCover h = make_test_h(5, 3);
    const WreathDecomposition dec = assemble_cn_wr_h(2, h.digraph, h.cycles);
    CHECK(dec.certificate.pass);
    CHECK(dec.cycles.size() == 8);
  }

  CHECK_THROWS_AS(assemble_cn_wr_h(3, empty_digraph(5), {}), unsupported_case);
  const HamCycleCover h43 = make_test_h(4, 1);
  CHECK_THROWS_AS(assemble_cn_wr_h(2, h43.digraph, h43.cycles), unsupported_case);

  // an invalid cover is rejected up front
  const HamCycleCover good = make_test_h(5, 2);
  auto tampered = good.cycles;
  tampered[0][0] = tampered[1][0];
  CHECK_THROWS_AS(assemble_cn_wr_h(2, good.digraph, tampered), std::invalid_argument);
}

TEST_CASE("assemble G wr H") {
  const Digraph g = circulant(4, {1, 3});
  HamCycleCover gcover;
  gcover.digraph = g;
  {
    const HamCycleCover tmp = make_test_h(4, 2);
    gcover.cycles = tmp.cycles;
  }
  const HamCycleCover h = make_test_h(5, 2);
  const WreathDecomposition dec = assemble_g_wr_h(gcover, h.digraph, h.cycles);
  CHECK(dec.certificate.pass);
  CHECK(dec.cycles.size() == 12);
  for (const auto& cyc : dec.cycles) CHECK(cyc.size() == 20);
  CHECK(dec.digraph.arc_count() == 240);

  // g = 1 coincides with the direct C_n wr H assembly
  HamCycleCover cyc4;
  cyc4.digraph = dicycle(4);
  cyc4.cycles = {dicycle(4).arcs()};
  const WreathDecomposition via_g = assemble_g_wr_h(cyc4, h.digraph, h.cycles);
  const WreathDecomposition direct = assemble_cn_wr_h(4, h.digraph, h.cycles);
  CHECK(via_g.cycles == direct.cycles);

  // three cover cycles on six G-vertices: 3*5 + 2 = 17 cycles
  const HamCycleCover g3 = make_test_h(6, 3);
  const WreathDecomposition dec3 = assemble_g_wr_h(g3, h.digraph, h.cycles);
  CHECK(dec3.certificate.pass);
  CHECK(dec3.cycles.size() == 17);
  for (const auto& cyc : dec3.cycles) CHECK(cyc.size() == 30);

  // odd |V(G)| is out of scope
  HamCycleCover odd;
  odd.digraph = dicycle(3);
  odd.cycles = {dicycle(3).arcs()};
  CHECK_THROWS_AS(assemble_g_wr_h(odd, h.digraph, h.cycles), unsupported_case);

  // m even with odd c needs the external construction even when g >= 2
  const HamCycleCover h41 = make_test_h(4, 1);
  CHECK_THROWS_AS(assemble_g_wr_h(gcover, h41.digraph, h41.cycles), unsupported_case);
}
