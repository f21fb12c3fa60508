#include <doctest.h>

#include <random>

#include "wreathdec/json_io.hpp"

using namespace wreathdec;

TEST_CASE("json schemas") {
  const Permutation p = parse_cycles("(0,3,4,1,2)", 5);
  const json jp = p;
  CHECK(jp["m"] == 5);
  CHECK(jp["images"] == json::array({3, 2, 0, 4, 1}));
  CHECK(jp.get<Permutation>() == p);

  const Digraph d = circulant(4, {1, 3});
  const json jd = d;
  CHECK(jd["vertices"] == 4);
  CHECK(jd["arcs"].size() == 8);
  CHECK(jd.get<Digraph>() == d);

  const TwinedFactorization tf = construct_base(5, 2);
  const json jt = tf;
  CHECK(jt["n"] == 2);
  CHECK(jt["m"] == 5);
  CHECK(jt["c"] == 2);
  CHECK(jt["D_T"].size() == 2);
  CHECK(jt["D_H"].size() == 3);
  CHECK(jt.get<TwinedFactorization>() == tf);

  const Certificate pass = Certificate::ok();
  CHECK(json(pass)["verdict"] == "pass");
  const Certificate fail = Certificate::fail("duplicated-arc", {0, 1, 2, 3}, "arc appears in two cycles");
  const json jf = fail;
  CHECK(jf["verdict"] == "fail");
  CHECK(jf["witness"]["kind"] == "duplicated-arc");
  const Certificate back = jf.get<Certificate>();
  CHECK_FALSE(back.pass);
  CHECK(back.data == std::vector<long long>{0, 1, 2, 3});
}

TEST_CASE("decomposition round-trip keeps the certificate checkable") {
  const HamCycleCover h = make_test_h(4, 2);
  const WreathDecomposition dec = assemble_cn_wr_h(2, h.digraph, h.cycles);
  const json j = dec;
  CHECK(j["cycles"].size() == 6);
  CHECK(j["cycles"][0][0].size() == 2);
  CHECK(j["cycles"][0][0][0].size() == 2);  // vertices as [level, slot]
  const WreathDecomposition back = j.get<WreathDecomposition>();
  CHECK(back.cycles == dec.cycles);
  CHECK(back.digraph == dec.digraph);
  CHECK(is_ham_decomposition(back.digraph, back.cycles).pass);
}

TEST_CASE("tampered twined json fails to load") {
  json j = construct_base(6, 2);
  j["c"] = 3;
  CHECK_THROWS(j.get<TwinedFactorization>());
  json j2 = construct_base(6, 2);
  j2["D_T"][0]["perms"][0]["images"] = json::array({0, 1, 2, 3, 4, 5});
  CHECK_THROWS(j2.get<TwinedFactorization>());
}

TEST_CASE("text emissions") {
  const HamCycleCover h = make_test_h(4, 2);
  const WreathDecomposition dec = assemble_cn_wr_h(2, h.digraph, h.cycles);
  const std::string edges = decomposition_edges_text(dec);
  CHECK(edges.find("# cycle 0") != std::string::npos);
  CHECK(edges.find("  ->  ") != std::string::npos);
  const std::string dot = decomposition_dot(dec);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);

  const TwinedFactorization tf = construct_base(5, 2);
  CHECK(twined_edges_text(tf).find("# tuple 0 (D_T)") != std::string::npos);
  CHECK(twined_dot(tf).rfind("digraph", 0) == 0);
}

TEST_CASE("random permutation json round-trip") {
  std::mt19937 rng(4242);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 2 + static_cast<int>(rng() % 30);
    std::vector<int> img(static_cast<std::size_t>(m));
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    const Permutation p = Permutation::from_images(img);
    CHECK(json(p).get<Permutation>() == p);
  }
}
