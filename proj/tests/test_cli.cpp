#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "wreathdec/json_io.hpp"

using namespace wreathdec;
namespace fs = std::filesystem;

namespace {

const std::string kCli = WREATHDEC_CLI_PATH;
const fs::path kTmp = WREATHDEC_TMP_DIR;

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  fs::create_directories(kTmp);
  const fs::path log = kTmp / "last_output.txt";
  const std::string cmd = kCli + " " + args + " > " + log.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(log);
  std::ostringstream os;
  os << in.rdbuf();
  r.output = os.str();
  return r;
}

std::string tmp_file(const std::string& name) {
  fs::create_directories(kTmp);
  return (kTmp / name).string();
}

}  // namespace

TEST_CASE("cli twined") {
  const std::string out = tmp_file("base_11_5.json");
  const RunResult ok = run_cli("twined --n 2 --m 11 --c 5 --out " + out);
  CHECK(ok.exit_code == 0);
  const TwinedFactorization tf = read_json_file(out).get<TwinedFactorization>();
  CHECK(tf.twisted().size() == 5);
  CHECK(tf.straight().size() == 6);

  CHECK(run_cli("twined --n 2 --m 8 --c 3").exit_code == 2);
  CHECK(run_cli("twined --n 3 --m 5 --c 2").exit_code == 2);
  CHECK(run_cli("twined --n 4 --m 9 --c 4 --out " + tmp_file("base_9_4.json")).exit_code == 0);
  CHECK(run_cli("twined --m 6 --c 2 --format edges --out " + tmp_file("base_6_2.edges")).exit_code == 0);
}

TEST_CASE("cli construct and verify round trip") {
  const std::string dec = tmp_file("dec.json");
  const std::string graph = tmp_file("w.json");
  const RunResult built = run_cli("construct --n 2 --h circulant:4:1,3 --out " + dec + " --graph-out " + graph);
  CHECK(built.exit_code == 0);
  CHECK(built.output.find("cycles: 6") != std::string::npos);
  CHECK(built.output.find("arcs: 48") != std::string::npos);

  CHECK(run_cli("verify --graph " + graph + " --dec " + dec).exit_code == 0);

  // tamper with the decomposition: drop one arc from the first cycle
  json j = read_json_file(dec);
  j["cycles"][0].erase(0);
  write_text_file(dec, j.dump());
  const RunResult bad = run_cli("verify --graph " + graph + " --dec " + dec);
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("fail") != std::string::npos);

  CHECK(run_cli("verify --graph " + tmp_file("missing.json") + " --dec " + dec).exit_code == 4);
}

TEST_CASE("cli construct with a G cover file") {
  HamCycleCover g;
  g.digraph = circulant(4, {1, 3});
  g.cycles = make_test_h(4, 2).cycles;
  const std::string gfile = tmp_file("g.json");
  write_text_file(gfile, json(g).dump());
  const RunResult built =
      run_cli("construct --g " + gfile + " --h circulant:5:1,2 --out " + tmp_file("gdec.json"));
  CHECK(built.exit_code == 0);
  CHECK(built.output.find("cycles: 12") != std::string::npos);

  // a broken cover file is rejected with exit 3
  HamCycleCover broken = g;
  broken.cycles[0][0] = broken.cycles[1][0];
  const std::string bfile = tmp_file("g_broken.json");
  write_text_file(bfile, json(broken).dump());
  CHECK(run_cli("construct --g " + bfile + " --h circulant:5:1,2").exit_code == 3);

  // open case: m even with odd twist count
  CHECK(run_cli("construct --n 2 --h circulant:4:1").exit_code == 2);
}

TEST_CASE("cli construct with an H cover file") {
  // a search-built cover (6 cycles on 8 vertices) exercises the file path
  const HamCycleCover h = make_test_h(8, 6);
  const std::string hfile = tmp_file("h86.json");
  write_text_file(hfile, json(h).dump());
  const std::string dec = tmp_file("dec86.json");
  const std::string graph = tmp_file("w86.json");
  const RunResult built = run_cli("construct --n 2 --h " + hfile + " --out " + dec + " --graph-out " + graph);
  CHECK(built.exit_code == 0);
  CHECK(built.output.find("cycles: 14") != std::string::npos);  // m + c = 8 + 6
  CHECK(run_cli("verify --graph " + graph + " --dec " + dec).exit_code == 0);
}

TEST_CASE("cli search") {
  const RunResult twisted = run_cli("search --m 4 --c 2 --budget full");
  CHECK(twisted.exit_code == 0);
  CHECK(twisted.output.find("found") != std::string::npos);

  const std::string graph = tmp_file("c2wrc2.json");
  write_text_file(graph, json(wreath_product(dicycle(2), dicycle(2))).dump());
  const RunResult none = run_cli("search --graph " + graph + " --budget full");
  CHECK(none.exit_code == 0);
  CHECK(none.output.find("proven-none") != std::string::npos);

  const RunResult starved = run_cli("search --graph " + graph + " --budget 2");
  CHECK(starved.output.find("inconclusive") != std::string::npos);
}

TEST_CASE("cli determinism and error codes") {
  const std::string a = tmp_file("det_a.json"), b = tmp_file("det_b.json");
  CHECK(run_cli("twined --n 4 --m 13 --c 7 --out " + a).exit_code == 0);
  CHECK(run_cli("twined --n 4 --m 13 --c 7 --out " + b).exit_code == 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());

  CHECK(run_cli("twined --n 2 --m 4 --c 5").exit_code == 4);   // range error
  CHECK(run_cli("twined --n 2 --m 4").exit_code == 4);         // missing flag
  CHECK(run_cli("construct --h circulant:9:3").exit_code == 3);  // step not coprime

  const RunResult caveat = run_cli("search --m 4 --c 1 --budget full");
  CHECK(caveat.exit_code == 0);
  CHECK(caveat.output.find("no claim beyond this family") != std::string::npos);
}

TEST_CASE("cli selftest") {
  const RunResult appendix = run_cli("selftest --scope appendix");
  CHECK(appendix.exit_code == 0);
  CHECK(appendix.output.find("[PASS]") != std::string::npos);
  CHECK(appendix.output.find("[FAIL]") == std::string::npos);
}
