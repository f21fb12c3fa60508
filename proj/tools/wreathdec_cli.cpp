#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "wreathdec/assemble.hpp"
#include "wreathdec/json_io.hpp"
#include "wreathdec/selftest.hpp"
#include "wreathdec/verify.hpp"

namespace {

using namespace wreathdec;

constexpr int kExitPass = 0;
constexpr int kExitCertificationFailure = 1;
constexpr int kExitOutOfScope = 2;
constexpr int kExitInvalidCover = 3;
constexpr int kExitIo = 4;

struct invalid_cover_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_budget(const std::string& text) {
  if (text == "full") return UINT64_MAX;
  return std::stoull(text);
}

// "circulant:m:s1,s2,..." or a path to a JSON file {digraph, cover}.
HamCycleCover load_cover_spec(const std::string& spec) {
  if (spec.rfind("circulant:", 0) == 0) {
    std::istringstream in(spec.substr(std::string("circulant:").size()));
    std::string mpart, spart;
    if (!std::getline(in, mpart, ':')) throw std::runtime_error("bad circulant spec: " + spec);
    const int m = std::stoi(mpart);
    std::vector<int> steps;
    if (std::getline(in, spart)) {
      std::istringstream sin(spart);
      std::string tok;
      while (std::getline(sin, tok, ',')) steps.push_back(std::stoi(tok));
    }
    for (int s : steps)
      if (std::gcd(s, m) != 1)
        throw invalid_cover_error("circulant step " + std::to_string(s) + " shares a factor with " +
                                  std::to_string(m) + "; no rotation cover");
    HamCycleCover out;
    out.digraph = circulant(m, steps);
    for (int s : steps) {
      std::vector<Arc> cyc;
      for (int j = 0; j < m; ++j) cyc.push_back({j, (j + s) % m});
      std::sort(cyc.begin(), cyc.end());
      out.cycles.push_back(std::move(cyc));
    }
    return out;
  }
  return read_json_file(spec).get<HamCycleCover>();
}

void write_twined(const TwinedFactorization& tf, const std::string& out, const std::string& format) {
  if (format == "json") {
    write_text_file(out, json(tf).dump(2) + "\n");
  } else if (format == "dot") {
    write_text_file(out, twined_dot(tf));
  } else {
    write_text_file(out, twined_edges_text(tf));
  }
}

void write_decomposition(const WreathDecomposition& dec, const std::string& out, const std::string& format) {
  if (format == "json") {
    write_text_file(out, json(dec).dump(2) + "\n");
  } else if (format == "dot") {
    write_text_file(out, decomposition_dot(dec));
  } else {
    write_text_file(out, decomposition_edges_text(dec));
  }
}

int cmd_twined(int n, int m, int c, const std::string& out, const std::string& format) {
  if (n % 2 != 0) {
    std::cerr << "error: n must be even (odd n is out of scope)\n";
    return kExitOutOfScope;
  }
  TwinedFactorization tf = [&] {
    CompletionLog log;
    TwinedFactorization base = construct_base(m, c, &log);
    if (log.triggered)
      std::cerr << "note: recipe " << log.recipe << " completed by search over " << log.added.size()
                << " leftover coordinates\n";
    return pad(base, n);
  }();
  if (!out.empty()) write_twined(tf, out, format);
  // round-trip: re-read our own JSON and re-certify before claiming success
  const TwinedFactorization reread =
      (format == "json" && !out.empty()) ? read_json_file(out).get<TwinedFactorization>() : tf;
  const Certificate cert = is_c_twined(reread);
  if (!cert.pass) {
    std::cerr << "certification failure: " << json(cert).dump() << "\n";
    return kExitCertificationFailure;
  }
  std::cout << "tuples: " << m << "  twisted: " << c << "  n: " << n << "\n";
  return kExitPass;
}

int cmd_construct(std::optional<int> n, const std::string& gfile, const std::string& hspec,
                  const std::string& out, const std::string& graph_out, const std::string& format) {
  const HamCycleCover h = load_cover_spec(hspec);
  {
    const Certificate hcert = is_ham_decomposition(h.digraph, h.cycles);
    if (!hcert.pass) {
      std::cerr << "invalid H cover: " << json(hcert).dump() << "\n";
      return kExitInvalidCover;
    }
  }
  WreathDecomposition dec;
  if (!gfile.empty()) {
    const HamCycleCover g = read_json_file(gfile).get<HamCycleCover>();
    const Certificate gcert = is_ham_decomposition(g.digraph, g.cycles);
    if (!gcert.pass) {
      std::cerr << "invalid G cover: " << json(gcert).dump() << "\n";
      return kExitInvalidCover;
    }
    dec = assemble_g_wr_h(g, h.digraph, h.cycles);
  } else {
    if (!n) throw std::runtime_error("construct needs either --n or --g");
    if (*n % 2 != 0) {
      std::cerr << "error: n must be even (odd n is out of scope)\n";
      return kExitOutOfScope;
    }
    dec = assemble_cn_wr_h(*n, h.digraph, h.cycles);
  }
  if (!out.empty()) write_decomposition(dec, out, format);
  if (!graph_out.empty()) write_text_file(graph_out, json(dec.digraph).dump(2) + "\n");
  const WreathDecomposition reread =
      (format == "json" && !out.empty()) ? read_json_file(out).get<WreathDecomposition>() : dec;
  const Certificate cert = is_ham_decomposition(dec.digraph, reread.cycles);
  if (!cert.pass) {
    std::cerr << "certification failure: " << json(cert).dump() << "\n";
    return kExitCertificationFailure;
  }
  std::cout << "cycles: " << dec.cycles.size() << "  arcs: " << dec.digraph.arc_count() << "\n";
  return kExitPass;
}

int cmd_verify(const std::string& graph_file, const std::string& dec_file) {
  const Digraph graph = read_json_file(graph_file).get<Digraph>();
  const WreathDecomposition dec = read_json_file(dec_file).get<WreathDecomposition>();
  const Certificate cert = is_ham_decomposition(graph, dec.cycles);
  std::cout << json(cert).dump(2) << "\n";
  return cert.pass ? kExitPass : kExitCertificationFailure;
}

int cmd_search(std::optional<int> m, std::optional<int> c, const std::string& graph_file,
               const std::string& budget_text) {
  const std::uint64_t budget = parse_budget(budget_text);
  if (!graph_file.empty()) {
    const Digraph graph = read_json_file(graph_file).get<Digraph>();
    const auto result = search_ham_decomposition(graph, budget);
    switch (result.status) {
      case SearchStatus::Found:
        std::cout << "found: decomposition into " << result.cover.size() << " hamiltonian cycles ("
                  << result.nodes << " nodes)\n";
        break;
      case SearchStatus::ProvenNone:
        std::cout << "proven-none: exhaustive search found no hamiltonian decomposition (" << result.nodes
                  << " nodes)\n";
        break;
      case SearchStatus::BudgetExhausted:
        std::cout << "inconclusive: budget exhausted after " << result.nodes << " nodes\n";
        break;
    }
    return kExitPass;
  }
  if (!m || !c) throw std::runtime_error("search needs --graph or both --m and --c");
  const auto result = search_twined(*m, *c, budget);
  switch (result.status) {
    case SearchStatus::Found:
      std::cout << "found: " << *c << "-twisted base for m = " << *m << " after " << result.tried
                << " pairings\n";
      break;
    case SearchStatus::ProvenNone:
      std::cout << "none within the restricted family (" << result.family
                << "); no claim beyond this family\n";
      break;
    case SearchStatus::BudgetExhausted:
      std::cout << "inconclusive: budget exhausted after " << result.tried << " pairings\n";
      break;
  }
  return kExitPass;
}

int cmd_selftest(const std::string& scope) {
  SelfTest st(std::cout);
  if (scope == "appendix" || scope == "all") st.run_appendix();
  if (scope == "invariants" || scope == "all") st.run_invariants();
  return st.all_ok() ? kExitPass : kExitCertificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and certify hamiltonian decompositions of wreath products"};
  app.require_subcommand(1);

  int n = 2, m = 0, c = 0;
  std::string out, format = "json", hspec, gfile, graph_file, dec_file, graph_out;
  std::string budget = "full", scope = "all";
  std::uint64_t seed = 0;  // reserved; deterministic recipes ignore it

  auto* twined = app.add_subcommand("twined", "build a c-twisted 2-factorization base");
  twined->add_option("--n", n, "tuple length (even)")->capture_default_str();
  twined->add_option("--m", m, "number of slots per level")->required();
  twined->add_option("--c", c, "twist count")->required();
  twined->add_option("--out", out, "output path");
  twined->add_option("--format", format, "json|dot|edges")->check(CLI::IsMember({"json", "dot", "edges"}));
  twined->add_option("--seed", seed, "reserved");

  auto* construct = app.add_subcommand("construct", "decompose C_n wr H or G wr H");
  construct->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  construct->add_option("--n", n, "order of the directed cycle G = C_n");
  construct->add_option("--g", gfile, "JSON file with G and its cycle cover");
  construct->add_option("--h", hspec, "circulant:m:s1,s2,... or a JSON file with H and its cover")->required();
  construct->add_option("--out", out, "output path");
  construct->add_option("--graph-out", graph_out, "also write the ambient digraph as JSON");
  construct->add_option("--format", format, "json|dot|edges")->check(CLI::IsMember({"json", "dot", "edges"}));
  construct->add_option("--seed", seed, "reserved");

  auto* verify = app.add_subcommand("verify", "check a decomposition against a digraph");
  verify->add_option("--graph", graph_file, "digraph JSON")->required();
  verify->add_option("--dec", dec_file, "decomposition JSON")->required();

  auto* search = app.add_subcommand("search", "exhaustive searches with explicit proof status");
  search->add_option("--m", m, "slots per level (twisted-base search)");
  search->add_option("--c", c, "twist count (twisted-base search)");
  search->add_option("--graph", graph_file, "digraph JSON (decomposition search)");
  search->add_option("--budget", budget, "node limit or 'full'")->capture_default_str();
  search->add_option("--seed", seed, "reserved");

  auto* selftest = app.add_subcommand("selftest", "run the built-in golden and invariant suites");
  selftest->add_option("--scope", scope, "appendix|invariants|all")
      ->check(CLI::IsMember({"appendix", "invariants", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIo;
  }

  try {
    if (twined->parsed()) return cmd_twined(n, m, c, out, format);
    if (construct->parsed())
      return cmd_construct(construct->count("--n") ? std::optional<int>(n) : std::nullopt, gfile, hspec, out,
                           graph_out, format);
    if (verify->parsed()) return cmd_verify(graph_file, dec_file);
    if (search->parsed())
      return cmd_search(search->count("--m") ? std::optional<int>(m) : std::nullopt,
                        search->count("--c") ? std::optional<int>(c) : std::nullopt, graph_file, budget);
    if (selftest->parsed()) return cmd_selftest(scope);
  } catch (const unsupported_case& e) {
    std::cerr << "out of scope: " << e.what() << "\n";
    return kExitOutOfScope;
  } catch (const internal_defect& e) {
    std::cerr << "certification failure: " << e.what() << "\n";
    return kExitCertificationFailure;
  } catch (const invalid_cover_error& e) {
    std::cerr << "invalid cover: " << e.what() << "\n";
    return kExitInvalidCover;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitIo;
}
