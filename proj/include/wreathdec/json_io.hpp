#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wreathdec/assemble.hpp"
#include "wreathdec/twined.hpp"
#include "wreathdec/verify.hpp"
#include "wreathdec/wreath.hpp"

namespace nlohmann {

template <>
struct adl_serializer<wreathdec::Permutation> {
  static void to_json(json& j, const wreathdec::Permutation& p) {
    j = json{{"m", p.size()}, {"images", p.images()}};
  }
  static wreathdec::Permutation from_json(const json& j) {
    std::vector<int> images = j.at("images").get<std::vector<int>>();
    if (j.at("m").get<int>() != static_cast<int>(images.size()))
      throw std::invalid_argument("permutation order disagrees with image count");
    return wreathdec::Permutation::from_images(std::move(images));
  }
};

}  // namespace nlohmann

namespace wreathdec {

using nlohmann::json;

inline void to_json(json& j, const FactorTuple& f) { j = json{{"perms", f.perms}}; }
inline void from_json(const json& j, FactorTuple& f) {
  f = FactorTuple(j.at("perms").get<std::vector<Permutation>>());
}

}  // namespace wreathdec

namespace nlohmann {

template <>
struct adl_serializer<wreathdec::RegularSet> {
  static void to_json(json& j, const wreathdec::RegularSet& s) {
    j = json{{"m", s.order()}, {"members", s.members()}};
  }
  static wreathdec::RegularSet from_json(const json& j) {
    wreathdec::RegularSet s(j.at("members").get<std::vector<wreathdec::Permutation>>());
    if (j.at("m").get<int>() != s.order()) throw std::invalid_argument("regular set order mismatch");
    return s;
  }
};

template <>
struct adl_serializer<wreathdec::TwinedFactorization> {
  static void to_json(json& j, const wreathdec::TwinedFactorization& tf) {
    j = json{{"n", tf.n()}, {"m", tf.m()}, {"c", tf.c()}, {"D_T", tf.twisted()}, {"D_H", tf.straight()}};
  }
  static wreathdec::TwinedFactorization from_json(const json& j) {
    return wreathdec::TwinedFactorization::checked(
        j.at("n").get<int>(), j.at("m").get<int>(), j.at("c").get<int>(),
        j.at("D_T").get<std::vector<wreathdec::FactorTuple>>(),
        j.at("D_H").get<std::vector<wreathdec::FactorTuple>>());
  }
};

}  // namespace nlohmann

namespace wreathdec {

inline void to_json(json& j, const Arc& a) { j = json::array({a.tail, a.head}); }
inline void from_json(const json& j, Arc& a) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("arc must be a [tail, head] pair");
  a.tail = j[0].get<int>();
  a.head = j[1].get<int>();
}

inline void to_json(json& j, const Digraph& d) {
  j = json{{"vertices", d.vertex_count()}, {"arcs", d.arcs()}};
}
inline void from_json(const json& j, Digraph& d) {
  d = Digraph(j.at("vertices").get<int>(), j.at("arcs").get<std::vector<Arc>>());
}

inline void to_json(json& j, const HamCycleCover& c) {
  j = json{{"digraph", c.digraph}, {"cover", c.cycles}};
}
inline void from_json(const json& j, HamCycleCover& c) {
  c.digraph = j.at("digraph").get<Digraph>();
  c.cycles = j.at("cover").get<std::vector<std::vector<Arc>>>();
}

inline void to_json(json& j, const Certificate& c) {
  if (c.pass) {
    j = json{{"verdict", "pass"}};
    return;
  }
  j = json{{"verdict", "fail"},
           {"witness", json{{"kind", c.kind}, {"data", c.data}, {"detail", c.detail}}}};
}
inline void from_json(const json& j, Certificate& c) {
  c = Certificate::ok();
  if (j.at("verdict").get<std::string>() == "pass") return;
  const json& w = j.at("witness");
  c = Certificate::fail(w.at("kind").get<std::string>(), w.at("data").get<std::vector<long long>>(),
                        w.at("detail").get<std::string>());
}

inline void to_json(json& j, const WreathDecomposition& d) {
  json cycles = json::array();
  for (const auto& cyc : d.cycles) {
    json arcs = json::array();
    for (const Arc& a : cyc)
      arcs.push_back(json::array({json::array({a.tail / d.m, a.tail % d.m}),
                                  json::array({a.head / d.m, a.head % d.m})}));
    cycles.push_back(std::move(arcs));
  }
  j = json{{"n", d.n},       {"m", d.m},          {"g", d.g},
           {"c", d.c},       {"digraph", d.digraph}, {"cycles", std::move(cycles)},
           {"tags", d.tags}, {"certificate", d.certificate}};
}
inline void from_json(const json& j, WreathDecomposition& d) {
  d.n = j.at("n").get<int>();
  d.m = j.at("m").get<int>();
  d.g = j.at("g").get<int>();
  d.c = j.at("c").get<int>();
  d.digraph = j.at("digraph").get<Digraph>();
  d.cycles.clear();
  for (const json& cyc : j.at("cycles")) {
    std::vector<Arc> arcs;
    for (const json& pair : cyc) {
      const int ti = pair.at(0).at(0).get<int>(), tj = pair.at(0).at(1).get<int>();
      const int hi = pair.at(1).at(0).get<int>(), hj = pair.at(1).at(1).get<int>();
      arcs.push_back({ti * d.m + tj, hi * d.m + hj});
    }
    std::sort(arcs.begin(), arcs.end());
    d.cycles.push_back(std::move(arcs));
  }
  d.tags = j.value("tags", std::vector<std::string>{});
  if (j.contains("certificate")) d.certificate = j.at("certificate").get<Certificate>();
}

// ---- text formats ----

// One "i j  ->  i' j'" line per arc, grouped under "# cycle k" headers.
inline std::string decomposition_edges_text(const WreathDecomposition& d) {
  std::ostringstream os;
  for (std::size_t k = 0; k < d.cycles.size(); ++k) {
    os << "# cycle " << k;
    if (k < d.tags.size()) os << " (" << d.tags[k] << ")";
    os << '\n';
    for (const Arc& a : d.cycles[k])
      os << a.tail / d.m << ' ' << a.tail % d.m << "  ->  " << a.head / d.m << ' ' << a.head % d.m << '\n';
  }
  return os.str();
}

inline std::string twined_edges_text(const TwinedFactorization& tf) {
  std::ostringstream os;
  const auto tuples = tf.all_tuples();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    os << "# tuple " << k << (static_cast<int>(k) < tf.c() ? " (D_T)" : " (D_H)") << '\n';
    for (const Arc& a : tuple_arcs(tuples[k]))
      os << a.tail / tf.m() << ' ' << a.tail % tf.m() << "  ->  " << a.head / tf.m() << ' ' << a.head % tf.m()
         << '\n';
  }
  return os.str();
}

inline const std::vector<std::string>& dot_palette() {
  static const std::vector<std::string> palette{
      "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6",
      "#bcf60c", "#fabebe", "#008080", "#9a6324", "#800000", "#808000", "#000075"};
  return palette;
}

inline std::string decomposition_dot(const WreathDecomposition& d) {
  std::ostringstream os;
  os << "digraph wreath {\n";
  for (std::size_t k = 0; k < d.cycles.size(); ++k) {
    const std::string& color = dot_palette()[k % dot_palette().size()];
    for (const Arc& a : d.cycles[k])
      os << "  \"" << a.tail / d.m << "_" << a.tail % d.m << "\" -> \"" << a.head / d.m << "_" << a.head % d.m
         << "\" [color=\"" << color << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string twined_dot(const TwinedFactorization& tf) {
  std::ostringstream os;
  os << "digraph twined {\n";
  const auto tuples = tf.all_tuples();
  for (std::size_t k = 0; k < tuples.size(); ++k) {
    const std::string& color = dot_palette()[k % dot_palette().size()];
    for (const Arc& a : tuple_arcs(tuples[k]))
      os << "  \"" << a.tail / tf.m() << "_" << a.tail % tf.m() << "\" -> \"" << a.head / tf.m() << "_"
         << a.head % tf.m() << "\" [color=\"" << color << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

inline std::string digraph_edges_text(const Digraph& d) {
  std::ostringstream os;
  for (const Arc& a : d.arcs()) os << a.tail << ' ' << a.head << '\n';
  return os.str();
}

inline void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << body;
  if (!out) throw std::runtime_error("write failed: " + path);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace wreathdec
