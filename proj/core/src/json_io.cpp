#include "tautcalc/json_io.hpp"

#include <algorithm>
#include <json.hpp>
#include <stdexcept>

#include "tautcalc/enumerate.hpp"
#include "tautcalc/pairing.hpp"

namespace tautcalc::json {
namespace {

using nlohmann::json;

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

json graph_json(const StableGraph& g) {
  json vertices = json::array(), legs = json::array(), edges = json::array();
  for (int v = 0; v < g.num_vertices(); ++v) vertices.push_back({{"genus", g.genus(v)}});
  for (int i = 0; i < g.num_legs(); ++i) legs.push_back({{"marking", i + 1}, {"vertex", g.leg_vertices()[i]}});
  for (const auto& e : g.edges()) edges.push_back({e[0], e[1]});
  return {{"vertices", vertices}, {"legs", legs}, {"edges", edges}};
}

StableGraph graph_from(const json& j) {
  std::vector<int> genera;
  for (const auto& v : j.at("vertices")) genera.push_back(v.at("genus").get<int>());
  const auto& legs = j.at("legs");
  std::vector<int> leg_vertex(legs.size(), -1);
  for (const auto& l : legs) {
    const int m = l.at("marking").get<int>();
    if (m < 1 || m > static_cast<int>(legs.size()) || leg_vertex[m - 1] != -1)
      throw std::invalid_argument("legs must carry the markings 1..n once each");
    leg_vertex[m - 1] = l.at("vertex").get<int>();
  }
  std::vector<std::array<int, 2>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("an edge is a pair of vertex indices");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  for (int v : leg_vertex)
    if (v < 0 || v >= static_cast<int>(genera.size())) throw std::invalid_argument("leg on a missing vertex");
  for (const auto& e : edges)
    for (int v : e)
      if (v < 0 || v >= static_cast<int>(genera.size())) throw std::invalid_argument("edge on a missing vertex");
  StableGraph g(std::move(genera), std::move(leg_vertex), std::move(edges));
  g.validate();
  return g;
}

json decorations(const DecoratedStratum& s) {
  json psi_half_edges = json::array();
  for (const auto& p : s.psi_half_edges()) psi_half_edges.push_back({p[0], p[1]});
  return {{"graph", graph_json(s.graph)},
          {"psi_legs", s.psi_legs()},
          {"psi_half_edges", psi_half_edges},
          {"kappa", s.kappa}};
}

template <class F>
auto guarded(std::string_view text, F&& f) {
  try {
    return f(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string dump_graph(const StableGraph& g, int indent) { return graph_json(g).dump(indent); }

StableGraph parse_graph(std::string_view text) {
  return guarded(text, [](const json& j) { return graph_from(j); });
}

std::string dump_class(const TautClass& x, int indent) {
  json terms = json::array();
  for (const auto& [code, t] : x.terms()) {
    json item = decorations(t.stratum);
    item["coeff"] = to_string(t.coeff);
    terms.push_back(std::move(item));
  }
  return json{{"space", {{"g", x.space().g}, {"n", x.space().n}}}, {"terms", terms}}.dump(indent);
}

TautClass parse_class(std::string_view text) {
  return guarded(text, [](const json& j) {
    const MarkedSpace space{j.at("space").at("g").get<int>(), j.at("space").at("n").get<int>()};
    space.validate();
    TautClass out(space);
    for (const auto& t : j.at("terms")) {
      const StableGraph g = graph_from(t.at("graph"));
      if (g.space() != space) throw std::invalid_argument("term graph lives on a different space");
      std::vector<int> psi(g.num_half_edges(), 0);
      const auto legs = t.at("psi_legs").get<std::vector<int>>();
      const auto half = t.at("psi_half_edges").get<std::vector<std::array<int, 2>>>();
      auto kappa = t.at("kappa").get<std::vector<std::vector<int>>>();
      if (static_cast<int>(legs.size()) != g.num_legs() || static_cast<int>(half.size()) != g.num_edges() ||
          static_cast<int>(kappa.size()) != g.num_vertices())
        throw std::invalid_argument("decoration sizes do not match the graph");
      for (int i = 0; i < g.num_legs(); ++i) psi[i] = legs[i];
      for (int e = 0; e < g.num_edges(); ++e) {
        const auto [a, b] = g.edge_half_edges(e);
        psi[a] = half[e][0];
        psi[b] = half[e][1];
      }
      for (int p : psi)
        if (p < 0) throw std::invalid_argument("negative psi exponent");
      for (auto& k : kappa) {
        for (int a : k)
          if (a < 1) throw std::invalid_argument("kappa indices must be positive");
        std::sort(k.begin(), k.end());
      }
      out.add(DecoratedStratum(g, std::move(psi), std::move(kappa)), parse_rational(t.at("coeff").get<std::string>()));
    }
    return out;
  });
}

std::string dump_strata(MarkedSpace space, int codim, bool decorated, int indent) {
  space.validate();
  if (codim < 0 || codim > space.dim())
    throw std::invalid_argument("codimension outside 0.." + std::to_string(space.dim()));
  json items = json::array();
  if (decorated) {
    for (const DecoratedStratum& s : spanning_set(space, codim)) {
      const CanonicalStratum cs = canonicalize(s);
      json item = decorations(cs.stratum);
      item["code"] = hex(cs.code);
      item["automorphisms"] = cs.automorphisms;
      if (codim == space.dim()) item["integral"] = to_string(integrate(cs.stratum));
      items.push_back(std::move(item));
    }
  } else {
    for (const StableGraph& g : enumerate_graphs(space, codim)) {
      const CanonicalForm cf = canonicalize(g);
      items.push_back({{"code", hex(cf.code)}, {"automorphisms", cf.automorphisms}, {"graph", graph_json(g)}});
    }
  }
  return json{{"space", {{"g", space.g}, {"n", space.n}}},
              {"codim", codim},
              {"decorated", decorated},
              {"count", items.size()},
              {"strata", items}}
      .dump(indent);
}

std::string dump_report(const VerificationReport& r, int indent) {
  return json{{"check", r.name},
              {"verdict", r.pass ? "pass" : "fail"},
              {"witnesses", r.witnesses},
              {"spanning_size", r.spanning_size},
              {"milliseconds", r.milliseconds}}
      .dump(indent);
}

}  // namespace tautcalc::json
