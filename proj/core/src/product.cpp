#include "tautcalc/product.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "tautcalc/atlas.hpp"

namespace tautcalc {
namespace {

using Key = std::tuple<int, std::vector<int>, std::vector<std::vector<int>>>;

// Distributes kappa entries of target vertex w over the graph vertices mapping to w.
template <class F>
void distribute_kappa(const std::vector<std::pair<int, std::vector<int>>>& sources,
                      const std::vector<std::vector<int>>& preimages, std::vector<std::vector<int>>& kappa,
                      std::size_t s, std::size_t j, F&& emit) {
  if (s == sources.size()) {
    emit();
    return;
  }
  const auto& [w, entries] = sources[s];
  if (j == entries.size()) {
    distribute_kappa(sources, preimages, kappa, s + 1, 0, emit);
    return;
  }
  for (int u : preimages[w]) {
    kappa[u].push_back(entries[j]);
    distribute_kappa(sources, preimages, kappa, s, j + 1, emit);
    kappa[u].pop_back();
  }
}

// Every decorated term of a * b on the graphs of the atlas, with its coefficient.
template <class Emit>
void product_terms(const StrataAtlas& atlas, const StrataAtlas::Placed& pa, const StrataAtlas::Placed& pb,
                   const Rational& scale, Emit&& emit) {
  const auto& structs = atlas.structures(pa.graph, pb.graph);
  const auto& aut_a = atlas.automorphisms(pa.graph);
  const auto& aut_b = atlas.automorphisms(pb.graph);
  for (const auto& st : structs) {
    const StableGraph& g = atlas.graphs()[st.graph];
    const auto& sa = atlas.specializations(pa.graph)[st.a];
    const auto& sb = atlas.specializations(pb.graph)[st.b];
    const int nh = g.num_half_edges();
    const int nv = g.num_vertices();
    const Rational weight = scale / Rational(atlas.aut_order(st.graph));
    const int excess = static_cast<int>(st.excess.size());

    std::vector<int> psi(nh), load(nv);
    std::vector<std::vector<int>> kappa(nv);
    std::vector<std::vector<int>> pre_a(pa.kappa.size()), pre_b(pb.kappa.size());
    for (const auto& sig_a : aut_a) {
      for (auto& p : pre_a) p.clear();
      for (int u = 0; u < nv; ++u) pre_a[sig_a.vertex[sa.vertex[u]]].push_back(u);
      for (const auto& sig_b : aut_b) {
        std::fill(load.begin(), load.end(), 0);
        for (int h = 0; h < nh; ++h) {
          int d = 0;
          if (sa.half_edge[h] >= 0) d += pa.psi[sig_a.half_edge[sa.half_edge[h]]];
          if (sb.half_edge[h] >= 0) d += pb.psi[sig_b.half_edge[sb.half_edge[h]]];
          psi[h] = d;
          load[g.vertex_of(h)] += d;
        }
        bool dead = false;
        for (int v = 0; v < nv; ++v) dead = dead || load[v] > g.vertex_dim(v);
        if (dead) continue;
        for (int u = 0; u < nv; ++u) kappa[u].clear();
        std::vector<std::pair<int, std::vector<int>>> sources;
        for (std::size_t w = 0; w < pa.kappa.size(); ++w)
          if (!pa.kappa[w].empty()) sources.push_back({static_cast<int>(w), pa.kappa[w]});
        const std::size_t split = sources.size();
        for (std::size_t w = 0; w < pb.kappa.size(); ++w)
          if (!pb.kappa[w].empty()) sources.push_back({static_cast<int>(w), pb.kappa[w]});
        for (auto& p : pre_b) p.clear();
        for (int u = 0; u < nv; ++u) pre_b[sig_b.vertex[sb.vertex[u]]].push_back(u);
        // Sources from A use pre_a, from B use pre_b: merge into one preimage table.
        std::vector<std::vector<int>> preimages;
        std::vector<std::pair<int, std::vector<int>>> indexed;
        for (std::size_t s = 0; s < sources.size(); ++s) {
          preimages.push_back(s < split ? pre_a[sources[s].first] : pre_b[sources[s].first]);
          indexed.push_back({static_cast<int>(s), sources[s].second});
        }
        distribute_kappa(indexed, preimages, kappa, 0, 0, [&] {
          for (int mask = 0; mask < (1 << excess); ++mask) {
            std::vector<int> p = psi;
            for (int i = 0; i < excess; ++i) {
              const auto [h0, h1] = g.edge_half_edges(st.excess[i]);
              p[(mask >> i & 1) ? h1 : h0] += 1;
            }
            emit(st.graph, p, kappa, (excess % 2) ? -weight : weight);
          }
        });
      }
    }
  }
}

DecoratedStratum with_graph(const StableGraph& g, std::vector<int> psi, std::vector<std::vector<int>> kappa) {
  return DecoratedStratum(g, std::move(psi), std::move(kappa));
}

void add_linear(std::vector<std::pair<Rational, DivisorGen>>& out, const GeneratorExpr& e, const Rational& c) {
  switch (e.op()) {
    case GeneratorExpr::Op::Atom:
      if (e.atom().kind != Symbol::Kind::Divisor) throw std::logic_error("not a divisor expression");
      out.push_back({c, e.atom().divisor});
      return;
    case GeneratorExpr::Op::Sum:
      for (std::size_t i = 0; i < e.children().size(); ++i) add_linear(out, e.children()[i], c * e.coefficients()[i]);
      return;
    case GeneratorExpr::Op::Product:
      if (e.children().size() == 1) {
        add_linear(out, e.children()[0], c);
        return;
      }
      break;
    case GeneratorExpr::Op::Constant:
      if (is_zero(e.constant())) return;
      break;
  }
  throw std::logic_error("not a linear divisor expression: " + e.to_string());
}

TautClass mult_boundary(const TautClass& x, const DivisorGen& d) {
  const MarkedSpace space = x.space();
  TautClass out(space);
  for (const auto& [code, t] : x.terms()) {
    const DecoratedStratum& s = t.stratum;
    const StableGraph& g = s.graph;
    for (int v = 0; v < g.num_vertices(); ++v) {
      for (const auto& deg : local_degenerations(g, v)) {
        if (edge_type(deg.graph, deg.graph.num_edges() - 1) != d) continue;
        std::vector<int> psi = s.psi;
        psi.push_back(0);
        psi.push_back(0);
        const Rational c = t.coeff / 2;
        if (deg.loop) {
          out.add(DecoratedStratum(deg.graph, psi, s.kappa), c);
          continue;
        }
        const auto& kv = s.kappa[v];
        const int m = static_cast<int>(kv.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
          auto kappa = s.kappa;
          kappa[v].clear();
          kappa.emplace_back();
          for (int j = 0; j < m; ++j) ((mask >> j & 1) ? kappa.back() : kappa[v]).push_back(kv[j]);
          out.add(DecoratedStratum(deg.graph, psi, std::move(kappa)), c);
        }
      }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
      if (edge_type(g, e) != d) continue;
      for (int h : g.edge_half_edges(e)) {
        auto psi = s.psi;
        psi[h] += 1;
        out.add(DecoratedStratum(g, std::move(psi), s.kappa), -t.coeff);
      }
    }
  }
  return out;
}

}  // namespace

DivisorGen edge_type(const StableGraph& graph, int e) {
  if (graph.is_loop(e)) return DivisorGen::delta_irr();
  if (!graph.is_separating(e)) return DivisorGen::delta_irr();
  const auto [h, J] = graph.side_of(e);
  return DivisorGen::delta_sep(graph.space(), h, J);
}

TautClass mult_divisor(const TautClass& x, const DivisorGen& d) {
  const MarkedSpace space = x.space();
  d.validate(space);
  switch (d.kind) {
    case DivisorGen::Kind::Psi: {
      TautClass out(space);
      for (const auto& [code, t] : x.terms()) {
        auto psi = t.stratum.psi;
        psi[d.index - 1] += 1;
        out.add(DecoratedStratum(t.stratum.graph, std::move(psi), t.stratum.kappa), t.coeff);
      }
      return out;
    }
    case DivisorGen::Kind::Omega:
    case DivisorGen::Kind::Lambda: {
      const GeneratorExpr e = d.kind == DivisorGen::Kind::Omega ? omega_expr(space, d.index) : lambda_expr(space);
      std::vector<std::pair<Rational, DivisorGen>> lin;
      add_linear(lin, e, 1);
      TautClass out(space);
      for (const auto& [c, gen] : lin) out.add(mult_divisor(x, gen), c);
      return out;
    }
    case DivisorGen::Kind::DeltaIrr:
    case DivisorGen::Kind::DeltaSep:
      return mult_boundary(x, d);
  }
  return TautClass(space);
}

TautClass mult_kappa1(const TautClass& x) {
  TautClass out(x.space());
  for (const auto& [code, t] : x.terms())
    for (int v = 0; v < t.stratum.graph.num_vertices(); ++v) {
      auto kappa = t.stratum.kappa;
      kappa[v].push_back(1);
      out.add(DecoratedStratum(t.stratum.graph, t.stratum.psi, std::move(kappa)), t.coeff);
    }
  return out;
}

TautClass mult_degree_one(const TautClass& x, const TautClass& d) {
  if (x.space() != d.space()) throw std::invalid_argument("classes live on different spaces");
  TautClass out(x.space());
  for (const auto& [code, t] : d.terms()) {
    const DecoratedStratum& s = t.stratum;
    if (s.degree() != 1) throw std::invalid_argument("mult_degree_one needs a degree-one class");
    if (s.graph.num_edges() == 1) {
      const long aut = canonicalize(s.graph).automorphisms;
      out.add(mult_divisor(x, edge_type(s.graph, 0)), t.coeff * Rational(aut));
      continue;
    }
    int leg = -1;
    for (int i = 0; i < s.graph.num_legs(); ++i)
      if (s.psi[i] == 1) leg = i;
    if (leg >= 0)
      out.add(mult_divisor(x, DivisorGen::psi(leg + 1)), t.coeff);
    else
      out.add(mult_kappa1(x), t.coeff);
  }
  return out;
}

TautClass mult(const TautClass& a, const TautClass& b) {
  if (a.space() != b.space()) throw std::invalid_argument("classes live on different spaces");
  const MarkedSpace space = a.space();
  const StrataAtlas& atlas = StrataAtlas::of(space);
  std::vector<StrataAtlas::Placed> pa, pb;
  std::vector<Rational> ca, cb;
  for (const auto& [code, t] : a.terms()) {
    pa.push_back(atlas.place(t.stratum));
    ca.push_back(t.coeff);
  }
  for (const auto& [code, t] : b.terms()) {
    pb.push_back(atlas.place(t.stratum));
    cb.push_back(t.coeff);
  }
  std::map<Key, Rational> acc;
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pb.size(); ++j)
      product_terms(atlas, pa[i], pb[j], ca[i] * cb[j],
                    [&](int graph, const std::vector<int>& psi, const std::vector<std::vector<int>>& kappa,
                        const Rational& c) {
                      auto sorted = kappa;
                      for (auto& k : sorted) std::sort(k.begin(), k.end());
                      acc[Key{graph, psi, std::move(sorted)}] += c;
                    });
  TautClass out(space);
  for (auto& [key, c] : acc) {
    auto& [graph, psi, kappa] = key;
    out.add(with_graph(atlas.graphs()[graph], psi, kappa), c);
  }

  const bool a_one = !a.empty() && a.degree() == 1;
  const bool b_one = !b.empty() && b.degree() == 1;
  if (a_one || b_one) {
    const TautClass check = b_one ? mult_degree_one(a, b) : mult_degree_one(b, a);
    if (!(check == out))
      throw std::logic_error("intersection product disagrees with the divisor rule");
  }
  return out;
}

Rational integrate_product(const TautClass& a, const TautClass& b) {
  if (a.space() != b.space()) throw std::invalid_argument("classes live on different spaces");
  const StrataAtlas& atlas = StrataAtlas::of(a.space());
  std::vector<StrataAtlas::Placed> pb;
  std::vector<Rational> cb;
  for (const auto& [code, t] : b.terms()) {
    pb.push_back(atlas.place(t.stratum));
    cb.push_back(t.coeff);
  }
  Rational total = 0;
  for (const auto& [code, t] : a.terms()) {
    const auto pa = atlas.place(t.stratum);
    for (std::size_t j = 0; j < pb.size(); ++j)
      product_terms(atlas, pa, pb[j], t.coeff * cb[j],
                    [&](int graph, const std::vector<int>& psi, const std::vector<std::vector<int>>& kappa,
                        const Rational& c) {
                      const Rational v = integrate_decorations(atlas.graphs()[graph], psi, kappa);
                      if (!is_zero(v)) total += c * v;
                    });
  }
  return total;
}

}  // namespace tautcalc
