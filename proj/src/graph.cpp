#include "tonegroup/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "json.hpp"
#include "tonegroup/error.hpp"

namespace tonegroup {

std::size_t ChordGraph::find(const Chord& chord) const {
  const auto it = std::find_if(nodes_.begin(), nodes_.end(),
                               [&](const GraphNode& n) { return n.chord == chord; });
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t ChordGraph::find(std::string_view id) const {
  const auto it =
      std::find_if(nodes_.begin(), nodes_.end(), [&](const GraphNode& n) { return n.id == id; });
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t ChordGraph::follow(std::size_t node, Op op) const {
  for (const auto& e : edges_) {
    if (e.op != op) continue;
    if (e.from == node) return e.to;
    if (!e.directed && e.to == node) return e.from;
  }
  return nodes_.size();
}

bool ChordGraph::has_edge(std::size_t from, std::size_t to, Op op) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const GraphEdge& e) {
    if (e.op != op) return false;
    if (e.from == from && e.to == to) return true;
    return !e.directed && e.from == to && e.to == from;
  });
}

ChordGraph build_chord_graph(bool include_dd) {
  std::vector<GraphNode> nodes;
  for (SeventhFamily f : kSeventhFamilies) {
    if (f == SeventhFamily::dd && !include_dd) continue;
    for (int n = 0; n < inversion_count(f); ++n) {
      const ChordLabel label{f, n};
      nodes.push_back({chord_of(label), label, to_string(label)});
    }
  }

  std::map<Chord, std::size_t> index;
  for (std::size_t j = 0; j < nodes.size(); ++j) index.emplace(nodes[j].chord, j);
  auto image = [&](std::size_t from, Op op) {
    const auto it = index.find(apply(op, nodes[from].chord));
    if (it == index.end()) {
      throw Error(Errc::IsomorphismViolation,
                  std::string("operator ") + symbol(op) + " leaves the graph at " + nodes[from].id);
    }
    return it->second;
  };

  std::vector<GraphEdge> edges;
  for (std::size_t u = 0; u < nodes.size(); ++u) {
    edges.push_back({u, image(u, Op::Invert), Op::Invert, true});
    for (Op op : {Op::Dual, Op::AugDim}) {
      const std::size_t v = image(u, op);
      if (u <= v) edges.push_back({u, v, op, false});
    }
  }
  std::sort(edges.begin(), edges.end());
  return ChordGraph(std::move(nodes), std::move(edges));
}

std::vector<std::vector<std::size_t>> connected_components(const ChordGraph& g) {
  const std::size_t n = g.nodes().size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.edges()) parent[root(e.from)] = root(e.to);

  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < n; ++j) groups[root(j)].push_back(j);

  std::vector<std::vector<std::size_t>> components;
  for (auto& [_, members] : groups) components.push_back(std::move(members));

  auto chords_of = [&](const std::vector<std::size_t>& members) {
    std::vector<Chord> chords;
    for (auto j : members) chords.push_back(g.nodes()[j].chord);
    std::sort(chords.begin(), chords.end());
    return chords;
  };
  std::sort(components.begin(), components.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return chords_of(a) < chords_of(b);
  });
  return components;
}

ComponentMap family_swap_map(const ChordGraph& g) {
  static const std::map<SeventhFamily, SeventhFamily> swap{
      {SeventhFamily::MM, SeventhFamily::mm},
      {SeventhFamily::mM, SeventhFamily::Mm},
      {SeventhFamily::AM, SeventhFamily::dm},
  };
  ComponentMap map;
  for (std::size_t u = 0; u < g.nodes().size(); ++u) {
    const auto& label = g.nodes()[u].label;
    const auto* family = std::get_if<SeventhFamily>(&label.family);
    if (!family) continue;
    const auto it = swap.find(*family);
    if (it == swap.end()) continue;
    const std::size_t v = g.find(to_string(ChordLabel{it->second, label.inversion}));
    if (v < g.nodes().size()) map.emplace_back(u, v);
  }
  return map;
}

std::size_t count_isomorphism_violations(const ChordGraph& g, const ComponentMap& map) {
  std::size_t violations = 0;
  std::map<std::size_t, std::size_t> forward;
  std::map<std::size_t, std::size_t> backward;
  for (const auto& [u, v] : map) {
    if (!forward.emplace(u, v).second) ++violations;
    if (!backward.emplace(v, u).second) ++violations;
    if (forward.count(v) || backward.count(u)) ++violations;
  }

  // Carry each edge touching one side across the map and look for it there.
  auto carry = [&](const std::map<std::size_t, std::size_t>& m) {
    for (const auto& e : g.edges()) {
      const auto from = m.find(e.from);
      const auto to = m.find(e.to);
      if (from == m.end() && to == m.end()) continue;
      if (from == m.end() || to == m.end() || !g.has_edge(from->second, to->second, e.op)) {
        ++violations;
      }
    }
  };
  carry(forward);
  carry(backward);

  // Both sides must be whole components.
  for (const auto& component : connected_components(g)) {
    const auto in_forward = std::count_if(component.begin(), component.end(),
                                          [&](std::size_t j) { return forward.count(j) > 0; });
    const auto in_backward = std::count_if(component.begin(), component.end(),
                                           [&](std::size_t j) { return backward.count(j) > 0; });
    const auto size = static_cast<long>(component.size());
    if (in_forward != 0 && in_forward != size) ++violations;
    if (in_backward != 0 && in_backward != size) ++violations;
  }
  return violations;
}

ComponentMap component_isomorphism(const ChordGraph& g) {
  ComponentMap map = family_swap_map(g);
  if (map.size() != 12) {
    throw Error(Errc::IsomorphismViolation,
                "expected 12 node pairs, found " + std::to_string(map.size()));
  }
  if (const auto violations = count_isomorphism_violations(g, map); violations != 0) {
    throw Error(Errc::IsomorphismViolation,
                "component map breaks " + std::to_string(violations) + " edge(s)");
  }
  return map;
}

std::string export_dot(const ChordGraph& g) {
  std::string out = "digraph chord_graph {\n";
  out += "  node [shape=box];\n";
  for (const auto& n : g.nodes()) {
    out += "  " + n.id + " [label=\"" + n.id + "\\n(" + to_string(n.chord) + ")\"];\n";
  }
  for (const auto& e : g.edges()) {
    out += "  " + g.nodes()[e.from].id + " -> " + g.nodes()[e.to].id + " [label=\"";
    out += symbol(e.op);
    out += '"';
    if (!e.directed) out += ", dir=both";
    if (e.op == Op::AugDim) out += ", style=dashed";
    out += "];\n";
  }
  out += "}\n";
  return out;
}

std::string export_json(const ChordGraph& g) {
  using nlohmann::json;
  json nodes = json::array();
  for (const auto& n : g.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"chord", n.chord.values()},
                     {"family", std::string(to_string(n.label.family))},
                     {"inversion", n.label.inversion}});
  }
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back({{"from", g.nodes()[e.from].id},
                     {"to", g.nodes()[e.to].id},
                     {"op", std::string(1, symbol(e.op))}});
  }
  return json{{"nodes", nodes}, {"edges", edges}}.dump(2) + "\n";
}

}  // namespace tonegroup
