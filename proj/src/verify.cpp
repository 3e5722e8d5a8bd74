#include "tonegroup/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <cstdint>

#include "tonegroup/classify.hpp"
#include "tonegroup/core.hpp"
#include "tonegroup/graph.hpp"
#include "tonegroup/transform.hpp"

namespace tonegroup {

namespace {

constexpr int kMaxExhaustiveSize = 6;

std::int64_t binomial(int n, int r) {
  std::int64_t out = 1;
  for (int j = 1; j <= r; ++j) out = out * (n - r + j) / j;
  return out;
}

CheckResult check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

std::vector<Chord> rows(std::initializer_list<std::initializer_list<int>> chords) {
  std::vector<Chord> out;
  for (auto c : chords) out.push_back(make_chord(c));
  return out;
}

// Inversion orbits of the seventh families in inversion order, as printed in
// the reference classification.
const std::vector<std::pair<SeventhFamily, std::vector<Chord>>>& reference_seventh_rows() {
  static const std::vector<std::pair<SeventhFamily, std::vector<Chord>>> table{
      {SeventhFamily::MM, rows({{0, 4, 7, 11}, {0, 3, 7, 8}, {0, 4, 5, 9}, {0, 1, 5, 8}})},
      {SeventhFamily::mM, rows({{0, 3, 7, 11}, {0, 4, 8, 9}, {0, 4, 5, 8}, {0, 1, 4, 8}})},
      {SeventhFamily::AM, rows({{0, 4, 8, 11}, {0, 4, 7, 8}, {0, 3, 4, 8}, {0, 1, 5, 9}})},
      {SeventhFamily::Mm, rows({{0, 4, 7, 10}, {0, 3, 6, 8}, {0, 3, 5, 9}, {0, 2, 6, 9}})},
      {SeventhFamily::dm, rows({{0, 3, 6, 10}, {0, 3, 7, 9}, {0, 4, 6, 9}, {0, 2, 5, 8}})},
      {SeventhFamily::mm, rows({{0, 3, 7, 10}, {0, 4, 7, 9}, {0, 3, 5, 8}, {0, 2, 5, 9}})},
      {SeventhFamily::dd, rows({{0, 3, 6, 9}})},
  };
  return table;
}

CheckResult check_round_trip() {
  std::size_t failures = 0;
  for (int k = 1; k <= kMaxExhaustiveSize; ++k) {
    for (const auto& c : enumerate_chords(k)) {
      const auto comp = to_composition(c);
      if (to_chord(comp) != c || comp.size() != c.size()) ++failures;
    }
  }
  return check("round-trip(k<=6)", failures == 0);
}

CheckResult check_counting() {
  bool ok = true;
  for (int k = 1; k <= kOctave; ++k) {
    ok = ok && static_cast<std::int64_t>(enumerate_chords(k).size()) == binomial(kOctave - 1, k - 1);
  }
  return check("counting", ok);
}

CheckResult check_partition_fibers() {
  bool ok = true;
  for (int k = 1; k <= kOctave; ++k) {
    std::multiset<Chord> covered;
    for (const auto& p : enumerate_partitions(k)) {
      for (const auto& c : chords_of_partition(p)) {
        ok = ok && to_partition(c) == p;
        covered.insert(c);
      }
    }
    const auto all = enumerate_chords(k);
    ok = ok && covered.size() == all.size() &&
         std::equal(covered.begin(), covered.end(), all.begin(), all.end());
  }
  return check("partition-fibers", ok);
}

CheckResult check_triad_partitions() {
  std::vector<Partition> harmonic;
  for (const auto& p : enumerate_partitions(3)) {
    if (std::all_of(p.parts().begin(), p.parts().end(), [](int x) { return x >= 3; })) {
      harmonic.push_back(p);
    }
  }
  const std::vector<Partition> expected{Partition::of({3, 3, 6}), Partition::of({3, 4, 5}),
                                        Partition::of({4, 4, 4})};
  std::string detail;
  for (const auto& p : harmonic) detail += to_string(p);
  return check("triad-partitions", harmonic == expected, detail);
}

CheckResult check_harmonic_count(int k, std::size_t expected) {
  std::size_t harmonic = 0;
  std::size_t unlabeled = 0;
  const auto& table = k == 3 ? triad_table() : seventh_table();
  std::set<Partition> stray;
  for (const auto& c : enumerate_chords(k)) {
    const bool h = k == 3 ? is_harmonic_triad(c) : is_harmonic_seventh(c);
    if (!h) continue;
    ++harmonic;
    if (!table.count(c)) {
      ++unlabeled;
      stray.insert(to_partition(c));
    }
  }
  std::string detail = std::to_string(harmonic) + " harmonic, " + std::to_string(table.size()) +
                       " labeled, expected " + std::to_string(expected);
  for (const auto& p : stray) detail += ", unlabeled partition " + to_string(p);
  return check("harmonic-count(k=" + std::to_string(k) + ")",
               harmonic == expected && unlabeled == 0 && table.size() == expected, detail);
}

CheckResult check_table_one() {
  bool ok = seventh_table().size() == 25;
  for (const auto& [family, chords] : reference_seventh_rows()) {
    ok = ok && inversion_count(family) == static_cast<int>(chords.size());
    for (std::size_t n = 0; n < chords.size(); ++n) {
      const auto it = seventh_table().find(chords[n]);
      ok = ok && it != seventh_table().end() &&
           it->second == ChordLabel{family, static_cast<int>(n)} &&
           chord_of(ChordLabel{family, static_cast<int>(n)}) == chords[n];
    }
  }
  return check("table-1", ok);
}

CheckResult check_relations(int k) {
  std::size_t violations = 0;
  for (const auto& c : enumerate_chords(k)) {
    if (invert_n(c, k) != c) ++violations;
    if (dual(dual(c)) != c) ++violations;
    if (k == 4 && augdim(augdim(c)) != c) ++violations;
    for (int n = 0; n <= k; ++n) {
      if (dual(invert_n(c, n)) != invert_n(dual(c), k - n)) ++violations;
    }
  }
  return check("relations(k=" + std::to_string(k) + ")", violations == 0,
               violations ? std::to_string(violations) + " violations" : std::string{});
}

CheckResult check_composition_action() {
  std::size_t violations = 0;
  for (const auto& c : enumerate_chords(4)) {
    const auto comp = to_composition(c);
    if (to_composition(invert(c)) != gaps::rotate_left(comp)) ++violations;
    if (to_composition(dual(c)) != gaps::reversed(comp)) ++violations;
    if (to_composition(augdim(c)) != gaps::swap_middle(comp)) ++violations;
    for (Op op : {Op::Invert, Op::Dual, Op::AugDim}) {
      if (to_partition(apply(op, c)) != to_partition(c)) ++violations;
    }
  }
  return check("composition-action(k=4)", violations == 0);
}

CheckResult check_symmetric_closure() {
  using Perm = std::vector<int>;
  // Position maps of the three gap actions: out[j] = in[perm[j]].
  const std::vector<Perm> generators{{1, 2, 3, 0}, {3, 2, 1, 0}, {0, 2, 1, 3}};
  std::set<Perm> group{{0, 1, 2, 3}};
  std::vector<Perm> frontier{{0, 1, 2, 3}};
  while (!frontier.empty()) {
    const Perm p = frontier.back();
    frontier.pop_back();
    for (const auto& g : generators) {
      Perm q(4);
      for (int j = 0; j < 4; ++j) q[j] = p[g[j]];
      if (group.insert(q).second) frontier.push_back(q);
    }
  }
  return check("s4-closure", group.size() == 24, std::to_string(group.size()));
}

CheckResult check_exact_order() {
  const auto triad = orbit(make_chord({0, 4, 7}), std::vector<Op>{Op::Invert}).size();
  const auto seventh = orbit(make_chord({0, 4, 7, 11}), std::vector<Op>{Op::Invert}).size();
  return check("exact-order", triad == 3 && seventh == 4);
}

CheckResult check_duality_pairing() {
  // dual(F_n) = F'_{(s - n) mod r}
  struct Pairing {
    Family from;
    Family to;
    int shift;
  };
  const std::vector<Pairing> pairings{
      {TriadFamily::Major, TriadFamily::Minor, 2},   {TriadFamily::Minor, TriadFamily::Major, 2},
      {TriadFamily::Diminished, TriadFamily::Diminished, 2},
      {TriadFamily::Augmented, TriadFamily::Augmented, 0},
      {SeventhFamily::MM, SeventhFamily::MM, 3},     {SeventhFamily::mM, SeventhFamily::AM, 3},
      {SeventhFamily::AM, SeventhFamily::mM, 3},     {SeventhFamily::Mm, SeventhFamily::dm, 3},
      {SeventhFamily::dm, SeventhFamily::Mm, 3},     {SeventhFamily::mm, SeventhFamily::mm, 3},
      {SeventhFamily::dd, SeventhFamily::dd, 0},
  };
  bool ok = true;
  for (const auto& p : pairings) {
    const int r = inversion_count(p.from);
    for (int n = 0; n < r; ++n) {
      const int m = ((p.shift - n) % r + r) % r;
      ok = ok && dual(chord_of({p.from, n})) == chord_of({p.to, m});
    }
  }
  return check("duality-pairing", ok);
}

CheckResult check_partition_consistency() {
  const std::map<Family, Partition> expected{
      {TriadFamily::Major, Partition::of({3, 4, 5})},
      {TriadFamily::Minor, Partition::of({3, 4, 5})},
      {TriadFamily::Diminished, Partition::of({3, 3, 6})},
      {TriadFamily::Augmented, Partition::of({4, 4, 4})},
      {SeventhFamily::MM, Partition::of({1, 3, 4, 4})},
      {SeventhFamily::mM, Partition::of({1, 3, 4, 4})},
      {SeventhFamily::AM, Partition::of({1, 3, 4, 4})},
      {SeventhFamily::Mm, Partition::of({2, 3, 3, 4})},
      {SeventhFamily::dm, Partition::of({2, 3, 3, 4})},
      {SeventhFamily::mm, Partition::of({2, 3, 3, 4})},
      {SeventhFamily::dd, Partition::of({3, 3, 3, 3})},
  };
  bool ok = true;
  for (const auto* table : {&triad_table(), &seventh_table()}) {
    for (const auto& [chord, label] : *table) {
      ok = ok && to_partition(chord) == expected.at(label.family);
    }
  }
  return check("partition-consistency", ok);
}

CheckResult check_graph_structure(const ChordGraph& g) {
  bool ok = g.nodes().size() == 24;
  std::map<std::pair<std::size_t, Op>, int> degree;
  for (const auto& e : g.edges()) {
    ++degree[{e.from, e.op}];
    if (!e.directed && e.from != e.to) ++degree[{e.to, e.op}];
  }
  for (std::size_t u = 0; u < g.nodes().size(); ++u) {
    for (Op op : {Op::Invert, Op::Dual, Op::AugDim}) ok = ok && degree[{u, op}] == 1;
  }
  // i-cycles are the table rows.
  for (std::size_t u = 0; u < g.nodes().size(); ++u) {
    std::set<std::string> cycle;
    std::size_t v = u;
    do {
      cycle.insert(g.nodes()[v].id);
      v = g.follow(v, Op::Invert);
    } while (v != u && cycle.size() <= g.nodes().size());
    const auto& family = g.nodes()[u].label.family;
    ok = ok && static_cast<int>(cycle.size()) == inversion_count(family);
    for (const auto& id : cycle) ok = ok && id.starts_with(to_string(family));
  }
  return check("graph-degree", ok);
}

CheckResult check_fixed_points(const ChordGraph& g) {
  std::set<std::string> d_fixed;
  std::set<std::string> a_fixed;
  for (const auto& e : g.edges()) {
    if (e.from != e.to) continue;
    if (e.op == Op::Dual) d_fixed.insert(g.nodes()[e.from].id);
    if (e.op == Op::AugDim) a_fixed.insert(g.nodes()[e.from].id);
  }
  const std::set<std::string> expected{"AM3", "Mm0", "dm3", "mM0"};
  std::string detail;
  for (const auto& id : a_fixed) detail += (detail.empty() ? "" : ",") + id;
  return check("fixed-points", d_fixed.empty() && a_fixed == expected, detail);
}

CheckResult check_components() {
  const auto g = build_chord_graph(false);
  const auto with_dd = build_chord_graph(true);
  const auto comps = connected_components(g);
  const auto comps_dd = connected_components(with_dd);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.size());
  std::vector<std::size_t> sizes_dd;
  for (const auto& c : comps_dd) sizes_dd.push_back(c.size());

  bool ok = sizes == std::vector<std::size_t>{12, 12} &&
            sizes_dd == std::vector<std::size_t>{12, 12, 1};
  // Components follow the partition classes.
  for (const auto& comp : comps) {
    std::set<Partition> classes;
    for (auto j : comp) classes.insert(to_partition(g.nodes()[j].chord));
    ok = ok && classes.size() == 1;
  }
  std::string detail;
  for (auto s : sizes) detail += (detail.empty() ? "" : "+") + std::to_string(s);
  return check("components", ok, detail);
}

CheckResult check_isomorphism(const ChordGraph& g) {
  const auto map = family_swap_map(g);
  const auto violations = count_isomorphism_violations(g, map);
  return check("isomorphism", map.size() == 12 && violations == 0,
               std::to_string(violations) + " violations");
}

}  // namespace

std::vector<CheckResult> run_verification() {
  std::vector<CheckResult> out;
  out.push_back(check_round_trip());
  out.push_back(check_counting());
  out.push_back(check_partition_fibers());
  out.push_back(check_triad_partitions());
  out.push_back(check_harmonic_count(3, 10));
  out.push_back(check_harmonic_count(4, 25));
  out.push_back(check_table_one());
  for (int k = 2; k <= kMaxExhaustiveSize; ++k) out.push_back(check_relations(k));
  out.push_back(check_composition_action());
  out.push_back(check_symmetric_closure());
  out.push_back(check_exact_order());
  out.push_back(check_duality_pairing());
  out.push_back(check_partition_consistency());
  const auto g = build_chord_graph(false);
  out.push_back(check_graph_structure(g));
  out.push_back(check_fixed_points(g));
  out.push_back(check_components());
  out.push_back(check_isomorphism(g));
  return out;
}

std::string to_string(const CheckResult& result) {
  std::string line = result.name + ": ";
  if (!result.detail.empty()) line += result.detail + " ";
  line += result.passed ? "PASS" : "FAIL";
  return line;
}

}  // namespace tonegroup
