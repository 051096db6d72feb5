#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coxgrowth/automaton.hpp"
#include "coxgrowth/diagram.hpp"
#include "coxgrowth/roots.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name + ".cox";
}

inline coxgrowth::CoxeterDiagram fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::ostringstream os;
  os << in.rdbuf();
  return coxgrowth::as_coxeter(coxgrowth::parse_diagram(os.str()));
}

inline std::vector<std::string> all_fixture_names() {
  return {"universal3", "universal4", "universal5", "dihedral_inf",
          "golden",     "chord3",     "chord4",     "chord5",
          "path4",      "pentagon",   "ideal_triangle", "finite_a2"};
}

/// Random infinity-spanned diagram: rank 3-5, a random spanning tree of
/// infinity edges, remaining labels drawn from {2, 3, 4, 5, inf}.
inline coxgrowth::CoxeterDiagram random_spanned(std::mt19937& rng) {
  int n = 3 + static_cast<int>(rng() % 3);
  coxgrowth::CoxeterDiagram d(n);
  for (int v = 1; v < n; ++v) {
    int parent = static_cast<int>(rng() % v);
    d.set_label(v, parent, coxgrowth::kInfiniteLabel);
  }
  const int pool[5] = {2, 3, 4, 5, coxgrowth::kInfiniteLabel};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (d.label(i, j) == 2) d.set_label(i, j, pool[rng() % 5]);
  return d;
}

/// ShortLex priority used across tests: the admissible labelling when
/// the diagram is infinity-spanned, identity otherwise.
inline std::vector<int> standard_priority(const coxgrowth::CoxeterDiagram& d) {
  if (auto tree = coxgrowth::infinity_spanned(d))
    return coxgrowth::admissible_labelling(d, *tree);
  std::vector<int> p(d.rank);
  for (int v = 0; v < d.rank; ++v) p[v] = v;
  return p;
}

// ---- Lemma checks shared by the unit suites and the acceptance gate ----

/// Hiking: every transition D' = delta(D, s_i) followed by s_j with
/// m_ij = infinity lands on a non-fail state different from D'.
inline int hiking_violations(const coxgrowth::CoxeterDiagram& d,
                             const coxgrowth::Automaton& a) {
  int bad = 0;
  for (int st = 0; st < a.size(); ++st)
    for (int i = 0; i < a.alphabet; ++i) {
      int to = a.trans(st, i);
      if (to == coxgrowth::Automaton::kFail) continue;
      for (int j = 0; j < a.alphabet; ++j) {
        if (j == i || !d.is_infinite(i, j)) continue;
        int next = a.trans(to, j);
        if (next == coxgrowth::Automaton::kFail || next == to) ++bad;
      }
    }
  return bad;
}

/// Hydra: the singleton state of the top-priority generator is
/// reachable from every core node.
inline bool hydra_reachable(const coxgrowth::Automaton& a,
                            const std::vector<int>& priority) {
  int top = 0;
  for (int v = 0; v < a.alphabet; ++v)
    if (priority[v] == 0) top = v;
  int target = -1;
  for (int st = 1; st < a.size(); ++st)
    if (a.states[st] == std::vector<int>{top}) target = st;
  if (target < 0) return false;
  // Reverse reachability from the target within the core.
  coxgrowth::CoreGraph g = coxgrowth::accept_core(a);
  std::vector<std::vector<int>> radj(g.nodes);
  for (int u = 0; u < g.nodes; ++u)
    for (int v : g.adj[u]) radj[v].push_back(u);
  std::vector<char> seen(g.nodes, 0);
  std::vector<int> work{target - 1};
  seen[target - 1] = 1;
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    for (int v : radj[u])
      if (!seen[v]) {
        seen[v] = 1;
        work.push_back(v);
      }
  }
  for (char c : seen)
    if (!c) return false;
  return true;
}

/// Stabiliser: every root fixed by both sigma_i and sigma_j lies in
/// span{alpha_i + alpha_j} + span{alpha_k : m_ki = m_kj = 2}.
inline bool stabilizer_in_span(const coxgrowth::SmallRootSet& s, int i, int j) {
  for (int r : coxgrowth::stabilizer_roots(s, i, j)) {
    const coxgrowth::FVector& v = s.roots[r];
    if (!(v(i) == v(j))) return false;
    for (int k = 0; k < s.rank(); ++k) {
      if (k == i || k == j) continue;
      bool commuting = s.diagram.label(k, i) == 2 && s.diagram.label(k, j) == 2;
      if (!commuting && !v(k).is_zero()) return false;
    }
  }
  return true;
}

/// Cycling: every non-stabilized root escapes Sigma within 4|Sigma|
/// double steps (cycle_escape throws InternalError otherwise).
inline bool cycling_holds(const coxgrowth::SmallRootSet& s, int i, int j) {
  auto stab = coxgrowth::stabilizer_roots(s, i, j);
  for (int r = 0; r < s.size(); ++r) {
    bool fixed = std::find(stab.begin(), stab.end(), r) != stab.end();
    auto n = coxgrowth::cycle_escape(s, i, j, r);
    if (fixed != !n.has_value()) return false;
    if (n && (*n < 1 || *n > 4L * s.size())) return false;
  }
  return true;
}

}  // namespace testsupport
