#include "coxgrowth/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

namespace {

Automaton build(const SmallRootSet& s, Automaton::Kind kind,
                std::vector<int> priority, const Caps& caps) {
  const int n = s.rank();
  Automaton a;
  a.kind = kind;
  a.alphabet = n;
  if (priority.empty()) {
    priority.resize(n);
    std::iota(priority.begin(), priority.end(), 0);
  }
  if (static_cast<int>(priority.size()) != n)
    throw InputError("generator priority must cover the alphabet");
  a.priority = priority;

  std::map<std::vector<int>, int> index;
  a.states.push_back({});
  index[{}] = 0;
  std::deque<int> work{0};
  std::vector<std::vector<int>> rows;

  while (!work.empty()) {
    int id = work.front();
    work.pop_front();
    std::vector<int> row(n, Automaton::kFail);
    const std::vector<int> state = a.states[id];  // copy: states may grow
    for (int i = 0; i < n; ++i) {
      if (std::binary_search(state.begin(), state.end(), s.simple_index(i)))
        continue;  // alpha_i in D: fail
      std::vector<int> next{s.simple_index(i)};
      for (int r : state) {
        int img = s.act(i, r);
        if (img >= 0) next.push_back(img);
      }
      if (kind == Automaton::Kind::ShortLex) {
        for (int j = 0; j < n; ++j) {
          if (priority[j] >= priority[i]) continue;
          int img = s.act(i, s.simple_index(j));
          if (img >= 0) next.push_back(img);
        }
      }
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      auto [it, inserted] = index.try_emplace(next, a.size());
      if (inserted) {
        if (a.states.size() >= caps.states)
          throw CapError("automaton state count exceeds cap " +
                         std::to_string(caps.states));
        a.states.push_back(std::move(next));
        work.push_back(it->second);
      }
      row[i] = it->second;
    }
    rows.push_back(std::move(row));
  }

  a.trans.resize(a.size(), n);
  for (int st = 0; st < a.size(); ++st)
    for (int i = 0; i < n; ++i) a.trans(st, i) = rows[st][i];
  return a;
}

}  // namespace

Automaton build_geo(const SmallRootSet& s, const Caps& caps) {
  return build(s, Automaton::Kind::Geo, {}, caps);
}

Automaton build_shortlex(const SmallRootSet& s, std::vector<int> priority,
                         const Caps& caps) {
  return build(s, Automaton::Kind::ShortLex, std::move(priority), caps);
}

int run(const Automaton& a, std::span<const int> word) {
  int state = 0;
  for (int letter : word) {
    if (letter < 0 || letter >= a.alphabet)
      throw InputError("letter out of range");
    if (state == Automaton::kFail) return Automaton::kFail;
    state = a.trans(state, letter);
  }
  return state;
}

CoreGraph accept_core(const Automaton& a) {
  CoreGraph g;
  g.nodes = a.size() - 1;
  g.adj.resize(g.nodes);
  g.multiplicity.resize(g.nodes);
  for (int st = 1; st < a.size(); ++st) {
    std::map<int, int> arcs;
    for (int i = 0; i < a.alphabet; ++i) {
      int to = a.trans(st, i);
      if (to > 0) ++arcs[to - 1];
    }
    for (auto [to, count] : arcs) {
      g.adj[st - 1].push_back(to);
      g.multiplicity[st - 1].push_back(count);
    }
  }
  return g;
}

SccResult strongly_connected(const CoreGraph& g) {
  // Iterative Tarjan.
  SccResult res;
  res.component.assign(g.nodes, -1);
  std::vector<int> low(g.nodes, -1), disc(g.nodes, -1), stack;
  std::vector<char> on_stack(g.nodes, 0);
  int timer = 0;

  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int start = 0; start < g.nodes; ++start) {
    if (disc[start] != -1) continue;
    std::vector<Frame> call{{start, 0}};
    disc[start] = low[start] = timer++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.edge < g.adj[f.v].size()) {
        int u = g.adj[f.v][f.edge++];
        if (disc[u] == -1) {
          disc[u] = low[u] = timer++;
          stack.push_back(u);
          on_stack[u] = 1;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        if (low[f.v] == disc[f.v]) {
          for (;;) {
            int u = stack.back();
            stack.pop_back();
            on_stack[u] = 0;
            res.component[u] = res.count;
            if (u == f.v) break;
          }
          ++res.count;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  return res;
}

int period(const CoreGraph& g) {
  if (g.nodes == 0) throw InputError("period of an empty graph");
  if (!strongly_connected(g).strongly_connected())
    throw InputError("period requires a strongly connected graph");
  std::vector<int> level(g.nodes, -1);
  std::deque<int> q{0};
  level[0] = 0;
  int p = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : g.adj[v]) {
      if (level[u] == -1) {
        level[u] = level[v] + 1;
        q.push_back(u);
      } else {
        p = std::gcd(p, std::abs(level[v] + 1 - level[u]));
      }
    }
  }
  // Remaining arcs between already-levelled nodes are covered above;
  // p = 0 would mean no cycle at all, impossible in a strongly
  // connected graph with >= 1 arc.
  if (p == 0) {
    if (g.nodes == 1 && g.adj[0].empty()) return 1;  // trivial single node
    throw InternalError("period: no cycle found in a strongly connected graph");
  }
  return p;
}

std::string export_dot(const Automaton& a) {
  if (a.alphabet == 0) throw InputError("export_dot: empty alphabet");
  std::ostringstream os;
  os << "digraph "
     << (a.kind == Automaton::Kind::Geo ? "geo" : "shortlex") << " {\n";
  os << "  rankdir=LR;\n";
  for (int st = 0; st < a.size(); ++st) {
    os << "  q" << st << " [label=\"{";
    for (std::size_t k = 0; k < a.states[st].size(); ++k) {
      if (k) os << ",";
      os << a.states[st][k];
    }
    os << "}\"];\n";
  }
  for (int st = 0; st < a.size(); ++st)
    for (int i = 0; i < a.alphabet; ++i) {
      int to = a.trans(st, i);
      if (to != Automaton::kFail)
        os << "  q" << st << " -> q" << to << " [label=\"s" << i + 1
           << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace coxgrowth
