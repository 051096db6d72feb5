#include "coxgrowth/diagram.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

CoxeterDiagram::CoxeterDiagram(int n) : rank(n) {
  if (n < 1) throw InputError("diagram rank must be >= 1");
  labels = Eigen::MatrixXi::Constant(n, n, 2);
  labels.diagonal().setConstant(1);
}

void CoxeterDiagram::set_label(int i, int j, int m) {
  if (i == j) throw InputError("self-edges are not allowed");
  if (m != kInfiniteLabel && m < 2) throw InputError("labels must be >= 2");
  labels(i, j) = m;
  labels(j, i) = m;
}

bool CoxeterDiagram::connected() const {
  std::vector<char> seen(rank, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u = 0; u < rank; ++u) {
      if (u != v && !seen[u] && labels(v, u) != 2) {
        seen[u] = 1;
        q.push_back(u);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

unsigned CoxeterDiagram::finite_label_lcm() const {
  unsigned l = 1;
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j) {
      int m = labels(i, j);
      if (m != kInfiniteLabel && m >= 3)
        l = std::lcm(l, static_cast<unsigned>(m));
    }
  return l;
}

bool CoxeterDiagram::all_infinite() const {
  for (int i = 0; i < rank; ++i)
    for (int j = i + 1; j < rank; ++j)
      if (labels(i, j) != kInfiniteLabel) return false;
  return rank >= 2;
}

CoxeterDiagram CoxeterDiagram::permuted(const std::vector<int>& perm) const {
  CoxeterDiagram d(rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) d.labels(perm[i], perm[j]) = labels(i, j);
  return d;
}

void CoxeterDiagram::validate() const {
  if (rank < 1) throw InputError("diagram rank must be >= 1");
  for (int i = 0; i < rank; ++i) {
    if (labels(i, i) != 1) throw InternalError("diagonal label must be 1");
    for (int j = 0; j < rank; ++j) {
      if (labels(i, j) != labels(j, i))
        throw InternalError("label matrix must be symmetric");
      if (i != j && labels(i, j) != kInfiniteLabel && labels(i, j) < 2)
        throw InputError("off-diagonal labels must be >= 2 or inf");
    }
  }
}

bool GeometricDiagram::bold_dashed_connected() const {
  if (rank == 0) return false;
  std::vector<std::vector<int>> adj(rank);
  for (const Edge& e : edges) {
    if (e.kind != Kind::Angle) {
      adj[e.i].push_back(e.j);
      adj[e.j].push_back(e.i);
    }
  }
  std::vector<char> seen(rank, 0);
  std::deque<int> q{0};
  seen[0] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        q.push_back(u);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

std::vector<std::vector<int>> SpanningTree::adjacency() const {
  std::vector<std::vector<int>> adj(rank);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& v : adj) std::sort(v.begin(), v.end());
  return adj;
}

std::vector<int> SpanningTree::leaves() const {
  auto adj = adjacency();
  std::vector<int> out;
  for (int v = 0; v < rank; ++v)
    if (adj[v].size() == 1) out.push_back(v);
  return out;
}

namespace {

struct LineReader {
  std::istringstream in;
  int line_no = 0;
  explicit LineReader(const std::string& text) : in(text) {}
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t p = line.find_first_not_of(" \t\r");
      if (p == std::string::npos) continue;
      if (line[p] == '#') continue;
      return true;
    }
    return false;
  }
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

int parse_vertex(const std::string& tok, int rank, int line) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    if (v < 1 || v > rank) fail(line, "vertex index out of range: " + tok);
    return v - 1;
  } catch (const std::logic_error&) {
    fail(line, "expected a vertex index, got '" + tok + "'");
  }
}

}  // namespace

ParsedDiagram parse_diagram(const std::string& text) {
  LineReader reader(text);
  std::string line;
  if (!reader.next(line)) throw InputError("empty diagram file");

  std::istringstream header(line);
  std::string kw;
  int rank = 0;
  header >> kw >> rank;
  if (kw != "rank" || rank < 1)
    fail(reader.line_no, "expected header 'rank <n>' with n >= 1");

  CoxeterDiagram cox(rank);
  GeometricDiagram geo;
  geo.rank = rank;
  Eigen::MatrixXi used = Eigen::MatrixXi::Zero(rank, rank);
  int n_edge = 0, n_gedge = 0;

  while (reader.next(line)) {
    std::istringstream ls(line);
    std::string cmd, ti, tj;
    ls >> cmd >> ti >> tj;
    if (cmd != "edge" && cmd != "gedge")
      fail(reader.line_no, "unknown directive '" + cmd + "'");
    if (ti.empty() || tj.empty()) fail(reader.line_no, "missing vertex index");
    int i = parse_vertex(ti, rank, reader.line_no);
    int j = parse_vertex(tj, rank, reader.line_no);
    if (i == j) fail(reader.line_no, "self-edges are not allowed");
    if (used(i, j)) fail(reader.line_no, "duplicate edge");
    used(i, j) = used(j, i) = 1;

    if (cmd == "edge") {
      ++n_edge;
      std::string tm;
      ls >> tm;
      if (tm.empty()) fail(reader.line_no, "missing edge label");
      if (tm == "inf" || tm == "infinity") {
        cox.set_label(i, j, kInfiniteLabel);
      } else {
        int m = 0;
        try {
          std::size_t pos = 0;
          m = std::stoi(tm, &pos);
          if (pos != tm.size()) throw std::invalid_argument(tm);
        } catch (const std::logic_error&) {
          fail(reader.line_no, "bad edge label '" + tm + "'");
        }
        if (m < 2) fail(reader.line_no, "edge labels must be >= 2 or inf");
        cox.set_label(i, j, m);
      }
    } else {
      ++n_gedge;
      std::string kind;
      ls >> kind;
      GeometricDiagram::Edge e{i, j, GeometricDiagram::Kind::Bold, 0};
      if (kind == "bold") {
        e.kind = GeometricDiagram::Kind::Bold;
      } else if (kind == "dashed") {
        e.kind = GeometricDiagram::Kind::Dashed;
      } else if (kind == "angle") {
        std::string tm;
        ls >> tm;
        int m = 0;
        try {
          std::size_t pos = 0;
          m = std::stoi(tm, &pos);
          if (pos != tm.size()) throw std::invalid_argument(tm);
        } catch (const std::logic_error&) {
          fail(reader.line_no, "bad angle label '" + tm + "'");
        }
        if (m < 3) fail(reader.line_no, "angle labels must be >= 3");
        e.kind = GeometricDiagram::Kind::Angle;
        e.angle = m;
      } else {
        fail(reader.line_no, "gedge kind must be 'angle m', 'bold' or 'dashed'");
      }
      geo.edges.push_back(e);
    }
    if (n_edge && n_gedge)
      fail(reader.line_no, "a file may use edge or gedge lines, not both");
  }

  if (n_gedge) return geo;
  cox.validate();
  return cox;
}

CoxeterDiagram to_coxeter(const GeometricDiagram& g) {
  CoxeterDiagram d(g.rank);
  for (const auto& e : g.edges) {
    int m = e.kind == GeometricDiagram::Kind::Angle ? e.angle : kInfiniteLabel;
    d.set_label(e.i, e.j, m);
  }
  d.validate();
  return d;
}

CoxeterDiagram as_coxeter(const ParsedDiagram& p) {
  if (const auto* g = std::get_if<GeometricDiagram>(&p)) return to_coxeter(*g);
  return std::get<CoxeterDiagram>(p);
}

std::optional<SpanningTree> infinity_spanned(const CoxeterDiagram& d) {
  // The rank-2 infinite dihedral case is excluded by definition.
  if (d.rank < 3) return std::nullopt;
  // BFS over infinity-edges from vertex 0; the infinity-subgraph must
  // reach every vertex for a spanning tree to exist, so any start
  // vertex of a spanning component works and vertex 0 is deterministic.
  SpanningTree t;
  t.rank = d.rank;
  t.parent.assign(d.rank, -2);
  t.root = 0;
  t.parent[0] = -1;
  std::deque<int> q{0};
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u = 0; u < d.rank; ++u) {
      if (u != v && t.parent[u] == -2 && d.is_infinite(v, u)) {
        t.parent[u] = v;
        t.edges.emplace_back(std::min(v, u), std::max(v, u));
        ++reached;
        q.push_back(u);
      }
    }
  }
  if (reached < d.rank) {
    // Vertex 0 may sit outside the largest infinity-component, but if a
    // spanning tree exists every component equals the whole vertex set.
    return std::nullopt;
  }
  return t;
}

bool labelling_admissible(const SpanningTree& t, const std::vector<int>& perm) {
  const int n = t.rank;
  if (static_cast<int>(perm.size()) != n) return false;
  std::vector<int> inv(n, -1);
  for (int v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || inv[perm[v]] != -1) return false;
    inv[perm[v]] = v;
  }
  auto adj = t.adjacency();
  auto tree_edge = [&](int a, int b) {
    return std::binary_search(adj[a].begin(), adj[a].end(), b);
  };
  if (!tree_edge(inv[0], inv[1]) || !tree_edge(inv[1], inv[2])) return false;
  // Rooted at the new vertex 0, every edge away from the root must
  // strictly increase the label; that is exactly the increasing-path
  // condition over all root-to-leaf paths.
  std::deque<int> q{inv[0]};
  std::vector<char> seen(n, 0);
  seen[inv[0]] = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int u : adj[v])
      if (!seen[u]) {
        if (perm[u] <= perm[v]) return false;
        seen[u] = 1;
        q.push_back(u);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
}

namespace {

// Peel layers: round at which each vertex becomes a leaf under
// repeated boundary removal.
std::vector<int> peel_layers(const SpanningTree& t) {
  const int n = t.rank;
  auto adj = t.adjacency();
  std::vector<int> deg(n), layer(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<char> removed(n, 0);
  int left = n, round = 0;
  while (left > 0) {
    std::vector<int> boundary;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && deg[v] <= 1) boundary.push_back(v);
    for (int v : boundary) {
      layer[v] = round;
      removed[v] = 1;
      --left;
    }
    for (int v : boundary)
      for (int u : adj[v])
        if (!removed[u]) --deg[u];
    ++round;
  }
  return layer;
}

std::vector<int> try_labelling(const SpanningTree& t, int u, int v, int w) {
  const int n = t.rank;
  std::vector<int> perm(n, -1);
  perm[u] = 0;
  perm[v] = 1;
  perm[w] = 2;

  std::vector<int> layer = peel_layers(t);
  // Distance from the would-be vertex 0.
  auto adj = t.adjacency();
  std::vector<int> dist(n, -1);
  std::deque<int> q{u};
  dist[u] = 0;
  while (!q.empty()) {
    int a = q.front();
    q.pop_front();
    for (int b : adj[a])
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        q.push_back(b);
      }
  }

  // Leaves (layer 0) are labelled first, down from n; then the peeled
  // boundary, and so on. Within a layer, vertices farther from the
  // root come first so the labels keep increasing along tree paths.
  std::vector<int> rest;
  for (int a = 0; a < n; ++a)
    if (perm[a] < 0) rest.push_back(a);
  std::sort(rest.begin(), rest.end(), [&](int a, int b) {
    if (layer[a] != layer[b]) return layer[a] < layer[b];
    if (dist[a] != dist[b]) return dist[a] > dist[b];
    return a > b;
  });
  int next = n - 1;
  for (int a : rest) perm[a] = next--;
  return perm;
}

}  // namespace

std::vector<int> admissible_labelling(const CoxeterDiagram& d,
                                      const SpanningTree& t) {
  if (d.rank < 3) throw InputError("admissible labelling requires rank >= 3");
  for (auto [a, b] : t.edges)
    if (!d.is_infinite(a, b))
      throw InternalError("spanning tree edge without infinity label");
  auto adj = t.adjacency();
  // Lexicographically smallest valid initial path u - v - w.
  for (int u = 0; u < d.rank; ++u)
    for (int v : adj[u])
      for (int w : adj[v]) {
        if (w == u) continue;
        std::vector<int> perm = try_labelling(t, u, v, w);
        if (labelling_admissible(t, perm)) return perm;
      }
  throw InternalError("no admissible labelling found");
}

std::string export_dot(const CoxeterDiagram& d) {
  std::ostringstream os;
  os << "graph coxeter {\n";
  for (int v = 0; v < d.rank; ++v) os << "  v" << v + 1 << ";\n";
  for (int i = 0; i < d.rank; ++i)
    for (int j = i + 1; j < d.rank; ++j) {
      int m = d.label(i, j);
      if (m == 2) continue;
      os << "  v" << i + 1 << " -- v" << j + 1 << " [label=\""
         << (m == kInfiniteLabel ? std::string("inf") : std::to_string(m))
         << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

std::string export_dot(const GeometricDiagram& g) {
  std::ostringstream os;
  os << "graph geometric {\n";
  for (int v = 0; v < g.rank; ++v) os << "  v" << v + 1 << ";\n";
  for (const auto& e : g.edges) {
    os << "  v" << e.i + 1 << " -- v" << e.j + 1;
    switch (e.kind) {
      case GeometricDiagram::Kind::Angle:
        os << " [label=\"" << e.angle << "\"]";
        break;
      case GeometricDiagram::Kind::Bold:
        os << " [style=bold]";
        break;
      case GeometricDiagram::Kind::Dashed:
        os << " [style=dashed]";
        break;
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace coxgrowth
