#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace coxgrowth {

/// Label value standing for m_ij = infinity.
inline constexpr int kInfiniteLabel = 0;

/// Rank-n Coxeter diagram: symmetric label matrix, diagonal fixed to 1,
/// off-diagonal labels >= 2 or kInfiniteLabel. Vertices are 0-based
/// internally; the file format is 1-based.
struct CoxeterDiagram {
  int rank = 0;
  Eigen::MatrixXi labels;

  explicit CoxeterDiagram(int n);
  CoxeterDiagram() = default;

  int label(int i, int j) const { return labels(i, j); }
  void set_label(int i, int j, int m);
  bool is_infinite(int i, int j) const { return labels(i, j) == kInfiniteLabel; }
  bool connected() const;
  /// Least common multiple of all finite labels >= 3 (1 if none).
  unsigned finite_label_lcm() const;
  /// True iff every off-diagonal label is infinity (free product of Z2's).
  bool all_infinite() const;
  /// Relabel vertices: vertex v becomes perm[v].
  CoxeterDiagram permuted(const std::vector<int>& perm) const;
  void validate() const;
};

struct GeometricDiagram {
  enum class Kind { Angle, Bold, Dashed };
  struct Edge {
    int i, j;
    Kind kind;
    int angle = 0;  // label m >= 3 when kind == Angle
  };
  int rank = 0;
  std::vector<Edge> edges;

  /// True iff the subgraph of bold and dashed edges is connected and
  /// touches every vertex.
  bool bold_dashed_connected() const;
};

/// Spanning tree of infinity-labelled edges; root plus parent map
/// (parent[root] == -1).
struct SpanningTree {
  int rank = 0;
  int root = -1;
  std::vector<int> parent;
  std::vector<std::pair<int, int>> edges;

  std::vector<std::vector<int>> adjacency() const;
  std::vector<int> leaves() const;
};

using ParsedDiagram = std::variant<CoxeterDiagram, GeometricDiagram>;

/// Parses the line-oriented diagram file format:
///   # comment
///   rank <n>
///   edge <i> <j> <m|inf>
///   gedge <i> <j> <angle m | bold | dashed>
/// edge and gedge lines may not be mixed. Throws InputError with a line
/// number on malformed input.
ParsedDiagram parse_diagram(const std::string& text);

/// Coerces a parsed diagram to a CoxeterDiagram (geometric input goes
/// through to_coxeter).
CoxeterDiagram as_coxeter(const ParsedDiagram& p);

/// Bold and dashed edges become infinity; angle(m) becomes m; absent
/// pairs become 2.
CoxeterDiagram to_coxeter(const GeometricDiagram& g);

/// Spanning tree of infinity-edges when one exists and rank >= 3
/// (deterministic: BFS over infinity-edges from the lowest-index
/// vertex); nullopt otherwise, including every rank <= 2 diagram.
std::optional<SpanningTree> infinity_spanned(const CoxeterDiagram& d);

/// Admissible relabelling per the peel-and-label construction: returns
/// a permutation pi (pi[v] = new 0-based index) such that the tree
/// contains the relabelled edges 0-1 and 1-2 and every tree path from
/// the new vertex 0 to a leaf has strictly increasing labels.
std::vector<int> admissible_labelling(const CoxeterDiagram& d,
                                      const SpanningTree& t);

/// Checks the Lemma-style increasing-path property of a labelling.
bool labelling_admissible(const SpanningTree& t, const std::vector<int>& perm);

std::string export_dot(const CoxeterDiagram& d);
std::string export_dot(const GeometricDiagram& g);

}  // namespace coxgrowth
