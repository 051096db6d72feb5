#pragma once

#include <vector>

#include "coxgrowth/config.hpp"
#include "coxgrowth/roots.hpp"

namespace coxgrowth {

/// Brute-force ground truth, independent of the automata: group
/// elements are exact matrices of the geometric representation,
/// deduplicated by exact equality. Desk scale only (K around 8).
struct GroupTable {
  int rank = 0;
  std::vector<FMatrix> elements;  // BFS order from the identity
  std::vector<int> depth;         // word length of each element
  std::vector<Int> w;             // elements per length, 0..K
  std::vector<Int> g;             // geodesic words per length, 0..K

  /// Index of a matrix in the table, or -1.
  int find(const FMatrix& m) const;

 private:
  friend GroupTable bfs_group(const CoxeterDiagram&, int, const Caps&);
  std::map<std::string, int> index_;
};

/// Matrix of sigma_i in the simple-root basis.
FMatrix reflection_matrix(const FMatrix& B, int i);

/// Level-synchronous BFS over right multiplication by the generators.
/// Depths are exact word lengths; geodesic words are counted by the
/// dynamic program g(child) += g(parent) over depth-increasing arcs.
GroupTable bfs_group(const CoxeterDiagram& d, int K, const Caps& caps = {});

std::vector<Int> word_counts(const CoxeterDiagram& d, int K,
                             const Caps& caps = {});
std::vector<Int> geodesic_counts(const CoxeterDiagram& d, int K,
                                 const Caps& caps = {});

/// Counts, per length, the geodesic words that are lexicographically
/// least for their element under the given generator order
/// (order[i] = comparison rank of s_i). Computed by the left-descent
/// recursion, so it independently re-derives one normal form per
/// element and must reproduce the w-counts.
std::vector<Int> shortlex_language_counts(const CoxeterDiagram& d,
                                          std::vector<int> order, int K,
                                          const Caps& caps = {});

}  // namespace coxgrowth
