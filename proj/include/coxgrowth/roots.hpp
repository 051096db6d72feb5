#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/algebra.hpp"
#include "coxgrowth/config.hpp"

namespace coxgrowth {

/// The finite set Sigma of small roots with the precomputed reflection
/// action. Simple roots occupy indices 0..n-1; the remaining roots are
/// sorted by (coordinate sum, coordinatewise numeric order), exactly.
struct SmallRootSet {
  static constexpr int kNotSmall = -1;
  static constexpr int kNegativeSelf = -2;

  CoxeterDiagram diagram;
  std::shared_ptr<const NumberField> field;
  FMatrix gram;
  std::vector<FVector> roots;
  Eigen::MatrixXi action;  // n x |Sigma|; root index, kNotSmall or kNegativeSelf
  std::map<std::string, int> index;  // serialized coordinates -> root index

  int rank() const { return diagram.rank; }
  int size() const { return static_cast<int>(roots.size()); }
  int simple_index(int i) const { return i; }
  int act(int i, int r) const { return action(i, r); }
  /// Index of a coordinate vector within Sigma, if present.
  std::optional<int> find(const FVector& v) const;
};

/// Worklist closure of the simple roots under the rule: r in Sigma and
/// -1 < (r|alpha_i) < 0 implies sigma_i(r) in Sigma.
SmallRootSet small_roots(const CoxeterDiagram& d, const Caps& caps = {});

/// All members of Sigma fixed by both sigma_i and sigma_j; requires
/// m_ij = infinity.
std::vector<int> stabilizer_roots(const SmallRootSet& s, int i, int j);

/// Least N >= 1 with (sigma_i sigma_j)^N(r) outside Sigma, or nullopt
/// when r is fixed by both reflections. Requires m_ij = infinity;
/// throws InternalError if 4|Sigma| iterations do not suffice.
std::optional<long> cycle_escape(const SmallRootSet& s, int i, int j, int r);

}  // namespace coxgrowth
