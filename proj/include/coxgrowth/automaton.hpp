#pragma once

#include <span>
#include <string>
#include <vector>

#include "coxgrowth/roots.hpp"

namespace coxgrowth {

/// Brink-Howlett style automaton over subsets of Sigma. State 0 is the
/// start state (the empty set); the fail sink is left implicit and
/// recorded as kFail in the transition table. Every state is reachable.
struct Automaton {
  enum class Kind { ShortLex, Geo };
  static constexpr int kFail = -1;

  Kind kind = Kind::Geo;
  int alphabet = 0;
  std::vector<std::vector<int>> states;  // sorted Sigma-index sets; [0] empty
  Eigen::MatrixXi trans;                 // states x alphabet
  std::vector<int> priority;             // ShortLex: priority[i] = rank of s_i

  int size() const { return static_cast<int>(states.size()); }
};

/// Geo transitions: delta(D, s_i) = {alpha_i} u ({sigma_i(v) : v in D} n Sigma),
/// failing iff alpha_i in D.
Automaton build_geo(const SmallRootSet& s, const Caps& caps = {});

/// ShortLex transitions additionally absorb {sigma_i(alpha_j) : j < i}
/// with j < i taken under the given generator priority (priority[g] =
/// comparison rank of generator g; identity by default).
Automaton build_shortlex(const SmallRootSet& s, std::vector<int> priority = {},
                         const Caps& caps = {});

/// Iterated transition from the start state; kFail is absorbing.
int run(const Automaton& a, std::span<const int> word);

/// Accept part of the automaton: all states except the start, one node
/// per state, one arc per non-fail transition between them. Node k
/// corresponds to state k + 1.
struct CoreGraph {
  int nodes = 0;
  std::vector<std::vector<int>> adj;          // deduplicated arcs
  std::vector<std::vector<int>> multiplicity;  // parallel-arc counts, same order
};

CoreGraph accept_core(const Automaton& a);

struct SccResult {
  int count = 0;
  std::vector<int> component;  // node -> component id, reverse topological
  bool strongly_connected() const { return count == 1; }
};

SccResult strongly_connected(const CoreGraph& g);

/// Gcd of all cycle lengths of a strongly connected graph, via BFS
/// levels: gcd over arcs (u,v) of level[u] + 1 - level[v].
int period(const CoreGraph& g);

std::string export_dot(const Automaton& a);

}  // namespace coxgrowth
