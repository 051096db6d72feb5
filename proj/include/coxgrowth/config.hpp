#pragma once

#include <cstddef>

namespace coxgrowth {

// Resource caps shared across modules. All positive.
struct Caps {
  unsigned field_degree = 64;        // max degree of Q(2cos(pi/L))
  std::size_t sigma = 100000;        // max |Sigma|
  std::size_t states = 1000000;      // max automaton states
  int charpoly_dim = 512;            // max transfer-matrix dimension for charpoly
  std::size_t elements = 2000000;    // max oracle group elements
};

}  // namespace coxgrowth
