#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/automaton.hpp"

namespace coxgrowth {

/// Number of accepted words per length 0..K, exact.
std::vector<Int> count_words(const Automaton& a, int K);

/// Letter-multiplicity adjacency of the accept core; row/column k is
/// state k + 1 in the automaton's canonical order.
Eigen::MatrixXi transfer_matrix(const Automaton& a);

struct Interval {
  Rat lo, hi;
  bool tight = true;  // false when the iteration cap was hit first

  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
};

/// Certified enclosure of the spectral radius of an irreducible
/// nonnegative integer matrix via Collatz-Wielandt bounds on M + I
/// (the shift makes power iteration converge for periodic matrices).
/// Successive enclosures are intersected, so they are nested. If the
/// iteration cap is hit the widest certified interval is returned with
/// tight = false.
Interval spectral_radius_enclosure(const Eigen::MatrixXi& M, const Rat& tol,
                                   long iteration_cap = 1000000);

/// Growth-rate enclosure of an arbitrary nonnegative integer matrix:
/// max over the spectral radii of its strongly connected components.
Interval growth_rate_enclosure(const Eigen::MatrixXi& M, const Rat& tol,
                               long iteration_cap = 1000000);

struct PerronCertificate {
  bool irreducible = false;
  int period = 0;
  bool primitive = false;
  bool certified = false;  // == primitive
  std::string reason;      // set when not certified
};

/// Primitivity certificate for the accept core: irreducible (strong
/// connectivity) and aperiodic. Non-certification is a report, not an
/// error.
PerronCertificate perron_certificate(const Automaton& a);

/// Exact integer characteristic polynomial (ascending coefficients,
/// monic) via Faddeev-LeVerrier over big integers.
std::vector<Int> characteristic_polynomial(const Eigen::MatrixXi& M,
                                           int dimension_cap = 512);

/// Floating tolerance below which a Perron margin is treated as zero.
inline constexpr double kCorroborationTolerance = 1e-8;

struct CorroborationReport {
  bool converged = false;
  double dominant_modulus = 0.0;  // largest |z| among roots inside rho
  double second_modulus = 0.0;    // largest |z| among the other roots
  double margin = 0.0;            // rho_lo - second_modulus
  bool corroborated = false;      // margin > kCorroborationTolerance
};

/// Floating-point cross-check of the Perron property: all other roots
/// of the characteristic polynomial are strictly smaller in modulus
/// than the enclosed spectral radius. Corroboration only; the
/// certificate of record is the primitivity argument.
CorroborationReport corroborate_perron(const std::vector<Int>& charpoly,
                                       const Interval& rho);

struct RationalSeries {
  std::vector<Int> p, q;  // sum v_k z^k = P(z)/Q(z); ascending, primitive
};

/// Exact generating function of the accepted-word counts, verified
/// coefficientwise against count_words up to deg P + deg Q + 5.
/// nullopt when the core dimension exceeds the cap.
std::optional<RationalSeries> rational_series(const Automaton& a,
                                              int dimension_cap = 512);

struct DeltaReport {
  double delta_hat = 0.0;              // midpoint(gamma)/midpoint(omega)
  std::vector<double> ratios;  // r_k = (g_k/w_k)^{1/k} / delta_hat, NaN if undefined
  double trend = 0.0;                  // |r_K - 1|
  bool strict_domination = false;      // gamma_lo > omega_hi
  bool domination_applicable = false;  // false for free products
};

/// Theorem-2 style ratio table. Requires both certificates; the strict
/// domination check uses outer interval bounds only.
DeltaReport delta_report(const std::vector<Int>& w, const std::vector<Int>& g,
                         const Interval& omega, const Interval& gamma,
                         bool free_product, int K);

}  // namespace coxgrowth
