#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/automaton.hpp"
#include "coxgrowth/growth.hpp"
#include "coxgrowth/oracle.hpp"

namespace coxgrowth {

struct AnalysisConfig {
  int K = 30;
  Rat tol = Rat(1, 1000000000);  // 1e-9
  Caps caps;
  bool run_oracle = false;
  bool corroborate = false;
  int oracle_k = 8;

  void validate() const;
};

struct AutomatonReport {
  Automaton automaton;
  int core_states = 0;
  std::vector<Int> counts;
  Interval rate{Rat(0), Rat(0), true};
  PerronCertificate certificate;
  std::vector<Int> charpoly;  // empty when the dimension cap skipped it
  std::optional<RationalSeries> series;
  std::optional<CorroborationReport> corroboration;
};

struct OracleComparison {
  int K = 0;
  std::vector<Int> w, g;
  bool w_match = false;  // against ShortLex counts
  bool g_match = false;  // against Geo counts
};

struct GrowthReport {
  CoxeterDiagram diagram;
  bool spanned = false;       // infinity-spanned
  bool free_product = false;  // all labels infinite
  std::vector<int> labelling;  // ShortLex priority (admissible when spanned)
  unsigned field_level = 1;
  int field_degree = 1;
  int sigma_size = 0;
  AutomatonReport shortlex, geo;
  DeltaReport delta;
  Interval delta_enclosure{Rat(0), Rat(0), true};
  std::optional<OracleComparison> oracle;
};

/// Full pipeline: small roots, both automata, counts, certified rates,
/// certificates, delta report, optional oracle cross-check.
/// Deterministic for a fixed (diagram, config).
GrowthReport analyze(const CoxeterDiagram& d, const AnalysisConfig& cfg = {});

std::string to_json(const GrowthReport& r);
std::string to_csv(const GrowthReport& r);
std::string to_text(const GrowthReport& r);

}  // namespace coxgrowth
