#include "coxgrowth/pipeline.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "coxgrowth/error.hpp"

namespace coxgrowth {

using json = nlohmann::ordered_json;

void AnalysisConfig::validate() const {
  if (K < 0) throw InputError("horizon K must be nonnegative");
  if (tol <= 0 || tol >= 1) throw InputError("tolerance must lie in (0, 1)");
  if (oracle_k < 0) throw InputError("oracle depth must be nonnegative");
  if (caps.field_degree == 0 || caps.sigma == 0 || caps.states == 0 ||
      caps.charpoly_dim <= 0 || caps.elements == 0)
    throw InputError("all caps must be positive");
}

namespace {

AutomatonReport report_automaton(Automaton a, const AnalysisConfig& cfg) {
  AutomatonReport rep;
  rep.automaton = std::move(a);
  rep.core_states = rep.automaton.size() - 1;
  rep.counts = count_words(rep.automaton, cfg.K);
  Eigen::MatrixXi M = transfer_matrix(rep.automaton);
  rep.rate = growth_rate_enclosure(M, cfg.tol);
  rep.certificate = perron_certificate(rep.automaton);
  if (rep.core_states <= cfg.caps.charpoly_dim && rep.core_states > 0) {
    rep.charpoly = characteristic_polynomial(M, cfg.caps.charpoly_dim);
    rep.series = rational_series(rep.automaton, cfg.caps.charpoly_dim);
    if (cfg.corroborate)
      rep.corroboration = corroborate_perron(rep.charpoly, rep.rate);
  }
  return rep;
}

}  // namespace

GrowthReport analyze(const CoxeterDiagram& d, const AnalysisConfig& cfg) {
  cfg.validate();
  d.validate();
  if (!d.connected())
    throw InputError("analysis requires a connected diagram");

  GrowthReport rep;
  rep.diagram = d;
  rep.free_product = d.all_infinite();
  auto tree = infinity_spanned(d);
  rep.spanned = tree.has_value();
  if (tree) {
    rep.labelling = admissible_labelling(d, *tree);
  } else {
    rep.labelling.resize(d.rank);
    for (int v = 0; v < d.rank; ++v) rep.labelling[v] = v;
  }

  SmallRootSet sigma = small_roots(d, cfg.caps);
  rep.field_level = sigma.field->level();
  rep.field_degree = sigma.field->degree();
  rep.sigma_size = sigma.size();

  rep.shortlex =
      report_automaton(build_shortlex(sigma, rep.labelling, cfg.caps), cfg);
  rep.geo = report_automaton(build_geo(sigma, cfg.caps), cfg);

  rep.delta = delta_report(rep.shortlex.counts, rep.geo.counts,
                           rep.shortlex.rate, rep.geo.rate, rep.free_product,
                           cfg.K);
  rep.delta.domination_applicable =
      rep.spanned && !rep.free_product &&
      rep.shortlex.certificate.certified && rep.geo.certificate.certified;
  if (rep.shortlex.rate.lo > 0) {
    rep.delta_enclosure.lo = rep.geo.rate.lo / rep.shortlex.rate.hi;
    rep.delta_enclosure.hi = rep.geo.rate.hi / rep.shortlex.rate.lo;
    rep.delta_enclosure.tight = rep.shortlex.rate.tight && rep.geo.rate.tight;
  }

  if (cfg.run_oracle) {
    OracleComparison cmp;
    cmp.K = std::min(cfg.oracle_k, cfg.K);
    GroupTable table = bfs_group(d, cmp.K, cfg.caps);
    cmp.w = table.w;
    cmp.g = table.g;
    cmp.w_match = cmp.g_match = true;
    for (int k = 0; k <= cmp.K; ++k) {
      cmp.w_match = cmp.w_match && cmp.w[k] == rep.shortlex.counts[k];
      cmp.g_match = cmp.g_match && cmp.g[k] == rep.geo.counts[k];
    }
    rep.oracle = std::move(cmp);
  }
  return rep;
}

namespace {

std::string rat_str(const Rat& r) { return r.get_str(); }

json interval_json(const Interval& iv) {
  return json{{"lo", rat_str(iv.lo)},
              {"hi", rat_str(iv.hi)},
              {"tight", iv.tight}};
}

json counts_json(const std::vector<Int>& v) {
  json arr = json::array();
  for (const Int& c : v) arr.push_back(c.get_str());
  return arr;
}

std::string conclusion(const PerronCertificate& c) {
  if (c.certified) return "CertifiedPerron";
  return "NotCertified(" + c.reason + ")";
}

json automaton_json(const AutomatonReport& a) {
  json j;
  j["kind"] = a.automaton.kind == Automaton::Kind::Geo ? "geo" : "shortlex";
  j["states"] = a.automaton.size();
  j["core_states"] = a.core_states;
  j["counts"] = counts_json(a.counts);
  j["rate"] = interval_json(a.rate);
  j["certificate"] = json{{"irreducible", a.certificate.irreducible},
                          {"period", a.certificate.period},
                          {"primitive", a.certificate.primitive},
                          {"conclusion", conclusion(a.certificate)}};
  if (!a.charpoly.empty())
    j["charpoly"] = counts_json(a.charpoly);
  else
    j["charpoly"] = nullptr;
  if (a.series)
    j["series"] = json{{"p", counts_json(a.series->p)},
                       {"q", counts_json(a.series->q)}};
  else
    j["series"] = nullptr;
  if (a.corroboration)
    j["corroboration"] =
        json{{"converged", a.corroboration->converged},
             {"dominant_modulus", a.corroboration->dominant_modulus},
             {"second_modulus", a.corroboration->second_modulus},
             {"margin", a.corroboration->margin},
             {"corroborated", a.corroboration->corroborated}};
  else
    j["corroboration"] = nullptr;
  return j;
}

}  // namespace

std::string to_json(const GrowthReport& r) {
  json j;
  json labels = json::array();
  for (int i = 0; i < r.diagram.rank; ++i) {
    json row = json::array();
    for (int k = 0; k < r.diagram.rank; ++k) row.push_back(r.diagram.label(i, k));
    labels.push_back(row);
  }
  j["input"] = json{{"rank", r.diagram.rank},
                    {"labels", labels},
                    {"infinity_spanned", r.spanned},
                    {"free_product", r.free_product},
                    {"labelling", r.labelling}};
  j["field"] = json{{"level", r.field_level}, {"degree", r.field_degree}};
  j["sigma_size"] = r.sigma_size;
  j["shortlex"] = automaton_json(r.shortlex);
  j["geo"] = automaton_json(r.geo);
  j["delta"] = json{{"enclosure", interval_json(r.delta_enclosure)},
                    {"delta_hat", r.delta.delta_hat},
                    {"ratios", r.delta.ratios},
                    {"trend", r.delta.trend},
                    {"strict_domination", r.delta.strict_domination},
                    {"domination_applicable", r.delta.domination_applicable}};
  if (r.oracle)
    j["oracle"] = json{{"k", r.oracle->K},
                       {"w", counts_json(r.oracle->w)},
                       {"g", counts_json(r.oracle->g)},
                       {"w_match", r.oracle->w_match},
                       {"g_match", r.oracle->g_match}};
  else
    j["oracle"] = nullptr;
  return j.dump(2) + "\n";
}

std::string to_csv(const GrowthReport& r) {
  std::ostringstream os;
  os << "k,w_k,g_k,r_k\n";
  for (std::size_t k = 0; k < r.shortlex.counts.size(); ++k) {
    os << k << "," << r.shortlex.counts[k].get_str() << ","
       << r.geo.counts[k].get_str() << ",";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.delta.ratios[k]);
    os << buf << "\n";
  }
  return os.str();
}

std::string to_text(const GrowthReport& r) {
  std::ostringstream os;
  os << "rank " << r.diagram.rank << ", field Q(2cos(pi/" << r.field_level
     << ")) of degree " << r.field_degree << ", |Sigma| = " << r.sigma_size
     << "\n";
  os << "infinity-spanned: " << (r.spanned ? "yes" : "no")
     << (r.free_product ? " (free product)" : "") << "\n";
  auto show = [&os](const char* name, const AutomatonReport& a) {
    os << name << ": " << a.automaton.size() << " states, rate in ["
       << a.rate.lo.get_d() << ", " << a.rate.hi.get_d() << "] ("
       << (a.rate.tight ? "certified width" : "iteration cap hit") << "), "
       << conclusion(a.certificate) << "\n";
    os << "  counts:";
    std::size_t shown = std::min<std::size_t>(a.counts.size(), 11);
    for (std::size_t k = 0; k < shown; ++k)
      os << " " << a.counts[k].get_str();
    if (a.counts.size() > shown) os << " ...";
    os << "\n";
  };
  show("shortlex", r.shortlex);
  show("geo", r.geo);
  os << "delta in [" << r.delta_enclosure.lo.get_d() << ", "
     << r.delta_enclosure.hi.get_d() << "], trend |r_K - 1| = "
     << r.delta.trend << "\n";
  if (r.delta.domination_applicable)
    os << "strict domination gamma_lo > omega_hi: "
       << (r.delta.strict_domination ? "yes" : "no") << "\n";
  if (r.oracle)
    os << "oracle (k <= " << r.oracle->K
       << "): w " << (r.oracle->w_match ? "match" : "MISMATCH") << ", g "
       << (r.oracle->g_match ? "match" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace coxgrowth
