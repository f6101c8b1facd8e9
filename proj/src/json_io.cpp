#include "twinperm/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace twinperm {

using nlohmann::json;

namespace {

// Shortest round-tripping form, so CSV and JSON agree digit for digit.
std::string num(double v) {
  char buf[32];
  for (int prec = 6; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

}  // namespace

json to_json(const Permutation& p) { return json(std::vector<Value>(p.values().begin(), p.values().end())); }

json to_json(const Pattern& p) { return json(std::vector<Value>(p.values().begin(), p.values().end())); }

json to_json(const TwinsCertificate& c) {
  return {{"kind", kind_name(c.kind)},
          {"r", c.r},
          {"k", c.k},
          {"position_sets", c.position_sets},
          {"pattern", to_json(c.pattern)}};
}

json to_json(const DetectOutcome& d) {
  return {{"found", d.found}, {"certificate", d.certificate ? to_json(*d.certificate) : json()}};
}

json to_json(const MatchCertificate& m) {
  json pairs = json::array();
  for (const auto& [i, j] : m.pairs) pairs.push_back({i, j});
  return {{"orientation", orientation_name(m.orientation)}, {"pairs", pairs}};
}

json to_json(const Rational& q) { return q.str(); }

json to_json(const SearchReport& s) {
  return {{"r", s.r},
          {"k", s.k},
          {"n", s.n},
          {"outcome", outcome_name(s.outcome)},
          {"witness", s.witness ? to_json(*s.witness) : json()},
          {"nodes_visited", s.nodes_visited},
          {"prefixes_pruned", s.prefixes_pruned},
          {"wall_time_s", s.wall_time_s},
          {"worker_count", s.worker_count}};
}

json to_json(const TrialStats& s) {
  return {{"statistic", statistic_name(s.statistic)},
          {"n", s.n},
          {"r", s.r},
          {"trials", s.trials},
          {"seed", s.seed},
          {"mean", s.mean},
          {"var", s.variance},
          {"min", s.min},
          {"max", s.max},
          {"q05", s.q05},
          {"q50", s.q50},
          {"q95", s.q95},
          {"reference", s.reference}};
}

std::string trial_stats_csv_header() {
  return "statistic,n,r,trials,seed,mean,var,min,max,q05,q50,q95,reference";
}

std::string trial_stats_csv_row(const TrialStats& s) {
  std::ostringstream os;
  os << statistic_name(s.statistic) << ',' << s.n << ',' << s.r << ',' << s.trials << ','
     << s.seed << ',' << num(s.mean) << ',' << num(s.variance) << ',' << num(s.min) << ','
     << num(s.max) << ',' << num(s.q05) << ',' << num(s.q50) << ',' << num(s.q95) << ','
     << num(s.reference);
  return os.str();
}

Permutation permutation_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object()) {
    if (!j.contains("permutation")) throw InvalidInput("JSON object has no \"permutation\" key");
    arr = &j.at("permutation");
  }
  if (!arr->is_array()) throw InvalidInput("expected a JSON array of integers");
  std::vector<Value> v;
  for (const auto& e : *arr) {
    if (!e.is_number_integer()) throw InvalidInput("permutation entries must be integers");
    v.push_back(e.get<Value>());
  }
  return Permutation(std::move(v));
}

}  // namespace twinperm
