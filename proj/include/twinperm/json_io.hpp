#pragma once

#include <string>

#include "json.hpp"
#include "twinperm/detect.hpp"
#include "twinperm/matching.hpp"
#include "twinperm/montecarlo.hpp"
#include "twinperm/search.hpp"

namespace twinperm {

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const Pattern& p);
nlohmann::json to_json(const TwinsCertificate& c);
nlohmann::json to_json(const DetectOutcome& d);
nlohmann::json to_json(const MatchCertificate& m);
nlohmann::json to_json(const Rational& q);

/// Keys: r, k, n, outcome, witness, nodes_visited, prefixes_pruned, wall_time_s, worker_count.
nlohmann::json to_json(const SearchReport& s);

/// Same keys as the CSV header.
nlohmann::json to_json(const TrialStats& s);

/// statistic,n,r,trials,seed,mean,var,min,max,q05,q50,q95,reference
std::string trial_stats_csv_header();
std::string trial_stats_csv_row(const TrialStats& s);

/// Reads an array of integers, or an object with a "permutation" array.
Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace twinperm
