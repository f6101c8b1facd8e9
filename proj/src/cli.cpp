#include "twinperm/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "twinperm/construct.hpp"
#include "twinperm/json_io.hpp"
#include "twinperm/text_format.hpp"

namespace twinperm::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string format = "json";
  std::string out_path;
  std::optional<std::size_t> threads;
  std::string seed = "0x5EED";
};

struct Input {
  std::string perm;
  std::string file;
};

void add_common(CLI::App* sub, Common& c, bool with_seed) {
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  sub->add_option("--threads", c.threads, "Worker threads (default: $TWINPERM_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  if (with_seed) sub->add_option("--seed", c.seed, "Base seed (decimal or 0x hex)");
}

void add_input(CLI::App* sub, Input& in) {
  sub->add_option("--perm", in.perm, "Inline permutation, or '-' for stdin");
  sub->add_option("--file", in.file, "File with one permutation per line, or '-' for stdin");
}

std::size_t resolve_threads(const Common& c) {
  if (c.threads) return *c.threads;
  if (const char* env = std::getenv("TWINPERM_THREADS"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw InvalidInput("TWINPERM_THREADS must be a positive integer");
    return v;
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

std::uint64_t parse_seed(const std::string& s) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos, 0);
  } catch (const std::exception&) {
    throw InvalidInput("malformed seed: " + s);
  }
  if (pos != s.size()) throw InvalidInput("malformed seed: " + s);
  return v;
}

std::optional<Permutation> parse_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  if (first != std::string::npos && (line[first] == '{' || line[first] == '[')) {
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& e) {
      throw InvalidInput(std::string("malformed JSON input: ") + e.what());
    }
    return permutation_from_json(j);
  }
  return parse_permutation_line(line);
}

std::vector<Permutation> read_stream(std::istream& s) {
  std::vector<Permutation> out;
  std::string line;
  while (std::getline(s, line)) {
    if (auto p = parse_line(line)) out.push_back(std::move(*p));
  }
  return out;
}

std::vector<Permutation> read_inputs(const Input& in, std::istream& stdin_stream) {
  if (!in.perm.empty() && !in.file.empty()) throw InvalidInput("give either --perm or --file");
  if (in.perm == "-" || in.file == "-") return read_stream(stdin_stream);
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw InvalidInput("cannot open " + in.file);
    return read_stream(f);
  }
  if (in.perm.empty()) throw InvalidInput("no permutation given (use --perm or --file)");
  auto p = parse_line(in.perm);
  if (!p) throw InvalidInput("empty permutation");
  return {std::move(*p)};
}

PositionFamily parse_sets(const std::string& text) {
  PositionFamily fam;
  std::string chunk;
  std::stringstream ss(text);
  while (std::getline(ss, chunk, ';')) {
    std::replace(chunk.begin(), chunk.end(), '{', ' ');
    std::replace(chunk.begin(), chunk.end(), '}', ' ');
    auto p = parse_permutation_line(chunk);
    if (!p) throw InvalidInput("empty position set in '" + text + "'");
    std::vector<std::size_t> set;
    for (Value v : p->values()) {
      if (v < 1) throw InvalidInput("positions are 1-based");
      set.push_back(static_cast<std::size_t>(v));
    }
    fam.push_back(std::move(set));
  }
  if (fam.empty()) throw InvalidInput("no position sets given");
  return fam;
}

std::string csv_cell(const json& v) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  if (v.is_null()) return "";
  if (v.is_primitive()) return v.dump();
  return csv_cell(json(v.dump()));
}

// One CSV table from flat-ish records; nested values are embedded as JSON text.
void write_csv(std::ostream& os, const std::vector<json>& records) {
  if (records.empty()) return;
  std::vector<std::string> keys;
  for (const auto& [key, value] : records.front().items()) keys.push_back(key);
  for (std::size_t i = 0; i < keys.size(); ++i) os << (i ? "," : "") << keys[i];
  os << '\n';
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      os << (i ? "," : "") << (rec.contains(keys[i]) ? csv_cell(rec[keys[i]]) : "");
    }
    os << '\n';
  }
}

struct Emitter {
  const Common& common;
  std::ostream& out;

  void json_lines(const std::vector<json>& records) const {
    if (common.format == "text") throw InvalidInput("--format text is only valid for construct and reduce");
    if (common.format == "csv") {
      write_csv(sink(), records);
    } else {
      for (const auto& r : records) sink() << r.dump() << '\n';
    }
    sink().flush();
  }

  std::ostream& sink() const {
    if (common.out_path.empty()) return out;
    if (!file) {
      file.emplace(common.out_path);
      if (!*file) throw InvalidInput("cannot write " + common.out_path);
    }
    return *file;
  }

  mutable std::optional<std::ofstream> file;
};

json permutation_record(const std::string& family, const Permutation& p) {
  return {{"family", family}, {"n", p.size()}, {"permutation", to_json(p)}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Twins in permutations: detection, constructions, exhaustive search, sampling",
               "twinperm"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Common common;
  Input input;
  std::string kind;
  std::size_t r = 0;
  std::size_t k = 0;
  std::optional<std::size_t> opt_r;
  std::optional<std::size_t> opt_k;
  std::optional<std::size_t> opt_n;
  std::size_t k_limit = 0;
  bool no_monotone = false;

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduced form (pattern) of each permutation");
  add_common(reduce_cmd, common, false);
  add_input(reduce_cmd, input);

  auto* detect_cmd = app.add_subcommand("detect", "Decide twins of a kind, multiplicity r and length k");
  add_common(detect_cmd, common, false);
  add_input(detect_cmd, input);
  detect_cmd->add_option("--kind", kind, "block | tight | block-tight")->required();
  detect_cmd->add_option("--r", r, "Multiplicity")->required()->check(CLI::PositiveNumber);
  detect_cmd->add_option("--k", k, "Twin length")->required()->check(CLI::PositiveNumber);
  std::size_t window = 0;
  detect_cmd->add_option("--window", window, "Tight only: examine just the window starting here (1-based)");

  auto* maxlen_cmd = app.add_subcommand("maxlen", "Largest twin length for multiplicity r");
  add_common(maxlen_cmd, common, false);
  add_input(maxlen_cmd, input);
  maxlen_cmd->add_option("--kind", kind, "block | tight | block-tight")->required();
  maxlen_cmd->add_option("--r", r, "Multiplicity")->required()->check(CLI::PositiveNumber);
  maxlen_cmd->add_option("--k-limit", k_limit, "Largest k scanned for tight kinds (0 = n/r)");
  maxlen_cmd->add_flag("--no-monotone", no_monotone, "Scan block lengths downward from n/r");

  auto* rmax_cmd = app.add_subcommand("rmax", "Largest multiplicity for twin length k");
  add_common(rmax_cmd, common, false);
  add_input(rmax_cmd, input);
  rmax_cmd->add_option("--kind", kind, "block | tight")->required();
  rmax_cmd->add_option("--k", k, "Twin length")->required()->check(CLI::PositiveNumber);

  ConstructionSpec spec;
  auto* construct_cmd = app.add_subcommand("construct", "Emit a named construction");
  add_common(construct_cmd, common, false);
  construct_cmd
      ->add_option("--family", spec.family,
                   "pi-k | pi-rk | quadratic | pi2 | pi3 | alternating | intro-example")
      ->required();
  construct_cmd->add_option("--r", opt_r, "Multiplicity");
  construct_cmd->add_option("--k", opt_k, "Length parameter");
  construct_cmd->add_option("--n", opt_n, "Target length");
  construct_cmd->add_option("--name", spec.name,
                            "intro-example name: pi12, intro-tight2, intro-tight4, intro-block4, "
                            "intro-blocktight4");

  std::size_t n_max = 0;
  bool allow_large = false;
  std::size_t shard_depth = 0;
  auto* search_cmd = app.add_subcommand("search-f", "Exhaustive search for f(r,k)");
  add_common(search_cmd, common, false);
  search_cmd->add_option("--r", r, "Multiplicity")->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--k", k, "Twin length")->required()->check(CLI::PositiveNumber);
  auto* nmax_opt = search_cmd->add_option("--n-max", n_max, "Largest n tried");
  auto* n_opt = search_cmd->add_option("--n", opt_n, "Search this single length only");
  nmax_opt->excludes(n_opt);
  search_cmd->add_flag("--allow-large", allow_large, "Permit n above 14");
  search_cmd->add_option("--shard-depth", shard_depth, "Prefix depth of parallel shards (0 = auto)");

  auto* countq_cmd = app.add_subcommand("count-q", "Count permutations of [rk] that are tight r-twins");
  add_common(countq_cmd, common, false);
  countq_cmd->add_option("--r", r, "Multiplicity")->required()->check(CLI::PositiveNumber);
  countq_cmd->add_option("--k", k, "Twin length")->required()->check(CLI::PositiveNumber);

  std::string stat;
  std::size_t n = 0;
  std::uint64_t trials = 100;
  bool exhaustive = false;
  double tail_eps = 1e-3;
  auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo statistics over random permutations");
  add_common(mc_cmd, common, true);
  mc_cmd->add_option("--stat", stat, "bt_len | tt_len | btt_len | match2_success")->required();
  mc_cmd->add_option("--n", n, "Permutation length")->required()->check(CLI::PositiveNumber);
  mc_cmd->add_option("--r", r, "Multiplicity")->required()->check(CLI::PositiveNumber);
  mc_cmd->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  mc_cmd->add_flag("--exhaustive", exhaustive, "Use every permutation of [n] once (n <= 9)");
  mc_cmd->add_option("--tail-eps", tail_eps, "tt_len: allowed probability of missing a longer twin")
      ->check(CLI::Range(1e-300, 0.5));

  std::string mode;
  std::string sets1;
  std::string sets2;
  auto* prob_cmd = app.add_subcommand("check-prob", "Exact probability checks by full enumeration");
  add_common(prob_cmd, common, false);
  prob_cmd->add_option("--mode", mode, "single | independence")
      ->required()
      ->check(CLI::IsMember({"single", "independence"}));
  prob_cmd->add_option("--n", n, "Permutation length (<= 8)")->required();
  prob_cmd->add_option("--r", r, "Sets per family")->required();
  prob_cmd->add_option("--k", k, "Set size")->required();
  prob_cmd->add_option("--sets", sets1, "Position sets, e.g. \"1,2;3,4\"")->required();
  prob_cmd->add_option("--sets2", sets2, "Second family (independence mode)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    Emitter emit{common, out, {}};
    std::vector<json> records;

    if (reduce_cmd->parsed()) {
      for (const auto& p : read_inputs(input, in)) {
        const Pattern q = reduce(p);
        if (common.format == "text") {
          emit.sink() << format_permutation(q.values()) << '\n';
        } else {
          records.push_back({{"input", to_json(p)}, {"pattern", to_json(q)}});
        }
      }
      if (common.format != "text") emit.json_lines(records);
    } else if (detect_cmd->parsed()) {
      const TwinKind tk = parse_kind(kind);
      for (const auto& p : read_inputs(input, in)) {
        if (window && tk != TwinKind::tight) throw InvalidInput("--window applies to tight twins only");
        const auto d = window ? detect_tight_window(p, r, k, window) : detect(p, tk, r, k);
        json rec = {{"kind", kind_name(tk)}, {"r", r}, {"k", k}, {"n", p.size()}};
        rec.update(to_json(d));
        records.push_back(std::move(rec));
      }
      emit.json_lines(records);
    } else if (maxlen_cmd->parsed()) {
      const TwinKind tk = parse_kind(kind);
      MaxLenOptions o;
      o.monotone_block = !no_monotone;
      o.k_limit = k_limit;
      for (const auto& p : read_inputs(input, in)) {
        const auto res = max_len(p, r, tk, o);
        records.push_back({{"kind", kind_name(tk)},
                           {"r", r},
                           {"n", p.size()},
                           {"k_max", res.k_max},
                           {"certificate", res.certificate ? to_json(*res.certificate) : json()}});
      }
      emit.json_lines(records);
    } else if (rmax_cmd->parsed()) {
      const TwinKind tk = parse_kind(kind);
      for (const auto& p : read_inputs(input, in)) {
        const auto res = r_max(p, k, tk);
        records.push_back({{"kind", kind_name(tk)},
                           {"k", k},
                           {"n", p.size()},
                           {"r_max", res.r_max},
                           {"matching_shortcut", res.matching_shortcut},
                           {"certificate", res.certificate ? to_json(*res.certificate) : json()}});
      }
      emit.json_lines(records);
    } else if (construct_cmd->parsed()) {
      spec.r = opt_r;
      spec.k = opt_k;
      spec.n = opt_n;
      const Permutation p = build(spec);
      if (common.format == "text") {
        emit.sink() << format_permutation(p) << '\n';
      } else {
        emit.json_lines({permutation_record(spec.family, p)});
      }
    } else if (search_cmd->parsed()) {
      SearchOptions so;
      so.workers = resolve_threads(common);
      so.shard_depth = shard_depth;
      if (opt_n) {
        if (*opt_n > kMaxSearchLength && !allow_large) {
          throw ResourceLimit("search-f: n above 14 needs --allow-large");
        }
        emit.json_lines({to_json(exists_avoider(*opt_n, r, k, so))});
      } else {
        if (n_max == 0) throw InvalidInput("search-f needs --n-max or --n");
        const FResult f = compute_f(r, k, n_max, so, allow_large);
        json reports = json::array();
        for (const auto& rep : f.reports) reports.push_back(to_json(rep));
        if (common.format == "csv") {
          emit.json_lines(std::vector<json>(reports.begin(), reports.end()));
        } else {
          emit.json_lines({{{"r", r},
                            {"k", k},
                            {"n_max", n_max},
                            {"f", f.value ? json(*f.value) : json("exceeds n_max")},
                            {"reports", reports}}});
        }
      }
    } else if (countq_cmd->parsed()) {
      const std::uint64_t q = count_Q(r, k, resolve_threads(common));
      std::uint64_t total = 1;
      for (std::size_t i = 2; i <= r * k; ++i) total *= i;
      emit.json_lines({{{"r", r},
                        {"k", k},
                        {"Q", q},
                        {"total", total},
                        {"fraction", static_cast<double>(q) / static_cast<double>(total)}}});
    } else if (mc_cmd->parsed()) {
      EstimateOptions eo;
      eo.workers = resolve_threads(common);
      eo.exhaustive = exhaustive;
      eo.tail_eps = tail_eps;
      const std::uint64_t seed = parse_seed(common.seed);
      const TrialStats st = estimate_stat(parse_statistic(stat), n, r, trials, seed, eo);
      if (common.format == "csv") {
        emit.sink() << trial_stats_csv_header() << '\n' << trial_stats_csv_row(st) << '\n';
      } else {
        emit.json_lines({to_json(st)});
      }
    } else if (prob_cmd->parsed()) {
      const PositionFamily fam1 = parse_sets(sets1);
      if (mode == "single") {
        const auto res = check_eq1(n, r, k, fam1);
        emit.json_lines({{{"mode", mode},
                          {"n", n},
                          {"r", r},
                          {"k", k},
                          {"sets", fam1},
                          {"exact", to_json(res.exact)},
                          {"theoretical", to_json(res.theoretical)},
                          {"count", res.count},
                          {"total", res.total},
                          {"matches", res.matches}}});
      } else {
        if (sets2.empty()) throw InvalidInput("independence mode needs --sets2");
        const PositionFamily fam2 = parse_sets(sets2);
        const auto res = check_independence(n, r, k, fam1, fam2);
        emit.json_lines({{{"mode", mode},
                          {"n", n},
                          {"r", r},
                          {"k", k},
                          {"sets", fam1},
                          {"sets2", fam2},
                          {"lhs", to_json(res.lhs)},
                          {"rhs", to_json(res.rhs)},
                          {"equal", res.equal}}});
      }
    }
    return kExitOk;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace twinperm::cli
