// aic: batch front-end for attitude diffusion on weighted directed graphs.
//
// Subcommands: simulate, exact, maximize, stats, sweep. Every command emits a
// JSON report (stdout or --out) whose numeric results replay bitwise for a
// fixed --seed; only the timing fields vary between runs. Exit codes:
// 0 success, 2 validation/parse error, 3 size-guard refusal.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "aic/actionable.hpp"
#include "aic/attitude_max.hpp"
#include "aic/diffusion.hpp"
#include "aic/errors.hpp"
#include "aic/graph.hpp"
#include "aic/parallel.hpp"
#include "aic/ras.hpp"
#include "aic/rng.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitSizeGuard = 3;

struct CommonOpts {
  std::string graph_path;
  std::string weights = "const:0.1";
  bool symmetrize = false;
  bool keep_self_loops = false;
  bool keep_multi = false;
  std::uint64_t seed = 42;
  unsigned threads = aic::default_threads();
  std::string out;        // JSON report destination; empty = stdout
  std::string idmap_out;  // optional label<TAB>id sidecar
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--graph", o.graph_path, "edge-list file: `src dst [prob]`, # comments")
      ->required();
  cmd->add_option("--weights", o.weights,
                  "probability scheme: const:<p> | indeg | file (default const:0.1)");
  cmd->add_flag("--symmetrize", o.symmetrize, "add the reverse of every edge");
  cmd->add_flag("--keep-self-loops", o.keep_self_loops, "keep self-loops (dropped by default)");
  cmd->add_flag("--keep-multi", o.keep_multi, "keep duplicate (src,dst) edges");
  cmd->add_option("--seed", o.seed, "master seed for all randomness (default 42)");
  cmd->add_option("--threads", o.threads, "worker count (default: hardware)");
  cmd->add_option("--out", o.out, "write the JSON report here instead of stdout");
  cmd->add_option("--idmap-out", o.idmap_out, "write the label<TAB>id sidecar here");
}

aic::WeightScheme parse_weights(const std::string& spec) {
  if (spec == "indeg") return aic::WeightScheme::in_degree();
  if (spec == "file") return aic::WeightScheme::from_file();
  if (spec.rfind("const:", 0) == 0) {
    const std::string num = spec.substr(6);
    try {
      std::size_t used = 0;
      const double p = std::stod(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
      return aic::WeightScheme::constant(p);
    } catch (const std::exception&) {
      throw aic::ValidationError("bad --weights probability: " + num);
    }
  }
  throw aic::ValidationError("unknown --weights scheme: " + spec +
                             " (expected const:<p>, indeg or file)");
}

aic::LoadedGraph load(const CommonOpts& o) {
  aic::LoadOptions lo;
  lo.symmetrize = o.symmetrize;
  lo.keep_self_loops = o.keep_self_loops;
  lo.keep_multi = o.keep_multi;
  aic::LoadedGraph lg = aic::load_edge_list(o.graph_path, parse_weights(o.weights), lo);
  if (!o.idmap_out.empty()) aic::write_id_map(lg, o.idmap_out);
  return lg;
}

std::vector<std::string> split_tokens(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream is(normalized);
  std::vector<std::string> tokens;
  std::string t;
  while (is >> t) tokens.push_back(t);
  return tokens;
}

aic::SeedSet resolve_seeds(const aic::LoadedGraph& lg, const std::string& inline_seeds,
                           const std::string& seeds_file) {
  std::vector<std::string> tokens;
  if (!seeds_file.empty()) {
    std::ifstream is(seeds_file);
    if (!is) throw aic::ValidationError("cannot open seeds file: " + seeds_file);
    std::stringstream buf;
    buf << is.rdbuf();
    tokens = split_tokens(buf.str());
  } else {
    tokens = split_tokens(inline_seeds);
  }
  std::vector<aic::NodeId> ids;
  ids.reserve(tokens.size());
  for (const std::string& t : tokens) ids.push_back(lg.id_of(t));
  return aic::SeedSet::of(std::move(ids));
}

json seed_labels(const aic::LoadedGraph& lg, const aic::SeedSet& s) {
  json arr = json::array();
  for (aic::NodeId v : s.nodes) arr.push_back(lg.labels[v]);
  return arr;
}

json graph_section(const CommonOpts& o, const aic::LoadedGraph& lg) {
  return json{{"path", o.graph_path},
              {"nodes", lg.graph.node_count()},
              {"edges", lg.graph.edge_count()},
              {"weights", o.weights},
              {"symmetrize", o.symmetrize},
              {"keep_self_loops", o.keep_self_loops},
              {"keep_multi", o.keep_multi}};
}

void emit(const CommonOpts& o, json report, double elapsed_sec) {
  report["timing"] = json{{"elapsed_sec", elapsed_sec}};
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream os(o.out);
    if (!os) throw aic::ValidationError("cannot write report: " + o.out);
    os << text;
  }
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

// ---- simulate ------------------------------------------------------------

int cmd_simulate(const CommonOpts& o, const std::string& seeds_inline,
                 const std::string& seeds_file, std::uint64_t trials) {
  Stopwatch watch;
  const aic::LoadedGraph lg = load(o);
  const aic::SeedSet s = resolve_seeds(lg, seeds_inline, seeds_file);
  const aic::McEstimate mc = aic::mc_estimate(lg.graph, s, trials,
                                              aic::RandomStream(o.seed), o.threads);
  json report{
      {"command", "simulate"},
      {"graph", graph_section(o, lg)},
      {"params", {{"seed", o.seed}, {"threads", o.threads}, {"trials", trials}}},
      {"results",
       {{"seeds", seed_labels(lg, s)},
        {"mean_att", mc.mean_att},
        {"mean_inf", mc.mean_inf},
        {"mean_act", mc.mean_act},
        {"mean_ratio", mc.mean_ratio},
        {"se_att", mc.se_att},
        {"se_inf", mc.se_inf},
        {"se_act", mc.se_act},
        {"se_ratio", mc.se_ratio}}},
  };
  emit(o, std::move(report), watch.seconds());
  return kExitOk;
}

// ---- exact ---------------------------------------------------------------

int cmd_exact(const CommonOpts& o, const std::string& seeds_inline,
              const std::string& seeds_file) {
  Stopwatch watch;
  const aic::LoadedGraph lg = load(o);
  const aic::SeedSet s = resolve_seeds(lg, seeds_inline, seeds_file);
  const aic::ExactResult r = aic::exact_enumerate(lg.graph, s);

  json per_node = json::array();
  for (aic::NodeId v = 0; v < lg.graph.node_count(); ++v) {
    per_node.push_back(json{{"label", lg.labels[v]}, {"attitude", r.per_node_att[v]}});
  }
  json report{
      {"command", "exact"},
      {"graph", graph_section(o, lg)},
      {"params", {{"seed", o.seed}, {"threads", o.threads}}},
      {"results",
       {{"seeds", seed_labels(lg, s)},
        {"sigma_att", r.sigma_att},
        {"sigma_inf", r.sigma_inf},
        {"sigma_act", r.sigma_act},
        {"per_node_att", per_node}}},
  };
  emit(o, std::move(report), watch.seconds());
  return kExitOk;
}

// ---- maximize ------------------------------------------------------------

int cmd_maximize(const CommonOpts& o, std::size_t k, double eps, double delta,
                 const std::string& objective, double a, bool paper_formula) {
  Stopwatch watch;
  const aic::LoadedGraph lg = load(o);
  const aic::EstimatorParams params{eps, delta};
  const aic::RandomStream master(o.seed);

  aic::SelectionResult r;
  json extra;
  if (objective == "attitude") {
    r = aic::maximize_attitude(lg.graph, k, params, master, o.threads);
  } else if (objective == "influence") {
    r = aic::maximize_influence(lg.graph, k, params, master, o.threads);
  } else if (objective == "actionable") {
    r = aic::maximize_actionable(lg.graph, k, a, master, o.threads, !paper_formula);
    extra["delta_bound"] = aic::delta_bound(lg.graph);
  } else {
    throw aic::ValidationError("unknown --objective: " + objective);
  }

  json results{{"seeds", seed_labels(lg, r.seeds)},
               {"seed_ids", r.seeds.nodes},
               {"objective", objective},
               {"estimate", r.est_objective},
               {"beta_used", r.beta_used},
               {"fresh_beta", r.fresh_beta},
               {"rounds", r.rounds},
               {"capped", r.capped}};
  for (auto& [key, value] : extra.items()) results[key] = value;
  if (r.capped) {
    std::cerr << "warning: sample doubling cap reached; result is best-so-far\n";
  }

  json params_json{{"seed", o.seed}, {"threads", o.threads}, {"k", k},
                   {"eps", eps},     {"delta", delta},       {"objective", objective}};
  if (objective == "actionable") {
    params_json["a"] = a;
    params_json["paper_formula"] = paper_formula;
  }
  json report{{"command", "maximize"},
              {"graph", graph_section(o, lg)},
              {"params", params_json},
              {"results", results}};
  emit(o, std::move(report), watch.seconds());
  return kExitOk;
}

// ---- stats ---------------------------------------------------------------

int cmd_stats(const CommonOpts& o, const std::string& seeds_inline,
              const std::string& seeds_file, std::uint64_t trials, std::size_t bins,
              std::string csv_path) {
  Stopwatch watch;
  if (trials < 1) throw aic::ValidationError("stats: trials must be >= 1");
  if (bins < 1) throw aic::ValidationError("stats: bins must be >= 1");
  const aic::LoadedGraph lg = load(o);
  const aic::SeedSet s = resolve_seeds(lg, seeds_inline, seeds_file);
  if (csv_path.empty()) csv_path = o.out.empty() ? "aic_stats.csv" : o.out + ".csv";

  const aic::RandomStream base(o.seed);
  const std::vector<double> share_pcts{1, 2, 5, 10, 25, 50};

  // contribution[b]: average over trials of value*count for attitude value
  // b+1; the last slot collects everything above `bins`.
  std::vector<double> contribution(bins + 1, 0.0);
  std::vector<double> share_sums(share_pcts.size(), 0.0);
  double att_sum = 0.0, inf_sum = 0.0;

  std::vector<std::uint32_t> sorted_att;
  for (std::uint64_t t = 0; t < trials; ++t) {
    aic::RandomStream rng = base.substream(t);
    const aic::DiffusionOutcome out = aic::simulate_aic(lg.graph, s, rng);

    sorted_att.clear();
    std::uint64_t total = 0;
    for (aic::NodeId v = 0; v < lg.graph.node_count(); ++v) {
      const std::uint32_t val = out.attitude[v];
      if (val == 0) continue;
      sorted_att.push_back(val);
      total += val;
      if (val <= bins) {
        contribution[val - 1] += static_cast<double>(val);
      } else {
        contribution[bins] += static_cast<double>(val);
      }
    }
    att_sum += static_cast<double>(total);
    inf_sum += static_cast<double>(sorted_att.size());

    std::sort(sorted_att.begin(), sorted_att.end(), std::greater<>());
    if (total > 0) {
      for (std::size_t i = 0; i < share_pcts.size(); ++i) {
        const auto take = static_cast<std::size_t>(
            std::ceil(share_pcts[i] / 100.0 * static_cast<double>(sorted_att.size())));
        std::uint64_t top = 0;
        for (std::size_t j = 0; j < std::min(take, sorted_att.size()); ++j) {
          top += sorted_att[j];
        }
        share_sums[i] += static_cast<double>(top) / static_cast<double>(total);
      }
    }
  }
  const double nt = static_cast<double>(trials);
  for (double& c : contribution) c /= nt;

  {
    std::ofstream csv(csv_path);
    if (!csv) throw aic::ValidationError("cannot write CSV: " + csv_path);
    csv << "attitude,avg_contribution\n";
    for (std::size_t b = 0; b < bins; ++b) {
      csv << (b + 1) << ',' << contribution[b] << '\n';
    }
    csv << "more," << contribution[bins] << '\n';
  }

  json histogram = json::array();
  for (std::size_t b = 0; b < bins; ++b) {
    histogram.push_back(
        json{{"attitude", std::to_string(b + 1)}, {"avg_contribution", contribution[b]}});
  }
  histogram.push_back(json{{"attitude", "more"}, {"avg_contribution", contribution[bins]}});

  json top_share = json::array();
  for (std::size_t i = 0; i < share_pcts.size(); ++i) {
    top_share.push_back(
        json{{"percent", share_pcts[i]}, {"share", share_sums[i] / nt}});
  }

  json report{
      {"command", "stats"},
      {"graph", graph_section(o, lg)},
      {"params",
       {{"seed", o.seed}, {"threads", o.threads}, {"trials", trials}, {"bins", bins}}},
      {"results",
       {{"seeds", seed_labels(lg, s)},
        {"csv", csv_path},
        {"mean_att", att_sum / nt},
        {"mean_inf", inf_sum / nt},
        {"histogram", histogram},
        {"top_share", top_share}}},
  };
  emit(o, std::move(report), watch.seconds());
  return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

int cmd_sweep(const CommonOpts& o, std::size_t k, double eps, double delta,
              const std::string& schemes_arg, std::string csv_path) {
  Stopwatch watch;
  const std::vector<std::string> schemes = split_tokens(schemes_arg);
  if (schemes.empty()) throw aic::ValidationError("sweep: empty scheme list");
  if (csv_path.empty()) csv_path = o.out.empty() ? "aic_sweep.csv" : o.out + ".csv";

  // Scheme tokens are bare probabilities or `indeg`.
  auto scheme_of = [](const std::string& t) {
    return t == "indeg" ? aic::WeightScheme::in_degree()
                        : parse_weights("const:" + t);
  };

  const aic::EstimatorParams params{eps, delta};
  json rows = json::array();
  std::ofstream csv(csv_path);
  if (!csv) throw aic::ValidationError("cannot write CSV: " + csv_path);
  csv << "scheme,estimate,elapsed_sec\n";

  json first_graph;
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    aic::LoadOptions lo;
    lo.symmetrize = o.symmetrize;
    lo.keep_self_loops = o.keep_self_loops;
    lo.keep_multi = o.keep_multi;
    const aic::LoadedGraph lg =
        aic::load_edge_list(o.graph_path, scheme_of(schemes[i]), lo);
    if (i == 0) {
      first_graph = graph_section(o, lg);
      if (!o.idmap_out.empty()) aic::write_id_map(lg, o.idmap_out);
    }
    const aic::RandomStream master = aic::RandomStream(o.seed).substream(i);
    const aic::SelectionResult r =
        aic::maximize_attitude(lg.graph, k, params, master, o.threads);
    csv << schemes[i] << ',' << r.est_objective << ',' << r.elapsed_sec << '\n';
    rows.push_back(json{{"scheme", schemes[i]},
                        {"estimate", r.est_objective},
                        {"elapsed_sec", r.elapsed_sec},
                        {"seeds", seed_labels(lg, r.seeds)},
                        {"beta_used", r.beta_used}});
  }

  json report{
      {"command", "sweep"},
      {"graph", first_graph},
      {"params",
       {{"seed", o.seed},
        {"threads", o.threads},
        {"k", k},
        {"eps", eps},
        {"delta", delta},
        {"schemes", schemes}}},
      {"results", {{"csv", csv_path}, {"rows", rows}}},
  };
  emit(o, std::move(report), watch.seconds());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"attitude diffusion engine: simulate, estimate and maximize "
               "attitude over weighted directed graphs"};
  app.require_subcommand(1);

  CommonOpts common;

  std::string seeds_inline, seeds_file;
  std::uint64_t trials = 20000;
  std::size_t k = 1, bins = 20;
  double eps = 0.1, delta = 0.01, a = 6400.0;
  std::string objective = "attitude", schemes, csv_path;
  bool paper_formula = false;

  CLI::App* simulate = app.add_subcommand("simulate", "Monte-Carlo cascade averages");
  add_common(simulate, common);
  simulate->add_option("--seeds", seeds_inline, "seed labels, comma/space separated");
  simulate->add_option("--seeds-file", seeds_file, "file of seed labels");
  simulate->add_option("--trials", trials, "number of cascades (default 20000)");

  CLI::App* exact = app.add_subcommand("exact", "exact values by live-edge enumeration");
  add_common(exact, common);
  exact->add_option("--seeds", seeds_inline, "seed labels, comma/space separated");
  exact->add_option("--seeds-file", seeds_file, "file of seed labels");

  CLI::App* maximize = app.add_subcommand("maximize", "greedy seed selection");
  add_common(maximize, common);
  maximize->add_option("--k", k, "seed budget")->required();
  maximize->add_option("--eps", eps, "relative error target (default 0.1)");
  maximize->add_option("--delta", delta, "failure probability (default 0.01)");
  maximize->add_option("--objective", objective, "attitude | actionable | influence");
  maximize->add_option("--a", a, "samples per unit indegree, actionable only (default 6400)");
  maximize->add_flag("--paper-formula", paper_formula,
                     "score seed roots with max(F-1,0) instead of F");

  CLI::App* stats = app.add_subcommand("stats", "attitude contribution histogram");
  add_common(stats, common);
  stats->add_option("--seeds", seeds_inline, "seed labels, comma/space separated");
  stats->add_option("--seeds-file", seeds_file, "file of seed labels");
  stats->add_option("--trials", trials, "number of cascades (default 20000)");
  stats->add_option("--bins", bins, "histogram bins before the `more` bucket (default 20)");
  stats->add_option("--csv", csv_path, "histogram CSV path");

  CLI::App* sweep = app.add_subcommand("sweep", "maximize attitude across weight schemes");
  add_common(sweep, common);
  sweep->add_option("--k", k, "seed budget")->required();
  sweep->add_option("--eps", eps, "relative error target (default 0.1)");
  sweep->add_option("--delta", delta, "failure probability (default 0.01)");
  sweep->add_option("--schemes", schemes, "list like `0.02,0.05,0.1,indeg`")->required();
  sweep->add_option("--csv", csv_path, "sweep CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help/usage; 0 for --help
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(common, seeds_inline, seeds_file, trials);
    if (exact->parsed()) return cmd_exact(common, seeds_inline, seeds_file);
    if (maximize->parsed())
      return cmd_maximize(common, k, eps, delta, objective, a, paper_formula);
    if (stats->parsed())
      return cmd_stats(common, seeds_inline, seeds_file, trials, bins, csv_path);
    if (sweep->parsed()) return cmd_sweep(common, k, eps, delta, schemes, csv_path);
  } catch (const aic::SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const aic::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const aic::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
