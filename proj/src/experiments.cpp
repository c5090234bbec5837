#include "splicers/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

#include "splicers/cut_analysis.hpp"
#include "splicers/errors.hpp"
#include "splicers/generators.hpp"
#include "splicers/io.hpp"
#include "splicers/route_sim.hpp"
#include "splicers/splicer.hpp"
#include "splicers/stats.hpp"
#include "splicers/tree_sampler.hpp"

namespace splicers {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view text, std::size_t line, std::string_view key) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError(line, "bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

// Summary under construction.
class Report {
 public:
  Report(const ExperimentConfig& config, std::string csv_header) {
    summary_["preset"] = config.preset;
    summary_["seed"] = config.seed;
    summary_["assertions"] = json::array();
    summary_["estimates"] = json::object();
    csv_ << csv_header << '\n';
  }

  void parameter(const std::string& key, const json& value) { summary_["parameters"][key] = value; }
  void estimate(const std::string& key, const json& value) { summary_["estimates"][key] = value; }

  // Records value `relation` threshold, e.g. ">=".
  void check(const std::string& name, double value, std::string_view relation, double threshold,
             double standard_error = 0.0) {
    const double margin = kStandardErrors * standard_error;
    const bool passed = relation == ">=" ? value + margin >= threshold : value - margin <= threshold;
    json a = {{"name", name}, {"value", value}, {"relation", relation}, {"threshold", threshold}, {"passed", passed}};
    if (standard_error > 0.0) a["standard_error"] = standard_error;
    summary_["assertions"].push_back(std::move(a));
    passed_ = passed_ && passed;
  }

  void flag(const std::string& name, bool passed) {
    summary_["assertions"].push_back({{"name", name}, {"passed", passed}});
    passed_ = passed_ && passed;
  }

  std::ostream& csv() { return csv_; }

  PresetResult finish() {
    summary_["passed"] = passed_;
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    summary_["metadata"] = {{"timestamp", std::chrono::duration_cast<std::chrono::seconds>(now).count()}};
    return {summary_, csv_.str(), passed_};
  }

 private:
  json summary_;
  std::ostringstream csv_;
  bool passed_ = true;
};

double mean_of(const std::vector<double>& xs) {
  return xs.empty() ? 0.0 : std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Cut preservation by k-splicers of random regular graphs.
PresetResult preset_cut_preservation(const ExperimentConfig& c) {
  const std::size_t n = c.n.value_or(256);
  const std::size_t d = c.d.value_or(3);
  const std::size_t k = c.k.value_or(2);
  const std::size_t seeds = c.trials.value_or(3);
  const std::size_t samples = c.samples.value_or(2000);
  if (k < 2) throw InvalidArgument("thm-cut-preservation needs k >= 2");
  const double alpha = 9.0 * static_cast<double>(d * d) / static_cast<double>(k - 1);
  const double threshold = 1.0 / (alpha * std::log(static_cast<double>(n)));

  Report r(c, "seed,family,cut_size,base_cut,derived_cut,ratio");
  r.parameter("n", n);
  r.parameter("d", d);
  r.parameter("k", k);
  r.parameter("seeds", seeds);
  r.parameter("samples", samples);
  r.parameter("alpha", alpha);
  const Seed root(c.seed);
  double overall = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < seeds; ++i) {
    const Seed s = root.stream("experiments.cut_preservation.seed", i);
    const Graph g = random_regular_graph(n, d, s.stream("experiments.cut_preservation.graph"));
    const Splicer u = splice(g, k, s.stream("experiments.cut_preservation.splice"));
    const auto cuts = sampled_cut_ratios(g, u, samples, s.stream("experiments.cut_preservation.cuts"));
    const auto worst = std::min_element(cuts.begin(), cuts.end(),
                                        [](const auto& a, const auto& b) { return a.ratio < b.ratio; });
    overall = std::min(overall, worst->ratio);
    r.csv() << s.value() << ',' << to_string(worst->family) << ',' << worst->a.size() << ',' << worst->base_cut << ','
            << format_double(worst->derived_cut) << ',' << format_double(worst->ratio) << '\n';
  }
  r.estimate("min_ratio", overall);
  r.check("min cut ratio >= 1/(alpha ln n)", overall, ">=", threshold);
  return r.finish();
}

PresetResult preset_complete_graph(const ExperimentConfig& c) {
  const std::size_t n = c.n.value_or(16);
  const std::size_t k = c.k.value_or(2);
  const std::size_t seeds = c.trials.value_or(20);
  Report r(c, "seed,vertex_expansion,edge_expansion,witness_size");
  r.parameter("n", n);
  r.parameter("k", k);
  r.parameter("seeds", seeds);
  const Graph kn = complete_graph(n);
  const Seed root(c.seed);
  std::size_t good = 0;
  double minimum = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < seeds; ++i) {
    const Seed s = root.stream("experiments.complete_graph.seed", i);
    const Splicer u = splice(kn, k, s);
    const auto vertex = vertex_expansion_exact(u.support);
    const auto edge = edge_expansion_exact(u.support);
    good += vertex.value >= 0.5 ? 1 : 0;
    minimum = std::min(minimum, vertex.value);
    r.csv() << s.value() << ',' << format_double(vertex.value) << ',' << format_double(edge.value) << ','
            << vertex.witness.size() << '\n';
  }
  const double fraction = seeds ? static_cast<double>(good) / static_cast<double>(seeds) : 0.0;
  r.estimate("min_vertex_expansion", minimum);
  r.estimate("fraction_at_least_half", fraction);
  r.check("fraction of seeds with vertex expansion >= 1/2", fraction, ">=", 0.95);
  return r.finish();
}

PresetResult preset_lower_bound(const ExperimentConfig& c) {
  const std::size_t n = c.n.value_or(3000);
  const std::size_t d = c.d.value_or(3);
  const std::size_t ell = c.ell.value_or(1);
  const std::size_t trees = c.trials.value_or(100);
  Report r(c, "gadget,path_size,outer_size");
  r.parameter("n", n);
  r.parameter("d", d);
  r.parameter("ell", ell);
  r.parameter("trees", trees);
  const Seed root(c.seed);
  const auto family = lower_bound_family(n, d, ell, root.stream("experiments.lower_bound.family"));
  const auto violations = validate_lower_bound_family(family);
  r.estimate("gadgets", family.gadgets.size());
  r.estimate("violations", violations);
  r.flag("structural invariants", violations.empty());
  for (std::size_t i = 0; i < family.gadgets.size(); ++i) {
    r.csv() << i << ',' << family.gadgets[i].path.size() << ',' << family.gadgets[i].outer_cycle.size() << '\n';
  }
  const auto events = measure_lower_bound_events(family, trees, root.stream("experiments.lower_bound.trees"));
  r.estimate("observations", events.observations);
  r.estimate("hits", events.hits);
  r.estimate("frequency", events.frequency);
  r.estimate("standard_error", events.standard_error);
  r.estimate("hits_with_single_edge_cut", events.hits_with_single_edge_cut);
  r.check("Pr[E_P] >= 1/(d+2)^((d+1)ell-1)", events.frequency, ">=", events.bound, events.standard_error);
  r.flag("every hit cuts the path off by one tree edge", events.hits_with_single_edge_cut == events.hits);
  return r.finish();
}

PresetResult preset_random_graph(const ExperimentConfig& c) {
  const std::size_t n = c.n.value_or(256);
  const double ln_n = std::log(static_cast<double>(n));
  const double p = c.p.value_or(std::min(1.0, 20.0 * ln_n / static_cast<double>(n)));
  const std::size_t runs = c.trials.value_or(20);
  Report r(c, "run,edges,succeeded,lambda2");
  r.parameter("n", n);
  r.parameter("p", p);
  r.parameter("runs", runs);
  const Seed root(c.seed);
  std::size_t successes = 0;
  std::vector<double> lambdas;
  for (std::size_t i = 0; i < runs; ++i) {
    const Seed s = root.stream("experiments.random_graph.run", i);
    const Graph h = gnp_graph(n, p, s.stream("experiments.random_graph.graph"));
    const auto two = sequential_two_trees_bp(h, p, s.stream("experiments.random_graph.walk"));
    double lambda = 0.0;
    if (two.trees) {
      ++successes;
      lambda = spectral_lower_bound(union_trees({two.trees->first, two.trees->second}));
      lambdas.push_back(lambda);
    }
    r.csv() << i << ',' << h.num_edges() << ',' << (two.trees ? 1 : 0) << ',' << format_double(lambda) << '\n';
  }
  const double rate = runs ? static_cast<double>(successes) / static_cast<double>(runs) : 0.0;
  r.estimate("success_rate", rate);
  if (!lambdas.empty()) {
    r.estimate("min_lambda2", *std::min_element(lambdas.begin(), lambdas.end()));
    r.estimate("mean_lambda2", mean_of(lambdas));
  }
  r.check("Process B_p success rate", rate, ">=", 0.9);
  return r.finish();
}

PresetResult preset_sparsifier(const ExperimentConfig& c) {
  const std::size_t n = c.n.value_or(300);
  const double ln_n = std::log(static_cast<double>(n));
  const double p = c.p.value_or(std::min(1.0, 10.0 * ln_n / static_cast<double>(n)));
  const std::size_t seeds = c.trials.value_or(3);
  const std::size_t samples = c.samples.value_or(1000);
  Report r(c, "seed,edges,sparsifier_edges,attempts,c_low,c_high");
  r.parameter("n", n);
  r.parameter("p", p);
  r.parameter("seeds", seeds);
  r.parameter("samples", samples);
  const Seed root(c.seed);
  double c_low = std::numeric_limits<double>::infinity();
  double c_high = 0.0;
  std::size_t largest = 0;
  for (std::size_t i = 0; i < seeds; ++i) {
    const Seed s = root.stream("experiments.sparsifier.seed", i);
    Graph h = gnp_graph(n, p, s.stream("experiments.sparsifier.graph"));
    for (std::size_t redraw = 1; !h.is_connected(); ++redraw) {
      h = gnp_graph(n, p, s.stream("experiments.sparsifier.graph", redraw));
    }
    const auto result = sparsify_gnp(h, p, s.stream("experiments.sparsifier.sparsify"));
    const auto q = sparsifier_quality(h, result.sparsifier, samples, s.stream("experiments.sparsifier.cuts"));
    c_low = std::min(c_low, q.c_low);
    c_high = std::max(c_high, q.c_high);
    largest = std::max(largest, result.sparsifier.graph.num_edges());
    r.csv() << s.value() << ',' << h.num_edges() << ',' << result.sparsifier.graph.num_edges() << ','
            << result.attempts << ',' << format_double(q.c_low) << ',' << format_double(q.c_high) << '\n';
  }
  r.estimate("c_low", c_low);
  r.estimate("c_high", c_high);
  r.estimate("max_sparsifier_edges", largest);
  r.check("c_low", c_low, ">=", 0.05);
  r.check("c_high", c_high, "<=", 50.0);
  r.check("sparsifier edges <= 2(n-1)", static_cast<double>(largest), "<=", 2.0 * static_cast<double>(n - 1));
  return r.finish();
}

PresetResult preset_stretch(const ExperimentConfig& c) {
  const std::size_t n = c.n.value_or(256);
  const std::size_t seeds = c.trials.value_or(5);
  const std::size_t pairs = c.pairs.value_or(1000);
  Report r(c, "seed,k,mean_stretch,diameter");
  r.parameter("n", n);
  r.parameter("seeds", seeds);
  r.parameter("pairs", pairs);
  const Graph kn = complete_graph(n);
  const Seed root(c.seed);
  std::vector<double> one_tree;
  std::vector<double> two_trees;
  std::size_t worst_diameter = 0;
  for (std::size_t i = 0; i < seeds; ++i) {
    const Seed s = root.stream("experiments.stretch.seed", i);
    for (const std::size_t k : {std::size_t{1}, std::size_t{2}}) {
      const Splicer u = splice(kn, k, s.stream("experiments.stretch.splice"));
      const auto report = stretch_stats(kn, u, pairs, s.stream("experiments.stretch.pairs"));
      (k == 1 ? one_tree : two_trees).push_back(report.mean_stretch);
      if (k == 2) worst_diameter = std::max(worst_diameter, report.diameter.value_or(0));
      r.csv() << s.value() << ',' << k << ',' << format_double(report.mean_stretch) << ','
              << report.diameter.value_or(0) << '\n';
    }
  }
  r.estimate("mean_stretch_k1", mean_of(one_tree));
  r.estimate("mean_stretch_k2", mean_of(two_trees));
  r.estimate("max_diameter_k2", worst_diameter);
  r.check("2-splicer diameter <= 4 log2 n", static_cast<double>(worst_diameter), "<=",
          4.0 * std::log2(static_cast<double>(n)));
  r.check("two trees stretch less than one", mean_of(two_trees), "<=", mean_of(one_tree));
  return r.finish();
}

PresetResult preset_routing(const ExperimentConfig& c) {
  const std::size_t n = c.n.value_or(64);
  const double failure_prob = c.failure_prob.value_or(0.05);
  const std::size_t trials = c.trials.value_or(10);
  const std::size_t pairs = c.pairs.value_or(200);
  const std::size_t k = c.k.value_or(2);
  Report r(c, "k,seed,failure_prob,delivered_fraction,ceiling_fraction,mean_hops,mean_switches");
  r.parameter("n", n);
  r.parameter("k", k);
  r.parameter("failure_prob", failure_prob);
  r.parameter("trials", trials);
  r.parameter("pairs", pairs);
  const Graph kn = complete_graph(n);
  const Seed root(c.seed);
  const auto single = reliability_experiment(kn, 1, failure_prob, pairs, trials, root);
  const auto multi = reliability_experiment(kn, k, failure_prob, pairs, trials, root);
  for (const auto* summary : {&single, &multi}) {
    for (const auto& row : summary->rows) {
      r.csv() << summary->k << ',' << row.seed << ',' << format_double(row.failure_prob) << ','
              << format_double(row.delivered_fraction) << ',' << format_double(row.ceiling_fraction) << ','
              << format_double(row.mean_hops) << ',' << format_double(row.mean_switches) << '\n';
    }
  }
  r.estimate("delivered_k1", single.delivered_fraction);
  r.estimate("delivered_k", multi.delivered_fraction);
  r.estimate("ceiling", multi.ceiling_fraction);
  r.flag("delivery never exceeds the connectivity ceiling", single.never_above_ceiling && multi.never_above_ceiling);
  r.check("delivery with k trees minus one tree", multi.delivered_fraction - single.delivered_fraction, ">=", 0.0);
  return r.finish();
}

using PresetFn = PresetResult (*)(const ExperimentConfig&);

const std::map<std::string_view, PresetFn>& presets() {
  static const std::map<std::string_view, PresetFn> table = {
      {"thm-cut-preservation", preset_cut_preservation},
      {"thm-lower-bound", preset_lower_bound},
      {"thm-complete-graph", preset_complete_graph},
      {"thm-random-graph", preset_random_graph},
      {"thm-sparsifier", preset_sparsifier},
      {"stretch", preset_stretch},
      {"routing-reliability", preset_routing},
  };
  return table;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig config;
  std::map<std::string, std::size_t> seen;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto eq = text.find('=');
    if (eq == std::string_view::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key(trim(text.substr(0, eq)));
    const auto value = trim(text.substr(eq + 1));
    if (!seen.emplace(key, line).second) throw ParseError(line, "repeated key '" + key + "'");
    auto count = [&] { return parse_number<std::size_t>(value, line, key); };
    auto real = [&] { return parse_number<double>(value, line, key); };
    if (key == "preset") config.preset = value;
    else if (key == "seed") config.seed = parse_number<std::uint64_t>(value, line, key);
    else if (key == "n") config.n = count();
    else if (key == "p") config.p = real();
    else if (key == "d") config.d = count();
    else if (key == "k") config.k = count();
    else if (key == "ell") config.ell = count();
    else if (key == "trials") config.trials = count();
    else if (key == "samples") config.samples = count();
    else if (key == "pairs") config.pairs = count();
    else if (key == "failure_prob") config.failure_prob = real();
    else if (key == "out_json") config.out_json = value;
    else if (key == "out_csv") config.out_csv = value;
    else throw ParseError(line, "unknown key '" + key + "'");
  }
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open config " + path);
  return parse_config(in);
}

std::string serialize_config(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "preset = " << c.preset << '\n' << "seed = " << c.seed << '\n';
  auto put = [&out](const char* key, const auto& value) {
    if (!value) return;
    using T = std::decay_t<decltype(*value)>;
    out << key << " = ";
    if constexpr (std::is_same_v<T, double>) out << format_double(*value);
    else out << *value;
    out << '\n';
  };
  put("n", c.n);
  put("p", c.p);
  put("d", c.d);
  put("k", c.k);
  put("ell", c.ell);
  put("trials", c.trials);
  put("samples", c.samples);
  put("pairs", c.pairs);
  put("failure_prob", c.failure_prob);
  put("out_json", c.out_json);
  put("out_csv", c.out_csv);
  return out.str();
}

const std::vector<std::string_view>& preset_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, fn] : presets()) out.push_back(name);
    return out;
  }();
  return names;
}

PresetResult run_preset(const ExperimentConfig& config) {
  const auto it = presets().find(config.preset);
  if (it == presets().end()) throw InvalidArgument("unknown preset '" + config.preset + "'");
  auto result = it->second(config);
  result.summary["config"] = serialize_config(config);
  return result;
}

int run_preset_to_files(const ExperimentConfig& config, std::ostream& err) {
  PresetResult result;
  try {
    result = run_preset(config);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  auto write = [&err](const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
      err << "error: cannot write " << path << '\n';
      return false;
    }
    return true;
  };
  if (config.out_json && !write(*config.out_json, result.summary.dump(2) + "\n")) return kExitUsage;
  if (config.out_csv && !write(*config.out_csv, result.csv)) return kExitUsage;
  return result.passed ? kExitPass : kExitAssertionFailed;
}

std::string deterministic_dump(const json& summary) {
  json copy = summary;
  copy.erase("metadata");
  return copy.dump(2);
}

}  // namespace splicers
