#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <CLI11.hpp>

#include "decwa/decwa.hpp"

namespace decwa::cli {

namespace {

std::string format_number(double value) {
  char buffer[64];
  const auto written =
      std::to_chars(buffer, buffer + sizeof buffer, value, std::chars_format::general, 6);
  return std::string(buffer, written.ptr);
}

double parse_number(std::string_view text, std::string_view what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ConfigError("invalid number '" + std::string(text) + "' in " + std::string(what));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

// "A:B", "A:B:log" or "A:B:linear".
RealRange parse_real_range(std::string_view text, std::string_view flag, Scale default_scale) {
  const auto parts = split(text, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    throw ConfigError(std::string(flag) + " expects A:B[:log|:linear], got '" +
                      std::string(text) + "'");
  }
  RealRange range{parse_number(parts[0], flag), parse_number(parts[1], flag), default_scale};
  if (parts.size() == 3) {
    if (parts[2] == "log") {
      range.scale = Scale::log;
    } else if (parts[2] == "linear") {
      range.scale = Scale::linear;
    } else {
      throw ConfigError(std::string(flag) + ": unknown scale '" + std::string(parts[2]) + "'");
    }
  }
  return range;
}

IntRange parse_int_range(std::string_view text) {
  const auto parts = split(text, ':');
  IntRange range;
  const auto parse = [&](std::string_view part, std::size_t& value) {
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty()) {
      throw ConfigError("--k-range expects A:B with non-negative integers, got '" +
                        std::string(text) + "'");
    }
  };
  if (parts.size() != 2) {
    throw ConfigError("--k-range expects A:B, got '" + std::string(text) + "'");
  }
  parse(parts[0], range.lo);
  parse(parts[1], range.hi);
  return range;
}

std::string flag_line(const DecwaParams& p) {
  std::ostringstream line;
  line << "--metric " << to_string(p.metric) << " --k " << p.k << " --bandwidth "
       << format_number(p.bandwidth) << " --kernel " << to_string(p.kernel) << " --lambda "
       << format_number(p.lambda) << " --alpha " << format_number(p.alpha) << " --grid-size "
       << p.grid_size << " --min-cluster-size " << p.min_cluster_size << " --agglomeration "
       << to_string(p.agglomeration) << " --seed " << p.seed;
  return line.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  out.close();
  if (!out) throw DataError("cannot write '" + path + "'");
}

// Raw flag values; enumerations are resolved after parsing so that errors
// flow through the library's ConfigError.
struct Options {
  std::string input;
  bool header = false;
  std::string label_column;
  std::string metric = "euclidean";
  std::size_t k = DecwaParams{}.k;
  double bandwidth = DecwaParams{}.bandwidth;
  std::string kernel = "gaussian";
  double lambda = DecwaParams{}.lambda;
  double alpha = DecwaParams{}.alpha;
  std::size_t grid_size = kDefaultGridSize;
  std::size_t min_cluster_size = DecwaParams{}.min_cluster_size;
  std::string agglomeration = "single-pass";
  std::uint64_t seed = 0;
  std::string output;
  std::string emit_density;
  std::string outlier_mode = "one-cluster";

  std::size_t iterations = 1000;
  std::string best_params;
  std::string k_range = "2:30";
  std::string bandwidth_range = "0.001:10:log";
  std::string lambda_range = "0.001:100:log";
  std::string alpha_range = "0.0001:10:log";
  std::string kernels = "gaussian";

  std::string predicted;
  std::string truth;

  DecwaParams params() const {
    DecwaParams p;
    p.metric = parse_metric(metric);
    p.k = k;
    p.bandwidth = bandwidth;
    p.kernel = parse_kernel(kernel);
    p.lambda = lambda;
    p.alpha = alpha;
    p.grid_size = grid_size;
    p.min_cluster_size = min_cluster_size;
    p.agglomeration = parse_agglomeration(agglomeration);
    p.seed = seed;
    return p;
  }

  SearchSpace space() const {
    SearchSpace s;
    s.fixed = params();
    s.k = parse_int_range(k_range);
    s.bandwidth = parse_real_range(bandwidth_range, "--bandwidth-range", Scale::linear);
    s.lambda = parse_real_range(lambda_range, "--lambda-range", Scale::linear);
    s.alpha = parse_real_range(alpha_range, "--alpha-range", Scale::linear);
    s.kernels.clear();
    for (auto name : split(kernels, ',')) s.kernels.push_back(parse_kernel(name));
    return s;
  }

  Dataset dataset() const {
    std::optional<LabelColumn> column;
    if (!label_column.empty()) column = LabelColumn::parse(label_column);
    return load_dataset(input, header, column);
  }
};

void add_dataset_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--input", o.input, "CSV dataset")->required();
  cmd.add_flag("--header", o.header, "First line is a header");
  cmd.add_option("--label-column", o.label_column,
                 "Ground-truth column: first, last or zero-based index");
}

void add_fixed_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--metric", o.metric, "euclidean|manhattan|canberra|bray-curtis|cosine")
      ->capture_default_str();
  cmd.add_option("--grid-size", o.grid_size, "Density grid points")->capture_default_str();
  cmd.add_option("--min-cluster-size", o.min_cluster_size,
                 "Smaller final clusters become outliers")
      ->capture_default_str();
  cmd.add_option("--agglomeration", o.agglomeration, "single-pass|fixpoint")
      ->capture_default_str();
  cmd.add_option("--seed", o.seed, "Seed recorded with results")->capture_default_str();
}

void add_model_flags(CLI::App& cmd, Options& o) {
  cmd.add_option("--k", o.k, "Nearest neighbors per point")->capture_default_str();
  cmd.add_option("--bandwidth", o.bandwidth, "KDE bandwidth h")->capture_default_str();
  cmd.add_option("--kernel", o.kernel, "gaussian|uniform|triangular")->capture_default_str();
  cmd.add_option("--lambda", o.lambda, "Spatial merge threshold")->capture_default_str();
  cmd.add_option("--alpha", o.alpha, "Wasserstein merge threshold")->capture_default_str();
}

std::string join_thresholds(const std::vector<double>& thresholds) {
  std::string text;
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (i > 0) text += ' ';
    text += format_number(thresholds[i]);
  }
  return text.empty() ? "(none)" : text;
}

int command_fit(const Options& o, std::ostream& out) {
  const DecwaParams params = o.params();
  out << "params: " << flag_line(params) << '\n';
  const Dataset data = o.dataset();
  const ClusteringResult result = fit(data.points, params);

  std::string labels;
  for (int label : result.labels) labels += std::to_string(label) + '\n';
  write_file(o.output, labels);
  if (!o.emit_density.empty()) {
    const DensityStage stage = estimate_forest_density(data.points, params);
    std::ostringstream curve;
    write_curve(curve, stage.curve);
    write_file(o.emit_density, curve.str());
  }

  const auto& d = result.diagnostics;
  out << "points: " << result.labels.size() << '\n'
      << "clusters: " << result.cluster_count << '\n'
      << "outlier_ratio: " << format_number(result.outlier_ratio) << '\n'
      << "thresholds: " << join_thresholds(d.thresholds) << '\n'
      << "extrema: " << d.extrema_count << '\n'
      << "forest_components: " << d.forest_component_count << '\n'
      << "subclusters_divided: " << d.subclusters_after_division << '\n'
      << "subclusters_agglomerated: " << d.subclusters_after_agglomeration << '\n'
      << "merges: " << d.merges << '\n';
  if (data.labels) {
    out << "ari: "
        << format_number(adjusted_rand_index(result.labels, *data.labels,
                                             parse_outlier_mode(o.outlier_mode)))
        << '\n';
  }
  return kExitOk;
}

int command_density(const Options& o, std::ostream& out) {
  const DecwaParams params = o.params();
  out << "params: " << flag_line(params) << '\n';
  const Dataset data = o.dataset();
  const DensityStage stage = estimate_forest_density(data.points, params);
  std::ostringstream curve;
  write_curve(curve, stage.curve);
  write_file(o.output, curve.str());
  const auto extrema = locate_extrema(stage.curve);
  out << "edges: " << stage.distances.size() << '\n'
      << "extrema: " << extrema.size() << '\n'
      << "thresholds: " << join_thresholds(derive_thresholds(extrema)) << '\n';
  return kExitOk;
}

int command_tune(const Options& o, std::ostream& out) {
  const SearchSpace space = o.space();
  const OutlierMode mode = parse_outlier_mode(o.outlier_mode);
  space.validate();
  out << "fixed: --metric " << to_string(space.fixed.metric) << " --grid-size "
      << space.fixed.grid_size << " --min-cluster-size " << space.fixed.min_cluster_size
      << " --agglomeration " << to_string(space.fixed.agglomeration) << " --seed "
      << space.fixed.seed << '\n'
      << "space: --k-range " << o.k_range << " --bandwidth-range " << o.bandwidth_range
      << " --lambda-range " << o.lambda_range << " --alpha-range " << o.alpha_range
      << " --kernels " << o.kernels << " --iterations " << o.iterations << " --outlier-mode "
      << to_string(mode) << '\n';

  if (o.label_column.empty()) throw ConfigError("tune requires --label-column");
  const Dataset data = o.dataset();
  SearchOptions options;
  options.outlier_mode = mode;
  const SearchResult result =
      random_search(data.points, *data.labels, space, o.iterations, space.fixed.seed, options);

  std::string history =
      "trial_index,k,bandwidth,kernel,lambda,alpha,metric,grid_size,min_cluster_size,"
      "agglomeration,seed,ari,outlier_ratio\n";
  for (const auto& t : result.history) {
    const auto& p = t.params;
    history += std::to_string(t.trial_index) + ',' + std::to_string(p.k) + ',' +
               format_number(p.bandwidth) + ',' + std::string(to_string(p.kernel)) + ',' +
               format_number(p.lambda) + ',' + format_number(p.alpha) + ',' +
               std::string(to_string(p.metric)) + ',' + std::to_string(p.grid_size) + ',' +
               std::to_string(p.min_cluster_size) + ',' +
               std::string(to_string(p.agglomeration)) + ',' + std::to_string(p.seed) + ',' +
               format_number(t.ari) + ',' + format_number(t.outlier_ratio) + '\n';
  }
  write_file(o.output, history);
  const std::string best_path = o.best_params.empty() ? o.output + ".best" : o.best_params;
  write_file(best_path, flag_line(result.best.params) + '\n');

  out << "best_trial: " << result.best.trial_index << '\n'
      << "best_ari: " << format_number(result.best.ari) << '\n'
      << "best_outlier_ratio: " << format_number(result.best.outlier_ratio) << '\n'
      << "best_params: " << flag_line(result.best.params) << '\n';
  return kExitOk;
}

int command_eval(const Options& o, std::ostream& out) {
  const OutlierMode mode = parse_outlier_mode(o.outlier_mode);
  const std::vector<int> predicted = load_labels(o.predicted);
  std::vector<int> truth;
  if (o.label_column.empty()) {
    truth = load_labels(o.truth);
  } else {
    truth = *load_dataset(o.truth, o.header, LabelColumn::parse(o.label_column)).labels;
  }
  if (predicted.size() != truth.size()) {
    throw ConfigError("predicted has " + std::to_string(predicted.size()) +
                      " labels but truth has " + std::to_string(truth.size()));
  }
  out << "outlier_mode: " << to_string(mode) << '\n'
      << "points: " << predicted.size() << '\n'
      << "ari: " << format_number(adjusted_rand_index(predicted, truth, mode)) << '\n'
      << "outlier_ratio: " << format_number(outlier_ratio(predicted)) << '\n';
  return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Density-based clustering with Wasserstein-guided agglomeration", "decwa"};
  app.require_subcommand(1);
  Options o;

  auto* fit_cmd = app.add_subcommand("fit", "Cluster a dataset and write one label per row");
  add_dataset_flags(*fit_cmd, o);
  add_fixed_flags(*fit_cmd, o);
  add_model_flags(*fit_cmd, o);
  fit_cmd->add_option("--output", o.output, "Labels file")->required();
  fit_cmd->add_option("--emit-density", o.emit_density, "Also write the edge-distance density");
  fit_cmd->add_option("--outlier-mode", o.outlier_mode, "one-cluster|singletons")
      ->capture_default_str();

  auto* density_cmd =
      app.add_subcommand("density", "Write the spanning-forest edge-distance density curve");
  add_dataset_flags(*density_cmd, o);
  add_fixed_flags(*density_cmd, o);
  add_model_flags(*density_cmd, o);
  density_cmd->add_option("--output", o.output, "Curve file (position,value)")->required();

  auto* tune_cmd = app.add_subcommand("tune", "Random hyperparameter search against labels");
  add_dataset_flags(*tune_cmd, o);
  add_fixed_flags(*tune_cmd, o);
  tune_cmd->add_option("--output", o.output, "History CSV")->required();
  tune_cmd->add_option("--best-params", o.best_params, "Best flags file (default <output>.best)");
  tune_cmd->add_option("--iterations", o.iterations, "Number of trials")->capture_default_str();
  tune_cmd->add_option("--k-range", o.k_range, "A:B")->capture_default_str();
  tune_cmd->add_option("--bandwidth-range", o.bandwidth_range, "A:B[:log]")
      ->capture_default_str();
  tune_cmd->add_option("--lambda-range", o.lambda_range, "A:B[:log]")->capture_default_str();
  tune_cmd->add_option("--alpha-range", o.alpha_range, "A:B[:log]")->capture_default_str();
  tune_cmd->add_option("--kernels", o.kernels, "Comma-separated kernel list")
      ->capture_default_str();
  tune_cmd->add_option("--outlier-mode", o.outlier_mode, "one-cluster|singletons")
      ->capture_default_str();

  auto* eval_cmd = app.add_subcommand("eval", "Score predicted labels against ground truth");
  eval_cmd->add_option("--predicted", o.predicted, "Labels file")->required();
  eval_cmd->add_option("--truth", o.truth, "Labels file, or CSV with --label-column")
      ->required();
  eval_cmd->add_flag("--header", o.header, "Truth CSV has a header");
  eval_cmd->add_option("--label-column", o.label_column, "Label column of a truth CSV");
  eval_cmd->add_option("--outlier-mode", o.outlier_mode, "one-cluster|singletons")
      ->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e, out, err);
    return status == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fit_cmd->parsed()) return command_fit(o, out);
    if (density_cmd->parsed()) return command_density(o, out);
    if (tune_cmd->parsed()) return command_tune(o, out);
    return command_eval(o, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

} // namespace decwa::cli
