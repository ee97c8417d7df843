// gcnsi: generate k-SBM datasets, extract side information, train GCN / GCN-SI,
// and merge per-epoch metrics into plot data.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gcnsi/experiment.hpp"
#include "gcnsi/io.hpp"
#include "gcnsi/synth.hpp"

namespace fs = std::filesystem;
using namespace gcnsi;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerateArgs {
  std::size_t n = 2000;
  int k = 3;
  std::optional<double> p, q;
  bool auto_params = false;
  std::uint64_t seed = 0;
  bool with_split = false;
  SplitSizes sizes;
  std::string out;
};

struct ExtractArgs {
  std::string dataset;
  std::string classifier = "gcn";
  std::string input = "neighborhood";
  int r = 1;
  int epochs = 300;
  double lr = 0.01;
  std::size_t hidden = 16;
  double l2 = 5e-5;
  std::uint64_t seed = 0;
  bool force = false;
  std::string out;
};

struct TrainArgs {
  std::string dataset;
  std::string sideinfo;
  std::optional<double> alpha;
  std::string config;
  std::string preset;
  bool baseline = false;
  bool embed_si = false;
  std::optional<int> runs;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::string out_dir;
};

struct CurvesArgs {
  std::vector<std::string> inputs;
  std::string out;
};

void write_file(const std::string& path, const std::string& body) { io::save_text(path, body); }

int cmd_generate(const GenerateArgs& a) {
  if (a.k < 2) throw UsageError("--k must be at least 2");
  SbmParams params = sbm_auto_params(a.n, a.k, a.seed);
  if (!a.auto_params && (!a.p || !a.q)) throw UsageError("give both --p and --q, or --auto");
  if (a.p) params.p = *a.p;
  if (a.q) params.q = *a.q;
  try {
    params.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const SbmSample s = sbm_generate(params);
  LabeledDataset d;
  d.graph = s.graph;
  d.y = s.labels;
  d.k = a.k;
  d.x = Features::identity(a.n);
  if (a.with_split) d.split = split_sample(d.y, d.k, derive_seed(a.seed, 11), a.sizes);
  std::ostringstream os;
  io::write_dataset(os, d);
  write_file(a.out, os.str());
  std::cerr << "wrote " << a.out << ": n=" << a.n << " k=" << a.k << " edges=" << d.graph.num_edges()
            << " p=" << params.p << " q=" << params.q << '\n';
  return 0;
}

RecoveryConfig recovery_from(const ExtractArgs& a) {
  RecoveryConfig cfg;
  if (a.classifier == "gcn") {
    cfg.classifier = ClassifierKind::kGcn;
  } else if (a.classifier == "mlp") {
    cfg.classifier = ClassifierKind::kMlp;
  } else {
    throw UsageError("--classifier must be gcn or mlp");
  }
  if (a.input == "feature") {
    cfg.input = RecoveryInput::kFeatures;
  } else if (a.input == "neighborhood") {
    cfg.input = RecoveryInput::kNeighborhood;
  } else if (a.input == "both") {
    cfg.input = RecoveryInput::kBoth;
  } else {
    throw UsageError("--input must be feature, neighborhood or both");
  }
  cfg.r = a.r;
  cfg.train.epochs = a.epochs;
  cfg.train.learning_rate = a.lr;
  cfg.train.hidden_size = a.hidden;
  cfg.train.l2 = a.l2;
  cfg.train.seed = a.seed;
  return cfg;
}

int cmd_extract(const ExtractArgs& a) {
  const RecoveryConfig cfg = recovery_from(a);
  const LabeledDataset d = io::load_dataset(a.dataset);
  d.validate();
  if (d.split.train.empty()) {
    throw UsageError(a.dataset + ": dataset has no training split (generate with --split)");
  }
  if (cfg.input == RecoveryInput::kFeatures && d.x.is_identity() && !a.force) {
    throw UsageError("identity features carry no signal; use --input neighborhood or pass --force");
  }
  const SideInfo si = extract_side_info(d, cfg);
  std::ostringstream os;
  io::write_side_info(os, si, d.k);
  write_file(a.out, os.str());
  if (!d.split.validation.empty()) {
    std::cerr << "side information accuracy on validation split: "
              << side_info_accuracy(si, d.y, d.split.validation) << '\n';
  }
  std::cerr << "wrote " << a.out << " (source " << to_string(si.source) << ")\n";
  return 0;
}

int cmd_train(const TrainArgs& a) {
  if (!a.sideinfo.empty() && a.alpha) throw UsageError("--sideinfo and --alpha are mutually exclusive");
  if (!a.config.empty() && !a.preset.empty()) throw UsageError("--config and --preset are mutually exclusive");

  ExperimentConfig cfg;
  if (!a.config.empty()) {
    cfg = io::load_config(a.config);
  } else if (!a.preset.empty()) {
    try {
      cfg = ExperimentConfig::from_preset(a.preset);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (a.alpha) cfg.alpha = a.alpha;
  if (!a.sideinfo.empty()) cfg.alpha.reset();
  if (a.embed_si) cfg.embed_si = true;
  if (a.runs) cfg.runs = *a.runs;
  if (a.seed) cfg.seed = *a.seed;
  cfg.validate();
  for (const auto& w : cfg.warnings()) std::cerr << "warning: " << w << '\n';

  const LabeledDataset base = io::load_dataset(a.dataset);
  base.validate();
  std::optional<SideInfo> external;
  if (!a.sideinfo.empty()) {
    int k = 0;
    external = io::load_side_info(a.sideinfo, &k);
    if (k != base.k || external->y_s.size() != base.num_nodes()) {
      throw UsageError(a.sideinfo + ": side information shape does not match the dataset");
    }
  }

  const bool has_split = !base.split.train.empty();
  auto run_one = [&](std::uint64_t seed) {
    ExperimentConfig run_cfg = cfg;
    run_cfg.seed = seed;
    if (has_split) return run_once(base, run_cfg, a.baseline, external);
    LabeledDataset d = base;
    d.split = split_sample(d.y, d.k, derive_seed(seed, 11));
    return run_once(d, run_cfg, a.baseline, external);
  };
  const unsigned workers = a.threads ? a.threads : std::max(1u, std::thread::hardware_concurrency());
  const Summary summary = aggregate_runs(cfg, run_one, workers);

  fs::path out_dir = a.out_dir;
  if (out_dir.empty()) {
    const char* env = std::getenv("GCNSI_OUT_DIR");
    out_dir = env && *env ? env : ".";
  }
  fs::create_directories(out_dir);
  for (std::size_t r = 0; r < summary.runs.size(); ++r) {
    std::ostringstream os;
    io::write_metrics_csv(os, summary.runs[r]);
    write_file((out_dir / ("metrics_run" + std::to_string(r) + ".csv")).string(), os.str());
  }
  write_file((out_dir / "summary.json").string(), io::summary_json(summary, cfg, a.baseline));

  std::cout << (a.baseline ? "gcn" : "gcn-si") << " test accuracy " << summary.mean << " +- "
            << summary.stddev << " over " << summary.runs.size() << " runs";
  if (summary.side_info_mean) std::cout << " (side information " << *summary.side_info_mean << ")";
  std::cout << '\n';
  return 0;
}

int cmd_curves(const CurvesArgs& a) {
  std::vector<std::vector<EpochMetrics>> runs;
  for (const auto& path : a.inputs) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
    runs.push_back(io::read_metrics_csv(in, path));
  }
  std::ostringstream os;
  io::write_curves_csv(os, runs);
  write_file(a.out, os.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GCN with side information: data generation, extraction, training"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "sample a k-SBM dataset");
  g->add_option("--n", gen.n, "number of nodes")->check(CLI::PositiveNumber);
  g->add_option("--k", gen.k, "number of classes");
  g->add_option("--p", gen.p, "intra-class edge probability");
  g->add_option("--q", gen.q, "inter-class edge probability");
  g->add_flag("--auto", gen.auto_params, "p = 5 ln n / n, q = ln n / n");
  g->add_option("--seed", gen.seed);
  g->add_flag("--split", gen.with_split, "also write a 20-per-class / 500 / 1000 split");
  g->add_option("--train-per-class", gen.sizes.per_class)->capture_default_str();
  g->add_option("--val", gen.sizes.validation, "validation nodes")->capture_default_str();
  g->add_option("--test", gen.sizes.test, "test nodes")->capture_default_str();
  g->add_option("--out", gen.out)->required();

  ExtractArgs ex;
  auto* e = app.add_subcommand("extract", "recover side information with a classifier");
  e->add_option("--dataset", ex.dataset)->required();
  e->add_option("--classifier", ex.classifier, "gcn or mlp")->capture_default_str();
  e->add_option("--input", ex.input, "feature, neighborhood or both")->capture_default_str();
  e->add_option("--r", ex.r, "neighborhood radius")->capture_default_str();
  e->add_option("--epochs", ex.epochs)->capture_default_str();
  e->add_option("--lr", ex.lr)->capture_default_str();
  e->add_option("--hidden", ex.hidden)->capture_default_str();
  e->add_option("--l2", ex.l2)->capture_default_str();
  e->add_option("--seed", ex.seed);
  e->add_flag("--force", ex.force, "allow feature input on featureless datasets");
  e->add_option("--out", ex.out)->required();

  TrainArgs tr;
  auto* t = app.add_subcommand("train", "train GCN-SI or the baseline GCN over several seeds");
  t->add_option("--dataset", tr.dataset)->required();
  t->add_option("--sideinfo", tr.sideinfo, "side-information file");
  t->add_option("--alpha", tr.alpha, "synthetic side information quality");
  t->add_option("--config", tr.config, "key = value configuration file");
  t->add_option("--preset", tr.preset, "ksbm, cora, citeseer or pubmed");
  t->add_flag("--baseline", tr.baseline, "conventional GCN");
  t->add_flag("--embed-si", tr.embed_si, "append onehot(side information) to the features");
  t->add_option("--runs", tr.runs);
  t->add_option("--seed", tr.seed, "seed of the first run");
  t->add_option("--threads", tr.threads, "worker threads (default: all cores)");
  t->add_option("--out-dir", tr.out_dir, "output directory (default: $GCNSI_OUT_DIR or .)");

  CurvesArgs cv;
  auto* c = app.add_subcommand("curves", "merge metrics CSVs into long-format plot data");
  c->add_option("inputs", cv.inputs)->required();
  c->add_option("--out", cv.out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    // --help prints to stdout with exit 0; real errors go to stderr.
    return err.get_exit_code() == 0 ? app.exit(err) : app.exit(err, std::cerr, std::cerr);
  }

  try {
    if (*g) return cmd_generate(gen);
    if (*e) return cmd_extract(ex);
    if (*t) return cmd_train(tr);
    if (*c) return cmd_curves(cv);
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.what() << '\n';
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 1;
}
