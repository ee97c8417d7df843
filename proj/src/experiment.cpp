#include "gcnsi/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "gcnsi/synth.hpp"

namespace gcnsi {

namespace {

constexpr std::uint64_t kSideInfoStream = 2;
constexpr std::uint64_t kInitStream = 3;
constexpr std::uint64_t kRecoveryStream = 4;

double eval_accuracy(const LabelVector& pred, const LabelVector& y, const IndexSet& idx) {
  if (idx.empty()) return std::numeric_limits<double>::quiet_NaN();
  return accuracy(pred, y, idx);
}

RunMetrics train_loop(const LabeledDataset& dataset, const SideInfo& side_info,
                      const ExperimentConfig& cfg) {
  dataset.validate();
  cfg.validate();
  if (side_info.y_s.size() != dataset.num_nodes()) {
    throw std::invalid_argument("train: side information length does not match node count");
  }

  const GcnInput input = make_gcn_input(sym_normalize(dataset.graph), dataset.x);
  const TrainLabels fixed = dataset.train_labels();
  GcnModel model = GcnModel::create(input.feature_dim(), cfg.hidden_size,
                                    static_cast<std::size_t>(dataset.k),
                                    derive_seed(cfg.seed, kInitStream));
  DecisionState state;
  AdamConfig adam = cfg.adam;

  RunMetrics metrics;
  metrics.seed = cfg.seed;
  metrics.epochs.reserve(static_cast<std::size_t>(cfg.max_epochs));
  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    const GcnOutput out = gcn_forward(model, input);
    const DecisionOutput dec = decide(out, side_info, fixed, epoch, cfg.decision, state);
    if (dec.fell_back) ++metrics.fallback_epochs;

    EpochMetrics em;
    em.epoch = epoch;
    em.phase = state.current_phase;
    em.train_acc = dec.train_accuracy;
    em.val_acc = eval_accuracy(out.y_hat, dataset.y, dataset.split.validation);
    em.test_acc = eval_accuracy(out.y_hat, dataset.y, dataset.split.test);
    em.s_size = dec.s.size();

    adam.learning_rate = epoch < cfg.decision.e_u ? cfg.lr_phase1 : cfg.lr_phase2;
    em.loss = gcn_step(model, input, out, dec.y_s_hat, dec.s, adam, cfg.l2_factor);
    if (!std::isfinite(em.loss)) {
      throw std::runtime_error("train: non-finite loss at epoch " + std::to_string(epoch) +
                               " (|S| = " + std::to_string(em.s_size) + ")");
    }
    metrics.epochs.push_back(em);
  }

  if (!metrics.epochs.empty()) {
    metrics.final_test_acc = metrics.epochs.back().test_acc;
    metrics.best_epoch = static_cast<int>(metrics.epochs.size()) - 1;
    metrics.best_val_acc = metrics.epochs.back().val_acc;
    if (!dataset.split.validation.empty()) {
      // Latest epoch among those with the highest validation accuracy.
      double best = -1.0;
      for (const auto& em : metrics.epochs) {
        if (em.val_acc >= best) {
          best = em.val_acc;
          metrics.best_epoch = em.epoch;
        }
      }
      metrics.best_val_acc = best;
    }
    metrics.test_acc_at_best = metrics.epochs[static_cast<std::size_t>(metrics.best_epoch)].test_acc;
  }
  return metrics;
}

}  // namespace

void LabeledDataset::validate() const {
  const std::size_t n = graph.num_nodes();
  if (k < 2) throw std::invalid_argument("dataset: class count must be >= 2");
  if (y.size() != n) throw std::invalid_argument("dataset: label vector length != node count");
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] < 0 || y[i] >= k) {
      throw std::invalid_argument("dataset: label of node " + std::to_string(i) + " out of range");
    }
  }
  if (x.rows() != n) throw std::invalid_argument("dataset: feature rows != node count");
  std::vector<char> seen(n, 0);
  for (const IndexSet* part : {&split.train, &split.validation, &split.test}) {
    for (std::size_t i : *part) {
      if (i >= n) throw std::invalid_argument("dataset: split index out of range");
      if (seen[i]) throw std::invalid_argument("dataset: split sets overlap at node " + std::to_string(i));
      seen[i] = 1;
    }
  }
  if (split.train.empty()) throw std::invalid_argument("dataset: empty training split");
}

ExperimentConfig ExperimentConfig::from_preset(std::string_view name) {
  ExperimentConfig c;
  c.preset = std::string(name);
  if (name == "ksbm") {
    c.decision = {0.50, 0.50, 150};
    c.hidden_size = 16;
    c.max_epochs = 300;
    c.l2_factor = 5e-5;
    c.lr_phase1 = 0.01;
    c.lr_phase2 = 0.01;
    c.recovery.classifier = ClassifierKind::kGcn;
    c.recovery.input = RecoveryInput::kNeighborhood;
    c.recovery.r = 1;
  } else if (name == "cora") {
    c.decision = {0.55, 0.99, 50};
    c.hidden_size = 128;
    c.max_epochs = 250;
    c.l2_factor = 8e-5;
    c.lr_phase1 = 0.01;
    c.lr_phase2 = 0.005;
    c.recovery.classifier = ClassifierKind::kMlp;
    c.recovery.input = RecoveryInput::kNeighborhood;
    c.recovery.r = 4;
  } else if (name == "citeseer") {
    c.decision = {0.80, 0.80, 80};
    c.hidden_size = 128;
    c.max_epochs = 200;
    c.l2_factor = 8e-5;
    c.lr_phase1 = 0.01;
    c.lr_phase2 = 0.05;
    c.recovery.classifier = ClassifierKind::kMlp;
    c.recovery.input = RecoveryInput::kFeatures;
  } else if (name == "pubmed") {
    c.decision = {0.70, 1.00, 80};
    c.hidden_size = 64;
    c.max_epochs = 200;
    c.l2_factor = 4e-4;
    c.lr_phase1 = 0.01;
    c.lr_phase2 = 0.002;
    c.recovery.classifier = ClassifierKind::kMlp;
    c.recovery.input = RecoveryInput::kNeighborhood;
    c.recovery.r = 1;
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "' (expected ksbm, cora, citeseer or pubmed)");
  }
  c.recovery.train.epochs = c.max_epochs;
  c.recovery.train.learning_rate = c.lr_phase1;
  c.recovery.train.hidden_size = c.hidden_size;
  c.recovery.train.l2 = c.l2_factor;
  return c;
}

void ExperimentConfig::validate() const {
  decision.validate();
  recovery.validate();
  if (max_epochs < 1) throw std::invalid_argument("config: max_epochs must be >= 1");
  if (hidden_size < 1) throw std::invalid_argument("config: hidden_size must be >= 1");
  if (!(lr_phase1 >= 0.0) || !(lr_phase2 >= 0.0)) {
    throw std::invalid_argument("config: learning rates must be non-negative");
  }
  if (!(l2_factor >= 0.0)) throw std::invalid_argument("config: l2_factor must be non-negative");
  if (runs < 1) throw std::invalid_argument("config: runs must be >= 1");
  if (alpha && !(*alpha >= 0.0 && *alpha <= 1.0)) {
    throw std::invalid_argument("config: alpha must lie in [0, 1]");
  }
}

std::vector<std::string> ExperimentConfig::warnings() const {
  std::vector<std::string> out;
  if (max_epochs <= decision.e_u) {
    out.push_back("max_epochs (" + std::to_string(max_epochs) + ") <= e_u (" +
                  std::to_string(decision.e_u) + "): phase 2 never starts");
  }
  return out;
}

NodeSplit split_sample(std::span<const Label> y, int k, std::uint64_t seed,
                       const SplitSizes& sizes) {
  if (k < 2) throw std::invalid_argument("split_sample: k must be >= 2");
  const std::size_t n = y.size();
  const std::size_t need = sizes.per_class * static_cast<std::size_t>(k) + sizes.validation + sizes.test;
  if (n < need) {
    throw std::invalid_argument("split_sample: " + std::to_string(n) + " nodes but the split needs " +
                                std::to_string(need));
  }
  std::vector<IndexSet> by_class(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < n; ++i) {
    if (y[i] < 0 || y[i] >= k) throw std::invalid_argument("split_sample: label out of range");
    by_class[static_cast<std::size_t>(y[i])].push_back(i);
  }

  Rng rng(seed);
  NodeSplit split;
  std::vector<char> taken(n, 0);
  for (int c = 0; c < k; ++c) {
    auto& members = by_class[static_cast<std::size_t>(c)];
    if (members.size() < sizes.per_class) {
      throw std::invalid_argument("split_sample: class " + std::to_string(c) + " has only " +
                                  std::to_string(members.size()) + " members");
    }
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t p = 0; p < sizes.per_class; ++p) {
      split.train.push_back(members[p]);
      taken[members[p]] = 1;
    }
  }
  IndexSet rest;
  for (std::size_t i = 0; i < n; ++i) {
    if (!taken[i]) rest.push_back(i);
  }
  std::shuffle(rest.begin(), rest.end(), rng);
  split.validation.assign(rest.begin(), rest.begin() + static_cast<std::ptrdiff_t>(sizes.validation));
  split.test.assign(rest.begin() + static_cast<std::ptrdiff_t>(sizes.validation),
                    rest.begin() + static_cast<std::ptrdiff_t>(sizes.validation + sizes.test));
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.validation.begin(), split.validation.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

Features embed_side_info(const Features& x, const SideInfo& y_s, int k) {
  if (y_s.y_s.size() != x.rows()) {
    throw std::invalid_argument("embed_side_info: side information covers " +
                                std::to_string(y_s.y_s.size()) + " nodes, features " +
                                std::to_string(x.rows()));
  }
  DenseMatrix hot = one_hot(y_s.y_s, static_cast<std::size_t>(k));
  if (x.is_identity()) return Features(std::move(hot));
  return Features(hconcat(x.dense(), hot));
}

RunMetrics train_gcn_si(const LabeledDataset& dataset, const SideInfo& side_info,
                        const ExperimentConfig& cfg) {
  return train_loop(dataset, side_info, cfg);
}

RunMetrics train_gcn_baseline(const LabeledDataset& dataset, const ExperimentConfig& cfg) {
  ExperimentConfig plain = cfg;
  plain.decision.e_u = std::max(cfg.max_epochs, cfg.decision.e_u);
  // Never read: with phase 2 unreachable only fixed training nodes enter the
  // loss, and their targets are the true labels.
  const SideInfo placeholder{LabelVector(dataset.num_nodes(), 0), SideInfoSource::kExternal};
  return train_loop(dataset, placeholder, plain);
}

RunMetrics run_once(const LabeledDataset& dataset, const ExperimentConfig& cfg, bool baseline,
                    const std::optional<SideInfo>& external_si) {
  std::optional<SideInfo> si = external_si;
  if (!si && cfg.alpha) {
    si = noisy_side_info(dataset.y, dataset.k, *cfg.alpha, derive_seed(cfg.seed, kSideInfoStream));
  }
  if (!si && (!baseline || cfg.embed_si)) {
    RecoveryConfig rc = cfg.recovery;
    rc.train.seed = derive_seed(cfg.seed ^ cfg.recovery.train.seed, kRecoveryStream);
    si = extract_side_info(dataset, rc);
  }

  const LabeledDataset* data = &dataset;
  LabeledDataset embedded;
  if (cfg.embed_si) {
    embedded = dataset;
    embedded.x = embed_side_info(dataset.x, *si, dataset.k);
    data = &embedded;
  }

  RunMetrics m = baseline ? train_gcn_baseline(*data, cfg) : train_gcn_si(*data, *si, cfg);
  if (si && !dataset.split.test.empty()) {
    m.side_info_acc = side_info_accuracy(*si, dataset.y, dataset.split.test);
  }
  return m;
}

Summary summarize(std::vector<RunMetrics> runs, ModelSelection selection) {
  Summary s;
  if (runs.empty()) return s;
  std::vector<double> acc;
  acc.reserve(runs.size());
  for (const auto& r : runs) acc.push_back(r.test_accuracy(selection));
  const double count = static_cast<double>(acc.size());
  s.mean = std::accumulate(acc.begin(), acc.end(), 0.0) / count;
  s.min = *std::min_element(acc.begin(), acc.end());
  s.max = *std::max_element(acc.begin(), acc.end());
  if (acc.size() > 1) {
    double ss = 0.0;
    for (double a : acc) ss += (a - s.mean) * (a - s.mean);
    s.stddev = std::sqrt(ss / (count - 1.0));
  }
  double si_total = 0.0;
  std::size_t si_count = 0;
  for (const auto& r : runs) {
    if (r.side_info_acc) {
      si_total += *r.side_info_acc;
      ++si_count;
    }
  }
  if (si_count > 0) s.side_info_mean = si_total / static_cast<double>(si_count);
  s.runs = std::move(runs);
  return s;
}

Summary aggregate_runs(const ExperimentConfig& cfg,
                       const std::function<RunMetrics(std::uint64_t seed)>& run_one,
                       unsigned workers) {
  if (cfg.runs < 1) throw std::invalid_argument("aggregate_runs: runs must be >= 1");
  const auto total = static_cast<std::size_t>(cfg.runs);
  std::vector<RunMetrics> results(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t r = next++; r < total; r = next++) {
      try {
        results[r] = run_one(cfg.seed + r);
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(total));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return summarize(std::move(results), cfg.selection);
}

}  // namespace gcnsi
