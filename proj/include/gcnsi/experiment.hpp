#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcnsi/dataset.hpp"
#include "gcnsi/decision.hpp"
#include "gcnsi/nn.hpp"
#include "gcnsi/recovery.hpp"

namespace gcnsi {

enum class ModelSelection { kBestValidation, kFinalEpoch };

struct ExperimentConfig {
  std::string preset = "ksbm";
  DecisionConfig decision;
  int max_epochs = 300;
  double lr_phase1 = 0.01;
  double lr_phase2 = 0.01;
  double l2_factor = 5e-5;
  std::size_t hidden_size = 16;
  AdamConfig adam;  // betas and epsilon; the rate comes from lr_phase1/lr_phase2
  RecoveryConfig recovery;
  std::optional<double> alpha;  // synthetic noisy-label side information
  bool embed_si = false;
  int runs = 10;
  std::uint64_t seed = 0;
  ModelSelection selection = ModelSelection::kBestValidation;

  // Hyperparameter columns for "ksbm", "cora", "citeseer" and "pubmed".
  static ExperimentConfig from_preset(std::string_view name);

  void validate() const;
  std::vector<std::string> warnings() const;
};

struct SplitSizes {
  std::size_t per_class = 20;
  std::size_t validation = 500;
  std::size_t test = 1000;
};

// Random disjoint split: `per_class` training nodes from every class, then
// validation and test nodes drawn from the remainder.
NodeSplit split_sample(std::span<const Label> y, int k, std::uint64_t seed,
                       const SplitSizes& sizes = {});

// Identity features are replaced by onehot(y_s); otherwise onehot(y_s) is
// appended to the right of X.
Features embed_side_info(const Features& x, const SideInfo& y_s, int k);

struct EpochMetrics {
  int epoch = 0;
  int phase = 1;
  double loss = 0.0;
  double train_acc = 0.0;
  double val_acc = 0.0;
  double test_acc = 0.0;
  std::size_t s_size = 0;

  friend bool operator==(const EpochMetrics&, const EpochMetrics&) = default;
};

struct RunMetrics {
  std::uint64_t seed = 0;
  std::vector<EpochMetrics> epochs;
  int best_epoch = -1;
  double best_val_acc = 0.0;
  double test_acc_at_best = 0.0;
  double final_test_acc = 0.0;
  std::optional<double> side_info_acc;  // on the test split, when side info was used
  int fallback_epochs = 0;              // phase-2 epochs with nothing to load

  double test_accuracy(ModelSelection selection) const {
    return selection == ModelSelection::kBestValidation ? test_acc_at_best : final_test_acc;
  }
};

// Full GCN-SI training. cfg.seed drives the weight initialization.
RunMetrics train_gcn_si(const LabeledDataset& dataset, const SideInfo& side_info,
                        const ExperimentConfig& cfg);

// Conventional GCN: S is the fixed training set in every epoch.
RunMetrics train_gcn_baseline(const LabeledDataset& dataset, const ExperimentConfig& cfg);

// Resolves the side information for one run (external, synthetic via
// cfg.alpha, or extracted via cfg.recovery), applies the optional feature
// embedding, and trains either the baseline or GCN-SI.
RunMetrics run_once(const LabeledDataset& dataset, const ExperimentConfig& cfg, bool baseline,
                    const std::optional<SideInfo>& external_si = std::nullopt);

struct Summary {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation, 0 for a single run
  double min = 0.0;
  double max = 0.0;
  std::optional<double> side_info_mean;
  std::vector<RunMetrics> runs;
};

Summary summarize(std::vector<RunMetrics> runs, ModelSelection selection);

// Runs `run_one(base_seed + r)` for r in [0, cfg.runs) on up to `workers`
// threads. Per-run results do not depend on the worker count.
Summary aggregate_runs(const ExperimentConfig& cfg,
                       const std::function<RunMetrics(std::uint64_t seed)>& run_one,
                       unsigned workers = 1);

}  // namespace gcnsi
