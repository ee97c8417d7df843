#pragma once

#include <cstdint>

#include "gcnsi/dataset.hpp"
#include "gcnsi/nn.hpp"
#include "gcnsi/side_info.hpp"

namespace gcnsi {

enum class ClassifierKind { kMlp, kGcn };
enum class RecoveryInput { kFeatures, kNeighborhood, kBoth };

struct ClassifierParams {
  int epochs = 300;
  double learning_rate = 0.01;
  std::size_t hidden_size = 16;
  double l2 = 5e-5;
  std::uint64_t seed = 0;
  AdamConfig adam;  // learning_rate above takes precedence over adam.learning_rate
};

struct RecoveryConfig {
  ClassifierKind classifier = ClassifierKind::kGcn;
  RecoveryInput input = RecoveryInput::kNeighborhood;
  int r = 1;
  ClassifierParams train;

  void validate() const;
};

// Trains the configured classifier on the fixed training nodes and labels
// every node. Only the labels in `train` are read.
SideInfo extract_side_info(const Graph& graph, const Features& x, int k, const TrainLabels& train,
                           const RecoveryConfig& cfg);

SideInfo extract_side_info(const LabeledDataset& dataset, const RecoveryConfig& cfg);

// One-hidden-layer ReLU network with softmax output, trained with Adam on the
// rows in `train`, then evaluated on every row.
LabelVector mlp_classify(const DenseMatrix& features, int k, const TrainLabels& train,
                         const ClassifierParams& params);

// GCN over `graph` with the given features, trained on `train` only.
LabelVector gcn_classify(const Graph& graph, const Features& features, int k,
                         const TrainLabels& train, const ClassifierParams& params);

double side_info_accuracy(const SideInfo& y_s, std::span<const Label> y,
                          std::span<const std::size_t> eval_idx);

}  // namespace gcnsi
