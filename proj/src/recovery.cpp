#include "gcnsi/recovery.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "gcnsi/gcn.hpp"

namespace gcnsi {

namespace {

LabelVector train_and_predict(const GcnInput& input, int k, const TrainLabels& train,
                              const ClassifierParams& params) {
  if (train.nodes.empty()) throw std::invalid_argument("classifier: empty training set");
  if (params.epochs < 0) throw std::invalid_argument("classifier: negative epoch count");
  if (params.hidden_size == 0) throw std::invalid_argument("classifier: hidden size must be >= 1");
  const std::size_t n = input.num_nodes();

  LabelVector targets(n, 0);
  for (std::size_t p = 0; p < train.size(); ++p) {
    if (train.labels[p] < 0 || train.labels[p] >= k) {
      throw std::invalid_argument("classifier: training label out of range at node " +
                                  std::to_string(train.nodes[p]));
    }
    targets[train.nodes[p]] = train.labels[p];
  }

  GcnModel model = GcnModel::create(input.feature_dim(), params.hidden_size,
                                    static_cast<std::size_t>(k), params.seed);
  AdamConfig adam = params.adam;
  adam.learning_rate = params.learning_rate;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    const double loss = gcn_train_epoch(model, input, targets, train.nodes, adam, params.l2);
    if (!std::isfinite(loss)) {
      throw std::runtime_error("classifier: non-finite loss at epoch " + std::to_string(epoch));
    }
  }
  return gcn_forward(model, input).y_hat;
}

}  // namespace

void RecoveryConfig::validate() const {
  if (input != RecoveryInput::kFeatures && r < 1) {
    throw std::invalid_argument("recovery: radius must be >= 1 for neighborhood input");
  }
}

LabelVector mlp_classify(const DenseMatrix& features, int k, const TrainLabels& train,
                         const ClassifierParams& params) {
  if (features.cols() == 0) throw std::invalid_argument("mlp_classify: zero feature columns");
  if (k < 2) throw std::invalid_argument("mlp_classify: k must be >= 2");
  // An identity propagation turns the two-layer GCN into a plain MLP.
  const GcnInput input =
      make_gcn_input(NormalizedAdjacency::identity(features.rows()), Features(features));
  return train_and_predict(input, k, train, params);
}

LabelVector gcn_classify(const Graph& graph, const Features& features, int k,
                         const TrainLabels& train, const ClassifierParams& params) {
  if (features.cols() == 0) throw std::invalid_argument("gcn_classify: zero feature columns");
  if (k < 2) throw std::invalid_argument("gcn_classify: k must be >= 2");
  return train_and_predict(make_gcn_input(sym_normalize(graph), features), k, train, params);
}

SideInfo extract_side_info(const Graph& graph, const Features& x, int k, const TrainLabels& train,
                           const RecoveryConfig& cfg) {
  cfg.validate();
  if (x.rows() != graph.num_nodes()) {
    throw std::invalid_argument("extract_side_info: feature rows do not match node count");
  }

  SideInfo out;
  Features input;
  switch (cfg.input) {
    case RecoveryInput::kFeatures:
      input = x;
      out.source = SideInfoSource::kExtractedFromFeatures;
      break;
    case RecoveryInput::kNeighborhood:
      input = Features(r_neighborhood_matrix(graph, cfg.r));
      out.source = SideInfoSource::kExtractedFromNeighborhood;
      break;
    case RecoveryInput::kBoth:
      input = Features(hconcat(x.to_dense(), r_neighborhood_matrix(graph, cfg.r)));
      out.source = SideInfoSource::kExtractedFromBoth;
      break;
  }

  if (cfg.classifier == ClassifierKind::kGcn) {
    out.y_s = gcn_classify(graph, input, k, train, cfg.train);
  } else {
    out.y_s = mlp_classify(input.to_dense(), k, train, cfg.train);
  }
  return out;
}

SideInfo extract_side_info(const LabeledDataset& dataset, const RecoveryConfig& cfg) {
  return extract_side_info(dataset.graph, dataset.x, dataset.k, dataset.train_labels(), cfg);
}

double side_info_accuracy(const SideInfo& y_s, std::span<const Label> y,
                          std::span<const std::size_t> eval_idx) {
  return accuracy(y_s.y_s, y, eval_idx);
}

}  // namespace gcnsi
