#pragma once

#include <optional>

#include "gcnsi/gcn.hpp"
#include "gcnsi/side_info.hpp"

namespace gcnsi {

struct DecisionConfig {
  double p_th = 0.5;  // minimum class probability for a node to enter S1
  double f_th = 0.5;  // minimum fixed-train accuracy for recomputing S
  int e_u = 150;      // first epoch of phase 2

  void validate() const;
};

// Mutable bookkeeping carried across epochs by one trainer.
struct DecisionState {
  std::optional<IndexSet> saved_s;
  int current_phase = 1;
};

struct DecisionOutput {
  LabelVector y_s_hat;  // side information with fixed training labels written in
  LabelVector y_hat;    // argmax predictions
  IndexSet s;           // nodes contributing to the loss this epoch
  double train_accuracy = 0.0;
  // Phase 2 was active but S could neither be recomputed (F < F_th) nor
  // loaded (nothing saved yet); S fell back to the fixed training nodes.
  bool fell_back = false;
};

// One call per epoch. Before e_u, S is the fixed training set. From e_u on,
// S = (S1 ∩ S2) ∪ fixed where S1 holds nodes predicted with probability at
// least p_th and S2 holds nodes whose prediction agrees with y_s_hat; S is
// recomputed and saved only while the fixed-train accuracy is at least f_th,
// otherwise the last saved S is reused.
DecisionOutput decide(const GcnOutput& z, const SideInfo& y_s, const TrainLabels& fixed_train,
                      int epoch, const DecisionConfig& cfg, DecisionState& state);

}  // namespace gcnsi
