#include "gcnsi/decision.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcnsi {

void DecisionConfig::validate() const {
  if (!(p_th > 0.0 && p_th <= 1.0)) throw std::invalid_argument("decision: p_th must lie in (0, 1]");
  if (!(f_th > 0.0 && f_th <= 1.0)) throw std::invalid_argument("decision: f_th must lie in (0, 1]");
  if (e_u < 0) throw std::invalid_argument("decision: e_u must be non-negative");
}

DecisionOutput decide(const GcnOutput& z, const SideInfo& y_s, const TrainLabels& fixed_train,
                      int epoch, const DecisionConfig& cfg, DecisionState& state) {
  const std::size_t n = z.z.rows();
  if (fixed_train.nodes.empty()) throw std::invalid_argument("decide: no fixed training nodes");
  if (y_s.y_s.size() != n || z.y_hat.size() != n) {
    throw std::invalid_argument("decide: side information covers " +
                                std::to_string(y_s.y_s.size()) + " nodes, predictions " +
                                std::to_string(n));
  }

  DecisionOutput out;
  out.y_s_hat = embed_train_labels(y_s.y_s, fixed_train);
  out.y_hat = z.y_hat;
  out.train_accuracy = accuracy(out.y_hat, fixed_train);

  if (epoch < cfg.e_u) {
    state.current_phase = 1;
    out.s = fixed_train.nodes;
    return out;
  }

  state.current_phase = 2;
  if (out.train_accuracy >= cfg.f_th) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = z.z.row(i);
      const bool confident = *std::max_element(row.begin(), row.end()) >= cfg.p_th;
      const bool agrees = out.y_s_hat[i] == out.y_hat[i];
      if (confident && agrees) s.push_back(i);
    }
    IndexSet merged;
    merged.reserve(s.size() + fixed_train.nodes.size());
    std::set_union(s.begin(), s.end(), fixed_train.nodes.begin(), fixed_train.nodes.end(),
                   std::back_inserter(merged));
    state.saved_s = merged;
    out.s = std::move(merged);
  } else if (state.saved_s) {
    out.s = *state.saved_s;
  } else {
    out.s = fixed_train.nodes;
    out.fell_back = true;
  }
  return out;
}

}  // namespace gcnsi
