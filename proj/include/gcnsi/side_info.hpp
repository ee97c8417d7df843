#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "gcnsi/matrix.hpp"

namespace gcnsi {

enum class SideInfoSource {
  kExtractedFromNeighborhood,  // A_r
  kExtractedFromFeatures,      // X
  kExtractedFromBoth,          // [X | A_r]
  kSynthetic,
  kExternal,
};

std::string_view to_string(SideInfoSource s);
std::optional<SideInfoSource> parse_side_info_source(std::string_view tag);

// A per-node label guess of unknown quality.
struct SideInfo {
  LabelVector y_s;
  SideInfoSource source = SideInfoSource::kExternal;
};

// Labels of the fixed training nodes only. Code on the training path receives
// this view instead of the full label vector, so it cannot read validation or
// test labels.
struct TrainLabels {
  IndexSet nodes;      // sorted
  LabelVector labels;  // labels[i] belongs to nodes[i]

  static TrainLabels from(std::span<const Label> all, std::span<const std::size_t> nodes);
  std::size_t size() const { return nodes.size(); }
};

// Fraction of idx where pred and truth agree.
double accuracy(std::span<const Label> pred, std::span<const Label> truth,
                std::span<const std::size_t> idx);

// Fraction of fixed training nodes whose prediction matches their label.
double accuracy(std::span<const Label> pred, const TrainLabels& train);

// Copy of y_s with every fixed training node overwritten by its true label.
LabelVector embed_train_labels(std::span<const Label> y_s, const TrainLabels& train);

}  // namespace gcnsi
