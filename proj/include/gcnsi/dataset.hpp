#pragma once

#include <string>

#include "gcnsi/gcn.hpp"
#include "gcnsi/graph.hpp"
#include "gcnsi/side_info.hpp"

namespace gcnsi {

struct NodeSplit {
  IndexSet train;  // fixed training nodes
  IndexSet validation;
  IndexSet test;

  friend bool operator==(const NodeSplit&, const NodeSplit&) = default;
};

struct LabeledDataset {
  std::string name;
  Graph graph;
  Features x;
  LabelVector y;
  NodeSplit split;
  int k = 0;

  std::size_t num_nodes() const { return graph.num_nodes(); }
  TrainLabels train_labels() const { return TrainLabels::from(y, split.train); }

  // Throws if labels, features or split are inconsistent with the graph.
  void validate() const;

  friend bool operator==(const LabeledDataset&, const LabeledDataset&) = default;
};

}  // namespace gcnsi
