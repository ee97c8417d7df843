#include "gcnsi/side_info.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcnsi {

std::string_view to_string(SideInfoSource s) {
  switch (s) {
    case SideInfoSource::kExtractedFromNeighborhood: return "extracted-from-A_r";
    case SideInfoSource::kExtractedFromFeatures: return "extracted-from-X";
    case SideInfoSource::kExtractedFromBoth: return "extracted-from-A_r+X";
    case SideInfoSource::kSynthetic: return "synthetic";
    case SideInfoSource::kExternal: return "external";
  }
  return "external";
}

std::optional<SideInfoSource> parse_side_info_source(std::string_view tag) {
  for (auto s : {SideInfoSource::kExtractedFromNeighborhood, SideInfoSource::kExtractedFromFeatures,
                 SideInfoSource::kExtractedFromBoth, SideInfoSource::kSynthetic,
                 SideInfoSource::kExternal}) {
    if (to_string(s) == tag) return s;
  }
  return std::nullopt;
}

TrainLabels TrainLabels::from(std::span<const Label> all, std::span<const std::size_t> nodes) {
  TrainLabels t;
  t.nodes.assign(nodes.begin(), nodes.end());
  std::sort(t.nodes.begin(), t.nodes.end());
  t.nodes.erase(std::unique(t.nodes.begin(), t.nodes.end()), t.nodes.end());
  t.labels.reserve(t.nodes.size());
  for (std::size_t i : t.nodes) {
    if (i >= all.size()) throw std::out_of_range("TrainLabels: node index out of range");
    t.labels.push_back(all[i]);
  }
  return t;
}

double accuracy(std::span<const Label> pred, std::span<const Label> truth,
                std::span<const std::size_t> idx) {
  if (idx.empty()) throw std::invalid_argument("accuracy: empty evaluation set");
  std::size_t hit = 0;
  for (std::size_t i : idx) {
    if (i >= pred.size() || i >= truth.size()) throw std::out_of_range("accuracy: index out of range");
    if (pred[i] == truth[i]) ++hit;
  }
  return static_cast<double>(hit) / static_cast<double>(idx.size());
}

double accuracy(std::span<const Label> pred, const TrainLabels& train) {
  if (train.nodes.empty()) throw std::invalid_argument("accuracy: empty training set");
  std::size_t hit = 0;
  for (std::size_t p = 0; p < train.nodes.size(); ++p) {
    if (pred[train.nodes[p]] == train.labels[p]) ++hit;
  }
  return static_cast<double>(hit) / static_cast<double>(train.nodes.size());
}

LabelVector embed_train_labels(std::span<const Label> y_s, const TrainLabels& train) {
  LabelVector out(y_s.begin(), y_s.end());
  for (std::size_t p = 0; p < train.nodes.size(); ++p) {
    if (train.nodes[p] >= out.size()) throw std::out_of_range("embed_train_labels: index out of range");
    out[train.nodes[p]] = train.labels[p];
  }
  return out;
}

}  // namespace gcnsi
