#include "gcnsi/synth.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gcnsi {

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void SbmParams::validate() const {
  if (k < 2) throw std::invalid_argument("sbm: k must be >= 2, got " + std::to_string(k));
  if (n < static_cast<std::size_t>(k)) {
    throw std::invalid_argument("sbm: n must be >= k");
  }
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("sbm: p and q must lie in [0, 1]");
  }
  if (p < q) throw std::invalid_argument("sbm: expected assortative regime p >= q");
}

SbmParams sbm_auto_params(std::size_t n, int k, std::uint64_t seed) {
  const double scale = std::log(static_cast<double>(n)) / static_cast<double>(n);
  return SbmParams{n, k, 5.0 * scale, 1.0 * scale, seed};
}

SbmSample sbm_generate(const SbmParams& params) {
  params.validate();
  Rng rng(params.seed);
  std::uniform_int_distribution<Label> pick(0, params.k - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  SbmSample out;
  out.labels.resize(params.n);
  for (auto& y : out.labels) y = pick(rng);

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < params.n; ++i) {
    for (std::size_t j = i + 1; j < params.n; ++j) {
      const double prob = out.labels[i] == out.labels[j] ? params.p : params.q;
      if (coin(rng) < prob) edges.emplace_back(i, j);
    }
  }
  out.graph = Graph(params.n, edges);
  return out;
}

LabelVector noisy_labels(std::span<const Label> labels, int k, double alpha, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("noisy_labels: k must be >= 2");
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("noisy_labels: alpha must lie in [0, 1]");
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<Label> wrong(0, k - 2);
  LabelVector out(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= k) {
      throw std::invalid_argument("noisy_labels: label out of range at node " + std::to_string(i));
    }
    if (coin(rng) < alpha) {
      out[i] = labels[i];
    } else {
      const Label w = wrong(rng);
      out[i] = w >= labels[i] ? w + 1 : w;
    }
  }
  return out;
}

SideInfo noisy_side_info(std::span<const Label> labels, int k, double alpha, std::uint64_t seed) {
  return SideInfo{noisy_labels(labels, k, alpha, seed), SideInfoSource::kSynthetic};
}

}  // namespace gcnsi
