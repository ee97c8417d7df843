#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "gcnsi/graph.hpp"
#include "gcnsi/matrix.hpp"
#include "gcnsi/side_info.hpp"

namespace gcnsi {

using Rng = std::mt19937_64;

// Decorrelates a run seed into independent per-purpose streams (splitmix64).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

struct SbmParams {
  std::size_t n = 2000;
  int k = 3;
  double p = 0.0;  // intra-class edge probability
  double q = 0.0;  // inter-class edge probability
  std::uint64_t seed = 0;

  void validate() const;
};

// p = 5 ln(n) / n, q = ln(n) / n.
SbmParams sbm_auto_params(std::size_t n, int k, std::uint64_t seed);

struct SbmSample {
  Graph graph;
  LabelVector labels;
};

SbmSample sbm_generate(const SbmParams& params);

// Each node keeps its true label with probability alpha, otherwise gets a
// label drawn uniformly from the k-1 wrong ones.
LabelVector noisy_labels(std::span<const Label> labels, int k, double alpha, std::uint64_t seed);

SideInfo noisy_side_info(std::span<const Label> labels, int k, double alpha, std::uint64_t seed);

}  // namespace gcnsi
