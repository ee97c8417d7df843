#include <gtest/gtest.h>

#include <numeric>

#include "gcnsi/experiment.hpp"
#include "gcnsi/recovery.hpp"
#include "gcnsi/synth.hpp"
#include "oracles.hpp"

using namespace gcnsi;

namespace {

LabeledDataset small_sbm(std::size_t n, int k, double p, double q, std::uint64_t seed) {
  const SbmSample s = sbm_generate({.n = n, .k = k, .p = p, .q = q, .seed = seed});
  LabeledDataset d;
  d.graph = s.graph;
  d.y = s.labels;
  d.k = k;
  d.x = Features::identity(n);
  d.split = split_sample(d.y, k, seed + 1, {.per_class = 20, .validation = 100, .test = 200});
  return d;
}

ClassifierParams quick(int epochs = 200) {
  ClassifierParams p;
  p.epochs = epochs;
  p.seed = 3;
  return p;
}

}  // namespace

TEST(Mlp, SeparatesGaussianBlobs) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.5);
  DenseMatrix x(50, 2);
  LabelVector y(50);
  for (std::size_t i = 0; i < 50; ++i) {
    y[i] = static_cast<Label>(i % 2);
    const double c = y[i] ? 2.0 : -2.0;
    x(i, 0) = c + noise(rng);
    x(i, 1) = c + noise(rng);
  }
  std::vector<std::size_t> train;
  for (std::size_t i = 0; i < 50; i += 5) train.push_back(i);
  train.push_back(1);
  train.push_back(3);
  const LabelVector pred = mlp_classify(x, 2, TrainLabels::from(y, train), quick());
  std::vector<std::size_t> all(50);
  std::iota(all.begin(), all.end(), 0);
  EXPECT_GE(accuracy(pred, y, all), 0.95);

  // every node in training: memorized
  EXPECT_EQ(mlp_classify(x, 2, TrainLabels::from(y, all), quick(400)), y);
}

TEST(Mlp, ConstantFeaturesPredictTrainMajority) {
  const DenseMatrix x(30, 3, 1.0);
  LabelVector y(30, 1);
  for (std::size_t i = 0; i < 6; ++i) y[i] = 0;
  const std::vector<std::size_t> train{0, 1, 2, 3, 4, 10, 11};  // five 0s, two 1s
  const LabelVector pred = mlp_classify(x, 2, TrainLabels::from(y, train), quick());
  EXPECT_EQ(pred, LabelVector(30, 0));
}

TEST(Mlp, RejectsEmptyFeatures) {
  const LabelVector y{0, 1};
  const std::vector<std::size_t> train{0, 1};
  EXPECT_THROW(mlp_classify(DenseMatrix(2, 0), 2, TrainLabels::from(y, train), quick()),
               std::invalid_argument);
  EXPECT_THROW(mlp_classify(DenseMatrix(2, 2), 2, TrainLabels{}, quick()), std::invalid_argument);
}

TEST(Recovery, GcnOnNeighborhoodBeatsChance) {
  const LabeledDataset d = small_sbm(400, 3, 0.06, 0.01, 4);
  RecoveryConfig cfg;
  cfg.train = quick(300);
  const SideInfo si = extract_side_info(d, cfg);
  EXPECT_EQ(si.source, SideInfoSource::kExtractedFromNeighborhood);
  EXPECT_GT(side_info_accuracy(si, d.y, d.split.test), 1.0 / 3 + 0.2);
}

TEST(Recovery, MlpOnIdentityFeaturesIsNearChance) {
  const LabeledDataset d = small_sbm(600, 3, 0.06, 0.01, 5);
  RecoveryConfig cfg;
  cfg.classifier = ClassifierKind::kMlp;
  cfg.input = RecoveryInput::kFeatures;
  cfg.train = quick(200);
  const SideInfo si = extract_side_info(d, cfg);
  EXPECT_EQ(si.source, SideInfoSource::kExtractedFromFeatures);
  EXPECT_LT(side_info_accuracy(si, d.y, d.split.test), 1.0 / 3 + 0.15);
}

TEST(Recovery, BothInputsAreTagged) {
  const LabeledDataset d = small_sbm(400, 2, 0.05, 0.01, 6);
  RecoveryConfig cfg;
  cfg.classifier = ClassifierKind::kMlp;
  cfg.input = RecoveryInput::kBoth;
  cfg.train = quick(50);
  EXPECT_EQ(extract_side_info(d, cfg).source, SideInfoSource::kExtractedFromBoth);
}

TEST(Recovery, ReadsOnlyTrainingLabels) {
  LabeledDataset d = small_sbm(400, 3, 0.06, 0.01, 7);
  RecoveryConfig cfg;
  cfg.train = quick(100);
  const SideInfo a = extract_side_info(d, cfg);
  std::mt19937_64 rng(1);
  std::vector<char> is_train(d.num_nodes(), 0);
  for (std::size_t i : d.split.train) is_train[i] = 1;
  for (std::size_t i = 0; i < d.num_nodes(); ++i)
    if (!is_train[i]) d.y[i] = static_cast<Label>(rng() % 3);
  const SideInfo b = extract_side_info(d, cfg);
  EXPECT_EQ(a.y_s, b.y_s);
  EXPECT_EQ(extract_side_info(d, cfg).y_s, b.y_s);
}

TEST(Recovery, RadiusValidation) {
  RecoveryConfig cfg;
  cfg.r = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.input = RecoveryInput::kFeatures;
  EXPECT_NO_THROW(cfg.validate());
}

TEST(SideInfoAccuracy, Examples) {
  const LabelVector y{0, 1, 1, 0};
  const std::vector<std::size_t> all{0, 1, 2, 3};
  EXPECT_EQ(side_info_accuracy({y, SideInfoSource::kExternal}, y, all), 1.0);
  EXPECT_EQ(side_info_accuracy({{1, 0, 0, 1}, SideInfoSource::kExternal}, y, all), 0.0);
  const std::vector<std::size_t> none;
  EXPECT_THROW(side_info_accuracy({y, SideInfoSource::kExternal}, y, none), std::invalid_argument);
}

TEST(SideInfoAccuracy, SyntheticChannelNearAlpha) {
  const SbmSample s = sbm_generate(sbm_auto_params(2000, 3, 9));
  std::vector<std::size_t> all(2000);
  std::iota(all.begin(), all.end(), 0);
  const double acc = side_info_accuracy(noisy_side_info(s.labels, 3, 0.7, 1), s.labels, all);
  EXPECT_LE(std::abs(acc - 0.7), 3 * std::sqrt(0.7 * 0.3 / 2000));
}
