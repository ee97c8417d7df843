#include "gcnsi/nn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace gcnsi {

Parameter::Parameter(DenseMatrix init)
    : value(std::move(init)),
      grad(value.rows(), value.cols()),
      adam_m(value.rows(), value.cols()),
      adam_v(value.rows(), value.cols()) {}

DenseMatrix glorot_init(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("glorot_init: empty shape");
  const double s = std::sqrt(6.0 / static_cast<double>(rows + cols));
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-s, s);
  DenseMatrix out(rows, cols);
  for (double& v : out.values()) v = dist(rng);
  return out;
}

DenseMatrix relu(const DenseMatrix& x) {
  DenseMatrix out = x;
  for (double& v : out.values()) v = std::max(v, 0.0);
  return out;
}

DenseMatrix softmax_rows(const DenseMatrix& x) {
  DenseMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    const auto in = x.row(i);
    auto dst = out.row(i);
    const double peak = *std::max_element(in.begin(), in.end());
    double total = 0.0;
    for (std::size_t j = 0; j < in.size(); ++j) {
      dst[j] = std::exp(in[j] - peak);
      total += dst[j];
    }
    for (double& v : dst) v /= total;
  }
  return out;
}

LossAndGrad masked_cross_entropy(const DenseMatrix& probs, std::span<const Label> targets,
                                 std::span<const std::size_t> rows) {
  if (rows.empty()) throw std::invalid_argument("masked_cross_entropy: empty index set");
  if (targets.size() != probs.rows()) {
    throw std::invalid_argument("masked_cross_entropy: targets length does not match rows");
  }
  const double scale = 1.0 / static_cast<double>(rows.size());
  LossAndGrad out{0.0, DenseMatrix(probs.rows(), probs.cols())};
  for (std::size_t i : rows) {
    if (i >= probs.rows()) throw std::out_of_range("masked_cross_entropy: row index out of range");
    const Label t = targets[i];
    if (t < 0 || static_cast<std::size_t>(t) >= probs.cols()) {
      throw std::invalid_argument("masked_cross_entropy: target " + std::to_string(t) +
                                  " out of range at row " + std::to_string(i));
    }
    const auto p = probs.row(i);
    out.loss -= std::log(p[static_cast<std::size_t>(t)]);
    auto g = out.grad.row(i);
    for (std::size_t j = 0; j < p.size(); ++j) g[j] = p[j] * scale;
    g[static_cast<std::size_t>(t)] -= scale;
  }
  out.loss *= scale;
  return out;
}

LossAndGrad l2_penalty(const DenseMatrix& w, double factor) {
  LossAndGrad out{0.0, DenseMatrix(w.rows(), w.cols())};
  const auto src = w.values();
  auto dst = out.grad.values();
  double sq = 0.0;
  for (std::size_t i = 0; i < src.size(); ++i) {
    sq += src[i] * src[i];
    dst[i] = factor * src[i];
  }
  out.loss = 0.5 * factor * sq;
  return out;
}

void adam_step(Parameter& p, const AdamConfig& cfg) {
  ++p.step_count;
  const double t = static_cast<double>(p.step_count);
  const double correct1 = 1.0 - std::pow(cfg.beta1, t);
  const double correct2 = 1.0 - std::pow(cfg.beta2, t);
  auto w = p.value.values();
  const auto g = p.grad.values();
  auto m = p.adam_m.values();
  auto v = p.adam_v.values();
  for (std::size_t i = 0; i < w.size(); ++i) {
    m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * g[i];
    v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * g[i] * g[i];
    const double m_hat = m[i] / correct1;
    const double v_hat = v[i] / correct2;
    w[i] -= cfg.learning_rate * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
  }
}

double finite_difference_check(const std::function<double(const DenseMatrix&)>& f,
                               const DenseMatrix& x, const DenseMatrix& analytic, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("finite_difference_check: h must be positive");
  if (analytic.rows() != x.rows() || analytic.cols() != x.cols()) {
    throw std::invalid_argument("finite_difference_check: gradient shape mismatch");
  }
  DenseMatrix probe = x;
  double worst = 0.0;
  for (std::size_t idx = 0; idx < probe.size(); ++idx) {
    const double orig = probe.values()[idx];
    probe.values()[idx] = orig + h;
    const double up = f(probe);
    probe.values()[idx] = orig - h;
    const double down = f(probe);
    probe.values()[idx] = orig;
    if (!std::isfinite(up) || !std::isfinite(down)) {
      throw std::domain_error("finite_difference_check: non-finite function value");
    }
    const double fd = (up - down) / (2.0 * h);
    const double an = analytic.values()[idx];
    const double denom = std::max({1.0, std::abs(fd), std::abs(an)});
    worst = std::max(worst, std::abs(fd - an) / denom);
  }
  return worst;
}

}  // namespace gcnsi
