#include "ntsgd/optimizer.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace ntsgd {

void OptimizerConfig::validate() const {
  if (!(cut_rate >= 0.0 && cut_rate <= 1.0)) {
    throw std::invalid_argument("OptimizerConfig: cut_rate must be in [0, 1]");
  }
  if (!(noise_sigma >= 0.0)) {
    throw std::invalid_argument("OptimizerConfig: noise_sigma must be >= 0");
  }
  if (!(beta >= 0.0 && beta <= 0.5)) {
    throw std::invalid_argument("OptimizerConfig: beta must be in [0, 1/2]");
  }
  if (batch_size == 0) {
    throw std::invalid_argument("OptimizerConfig: batch_size must be >= 1");
  }
  if (horizon < 0) {
    throw std::invalid_argument("OptimizerConfig: horizon must be >= 0");
  }
  if (record_every < 1) {
    throw std::invalid_argument("OptimizerConfig: record_every must be >= 1");
  }
  if (fixed_threshold && !(*fixed_threshold >= 0)) {
    throw std::invalid_argument(
        "OptimizerConfig: fixed_threshold must be >= 0");
  }
}

TruncationResult truncate_gradient(const Vec& g, const OptimizerConfig& cfg) {
  return cfg.fixed_threshold ? threshold_truncate(g, *cfg.fixed_threshold)
                             : gradient_truncate(g, cfg.cut_rate);
}

Vec apply_update(const Vec& w, const Vec& truncated_grad, double eta,
                 double beta, const Vec& noise) {
  if (w.size() != truncated_grad.size() ||
      (!noise.empty() && noise.size() != w.size())) {
    throw std::invalid_argument("apply_update: dimension mismatch");
  }
  Vec next(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    next[i] = w[i] - eta * truncated_grad[i];
  }
  if (!noise.empty()) {
    const double scale = std::pow(eta, 0.5 + beta);
    axpy(scale, noise, next);
  }
  return next;
}

std::pair<Vec, TruncationResult> ntsgd_step(const Vec& w, const Vec& g,
                                            double eta,
                                            const OptimizerConfig& cfg,
                                            SplitRng& noise_rng) {
  if (w.size() != g.size()) {
    throw std::invalid_argument("ntsgd_step: dimension mismatch");
  }
  TruncationResult trunc = truncate_gradient(g, cfg);
  Vec noise;
  if (cfg.noise_sigma > 0) {
    noise = sample_gaussian(noise_rng, w.size(), cfg.noise_sigma);
  }
  Vec next = apply_update(w, trunc.truncated, eta, cfg.beta, noise);
  return {std::move(next), std::move(trunc)};
}

std::pair<Vec, TruncationResult> tsgd_step(const Vec& w, const Vec& g,
                                           double eta, double cut_rate) {
  if (w.size() != g.size()) {
    throw std::invalid_argument("tsgd_step: dimension mismatch");
  }
  TruncationResult trunc = gradient_truncate(g, cut_rate);
  Vec next = apply_update(w, trunc.truncated, eta, 0.0, Vec{});
  return {std::move(next), std::move(trunc)};
}

RunRecord run(const Objective& objective, const Vec& w0,
              const OptimizerConfig& cfg) {
  cfg.validate();
  if (objective.dim() != w0.size()) {
    throw std::invalid_argument("run: objective/initial point dim mismatch");
  }
  const auto start = std::chrono::steady_clock::now();

  RunRecord rec;
  rec.config = cfg;
  rec.final_w = w0;
  rec.sampled_w = w0;
  rec.sampled_t = 0;

  const std::size_t n = objective.num_samples();
  const std::size_t p = w0.size();

  SplitRng root(cfg.seed);
  SplitRng batch_rng = root.split("batch");
  SplitRng noise_rng = root.split("noise");
  SplitRng iterate_rng = root.split("iterate");

  Vec w = w0;
  Vec grad_sum(p);
  Vec sample_grad;
  Vec full_grad;

  for (std::int64_t t = 1; t <= cfg.horizon; ++t) {
    grad_sum.assign(p, 0.0);
    for (std::size_t b = 0; b < cfg.batch_size; ++b) {
      const std::size_t idx =
          static_cast<std::size_t>(batch_rng.next_below(n));
      objective.sample_grad(w, idx, sample_grad);
      axpy(1.0, sample_grad, grad_sum);
    }
    const double inv_m = 1.0 / static_cast<double>(cfg.batch_size);
    for (double& v : grad_sum) {
      v *= inv_m;
    }

    const double eta = cfg.schedule.at(t, cfg.horizon);
    auto [next, trunc] = ntsgd_step(w, grad_sum, eta, cfg, noise_rng);
    w = std::move(next);

    if (iterate_rng.next_below(static_cast<std::uint64_t>(t)) == 0) {
      rec.sampled_w = w;
      rec.sampled_t = t;
    }

    const bool finite = all_finite(w);
    if (t % cfg.record_every == 0 || t == cfg.horizon || !finite) {
      StepStats stats;
      stats.t = t;
      stats.sparsity = trunc.sparsity;
      stats.threshold = trunc.threshold;
      stats.w_norm = norm(w);
      if (finite) {
        stats.loss = objective.full_loss(w);
        objective.full_grad(w, full_grad);
        stats.grad_norm = norm(full_grad);
      } else {
        stats.loss = std::numeric_limits<double>::quiet_NaN();
        stats.grad_norm = std::numeric_limits<double>::quiet_NaN();
      }
      rec.steps.push_back(stats);
      if (cfg.keep_recorded_iterates && finite) {
        rec.recorded_w.push_back(w);
      }
      if (!finite || !std::isfinite(stats.loss)) {
        rec.diverged = true;
        rec.diverged_at = t;
        break;
      }
    }
  }

  rec.final_w = w;
  rec.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rec;
}

}  // namespace ntsgd
