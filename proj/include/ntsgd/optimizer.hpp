#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ntsgd/objective.hpp"
#include "ntsgd/rng.hpp"
#include "ntsgd/schedule.hpp"
#include "ntsgd/truncation.hpp"

namespace ntsgd {

struct OptimizerConfig {
  double cut_rate = 0.1;    // fraction of gradient energy allowed to drop
  double noise_sigma = 1e-3;
  double beta = 0.0;        // noise exponent in [0, 1/2]
  StepSchedule schedule = StepSchedule::constant(0.1);
  std::size_t batch_size = 100;
  std::int64_t horizon = 1000;  // number of updates T
  std::uint64_t seed = 0;
  std::int64_t record_every = 100;
  // When set, replaces the energy rule with a constant magnitude cutoff.
  std::optional<double> fixed_threshold;
  // Keep a copy of the parameters at every recorded step (for probes).
  bool keep_recorded_iterates = false;

  void validate() const;
};

struct StepStats {
  std::int64_t t = 0;
  double loss = 0.0;        // full-dataset loss at w_t
  double grad_norm = 0.0;   // |full gradient| at w_t
  double sparsity = 0.0;    // minibatch-gradient sparsity at step t
  std::optional<double> threshold;
  double w_norm = 0.0;
};

struct RunRecord {
  std::vector<StepStats> steps;  // strictly increasing t
  Vec final_w;
  Vec sampled_w;                 // w_J, J uniform on {1..T}
  std::int64_t sampled_t = 0;    // J (0 when T = 0)
  std::vector<Vec> recorded_w;   // filled only when keep_recorded_iterates
  OptimizerConfig config;
  double wall_seconds = 0.0;
  bool diverged = false;
  std::int64_t diverged_at = -1;
};

// Truncation as selected by the config: the energy rule by default, a
// fixed magnitude cutoff when fixed_threshold is set.
TruncationResult truncate_gradient(const Vec& g, const OptimizerConfig& cfg);

// w' = w - eta * g_trunc + eta^(1/2 + beta) * noise. An empty noise vector
// means no noise term at all (the sigma = 0 path adds nothing, it does not
// add a zero vector).
Vec apply_update(const Vec& w, const Vec& truncated_grad, double eta,
                 double beta, const Vec& noise);

// One noisy truncated step; noise is drawn from noise_rng only when
// noise_sigma > 0, so a sigma = 0 run never touches that stream.
std::pair<Vec, TruncationResult> ntsgd_step(const Vec& w, const Vec& g,
                                            double eta,
                                            const OptimizerConfig& cfg,
                                            SplitRng& noise_rng);

// Noiseless truncated step.
std::pair<Vec, TruncationResult> tsgd_step(const Vec& w, const Vec& g,
                                           double eta, double cut_rate);

// Full run: T updates w_1..w_T from w_0. Per step: a minibatch of
// batch_size indices drawn uniformly with replacement (stream
// seed/"batch"), gradient averaged over the batch, truncation, update with
// noise (stream seed/"noise"). Full-dataset loss and gradient are computed
// only at recorded steps (every record_every, plus the final step). The
// returned sampled_w is reservoir-sampled online (stream seed/"iterate"),
// uniform over all T iterates in O(p) memory. Non-finite parameters or
// loss abort the run with diverged set.
RunRecord run(const Objective& objective, const Vec& w0,
              const OptimizerConfig& cfg);

}  // namespace ntsgd
