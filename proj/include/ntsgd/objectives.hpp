#pragma once

#include <cstddef>
#include <memory>

#include "ntsgd/objective.hpp"
#include "ntsgd/rng.hpp"

namespace ntsgd {

// Quadratic-plus-quartic test function with a strict saddle at the origin:
//
//   f(w) = 1/2 sum_i lambda_i w_i^2 + (c4 / 4) |w|^4
//
// The quartic term keeps f bounded below while the Hessian at the origin
// stays exactly diag(lambda). At least one lambda_i must be negative.
struct SaddleSpec {
  Vec lambda;
  double c4 = 1.0;

  void validate() const;

  // lambda = (lambda_min, 1, ..., 1) in the given dimension.
  static SaddleSpec single_negative(std::size_t dim, double lambda_min,
                                    double c4);
};

class SaddleObjective final : public Objective {
 public:
  explicit SaddleObjective(SaddleSpec spec);

  std::size_t dim() const override { return spec_.lambda.size(); }
  // Modeled as a single "sample" so minibatch runs reduce to full-batch.
  std::size_t num_samples() const override { return 1; }
  double sample_loss(const Vec& w, std::size_t i) const override;
  void sample_grad(const Vec& w, std::size_t i, Vec& out) const override;
  bool has_hessian() const override { return true; }
  SymmetricMatrix hessian(const Vec& w) const override;

  const SaddleSpec& spec() const { return spec_; }

 private:
  SaddleSpec spec_;
};

// Binary logistic regression over labels in {-1, +1}:
//
//   loss(w; x, y) = log(1 + exp(-y w.x))
//
// Evaluation is stable for |w.x| up to ~700. Dataset labels are mapped on
// construction: label > 0 -> +1, otherwise -1.
class LogisticObjective final : public Objective {
 public:
  explicit LogisticObjective(Dataset data);

  std::size_t dim() const override { return data_.d; }
  std::size_t num_samples() const override { return data_.n; }
  double sample_loss(const Vec& w, std::size_t i) const override;
  void sample_grad(const Vec& w, std::size_t i, Vec& out) const override;
  bool has_hessian() const override { return true; }
  SymmetricMatrix hessian(const Vec& w) const override;
  bool is_convex() const override { return true; }
  std::optional<double> accuracy(const Vec& w,
                                 const Dataset& data) const override;

  const Dataset& data() const { return data_; }

 private:
  double margin(const Vec& w, std::size_t i) const;  // y_i * w.x_i
  Dataset data_;
  std::vector<int> sign_labels_;
};

// One-hidden-layer classifier with tanh activation and softmax
// cross-entropy loss. Parameters are packed flat as
//
//   [W1 (h x d, row-major) | b1 (h) | W2 (k x h, row-major) | b2 (k)]
//
// Labels are class indices in [0, k).
class MlpObjective final : public Objective {
 public:
  MlpObjective(Dataset data, std::size_t hidden, std::size_t classes);

  std::size_t dim() const override { return param_count_; }
  std::size_t num_samples() const override { return data_.n; }
  double sample_loss(const Vec& w, std::size_t i) const override;
  void sample_grad(const Vec& w, std::size_t i, Vec& out) const override;
  std::optional<double> accuracy(const Vec& w,
                                 const Dataset& data) const override;

  std::size_t hidden() const { return hidden_; }
  std::size_t classes() const { return classes_; }

  static std::size_t param_count(std::size_t d, std::size_t hidden,
                                 std::size_t classes);

  // Gaussian init: W1 ~ N(0, 1/d), W2 ~ N(0, 1/hidden), biases zero.
  static Vec init_params(SplitRng& rng, std::size_t d, std::size_t hidden,
                         std::size_t classes);

 private:
  void forward(const Vec& w, std::span<const double> x, Vec& activ,
               Vec& probs) const;

  Dataset data_;
  std::size_t hidden_;
  std::size_t classes_;
  std::size_t param_count_;
};

}  // namespace ntsgd
