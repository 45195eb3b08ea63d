#pragma once

#include <cstddef>
#include <optional>

#include "ntsgd/dataset.hpp"
#include "ntsgd/linalg.hpp"

namespace ntsgd {

// A differentiable empirical-risk objective: the full loss is the mean of
// per-sample losses over the bound dataset. Objectives are immutable after
// construction and evaluation is pure, so instances are safe to share
// across threads.
class Objective {
 public:
  virtual ~Objective() = default;

  virtual std::size_t dim() const = 0;
  virtual std::size_t num_samples() const = 0;

  virtual double sample_loss(const Vec& w, std::size_t i) const = 0;
  // Overwrites `out` (resized to dim()) with the gradient of sample i.
  virtual void sample_grad(const Vec& w, std::size_t i, Vec& out) const = 0;

  virtual bool has_hessian() const { return false; }
  virtual SymmetricMatrix hessian(const Vec& w) const;

  virtual bool is_convex() const { return false; }

  // Fraction of `data` classified correctly; nullopt for non-classifiers.
  virtual std::optional<double> accuracy(const Vec& w,
                                         const Dataset& data) const;

  double full_loss(const Vec& w) const;
  void full_grad(const Vec& w, Vec& out) const;
};

}  // namespace ntsgd
