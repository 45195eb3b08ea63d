#include "ntsgd/objective.hpp"

#include <stdexcept>

namespace ntsgd {

SymmetricMatrix Objective::hessian(const Vec&) const {
  throw std::logic_error("Objective: hessian not available");
}

std::optional<double> Objective::accuracy(const Vec&, const Dataset&) const {
  return std::nullopt;
}

double Objective::full_loss(const Vec& w) const {
  const std::size_t n = num_samples();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sum += sample_loss(w, i);
  }
  return sum / static_cast<double>(n);
}

void Objective::full_grad(const Vec& w, Vec& out) const {
  const std::size_t n = num_samples();
  out.assign(dim(), 0.0);
  Vec g;
  for (std::size_t i = 0; i < n; ++i) {
    sample_grad(w, i, g);
    axpy(1.0, g, out);
  }
  const double inv = 1.0 / static_cast<double>(n);
  for (double& v : out) {
    v *= inv;
  }
}

}  // namespace ntsgd
