#include "ntsgd/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ntsgd {

namespace {

void check_input(const Vec& g) {
  if (g.empty()) {
    throw std::invalid_argument("truncate: gradient must have dim >= 1");
  }
  if (!all_finite(g)) {
    throw std::invalid_argument("truncate: gradient has non-finite component");
  }
}

TruncationResult assemble(const Vec& g, const std::vector<std::uint8_t>& kept,
                          std::size_t kept_count, double kept_energy,
                          double total_energy,
                          std::optional<double> threshold) {
  const std::size_t p = g.size();
  TruncationResult out;
  out.truncated.assign(p, 0.0);
  out.residual.assign(p, 0.0);
  out.kept = kept;
  out.kept_count = kept_count;
  out.threshold = threshold;
  for (std::size_t i = 0; i < p; ++i) {
    if (kept[i]) {
      out.truncated[i] = g[i];
    } else {
      out.residual[i] = g[i];
    }
  }
  out.sparsity =
      static_cast<double>(p - kept_count) / static_cast<double>(p);
  out.kept_energy_ratio =
      total_energy == 0.0 ? 1.0 : kept_energy / total_energy;
  return out;
}

}  // namespace

TruncationResult gradient_truncate(const Vec& g, double cut_rate) {
  check_input(g);
  if (!(cut_rate >= 0.0 && cut_rate <= 1.0)) {
    throw std::invalid_argument("truncate: cut_rate must be in [0, 1]");
  }
  const std::size_t p = g.size();

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double ma = std::abs(g[a]);
    const double mb = std::abs(g[b]);
    return ma != mb ? ma > mb : a < b;
  });

  double total_energy = 0.0;
  for (std::size_t idx : order) {
    total_energy += g[idx] * g[idx];
  }
  const double target = (1.0 - cut_rate) * total_energy;

  std::vector<std::uint8_t> kept(p, 0);
  double kept_energy = 0.0;
  std::size_t kept_count = 0;
  while (kept_count < p && kept_energy < target) {
    const std::size_t idx = order[kept_count];
    kept_energy += g[idx] * g[idx];
    kept[idx] = 1;
    ++kept_count;
  }

  std::optional<double> threshold;
  if (kept_count > 0) {
    threshold = std::abs(g[order[kept_count - 1]]);
  }
  return assemble(g, kept, kept_count, kept_energy, total_energy, threshold);
}

TruncationResult threshold_truncate(const Vec& g, double kappa) {
  check_input(g);
  if (!(kappa >= 0.0)) {
    throw std::invalid_argument("truncate: kappa must be >= 0");
  }
  const std::size_t p = g.size();
  std::vector<std::uint8_t> kept(p, 0);
  double kept_energy = 0.0;
  double total_energy = 0.0;
  std::size_t kept_count = 0;
  for (std::size_t i = 0; i < p; ++i) {
    const double e = g[i] * g[i];
    total_energy += e;
    if (std::abs(g[i]) >= kappa) {
      kept[i] = 1;
      kept_energy += e;
      ++kept_count;
    }
  }
  return assemble(g, kept, kept_count, kept_energy, total_energy, kappa);
}

}  // namespace ntsgd
