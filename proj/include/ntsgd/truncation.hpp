#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ntsgd/linalg.hpp"

namespace ntsgd {

// Split of a gradient into the kept part and the residual. The two parts
// have disjoint supports and add back to the input exactly, coordinate by
// coordinate.
struct TruncationResult {
  Vec truncated;                     // kept coordinates, zeros elsewhere
  Vec residual;                      // dropped coordinates, zeros elsewhere
  std::vector<std::uint8_t> kept;    // per-coordinate keep mask
  std::optional<double> threshold;   // magnitude of the smallest kept
                                     // coordinate; empty keep set -> nullopt
  std::size_t kept_count = 0;
  double sparsity = 0.0;             // fraction of zeroed coordinates
  double kept_energy_ratio = 1.0;    // |truncated|^2 / |g|^2, 1 when g = 0
};

// Energy-based truncation with cut rate eps2 in [0, 1].
//
// Coordinates are ordered by descending magnitude (ties by ascending index)
// and the keep set is the shortest prefix whose cumulative squared sum
// reaches (1 - eps2) * |g|^2. |g|^2 and the cumulative sums are accumulated
// in that same order, so the keep-all and keep-none ends are exact. The
// threshold is derived from the kept set, not the other way around.
TruncationResult gradient_truncate(const Vec& g, double cut_rate);

// Fixed-threshold variant: keeps coordinates with |g_i| >= kappa. Used by
// the escape protocol that pins the cut threshold instead of the cut rate.
TruncationResult threshold_truncate(const Vec& g, double kappa);

}  // namespace ntsgd
