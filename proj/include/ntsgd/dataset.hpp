#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ntsgd/rng.hpp"

namespace ntsgd {

// Row-major feature matrix plus integer labels.
struct Dataset {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<double> features;  // n * d
  std::vector<int> labels;       // n

  std::span<const double> x(std::size_t i) const {
    return {features.data() + i * d, d};
  }
  int y(std::size_t i) const { return labels[i]; }

  void validate() const;  // throws on inconsistent sizes or non-finite values
};

// k Gaussian clusters with unit covariance and balanced labels (sample i
// gets label i mod k). Cluster centers sit at pairwise distance class_sep:
// +/- (class_sep/2) e0 for k = 2, a regular simplex (class_sep/sqrt(2)) e_j
// for 2 < k <= d. Deterministic under the rng stream.
Dataset synth_blobs(SplitRng& rng, std::size_t n, std::size_t d,
                    double class_sep, std::size_t k_classes);

// Copy with labels mapped to +/-1: positive_class -> +1, everything
// else -> -1.
Dataset binarize(const Dataset& s, int positive_class);

// First n_first samples and the rest, in order.
std::pair<Dataset, Dataset> split_at(const Dataset& s, std::size_t n_first);

struct NeighborPair {
  Dataset base;
  Dataset variant;
  std::size_t differing_index = 0;
  bool identical = false;  // replacement equals the original sample
};

// Variant dataset identical to s except position j holds (x_new, y_new).
NeighborPair make_neighbor(const Dataset& s, std::size_t j,
                           std::span<const double> x_new, int y_new);

}  // namespace ntsgd
