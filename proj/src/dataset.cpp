#include "ntsgd/dataset.hpp"

#include <cmath>
#include <stdexcept>

#include "ntsgd/linalg.hpp"

namespace ntsgd {

void Dataset::validate() const {
  if (n == 0 || d == 0) {
    throw std::invalid_argument("Dataset: n and d must be >= 1");
  }
  if (features.size() != n * d || labels.size() != n) {
    throw std::invalid_argument("Dataset: inconsistent feature/label sizes");
  }
  if (!all_finite(features)) {
    throw std::invalid_argument("Dataset: non-finite feature value");
  }
}

Dataset synth_blobs(SplitRng& rng, std::size_t n, std::size_t d,
                    double class_sep, std::size_t k_classes) {
  if (k_classes < 2 || n < k_classes || d < 1) {
    throw std::invalid_argument(
        "synth_blobs: need n >= k_classes >= 2 and d >= 1");
  }
  if (!(class_sep > 0)) {
    throw std::invalid_argument("synth_blobs: class_sep must be > 0");
  }
  if (k_classes > 2 && k_classes > d) {
    throw std::invalid_argument(
        "synth_blobs: simplex centers need k_classes <= d (or k_classes = 2)");
  }

  std::vector<std::vector<double>> centers(k_classes,
                                           std::vector<double>(d, 0.0));
  if (k_classes == 2) {
    centers[0][0] = -class_sep / 2.0;
    centers[1][0] = class_sep / 2.0;
  } else {
    const double scale = class_sep / std::sqrt(2.0);
    for (std::size_t c = 0; c < k_classes; ++c) {
      centers[c][c] = scale;
    }
  }

  Dataset out;
  out.n = n;
  out.d = d;
  out.features.resize(n * d);
  out.labels.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = i % k_classes;
    out.labels[i] = static_cast<int>(c);
    for (std::size_t j = 0; j < d; ++j) {
      out.features[i * d + j] = centers[c][j] + rng.next_gaussian(1.0);
    }
  }
  return out;
}

Dataset binarize(const Dataset& s, int positive_class) {
  Dataset out = s;
  for (int& label : out.labels) {
    label = (label == positive_class) ? 1 : -1;
  }
  return out;
}

std::pair<Dataset, Dataset> split_at(const Dataset& s, std::size_t n_first) {
  if (n_first == 0 || n_first >= s.n) {
    throw std::invalid_argument("split_at: need 0 < n_first < n");
  }
  Dataset a;
  a.n = n_first;
  a.d = s.d;
  a.features.assign(s.features.begin(),
                    s.features.begin() + n_first * s.d);
  a.labels.assign(s.labels.begin(), s.labels.begin() + n_first);
  Dataset b;
  b.n = s.n - n_first;
  b.d = s.d;
  b.features.assign(s.features.begin() + n_first * s.d, s.features.end());
  b.labels.assign(s.labels.begin() + n_first, s.labels.end());
  return {std::move(a), std::move(b)};
}

NeighborPair make_neighbor(const Dataset& s, std::size_t j,
                           std::span<const double> x_new, int y_new) {
  if (j >= s.n) {
    throw std::invalid_argument("make_neighbor: index out of range");
  }
  if (x_new.size() != s.d) {
    throw std::invalid_argument("make_neighbor: feature dim mismatch");
  }
  NeighborPair pair;
  pair.base = s;
  pair.variant = s;
  pair.differing_index = j;
  bool same = s.y(j) == y_new;
  for (std::size_t c = 0; c < s.d; ++c) {
    same = same && s.features[j * s.d + c] == x_new[c];
    pair.variant.features[j * s.d + c] = x_new[c];
  }
  pair.variant.labels[j] = y_new;
  pair.identical = same;
  return pair;
}

}  // namespace ntsgd
