#pragma once

#include <string>
#include <utility>

#include "ntsgd/dataset.hpp"

namespace ntsgd {

// Reads a paired image/label file in the IDX binary format (big-endian
// 32-bit header fields, image magic 0x00000803, label magic 0x00000801).
// Pixels come back raw, as doubles in [0, 255]; labels as integers.
// Malformed input raises std::runtime_error naming the file and the
// problem: wrong magic, truncated file, or image/label count mismatch.
Dataset load_idx(const std::string& images_path,
                 const std::string& labels_path);

// In place: divides features by 255, then z-scores with a single global
// mean/std taken over every value of this dataset. Returns {mean, std} of
// the rescaled values. A degenerate std (< 1e-12) leaves the scale at 1.
std::pair<double, double> standardize(Dataset& data);

// Fixture writer: emits the dataset as an IDX image/label pair with the
// given row x col geometry (rows * cols must equal d). Feature values must
// be integers in [0, 255]; labels in [0, 255].
void write_idx(const Dataset& data, std::size_t rows, std::size_t cols,
               const std::string& images_path,
               const std::string& labels_path);

}  // namespace ntsgd
