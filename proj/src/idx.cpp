#include "ntsgd/idx.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <vector>

namespace ntsgd {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error("idx: " + path + ": " + what);
}

std::uint32_t read_u32_be(std::ifstream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) {
    fail(path, "truncated file (header)");
  }
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

void write_u32_be(std::ofstream& out, std::uint32_t v) {
  const unsigned char b[4] = {
      static_cast<unsigned char>(v >> 24), static_cast<unsigned char>(v >> 16),
      static_cast<unsigned char>(v >> 8), static_cast<unsigned char>(v)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

}  // namespace

Dataset load_idx(const std::string& images_path,
                 const std::string& labels_path) {
  std::ifstream img(images_path, std::ios::binary);
  if (!img) {
    fail(images_path, "cannot open");
  }
  const std::uint32_t img_magic = read_u32_be(img, images_path);
  if (img_magic != kImageMagic) {
    fail(images_path, "wrong magic (expected 0x00000803)");
  }
  const std::uint32_t count = read_u32_be(img, images_path);
  const std::uint32_t rows = read_u32_be(img, images_path);
  const std::uint32_t cols = read_u32_be(img, images_path);
  if (count == 0 || rows == 0 || cols == 0) {
    fail(images_path, "empty image set");
  }

  std::ifstream lab(labels_path, std::ios::binary);
  if (!lab) {
    fail(labels_path, "cannot open");
  }
  const std::uint32_t lab_magic = read_u32_be(lab, labels_path);
  if (lab_magic != kLabelMagic) {
    fail(labels_path, "wrong magic (expected 0x00000801)");
  }
  const std::uint32_t lab_count = read_u32_be(lab, labels_path);
  if (lab_count != count) {
    fail(labels_path, "count mismatch between image and label files");
  }

  const std::size_t d = std::size_t{rows} * cols;
  Dataset out;
  out.n = count;
  out.d = d;
  out.features.resize(out.n * d);
  out.labels.resize(out.n);

  std::vector<unsigned char> buf(d);
  for (std::size_t i = 0; i < out.n; ++i) {
    if (!img.read(reinterpret_cast<char*>(buf.data()),
                  static_cast<std::streamsize>(d))) {
      fail(images_path, "truncated file (pixel data)");
    }
    for (std::size_t j = 0; j < d; ++j) {
      out.features[i * d + j] = static_cast<double>(buf[j]);
    }
    unsigned char label = 0;
    if (!lab.read(reinterpret_cast<char*>(&label), 1)) {
      fail(labels_path, "truncated file (label data)");
    }
    out.labels[i] = label;
  }
  return out;
}

std::pair<double, double> standardize(Dataset& data) {
  data.validate();
  double sum = 0.0;
  for (double& v : data.features) {
    v /= 255.0;
    sum += v;
  }
  const double count = static_cast<double>(data.features.size());
  const double mean = sum / count;
  double sq = 0.0;
  for (double v : data.features) {
    sq += (v - mean) * (v - mean);
  }
  const double std_dev = std::sqrt(sq / count);
  const double scale = std_dev < 1e-12 ? 1.0 : std_dev;
  for (double& v : data.features) {
    v = (v - mean) / scale;
  }
  return {mean, std_dev};
}

void write_idx(const Dataset& data, std::size_t rows, std::size_t cols,
               const std::string& images_path,
               const std::string& labels_path) {
  data.validate();
  if (rows * cols != data.d) {
    throw std::invalid_argument("write_idx: rows * cols must equal d");
  }
  std::ofstream img(images_path, std::ios::binary);
  if (!img) {
    fail(images_path, "cannot open for writing");
  }
  write_u32_be(img, kImageMagic);
  write_u32_be(img, static_cast<std::uint32_t>(data.n));
  write_u32_be(img, static_cast<std::uint32_t>(rows));
  write_u32_be(img, static_cast<std::uint32_t>(cols));
  for (double v : data.features) {
    if (v < 0 || v > 255 || v != std::floor(v)) {
      throw std::invalid_argument(
          "write_idx: features must be integers in [0, 255]");
    }
    const unsigned char b = static_cast<unsigned char>(v);
    img.write(reinterpret_cast<const char*>(&b), 1);
  }

  std::ofstream lab(labels_path, std::ios::binary);
  if (!lab) {
    fail(labels_path, "cannot open for writing");
  }
  write_u32_be(lab, kLabelMagic);
  write_u32_be(lab, static_cast<std::uint32_t>(data.n));
  for (int label : data.labels) {
    if (label < 0 || label > 255) {
      throw std::invalid_argument("write_idx: labels must be in [0, 255]");
    }
    const unsigned char b = static_cast<unsigned char>(label);
    lab.write(reinterpret_cast<const char*>(&b), 1);
  }
}

}  // namespace ntsgd
