#include "ntsgd/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ntsgd {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += a[i] * b[i];
  }
  return s;
}

double norm_sq(std::span<const double> a) { return dot(a, a); }

double norm(std::span<const double> a) { return std::sqrt(norm_sq(a)); }

bool all_finite(std::span<const double> a) {
  for (double v : a) {
    if (!std::isfinite(v)) {
      return false;
    }
  }
  return true;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] += alpha * x[i];
  }
}

SymmetricMatrix::SymmetricMatrix(std::size_t dim)
    : dim_(dim), upper_(dim * (dim + 1) / 2, 0.0) {
  if (dim == 0) {
    throw std::invalid_argument("SymmetricMatrix: dim must be >= 1");
  }
}

SymmetricMatrix SymmetricMatrix::diagonal(const Vec& d) {
  SymmetricMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    m.set(i, i, d[i]);
  }
  return m;
}

std::size_t SymmetricMatrix::index(std::size_t i, std::size_t j) const {
  if (i > j) {
    std::swap(i, j);
  }
  return i * dim_ - i * (i - 1) / 2 + (j - i);
}

double SymmetricMatrix::operator()(std::size_t i, std::size_t j) const {
  return upper_[index(i, j)];
}

void SymmetricMatrix::set(std::size_t i, std::size_t j, double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("SymmetricMatrix: entries must be finite");
  }
  upper_[index(i, j)] = value;
}

double SymmetricMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      const double v = (*this)(i, j);
      s += v * v;
    }
  }
  return std::sqrt(s);
}

namespace {

// Cyclic Jacobi on a dense working copy. Rotations are accumulated into
// `vectors` when it is non-null.
Vec jacobi_eigvals(const SymmetricMatrix& m, std::vector<Vec>* vectors) {
  const std::size_t p = m.dim();
  if (p > kMaxEigDim) {
    throw std::invalid_argument(
        "sym_eigvals: unsupported size, dim must be <= 512");
  }

  std::vector<double> a(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      a[i * p + j] = m(i, j);
    }
  }
  std::vector<double> v;
  if (vectors != nullptr) {
    v.assign(p * p, 0.0);
    for (std::size_t i = 0; i < p; ++i) {
      v[i * p + i] = 1.0;
    }
  }

  const double scale = std::max(m.frobenius_norm(), 1e-300);
  constexpr int kMaxSweeps = 64;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i + 1; j < p; ++j) {
        off += a[i * p + j] * a[i * p + j];
      }
    }
    if (std::sqrt(2.0 * off) <= 1e-15 * scale) {
      break;
    }
    for (std::size_t q = 0; q < p; ++q) {
      for (std::size_t r = q + 1; r < p; ++r) {
        const double apq = a[q * p + r];
        if (std::abs(apq) <= 1e-18 * scale) {
          continue;
        }
        const double app = a[q * p + q];
        const double aqq = a[r * p + r];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < p; ++k) {
          const double akq = a[k * p + q];
          const double akr = a[k * p + r];
          a[k * p + q] = c * akq - s * akr;
          a[k * p + r] = s * akq + c * akr;
        }
        for (std::size_t k = 0; k < p; ++k) {
          const double aqk = a[q * p + k];
          const double ark = a[r * p + k];
          a[q * p + k] = c * aqk - s * ark;
          a[r * p + k] = s * aqk + c * ark;
        }
        if (vectors != nullptr) {
          for (std::size_t k = 0; k < p; ++k) {
            const double vkq = v[k * p + q];
            const double vkr = v[k * p + r];
            v[k * p + q] = c * vkq - s * vkr;
            v[k * p + r] = s * vkq + c * vkr;
          }
        }
      }
    }
  }

  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a[i * p + i] < a[j * p + j];
  });

  Vec values(p);
  for (std::size_t k = 0; k < p; ++k) {
    values[k] = a[order[k] * p + order[k]];
  }
  if (vectors != nullptr) {
    vectors->assign(p, Vec(p));
    for (std::size_t k = 0; k < p; ++k) {
      for (std::size_t i = 0; i < p; ++i) {
        (*vectors)[k][i] = v[i * p + order[k]];
      }
    }
  }
  return values;
}

}  // namespace

Vec sym_eigvals(const SymmetricMatrix& m) { return jacobi_eigvals(m, nullptr); }

EigenDecomposition sym_eig(const SymmetricMatrix& m) {
  EigenDecomposition d;
  d.values = jacobi_eigvals(m, &d.vectors);
  return d;
}

}  // namespace ntsgd
