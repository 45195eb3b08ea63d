#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ntsgd {

using Vec = std::vector<double>;

double dot(std::span<const double> a, std::span<const double> b);
double norm_sq(std::span<const double> a);
double norm(std::span<const double> a);
bool all_finite(std::span<const double> a);

// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);

// Symmetric matrix with packed upper-triangle storage; writing (i, j)
// writes (j, i) as well, so symmetry holds by construction.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t dim);
  static SymmetricMatrix diagonal(const Vec& d);

  std::size_t dim() const { return dim_; }
  double operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);

  double trace() const;
  double frobenius_norm() const;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::vector<double> upper_;
};

// Largest dimension the dense Jacobi eigensolver accepts.
inline constexpr std::size_t kMaxEigDim = 512;

// Eigenvalues in ascending order, cyclic Jacobi sweeps. Throws
// std::invalid_argument above kMaxEigDim.
Vec sym_eigvals(const SymmetricMatrix& m);

struct EigenDecomposition {
  Vec values;                // ascending
  std::vector<Vec> vectors;  // vectors[k] pairs with values[k], orthonormal
};
EigenDecomposition sym_eig(const SymmetricMatrix& m);

// Central-difference gradient estimate, component i:
//   (f(w + h e_i) - f(w - h e_i)) / (2 h)
// The default h balances truncation against rounding for losses of
// magnitude O(1) in 64-bit floats.
template <typename F>
Vec finite_diff_grad(F&& f, const Vec& w, double h = 1e-5) {
  Vec grad(w.size());
  Vec probe = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    probe[i] = w[i] + h;
    const double up = f(probe);
    probe[i] = w[i] - h;
    const double down = f(probe);
    probe[i] = w[i];
    grad[i] = (up - down) / (2.0 * h);
  }
  return grad;
}

}  // namespace ntsgd
