#include "ntsgd/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ntsgd {

namespace {

// log(1 + exp(t)) without overflow for large |t|.
double log1p_exp(double t) {
  return t > 0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t));
}

// 1 / (1 + exp(-u)) evaluated from the side that avoids overflow.
double sigmoid(double u) {
  if (u >= 0) {
    return 1.0 / (1.0 + std::exp(-u));
  }
  const double e = std::exp(u);
  return e / (1.0 + e);
}

}  // namespace

void SaddleSpec::validate() const {
  if (lambda.empty()) {
    throw std::invalid_argument("SaddleSpec: dim must be >= 1");
  }
  if (*std::min_element(lambda.begin(), lambda.end()) >= 0) {
    throw std::invalid_argument(
        "SaddleSpec: at least one lambda must be negative");
  }
  if (!(c4 > 0)) {
    throw std::invalid_argument("SaddleSpec: c4 must be > 0");
  }
}

SaddleSpec SaddleSpec::single_negative(std::size_t dim, double lambda_min,
                                       double c4) {
  SaddleSpec spec;
  spec.lambda.assign(dim, 1.0);
  spec.lambda[0] = lambda_min;
  spec.c4 = c4;
  spec.validate();
  return spec;
}

SaddleObjective::SaddleObjective(SaddleSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
}

double SaddleObjective::sample_loss(const Vec& w, std::size_t) const {
  double quad = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    quad += spec_.lambda[i] * w[i] * w[i];
  }
  const double r2 = norm_sq(w);
  return 0.5 * quad + 0.25 * spec_.c4 * r2 * r2;
}

void SaddleObjective::sample_grad(const Vec& w, std::size_t, Vec& out) const {
  out.resize(w.size());
  const double r2 = norm_sq(w);
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = spec_.lambda[i] * w[i] + spec_.c4 * r2 * w[i];
  }
}

SymmetricMatrix SaddleObjective::hessian(const Vec& w) const {
  const std::size_t p = dim();
  const double r2 = norm_sq(w);
  SymmetricMatrix h(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = i; j < p; ++j) {
      double v = spec_.c4 * 2.0 * w[i] * w[j];
      if (i == j) {
        v += spec_.lambda[i] + spec_.c4 * r2;
      }
      h.set(i, j, v);
    }
  }
  return h;
}

LogisticObjective::LogisticObjective(Dataset data) : data_(std::move(data)) {
  data_.validate();
  sign_labels_.resize(data_.n);
  for (std::size_t i = 0; i < data_.n; ++i) {
    sign_labels_[i] = data_.labels[i] > 0 ? 1 : -1;
  }
}

double LogisticObjective::margin(const Vec& w, std::size_t i) const {
  return sign_labels_[i] * dot(w, data_.x(i));
}

double LogisticObjective::sample_loss(const Vec& w, std::size_t i) const {
  return log1p_exp(-margin(w, i));
}

void LogisticObjective::sample_grad(const Vec& w, std::size_t i,
                                    Vec& out) const {
  const double s = sigmoid(-margin(w, i));
  const double coeff = -static_cast<double>(sign_labels_[i]) * s;
  const auto x = data_.x(i);
  out.resize(data_.d);
  for (std::size_t c = 0; c < data_.d; ++c) {
    out[c] = coeff * x[c];
  }
}

SymmetricMatrix LogisticObjective::hessian(const Vec& w) const {
  SymmetricMatrix h(data_.d);
  for (std::size_t s = 0; s < data_.n; ++s) {
    const double sig = sigmoid(margin(w, s));
    const double weight = sig * (1.0 - sig) / static_cast<double>(data_.n);
    const auto x = data_.x(s);
    for (std::size_t i = 0; i < data_.d; ++i) {
      for (std::size_t j = i; j < data_.d; ++j) {
        h.set(i, j, h(i, j) + weight * x[i] * x[j]);
      }
    }
  }
  return h;
}

std::optional<double> LogisticObjective::accuracy(const Vec& w,
                                                  const Dataset& data) const {
  if (data.d != data_.d) {
    throw std::invalid_argument("LogisticObjective: accuracy dim mismatch");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.n; ++i) {
    const int truth = data.labels[i] > 0 ? 1 : -1;
    const int pred = dot(w, data.x(i)) > 0 ? 1 : -1;
    correct += pred == truth;
  }
  return static_cast<double>(correct) / static_cast<double>(data.n);
}

std::size_t MlpObjective::param_count(std::size_t d, std::size_t hidden,
                                      std::size_t classes) {
  return hidden * d + hidden + classes * hidden + classes;
}

MlpObjective::MlpObjective(Dataset data, std::size_t hidden,
                           std::size_t classes)
    : data_(std::move(data)),
      hidden_(hidden),
      classes_(classes),
      param_count_(param_count(data_.d, hidden, classes)) {
  data_.validate();
  if (hidden_ == 0 || classes_ < 2) {
    throw std::invalid_argument("MlpObjective: need hidden >= 1, classes >= 2");
  }
  for (int label : data_.labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= classes_) {
      throw std::invalid_argument("MlpObjective: label outside [0, classes)");
    }
  }
}

Vec MlpObjective::init_params(SplitRng& rng, std::size_t d, std::size_t hidden,
                              std::size_t classes) {
  Vec w(param_count(d, hidden, classes), 0.0);
  const double s1 = 1.0 / std::sqrt(static_cast<double>(d));
  const double s2 = 1.0 / std::sqrt(static_cast<double>(hidden));
  std::size_t at = 0;
  for (std::size_t i = 0; i < hidden * d; ++i) {
    w[at++] = rng.next_gaussian(s1);
  }
  at += hidden;  // b1 stays zero
  for (std::size_t i = 0; i < classes * hidden; ++i) {
    w[at++] = rng.next_gaussian(s2);
  }
  return w;
}

void MlpObjective::forward(const Vec& w, std::span<const double> x, Vec& activ,
                           Vec& probs) const {
  if (w.size() != param_count_) {
    throw std::invalid_argument("MlpObjective: parameter layout size mismatch");
  }
  const std::size_t d = data_.d;
  const double* w1 = w.data();
  const double* b1 = w1 + hidden_ * d;
  const double* w2 = b1 + hidden_;
  const double* b2 = w2 + classes_ * hidden_;

  activ.resize(hidden_);
  for (std::size_t j = 0; j < hidden_; ++j) {
    double z = b1[j];
    const double* row = w1 + j * d;
    for (std::size_t c = 0; c < d; ++c) {
      z += row[c] * x[c];
    }
    activ[j] = std::tanh(z);
  }

  probs.resize(classes_);
  double zmax = -std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < classes_; ++c) {
    double z = b2[c];
    const double* row = w2 + c * hidden_;
    for (std::size_t j = 0; j < hidden_; ++j) {
      z += row[j] * activ[j];
    }
    probs[c] = z;
    zmax = std::max(zmax, z);
  }
  double denom = 0.0;
  for (double& z : probs) {
    z = std::exp(z - zmax);
    denom += z;
  }
  for (double& z : probs) {
    z /= denom;
  }
}

double MlpObjective::sample_loss(const Vec& w, std::size_t i) const {
  Vec activ;
  Vec probs;
  forward(w, data_.x(i), activ, probs);
  const int label = data_.labels[i];
  return -std::log(std::max(probs[label], 1e-300));
}

void MlpObjective::sample_grad(const Vec& w, std::size_t i, Vec& out) const {
  Vec activ;
  Vec probs;
  const auto x = data_.x(i);
  forward(w, x, activ, probs);

  const std::size_t d = data_.d;
  const double* w2 = w.data() + hidden_ * d + hidden_;

  out.assign(param_count_, 0.0);
  double* g_w1 = out.data();
  double* g_b1 = g_w1 + hidden_ * d;
  double* g_w2 = g_b1 + hidden_;
  double* g_b2 = g_w2 + classes_ * hidden_;

  // dz_c = probs_c - [c == label]
  Vec dz = probs;
  dz[data_.labels[i]] -= 1.0;

  for (std::size_t c = 0; c < classes_; ++c) {
    g_b2[c] = dz[c];
    double* row = g_w2 + c * hidden_;
    for (std::size_t j = 0; j < hidden_; ++j) {
      row[j] = dz[c] * activ[j];
    }
  }
  for (std::size_t j = 0; j < hidden_; ++j) {
    double da = 0.0;
    for (std::size_t c = 0; c < classes_; ++c) {
      da += w2[c * hidden_ + j] * dz[c];
    }
    const double dpre = da * (1.0 - activ[j] * activ[j]);
    g_b1[j] = dpre;
    double* row = g_w1 + j * d;
    for (std::size_t c = 0; c < d; ++c) {
      row[c] = dpre * x[c];
    }
  }
}

std::optional<double> MlpObjective::accuracy(const Vec& w,
                                             const Dataset& data) const {
  if (data.d != data_.d) {
    throw std::invalid_argument("MlpObjective: accuracy dim mismatch");
  }
  Vec activ;
  Vec probs;
  std::size_t correct = 0;
  for (std::size_t i = 0; i < data.n; ++i) {
    forward(w, data.x(i), activ, probs);
    const std::size_t pred = static_cast<std::size_t>(
        std::max_element(probs.begin(), probs.end()) - probs.begin());
    correct += pred == static_cast<std::size_t>(data.labels[i]);
  }
  return static_cast<double>(correct) / static_cast<double>(data.n);
}

}  // namespace ntsgd
