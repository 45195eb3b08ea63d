#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace ntsgd {

// Step-size rule. All three variants produce strictly positive steps:
//   constant:          eta_t = c
//   inv_sqrt_horizon:  eta_t = c / sqrt(T)   (fixed horizon T)
//   inv_step:          eta_t = c / t         (t >= 1)
struct StepSchedule {
  enum class Kind { kConstant, kInvSqrtHorizon, kInvStep };

  Kind kind = Kind::kConstant;
  double c = 0.1;

  static StepSchedule constant(double eta) { return make(Kind::kConstant, eta); }
  static StepSchedule inv_sqrt_horizon(double c) {
    return make(Kind::kInvSqrtHorizon, c);
  }
  static StepSchedule inv_step(double c) { return make(Kind::kInvStep, c); }

  double at(std::int64_t t, std::int64_t horizon) const {
    switch (kind) {
      case Kind::kConstant:
        return c;
      case Kind::kInvSqrtHorizon:
        return c / std::sqrt(static_cast<double>(horizon));
      case Kind::kInvStep:
        return c / static_cast<double>(t);
    }
    throw std::logic_error("StepSchedule: bad kind");
  }

 private:
  static StepSchedule make(Kind kind, double c) {
    if (!(c > 0)) {
      throw std::invalid_argument("StepSchedule: c must be > 0");
    }
    return StepSchedule{kind, c};
  }
};

}  // namespace ntsgd
