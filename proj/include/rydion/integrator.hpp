#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "rydion/errors.hpp"

namespace rydion {

struct OdeOptions {
  double rtol = 1e-8;
  double atol = 1e-10;
  double max_step = 0.0;  // 0 = (t1 - t0) / 10
  long max_steps = 100000000;
};

struct OdeStats {
  long steps = 0;
  long rejected = 0;
  double worst_error = 0.0;  // largest accepted scaled error
};

using OdeState = Eigen::MatrixXcd;
using OdeRhs = std::function<void(double, const OdeState&, OdeState&)>;
// Called once per entry of sample_times, in order.
using OdeSampler = std::function<void(std::size_t, double, const OdeState&)>;

// Embedded Dormand-Prince 5(4) pair with proportional step control and
// 3rd-order Hermite interpolation for the samples. Throws NumericalError
// (carrying the worst local error estimate) when the controller cannot
// reach the tolerance.
OdeStats integrate_adaptive(const OdeRhs& f, double t0, double t1,
                            OdeState y0,
                            const std::vector<double>& sample_times,
                            const OdeSampler& on_sample,
                            const OdeOptions& opts = {});

}  // namespace rydion
