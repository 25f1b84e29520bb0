#include "rydion/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace rydion {

namespace {

// Dormand-Prince 5(4) tableau (FSAL).
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                 a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (5th-order solution minus 4th-order estimate).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

double scaled_error(const OdeState& err, const OdeState& y0, const OdeState& y1,
                    double atol, double rtol) {
  double sum = 0.0;
  const auto* pe = err.data();
  const auto* p0 = y0.data();
  const auto* p1 = y1.data();
  const auto n = err.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    const double scale =
        atol + rtol * std::max(std::abs(p0[i]), std::abs(p1[i]));
    const double q = std::abs(pe[i]) / scale;
    sum += q * q;
  }
  return std::sqrt(sum / static_cast<double>(n));
}

}  // namespace

OdeStats integrate_adaptive(const OdeRhs& f, double t0, double t1, OdeState y,
                            const std::vector<double>& sample_times,
                            const OdeSampler& on_sample,
                            const OdeOptions& opts) {
  if (t1 < t0) throw ConfigError("integrate_adaptive requires t1 >= t0");
  const double span = t1 - t0;
  OdeStats stats;

  std::size_t sample_idx = 0;
  while (sample_idx < sample_times.size() && sample_times[sample_idx] <= t0) {
    on_sample(sample_idx, sample_times[sample_idx], y);
    ++sample_idx;
  }
  if (span == 0.0) return stats;

  OdeState k1(y.rows(), y.cols()), k2 = k1, k3 = k1, k4 = k1, k5 = k1, k6 = k1,
           k7 = k1, ytmp = k1, ynew = k1, err = k1, ysample = k1;
  f(t0, y, k1);

  const double hmax = opts.max_step > 0 ? opts.max_step : span / 10.0;
  const double hmin = span * 1e-14;
  double h = std::min(hmax, span / 100.0);
  {
    // Crude first-step heuristic; the controller corrects it quickly.
    const double fn = k1.norm(), yn = y.norm();
    if (fn > 0) h = std::min(h, 0.01 * (yn + opts.atol) / fn);
    h = std::max(h, hmin);
  }

  double t = t0;
  while (t < t1) {
    if (stats.steps + stats.rejected > opts.max_steps)
      throw NumericalError("integrator exceeded max steps", stats.worst_error);
    h = std::min(h, t1 - t);

    ytmp = y + h * (a21 * k1);
    f(t + c2 * h, ytmp, k2);
    ytmp = y + h * (a31 * k1 + a32 * k2);
    f(t + c3 * h, ytmp, k3);
    ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
    f(t + c4 * h, ytmp, k4);
    ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
    f(t + c5 * h, ytmp, k5);
    ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
    f(t + h, ytmp, k6);
    ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
    f(t + h, ynew, k7);  // FSAL
    err = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

    const double en = scaled_error(err, y, ynew, opts.atol, opts.rtol);
    if (en <= 1.0) {
      // Accepted; fill samples inside (t, t+h] by cubic Hermite.
      const double tnew = t + h;
      while (sample_idx < sample_times.size() &&
             sample_times[sample_idx] <= tnew + 1e-14 * span) {
        const double ts = std::min(sample_times[sample_idx], tnew);
        const double th = (ts - t) / h;
        const double h00 = (1 + 2 * th) * (1 - th) * (1 - th);
        const double h10 = th * (1 - th) * (1 - th);
        const double h01 = th * th * (3 - 2 * th);
        const double h11 = th * th * (th - 1);
        ysample = h00 * y + (h10 * h) * k1 + h01 * ynew + (h11 * h) * k7;
        on_sample(sample_idx, sample_times[sample_idx], ysample);
        ++sample_idx;
      }
      t = tnew;
      y.swap(ynew);
      k1.swap(k7);
      ++stats.steps;
      stats.worst_error = std::max(stats.worst_error, en);
      const double fac = std::clamp(0.9 * std::pow(en + 1e-300, -0.2), 0.2, 5.0);
      h = std::min(h * fac, hmax);
    } else {
      ++stats.rejected;
      const double fac = std::clamp(0.9 * std::pow(en, -0.2), 0.1, 1.0);
      h *= fac;
      if (h < hmin)
        throw NumericalError(
            "integrator step size underflow; tolerance not attainable", en);
    }
  }

  // Samples exactly at (or numerically beyond) t1.
  while (sample_idx < sample_times.size()) {
    if (sample_times[sample_idx] > t1 + 1e-9 * span)
      throw ConfigError("sample time beyond integration end");
    on_sample(sample_idx, sample_times[sample_idx], y);
    ++sample_idx;
  }
  return stats;
}

}  // namespace rydion
