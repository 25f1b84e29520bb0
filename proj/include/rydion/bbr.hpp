#pragma once

#include "rydion/errors.hpp"

namespace rydion {

// Black-body double-ionisation query. omega_nl is the ionisation threshold
// (rad/s); 0 selects the hydrogenic Z=2 default (Sr+ core seen by the
// Rydberg electron after ionisation).
struct BbrQuery {
  int n = 46;
  int l = 0;
  double temperature_k = 300.0;
  double omega_nl = 0.0;

  void validate() const;
  // The semiclassical rate formula assumes n >> 1.
  bool semiclassical_ok() const { return n >= 20; }
};

// Hydrogenic threshold: omega = Z^2 Ry / (hbar n^2) with Z = 2, rad/s.
double omega_threshold(int n);

// W_nL = (alpha^3 kB Tb / (hbar pi^2)) [2.8/n^(7/3) + 2.09 L^2/n^(11/3)]
//        * log(1 / (1 - exp(-hbar omega_nl / kB Tb))),  in 1/s.
// Returns exactly 0 at Tb = 0 (documented limit).
double ionisation_rate(const BbrQuery& query);

}  // namespace rydion
