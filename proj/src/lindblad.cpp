#include "rydion/lindblad.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rydion/units.hpp"

namespace rydion {

namespace {

constexpr int iq1 = 0, iq0 = 1, ie = 2, is = 3, ip = 4, ig = 5;

double stirap_env1(double t, double T) { return std::sin(units::pi * t / T); }
double stirap_env2(double t, double T) {
  return std::abs(std::cos(units::pi * t / T));
}

struct Entry {
  int r, c;
  Complex v;
};

struct Sparse {
  std::vector<Entry> entries;
  void add(int r, int c, Complex v) {
    if (v != Complex(0.0, 0.0)) entries.push_back({r, c, v});
  }
  Matrix dense(int dim) const {
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& e : entries) m(e.r, e.c) += e.v;
    return m;
  }
};

struct DecayChannel {
  double rate;  // rad/us (already includes the 1/2 branching)
  int from, to;
  int ion;  // 0 = left factor, 1 = right
};

// Index of (level `lvl` on `ion`, other ion at `m`) in the two-ion space.
int embed2(int ion, int lvl, int m) {
  return ion == 0 ? lvl * kLevels + m : m * kLevels + lvl;
}

// Laser phase noise propagates to every level reached through that laser
// leg, so each linewidth enters as sqrt(2*Gamma) times a projector sum:
// leg 1 covers {e, s, p}, leg 2 covers {s, p}. This gives coherence decay
// Gamma1 on |0>-|e>, Gamma2 on |e>-|s>, Gamma1+Gamma2 on the two-photon
// coherence, and none between s and p.
Eigen::VectorXd dephasing_vector(int leg, double gamma, int dim, int ion) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(dim);
  const double a = std::sqrt(2.0 * gamma);
  for (int lvl : {ie, is, ip}) {
    if (leg == 2 && lvl == ie) continue;
    if (dim == kLevels) {
      u[lvl] = a;
    } else {
      for (int m = 0; m < kLevels; ++m) u[embed2(ion, lvl, m)] = a;
    }
  }
  return u;
}

double frame_offset(const MicrowaveField& mw) {
  if (mw.omega_mw == 0.0 && mw.delta_mw == 0.0) return 0.0;
  return (mw.delta_mw + std::hypot(mw.delta_mw, mw.omega_mw)) / 2.0;
}

struct LindbladOps {
  int dim = 0;
  Sparse h_static;
  Sparse coupling1;
  Sparse coupling2;
  std::vector<DecayChannel> decays;
  Eigen::ArrayXXd phi;  // elementwise dissipator remainder (real)
  const PulseSchedule* pulse = nullptr;

  void rhs(double t, const Matrix& rho, Matrix& out) const;
};

void apply_commutator(const Sparse& sp, double scale, const Matrix& rho,
                      Matrix& out) {
  for (const auto& e : sp.entries) {
    const Complex w = Complex(0.0, -scale) * e.v;
    out.row(e.r) += w * rho.row(e.c);
    out.col(e.c) -= w * rho.col(e.r);
  }
}

void LindbladOps::rhs(double t, const Matrix& rho, Matrix& out) const {
  out.array() = phi * rho.array();
  apply_commutator(h_static, 1.0, rho, out);
  const double o1 = pulse->omega1(t);
  const double o2 = pulse->omega2(t);
  if (o1 != 0.0) apply_commutator(coupling1, o1, rho, out);
  if (o2 != 0.0) apply_commutator(coupling2, o2, rho, out);
  // Decay jump terms C rho C^dagger (the anticommutator half lives in phi).
  for (const auto& d : decays) {
    if (dim == kLevels) {
      out(d.to, d.to) += d.rate * rho(d.from, d.from);
    } else if (d.ion == 0) {
      out.block(d.to * kLevels, d.to * kLevels, kLevels, kLevels) +=
          d.rate *
          rho.block(d.from * kLevels, d.from * kLevels, kLevels, kLevels);
    } else {
      for (int m = 0; m < kLevels; ++m)
        for (int mm = 0; mm < kLevels; ++mm)
          out(m * kLevels + d.to, mm * kLevels + d.to) +=
              d.rate * rho(m * kLevels + d.from, mm * kLevels + d.from);
    }
  }
}

// Assemble the generator. `mw` is the field actually applied; `frame` is the
// nominal field defining the laser rotating frame (they differ only while
// sampling MW power fluctuations).
LindbladOps make_ops(const LevelScheme& scheme, const PulseSchedule& pulse,
                     const MicrowaveField& mw, const MicrowaveField& frame,
                     const RydbergPair& pair, const NoiseModel& noise,
                     int ions) {
  if (ions != 1 && ions != 2) throw ConfigError("ions must be 1 or 2");
  scheme.validate();
  pulse.validate();
  mw.validate();
  noise.validate();

  LindbladOps ops;
  ops.dim = ions == 1 ? kLevels : kLevels * kLevels;
  ops.pulse = &pulse;

  const double off = frame_offset(frame);
  auto add_ion = [&](int ion) {
    auto idx = [&](int lvl, int m) {
      return ions == 1 ? lvl : embed2(ion, lvl, m);
    };
    const int reps = ions == 1 ? 1 : kLevels;
    for (int m = 0; m < reps; ++m) {
      ops.h_static.add(idx(ie, m), idx(ie, m), pulse.delta);
      ops.h_static.add(idx(is, m), idx(is, m), mw.delta_mw - off);
      ops.h_static.add(idx(ip, m), idx(ip, m), -off);
      ops.h_static.add(idx(is, m), idx(ip, m), mw.omega_mw / 2.0);
      ops.h_static.add(idx(ip, m), idx(is, m), mw.omega_mw / 2.0);
      ops.coupling1.add(idx(iq0, m), idx(ie, m), 0.5);
      ops.coupling1.add(idx(ie, m), idx(iq0, m), 0.5);
      ops.coupling2.add(idx(ie, m), idx(is, m), 0.5);
      ops.coupling2.add(idx(is, m), idx(ie, m), 0.5);
    }
  };
  add_ion(0);
  if (ions == 2) {
    add_ion(1);
    pair.validate();
    const int sp = is * kLevels + ip;
    const int ps = ip * kLevels + is;
    // Flip-flop amplitude 2*V_max: <++|H_I|++> then equals Eq.-(2) V.
    const double j = 2.0 * pair.v_max();
    ops.h_static.add(sp, ps, j);
    ops.h_static.add(ps, sp, j);
  }

  // Decay channels, Gamma/2 into each of |q1>, |g>.
  Eigen::VectorXd big_d = Eigen::VectorXd::Zero(ops.dim);
  auto add_decay = [&](double gamma, int from, int ion) {
    if (gamma <= 0) return;
    for (int to : {iq1, ig}) ops.decays.push_back({gamma / 2.0, from, to, ion});
    if (ops.dim == kLevels) {
      big_d[from] += gamma;
    } else {
      for (int m = 0; m < kLevels; ++m) big_d[embed2(ion, from, m)] += gamma;
    }
  };
  std::vector<Eigen::VectorXd> dephasers;
  for (int ion = 0; ion < ions; ++ion) {
    add_decay(scheme.gamma_e, ie, ion);
    add_decay(scheme.gamma_s, is, ion);
    add_decay(scheme.gamma_p, ip, ion);
    if (noise.gamma1 > 0)
      dephasers.push_back(dephasing_vector(1, noise.gamma1, ops.dim, ion));
    if (noise.gamma2 > 0)
      dephasers.push_back(dephasing_vector(2, noise.gamma2, ops.dim, ion));
  }
  for (const auto& u : dephasers) big_d += u.cwiseProduct(u);

  ops.phi = Eigen::ArrayXXd::Zero(ops.dim, ops.dim);
  for (const auto& u : dephasers)
    ops.phi += (u * u.transpose()).array();
  ops.phi.colwise() -= 0.5 * big_d.array();
  ops.phi.rowwise() -= 0.5 * big_d.transpose().array();
  return ops;
}

std::vector<double> gaussian_samples(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  auto uniform = [&] {
    return (static_cast<double>(rng() >> 11) + 0.5) / 9007199254740992.0;
  };
  std::vector<double> out;
  out.reserve(n + 1);
  while (static_cast<int>(out.size()) < n) {
    const double u1 = uniform(), u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    out.push_back(r * std::cos(2.0 * units::pi * u2));
    out.push_back(r * std::sin(2.0 * units::pi * u2));
  }
  out.resize(n);
  return out;
}

}  // namespace

double PulseSchedule::omega1(double t) const {
  return shape == PulseShape::constant ? omega1_max
                                       : omega1_max * stirap_env1(t, duration);
}

double PulseSchedule::omega2(double t) const {
  return shape == PulseShape::constant ? omega2_max
                                       : omega2_max * stirap_env2(t, duration);
}

void PulseSchedule::validate() const {
  if (duration <= 0) throw ConfigError("pulse duration must be > 0");
  if (omega1_max < 0 || omega2_max < 0)
    throw ConfigError("pulse envelopes must be nonnegative");
}

PulseSchedule double_stirap_schedule(double omega1_max, double omega2_max,
                                     double delta, double duration) {
  PulseSchedule p;
  p.shape = PulseShape::double_stirap_sinusoid;
  p.omega1_max = omega1_max;
  p.omega2_max = omega2_max;
  p.delta = delta;
  p.duration = duration;
  p.validate();
  return p;
}

void NoiseModel::validate() const {
  if (gamma1 < 0 || gamma2 < 0) throw ConfigError("linewidths must be >= 0");
  if (mw_fractional_sigma < 0) throw ConfigError("mw sigma must be >= 0");
  if (shots < 1) throw ConfigError("shots must be >= 1");
}

void Trajectory::validate_states(double trace_tol, double herm_tol,
                                 double eig_floor) const {
  for (const auto& st : states) st.validate(trace_tol, herm_tol, eig_floor);
  for (std::size_t i = 1; i < times.size(); ++i)
    if (times[i] <= times[i - 1])
      throw ConfigError("trajectory times must be strictly increasing");
}

Operator build_hamiltonian(double t, const PulseSchedule& pulse,
                           const MicrowaveField& mw, const RydbergPair& pair,
                           int ions) {
  if (t < 0 || t > pulse.duration)
    throw ConfigError("time outside the pulse window");
  NoiseModel quiet;
  quiet.shots = 1;
  const LindbladOps ops =
      make_ops(LevelScheme{}, pulse, mw, mw, pair, quiet, ions);
  Matrix h = ops.h_static.dense(ops.dim) +
             pulse.omega1(t) * ops.coupling1.dense(ops.dim) +
             pulse.omega2(t) * ops.coupling2.dense(ops.dim);
  return Operator(std::move(h));
}

std::vector<Operator> collapse_operators(const LevelScheme& scheme,
                                         const NoiseModel& noise, int ions) {
  if (ions != 1 && ions != 2) throw ConfigError("ions must be 1 or 2");
  scheme.validate();
  noise.validate();
  const int dim = ions == 1 ? kLevels : kLevels * kLevels;
  std::vector<Operator> out;

  auto embed_single = [&](const Matrix& c, int ion) {
    if (ions == 1) return Operator(c);
    Operator id = Operator::identity(kLevels);
    Operator oc(c);
    return ion == 0 ? tensor(oc, id) : tensor(id, oc);
  };

  for (int ion = 0; ion < ions; ++ion) {
    for (auto [gamma, from] : {std::pair{scheme.gamma_e, ie},
                               std::pair{scheme.gamma_s, is},
                               std::pair{scheme.gamma_p, ip}}) {
      if (gamma <= 0) continue;
      for (int to : {iq1, ig}) {
        Matrix c = Matrix::Zero(kLevels, kLevels);
        c(to, from) = std::sqrt(gamma / 2.0);
        out.push_back(embed_single(c, ion));
      }
    }
    for (int leg : {1, 2}) {
      const double gamma = leg == 1 ? noise.gamma1 : noise.gamma2;
      if (gamma <= 0) continue;
      Eigen::VectorXd u = dephasing_vector(leg, gamma, dim, ion);
      Matrix c = u.cast<Complex>().asDiagonal();
      out.push_back(Operator(std::move(c)));
    }
  }
  return out;
}

Vector rydberg_state_vector(const MicrowaveField& mw) {
  Vector r = Vector::Zero(kLevels);
  if (mw.omega_mw == 0.0 && mw.delta_mw == 0.0) {
    r[is] = 1.0;
    return r;
  }
  const DressedStates ds = dressed_states(mw);
  r[is] = ds.cs_plus;
  r[ip] = ds.cp_plus;
  return r;
}

Trajectory evolve(const DensityState& rho0, const LevelScheme& scheme,
                  const PulseSchedule& pulse, const MicrowaveField& mw,
                  const RydbergPair& pair, const NoiseModel& noise,
                  const std::vector<double>& grid, const EvolveOptions& opts) {
  if (rho0.dim != kLevels && rho0.dim != kLevels * kLevels)
    throw ConfigError("evolve expects a 6- or 36-dimensional state");
  const int ions = rho0.dim == kLevels ? 1 : 2;
  if (grid.empty()) throw ConfigError("empty sample grid");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (grid[i] <= grid[i - 1])
      throw ConfigError("sample grid must be strictly increasing");
  if (grid.front() < 0 || grid.back() > pulse.duration * (1 + 1e-12))
    throw ConfigError("sample grid outside [0, duration]");
  rho0.validate(1e-9, 1e-9, -1e-8);

  const double t_end = grid.back();
  const double fastest =
      std::max({std::abs(pulse.delta), pulse.omega1_max, pulse.omega2_max,
                mw.omega_mw, std::abs(mw.delta_mw),
                ions == 2 ? 2.0 * pair.v_max() : 0.0, 1.0 / t_end});

  Trajectory traj;
  traj.times = grid;
  std::vector<Matrix> acc(grid.size(),
                          Matrix::Zero(rho0.dim, rho0.dim));

  auto run_one = [&](const MicrowaveField& shot_mw) {
    const LindbladOps ops =
        make_ops(scheme, pulse, shot_mw, mw, pair, noise, ions);
    auto f = [&ops](double t, const Matrix& y, Matrix& dy) {
      ops.rhs(t, y, dy);
    };
    auto sample = [&](std::size_t i, double, const Matrix& y) {
      acc[i] += 0.5 * (y + y.adjoint());
    };
    OdeOptions oo;
    oo.rtol = opts.rtol;
    oo.atol = opts.atol;
    oo.max_step = opts.max_step;
    try {
      return integrate_adaptive(f, 0.0, t_end, rho0.rho, grid, sample, oo);
    } catch (const NumericalError&) {
      // Fallback: bound the step so that Omega_max * h <= 0.1.
      for (auto& m : acc) m.setZero();
      oo.max_step = 0.1 / fastest;
      return integrate_adaptive(f, 0.0, t_end, rho0.rho, grid, sample, oo);
    }
  };

  int shots_used = 1;
  if (noise.mw_fractional_sigma == 0.0) {
    traj.stats = run_one(mw);
  } else {
    shots_used = noise.shots;
    const auto xi = gaussian_samples(noise.shots, noise.seed);
    for (int k = 0; k < noise.shots; ++k) {
      MicrowaveField shot = mw;
      shot.omega_mw =
          std::max(0.0, mw.omega_mw * (1.0 + noise.mw_fractional_sigma * xi[k]));
      const OdeStats st = run_one(shot);
      traj.stats.steps += st.steps;
      traj.stats.rejected += st.rejected;
      traj.stats.worst_error = std::max(traj.stats.worst_error, st.worst_error);
    }
  }

  traj.states.reserve(grid.size());
  for (auto& m : acc) {
    DensityState st;
    st.dim = rho0.dim;
    st.rho = m / static_cast<double>(shots_used);
    traj.states.push_back(std::move(st));
  }
  return traj;
}

RabiCurves rabi_experiment(const RabiSettings& settings,
                           const RabiPanel& panel) {
  PulseSchedule pulse;
  pulse.shape = PulseShape::constant;
  pulse.omega1_max = panel.omega1;
  pulse.omega2_max = panel.omega2;
  pulse.delta = settings.delta;
  pulse.duration = settings.span_us;

  std::vector<double> grid(settings.points);
  for (int i = 0; i < settings.points; ++i)
    grid[i] = settings.span_us * i / (settings.points - 1);

  RabiCurves out;
  out.label = panel.label;
  out.t_us = grid;
  out.interaction = interaction_strength(panel.mw, settings.pair);

  const Vector r = rydberg_state_vector(panel.mw);
  Vector q0 = Vector::Zero(kLevels);
  q0[iq0] = 1.0;

  {
    const auto traj = evolve(DensityState::pure(q0), settings.scheme, pulse,
                             panel.mw, settings.pair, settings.noise, grid,
                             settings.ode);
    out.p_single.reserve(grid.size());
    for (const auto& st : traj.states)
      out.p_single.push_back(std::real(r.adjoint() * st.rho * r));
  }
  {
    const Vector q00 = tensor(q0, q0);
    const Vector rr = tensor(r, r);
    Vector sym = (tensor(q0, r) + tensor(r, q0)) / std::sqrt(2.0);
    const auto traj = evolve(DensityState::pure(q00), settings.scheme, pulse,
                             panel.mw, settings.pair, settings.noise, grid,
                             settings.ode);
    out.p_rr.reserve(grid.size());
    for (const auto& st : traj.states) {
      out.p_rr.push_back(std::real(rr.adjoint() * st.rho * rr));
      out.p_symmetric.push_back(std::real(sym.adjoint() * st.rho * sym));
      out.p_return.push_back(std::real(q00.adjoint() * st.rho * q00));
    }
  }
  return out;
}

OscillationFit fit_oscillation(const std::vector<double>& t,
                               const std::vector<double>& y) {
  if (t.size() != y.size() || t.size() < 8)
    throw ConfigError("fit_oscillation needs matched series of >= 8 points");
  const std::size_t n = t.size();
  const double span = t.back() - t.front();

  double mean = 0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(n);

  // Zero crossings of the detrended signal give the first frequency guess.
  std::vector<double> crossings;
  for (std::size_t i = 1; i < n; ++i) {
    const double a = y[i - 1] - mean, b = y[i] - mean;
    if (a == 0.0 || a * b >= 0) continue;
    crossings.push_back(t[i - 1] + (t[i] - t[i - 1]) * a / (a - b));
  }
  double omega0 = 2.0 * units::pi / span;
  if (crossings.size() >= 2)
    omega0 = units::pi * static_cast<double>(crossings.size() - 1) /
             (crossings.back() - crossings.front());

  auto solve_sse = [&](double omega, double decay, OscillationFit* fit) {
    Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
    Eigen::Vector3d atb = Eigen::Vector3d::Zero();
    for (std::size_t i = 0; i < n; ++i) {
      const double env = std::exp(-decay * (t[i] - t.front()));
      const Eigen::Vector3d row(1.0, env * std::cos(omega * t[i]),
                                env * std::sin(omega * t[i]));
      ata += row * row.transpose();
      atb += row * y[i];
    }
    const Eigen::Vector3d c = ata.ldlt().solve(atb);
    double sse = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const double env = std::exp(-decay * (t[i] - t.front()));
      const double m = c[0] + env * (c[1] * std::cos(omega * t[i]) +
                                     c[2] * std::sin(omega * t[i]));
      sse += (y[i] - m) * (y[i] - m);
    }
    if (fit) {
      fit->omega = omega;
      fit->decay = decay;
      fit->offset = c[0];
      fit->contrast = std::hypot(c[1], c[2]);
      fit->rms_residual = std::sqrt(sse / static_cast<double>(n));
    }
    return sse;
  };

  auto scan = [&](double w_lo, double w_hi, int w_pts,
                  const std::vector<double>& decays) {
    double best_sse = 1e300;
    OscillationFit best;
    for (int iw = 0; iw < w_pts; ++iw) {
      const double w = w_lo + (w_hi - w_lo) * iw / (w_pts - 1);
      for (double g : decays) {
        OscillationFit fit;
        const double sse = solve_sse(w, g, &fit);
        if (sse < best_sse) {
          best_sse = sse;
          best = fit;
        }
      }
    }
    return best;
  };

  const std::vector<double> coarse_decays = {0.0,       0.02 / span, 0.1 / span,
                                             0.3 / span, 1.0 / span, 3.0 / span};
  OscillationFit best = scan(0.85 * omega0, 1.15 * omega0, 61, coarse_decays);
  std::vector<double> fine_decays;
  for (double f : {0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0})
    fine_decays.push_back(best.decay * f);
  fine_decays.push_back(0.0);
  best = scan(0.97 * best.omega, 1.03 * best.omega, 81, fine_decays);
  best = scan(0.997 * best.omega, 1.003 * best.omega, 41, {best.decay});
  return best;
}

}  // namespace rydion
