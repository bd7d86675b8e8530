#include "rosenau/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

bool is_integral(double q) { return std::abs(q - std::round(q)) < 1e-12; }

double int_power(double x, long n) {
  double result = 1.0;
  double base = x;
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

void check_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    std::ostringstream msg;
    msg << "nonlinearity exponent p must be a positive number, got " << p;
    throw ConfigError(msg.str());
  }
}

// Fixed-size RK4 integrator with preallocated work arrays.
class Stepper {
 public:
  Stepper(const Grid& grid, double p, const SolverOptions& options)
      : grid_(grid),
        p_(p),
        options_(options),
        multiplier_(grid.size()),
        nodes_(grid.size()),
        flux_(grid.size()),
        work_(grid.size()),
        k1_(grid.size()),
        k2_(grid.size()),
        k3_(grid.size()),
        k4_(grid.size()),
        stage_(grid.size()) {
    check_exponent(p);
    for (int s = 0; s < grid.size(); ++s) {
      const double K = grid.angular(s);
      multiplier_[s] = complex(0.0, -K / (1.0 + K * K * K * K));
    }
    multiplier_[grid.nyquist_slot()] = 0.0;
    const int n = grid.size();
    for (int s = 0; s < n; ++s) {
      const int k = std::abs(grid.wavenumber(s));
      if (options_.dealias && 3 * k > n) dealias_slots_.push_back(s);
    }
  }

  void rhs(std::span<const complex> u_hat, std::span<complex> out) {
    const int n = grid_.size();
    if (options_.nonlinear) {
      detail::fft_inverse(u_hat, work_);
      for (int j = 0; j < n; ++j) nodes_[j] = work_[j].real();
      nonlinear_flux(nodes_, p_, flux_);
      for (int j = 0; j < n; ++j) work_[j] = flux_[j];
      detail::fft_forward(work_, out);
      for (int s : dealias_slots_) out[s] = 0.0;
      for (int s = 0; s < n; ++s) out[s] = multiplier_[s] * (u_hat[s] + out[s]);
    } else {
      for (int s = 0; s < n; ++s) out[s] = multiplier_[s] * u_hat[s];
    }
  }

  // Advances u_hat in place by dt.
  void step(std::span<complex> u_hat, double dt) {
    const int n = grid_.size();
    const double half = 0.5 * dt;
    rhs(u_hat, k1_);
    for (int s = 0; s < n; ++s) stage_[s] = u_hat[s] + half * k1_[s];
    rhs(stage_, k2_);
    for (int s = 0; s < n; ++s) stage_[s] = u_hat[s] + half * k2_[s];
    rhs(stage_, k3_);
    for (int s = 0; s < n; ++s) stage_[s] = u_hat[s] + dt * k3_[s];
    rhs(stage_, k4_);
    const double sixth = dt / 6.0;
    for (int s = 0; s < n; ++s) {
      u_hat[s] += sixth * (k1_[s] + 2.0 * k2_[s] + 2.0 * k3_[s] + k4_[s]);
    }
  }

  // Throws if max|u| exceeds the bound or the spectrum is no longer finite.
  // sum |U~_k| bounds max|u|, so the inverse transform only runs near the edge.
  void guard(std::span<const complex> u_hat, double t, long step) {
    double bound = 0.0;
    for (const auto& z : u_hat) bound += std::abs(z);
    double peak = bound;
    if (std::isfinite(bound) && bound > options_.blowup_bound) {
      detail::fft_inverse(u_hat, work_);
      peak = 0.0;
      for (const auto& z : work_) peak = std::max(peak, std::abs(z.real()));
    }
    if (!std::isfinite(peak) || peak > options_.blowup_bound) {
      std::ostringstream msg;
      msg << "solution blew up at t=" << t << " (step " << step
          << "): max|u| = " << peak << " exceeds " << options_.blowup_bound;
      throw InstabilityError(msg.str(), t, step);
    }
  }

 private:
  Grid grid_;
  double p_;
  SolverOptions options_;
  std::vector<complex> multiplier_;
  std::vector<int> dealias_slots_;
  std::vector<double> nodes_;
  std::vector<double> flux_;
  std::vector<complex> work_;
  std::vector<complex> k1_, k2_, k3_, k4_, stage_;
};

}  // namespace

void nonlinear_flux(std::span<const double> u, double p, std::span<double> out) {
  const double q = p + 1.0;
  if (is_integral(q)) {
    const long n = std::lround(q);
    for (std::size_t j = 0; j < u.size(); ++j) out[j] = int_power(u[j], n) / q;
    return;
  }
  for (std::size_t j = 0; j < u.size(); ++j) {
    if (u[j] < 0.0) {
      std::ostringstream msg;
      msg << "u^(p+1) is undefined for u=" << u[j] << " < 0 at node " << j
          << " with non-integer p=" << p;
      throw DomainError(msg.str());
    }
    out[j] = std::pow(u[j], q) / q;
  }
}

SolverState::SolverState(const Field& u0, double p, double dt, double t)
    : SolverState(forward_dft(u0), p, dt, t) {}

SolverState::SolverState(SpectralField spectrum, double p, double dt, double t)
    : spectrum_(std::move(spectrum)), p_(p), dt_(dt), t_(t) {
  check_exponent(p);
  if (!(dt > 0.0) || !std::isfinite(dt)) {
    throw ConfigError("time step must be positive and finite");
  }
}

double EvolutionRecord::max_energy_drift() const {
  double drift = 0.0;
  for (double e : energy_series) drift = std::max(drift, std::abs(e - energy_series.front()));
  return drift;
}

SpectralField rhs_fourier(const SpectralField& s, double p,
                          const SolverOptions& options) {
  Stepper stepper(s.grid, p, options);
  SpectralField out(s.grid);
  stepper.rhs(s.coeffs, out.coeffs);
  return out;
}

SolverState rk4_step(const SolverState& state, const SolverOptions& options) {
  Stepper stepper(state.grid(), state.p(), options);
  SpectralField next = state.spectrum();
  stepper.step(next.coeffs, state.dt());
  const double t = state.time() + state.dt();
  stepper.guard(next.coeffs, t, 1);
  SolverState result(std::move(next), state.p(), state.dt(), t);
  (void)result.u();  // reality check
  return result;
}

EvolutionRecord evolve(const Field& u0, double p, double T, long M,
                       long snapshot_stride, const SolverOptions& options) {
  return evolve(forward_dft(u0), p, T, M, snapshot_stride, options);
}

EvolutionRecord evolve(const SpectralField& u0, double p, double T, long M,
                       long snapshot_stride, const SolverOptions& options) {
  if (M < 1) throw ConfigError("number of time steps M must be at least 1");
  if (!(T > 0.0) || !std::isfinite(T)) throw ConfigError("final time T must be positive");
  if (snapshot_stride < 1) throw ConfigError("snapshot stride must be at least 1");

  const double dt = T / static_cast<double>(M);
  Stepper stepper(u0.grid, p, options);
  SpectralField u_hat = u0;

  EvolutionRecord record{{}, {}, {}, u0};
  auto snapshot = [&](double t) {
    Field u = inverse_dft(u_hat);
    record.energy_series.push_back(energy(u));
    record.times.push_back(t);
    record.snapshots.push_back(std::move(u));
  };

  snapshot(0.0);
  for (long n = 1; n <= M; ++n) {
    stepper.step(u_hat.coeffs, dt);
    // n * dt rather than accumulated sums keeps times exact multiples of dt.
    const double t = n == M ? T : static_cast<double>(n) * dt;
    stepper.guard(u_hat.coeffs, t, n);
    if (n % snapshot_stride == 0 || n == M) snapshot(t);
  }
  record.final_spectrum = u_hat;
  return record;
}

double energy(const Field& u) {
  const Field uxx = spectral_derivative(u, 2);
  Field integrand(u.grid);
  for (int j = 0; j < u.size(); ++j) integrand[j] = u[j] * u[j] + uxx[j] * uxx[j];
  return quadrature(integrand);
}

}  // namespace rosenau
