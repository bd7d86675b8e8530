#include "rosenau/petviashvili.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "rosenau/solver.hpp"

namespace rosenau {

namespace {

// Nodal values of the inverse transform; SymmetryError on a complex result.
std::vector<double> to_nodes(const SpectralField& s) { return inverse_dft(s).values; }

// Residuals are near roundoff, so their imaginary part relative to their own
// size is meaningless; take the real part without the symmetry check.
Field residual_nodes(const SpectralField& r) {
  std::vector<complex> z(r.size());
  detail::fft_inverse(r.coeffs, z);
  Field out(r.grid);
  for (int j = 0; j < r.size(); ++j) out[j] = z[j].real();
  return out;
}

SpectralField power_spectrum(const Grid& grid, std::span<const double> q, double p) {
  // nonlinear_flux divides by p+1; undo that so the spectrum is of Q^{p+1}.
  std::vector<double> flux(q.size());
  nonlinear_flux(q, p, flux);
  Field f(grid);
  for (std::size_t j = 0; j < q.size(); ++j) f[j] = flux[j] * (p + 1.0);
  return forward_dft(f);
}

struct FactorParts {
  double numerator;
  double denominator;
};

FactorParts factor_parts(const SpectralField& Qhat, const SpectralField& power,
                         const std::vector<double>& symbol, double p) {
  double num = 0.0;
  complex pairing = 0.0;
  for (int s = 0; s < Qhat.size(); ++s) {
    num += symbol[s] * std::norm(Qhat.coeffs[s]);
    pairing += std::conj(Qhat.coeffs[s]) * power.coeffs[s];
  }
  const double den = pairing.real() / (p + 1.0);
  if (std::abs(pairing.imag()) > 1e-10 * std::max(std::abs(pairing.real()), 1e-300)) {
    std::ostringstream msg;
    msg << "stabilizing factor pairing is not real (imag " << pairing.imag()
        << ", real " << pairing.real() << ")";
    throw SymmetryError(msg.str());
  }
  return {num, den};
}

double factor_from(const FactorParts& parts) {
  if (!(std::abs(parts.denominator) >= 1e-14 * std::abs(parts.numerator)) ||
      parts.denominator == 0.0) {
    std::ostringstream msg;
    msg << "stabilizing factor denominator " << parts.denominator
        << " is negligible against numerator " << parts.numerator
        << "; the iteration collapsed toward zero";
    throw NumericalError("degenerate_denominator", msg.str());
  }
  return parts.numerator / parts.denominator;
}

double factor_power(double factor, double nu) {
  const double out = std::pow(factor, nu);
  if (!std::isfinite(out)) {
    std::ostringstream msg;
    msg << "M_n^nu is not a real number for M_n=" << factor << ", nu=" << nu;
    throw NumericalError("negative_factor", msg.str());
  }
  return out;
}

SpectralField update(const SpectralField& power, const std::vector<double>& symbol,
                     double scale, double p) {
  SpectralField next(power.grid);
  for (int s = 0; s < power.size(); ++s) {
    next.coeffs[s] = scale * power.coeffs[s] / ((p + 1.0) * symbol[s]);
  }
  return next;
}

void guard_overflow(std::span<const double> q, double bound, int iteration) {
  const double peak = max_abs(q);
  if (!std::isfinite(peak) || peak > bound) {
    std::ostringstream msg;
    msg << "Petviashvili iterate " << iteration << " overflowed: max|Q| = " << peak
        << " exceeds " << bound;
    throw NumericalError("overflow", msg.str());
  }
}

double l2_diff(std::span<const double> x, std::span<const double> y, double dx) {
  double sum = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) sum += (x[j] - y[j]) * (x[j] - y[j]);
  return std::sqrt(dx * sum);
}

// Peak of the trigonometric interpolant near node j, by Newton on Q'.
double refine_peak(const SpectralField& Qhat, double x0) {
  const Grid& g = Qhat.grid;
  double x = x0;
  for (int it = 0; it < 20; ++it) {
    complex d1 = 0.0, d2 = 0.0;
    for (int s = 0; s < g.size(); ++s) {
      if (s == g.nyquist_slot()) continue;
      const double K = g.angular(s);
      const double phase = K * (x - g.a());
      const complex e(std::cos(phase), std::sin(phase));
      d1 += complex(0.0, K) * Qhat.coeffs[s] * e;
      d2 += -K * K * Qhat.coeffs[s] * e;
    }
    if (d2.real() == 0.0) break;
    const double dx = -d1.real() / d2.real();
    x += dx;
    if (std::abs(dx) < 1e-15 * g.length()) break;
  }
  return x;
}

}  // namespace

Field PetviashviliConfig::seed() const {
  if (initial_guess) return *initial_guess;
  const double mid = 0.5 * (grid.a() + grid.b());
  return sample(grid, [mid](double x) { return std::exp(-(x - mid) * (x - mid)); });
}

std::vector<double> linear_symbol(const Grid& grid, double c) {
  std::vector<double> symbol(grid.size());
  for (int s = 0; s < grid.size(); ++s) {
    const double K = grid.angular(s);
    symbol[s] = c * K * K * K * K + c - 1.0;
  }
  return symbol;
}

void PetviashviliConfig::validate() const {
  if (!std::isfinite(c)) throw ConfigError("wave speed c must be finite");
  if (!(p > 0.0) || !std::isfinite(p)) throw ConfigError("p must be positive");
  if (!std::isfinite(effective_nu())) throw ConfigError("nu must be finite");
  if (max_iters < 1) throw ConfigError("max_iters must be at least 1");
  if (!(tol_error > 0.0 && tol_factor > 0.0 && tol_residual > 0.0)) {
    throw ConfigError("Petviashvili tolerances must be positive");
  }
  if (initial_guess && !(initial_guess->grid == grid)) {
    throw ConfigError("initial guess lives on a different grid than the profile");
  }
  const auto symbol = linear_symbol(grid, c);
  const double scale = std::max(1.0, *std::max_element(symbol.begin(), symbol.end(),
                                                       [](double x, double y) {
                                                         return std::abs(x) < std::abs(y);
                                                       }));
  for (int s = 0; s < grid.size(); ++s) {
    if (std::abs(symbol[s]) <= 1e-14 * std::abs(scale)) {
      std::ostringstream msg;
      msg << "c K^4 + c - 1 vanishes at wavenumber k=" << grid.wavenumber(s)
          << " for c=" << c << " (c = 1 is excluded); choose c > 1 or c < 0";
      throw ConfigError(msg.str());
    }
  }
}

bool PetviashviliConfig::denominator_changes_sign() const {
  const auto symbol = linear_symbol(grid, c);
  const auto [lo, hi] = std::minmax_element(symbol.begin(), symbol.end());
  return *lo < 0.0 && *hi > 0.0;
}

double SolitaryProfile::peak_amplitude() const {
  double best = 0.0;
  for (double v : Q.values) {
    if (std::abs(v) > std::abs(best)) best = v;
  }
  return best;
}

double stabilizing_factor(const SpectralField& Qhat, const PetviashviliConfig& cfg) {
  const auto symbol = linear_symbol(Qhat.grid, cfg.c);
  const auto q = to_nodes(Qhat);
  const auto power = power_spectrum(Qhat.grid, q, cfg.p);
  return factor_from(factor_parts(Qhat, power, symbol, cfg.p));
}

SpectralField iterate_once(const SpectralField& Qhat, const PetviashviliConfig& cfg) {
  cfg.validate();
  const auto symbol = linear_symbol(Qhat.grid, cfg.c);
  const auto q = to_nodes(Qhat);
  if (max_abs(q) == 0.0) return SpectralField(Qhat.grid);
  const auto power = power_spectrum(Qhat.grid, q, cfg.p);
  const double factor = factor_from(factor_parts(Qhat, power, symbol, cfg.p));
  SpectralField next =
      update(power, symbol, factor_power(factor, cfg.effective_nu()), cfg.p);
  guard_overflow(to_nodes(next), cfg.overflow_bound, 1);
  return next;
}

Field residual_operator(const SpectralField& Qhat, double c, double p) {
  const Grid& g = Qhat.grid;
  const auto symbol = linear_symbol(g, c);
  const auto q = to_nodes(Qhat);
  std::vector<double> flux(q.size());
  nonlinear_flux(q, p, flux);
  const SpectralField flux_hat = forward_dft(Field(g, flux));
  SpectralField r(g);
  for (int s = 0; s < g.size(); ++s) {
    r.coeffs[s] = symbol[s] * Qhat.coeffs[s] - flux_hat.coeffs[s];
  }
  return residual_nodes(r);
}

Field residual_operator(const Field& Q, double c, double p) {
  const Field q4 = spectral_derivative(Q, 4);
  std::vector<double> flux(Q.size());
  nonlinear_flux(Q.values, p, flux);
  Field r(Q.grid);
  for (int j = 0; j < Q.size(); ++j) {
    r[j] = c * q4[j] + (c - 1.0) * Q[j] - flux[j];
  }
  return r;
}

SolitaryProfile solve_profile(const PetviashviliConfig& cfg) {
  cfg.validate();
  const Grid& g = cfg.grid;
  const double nu = cfg.effective_nu();
  const auto symbol = linear_symbol(g, cfg.c);

  std::vector<std::string> warnings;
  if (cfg.denominator_changes_sign()) {
    std::ostringstream msg;
    msg << "c K^4 + c - 1 changes sign on the grid for c=" << cfg.c
        << "; no localized solitary wave is expected for 0 < c < 1";
    warnings.push_back(msg.str());
  }

  const Field seed = cfg.seed();
  if (max_abs(seed.values) == 0.0) {
    throw ConfigError("Petviashvili initial guess is identically zero");
  }

  SpectralField Qhat = forward_dft(seed);
  std::vector<double> q = seed.values;
  SpectralField power = power_spectrum(g, q, cfg.p);
  std::vector<IterationDiagnostics> history;

  auto fail = [&](const std::string& why) {
    std::ostringstream msg;
    msg << why;
    for (const auto& w : warnings) msg << " [warning: " << w << "]";
    throw NonConvergenceError(msg.str(), history);
  };

  for (int n = 1; n <= cfg.max_iters; ++n) {
    double factor = 0.0;
    try {
      factor = factor_from(factor_parts(Qhat, power, symbol, cfg.p));
      Qhat = update(power, symbol, factor_power(factor, nu), cfg.p);
    } catch (const NumericalError& e) {
      fail("iteration " + std::to_string(n) + ": " + e.what());
    }
    std::vector<double> next = to_nodes(Qhat);
    guard_overflow(next, cfg.overflow_bound, n);
    power = power_spectrum(g, next, cfg.p);

    IterationDiagnostics diag;
    diag.iteration = n;
    diag.error_max = max_abs_diff(next, q);
    diag.error_l2 = l2_diff(next, q, g.spacing());
    try {
      diag.factor = factor_from(factor_parts(Qhat, power, symbol, cfg.p));
    } catch (const NumericalError& e) {
      fail("iteration " + std::to_string(n) + ": " + e.what());
    }
    diag.factor_error = std::abs(1.0 - diag.factor);
    SpectralField r(g);
    for (int s = 0; s < g.size(); ++s) {
      r.coeffs[s] = symbol[s] * Qhat.coeffs[s] - power.coeffs[s] / (cfg.p + 1.0);
    }
    diag.residual = max_abs(residual_nodes(r).values);
    history.push_back(diag);
    q = std::move(next);

    if (diag.error_max < cfg.tol_error && diag.residual < cfg.tol_residual &&
        diag.factor_error < cfg.tol_factor) {
      SolitaryProfile profile{Field(g, q), Qhat, cfg.c, cfg.p, nu, n,
                              std::move(history), std::move(warnings)};
      if (cfg.recenter) {
        const auto it = std::max_element(q.begin(), q.end(), [](double x, double y) {
          return std::abs(x) < std::abs(y);
        });
        const int j = static_cast<int>(it - q.begin());
        const int target = g.size() / 2;
        double shift = (target - j) * g.spacing();
        const double peak = refine_peak(profile.spectrum, g.node(j));
        const double offset = peak - g.node(j);
        if (std::abs(offset) > 1e-9 * g.spacing()) shift -= offset;
        if (shift != 0.0) {
          profile.spectrum = translate(profile.spectrum, shift);
          profile.Q = inverse_dft(profile.spectrum);
          if (offset == 0.0 || std::abs(offset) <= 1e-9 * g.spacing()) {
            // Grid-aligned move: a rotation of the nodal values is exact.
            const int roll = target - j;
            std::vector<double> rolled(q.size());
            const int n_nodes = g.size();
            for (int i = 0; i < n_nodes; ++i) {
              rolled[((i + roll) % n_nodes + n_nodes) % n_nodes] = q[i];
            }
            profile.Q = Field(g, std::move(rolled));
          }
        }
      }
      return profile;
    }
  }
  const auto& last = history.back();
  std::ostringstream msg;
  msg << "Petviashvili iteration did not converge in " << cfg.max_iters
      << " iterations (Error=" << last.error_max << ", |1-M|=" << last.factor_error
      << ", RES=" << last.residual << ")";
  fail(msg.str());
  return {Field(g), SpectralField(g), cfg.c, cfg.p, nu, 0, {}, {}};  // unreachable
}

}  // namespace rosenau
