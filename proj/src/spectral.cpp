#include "rosenau/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

#include "rosenau/errors.hpp"

namespace rosenau {

namespace {

constexpr double kImagResidueTol = 1e-10;

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;

  PlanPair() = default;
  PlanPair(const PlanPair&) = delete;
  PlanPair& operator=(const PlanPair&) = delete;
  ~PlanPair() {
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

// The FFTW planner is not thread-safe; execution of an existing plan on
// new arrays is. FFTW_ESTIMATE keeps plan choice (and therefore rounding)
// identical from run to run.
const PlanPair& plans_for(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<PlanPair>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    auto pair = std::make_unique<PlanPair>();
    std::vector<complex> scratch_in(n), scratch_out(n);
    auto* in = reinterpret_cast<fftw_complex*>(scratch_in.data());
    auto* out = reinterpret_cast<fftw_complex*>(scratch_out.data());
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    pair->forward = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, flags);
    pair->backward = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, flags);
    if (!pair->forward || !pair->backward) {
      throw NumericalError("fft", "FFTW failed to create a plan of length " +
                                      std::to_string(n));
    }
    slot = std::move(pair);
  }
  return *slot;
}

}  // namespace

Grid::Grid(double a, double b, int n) : a_(a), b_(b), n_(n) {
  if (!(std::isfinite(a) && std::isfinite(b)) || !(b > a)) {
    std::ostringstream msg;
    msg << "invalid domain [" << a << ", " << b
        << "]: need finite endpoints with b > a";
    throw ConfigError(msg.str());
  }
  if (n < 4 || n % 2 != 0) {
    throw ConfigError("invalid grid size N=" + std::to_string(n) +
                      ": N must be even and at least 4");
  }
  scale_ = 2.0 * std::numbers::pi / (b - a);
}

std::vector<double> Grid::nodes() const {
  std::vector<double> x(n_);
  for (int j = 0; j < n_; ++j) x[j] = node(j);
  return x;
}

std::vector<int> Grid::wavenumbers() const {
  std::vector<int> k(n_);
  for (int s = 0; s < n_; ++s) k[s] = wavenumber(s);
  return k;
}

Grid make_grid(double a, double b, int n) { return Grid(a, b, n); }

Field::Field(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (static_cast<int>(values.size()) != grid.size()) {
    throw ConfigError("field has " + std::to_string(values.size()) +
                      " values but the grid has " +
                      std::to_string(grid.size()) + " nodes");
  }
}

Field::Field(Grid g) : grid(g), values(g.size(), 0.0) {}

SpectralField::SpectralField(Grid g, std::vector<complex> c)
    : grid(g), coeffs(std::move(c)) {
  if (static_cast<int>(coeffs.size()) != grid.size()) {
    throw ConfigError("spectrum has " + std::to_string(coeffs.size()) +
                      " modes but the grid has " + std::to_string(grid.size()) +
                      " nodes");
  }
}

SpectralField::SpectralField(Grid g) : grid(g), coeffs(g.size()) {}

Field sample(const Grid& grid, const std::function<double(double)>& f) {
  Field out(grid);
  for (int j = 0; j < grid.size(); ++j) out[j] = f(grid.node(j));
  return out;
}

namespace detail {

void fft_forward(std::span<const complex> in, std::span<complex> out) {
  const int n = static_cast<int>(in.size());
  const auto& plans = plans_for(n);
  // FFTW does not modify the input of an out-of-place c2c transform.
  fftw_execute_dft(plans.forward,
                   reinterpret_cast<fftw_complex*>(const_cast<complex*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
  const double inv_n = 1.0 / n;
  for (auto& z : out) z *= inv_n;
}

void fft_inverse(std::span<const complex> in, std::span<complex> out) {
  const int n = static_cast<int>(in.size());
  const auto& plans = plans_for(n);
  fftw_execute_dft(plans.backward,
                   reinterpret_cast<fftw_complex*>(const_cast<complex*>(in.data())),
                   reinterpret_cast<fftw_complex*>(out.data()));
}

}  // namespace detail

SpectralField forward_dft(const Field& f) {
  std::vector<complex> in(f.size());
  for (int j = 0; j < f.size(); ++j) {
    if (!std::isfinite(f[j])) {
      throw NumericalError("non_finite",
                           "forward_dft: non-finite value at node " +
                               std::to_string(j));
    }
    in[j] = f[j];
  }
  SpectralField out(f.grid);
  detail::fft_forward(in, out.coeffs);
  return out;
}

namespace {

double residue_of(std::span<const complex> z) {
  double norm = 0.0;
  double imag = 0.0;
  for (const auto& v : z) {
    norm = std::max(norm, std::abs(v));
    imag = std::max(imag, std::abs(v.imag()));
  }
  return norm > 0.0 ? imag / norm : 0.0;
}

}  // namespace

double imaginary_residue(const SpectralField& s) {
  std::vector<complex> z(s.size());
  detail::fft_inverse(s.coeffs, z);
  return residue_of(z);
}

Field inverse_dft(const SpectralField& s) {
  std::vector<complex> z(s.size());
  detail::fft_inverse(s.coeffs, z);
  const double residue = residue_of(z);
  if (residue > kImagResidueTol) {
    std::ostringstream msg;
    msg << "inverse_dft: imaginary residue " << residue
        << " of the field norm exceeds " << kImagResidueTol
        << "; spectrum is not conjugate-symmetric";
    throw SymmetryError(msg.str());
  }
  Field out(s.grid);
  for (int j = 0; j < s.size(); ++j) out[j] = z[j].real();
  return out;
}

SpectralField spectral_derivative(const SpectralField& s, int order) {
  if (order < 1 || order > 4) {
    throw ConfigError("spectral_derivative: unsupported order " +
                      std::to_string(order) + " (supported: 1..4)");
  }
  SpectralField out(s.grid);
  const Grid& g = s.grid;
  for (int slot = 0; slot < g.size(); ++slot) {
    const complex ik(0.0, g.angular(slot));
    complex factor = 1.0;
    for (int r = 0; r < order; ++r) factor *= ik;
    out.coeffs[slot] = factor * s.coeffs[slot];
  }
  if (order % 2 == 1) out.coeffs[g.nyquist_slot()] = 0.0;
  return out;
}

Field spectral_derivative(const Field& f, int order) {
  // f is real, so the derivative is too; K^order amplifies the rounding-level
  // asymmetry of high modes, which the reality check would misread.
  const SpectralField d = spectral_derivative(forward_dft(f), order);
  std::vector<complex> z(f.size());
  detail::fft_inverse(d.coeffs, z);
  Field out(f.grid);
  for (int j = 0; j < f.size(); ++j) out[j] = z[j].real();
  return out;
}

double quadrature(const Field& f) {
  double sum = 0.0;
  for (double v : f.values) sum += v;
  return f.grid.spacing() * sum;
}

SpectralField translate(const SpectralField& s, double shift) {
  SpectralField out(s.grid);
  const Grid& g = s.grid;
  for (int slot = 0; slot < g.size(); ++slot) {
    const double phase = -g.angular(slot) * shift;
    out.coeffs[slot] = s.coeffs[slot] * complex(std::cos(phase), std::sin(phase));
  }
  // A lone Nyquist mode cannot carry a phase and stay real; keep cos part.
  const int ny = g.nyquist_slot();
  out.coeffs[ny] = s.coeffs[ny] * std::cos(g.angular(ny) * shift);
  return out;
}

Field translate(const Field& f, double shift) {
  return inverse_dft(translate(forward_dft(f), shift));
}

Field resample(const Field& f, const Grid& target) {
  if (target == f.grid) return f;
  if (target.a() != f.grid.a() || target.b() != f.grid.b()) {
    throw ConfigError("resample: target grid covers a different interval");
  }
  const SpectralField src = forward_dft(f);
  const int n_src = f.size();
  const int n_dst = target.size();
  SpectralField dst(target);
  if (n_dst > n_src) {
    for (int k = -n_src / 2 + 1; k < n_src / 2; ++k) {
      dst.coeffs[target.slot_of(k)] = src.mode(k);
    }
    // Split the source Nyquist cosine evenly over +-N_src/2.
    const complex half = 0.5 * src.mode(-n_src / 2);
    dst.coeffs[target.slot_of(-n_src / 2)] = half;
    dst.coeffs[target.slot_of(n_src / 2)] = half;
  } else {
    for (int k = -n_dst / 2 + 1; k < n_dst / 2; ++k) {
      dst.coeffs[target.slot_of(k)] = src.mode(k);
    }
    // On the coarse nodes the +-N_dst/2 modes alias onto one cosine.
    const complex lo = src.mode(-n_dst / 2);
    const complex hi = src.mode(n_dst / 2);
    dst.coeffs[target.nyquist_slot()] = (lo + hi).real();
  }
  return inverse_dft(dst);
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw ConfigError("max_abs_diff: length mismatch");
  }
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

}  // namespace rosenau
