#pragma once

// Periodic grids, the discrete Fourier pair and spectral calculus.
//
// Transform convention (fixed, independent of the FFT backend):
//
//   forward:  U~_k = (1/N) sum_j U_j exp(-i k X_j),   X_j = 2 pi j / N
//   inverse:  U_j  = sum_k U~_k exp(i k X_j),          k = -N/2 .. N/2-1
//
// Coefficients are stored in transform-native (wrapped) order: slot s holds
// k = s for s < N/2 and k = s - N otherwise, so slot N/2 is the Nyquist mode
// k = -N/2. Use Grid::wavenumber / Grid::slot_of to move between the two.

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace rosenau {

using complex = std::complex<double>;

class Grid {
 public:
  // Throws ConfigError unless b > a, N even and N >= 4.
  Grid(double a, double b, int n);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  int size() const noexcept { return n_; }
  double length() const noexcept { return b_ - a_; }
  double spacing() const noexcept { return (b_ - a_) / n_; }
  // 2 pi / (b - a): converts integer wavenumbers to physical ones.
  double scale() const noexcept { return scale_; }

  double node(int j) const noexcept { return a_ + j * spacing(); }
  std::vector<double> nodes() const;

  int wavenumber(int slot) const noexcept {
    return slot < n_ / 2 ? slot : slot - n_;
  }
  int slot_of(int k) const noexcept { return k >= 0 ? k : k + n_; }
  // Physical wavenumber scale * k of a storage slot.
  double angular(int slot) const noexcept { return scale_ * wavenumber(slot); }
  int nyquist_slot() const noexcept { return n_ / 2; }
  std::vector<int> wavenumbers() const;

  bool operator==(const Grid& other) const noexcept {
    return a_ == other.a_ && b_ == other.b_ && n_ == other.n_;
  }

 private:
  double a_;
  double b_;
  int n_;
  double scale_;
};

Grid make_grid(double a, double b, int n);

struct Field {
  Grid grid;
  std::vector<double> values;

  Field(Grid g, std::vector<double> v);
  // Zero field on g.
  explicit Field(Grid g);

  int size() const noexcept { return grid.size(); }
  double operator[](int j) const { return values[j]; }
  double& operator[](int j) { return values[j]; }
};

struct SpectralField {
  Grid grid;
  std::vector<complex> coeffs;

  SpectralField(Grid g, std::vector<complex> c);
  explicit SpectralField(Grid g);

  int size() const noexcept { return grid.size(); }
  // Coefficient of integer wavenumber k in [-N/2, N/2).
  complex mode(int k) const { return coeffs[grid.slot_of(k)]; }
};

// Samples f at the grid nodes.
Field sample(const Grid& grid, const std::function<double(double)>& f);

SpectralField forward_dft(const Field& f);
// Throws SymmetryError when the imaginary residue exceeds 1e-10 of the field's
// max-norm; smaller residue is discarded.
Field inverse_dft(const SpectralField& s);

// d^order f / dx^order in physical units; order must be 1..4. The Nyquist
// mode is dropped for odd orders so the result stays real.
Field spectral_derivative(const Field& f, int order);
SpectralField spectral_derivative(const SpectralField& s, int order);

// Periodic rectangle rule, dx * sum_j f_j.
double quadrature(const Field& f);

// f(x - shift) by phase rotation of every mode.
SpectralField translate(const SpectralField& s, double shift);
Field translate(const Field& f, double shift);

// Trigonometric interpolation of f onto another resolution of the same
// interval. Identity when target == f.grid.
Field resample(const Field& f, const Grid& target);

// Largest |imag| / max|z| ratio of inverse-transforming s (0 for a zero field).
double imaginary_residue(const SpectralField& s);

double max_abs(std::span<const double> v);
double max_abs_diff(std::span<const double> x, std::span<const double> y);

namespace detail {

// Raw transforms on contiguous buffers of length n, same normalization as
// forward_dft/inverse_dft. Thread-safe; plans are cached per length.
void fft_forward(std::span<const complex> in, std::span<complex> out);
void fft_inverse(std::span<const complex> in, std::span<complex> out);

}  // namespace detail

}  // namespace rosenau
