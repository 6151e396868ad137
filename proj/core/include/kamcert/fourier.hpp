#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "kamcert/interval.hpp"

namespace kamcert {

/// Values of a function on the regular grid theta_j = j/N, j = 0..N-1.
class GridSamples {
 public:
  GridSamples() = default;
  explicit GridSamples(std::vector<ComplexInterval> values) : values_(std::move(values)) {}
  GridSamples(std::size_t n, Precision prec) : values_(n, ComplexInterval(prec)) {}

  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] Precision precision() const;
  [[nodiscard]] const ComplexInterval& operator[](std::size_t j) const { return values_[j]; }
  ComplexInterval& operator[](std::size_t j) { return values_[j]; }
  [[nodiscard]] const std::vector<ComplexInterval>& values() const noexcept { return values_; }

 private:
  std::vector<ComplexInterval> values_;
};

/// Truncated Fourier series sum_{k in I_N} f_k e^{2 pi i k theta} with
/// I_N = {-N/2, ..., N/2 - 1}.
///
/// Coefficients are stored densely in FFT order (k mod N). The hermitian flag
/// records that the model encloses the coefficients of a real function, so
/// coeff(-k) = conj(coeff(k)) for every representable pair.
class FourierModel {
 public:
  FourierModel() = default;
  /// Zero model. Throws SizeNotPowerOfTwo.
  FourierModel(std::size_t n, Precision prec, bool hermitian = false);
  /// Takes coefficients in FFT order.
  FourierModel(std::vector<ComplexInterval> fft_order, bool hermitian);

  [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
  [[nodiscard]] Precision precision() const;
  [[nodiscard]] bool hermitian() const noexcept { return hermitian_; }
  [[nodiscard]] long min_index() const { return -static_cast<long>(size() / 2); }
  [[nodiscard]] long max_index() const { return static_cast<long>(size() / 2) - 1; }

  /// Throws IndexOutOfRange unless -N/2 <= k < N/2.
  [[nodiscard]] const ComplexInterval& coeff(long k) const;
  ComplexInterval& coeff(long k);
  [[nodiscard]] const std::vector<ComplexInterval>& fft_order() const noexcept { return coeffs_; }

  /// Intersects each pair with its conjugate partner and forces real zero and
  /// Nyquist modes, then sets the flag. Valid only when the model encloses
  /// the DFT of real data; throws NotHermitian if an intersection is empty.
  void make_hermitian();
  /// Sets the flag without touching coefficients.
  void assume_hermitian(bool on) noexcept { hermitian_ = on; }

  /// Zero-pads or truncates to n modes (n a power of two).
  [[nodiscard]] FourierModel resized(std::size_t n) const;

  FourierModel& operator+=(const FourierModel& o);
  FourierModel& operator-=(const FourierModel& o);
  FourierModel& operator*=(const Interval& s);

 private:
  [[nodiscard]] std::size_t slot(long k) const;

  std::vector<ComplexInterval> coeffs_;
  bool hermitian_ = false;
};

FourierModel operator+(FourierModel a, const FourierModel& b);
FourierModel operator-(FourierModel a, const FourierModel& b);
FourierModel operator*(FourierModel a, const Interval& s);

/// Encloses N^-1 sum_j f_j e^{-2 pi i k j/N} for every selection of point
/// values from the samples. Radix-2 interval FFT; throws SizeNotPowerOfTwo.
/// The result is not marked hermitian.
FourierModel dft(const GridSamples& samples);

/// Encloses sum_k f_k e^{2 pi i k j/N} at every grid point.
GridSamples idft(const FourierModel& model);

/// Enclosure of sum_k |f_k| e^{2 pi |k| rho}. Throws DomainError if rho.lo < 0.
Interval fourier_norm(const FourierModel& model, const Interval& rho);

/// Coefficients multiplied by 2 pi i k.
FourierModel derivative(const FourierModel& model);

/// Coefficients multiplied by e^{2 pi i k omega}, i.e. theta -> f(theta + omega).
FourierModel rotate(const FourierModel& model, const Interval& omega);

/// Series value over every real theta in the interval.
ComplexInterval eval(const FourierModel& model, const Interval& theta);
/// Series value at complex theta (rectangle).
ComplexInterval eval(const FourierModel& model, const ComplexInterval& theta);

/// Box containing f(theta) for every real theta. Covers the circle by the N
/// cells theta_j + [0, 1/N]; each cell is the IDFT of f_k e^{2 pi i k [0, 1/N]}
/// intersected with a second-order Taylor enclosure. Throws NotHermitian.
ComplexInterval range_on_circle(const FourierModel& model);

/// Enclosure of |f| over the closed strip |Im theta| <= rho: the cellwise
/// modulus on the circle widened by sum_k (e^{2 pi |k| rho} - 1)|f_k|, with
/// the lower end clamped at 0. Throws NotHermitian, DomainError.
Interval modulus_range_on_strip(const FourierModel& model, const Interval& rho);

/// Symmetric [-M, M] with |Im f| <= M on the strip |Im theta| <= rho, from
/// the real series with coefficients i f_k sinh(2 pi k rho). Throws
/// NotHermitian, DomainError.
Interval imag_bound_on_strip(const FourierModel& model, const Interval& rho);

/// Plain-text form: a header with N, precision and the hermitian flag, then
/// one line "k re_lo re_hi im_lo im_hi" per mode, rounded outward.
void write_model(std::ostream& os, const FourierModel& model);
/// Inverse of write_model. Throws ConfigError on malformed input.
FourierModel read_model(std::istream& is);

}  // namespace kamcert
