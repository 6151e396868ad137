#include "kamcert/fourier.hpp"

#include <bit>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>

#include "kamcert/errors.hpp"

namespace kamcert {

namespace {

void require_power_of_two(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n)) throw SizeNotPowerOfTwo(n);
}

using TwiddleTable = std::vector<ComplexInterval>;

// e^{-2 pi i j/N} for j < N/2, enclosed once per (N, precision).
std::shared_ptr<const TwiddleTable> twiddles(std::size_t n, Precision prec) {
  static std::mutex mutex;
  static std::map<std::pair<std::size_t, Precision>, std::shared_ptr<const TwiddleTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, prec}];
  if (!slot) {
    auto table = std::make_shared<TwiddleTable>();
    table->reserve(n / 2);
    for (std::size_t j = 0; j < n / 2; ++j) {
      const Interval t = Interval::from_ratio(static_cast<long>(j), static_cast<long>(n), prec);
      table->push_back(conj(exp_2pi_i(t)));
    }
    slot = std::move(table);
  }
  return slot;
}

// In-place radix-2 decimation in time. inverse selects e^{+2 pi i j/N}.
void fft_in_place(std::vector<ComplexInterval>& a, bool inverse) {
  const std::size_t n = a.size();
  require_power_of_two(n);
  if (n == 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  const auto table = twiddles(n, a.front().precision());
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len / 2;
    const std::size_t step = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t j = 0; j < half; ++j) {
        ComplexInterval& lo = a[i + j];
        ComplexInterval& hi = a[i + j + half];
        ComplexInterval v = j == 0 ? hi : hi * (inverse ? conj((*table)[j * step]) : (*table)[j * step]);
        hi = lo - v;
        lo += v;
      }
    }
  }
}

Interval two_pi_k(long k, Precision prec) { return Interval::two_pi(prec) * k; }

bool is_exact_zero(const ComplexInterval& z) {
  return z.re().is_point() && z.re().lo().is_zero() && z.im().is_point() && z.im().lo().is_zero();
}

}  // namespace

Precision GridSamples::precision() const {
  if (values_.empty()) return working_precision();
  return values_.front().precision();
}

FourierModel::FourierModel(std::size_t n, Precision prec, bool hermitian)
    : coeffs_((require_power_of_two(n), n), ComplexInterval(prec)), hermitian_(hermitian) {}

FourierModel::FourierModel(std::vector<ComplexInterval> fft_order, bool hermitian)
    : coeffs_(std::move(fft_order)), hermitian_(hermitian) {
  require_power_of_two(coeffs_.size());
  for (const auto& c : coeffs_) {
    if (c.precision() != coeffs_.front().precision()) throw PrecisionMismatch();
  }
}

Precision FourierModel::precision() const {
  if (coeffs_.empty()) return working_precision();
  return coeffs_.front().precision();
}

std::size_t FourierModel::slot(long k) const {
  if (k < min_index() || k > max_index()) {
    throw IndexOutOfRange("mode " + std::to_string(k) + " outside I_" + std::to_string(size()));
  }
  return static_cast<std::size_t>(k < 0 ? k + static_cast<long>(size()) : k);
}

const ComplexInterval& FourierModel::coeff(long k) const { return coeffs_[slot(k)]; }
ComplexInterval& FourierModel::coeff(long k) { return coeffs_[slot(k)]; }

void FourierModel::make_hermitian() {
  const Interval zero(precision());
  auto real_mode = [&](long k) {
    auto im = intersect(coeff(k).im(), zero);
    if (!im) throw NotHermitian();
    coeff(k).im() = *im;
  };
  real_mode(0);
  if (size() > 1) real_mode(min_index());
  for (long k = 1; k <= max_index(); ++k) {
    auto both = intersect(coeff(k), conj(coeff(-k)));
    if (!both) throw NotHermitian();
    coeff(k) = *both;
    coeff(-k) = conj(*both);
  }
  hermitian_ = true;
}

FourierModel FourierModel::resized(std::size_t n) const {
  FourierModel out(n, precision(), hermitian_);
  const long lo = std::max(min_index(), out.min_index());
  const long hi = std::min(max_index(), out.max_index());
  for (long k = lo; k <= hi; ++k) out.coeff(k) = coeff(k);
  // A nonzero -N/2 mode has no partner once the model grows.
  if (n > size() && !is_exact_zero(coeff(min_index()))) out.hermitian_ = false;
  return out;
}

FourierModel& FourierModel::operator+=(const FourierModel& o) {
  if (o.size() != size()) throw SizeMismatch("adding models of different sizes");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

FourierModel& FourierModel::operator-=(const FourierModel& o) {
  if (o.size() != size()) throw SizeMismatch("subtracting models of different sizes");
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  hermitian_ = hermitian_ && o.hermitian_;
  return *this;
}

FourierModel& FourierModel::operator*=(const Interval& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

FourierModel operator+(FourierModel a, const FourierModel& b) { return a += b; }
FourierModel operator-(FourierModel a, const FourierModel& b) { return a -= b; }
FourierModel operator*(FourierModel a, const Interval& s) { return a *= s; }

FourierModel dft(const GridSamples& samples) {
  std::vector<ComplexInterval> a = samples.values();
  require_power_of_two(a.size());
  fft_in_place(a, false);
  const long shift = -static_cast<long>(std::countr_zero(a.size()));
  for (auto& c : a) c = ComplexInterval(ldexp(c.re(), shift), ldexp(c.im(), shift));
  return FourierModel(std::move(a), false);
}

GridSamples idft(const FourierModel& model) {
  std::vector<ComplexInterval> a = model.fft_order();
  fft_in_place(a, true);
  return GridSamples(std::move(a));
}

Interval fourier_norm(const FourierModel& model, const Interval& rho) {
  if (rho.lo().sign() < 0) throw DomainError("fourier_norm: rho must be nonnegative");
  const Precision p = model.precision();
  Interval sum(p);
  // Accumulate from the outermost modes inward.
  for (long k = model.min_index(); k <= 0; ++k) {
    const long m = -k;
    const Interval weight = exp(two_pi_k(m, p) * rho);
    Interval pair = abs(model.coeff(k));
    if (m != 0 && m <= model.max_index()) pair += abs(model.coeff(m));
    sum += pair * weight;
  }
  return sum;
}

FourierModel derivative(const FourierModel& model) {
  FourierModel out = model;
  const Precision p = model.precision();
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    out.coeff(k) = mul_i(model.coeff(k) * two_pi_k(k, p));
  }
  return out;
}

FourierModel rotate(const FourierModel& model, const Interval& omega) {
  FourierModel out = model;
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    if (k == 0) continue;
    out.coeff(k) = model.coeff(k) * exp_2pi_i(omega * k);
  }
  return out;
}

ComplexInterval eval(const FourierModel& model, const Interval& theta) {
  ComplexInterval sum(model.precision());
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    sum += model.coeff(k) * exp_2pi_i(theta * k);
  }
  return sum;
}

ComplexInterval eval(const FourierModel& model, const ComplexInterval& theta) {
  const Precision p = model.precision();
  ComplexInterval sum(p);
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    // e^{2 pi i k (x + i y)} = e^{-2 pi k y} e^{2 pi i k x}
    const Interval decay = exp(-(two_pi_k(k, p) * theta.im()));
    sum += model.coeff(k) * exp_2pi_i(theta.re() * k) * decay;
  }
  return sum;
}

namespace {

std::vector<ComplexInterval> cell_ranges(const FourierModel& model) {
  const Precision p = model.precision();
  const long n = static_cast<long>(model.size());
  const Interval cell(Real(p), Interval::from_ratio(1, n, p).hi());
  FourierModel spread = model;
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    if (k == 0) continue;
    spread.coeff(k) = model.coeff(k) * exp_2pi_i(cell * k);
  }
  std::vector<ComplexInterval> cells = idft(spread).values();

  // Second-order Taylor enclosure on each cell, which does not suffer from
  // the box rotations inside the FFT: f(theta_j) + f'(theta_j) u + R with
  // |R| <= u^2/2 sum_k |f_k| (2 pi k)^2.
  const GridSamples values = idft(model);
  const GridSamples slopes = idft(derivative(model));
  Interval curvature(p);
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    curvature += abs(model.coeff(k)) * sqr(two_pi_k(k, p));
  }
  const Interval r = ldexp(curvature * sqr(cell), -1);
  const Interval remainder(-r.hi(), r.hi());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const ComplexInterval taylor(values[j].re() + slopes[j].re() * cell + remainder,
                                 values[j].im() + slopes[j].im() * cell + remainder);
    if (auto both = intersect(cells[j], taylor)) cells[j] = *both;
  }
  return cells;
}

}  // namespace

ComplexInterval range_on_circle(const FourierModel& model) {
  if (!model.hermitian()) throw NotHermitian();
  const auto cells = cell_ranges(model);
  ComplexInterval out = cells.front();
  for (const auto& c : cells) out = hull(out, c);
  return out;
}

Interval modulus_range_on_strip(const FourierModel& model, const Interval& rho) {
  if (!model.hermitian()) throw NotHermitian();
  if (rho.lo().sign() < 0) throw DomainError("modulus_range_on_strip: rho must be nonnegative");
  const Precision p = model.precision();
  const auto cells = cell_ranges(model);
  Interval modulus = abs(cells.front());
  for (const auto& c : cells) modulus = hull(modulus, abs(c));

  Interval delta(p);
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    if (k == 0) continue;
    const long m = k < 0 ? -k : k;
    delta += (exp(two_pi_k(m, p) * rho) - 1L) * abs(model.coeff(k));
  }
  Real lo(p);
  Real hi(p);
  mpfr_sub(lo.get(), modulus.lo().get(), delta.hi().get(), MPFR_RNDD);
  if (lo.sign() < 0) lo = Real(p);
  mpfr_add(hi.get(), modulus.hi().get(), delta.hi().get(), MPFR_RNDU);
  return Interval(std::move(lo), std::move(hi));
}

Interval imag_bound_on_strip(const FourierModel& model, const Interval& rho) {
  if (!model.hermitian()) throw NotHermitian();
  if (rho.lo().sign() < 0) throw DomainError("imag_bound_on_strip: rho must be nonnegative");
  const Precision p = model.precision();
  FourierModel h(model.size(), p, true);
  for (long k = model.min_index() + 1; k <= model.max_index(); ++k) {
    h.coeff(k) = mul_i(model.coeff(k) * sinh(two_pi_k(k, p) * rho));
  }
  Real bound = range_on_circle(h).re().mag();
  // The -N/2 mode has no partner; bound its contribution separately.
  const ComplexInterval& nyquist = model.coeff(model.min_index());
  if (!is_exact_zero(nyquist)) {
    const Interval extra = abs(nyquist) * exp(two_pi_k(-model.min_index(), p) * rho);
    mpfr_add(bound.get(), bound.get(), extra.hi().get(), MPFR_RNDU);
  }
  return Interval(-bound, bound);
}

void write_model(std::ostream& os, const FourierModel& model) {
  os << "# fourier model\n";
  os << "N " << model.size() << "\n";
  os << "precision " << model.precision() << "\n";
  os << "hermitian " << (model.hermitian() ? 1 : 0) << "\n";
  for (long k = model.min_index(); k <= model.max_index(); ++k) {
    const ComplexInterval& c = model.coeff(k);
    os << k << ' ' << c.re().lo().to_string(0, MPFR_RNDD) << ' ' << c.re().hi().to_string(0, MPFR_RNDU) << ' '
       << c.im().lo().to_string(0, MPFR_RNDD) << ' ' << c.im().hi().to_string(0, MPFR_RNDU) << '\n';
  }
}

namespace {

Real parse_endpoint(const std::string& s, Precision p, mpfr_rnd_t rnd) {
  if (s == "inf") return Real::infinity(1, p);
  if (s == "-inf") return Real::infinity(-1, p);
  try {
    return Real::parse(s, p, rnd);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("fourier model: ") + e.what());
  }
}

}  // namespace

FourierModel read_model(std::istream& is) {
  std::string line;
  std::size_t n = 0;
  long prec = 0;
  int herm = -1;
  auto next_line = [&]() {
    while (std::getline(is, line)) {
      if (!line.empty() && line.front() != '#') return true;
    }
    return false;
  };
  for (int field = 0; field < 3; ++field) {
    if (!next_line()) throw ConfigError("fourier model: truncated header");
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "N") ls >> n;
    else if (key == "precision") ls >> prec;
    else if (key == "hermitian") ls >> herm;
    else throw ConfigError("fourier model: unexpected header key '" + key + "'");
    if (ls.fail()) throw ConfigError("fourier model: bad header line '" + line + "'");
  }
  if (n == 0 || prec < MPFR_PREC_MIN || herm < 0) throw ConfigError("fourier model: incomplete header");
  if (!std::has_single_bit(n)) throw SizeNotPowerOfTwo(n);
  const Precision p = static_cast<Precision>(prec);
  FourierModel model(n, p, herm == 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (!next_line()) throw ConfigError("fourier model: expected " + std::to_string(n) + " modes");
    std::istringstream ls(line);
    long k = 0;
    std::string rl, rh, il, ih;
    if (!(ls >> k >> rl >> rh >> il >> ih)) throw ConfigError("fourier model: bad mode line '" + line + "'");
    try {
      model.coeff(k) = ComplexInterval(Interval(parse_endpoint(rl, p, MPFR_RNDD), parse_endpoint(rh, p, MPFR_RNDU)),
                                       Interval(parse_endpoint(il, p, MPFR_RNDD), parse_endpoint(ih, p, MPFR_RNDU)));
    } catch (const IndexOutOfRange& e) {
      throw ConfigError(std::string("fourier model: ") + e.what());
    } catch (const EmptyInterval& e) {
      throw ConfigError(std::string("fourier model: ") + e.what());
    }
  }
  return model;
}

}  // namespace kamcert
