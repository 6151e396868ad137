#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "kamcert/errors.hpp"
#include "kamcert/fourier.hpp"
#include "test_util.hpp"

namespace kamcert {
namespace {

using testutil::kP;
using testutil::naive_dft;
using testutil::random_trig_polynomial;
using testutil::sample_polynomial;

TEST(FourierDft, ConstantSamples) {
  const ComplexInterval c(Interval::from_ratio(3, 7, kP), Interval::from_ratio(-1, 5, kP));
  const GridSamples s(std::vector<ComplexInterval>(16, c));
  const FourierModel m = dft(s);
  EXPECT_TRUE(m.coeff(0).contains(c));
  for (long k = m.min_index(); k <= m.max_index(); ++k) {
    if (k != 0) EXPECT_TRUE(m.coeff(k).contains_zero()) << k;
  }
}

TEST(FourierDft, ImpulseHasFlatSpectrum) {
  GridSamples s(32, kP);
  s[0] = ComplexInterval(Interval::from_long(1, kP));
  const FourierModel m = dft(s);
  for (long k = m.min_index(); k <= m.max_index(); ++k) {
    EXPECT_TRUE(m.coeff(k).contains(Real(1.0 / 32, kP), Real(0L, kP))) << k;
  }
}

TEST(FourierDft, PlantedPolynomialAgainstNaiveDft) {
  std::mt19937_64 rng(11);
  const auto coeffs = random_trig_polynomial(rng, 7, true);
  const GridSamples s = sample_polynomial(coeffs, 64);
  const FourierModel fast = dft(s);
  const std::vector<ComplexInterval> slow = naive_dft(s);
  for (long k = fast.min_index(); k <= fast.max_index(); ++k) {
    const ComplexInterval exact = testutil::exact_coeff(coeffs, k);
    EXPECT_TRUE(fast.coeff(k).contains(exact)) << k;
    const auto& naive = slow[static_cast<std::size_t>(k < 0 ? k + 64 : k)];
    EXPECT_TRUE(naive.contains(exact)) << k;
    EXPECT_TRUE(intersect(fast.coeff(k), naive).has_value()) << k;
  }
}

TEST(FourierDft, ExactDftInsideBothTransformsSmallN) {
  std::mt19937_64 rng(12);
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const int degree = static_cast<int>(n / 2) - 1;
      const auto coeffs = random_trig_polynomial(rng, degree, trial % 2 == 0);
      const GridSamples s = sample_polynomial(coeffs, n);
      const FourierModel fast = dft(s);
      const auto slow = naive_dft(s);
      for (long k = fast.min_index(); k <= fast.max_index(); ++k) {
        const ComplexInterval exact = testutil::exact_coeff(coeffs, k);
        EXPECT_TRUE(fast.coeff(k).contains(exact));
        EXPECT_TRUE(slow[static_cast<std::size_t>(k < 0 ? k + static_cast<long>(n) : k)].contains(exact));
      }
    }
  }
}

TEST(FourierDft, RejectsNonPowerOfTwo) {
  EXPECT_THROW(dft(GridSamples(12, kP)), SizeNotPowerOfTwo);
  EXPECT_THROW(FourierModel(6, kP), SizeNotPowerOfTwo);
}

TEST(FourierIdft, RoundTripContainment) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> value(-2.0, 2.0);
  std::uniform_real_distribution<double> radius(0.0, 1e-6);
  for (std::size_t n : {8u, 64u, 256u, 1024u}) {
    GridSamples s(n, kP);
    for (std::size_t j = 0; j < n; ++j) {
      const double re = value(rng);
      const double im = value(rng);
      const double r = radius(rng);
      s[j] = ComplexInterval(Interval(Real(re - r, kP, MPFR_RNDD), Real(re + r, kP, MPFR_RNDU)),
                             Interval(Real(im, kP), Real(im + r, kP, MPFR_RNDU)));
    }
    const GridSamples back = idft(dft(s));
    for (std::size_t j = 0; j < n; ++j) EXPECT_TRUE(back[j].contains(s[j])) << n << ' ' << j;
    const FourierModel m = dft(s);
    const FourierModel again = dft(idft(m));
    for (long k = m.min_index(); k <= m.max_index(); ++k) EXPECT_TRUE(again.coeff(k).contains(m.coeff(k)));
  }
}

TEST(FourierIdft, PureModeAndHermitianSamples) {
  FourierModel m(16, kP);
  m.coeff(1) = ComplexInterval(Interval::from_long(1, kP));
  const GridSamples s = idft(m);
  for (std::size_t j = 0; j < 16; ++j) {
    EXPECT_TRUE(s[j].overlaps(exp_2pi_i(Interval::from_ratio(static_cast<long>(j), 16, kP))));
    EXPECT_LT(s[j].re().width().to_double(), 1e-35);
  }
  std::mt19937_64 rng(14);
  const auto coeffs = random_trig_polynomial(rng, 9, true);
  const FourierModel h = testutil::model_from(coeffs, 64);
  ASSERT_TRUE(h.hermitian());
  for (const auto& v : idft(h).values()) EXPECT_TRUE(v.im().contains_zero());
}

TEST(FourierNorm, Examples) {
  FourierModel c(8, kP, true);
  c.coeff(0) = ComplexInterval(Interval::from_ratio(-5, 4, kP));
  EXPECT_TRUE(fourier_norm(c, Interval::from_ratio(1, 10, kP)).contains(Real(1.25, kP)));

  FourierModel pair(8, kP, true);
  pair.coeff(1) = ComplexInterval(Interval::from_ratio(3, 5, kP), Interval::from_ratio(4, 5, kP));
  pair.coeff(-1) = conj(pair.coeff(1));
  EXPECT_TRUE(fourier_norm(pair, Interval(kP)).contains(Real(2L, kP)));
  const Interval rho = Interval::from_ratio(1, 100, kP);
  const Interval norm = fourier_norm(pair, rho);
  // 2 e^{2 pi 0.01}, evaluated in doubles with a loose tolerance and in
  // intervals for containment.
  EXPECT_NEAR(norm.mid().to_double(), 2.0 * std::exp(2.0 * M_PI * 0.01), 1e-12);
  EXPECT_TRUE(norm.overlaps(exp(Interval::two_pi(kP) * rho) * 2L));
  EXPECT_THROW(fourier_norm(pair, Interval::from_long(-1, kP)), DomainError);
}

TEST(FourierNorm, MonotoneInRho) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const FourierModel m = testutil::model_from(random_trig_polynomial(rng, 12, trial % 2 == 0), 32);
    Interval prev = fourier_norm(m, Interval(kP));
    for (int i = 1; i <= 10; ++i) {
      const Interval cur = fourier_norm(m, Interval::from_ratio(i, 200, kP));
      EXPECT_LE(prev.hi(), cur.hi());
      EXPECT_LE(prev.lo(), cur.lo());
      prev = cur;
    }
  }
}

TEST(FourierDerivative, Examples) {
  FourierModel c(8, kP, true);
  c.coeff(0) = ComplexInterval(Interval::from_long(3, kP));
  const FourierModel dc = derivative(c);
  for (const auto& v : dc.fft_order()) EXPECT_TRUE(v.contains(Real(0L, kP), Real(0L, kP)));

  FourierModel m(8, kP);
  m.coeff(1) = ComplexInterval(Interval::from_long(1, kP));
  const ComplexInterval d = derivative(m).coeff(1);
  EXPECT_TRUE(d.re().contains_zero());
  EXPECT_TRUE(d.im().overlaps(Interval::two_pi(kP)));
}

TEST(FourierDerivative, MatchesFiniteDifferences) {
  std::mt19937_64 rng(16);
  const auto coeffs = random_trig_polynomial(rng, 7, true);
  const FourierModel m = testutil::model_from(coeffs, 64);
  const FourierModel dm = derivative(m);
  // |FD - f'| <= h^2/6 max|f'''| and max|f'''| <= sum |c_k| (2 pi |k|)^3.
  Interval m3(kP);
  for (long k = m.min_index(); k <= m.max_index(); ++k) {
    m3 += abs(m.coeff(k)) * pow(Interval::two_pi(kP) * (k < 0 ? -k : k), 3);
  }
  const Interval h = pow2(-30, kP);
  const Interval trunc = sqr(h) * m3 / 6L;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const Interval theta = Interval::point(Real(unit(rng), kP));
    const ComplexInterval fd = (eval(m, theta + h) - eval(m, theta - h)) / (h * 2L);
    const Interval slack(-trunc.hi(), trunc.hi());
    const ComplexInterval band(fd.re() + slack, fd.im() + slack);
    EXPECT_TRUE(eval(dm, theta).overlaps(band)) << i;
  }
}

TEST(FourierRotate, Examples) {
  std::mt19937_64 rng(17);
  const FourierModel m = testutil::model_from(random_trig_polynomial(rng, 10, true), 32);
  const FourierModel same = rotate(m, Interval(kP));
  for (long k = m.min_index(); k <= m.max_index(); ++k) EXPECT_TRUE(same.coeff(k).contains(m.coeff(k)));

  const Interval omega = (sqrt(Interval::from_long(5, kP)) - 1L) / 2L;
  const FourierModel back = rotate(rotate(m, omega), -omega);
  for (long k = m.min_index(); k <= m.max_index(); ++k) EXPECT_TRUE(back.coeff(k).contains(m.coeff(k)));

  FourierModel two(8, kP);
  two.coeff(2) = ComplexInterval(Interval::from_long(1, kP));
  const ComplexInterval phase = rotate(two, omega).coeff(2);
  // Oracle: cos/sin(4 pi omega) at 4p from the closed form of omega.
  mpfr_t w, t;
  mpfr_inits2(4 * kP, w, t, static_cast<mpfr_ptr>(nullptr));
  mpfr_sqrt_ui(w, 5, MPFR_RNDN);
  mpfr_sub_ui(w, w, 1, MPFR_RNDN);
  mpfr_div_2ui(w, w, 1, MPFR_RNDN);
  mpfr_const_pi(t, MPFR_RNDN);
  mpfr_mul(t, t, w, MPFR_RNDN);
  mpfr_mul_2ui(t, t, 2, MPFR_RNDN);
  mpfr_cos(w, t, MPFR_RNDN);
  EXPECT_TRUE(mpfr_cmp(phase.re().lo().get(), w) <= 0 && mpfr_cmp(w, phase.re().hi().get()) <= 0);
  mpfr_sin(w, t, MPFR_RNDN);
  EXPECT_TRUE(mpfr_cmp(phase.im().lo().get(), w) <= 0 && mpfr_cmp(w, phase.im().hi().get()) <= 0);
  mpfr_clears(w, t, static_cast<mpfr_ptr>(nullptr));
}

TEST(FourierEval, Examples) {
  FourierModel c(8, kP, true);
  c.coeff(0) = ComplexInterval(Interval::from_ratio(2, 3, kP));
  EXPECT_TRUE(eval(c, Interval::from_ratio(1, 7, kP)).contains(c.coeff(0)));

  FourierModel m(8, kP);
  m.coeff(1) = ComplexInterval(Interval::from_long(1, kP));
  EXPECT_TRUE(eval(m, Interval::from_ratio(1, 4, kP)).contains(Real(0L, kP), Real(1L, kP)));

  std::mt19937_64 rng(18);
  const FourierModel r = testutil::model_from(random_trig_polynomial(rng, 15, false), 64);
  const GridSamples grid = idft(r);
  std::uniform_int_distribution<long> index(0, 63);
  for (int i = 0; i < 100; ++i) {
    const long j = index(rng);
    EXPECT_TRUE(eval(r, Interval::from_ratio(j, 64, kP)).overlaps(grid[static_cast<std::size_t>(j)]));
  }
}

FourierModel cos_model(std::size_t n) {
  FourierModel m(n, kP, true);
  m.coeff(1) = ComplexInterval(Interval::from_ratio(1, 2, kP));
  m.coeff(-1) = ComplexInterval(Interval::from_ratio(1, 2, kP));
  return m;
}

TEST(FourierRange, Examples) {
  FourierModel c(16, kP, true);
  c.coeff(0) = ComplexInterval(Interval::from_ratio(-7, 3, kP));
  const ComplexInterval rc = range_on_circle(c);
  EXPECT_TRUE(rc.re().contains(c.coeff(0).re()));
  EXPECT_LT(rc.re().width().to_double(), 1e-35);

  const ComplexInterval box = range_on_circle(cos_model(256));
  EXPECT_TRUE(box.re().contains(Interval(Real(-1L, kP), Real(1L, kP))));
  EXPECT_LE(box.re().hi().to_double(), 1.0 + 1e-2);
  EXPECT_GE(box.re().lo().to_double(), -1.0 - 1e-2);

  FourierModel plain(16, kP);
  EXPECT_THROW(range_on_circle(plain), NotHermitian);
}

TEST(FourierRange, ContainsRandomEvaluations) {
  std::mt19937_64 rng(19);
  const FourierModel m = testutil::model_from(random_trig_polynomial(rng, 12, true), 64);
  const ComplexInterval box = range_on_circle(m);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const ComplexInterval v = eval(m, Interval::point(Real(unit(rng), kP)));
    EXPECT_TRUE(box.re().contains(v.re().mid()));
  }
}

TEST(FourierStrip, ModulusExamples) {
  const FourierModel cm = cos_model(64);
  const ComplexInterval box = range_on_circle(cm);
  const Interval at_zero = modulus_range_on_strip(cm, Interval(kP));
  EXPECT_TRUE(abs(box).contains(at_zero));

  FourierModel c(16, kP, true);
  c.coeff(0) = ComplexInterval(Interval::from_ratio(-7, 3, kP));
  const Interval cm_strip = modulus_range_on_strip(c, Interval::from_ratio(1, 10, kP));
  EXPECT_TRUE(cm_strip.contains(Interval::from_ratio(7, 3, kP)));
  EXPECT_LT(cm_strip.width().to_double(), 1e-35);

  const Interval rho = Interval::from_ratio(1, 100, kP);
  const Interval strip = modulus_range_on_strip(cm, rho);
  EXPECT_GE(strip.lo().sign(), 0);
  EXPECT_TRUE(strip.hi() >= cosh(Interval::two_pi(kP) * rho).hi());
}

TEST(FourierStrip, ModulusContainsStripSamples) {
  std::mt19937_64 rng(20);
  const FourierModel m = testutil::model_from(random_trig_polynomial(rng, 10, true), 64);
  const Interval rho = Interval::from_ratio(1, 64, kP);
  const Interval range = modulus_range_on_strip(m, rho);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> offset(-1.0 / 64, 1.0 / 64);
  for (int i = 0; i < 1000; ++i) {
    const ComplexInterval theta(Interval::point(Real(unit(rng), kP)), Interval::point(Real(offset(rng), kP)));
    const Interval v = abs(eval(m, theta));
    EXPECT_TRUE(range.overlaps(v)) << i;
  }
}

TEST(FourierStrip, ImagBound) {
  const FourierModel cm = cos_model(64);
  EXPECT_TRUE(imag_bound_on_strip(cm, Interval(kP)).contains_zero());
  FourierModel c(16, kP, true);
  c.coeff(0) = ComplexInterval(Interval::from_long(4, kP));
  EXPECT_TRUE(imag_bound_on_strip(c, Interval::from_ratio(1, 10, kP)).contains_zero());

  const Interval rho = Interval::from_ratio(1, 100, kP);
  const Interval bound = imag_bound_on_strip(cm, rho);
  EXPECT_TRUE(bound.contains(sinh(Interval::two_pi(kP) * rho)));

  std::mt19937_64 rng(21);
  const FourierModel m = testutil::model_from(random_trig_polynomial(rng, 10, true), 64);
  const Interval b = imag_bound_on_strip(m, rho);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> offset(-0.01, 0.01);
  for (int i = 0; i < 1000; ++i) {
    const ComplexInterval theta(Interval::point(Real(unit(rng), kP)), Interval::point(Real(offset(rng), kP)));
    EXPECT_TRUE(b.overlaps(eval(m, theta).im()));
  }
}

TEST(FourierModelOps, HermitianEnforcement) {
  FourierModel m(8, kP);
  m.coeff(1) = ComplexInterval(Interval(Real(0.9, kP), Real(1.1, kP)), Interval(Real(-0.1, kP), Real(0.2, kP)));
  m.coeff(-1) = ComplexInterval(Interval(Real(1.0, kP), Real(1.2, kP)), Interval(Real(-0.3, kP), Real(0.0, kP)));
  m.coeff(0) = ComplexInterval(Interval::from_long(1, kP), Interval(Real(-0.5, kP), Real(0.5, kP)));
  m.make_hermitian();
  EXPECT_TRUE(m.hermitian());
  EXPECT_TRUE(m.coeff(0).im().is_point());
  EXPECT_EQ(m.coeff(1).re().lo().to_double(), 1.0);
  EXPECT_EQ(m.coeff(1).re().hi().to_double(), 1.1);
  EXPECT_EQ(m.coeff(-1).im().lo().to_double(), -0.2);

  FourierModel bad(8, kP);
  bad.coeff(2) = ComplexInterval(Interval::from_long(1, kP));
  bad.coeff(-2) = ComplexInterval(Interval::from_long(2, kP));
  EXPECT_THROW(bad.make_hermitian(), NotHermitian);
  EXPECT_THROW(bad.coeff(4), IndexOutOfRange);
  EXPECT_NO_THROW(bad.coeff(-4));
}

TEST(FourierModelOps, SerializationRoundTrip) {
  std::mt19937_64 rng(22);
  const FourierModel m = testutil::model_from(random_trig_polynomial(rng, 6, true), 16);
  std::stringstream ss;
  write_model(ss, m);
  const FourierModel back = read_model(ss);
  ASSERT_EQ(back.size(), m.size());
  EXPECT_TRUE(back.hermitian());
  for (long k = m.min_index(); k <= m.max_index(); ++k) {
    EXPECT_TRUE(back.coeff(k).contains(m.coeff(k)));
    EXPECT_LT(back.coeff(k).re().width().to_double(), 1e-30);
  }
  std::stringstream broken("N 16\nprecision 128\nhermitian 0\n0 1 2 3\n");
  EXPECT_THROW(read_model(broken), ConfigError);
}

}  // namespace
}  // namespace kamcert
