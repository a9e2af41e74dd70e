#include <gtest/gtest.h>

#include <cmath>

#include "syntonet/errors.hpp"
#include "syntonet/scale.hpp"
#include "syntonet/spectrum.hpp"

using namespace syntonet;

TEST(Spectrum, HarmonicPartialCountAtC1) {
  const auto s = build_spectrum(kC1Frequency, {1.0, kDefaultAlpha});
  EXPECT_EQ(s.partials.size(), 611u);  // floor(20000 / 32.7032)
  EXPECT_EQ(s.partials[1].frequency, 2.0 * kC1Frequency);
}

TEST(Spectrum, ShiftedPartialCountAtC1) {
  const auto s = build_spectrum(kC1Frequency, {1.2, kDefaultAlpha});
  EXPECT_EQ(s.partials.size(), 209u);
}

TEST(Spectrum, CutoffIsTight) {
  for (double beta : {0.8, 0.95, 1.0, 1.0056, 1.2}) {
    for (double f : {32.7032, 110.0, 1000.0, 7902.13}) {
      const auto s = build_spectrum(f, {beta, 0.05});
      ASSERT_FALSE(s.partials.empty());
      EXPECT_LE(s.partials.back().frequency, kAudibleCutoffHz);
      const int next = static_cast<int>(s.partials.size()) + 1;
      EXPECT_GT(f * partial_multiplier(next, beta), kAudibleCutoffHz);
    }
  }
}

TEST(Spectrum, AmplitudeLaw) {
  const AnharmonicityLaw law{1.07, 0.05};
  const auto s = build_spectrum(55.0, law);
  for (std::size_t k = 0; k + 1 < s.partials.size(); ++k) {
    const double hn = partial_multiplier(static_cast<int>(k + 1), law.beta);
    const double hn1 = partial_multiplier(static_cast<int>(k + 2), law.beta);
    const double ratio = s.partials[k].amplitude / s.partials[k + 1].amplitude;
    EXPECT_NEAR(ratio, std::exp(law.alpha * (hn1 - hn)), 1e-9 * ratio);
  }
  EXPECT_DOUBLE_EQ(s.partials[0].amplitude, std::exp(-0.05));
}

TEST(Spectrum, ZeroDecayGivesUnitAmplitudes) {
  const auto s = build_spectrum(440.0, {1.0, 0.0});
  for (const auto& p : s.partials) EXPECT_EQ(p.amplitude, 1.0);
}

TEST(Spectrum, FrequenciesIncrease) {
  for (double beta : {0.8, 1.0, 1.2}) {
    const auto s = build_spectrum(32.7032, {beta, 0.05});
    for (std::size_t k = 1; k < s.partials.size(); ++k) EXPECT_LT(s.partials[k - 1].frequency, s.partials[k].frequency);
  }
}

TEST(Spectrum, HarmonicMultiplierIsExact) {
  for (int n = 1; n < 700; ++n) EXPECT_EQ(partial_multiplier(n, 1.0), static_cast<double>(n));
}

TEST(Spectrum, Errors) {
  EXPECT_THROW(build_spectrum(100.0, {0.0, 0.05}), DomainError);
  EXPECT_THROW(build_spectrum(100.0, {1.0, -0.1}), DomainError);
  EXPECT_THROW(build_spectrum(100.0, {1.0, 0.05}, 50.0), DomainError);
  EXPECT_THROW(build_spectrum(-5.0, {1.0, 0.05}), DomainError);
}
