#pragma once

#include <vector>

namespace syntonet {

inline constexpr double kAudibleCutoffHz = 20000.0;
inline constexpr double kDefaultAlpha = 0.05;

/// Partial n sits at f1 * n^beta with amplitude exp(-alpha * n^beta).
struct AnharmonicityLaw {
  double beta = 1.0;
  double alpha = kDefaultAlpha;
};

struct Partial {
  double frequency;
  double amplitude;
};

struct PartialSpectrum {
  double fundamental;
  std::vector<Partial> partials;  // partials[k] is partial n = k + 1
};

/// n^beta, n >= 1.
double partial_multiplier(int n, double beta);

/// Every partial f1 * n^beta <= cutoff, in order of n.
PartialSpectrum build_spectrum(double fundamental, const AnharmonicityLaw& law,
                               double cutoff = kAudibleCutoffHz);

void validate(const AnharmonicityLaw& law);

}  // namespace syntonet
