#include "syntonet/spectrum.hpp"

#include <cmath>
#include <fmt/format.h>

#include "syntonet/errors.hpp"

namespace syntonet {

double partial_multiplier(int n, double beta) {
  if (n < 1) throw DomainError(fmt::format("partial_multiplier: n must be >= 1, got {}", n));
  if (beta == 1.0) return static_cast<double>(n);
  return std::pow(static_cast<double>(n), beta);
}

void validate(const AnharmonicityLaw& law) {
  if (!(law.beta > 0.0) || !std::isfinite(law.beta))
    throw DomainError(fmt::format("anharmonicity index must be positive, got {}", law.beta));
  if (!(law.alpha >= 0.0) || !std::isfinite(law.alpha))
    throw DomainError(fmt::format("amplitude decay must be non-negative, got {}", law.alpha));
}

PartialSpectrum build_spectrum(double fundamental, const AnharmonicityLaw& law, double cutoff) {
  validate(law);
  if (!(fundamental > 0.0)) throw DomainError(fmt::format("fundamental must be positive, got {}", fundamental));
  if (!(cutoff > fundamental))
    throw DomainError(fmt::format("empty spectrum: cutoff {} Hz does not exceed fundamental {} Hz", cutoff,
                                  fundamental));

  PartialSpectrum s{fundamental, {}};
  for (int n = 1;; ++n) {
    const double h = partial_multiplier(n, law.beta);
    const double f = fundamental * h;
    if (f > cutoff) break;
    s.partials.push_back({f, std::exp(-law.alpha * h)});
  }
  return s;
}

}  // namespace syntonet
