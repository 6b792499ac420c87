#pragma once

#include <cstdint>

namespace nfactor {

// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

// Upper tail of the chi-squared distribution with df degrees of freedom.
double chi2_sf(double x, double df);

struct AiryValue {
  double ai;
  double aip;
};

// Airy function of the first kind and its derivative. Supported for x >= 4;
// large arguments use the asymptotic expansion, moderate ones a backward
// integration of y'' = x y from the asymptotic regime.
AiryValue airy_ai(double x);

// SplitMix64 finalizer; used to derive independent RNG streams from a
// single user seed so parallel and serial runs agree bit for bit.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(seed ^ mix64(0x517cc1b727220a95ULL * a + b));
}

}  // namespace nfactor
