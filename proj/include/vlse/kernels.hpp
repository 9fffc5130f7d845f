#pragma once

#include <string>
#include <string_view>

namespace vlse {

enum class KernelFamily { FBM, SUBFBM, BIFBM };

// Covariance model of the Gaussian driver. K is fixed to 1 for the
// non-bifractional families so gamma = H*K holds uniformly.
struct KernelSpec {
  KernelFamily family = KernelFamily::FBM;
  double hurst = 0.5;  // H in (0,1)
  double k = 1.0;      // K in (0,1], meaningful for BIFBM only

  static KernelSpec fbm(double H);
  static KernelSpec subfbm(double H);
  static KernelSpec bifbm(double H, double K);

  // Hoelder/scale exponent of the increments; also the eta of the growth law.
  double gamma() const { return hurst * k; }
  double eta() const { return gamma(); }

  // Constant c with E[(G_t - G_s)^2] <= c |t-s|^(2 gamma).
  double holder_constant() const;

  std::string token() const;  // e.g. "fbm:H=0.7", "bifbm:H=0.6,K=0.8"
  static KernelSpec parse(std::string_view token);

  bool operator==(const KernelSpec& o) const {
    return family == o.family && hurst == o.hurst && k == o.k;
  }
  bool operator!=(const KernelSpec& o) const { return !(*this == o); }
};

const char* family_name(KernelFamily f);

// Closed-form covariance E[G_s G_t]; rejects negative times.
double covariance(const KernelSpec& spec, double s, double t);

// E[(G_t - G_s)^2] assembled from the covariance.
double increment_variance(const KernelSpec& spec, double s, double t);

}  // namespace vlse
