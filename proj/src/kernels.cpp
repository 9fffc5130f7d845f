#include "vlse/kernels.hpp"

#include <cmath>

#include "vlse/errors.hpp"
#include "vlse/numfmt.hpp"

namespace vlse {

namespace {

void check_hk(double H, double K) {
  if (!(H > 0.0 && H < 1.0)) throw DomainError("KernelSpec: H must lie in (0,1)");
  if (!(K > 0.0 && K <= 1.0)) throw DomainError("KernelSpec: K must lie in (0,1]");
}

void check_times(double s, double t) {
  if (s < 0.0 || t < 0.0 || !std::isfinite(s) || !std::isfinite(t))
    throw DomainError("kernel: times must be finite and nonnegative");
}

}  // namespace

KernelSpec KernelSpec::fbm(double H) {
  check_hk(H, 1.0);
  return KernelSpec{KernelFamily::FBM, H, 1.0};
}

KernelSpec KernelSpec::subfbm(double H) {
  check_hk(H, 1.0);
  return KernelSpec{KernelFamily::SUBFBM, H, 1.0};
}

KernelSpec KernelSpec::bifbm(double H, double K) {
  check_hk(H, K);
  return KernelSpec{KernelFamily::BIFBM, H, K};
}

double KernelSpec::holder_constant() const {
  switch (family) {
    case KernelFamily::FBM:
      return 1.0;
    case KernelFamily::SUBFBM:
      return 2.0 - std::pow(2.0, 2.0 * hurst - 1.0);
    case KernelFamily::BIFBM:
      return std::pow(2.0, 1.0 - k);
  }
  throw DomainError("KernelSpec: bad family");
}

const char* family_name(KernelFamily f) {
  switch (f) {
    case KernelFamily::FBM: return "fbm";
    case KernelFamily::SUBFBM: return "subfbm";
    case KernelFamily::BIFBM: return "bifbm";
  }
  return "?";
}

std::string KernelSpec::token() const {
  std::string out = family_name(family);
  out += ":H=";
  out += fmt_shortest(hurst);
  if (family == KernelFamily::BIFBM) {
    out += ",K=";
    out += fmt_shortest(k);
  }
  return out;
}

KernelSpec KernelSpec::parse(std::string_view token) {
  auto colon = token.find(':');
  if (colon == std::string_view::npos)
    throw MalformedInput("kernel token: expected '<family>:H=<value>'");
  std::string_view fam = token.substr(0, colon);
  std::string_view rest = token.substr(colon + 1);

  double H = 0.0, K = 1.0;
  bool have_h = false, have_k = false;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view part = rest.substr(0, comma);
    rest = (comma == std::string_view::npos) ? std::string_view{} : rest.substr(comma + 1);
    auto eq = part.find('=');
    if (eq == std::string_view::npos) throw MalformedInput("kernel token: expected key=value");
    std::string_view key = part.substr(0, eq);
    double val = parse_double(part.substr(eq + 1));
    if (key == "H") { H = val; have_h = true; }
    else if (key == "K") { K = val; have_k = true; }
    else throw MalformedInput("kernel token: unknown key '" + std::string(key) + "'");
  }
  if (!have_h) throw MalformedInput("kernel token: missing H");

  if (fam == "fbm") {
    if (have_k && K != 1.0) throw MalformedInput("kernel token: fbm takes no K");
    return fbm(H);
  }
  if (fam == "subfbm") {
    if (have_k && K != 1.0) throw MalformedInput("kernel token: subfbm takes no K");
    return subfbm(H);
  }
  if (fam == "bifbm") {
    if (!have_k) throw MalformedInput("kernel token: bifbm requires K");
    return bifbm(H, K);
  }
  throw MalformedInput("kernel token: unknown family '" + std::string(fam) + "'");
}

double covariance(const KernelSpec& spec, double s, double t) {
  check_times(s, t);
  const double H2 = 2.0 * spec.hurst;
  const double gap = std::fabs(t - s);
  switch (spec.family) {
    case KernelFamily::FBM:
      return 0.5 * (std::pow(t, H2) + std::pow(s, H2) - std::pow(gap, H2));
    case KernelFamily::SUBFBM:
      return std::pow(t, H2) + std::pow(s, H2)
             - 0.5 * (std::pow(t + s, H2) + std::pow(gap, H2));
    case KernelFamily::BIFBM: {
      const double K = spec.k;
      return (std::pow(std::pow(t, H2) + std::pow(s, H2), K) - std::pow(gap, H2 * K))
             / std::pow(2.0, K);
    }
  }
  throw DomainError("covariance: bad family");
}

double increment_variance(const KernelSpec& spec, double s, double t) {
  check_times(s, t);
  if (s == t) return 0.0;
  double v = covariance(spec, t, t) + covariance(spec, s, s) - 2.0 * covariance(spec, s, t);
  return v < 0.0 ? 0.0 : v;  // clamp roundoff
}

}  // namespace vlse
