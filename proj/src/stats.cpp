#include "vlse/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vlse/errors.hpp"

namespace vlse {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw InsufficientSamples("mean: empty sample");
  NeumaierSum s;
  for (double x : xs) s.add(x);
  return s.value() / static_cast<double>(xs.size());
}

double sample_variance(const std::vector<double>& xs) {
  if (xs.size() < 2) throw InsufficientSamples("sample_variance: need at least 2 values");
  const double m = mean(xs);
  NeumaierSum s;
  for (double x : xs) s.add((x - m) * (x - m));
  return s.value() / static_cast<double>(xs.size() - 1);
}

double sample_sd(const std::vector<double>& xs) { return std::sqrt(sample_variance(xs)); }

double skewness(const std::vector<double>& xs) {
  const double m = mean(xs);
  NeumaierSum s2, s3;
  for (double x : xs) {
    const double d = x - m;
    s2.add(d * d);
    s3.add(d * d * d);
  }
  const double n = static_cast<double>(xs.size());
  const double var = s2.value() / n;
  return (s3.value() / n) / std::pow(var, 1.5);
}

double excess_kurtosis(const std::vector<double>& xs) {
  const double m = mean(xs);
  NeumaierSum s2, s4;
  for (double x : xs) {
    const double d = x - m;
    s2.add(d * d);
    s4.add(d * d * d * d);
  }
  const double n = static_cast<double>(xs.size());
  const double var = s2.value() / n;
  return (s4.value() / n) / (var * var) - 3.0;
}

double quantile(std::vector<double> xs, double p) {
  if (xs.empty()) throw InsufficientSamples("quantile: empty sample");
  if (p < 0.0 || p > 1.0) throw DomainError("quantile: p outside [0,1]");
  std::sort(xs.begin(), xs.end());
  const double pos = p * static_cast<double>(xs.size() - 1);
  const auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= xs.size()) return xs.back();
  const double frac = pos - static_cast<double>(lo);
  return xs[lo] + frac * (xs[lo + 1] - xs[lo]);
}

double median(const std::vector<double>& xs) { return quantile(xs, 0.5); }

double iqr(const std::vector<double>& xs) { return quantile(xs, 0.75) - quantile(xs, 0.25); }

std::vector<double> midranks(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> rank(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && xs[idx[j + 1]] == xs[idx[i]]) ++j;
    const double r = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
    for (std::size_t t = i; t <= j; ++t) rank[idx[t]] = r;
    i = j + 1;
  }
  return rank;
}

double pearson_rho(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DomainError("pearson_rho: size mismatch");
  if (a.size() < 2) throw InsufficientSamples("pearson_rho: need at least 2 pairs");
  const double ma = mean(a), mb = mean(b);
  NeumaierSum sab, saa, sbb;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab.add(da * db);
    saa.add(da * da);
    sbb.add(db * db);
  }
  return sab.value() / std::sqrt(saa.value() * sbb.value());
}

double spearman_rho(const std::vector<double>& a, const std::vector<double>& b) {
  return pearson_rho(midranks(a), midranks(b));
}

double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf) {
  const std::size_t n = sample.size();
  if (n < 10) throw InsufficientSamples("ks_statistic: need at least 10 values");
  std::sort(sample.begin(), sample.end());
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sample[i]);
    const double lo = static_cast<double>(i) / static_cast<double>(n);
    const double hi = static_cast<double>(i + 1) / static_cast<double>(n);
    d = std::max(d, std::max(hi - f, f - lo));
  }
  return d;
}

double ks_statistic(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 10 || b.size() < 10)
    throw InsufficientSamples("ks_statistic: need at least 10 values per sample");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t ia = 0, ib = 0;
  double d = 0.0, fa = 0.0, fb = 0.0;
  while (ia < a.size() && ib < b.size()) {
    const double x = std::min(a[ia], b[ib]);
    while (ia < a.size() && a[ia] == x) ++ia;
    while (ib < b.size() && b[ib] == x) ++ib;
    fa = static_cast<double>(ia) / na;
    fb = static_cast<double>(ib) / nb;
    d = std::max(d, std::fabs(fa - fb));
  }
  return d;
}

}  // namespace vlse
