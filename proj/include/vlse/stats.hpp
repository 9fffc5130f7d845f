#pragma once

#include <functional>
#include <vector>

namespace vlse {

// Neumaier compensated accumulator; deterministic for a fixed add order.
struct NeumaierSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

double mean(const std::vector<double>& xs);
double sample_variance(const std::vector<double>& xs);  // unbiased
double sample_sd(const std::vector<double>& xs);
double skewness(const std::vector<double>& xs);
double excess_kurtosis(const std::vector<double>& xs);

// Linear-interpolation quantile on a copy (numpy's default estimator).
double quantile(std::vector<double> xs, double p);
double median(const std::vector<double>& xs);
double iqr(const std::vector<double>& xs);

// Pearson correlation of the two samples' midranks.
double spearman_rho(const std::vector<double>& a, const std::vector<double>& b);
double pearson_rho(const std::vector<double>& a, const std::vector<double>& b);

// One-sample Kolmogorov-Smirnov statistic against an analytic CDF.
// Infinite sample values are allowed; they sit at the extremes of the sort.
double ks_statistic(std::vector<double> sample, const std::function<double(double)>& cdf);

// Two-sample Kolmogorov-Smirnov statistic.
double ks_statistic(std::vector<double> a, std::vector<double> b);

std::vector<double> midranks(const std::vector<double>& xs);

}  // namespace vlse
