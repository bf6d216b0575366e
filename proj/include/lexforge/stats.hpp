#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace lexforge::stats {

double mean(std::span<const double> values);

/// Population variance (divide by n), so results are bit-comparable across
/// implementations.
double variance_population(std::span<const double> values);

double peak_to_peak(std::span<const double> values);

/// Linear-interpolation quantile (the R-7 / NumPy default rule):
/// h = (n-1)p, Q = x[floor(h)] + frac(h) * (x[floor(h)+1] - x[floor(h)]).
/// For even n this gives the mid-interpolated median.
double quantile_sorted(const std::vector<double>& sorted, double p);

double median(std::vector<double> values);

struct Summary {
  double min = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double max = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  std::size_t n = 0;
};

Summary summarize(std::vector<double> values);

/// Two-sample Kolmogorov-Smirnov statistic D = sup |F_a - F_b|.
double ks_statistic(std::vector<double> a, std::vector<double> b);

/// Asymptotic KS p-value (Kolmogorov distribution tail sum).
double ks_pvalue(double d, std::size_t n, std::size_t m);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 0;
};

/// Equal-width bins over [min, max]; the top edge is inclusive. A constant
/// sample collapses into a single bin.
std::vector<HistogramBin> histogram(const std::vector<double>& values,
                                    int bins);

/// CSV with header bin_lo,bin_hi,count.
std::string histogram_csv(const std::vector<HistogramBin>& bins);

}  // namespace lexforge::stats
