#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fairaudit/counts.hpp"

namespace fairaudit::metrics {

// The six intersectional fairness criteria. Elift compares each subgroup to
// the population base rate; the others compare subgroup pairs; EqualizedOdds
// is the conjunction of TprParity and FprParity.
enum class FairnessMetric {
  Elift,
  ImpactRatio,
  StatisticalParity,
  TprParity,
  FprParity,
  EqualizedOdds,
};

// Metrics on model outputs need confusion counts; Elift and ImpactRatio read
// the data alone.
bool is_model_metric(FairnessMetric m);

std::string metric_name(FairnessMetric m);
std::optional<FairnessMetric> metric_from_name(const std::string& name);

struct Smoothing {
  double alpha = 0.0;
  double beta = 0.0;
};

// Numerator/denominator the metric's rate is built from:
// Elift, ImpactRatio -> (n1, n); StatisticalParity -> (tp+fp, n);
// TprParity -> (tp, n1); FprParity -> (fp, n-n1).
struct NumDen {
  double num = 0.0;
  double den = 0.0;
};
NumDen metric_counts(const CountsTable& counts, FairnessMetric metric,
                     std::size_t subgroup);

// Per-subgroup rates for one metric, aligned with the schema's flat subgroup
// order. Subgroups whose rate has no usable support under zero smoothing are
// excluded from the extremes (counted in `excluded`) instead of carrying
// zeros or infinities into the logs; with positive smoothing every subgroup
// participates.
struct RateTable {
  FairnessMetric metric = FairnessMetric::ImpactRatio;
  std::vector<double> rate;      // NaN where excluded
  std::vector<double> support;   // effective denominator per subgroup
  std::vector<bool> included;
  std::optional<double> base;    // population base rate (Elift only)
  std::size_t excluded = 0;
};

// Smoothed plug-in rates (num + alpha) / (den + alpha + beta) with the
// numerator/denominator pair the metric prescribes. EqualizedOdds has no
// single rate table; ask for its two sides separately.
RateTable rates_for_metric(const CountsTable& counts, FairnessMetric metric,
                           Smoothing smoothing);

// Worst-offending pair behind an epsilon value. `lo` is empty when the
// comparison is against the population base rate.
struct WorstPair {
  std::size_t hi = 0;
  std::optional<std::size_t> lo;
};

struct EpsilonResult {
  double eps = 0.0;
  WorstPair pair;
};

// Minimal eps such that the metric's definition holds for the given rates:
// log(max/min) over subgroup pairs, or max |log(rate/base)| for Elift.
EpsilonResult epsilon(const RateTable& rates);

// max(eps_TPR, eps_FPR): the smallest eps satisfying both parities.
EpsilonResult epsilon_equalized_odds(const CountsTable& counts,
                                     Smoothing smoothing);

// eps <= rule within a 1e-12 slack.
bool check_threshold(double eps, double rule);

// Multiplicative change of bias between two audited models: exp(e2 - e1).
double bias_amplification(double eps2, double eps1);

}  // namespace fairaudit::metrics
