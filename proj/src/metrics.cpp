#include "fairaudit/metrics.hpp"

#include <cmath>
#include <limits>

namespace fairaudit::metrics {

bool is_model_metric(FairnessMetric m) {
  switch (m) {
    case FairnessMetric::Elift:
    case FairnessMetric::ImpactRatio:
      return false;
    default:
      return true;
  }
}

std::string metric_name(FairnessMetric m) {
  switch (m) {
    case FairnessMetric::Elift: return "elift";
    case FairnessMetric::ImpactRatio: return "impact_ratio";
    case FairnessMetric::StatisticalParity: return "statistical_parity";
    case FairnessMetric::TprParity: return "tpr_parity";
    case FairnessMetric::FprParity: return "fpr_parity";
    case FairnessMetric::EqualizedOdds: return "equalized_odds";
  }
  return "unknown";
}

std::optional<FairnessMetric> metric_from_name(const std::string& name) {
  if (name == "elift") return FairnessMetric::Elift;
  if (name == "impact_ratio") return FairnessMetric::ImpactRatio;
  if (name == "statistical_parity") return FairnessMetric::StatisticalParity;
  if (name == "tpr_parity") return FairnessMetric::TprParity;
  if (name == "fpr_parity") return FairnessMetric::FprParity;
  if (name == "equalized_odds") return FairnessMetric::EqualizedOdds;
  return std::nullopt;
}

namespace {

struct NumDen {
  double num = 0.0;
  double den = 0.0;
};

NumDen metric_counts(const CountsTable& c, FairnessMetric m, std::size_t s) {
  switch (m) {
    case FairnessMetric::Elift:
    case FairnessMetric::ImpactRatio:
      return {static_cast<double>(c.n1(s)), static_cast<double>(c.n(s))};
    case FairnessMetric::StatisticalParity:
      return {static_cast<double>(c.tp(s) + c.fp(s)),
              static_cast<double>(c.n(s))};
    case FairnessMetric::TprParity:
      return {static_cast<double>(c.tp(s)), static_cast<double>(c.n1(s))};
    case FairnessMetric::FprParity:
      return {static_cast<double>(c.fp(s)),
              static_cast<double>(c.n(s) - c.n1(s))};
    case FairnessMetric::EqualizedOdds:
      break;
  }
  raise(Errc::InvalidArgument,
        "equalized_odds has no single rate table; use its TPR/FPR sides");
}

}  // namespace

RateTable rates_for_metric(const CountsTable& counts, FairnessMetric metric,
                           Smoothing smoothing) {
  require(metric != FairnessMetric::EqualizedOdds, Errc::InvalidArgument,
          "equalized_odds has no single rate table; use its TPR/FPR sides");
  require(smoothing.alpha >= 0.0 && smoothing.beta >= 0.0,
          Errc::InvalidArgument, "smoothing parameters must be non-negative");
  if (is_model_metric(metric)) {
    require(counts.has_confusion(), Errc::ConfusionRequired,
            metric_name(metric) + " needs confusion counts");
  }

  const double alpha = smoothing.alpha;
  const double beta = smoothing.beta;
  const std::size_t k = counts.subgroup_count();

  RateTable table;
  table.metric = metric;
  table.rate.assign(k, std::numeric_limits<double>::quiet_NaN());
  table.support.assign(k, 0.0);
  table.included.assign(k, false);

  std::size_t usable = 0;
  for (std::size_t s = 0; s < k; ++s) {
    const NumDen nd = metric_counts(counts, metric, s);
    table.support[s] = nd.den;
    const double den = nd.den + alpha + beta;
    const double num = nd.num + alpha;
    // Without a smoothing floor a vanished denominator or numerator has no
    // finite log-rate; such subgroups are excluded from the extremes.
    if (den <= 0.0 || num <= 0.0) {
      ++table.excluded;
      continue;
    }
    table.rate[s] = num / den;
    table.included[s] = true;
    ++usable;
  }
  require(usable > 0, Errc::DegenerateSubgroup,
          "no subgroup has usable support for " + metric_name(metric));

  if (metric == FairnessMetric::Elift) {
    const double den = static_cast<double>(counts.total_n()) + alpha + beta;
    const double num = static_cast<double>(counts.total_n1()) + alpha;
    require(den > 0.0 && num > 0.0, Errc::DegenerateSubgroup,
            "population base rate is degenerate");
    table.base = num / den;
  }
  return table;
}

EpsilonResult epsilon(const RateTable& rates) {
  EpsilonResult result;
  if (rates.metric == FairnessMetric::Elift) {
    require(rates.base.has_value(), Errc::InvalidArgument,
            "elift rate table lacks the base rate");
    const double base = *rates.base;
    bool found = false;
    for (std::size_t s = 0; s < rates.rate.size(); ++s) {
      if (!rates.included[s]) continue;
      const double dev = std::fabs(std::log(rates.rate[s] / base));
      if (!found || dev > result.eps) {
        result.eps = dev;
        result.pair.hi = s;
        found = true;
      }
    }
    require(found, Errc::DegenerateSubgroup, "no usable subgroup rates");
    result.pair.lo.reset();
    return result;
  }

  bool found = false;
  std::size_t arg_max = 0, arg_min = 0;
  double max_rate = 0.0, min_rate = 0.0;
  for (std::size_t s = 0; s < rates.rate.size(); ++s) {
    if (!rates.included[s]) continue;
    const double r = rates.rate[s];
    if (!found) {
      max_rate = min_rate = r;
      arg_max = arg_min = s;
      found = true;
      continue;
    }
    if (r > max_rate) {
      max_rate = r;
      arg_max = s;
    }
    if (r < min_rate) {
      min_rate = r;
      arg_min = s;
    }
  }
  require(found, Errc::DegenerateSubgroup, "no usable subgroup rates");
  result.eps = max_rate == min_rate ? 0.0 : std::log(max_rate / min_rate);
  if (result.eps < 0.0) result.eps = 0.0;
  result.pair.hi = arg_max;
  result.pair.lo = arg_min;
  return result;
}

EpsilonResult epsilon_equalized_odds(const CountsTable& counts,
                                     Smoothing smoothing) {
  const EpsilonResult tpr =
      epsilon(rates_for_metric(counts, FairnessMetric::TprParity, smoothing));
  const EpsilonResult fpr =
      epsilon(rates_for_metric(counts, FairnessMetric::FprParity, smoothing));
  return tpr.eps >= fpr.eps ? tpr : fpr;
}

bool check_threshold(double eps, double rule) {
  require(rule >= 0.0, Errc::InvalidArgument, "rule threshold must be >= 0");
  return eps <= rule + 1e-12;
}

double bias_amplification(double eps2, double eps1) {
  return std::exp(eps2 - eps1);
}

}  // namespace fairaudit::metrics
