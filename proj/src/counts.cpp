#include "fairaudit/counts.hpp"

#include <algorithm>
#include <cmath>

namespace fairaudit {

CountsTable::CountsTable(std::shared_ptr<const AttributeSchema> schema,
                         bool confusion)
    : schema_(std::move(schema)), has_confusion_(confusion) {
  require(schema_ != nullptr, Errc::InvalidArgument, "counts need a schema");
  const std::size_t k = schema_->subgroup_count();
  n_.assign(k, 0);
  n1_.assign(k, 0);
  if (has_confusion_) {
    tp_.assign(k, 0);
    fp_.assign(k, 0);
    tn_.assign(k, 0);
    fn_.assign(k, 0);
  }
}

void CountsTable::add(std::uint32_t group, bool outcome) {
  ++n_[group];
  ++total_n_;
  if (outcome) {
    ++n1_[group];
    ++total_n1_;
  }
}

void CountsTable::add(std::uint32_t group, bool outcome, bool predicted) {
  add(group, outcome);
  if (outcome) {
    predicted ? ++tp_[group] : ++fn_[group];
  } else {
    predicted ? ++fp_[group] : ++tn_[group];
  }
}

void CountsTable::accumulate(std::size_t dest, const CountsTable& src,
                             std::size_t s) {
  require(has_confusion_ == src.has_confusion(), Errc::InvalidArgument,
          "confusion presence mismatch when accumulating counts");
  n_[dest] += src.n(s);
  n1_[dest] += src.n1(s);
  total_n_ += src.n(s);
  total_n1_ += src.n1(s);
  if (has_confusion_) {
    tp_[dest] += src.tp(s);
    fp_[dest] += src.fp(s);
    tn_[dest] += src.tn(s);
    fn_[dest] += src.fn(s);
  }
}

void CountsTable::check() const {
  std::uint64_t sum_n = 0, sum_n1 = 0;
  for (std::size_t s = 0; s < n_.size(); ++s) {
    require(n1_[s] <= n_[s], Errc::InvalidArgument, "n1 exceeds n");
    if (has_confusion_) {
      require(tp_[s] + fn_[s] == n1_[s], Errc::InvalidArgument,
              "confusion counts disagree with n1");
      require(tp_[s] + fn_[s] + fp_[s] + tn_[s] == n_[s], Errc::InvalidArgument,
              "confusion counts disagree with n");
    }
    sum_n += n_[s];
    sum_n1 += n1_[s];
  }
  require(sum_n == total_n_ && sum_n1 == total_n1_, Errc::InvalidArgument,
          "totals out of sync");
}

CountsTable build_counts(const LabeledDataset& data,
                         std::optional<double> threshold) {
  if (threshold) {
    require(*threshold >= 0.0 && *threshold <= 1.0, Errc::InvalidArgument,
            "threshold must lie in [0,1]");
  }
  CountsTable table(data.schema_ptr(), threshold.has_value());
  const std::size_t rows = data.size();
  if (threshold) {
    require(data.has_predictions(), Errc::MissingPrediction,
            "confusion counts requested but the dataset has no predictions");
    const double tau = *threshold;
    for (std::size_t i = 0; i < rows; ++i) {
      const double score = data.prediction(i);
      require(!std::isnan(score), Errc::MissingPrediction,
              "row " + std::to_string(i) + " lacks a prediction");
      table.add(data.group(i), data.outcome(i), score >= tau);
    }
  } else {
    for (std::size_t i = 0; i < rows; ++i) {
      table.add(data.group(i), data.outcome(i));
    }
  }
  return table;
}

CountsTable marginalize(const CountsTable& counts,
                        const std::vector<std::string>& keep) {
  require(!keep.empty(), Errc::InvalidArgument, "keep set must be non-empty");
  const AttributeSchema& schema = counts.schema();

  std::vector<std::size_t> kept;
  for (const auto& name : keep) kept.push_back(schema.attribute_index(name));
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<Attribute> attrs;
  for (std::size_t i : kept) attrs.push_back(schema.attribute(i));
  auto projected = std::make_shared<AttributeSchema>(std::move(attrs));

  CountsTable out(projected, counts.has_confusion());
  std::vector<std::uint32_t> sub(kept.size());
  for (std::size_t s = 0; s < counts.subgroup_count(); ++s) {
    const auto values = schema.key_values(s);
    for (std::size_t j = 0; j < kept.size(); ++j) sub[j] = values[kept[j]];
    out.accumulate(projected->flat_index(sub), counts, s);
  }
  return out;
}

}  // namespace fairaudit
