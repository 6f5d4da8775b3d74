#pragma once

#include <cmath>
#include <cstdint>
#include <memory>
#include <vector>

#include "fairaudit/schema.hpp"

namespace fairaudit {

// Column-oriented labeled sample: per row a subgroup id, a binary outcome and
// an optional score in [0,1]. Immutable after construction; safe to share
// across threads.
class LabeledDataset {
 public:
  // `predictions` is either empty (no score column) or one entry per row;
  // NaN marks a row without a score.
  LabeledDataset(std::shared_ptr<const AttributeSchema> schema,
                 std::vector<std::uint32_t> groups,
                 std::vector<std::uint8_t> outcomes,
                 std::vector<double> predictions = {});

  const AttributeSchema& schema() const { return *schema_; }
  const std::shared_ptr<const AttributeSchema>& schema_ptr() const {
    return schema_;
  }

  std::size_t size() const { return groups_.size(); }
  std::uint32_t group(std::size_t i) const { return groups_[i]; }
  bool outcome(std::size_t i) const { return outcomes_[i] != 0; }

  bool has_predictions() const { return !predictions_.empty(); }
  double prediction(std::size_t i) const {
    return has_predictions() ? predictions_[i]
                             : std::numeric_limits<double>::quiet_NaN();
  }

  const std::vector<std::uint32_t>& groups() const { return groups_; }
  const std::vector<std::uint8_t>& outcomes() const { return outcomes_; }
  const std::vector<double>& predictions() const { return predictions_; }

  // Copy with the given attribute columns removed; used by marginalization
  // cross-checks and the CLI.
  LabeledDataset project(const std::vector<std::string>& keep) const;

 private:
  std::shared_ptr<const AttributeSchema> schema_;
  std::vector<std::uint32_t> groups_;
  std::vector<std::uint8_t> outcomes_;
  std::vector<double> predictions_;
};

}  // namespace fairaudit
