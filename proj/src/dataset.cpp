#include "fairaudit/dataset.hpp"

#include <algorithm>
#include <limits>

namespace fairaudit {

LabeledDataset::LabeledDataset(std::shared_ptr<const AttributeSchema> schema,
                               std::vector<std::uint32_t> groups,
                               std::vector<std::uint8_t> outcomes,
                               std::vector<double> predictions)
    : schema_(std::move(schema)),
      groups_(std::move(groups)),
      outcomes_(std::move(outcomes)),
      predictions_(std::move(predictions)) {
  require(schema_ != nullptr, Errc::InvalidArgument, "dataset needs a schema");
  require(groups_.size() == outcomes_.size(), Errc::InvalidArgument,
          "group and outcome columns differ in length");
  require(predictions_.empty() || predictions_.size() == groups_.size(),
          Errc::InvalidArgument,
          "prediction column length does not match row count");

  const std::size_t subgroups = schema_->subgroup_count();
  for (std::size_t i = 0; i < groups_.size(); ++i) {
    require(groups_[i] < subgroups, Errc::UnknownSubgroup,
            "row " + std::to_string(i) + " references an out-of-range subgroup");
    require(outcomes_[i] <= 1, Errc::OutcomeNotBinary,
            "row " + std::to_string(i) + " has a non-binary outcome");
  }
  for (std::size_t i = 0; i < predictions_.size(); ++i) {
    const double p = predictions_[i];
    if (std::isnan(p)) continue;  // missing score for this row
    require(p >= 0.0 && p <= 1.0, Errc::PredictionOutOfRange,
            "row " + std::to_string(i) + " has prediction outside [0,1]");
  }
}

LabeledDataset LabeledDataset::project(
    const std::vector<std::string>& keep) const {
  require(!keep.empty(), Errc::InvalidArgument, "keep set must be non-empty");

  std::vector<std::size_t> kept_attrs;
  for (const auto& name : keep) kept_attrs.push_back(schema_->attribute_index(name));
  std::sort(kept_attrs.begin(), kept_attrs.end());
  kept_attrs.erase(std::unique(kept_attrs.begin(), kept_attrs.end()),
                   kept_attrs.end());

  std::vector<Attribute> attrs;
  for (std::size_t i : kept_attrs) attrs.push_back(schema_->attribute(i));
  auto projected = std::make_shared<AttributeSchema>(std::move(attrs));

  std::vector<std::uint32_t> groups(groups_.size());
  std::vector<std::uint32_t> sub(kept_attrs.size());
  for (std::size_t row = 0; row < groups_.size(); ++row) {
    const auto values = schema_->key_values(groups_[row]);
    for (std::size_t j = 0; j < kept_attrs.size(); ++j) sub[j] = values[kept_attrs[j]];
    groups[row] = static_cast<std::uint32_t>(projected->flat_index(sub));
  }
  return LabeledDataset(std::move(projected), std::move(groups), outcomes_,
                        predictions_);
}

}  // namespace fairaudit
