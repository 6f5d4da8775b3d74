#include "fairaudit/schema.hpp"

#include <algorithm>
#include <unordered_set>

namespace fairaudit {

AttributeSchema::AttributeSchema(std::vector<Attribute> attributes)
    : attributes_(std::move(attributes)) {
  require(!attributes_.empty(), Errc::InvalidArgument,
          "schema needs at least one attribute");

  std::unordered_set<std::string> names;
  for (const auto& attr : attributes_) {
    require(names.insert(attr.name).second, Errc::InvalidArgument,
            "duplicate attribute name '" + attr.name + "'");
    require(!attr.domain.empty(), Errc::InvalidArgument,
            "attribute '" + attr.name + "' has an empty domain");
    std::unordered_set<std::string> labels;
    for (const auto& label : attr.domain) {
      require(labels.insert(label).second, Errc::InvalidArgument,
              "attribute '" + attr.name + "' repeats label '" + label + "'");
    }
  }

  subgroup_count_ = 1;
  for (const auto& attr : attributes_) {
    subgroup_count_ *= attr.domain.size();
    require(subgroup_count_ <= kMaxSubgroups, Errc::SchemaTooLarge,
            "intersection space exceeds " + std::to_string(kMaxSubgroups) +
                " subgroups");
  }

  // Row-major strides: last attribute varies fastest.
  strides_.assign(attributes_.size(), 1);
  for (std::size_t i = attributes_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * attributes_[i].domain.size();
  }
}

std::size_t AttributeSchema::attribute_index(const std::string& name) const {
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name == name) return i;
  }
  raise(Errc::UnknownAttribute, "unknown attribute '" + name + "'");
}

std::uint32_t AttributeSchema::label_index(std::size_t attribute,
                                           const std::string& label) const {
  const auto& domain = attributes_.at(attribute).domain;
  auto it = std::find(domain.begin(), domain.end(), label);
  require(it != domain.end(), Errc::UnknownAttribute,
          "label '" + label + "' not in domain of attribute '" +
              attributes_[attribute].name + "'");
  return static_cast<std::uint32_t>(it - domain.begin());
}

std::size_t AttributeSchema::flat_index(
    const std::vector<std::uint32_t>& values) const {
  require(values.size() == attributes_.size(), Errc::InvalidArgument,
          "subgroup key length does not match schema");
  std::uint64_t flat = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    require(values[i] < attributes_[i].domain.size(), Errc::InvalidArgument,
            "category index out of range for attribute '" +
                attributes_[i].name + "'");
    flat += strides_[i] * values[i];
  }
  return static_cast<std::size_t>(flat);
}

std::vector<std::uint32_t> AttributeSchema::key_values(std::size_t flat) const {
  require(flat < subgroup_count(), Errc::InvalidArgument,
          "flat subgroup index out of range");
  std::vector<std::uint32_t> values(attributes_.size());
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    values[i] = static_cast<std::uint32_t>(flat / strides_[i]);
    flat %= strides_[i];
  }
  return values;
}

std::string AttributeSchema::subgroup_label(std::size_t flat) const {
  const auto values = key_values(flat);
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += attributes_[i].name;
    out += '=';
    out += attributes_[i].domain[values[i]];
  }
  return out;
}

bool AttributeSchema::operator==(const AttributeSchema& other) const {
  if (attributes_.size() != other.attributes_.size()) return false;
  for (std::size_t i = 0; i < attributes_.size(); ++i) {
    if (attributes_[i].name != other.attributes_[i].name) return false;
    if (attributes_[i].domain != other.attributes_[i].domain) return false;
  }
  return true;
}

std::vector<SubgroupKey> enumerate_subgroups(const AttributeSchema& schema) {
  std::vector<SubgroupKey> keys;
  keys.reserve(schema.subgroup_count());
  for (std::size_t flat = 0; flat < schema.subgroup_count(); ++flat) {
    keys.push_back(SubgroupKey{schema.key_values(flat)});
  }
  return keys;
}

}  // namespace fairaudit
