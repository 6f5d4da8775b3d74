#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "fairaudit/errors.hpp"

namespace fairaudit {

// Hard cap on the size of the intersection space |A|.
inline constexpr std::uint64_t kMaxSubgroups = 1'000'000;

struct Attribute {
  std::string name;
  std::vector<std::string> domain;
};

// Declared sensitive attributes and their category domains. The intersection
// space is the cartesian product of the domains. Subgroups are addressed by
// dense row-major flat indices so that hot paths never touch labels; the flat
// order coincides with lexicographic order of the per-attribute indices.
class AttributeSchema {
 public:
  explicit AttributeSchema(std::vector<Attribute> attributes);

  std::size_t attribute_count() const { return attributes_.size(); }
  const Attribute& attribute(std::size_t i) const { return attributes_[i]; }
  const std::vector<Attribute>& attributes() const { return attributes_; }

  // |A|, the number of intersectional subgroups.
  std::size_t subgroup_count() const {
    return static_cast<std::size_t>(subgroup_count_);
  }

  std::size_t attribute_index(const std::string& name) const;
  std::uint32_t label_index(std::size_t attribute, const std::string& label) const;

  std::size_t flat_index(const std::vector<std::uint32_t>& values) const;
  std::vector<std::uint32_t> key_values(std::size_t flat) const;

  // Human-readable rendering, e.g. "gender=F,race=b".
  std::string subgroup_label(std::size_t flat) const;

  bool operator==(const AttributeSchema& other) const;

 private:
  std::vector<Attribute> attributes_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t subgroup_count_ = 1;
};

// A point s in the intersection space: one category index per attribute, in
// schema order. Ordered lexicographically.
struct SubgroupKey {
  std::vector<std::uint32_t> values;

  friend auto operator<=>(const SubgroupKey&, const SubgroupKey&) = default;
};

// All |A| keys in lexicographic order.
std::vector<SubgroupKey> enumerate_subgroups(const AttributeSchema& schema);

}  // namespace fairaudit
