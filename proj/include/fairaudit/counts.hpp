#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fairaudit/dataset.hpp"

namespace fairaudit {

// Per-subgroup tallies: group size, positive outcomes, and (when predictions
// were thresholded) the confusion counts. Empty subgroups are retained with
// n = 0 so downstream smoothing decides their treatment.
class CountsTable {
 public:
  CountsTable(std::shared_ptr<const AttributeSchema> schema, bool confusion);

  const AttributeSchema& schema() const { return *schema_; }
  const std::shared_ptr<const AttributeSchema>& schema_ptr() const {
    return schema_;
  }

  std::size_t subgroup_count() const { return n_.size(); }
  bool has_confusion() const { return has_confusion_; }

  std::uint64_t n(std::size_t s) const { return n_[s]; }
  std::uint64_t n1(std::size_t s) const { return n1_[s]; }
  std::uint64_t tp(std::size_t s) const { return tp_[s]; }
  std::uint64_t fp(std::size_t s) const { return fp_[s]; }
  std::uint64_t tn(std::size_t s) const { return tn_[s]; }
  std::uint64_t fn(std::size_t s) const { return fn_[s]; }
  bool empty_subgroup(std::size_t s) const { return n_[s] == 0; }

  std::uint64_t total_n() const { return total_n_; }
  std::uint64_t total_n1() const { return total_n1_; }

  void add(std::uint32_t group, bool outcome);
  void add(std::uint32_t group, bool outcome, bool predicted);

  // Adds one whole cell of `src` into subgroup `dest`; both tables must agree
  // on whether confusion counts are present.
  void accumulate(std::size_t dest, const CountsTable& src, std::size_t s);

  // Verifies the internal identities (n1 <= n, confusion sums, totals).
  void check() const;

 private:
  std::shared_ptr<const AttributeSchema> schema_;
  bool has_confusion_;
  std::vector<std::uint64_t> n_, n1_;
  std::vector<std::uint64_t> tp_, fp_, tn_, fn_;
  std::uint64_t total_n_ = 0, total_n1_ = 0;
};

// Tallies the dataset. With a threshold, scores are binarized as
// prediction >= threshold and confusion counts are filled; rows lacking a
// prediction then raise MissingPrediction.
CountsTable build_counts(const LabeledDataset& data,
                         std::optional<double> threshold = std::nullopt);

// Sums counts over all attributes not named in `keep`; totals are preserved.
CountsTable marginalize(const CountsTable& counts,
                        const std::vector<std::string>& keep);

}  // namespace fairaudit
