#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace ssmthom {

// Weakly decreasing list of positive parts; the empty partition is valid.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  std::size_t length() const { return parts_.size(); }

  // (part value, multiplicity) pairs, largest part first.
  std::vector<std::pair<int, int>> multiplicities() const;

  // Graded order: by weight, then parts lexicographically descending, so that
  // within one degree (3) < (2,1) < (1,1,1). Matches printed table order.
  std::strong_ordering operator<=>(const Partition& other) const;
  bool operator==(const Partition& other) const = default;

  // "0" for the empty partition, "211" for (2,1,1), "10,1" once parts reach
  // two digits. compress_exponents renders (3,1,1) as "31^2".
  std::string render(bool compress_exponents = false) const;

private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All partitions of n in the canonical order above.
std::vector<Partition> partitions_of(int n);

}  // namespace ssmthom
