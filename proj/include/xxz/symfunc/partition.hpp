#pragma once

#include <string>
#include <vector>

namespace xxz {

/// Integer partition: non-increasing positive parts. Zero parts given on
/// construction are dropped.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument on negative or increasing parts.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }
  /// i-th part (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Transpose of the Young diagram.
  Partition conjugate() const;

  /// e.g. "(4,4,3,1,1)"
  std::string to_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

namespace symfunc {

/// All partitions of k with at most max_parts parts, in reverse lexicographic order.
std::vector<Partition> partitions_of(int k, int max_parts);

/// The staircase (2(n-1), 2(n-2), ..., 2, 0).
Partition double_staircase(int n);

}  // namespace symfunc
}  // namespace xxz
