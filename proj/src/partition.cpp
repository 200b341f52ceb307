#include "xxz/symfunc/partition.hpp"

#include <functional>
#include <stdexcept>

namespace xxz {

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("Partition: parts must be non-increasing");
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
  for (int p : parts_) weight_ += p;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> c(static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
  return Partition(std::move(c));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace symfunc {

std::vector<Partition> partitions_of(int k, int max_parts) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (static_cast<int>(cur.size()) == max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (k >= 0) rec(k, k);
  return out;
}

Partition double_staircase(int n) {
  std::vector<int> parts;
  for (int i = n - 1; i >= 0; --i) parts.push_back(2 * i);
  return Partition(std::move(parts));
}

}  // namespace symfunc
}  // namespace xxz
