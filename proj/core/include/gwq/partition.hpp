#pragma once

#include <compare>
#include <string>
#include <vector>

namespace gwq {

// Weakly decreasing sequence of positive integers. Trailing zeros passed to
// the constructor are dropped, so (2,1,0) and (2,1) are the same partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  bool empty() const { return parts_.empty(); }

  // 0-based; rows past the end read as 0.
  int part(int row) const {
    return row < length() ? parts_[static_cast<std::size_t>(row)] : 0;
  }

  bool fits(int rows, int cols) const;
  bool contains(const Partition& other) const;
  Partition conjugate() const;
  // Complement inside a rows x cols box; requires fits(rows, cols).
  Partition complement(int rows, int cols) const;

  // "(2,1)"; the empty partition prints as "()".
  std::string to_string() const;

  // Lexicographic on the part sequence.
  auto operator<=>(const Partition&) const = default;
  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

// All partitions in a rows x cols box, ordered by weight and then
// lexicographically.
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace gwq
