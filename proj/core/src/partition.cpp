#include "gwq/partition.hpp"

#include <algorithm>
#include <numeric>

#include "gwq/errors.hpp"

namespace gwq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw ParameterError("not a partition: parts must be positive and weakly decreasing");
    }
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits(int rows, int cols) const {
  return length() <= rows && (empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

Partition Partition::conjugate() const {
  std::vector<int> conj(empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
  }
  return Partition(std::move(conj));
}

Partition Partition::complement(int rows, int cols) const {
  if (!fits(rows, cols)) throw ParameterError("partition " + to_string() + " is outside the box");
  std::vector<int> out(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)] = cols - part(rows - 1 - i);
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

namespace {

void fill_box(int rows, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  for (int p = 1; p <= max_part; ++p) {
    cur.push_back(p);
    fill_box(rows, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  fill_box(rows, cols, cur, out);
  std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a < b;
  });
  return out;
}

}  // namespace gwq
