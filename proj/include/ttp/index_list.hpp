#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace ttp {

/// Ordered list of distinct 1-based indices.
///
/// Order is significant: A[(3,1);(2,1)] and A[(1,3);(1,2)] are different
/// submatrices. The trimming helpers give the lists used in Sylvester's
/// identity: drop_last (alpha'), drop_first ('alpha), drop_both ('alpha').
class IndexList {
 public:
  IndexList() = default;
  IndexList(std::initializer_list<int> indices);
  explicit IndexList(std::vector<int> indices);

  /// 1, 2, ..., count.
  static IndexList iota(int count, int first = 1);

  [[nodiscard]] std::size_t size() const { return indices_.size(); }
  [[nodiscard]] bool empty() const { return indices_.empty(); }
  int operator[](std::size_t pos) const { return indices_[pos]; }
  [[nodiscard]] int front() const { return indices_.front(); }
  [[nodiscard]] int back() const { return indices_.back(); }
  [[nodiscard]] auto begin() const { return indices_.begin(); }
  [[nodiscard]] auto end() const { return indices_.end(); }
  [[nodiscard]] std::span<const int> values() const { return indices_; }

  [[nodiscard]] IndexList drop_last() const;
  [[nodiscard]] IndexList drop_first() const;
  [[nodiscard]] IndexList drop_both() const;
  [[nodiscard]] IndexList reversed() const;
  [[nodiscard]] IndexList without(int index) const;
  [[nodiscard]] bool contains(int index) const;
  [[nodiscard]] int max() const;

  friend bool operator==(const IndexList&, const IndexList&) = default;
  friend auto operator<=>(const IndexList&, const IndexList&) = default;

 private:
  std::vector<int> indices_;
};

/// "(3,1,4)"
std::string to_string(const IndexList& list);
std::ostream& operator<<(std::ostream& os, const IndexList& list);

}  // namespace ttp
