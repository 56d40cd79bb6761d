#include "ttp/index_list.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ttp/errors.hpp"

namespace ttp {

IndexList::IndexList(std::initializer_list<int> indices)
    : IndexList(std::vector<int>(indices)) {}

IndexList::IndexList(std::vector<int> indices) : indices_(std::move(indices)) {
  std::vector<int> sorted = indices_;
  std::ranges::sort(sorted);
  if (!sorted.empty() && sorted.front() < 1) {
    throw DimensionError("index lists are 1-based; got " + std::to_string(sorted.front()));
  }
  if (std::ranges::adjacent_find(sorted) != sorted.end()) {
    throw DimensionError("duplicate index in " + ttp::to_string(*this));
  }
}

IndexList IndexList::iota(int count, int first) {
  std::vector<int> v(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) v[k] = first + k;
  return IndexList(std::move(v));
}

IndexList IndexList::drop_last() const {
  if (indices_.empty()) throw DimensionError("drop_last on empty index list");
  return IndexList(std::vector<int>(indices_.begin(), indices_.end() - 1));
}

IndexList IndexList::drop_first() const {
  if (indices_.empty()) throw DimensionError("drop_first on empty index list");
  return IndexList(std::vector<int>(indices_.begin() + 1, indices_.end()));
}

IndexList IndexList::drop_both() const {
  if (indices_.size() < 2) throw DimensionError("drop_both needs at least two indices");
  return IndexList(std::vector<int>(indices_.begin() + 1, indices_.end() - 1));
}

IndexList IndexList::reversed() const {
  return IndexList(std::vector<int>(indices_.rbegin(), indices_.rend()));
}

IndexList IndexList::without(int index) const {
  std::vector<int> v;
  v.reserve(indices_.size());
  for (int i : indices_) {
    if (i != index) v.push_back(i);
  }
  return IndexList(std::move(v));
}

bool IndexList::contains(int index) const {
  return std::ranges::find(indices_, index) != indices_.end();
}

int IndexList::max() const {
  return indices_.empty() ? 0 : *std::ranges::max_element(indices_);
}

std::string to_string(const IndexList& list) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < list.size(); ++k) {
    if (k) os << ',';
    os << list[k];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IndexList& list) {
  return os << to_string(list);
}

}  // namespace ttp
