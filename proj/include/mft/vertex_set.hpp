#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace mft {

/// Sorted, duplicate-free set of 0-based vertex (or row/column) indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> members) : VertexSet(std::vector<int>(members)) {}
  explicit VertexSet(std::vector<int> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  static VertexSet from_mask(std::uint64_t mask) {
    std::vector<int> out;
    for (int v = 0; mask != 0; ++v, mask >>= 1) {
      if (mask & 1U) out.push_back(v);
    }
    return VertexSet(std::move(out));
  }

  static VertexSet all(int n) {
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) out[static_cast<std::size_t>(v)] = v;
    return VertexSet(std::move(out));
  }

  std::span<const int> members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const { return std::binary_search(members_.begin(), members_.end(), v); }
  int front() const { return members_.front(); }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (int v : members_) m |= std::uint64_t{1} << v;
    return m;
  }

  /// Throws std::out_of_range unless every member lies in [0, n).
  void check_within(int n) const {
    if (!members_.empty() && (members_.front() < 0 || members_.back() >= n)) {
      throw std::out_of_range("vertex set member out of range");
    }
  }

  /// Number of members strictly below `index`.
  int count_below(int index) const {
    return static_cast<int>(std::lower_bound(members_.begin(), members_.end(), index) -
                            members_.begin());
  }

  VertexSet with(int v) const {
    auto out = members_;
    out.push_back(v);
    return VertexSet(std::move(out));
  }

  VertexSet united(const VertexSet& other) const {
    auto out = members_;
    out.insert(out.end(), other.members_.begin(), other.members_.end());
    return VertexSet(std::move(out));
  }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<int> members_;
};

/// Position of `index` after the indices in `removed` are deleted. `index`
/// itself must not be in `removed`.
inline int remapped_index(int index, const VertexSet& removed) {
  return index - removed.count_below(index);
}

/// Calls fn(VertexSet) for every k-subset of `pool`, in lexicographic order.
template <typename Fn>
void for_each_combination(std::span<const int> pool, int k, Fn&& fn) {
  if (k < 0 || static_cast<std::size_t>(k) > pool.size()) return;
  const std::size_t n = pool.size();
  const std::size_t size = static_cast<std::size_t>(k);
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  std::vector<int> chosen(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) chosen[i] = pool[pick[i]];
    fn(VertexSet(chosen));
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace mft
