#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace permkit {
namespace detail {

// Bipartite feasibility oracle for permutation searches: given per-row
// bitmasks of allowed columns, decides whether rows from_row..n-1 can all be
// matched to distinct columns outside used_cols. Kuhn's augmenting-path
// matching; a failure is a Hall-condition certificate, so callers may treat
// "false" as a proof that no completion exists.
class HallMatcher {
 public:
  explicit HallMatcher(const std::vector<std::uint64_t>& row_masks)
      : masks_(row_masks), col_owner_(row_masks.size(), -1), stamp_(row_masks.size(), 0) {}

  bool completable(int from_row, std::uint64_t used_cols) {
    const int n = static_cast<int>(masks_.size());
    for (int j = 0; j < n; ++j) col_owner_[j] = -1;
    for (int r = from_row; r < n; ++r) {
      ++round_;
      if (!augment(r, used_cols)) return false;
    }
    return true;
  }

 private:
  bool augment(int row, std::uint64_t used_cols) {
    std::uint64_t cols = masks_[row] & ~used_cols;
    while (cols) {
      const int j = std::countr_zero(cols);
      cols &= cols - 1;
      if (stamp_[j] == round_) continue;
      stamp_[j] = round_;
      if (col_owner_[j] < 0 || augment(col_owner_[j], used_cols)) {
        col_owner_[j] = row;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::uint64_t>& masks_;
  std::vector<int> col_owner_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t round_ = 0;
};

}  // namespace detail
}  // namespace permkit
