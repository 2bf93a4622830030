#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace qdc {

/// Strictly increasing index set naming the basis form e^{i_1...i_k}.
///
/// Stored as a bit mask, so indices live in [0, 64). Ordering is
/// lexicographic on the sorted index lists, with shorter lists first.
class MultiIndex {
 public:
  static constexpr int kMaxIndex = 64;

  MultiIndex() = default;
  /// Indices must be strictly increasing; throws InputError otherwise.
  MultiIndex(std::initializer_list<int> indices);

  static MultiIndex from_indices(std::span<const int> indices);
  static constexpr MultiIndex from_mask(std::uint64_t mask) {
    MultiIndex m;
    m.mask_ = mask;
    return m;
  }

  std::vector<int> indices() const;
  int degree() const { return __builtin_popcountll(mask_); }
  bool contains(int i) const { return (mask_ >> i) & 1u; }
  bool empty() const { return mask_ == 0; }
  /// Largest index, or -1 for the empty set.
  int max_index() const { return mask_ ? 63 - __builtin_clzll(mask_) : -1; }
  std::uint64_t mask() const { return mask_; }

  MultiIndex with(int i) const { return from_mask(mask_ | (std::uint64_t{1} << i)); }
  MultiIndex without(int i) const { return from_mask(mask_ & ~(std::uint64_t{1} << i)); }

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  friend bool operator<(MultiIndex a, MultiIndex b);

 private:
  std::uint64_t mask_ = 0;
};

/// Sign of the permutation sorting the concatenation (a, b), or 0 when the
/// two sets intersect.  e^a ^ e^b = merge_sign(a, b) e^{a u b}.
int merge_sign(MultiIndex a, MultiIndex b);

/// Number of elements of m strictly between lo and hi (order of arguments
/// irrelevant).
int count_between(MultiIndex m, int lo, int hi);

/// All k-subsets of [0, dim), in MultiIndex order.
std::vector<MultiIndex> all_subsets(int dim, int k);

}  // namespace qdc
