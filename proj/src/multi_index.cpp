#include "qdc/multi_index.hpp"

#include <string>

#include "qdc/errors.hpp"

namespace qdc {

MultiIndex::MultiIndex(std::initializer_list<int> indices)
    : MultiIndex(from_indices(std::span<const int>(indices.begin(), indices.size()))) {}

MultiIndex MultiIndex::from_indices(std::span<const int> indices) {
  std::uint64_t mask = 0;
  int previous = -1;
  for (int i : indices) {
    if (i < 0 || i >= kMaxIndex) {
      throw InputError("index " + std::to_string(i) + " out of range");
    }
    if (i <= previous) {
      throw InputError("indices must be strictly increasing");
    }
    mask |= std::uint64_t{1} << i;
    previous = i;
  }
  return from_mask(mask);
}

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  out.reserve(degree());
  for (std::uint64_t m = mask_; m; m &= m - 1) {
    out.push_back(__builtin_ctzll(m));
  }
  return out;
}

bool operator<(MultiIndex a, MultiIndex b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db;
  const std::uint64_t diff = a.mask_ ^ b.mask_;
  if (!diff) return false;
  // The first position where the sorted lists differ holds the smallest
  // index in the symmetric difference; whoever owns it is smaller.
  return (a.mask_ & diff & -diff) != 0;
}

int count_between(MultiIndex m, int lo, int hi) {
  if (lo > hi) std::swap(lo, hi);
  if (hi - lo <= 1) return 0;
  const std::uint64_t above_lo = ~((std::uint64_t{2} << lo) - 1);
  const std::uint64_t below_hi = (std::uint64_t{1} << hi) - 1;
  return __builtin_popcountll(m.mask() & above_lo & below_hi);
}

int merge_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int inversions = 0;
  for (std::uint64_t m = b.mask(); m; m &= m - 1) {
    const int y = __builtin_ctzll(m);
    const std::uint64_t above = ~((std::uint64_t{2} << y) - 1);
    inversions += __builtin_popcountll(a.mask() & above);
  }
  return (inversions & 1) ? -1 : 1;
}

namespace {

void collect(int dim, int k, int start, std::uint64_t mask, std::vector<MultiIndex>& out) {
  if (k == 0) {
    out.push_back(MultiIndex::from_mask(mask));
    return;
  }
  for (int i = start; i <= dim - k; ++i) {
    collect(dim, k - 1, i + 1, mask | (std::uint64_t{1} << i), out);
  }
}

}  // namespace

std::vector<MultiIndex> all_subsets(int dim, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > dim) return out;
  collect(dim, k, 0, 0, out);
  return out;
}

}  // namespace qdc
