#pragma once

#include <vector>

namespace todadual {

/// Calls f(subset) for every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_combination(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(static_cast<const std::vector<int>&>(idx));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Membership mask of a subset of {0..n-1}.
inline std::vector<bool> subset_mask(int n, const std::vector<int>& subset) {
  std::vector<bool> mask(n, false);
  for (int i : subset) mask[i] = true;
  return mask;
}

}  // namespace todadual
