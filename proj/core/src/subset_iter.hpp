#ifndef TREEHELLY_SUBSET_ITER_HPP
#define TREEHELLY_SUBSET_ITER_HPP

#include <vector>

namespace treehelly::detail {

// Visits index combinations {0..n-1} of each size 0..max_size, sizes
// ascending, lexicographic within a size. Stops early when fn returns true;
// returns whether any call did.
template <typename Fn>
bool for_each_combination(int n, int max_size, Fn&& fn) {
    std::vector<int> idx;
    for (int size = 0; size <= max_size && size <= n; ++size) {
        idx.resize(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        while (true) {
            if (fn(static_cast<const std::vector<int>&>(idx))) return true;
            if (size == 0) break;
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

}  // namespace treehelly::detail

#endif
