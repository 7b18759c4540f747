#pragma once

#include <cstddef>
#include <vector>

namespace ringline {

// FNV-1a over int sequences; for hash-set keys of blocks and tuples.
struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace ringline
