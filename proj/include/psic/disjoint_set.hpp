#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace psic {

// Union-find with path halving. Roots are the least index of their set, which
// keeps results independent of union order.
class DisjointSet {
  public:
    explicit DisjointSet(std::size_t size) { reset(size); }

    void reset(std::size_t size) {
        parent_.resize(size);
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns true if the two elements were in different sets.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        if (a < b)
            parent_[b] = a;
        else
            parent_[a] = b;
        return true;
    }

  private:
    std::vector<std::size_t> parent_;
};

} // namespace psic
