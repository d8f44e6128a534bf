#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace pilat {

/// Disjoint-set forest with path compression and union by size.
class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) {
        std::size_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            std::size_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    /// Returns false when x and y were already in one set.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        --sets_;
        return true;
    }

    std::size_t set_count() const noexcept { return sets_; }
    std::size_t size() const noexcept { return parent_.size(); }

private:
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::size_t sets_;
};

/// Union by size without path compression, so unions can be undone in LIFO order.
/// Used by backtracking searches.
class RollbackDisjointSets {
public:
    explicit RollbackDisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }

    std::size_t find(std::size_t x) const {
        while (parent_[x] != x) x = parent_[x];
        return x;
    }

    /// Records one history entry per call, merged or not, so every unite pairs with one rollback.
    bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
            history_.push_back(kNoop);
            return false;
        }
        if (size_[x] < size_[y]) std::swap(x, y);
        parent_[y] = x;
        size_[x] += size_[y];
        --sets_;
        history_.push_back(y);
        return true;
    }

    void rollback() {
        std::size_t y = history_.back();
        history_.pop_back();
        if (y == kNoop) return;
        std::size_t x = parent_[y];
        size_[x] -= size_[y];
        parent_[y] = y;
        ++sets_;
    }

    std::size_t set_count() const noexcept { return sets_; }

private:
    static constexpr std::size_t kNoop = static_cast<std::size_t>(-1);

    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
    std::vector<std::size_t> history_;
    std::size_t sets_;
};

}  // namespace pilat
