#pragma once

// Exhaustive enumeration of Pi_n in lexicographic restricted-growth-string order, and
// the counting functions used as oracles by the other modules.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pilat/partition.hpp"

namespace pilat {

/// Size caps. Defaults are the documented limits; `from_env` applies PILAT_MAX_N.
struct Limits {
    int enumerate = 12;
    int maximal_chains = 6;
    int keyframe_k = 7;
    int antichain_maximality = 10;
    int complements = 11;
    int census = 9;
    int ortho_search = 4;
    int ortho_exhaustive = 5;
    int hasse = 7;

    /// Every cap replaced by $PILAT_MAX_N (clamped to the ground cap) when set.
    static Limits from_env();
};

/// Throws CapExceeded when value > cap.
void require_cap(const char* what, int value, int cap);

/// Streams Pi_n as restricted growth strings, first 00..0 (top), last 01..(n-1) (bottom).
class RgsIterator {
public:
    explicit RgsIterator(int n);

    bool done() const noexcept { return done_; }
    const LabelVector& labels() const noexcept { return labels_; }
    Partition partition() const { return Partition::from_labels(labels_); }
    /// Advances to the next string; sets done() after the last one.
    void next();

private:
    LabelVector labels_;
    std::vector<int> prefix_max_;  // prefix_max_[i] = max(labels_[0..i])
    bool done_ = false;
};

/// Calls fn(partition) for every partition of {0..n-1} in RGS order.
template <typename F>
void for_each_partition(int n, F&& fn) {
    for (RgsIterator it(n); !it.done(); it.next()) fn(it.partition());
}

/// All of Pi_n, materialized, with constant-time rank lookup.
class LatticeUniverse {
public:
    static LatticeUniverse build(int n, const Limits& limits = {});

    int ground_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Partition& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<Partition>& elements() const noexcept { return elements_; }
    auto begin() const { return elements_.begin(); }
    auto end() const { return elements_.end(); }

    /// Position of p in RGS order (its rank), computed from its labels.
    std::size_t index_of(const Partition& p) const;

    std::size_t bottom_index() const noexcept { return elements_.size() - 1; }
    std::size_t top_index() const noexcept { return 0; }

private:
    int n_ = 0;
    std::vector<Partition> elements_;
    // completions_[i][m]: number of RGS suffixes for positions i..n-1 when the prefix max is m
    std::vector<std::vector<std::uint64_t>> completions_;
};

/// Stirling number of the second kind. Throws OverflowError past 64 bits.
std::uint64_t stirling2(int n, int k);
/// Bell number. Throws OverflowError past 64 bits (n > 25).
std::uint64_t bell(int n);
std::uint64_t binomial(int n, int k);

/// Covers of bottom: singular partitions with a doubleton block, in RGS order.
std::vector<Partition> atoms(int n);
/// Partitions covered by top: the two-block partitions, in RGS order.
std::vector<Partition> coatoms(int n);

}  // namespace pilat
