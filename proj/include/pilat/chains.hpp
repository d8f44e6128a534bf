#pragma once

// Chains in Pi_n: verification, deterministic extension to a maximal chain, exhaustive
// enumeration of maximal chains, lifting of nested subset families through diag, and the
// keyframe/inbetween construction on the ground set {0,1}^k.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pilat/lattice_enum.hpp"
#include "pilat/partition.hpp"

namespace pilat {

/// Strictly increasing sequence of partitions on one ground set.
using Chain = std::vector<Partition>;

struct ChainReport {
    bool is_chain = false;
    bool is_saturated = false;
    bool is_maximal = false;
    /// Consecutive positions (i, i+1) that break the chain or its saturation.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
    /// A partition that could be inserted, when the chain is valid but not maximal.
    std::optional<Partition> insertable;
};

ChainReport verify_chain(std::span<const Partition> chain);

/// Deterministic maximal chain containing `chain`: gaps are closed by merging the two
/// eligible blocks with the smallest minima, the prefix below the minimum by splitting off
/// the largest element of the first non-singleton block, the suffix above the maximum by
/// merging the first two blocks.
Chain extend_to_maximal(std::span<const Partition> chain);

/// Visits every maximal chain of Pi_n exactly once (depth-first over upper covers).
void for_each_maximal_chain(int n, const std::function<void(const Chain&)>& visit, const Limits& limits = {});
std::vector<Chain> enumerate_maximal_chains(int n, const Limits& limits = {});

/// [diag(S) for S in sets]; sets must be strictly increasing and have at least two elements.
Chain lift_subset_chain(std::span<const ElementSet> sets, int n);

/// Ground set {0..2^k-1}; element e stands for its k-bit big-endian bit string, so the
/// blocks sharing a length-d prefix are the contiguous ranges of width 2^(k-d). Blocks at
/// level d are ordered by ascending prefix value.
class KeyframePlan {
public:
    explicit KeyframePlan(int k, const Limits& limits = {});

    int bit_length() const noexcept { return k_; }
    int ground_size() const noexcept { return 1 << k_; }
    std::size_t blocks_at(int level) const { return std::size_t{1} << level; }

    /// Partition by shared first `level` bits; keyframe(0) = top, keyframe(k) = bottom.
    Partition keyframe(int level) const;
    /// keyframe(level) with its first `split` blocks (in level order) split in two.
    /// inbetween(level, 0) = keyframe(level); split ranges over [0, 2^level].
    Partition inbetween(int level, std::size_t split) const;

private:
    int k_;
};

/// {bottom} together with every inbetween(d, a), d < k, a < 2^d, in increasing order.
Chain keyframe_chain(int k, const Limits& limits = {});

}  // namespace pilat
