#pragma once

// Set partitions of a finite ground set {0..n-1} and the refinement lattice on them.
//
// A Partition is always held in canonical form: blocks are ordered by their least
// element, so two partitions are equal iff their block sequences are equal. Values
// are immutable after construction.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pilat/element_set.hpp"

namespace pilat {

/// label[i] = index of the block holding i under canonical block order (a restricted
/// growth string).
using LabelVector = std::vector<int>;

class Partition {
public:
    /// The empty partition of the empty ground set.
    Partition() = default;

    /// Validates that `blocks` partition {0..n-1} and canonicalizes. Throws ParseError.
    static Partition from_blocks(int n, std::vector<ElementSet> blocks);
    /// Blocks from arbitrary non-negative labels (elements with equal labels share a block).
    static Partition from_labels(std::span<const int> labels);

    int ground_size() const noexcept { return n_; }
    int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
    std::span<const ElementSet> blocks() const noexcept { return blocks_; }
    const ElementSet& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }

    /// Index of the block containing `e`.
    int block_of(Element e) const;
    LabelVector labels() const;
    /// Block sizes in canonical block order.
    std::vector<int> block_sizes() const;

    bool is_bottom() const noexcept { return block_count() == n_; }
    bool is_top() const noexcept { return block_count() <= 1; }

    friend bool operator==(const Partition&, const Partition&) = default;

    std::size_t hash() const noexcept;

private:
    Partition(int n, std::vector<ElementSet> blocks) : n_(n), blocks_(std::move(blocks)) {}

    int n_ = 0;
    std::vector<ElementSet> blocks_;
};

/// Lexicographic order of the restricted growth strings; the enumeration order of Pi_n.
bool rgs_less(const Partition& p, const Partition& q);

struct PartitionHash {
    std::size_t operator()(const Partition& p) const noexcept { return p.hash(); }
};

/// Parses `block ('|' block)*` with blocks of space-separated ids over {0..n-1}.
Partition parse(std::string_view text, int n);
/// Same, with the ground-set size taken as the number of ids in the literal.
Partition parse(std::string_view text);
/// Canonical literal, e.g. "0 1|2". Inverse of parse.
std::string format(const Partition& p);

Partition bottom(int n);
Partition top(int n);

/// Refinement order: every block of p lies inside a block of q.
bool leq(const Partition& p, const Partition& q);
/// Strict refinement.
bool less(const Partition& p, const Partition& q);
bool comparable(const Partition& p, const Partition& q);

/// Greatest lower bound: all nonempty pairwise block intersections.
Partition meet(const Partition& p, const Partition& q);
/// Least upper bound: transitive closure of the union of both equivalences.
Partition join(const Partition& p, const Partition& q);

/// q is obtained from p by merging exactly two blocks.
bool covers(const Partition& p, const Partition& q);

/// p with blocks i and j merged.
Partition merge_blocks(const Partition& p, int i, int j);
/// All partitions covering p, in the order of block pairs (i, j), i < j.
std::vector<Partition> upper_covers(const Partition& p);
/// Number of partitions covered by p: sum over blocks of 2^(|B|-1) - 1.
std::size_t lower_cover_count(const Partition& p);
/// Number of partitions covering p: C(#blocks, 2).
std::size_t upper_cover_count(const Partition& p);

/// Singular partition whose only non-singleton block is `s` (all singletons when |s| = 1).
Partition diag(const ElementSet& s, int n);

/// Throws DomainError unless both partitions share a ground set.
void require_same_ground(const Partition& p, const Partition& q);

}  // namespace pilat
