#pragma once

// Lattice complements in Pi_n: the predicate, a pruned exhaustive enumeration, Grieser's
// count of complements with n-m+1 blocks, and two constructive families (split transversals
// and injections into a large block).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pilat/lattice_enum.hpp"
#include "pilat/partition.hpp"

namespace pilat {

/// meet(p, q) = bottom and join(p, q) = top.
bool is_complement(const Partition& p, const Partition& q);

/// Backtracking over restricted growth strings: each new block meets every block of p in at
/// most one element, and branches are cut once the blocks of p can no longer be connected.
/// The visitor receives the complement's labels and block count, in RGS order.
void for_each_complement(const Partition& p, const std::function<void(const LabelVector&, int)>& visit,
                         const Limits& limits = {});
std::vector<Partition> enumerate_complements(const Partition& p, const Limits& limits = {});

/// prod |B_i| * (n-m+1)^(m-2): the number of complements with exactly n-m+1 blocks.
/// Returns 1 for top (m = 1). Throws OverflowError past 64 bits.
std::uint64_t grieser_count(const Partition& p);

/// Choice data for the split-transversal family. `iota` and `upsilon` are distinct elements
/// of one block B0; `gamma[i]` is the chosen element of the i-th other block (canonical order).
struct TransversalChoice {
    int split_block = 0;
    Element iota = 0;
    Element upsilon = 0;
    std::vector<Element> gamma;
};

/// Least-element defaults: B0 is the first non-singleton block, iota/upsilon its two least
/// elements, gamma the least element of each other block. Throws DomainError for bottom.
TransversalChoice default_transversal(const Partition& p);

/// Q = {Q1, Q2} + singletons, Q1 = {iota} + gamma over `first_side`, Q2 = {upsilon} + gamma over
/// the rest. `first_side` holds indices into the other blocks (0-based, B0 excluded).
Partition split_transversal_complement(const Partition& p, const TransversalChoice& choice,
                                       const ElementSet& first_side);
/// The 2^(m-1) complements obtained from every subset of the other blocks.
std::vector<Partition> split_transversal_family(const Partition& p, const TransversalChoice& choice);

/// Q = {e, images[i]} for the i-th element e outside block `big_block` (ascending), plus
/// singletons for the unused elements of the big block. images must be injective into it.
Partition injection_complement(const Partition& p, int big_block, std::span<const Element> images);
/// Visits the complement of every injection from the residue into block `big_block`.
void for_each_injection_complement(const Partition& p, int big_block,
                                   const std::function<void(const Partition&)>& visit);

struct ComplementCensusRow {
    Partition partition;
    int blocks = 0;
    std::vector<int> block_sizes;  // descending
    std::uint64_t total = 0;
    /// Complements with exactly n - m + 1 blocks.
    std::uint64_t count_nm1 = 0;
    std::uint64_t grieser = 0;
};

ComplementCensusRow census_row(const Partition& p, const Limits& limits = {});
/// One row per partition of Pi_n in RGS order. `jobs` worker threads split the rows.
std::vector<ComplementCensusRow> complement_census(int n, unsigned jobs = 1, const Limits& limits = {});

}  // namespace pilat
