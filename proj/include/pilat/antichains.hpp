#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pilat/lattice_enum.hpp"
#include "pilat/partition.hpp"

namespace pilat {

/// Pairwise incomparable partitions on one ground set.
using Antichain = std::vector<Partition>;

struct AntichainReport {
    bool is_antichain = false;
    /// Only meaningful when maximality was checked.
    bool is_maximal = false;
    bool maximality_checked = false;
    /// Positions of two comparable (or equal) members.
    std::optional<std::pair<std::size_t, std::size_t>> comparable_pair;
    /// A partition of Pi_n incomparable to every member.
    std::optional<Partition> extension;
};

/// Pairwise check only; no enumeration of Pi_n.
bool is_antichain(std::span<const Partition> members);

/// Full report. Maximality streams Pi_n and requires n <= limits.antichain_maximality.
AntichainReport verify_antichain(std::span<const Partition> members, int n, bool check_maximality = true,
                                 const Limits& limits = {});

/// Singular partitions whose non-singleton block is a doubleton; C(n,2) members.
Antichain doubleton_antichain(int n);
/// All two-block partitions; 2^(n-1) - 1 members.
Antichain bipartition_antichain(int n);

/// Members of `members` followed by the partitions added greedily in RGS order.
Antichain extend_to_maximal_antichain(std::span<const Partition> members, int n, const Limits& limits = {});

}  // namespace pilat
