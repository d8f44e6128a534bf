#pragma once

// Orthocomplementation audit on Pi_n: axiom checking for a candidate map, complete search
// for small n, and the atom/coatom counting witness for n >= 5.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pilat/lattice_enum.hpp"

namespace pilat {

/// image[i] = index (in the universe's RGS order) of the orthocomplement of element i.
struct OrthoMap {
    std::vector<std::size_t> image;
};

enum class OrthoAxiom {
    none,
    meet_is_bottom,  // (i)   a ^ a' = bottom
    join_is_top,     // (ii)  a v a' = top
    de_morgan,       // (iii) (a ^ b)' = a' v b'
    involution,      // (iv)  a'' = a
};

std::string to_string(OrthoAxiom axiom);

struct OrthoCheck {
    bool ok = false;
    OrthoAxiom violated = OrthoAxiom::none;
    /// Element indices (a, b) witnessing the violation; b == a for single-element axioms.
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Checks axioms (i)..(iv) in order, stopping at the first violation.
/// Throws DomainError when the map is not total on the universe.
OrthoCheck check_ortho_map(const OrthoMap& map, const LatticeUniverse& universe);

struct OrthoSearchOptions {
    /// Cover-profile pruning and order-reversal propagation. Off = plain backtracking over
    /// complement involutions, used to cross-check the pruned search.
    bool prune = true;
    /// Permit n up to limits.ortho_exhaustive instead of limits.ortho_search.
    bool exhaustive = false;
};

struct OrthoSearchResult {
    std::optional<OrthoMap> map;
    std::uint64_t nodes = 0;
};

OrthoSearchResult search_orthocomplementation(int n, const OrthoSearchOptions& options = {},
                                              const Limits& limits = {});

struct NonOrthoWitness {
    int n = 0;
    std::uint64_t atom_count = 0;    // C(n, 2)
    std::uint64_t coatom_count = 0;  // 2^(n-1) - 1
    std::string reason;
};

/// For n >= 5: bottom has fewer upper covers than top has lower covers, so no bijection can
/// exchange them. Throws DomainError for n < 5.
NonOrthoWitness non_ortho_witness(int n);

}  // namespace pilat
