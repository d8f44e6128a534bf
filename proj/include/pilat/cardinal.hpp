#pragma once

// Symbolic cardinals (finite, or aleph indexed by a CNF ordinal), exponentiation under GCH or a
// partial continuum function, and the complement-count and chain-length statements for
// partitions of an infinite set.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "pilat/ordinal.hpp"

namespace pilat {

class Cardinal {
public:
    /// Zero.
    Cardinal() = default;

    static Cardinal finite(std::uint64_t n) { return Cardinal(n); }
    static Cardinal aleph(Ordinal index) { return Cardinal(std::move(index)); }
    static Cardinal aleph(std::uint64_t index) { return Cardinal(Ordinal::finite(index)); }

    bool is_finite() const noexcept { return std::holds_alternative<std::uint64_t>(value_); }
    bool is_infinite() const noexcept { return !is_finite(); }
    /// Throws DomainError for alephs.
    std::uint64_t finite_value() const;
    /// Throws DomainError for finite cardinals.
    const Ordinal& aleph_index() const;

    friend std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b);
    friend bool operator==(const Cardinal& a, const Cardinal& b) = default;

private:
    explicit Cardinal(std::uint64_t n) : value_(n) {}
    explicit Cardinal(Ordinal index) : value_(std::move(index)) {}

    std::variant<std::uint64_t, Ordinal> value_{std::uint64_t{0}};
};

/// "7" or "aleph(w+1)".
std::string to_string(const Cardinal& c);

/// Next cardinal: n+1 for finite n, aleph(a+1) for aleph(a).
Cardinal successor(const Cardinal& c);
/// cf(aleph(0)) = aleph(0); cf(aleph(a+1)) = aleph(a+1); cf(aleph(limit)) = |cf(limit)|.
/// Finite: cf(0) = 0, cf(n) = 1.
Cardinal cofinality(const Cardinal& c);
bool is_regular(const Cardinal& c);

/// A value known exactly, or only up to [lower, upper] (upper absent = unbounded).
struct CardinalRange {
    Cardinal lower;
    std::optional<Cardinal> upper;

    static CardinalRange exact(Cardinal c) { return {c, c}; }
    bool is_exact() const { return upper.has_value() && *upper == lower; }
    /// The exact value; throws DomainError when undetermined.
    const Cardinal& value() const;

    friend bool operator==(const CardinalRange&, const CardinalRange&) = default;
};

std::string to_string(const CardinalRange& r);

/// The continuum function: GCH, or 2^aleph(i) = aleph(j) at finitely many indices i.
class ContinuumModel {
public:
    static ContinuumModel gch() { return ContinuumModel(); }
    /// Rejects assignments violating Cantor (j > i), monotonicity or Koenig (cf(2^k) > k).
    static ContinuumModel custom(std::map<Ordinal, Ordinal> assignment);

    bool is_gch() const noexcept { return gch_; }
    const std::map<Ordinal, Ordinal>& assignment() const noexcept { return assignment_; }

private:
    ContinuumModel() = default;

    bool gch_ = true;
    std::map<Ordinal, Ordinal> assignment_;
};

/// 2^c. Exact under GCH and for assigned indices; an interval from monotonicity otherwise.
CardinalRange power_of_two(const Cardinal& c, const ContinuumModel& model);

/// base^exp with base >= 2 and at least one side infinite. Under GCH: k^l = k for 0 < l < cf(k),
/// k+ for cf(k) <= l <= k, l+ for l > k. Under a custom model the value is exact only when
/// forced, otherwise an interval.
CardinalRange card_pow(const Cardinal& base, const Cardinal& exp, const ContinuumModel& model);

/// Sum over an index set of the given size of terms with the given supremum: the max of the two.
Cardinal card_sum_family(const Cardinal& index_size, const Cardinal& sup_terms);

/// Product of an increasing length-`length` sequence of infinite cardinals with supremum `sup`:
/// sup^length.
CardinalRange card_tarski_product(const Cardinal& length, const Cardinal& sup, const ContinuumModel& model);

/// Shape of a partition of an infinite set of size kappa, as far as complement counting cares.
struct PartitionShape {
    enum class FullBlocks { none, one, several };

    FullBlocks full_blocks = FullBlocks::none;
    Cardinal kappa = Cardinal::aleph(0);
    /// |kappa \ B| for the unique block B of size kappa; used when full_blocks == one.
    Cardinal residue;
    /// bottom or top.
    bool trivial = false;

    /// Throws DomainError unless kappa is infinite and residue <= kappa. One full block with
    /// empty residue is top, so it is marked trivial.
    static PartitionShape make(FullBlocks full, Cardinal kappa, Cardinal residue = {}, bool trivial = false);
};

/// Number of complements: 1 for bottom/top, 2^kappa with zero or several full blocks,
/// kappa^residue with exactly one.
CardinalRange complement_count_symbolic(const PartitionShape& shape, const ContinuumModel& model);

struct ChainCardinalityBounds {
    /// Cardinality of any well-ordered maximal chain lies in [lower, upper] = [cf(k), k].
    Cardinal well_ordered_lower;
    Cardinal well_ordered_upper;
    /// Some chain has cardinality strictly greater than this (namely k).
    Cardinal long_chain_exceeds;
    /// Under GCH, Pi(short_chain_ground) with short_chain_ground = 2^k has a maximal chain of
    /// cardinality short_chain_length = sum over d < k of 2^|d| = k.
    Cardinal short_chain_ground;
    Cardinal short_chain_length;
};

ChainCardinalityBounds chain_cardinality_bounds(const Cardinal& kappa);

}  // namespace pilat
