#include "pilat/cardinal.hpp"

#include <algorithm>

#include "pilat/error.hpp"

namespace pilat {

std::uint64_t Cardinal::finite_value() const {
    if (!is_finite()) throw DomainError("cardinal " + to_string(*this) + " is infinite");
    return std::get<std::uint64_t>(value_);
}

const Ordinal& Cardinal::aleph_index() const {
    if (is_finite()) throw DomainError("cardinal " + to_string(*this) + " is finite");
    return std::get<Ordinal>(value_);
}

std::strong_ordering operator<=>(const Cardinal& a, const Cardinal& b) {
    if (a.is_finite() != b.is_finite()) return a.is_finite() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_finite()) return a.finite_value() <=> b.finite_value();
    return a.aleph_index() <=> b.aleph_index();
}

std::string to_string(const Cardinal& c) {
    if (c.is_finite()) return std::to_string(c.finite_value());
    return "aleph(" + to_string(c.aleph_index()) + ")";
}

Cardinal successor(const Cardinal& c) {
    if (c.is_finite()) return Cardinal::finite(c.finite_value() + 1);
    return Cardinal::aleph(ord_successor(c.aleph_index()));
}

Cardinal cofinality(const Cardinal& c) {
    if (c.is_finite()) return Cardinal::finite(c.finite_value() == 0 ? 0 : 1);
    const Ordinal& index = c.aleph_index();
    if (index.is_zero() || index.is_successor()) return c;
    // every ordinal below epsilon_0 is countable, so |cf(index)| = aleph_0
    const Ordinal cf = ord_cofinality(index);
    return cf.is_finite() ? Cardinal::finite(cf.finite_value()) : Cardinal::aleph(0);
}

bool is_regular(const Cardinal& c) { return c.is_infinite() && cofinality(c) == c; }

const Cardinal& CardinalRange::value() const {
    if (!is_exact()) throw DomainError("value " + to_string(*this) + " is not determined by the model");
    return lower;
}

std::string to_string(const CardinalRange& r) {
    if (r.is_exact()) return to_string(r.lower);
    if (!r.upper) return "[" + to_string(r.lower) + ", unbounded)";
    return "[" + to_string(r.lower) + ", " + to_string(*r.upper) + "]";
}

ContinuumModel ContinuumModel::custom(std::map<Ordinal, Ordinal> assignment) {
    for (const auto& [k, v] : assignment) {
        const Cardinal kappa = Cardinal::aleph(k);
        const Cardinal power = Cardinal::aleph(v);
        if (!(v > k))
            throw DomainError("model inconsistency: 2^" + to_string(kappa) + " = " + to_string(power) +
                              " is not above " + to_string(kappa));
        if (!(cofinality(power) > kappa))
            throw DomainError("model inconsistency: cf(2^" + to_string(kappa) + ") = " +
                              to_string(cofinality(power)) + " violates Koenig's theorem");
    }
    for (auto it = assignment.begin(); it != assignment.end(); ++it) {
        auto next = std::next(it);
        if (next != assignment.end() && next->second < it->second)
            throw DomainError("model inconsistency: continuum function decreases between aleph(" +
                              to_string(it->first) + ") and aleph(" + to_string(next->first) + ")");
    }
    ContinuumModel m;
    m.gch_ = false;
    m.assignment_ = std::move(assignment);
    return m;
}

CardinalRange power_of_two(const Cardinal& c, const ContinuumModel& model) {
    if (c.is_finite()) {
        const std::uint64_t n = c.finite_value();
        if (n >= 64) throw OverflowError("2^" + std::to_string(n) + " exceeds 64 bits");
        return CardinalRange::exact(Cardinal::finite(std::uint64_t{1} << n));
    }
    if (model.is_gch()) return CardinalRange::exact(successor(c));
    const Ordinal& index = c.aleph_index();
    const auto& table = model.assignment();
    if (auto it = table.find(index); it != table.end()) return CardinalRange::exact(Cardinal::aleph(it->second));
    Cardinal lower = successor(c);
    std::optional<Cardinal> upper;
    for (const auto& [k, v] : table) {
        if (k < index)
            lower = std::max(lower, Cardinal::aleph(v));
        else if (!upper)
            upper = Cardinal::aleph(v);
    }
    return {lower, upper};
}

CardinalRange card_pow(const Cardinal& base, const Cardinal& exp, const ContinuumModel& model) {
    if (base.is_finite() && base.finite_value() < 2) throw DomainError("card_pow: base must be at least 2");
    if (base.is_finite() && exp.is_finite()) throw DomainError("card_pow: both arguments finite; use integer arithmetic");
    if (exp == Cardinal::finite(0)) return CardinalRange::exact(Cardinal::finite(1));
    if (base.is_finite()) return power_of_two(exp, model);  // 2 <= n <= exp
    if (exp.is_finite()) return CardinalRange::exact(base);

    const Cardinal& kappa = base;
    const Cardinal& lambda = exp;
    if (model.is_gch()) {
        if (lambda < cofinality(kappa)) return CardinalRange::exact(kappa);
        if (lambda <= kappa) return CardinalRange::exact(successor(kappa));
        return CardinalRange::exact(successor(lambda));
    }
    if (lambda >= kappa) return power_of_two(lambda, model);
    const CardinalRange two_lambda = power_of_two(lambda, model);
    if (two_lambda.lower >= kappa) return two_lambda;  // kappa <= 2^lambda forces kappa^lambda = 2^lambda
    Cardinal lower = std::max(kappa, two_lambda.lower);
    if (lambda >= cofinality(kappa)) lower = std::max(lower, successor(kappa));
    return {lower, power_of_two(kappa, model).upper};
}

Cardinal card_sum_family(const Cardinal& index_size, const Cardinal& sup_terms) {
    if (index_size < Cardinal::finite(1) || sup_terms < Cardinal::finite(1))
        throw DomainError("card_sum_family: index set and terms must be non-empty");
    if (index_size.is_finite() && sup_terms.is_finite())
        throw DomainError("card_sum_family: both finite; use integer arithmetic");
    return std::max(index_size, sup_terms);
}

CardinalRange card_tarski_product(const Cardinal& length, const Cardinal& sup, const ContinuumModel& model) {
    if (length.is_finite() || sup.is_finite()) throw DomainError("card_tarski_product: needs infinite length and supremum");
    return card_pow(sup, length, model);
}

PartitionShape PartitionShape::make(FullBlocks full, Cardinal kappa, Cardinal residue, bool trivial) {
    if (kappa.is_finite()) throw DomainError("partition shape: kappa must be infinite");
    if (residue > kappa) throw DomainError("partition shape: residue exceeds kappa");
    PartitionShape s;
    s.full_blocks = full;
    s.kappa = std::move(kappa);
    s.residue = std::move(residue);
    s.trivial = trivial || (full == FullBlocks::one && s.residue == Cardinal::finite(0));
    return s;
}

CardinalRange complement_count_symbolic(const PartitionShape& shape, const ContinuumModel& model) {
    if (shape.trivial) return CardinalRange::exact(Cardinal::finite(1));
    if (shape.full_blocks != PartitionShape::FullBlocks::one) return power_of_two(shape.kappa, model);
    return card_pow(shape.kappa, shape.residue, model);
}

namespace {

// sup of 2^m over cardinals m < kappa, under GCH
Cardinal gch_sup_powers_below(const Cardinal& kappa) {
    const Ordinal& index = kappa.aleph_index();
    if (index.is_zero()) return kappa;  // 2^n over finite n
    if (index.is_successor()) return successor(Cardinal::aleph(index.predecessor()));
    return kappa;  // sup of aleph(b+1) over b < limit
}

}  // namespace

ChainCardinalityBounds chain_cardinality_bounds(const Cardinal& kappa) {
    if (kappa.is_finite()) throw DomainError("chain_cardinality_bounds: kappa must be infinite");
    ChainCardinalityBounds b;
    b.well_ordered_lower = cofinality(kappa);
    b.well_ordered_upper = kappa;
    b.long_chain_exceeds = kappa;
    const ContinuumModel gch = ContinuumModel::gch();
    b.short_chain_ground = power_of_two(kappa, gch).value();
    b.short_chain_length = card_sum_family(kappa, gch_sup_powers_below(kappa));
    return b;
}

}  // namespace pilat
