#pragma once

// Ordinals below epsilon_0 in Cantor normal form:
//   w^(b1)*c1 + ... + w^(bk)*ck,  b1 > ... > bk,  ci > 0.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pilat {

class Ordinal {
public:
    struct Term;

    /// Zero.
    Ordinal() = default;

    static Ordinal finite(std::uint64_t n);
    static Ordinal omega();
    /// w^exponent * coefficient (zero when coefficient is 0).
    static Ordinal omega_power(const Ordinal& exponent, std::uint64_t coefficient = 1);
    /// Throws DomainError unless exponents strictly decrease and coefficients are positive.
    static Ordinal from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const noexcept { return terms_; }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_finite() const;
    bool is_successor() const;
    bool is_limit() const;
    /// Value of a finite ordinal; throws DomainError otherwise.
    std::uint64_t finite_value() const;
    /// Predecessor of a successor ordinal.
    Ordinal predecessor() const;

    friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
    friend bool operator==(const Ordinal& a, const Ordinal& b);

private:
    std::vector<Term> terms_;
};

struct Ordinal::Term {
    Ordinal exponent;
    std::uint64_t coefficient = 1;

    friend bool operator==(const Term&, const Term&) = default;
};

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);
/// Ordinal sum (not commutative: 1 + w = w).
Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_successor(const Ordinal& a);
/// 0 for 0, 1 for successors, cf(w^b) of the last term for limits: w when b is a successor,
/// cf(b) when b is a limit.
Ordinal ord_cofinality(const Ordinal& a);

/// e.g. "w^(w+1)*3+w*2+5"; "0" for zero.
std::string to_string(const Ordinal& a);

/// Grammar: sum := term ('+' term)*, term := atom ('*' INT)?, atom := INT | w ('^' pow)?,
/// pow := INT | w | '(' sum ')'. `w` may be spelled `omega`. Sums are normalized.
Ordinal parse_ordinal(std::string_view text);
/// Parses a prefix of text starting at pos and advances pos past it.
Ordinal parse_ordinal_prefix(std::string_view text, std::size_t& pos);

}  // namespace pilat
