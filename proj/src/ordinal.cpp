#include "pilat/ordinal.hpp"

#include <cctype>

#include "pilat/error.hpp"

namespace pilat {

Ordinal Ordinal::finite(std::uint64_t n) {
    Ordinal o;
    if (n > 0) o.terms_.push_back(Term{Ordinal{}, n});
    return o;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(const Ordinal& exponent, std::uint64_t coefficient) {
    Ordinal o;
    if (coefficient > 0) o.terms_.push_back(Term{exponent, coefficient});
    return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0) throw DomainError("ordinal: zero coefficient in normal form");
        if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
            throw DomainError("ordinal: exponents must strictly decrease");
    }
    Ordinal o;
    o.terms_ = std::move(terms);
    return o;
}

bool Ordinal::is_finite() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero()); }

bool Ordinal::is_successor() const { return !terms_.empty() && terms_.back().exponent.is_zero(); }

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

std::uint64_t Ordinal::finite_value() const {
    if (!is_finite()) throw DomainError("ordinal " + to_string(*this) + " is not finite");
    return terms_.empty() ? 0 : terms_[0].coefficient;
}

Ordinal Ordinal::predecessor() const {
    if (!is_successor()) throw DomainError("ordinal " + to_string(*this) + " has no predecessor");
    Ordinal o = *this;
    if (--o.terms_.back().coefficient == 0) o.terms_.pop_back();
    return o;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
    const std::size_t common = std::min(a.terms_.size(), b.terms_.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
        if (auto c = a.terms_[i].coefficient <=> b.terms_[i].coefficient; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
    if (b.is_zero()) return a;
    const auto& lead = b.terms().front();
    std::vector<Ordinal::Term> terms;
    for (const auto& t : a.terms()) {
        if (t.exponent < lead.exponent) break;
        terms.push_back(t);
    }
    auto rest = b.terms().begin();
    if (!terms.empty() && terms.back().exponent == lead.exponent) {
        std::uint64_t sum;
        if (__builtin_add_overflow(terms.back().coefficient, lead.coefficient, &sum))
            throw OverflowError("ordinal coefficient overflow");
        terms.back().coefficient = sum;
        ++rest;
    }
    terms.insert(terms.end(), rest, b.terms().end());
    return Ordinal::from_terms(std::move(terms));
}

Ordinal ord_successor(const Ordinal& a) { return ord_add(a, Ordinal::finite(1)); }

Ordinal ord_cofinality(const Ordinal& a) {
    if (a.is_zero()) return a;
    if (a.is_successor()) return Ordinal::finite(1);
    const Ordinal& exponent = a.terms().back().exponent;
    if (exponent.is_successor()) return Ordinal::omega();
    return ord_cofinality(exponent);
}

std::string to_string(const Ordinal& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& t : a.terms()) {
        if (!out.empty()) out += '+';
        if (t.exponent.is_zero()) {
            out += std::to_string(t.coefficient);
            continue;
        }
        out += 'w';
        if (t.exponent != Ordinal::finite(1)) {
            out += '^';
            if (t.exponent.is_finite() || t.exponent == Ordinal::omega())
                out += to_string(t.exponent);
            else
                out += '(' + to_string(t.exponent) + ')';
        }
        if (t.coefficient != 1) out += '*' + std::to_string(t.coefficient);
    }
    return out;
}

namespace {

class OrdinalParser {
public:
    OrdinalParser(std::string_view text, std::size_t& pos) : text_(text), pos_(pos) {}

    Ordinal sum() {
        Ordinal total = term();
        while (peek() == '+') {
            ++pos_;
            total = ord_add(total, term());
        }
        return total;
    }

private:
    Ordinal term() {
        Ordinal base = atom();
        if (peek() == '*') {
            ++pos_;
            const std::uint64_t c = integer();
            // (w^b*k) * c = w^b*(k*c) for a single-term atom
            if (base.is_zero() || c == 0) return Ordinal{};
            const auto& t = base.terms().front();
            std::uint64_t coeff;
            if (__builtin_mul_overflow(t.coefficient, c, &coeff)) throw OverflowError("ordinal coefficient overflow");
            return Ordinal::omega_power(t.exponent, coeff);
        }
        return base;
    }

    Ordinal atom() {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return Ordinal::finite(integer());
        if (!omega_word()) throw ParseError("ordinal: expected integer or w at position " + std::to_string(pos_));
        if (peek() == '^') {
            ++pos_;
            return Ordinal::omega_power(power());
        }
        return Ordinal::omega();
    }

    Ordinal power() {
        skip_space();
        if (peek() == '(') {
            ++pos_;
            Ordinal e = sum();
            if (peek() != ')') throw ParseError("ordinal: expected ')'");
            ++pos_;
            return e;
        }
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return Ordinal::finite(integer());
        if (omega_word()) return Ordinal::omega();
        throw ParseError("ordinal: bad exponent at position " + std::to_string(pos_));
    }

    bool omega_word() {
        skip_space();
        if (text_.substr(pos_, 5) == "omega") {
            pos_ += 5;
            return true;
        }
        if (pos_ < text_.size() && text_[pos_] == 'w') {
            ++pos_;
            return true;
        }
        return false;
    }

    std::uint64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (__builtin_mul_overflow(v, 10u, &v) || __builtin_add_overflow(v, digit, &v))
                throw ParseError("ordinal: integer too large");
            ++pos_;
        }
        if (pos_ == start) throw ParseError("ordinal: expected integer at position " + std::to_string(start));
        return v;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    std::size_t& pos_;
};

}  // namespace

Ordinal parse_ordinal_prefix(std::string_view text, std::size_t& pos) { return OrdinalParser(text, pos).sum(); }

Ordinal parse_ordinal(std::string_view text) {
    std::size_t pos = 0;
    Ordinal o = parse_ordinal_prefix(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size()) throw ParseError("ordinal: trailing input '" + std::string(text.substr(pos)) + "'");
    return o;
}

}  // namespace pilat
