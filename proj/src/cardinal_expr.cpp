#include "pilat/cardinal_expr.hpp"

#include <cctype>
#include <string>

#include "pilat/error.hpp"

namespace pilat {

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, const ContinuumModel& model) : text_(text), model_(model) {}

    CardinalRange parse_all() {
        CardinalRange r = expr();
        finish();
        return r;
    }

    PartitionShape parse_shape_all() {
        expect_word("shape");
        PartitionShape s = shape_body();
        finish();
        return s;
    }

private:
    CardinalRange expr() {
        skip_space();
        if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            return CardinalRange::exact(Cardinal::finite(integer()));
        const std::string name = word();
        if (name == "fin") {
            expect('(');
            const auto n = integer();
            expect(')');
            return CardinalRange::exact(Cardinal::finite(n));
        }
        if (name == "aleph") {
            expect('(');
            Ordinal index = parse_ordinal_prefix(text_, pos_);
            expect(')');
            return CardinalRange::exact(Cardinal::aleph(std::move(index)));
        }
        if (name == "pow") {
            expect('(');
            const Cardinal base = determined(expr());
            expect(',');
            const Cardinal exp = determined(expr());
            expect(')');
            return card_pow(base, exp, model_);
        }
        if (name == "cf" || name == "succ") {
            expect('(');
            const Cardinal arg = determined(expr());
            expect(')');
            return CardinalRange::exact(name == "cf" ? cofinality(arg) : successor(arg));
        }
        if (name == "complements") {
            expect('(');
            expect_word("shape");
            const PartitionShape s = shape_body();
            expect(')');
            return complement_count_symbolic(s, model_);
        }
        throw ParseError("unknown function '" + name + "'");
    }

    PartitionShape shape_body() {
        expect('(');
        long full = -1;
        std::optional<Cardinal> kappa;
        Cardinal residue;
        bool trivial = false;
        while (true) {
            const std::string key = word();
            expect('=');
            if (key == "full") {
                full = static_cast<long>(integer());
            } else if (key == "kappa") {
                kappa = determined(expr());
            } else if (key == "lambda") {
                residue = determined(expr());
            } else if (key == "trivial") {
                trivial = integer() != 0;
            } else {
                throw ParseError("unknown shape field '" + key + "'");
            }
            skip_space();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            break;
        }
        expect(')');
        if (!kappa) throw ParseError("shape: kappa is required");
        if (full < 0 && !trivial) throw ParseError("shape: full is required");
        const auto blocks = full == 0   ? PartitionShape::FullBlocks::none
                            : full == 1 ? PartitionShape::FullBlocks::one
                                        : PartitionShape::FullBlocks::several;
        return PartitionShape::make(blocks, *kappa, residue, trivial);
    }

    static Cardinal determined(const CardinalRange& r) { return r.value(); }

    std::string word() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
        if (pos_ == start) throw ParseError("expected a name at position " + std::to_string(start));
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect_word(std::string_view w) {
        if (word() != w) throw ParseError("expected '" + std::string(w) + "'");
    }

    std::uint64_t integer() {
        skip_space();
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (__builtin_mul_overflow(v, 10u, &v) || __builtin_add_overflow(v, digit, &v))
                throw ParseError("integer too large");
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an integer at position " + std::to_string(start));
        return v;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "' at position " + std::to_string(pos_));
        ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) throw ParseError("trailing input '" + std::string(text_.substr(pos_)) + "'");
    }

    std::string_view text_;
    const ContinuumModel& model_;
    std::size_t pos_ = 0;
};

}  // namespace

CardinalRange evaluate_expression(std::string_view text, const ContinuumModel& model) {
    return ExprParser(text, model).parse_all();
}

PartitionShape parse_shape(std::string_view text, const ContinuumModel& model) {
    return ExprParser(text, model).parse_shape_all();
}

}  // namespace pilat
