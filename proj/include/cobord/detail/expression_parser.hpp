#pragma once

// Recursive-descent reader for polynomial expressions:
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor ('*' factor)*
//   factor  := primary ['^' integer]
//   primary := integer | name ['[' integer (',' integer)* ']'] | '(' expr ')'
// Atoms are resolved by a caller-supplied function, so the same reader serves
// coefficient polynomials and series.

#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cobord/coeff.hpp"
#include "cobord/error.hpp"

namespace cobord::detail {

template <typename T, typename AtomFn, typename IntFn>
class ExpressionParser {
public:
    ExpressionParser(std::string_view text, AtomFn atom, IntFn from_integer)
        : text_(text), atom_(std::move(atom)), from_integer_(std::move(from_integer)) {}

    T parse() {
        T value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError,
                    what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() {
        skip_space();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }

    Integer integer() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    int small_integer() {
        Integer v = integer();
        if (!v.fits_sint_p()) fail("integer out of range");
        return static_cast<int>(v.get_si());
    }

    T expr() {
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        T value = term();
        if (negate) value = -value;
        for (;;) {
            if (accept('+')) {
                value = value + term();
            } else if (accept('-')) {
                value = value - term();
            } else {
                return value;
            }
        }
    }

    T term() {
        T value = factor();
        while (accept('*')) value = value * factor();
        return value;
    }

    T factor() {
        T base = primary();
        if (!accept('^')) return base;
        int exponent = small_integer();
        T result = from_integer_(Integer(1));
        for (int i = 0; i < exponent; ++i) result = result * base;
        return result;
    }

    T primary() {
        if (accept('(')) {
            T inner = expr();
            expect(')');
            return inner;
        }
        if (peek_digit()) return from_integer_(integer());
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected operand");
        std::string name(text_.substr(start, pos_ - start));
        std::vector<int> indices;
        if (accept('[')) {
            indices.push_back(small_integer());
            while (accept(',')) indices.push_back(small_integer());
            expect(']');
        }
        return atom_(name, indices);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    AtomFn atom_;
    IntFn from_integer_;
};

template <typename T, typename AtomFn, typename IntFn>
T parse_expression(std::string_view text, AtomFn atom, IntFn from_integer) {
    return ExpressionParser<T, AtomFn, IntFn>(text, std::move(atom), std::move(from_integer)).parse();
}

}  // namespace cobord::detail
