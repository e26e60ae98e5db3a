#include <cctype>
#include <string>

#include "slrep/ratfunc.hpp"

namespace slrep {

namespace {

// Recursive-descent parser for the expression grammar
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-'* primary ('^' integer)?
//   primary:= 'x' digits | digits | '(' expr ')'
class Parser {
public:
    Parser(const std::string& text, int nvars) : text_(text), nvars_(nvars) {}

    RatFunc run() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw domain_error("unexpected input at position " + std::to_string(pos_));
        return v;
    }

private:
    RatFunc expr() {
        RatFunc v = term();
        while (true) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                v = v + term();
            } else if (peek() == '-') {
                ++pos_;
                v = v - term();
            } else {
                return v;
            }
        }
    }

    RatFunc term() {
        RatFunc v = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                v = v * factor();
            } else if (peek() == '/') {
                ++pos_;
                RatFunc d = factor();
                if (d.is_zero()) throw domain_error("division by zero in expression");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc factor() {
        skip_ws();
        bool neg = false;
        while (peek() == '-') {
            ++pos_;
            neg = !neg;
            skip_ws();
        }
        RatFunc v = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            if (!std::isdigit(peek())) throw domain_error("exponent must be a non-negative integer");
            long e = integer();
            v = v.pow(static_cast<int>(e));
        }
        return neg ? -v : v;
    }

    RatFunc primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            skip_ws();
            if (peek() != ')') throw domain_error("missing closing parenthesis");
            ++pos_;
            return v;
        }
        if (c == 'x') {
            ++pos_;
            if (!std::isdigit(peek())) throw domain_error("variable index expected after 'x'");
            long idx = integer();
            if (idx < 1 || idx > nvars_)
                throw domain_error("variable x" + std::to_string(idx) + " outside level " +
                                   std::to_string(nvars_));
            return RatFunc::variable(static_cast<int>(idx), nvars_);
        }
        if (std::isdigit(c)) {
            Int value(integer_digits());
            return RatFunc::constant(Rational(value), nvars_);
        }
        throw domain_error("unexpected character in expression");
    }

    long integer() {
        std::string digits = integer_digits();
        return std::stol(digits);
    }

    std::string integer_digits() {
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) throw domain_error("integer expected");
        return text_.substr(start, pos_ - start);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    int nvars_;
    size_t pos_ = 0;
};

int max_variable_index(const std::string& text) {
    int best = 1;
    for (size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
        size_t j = i + 1;
        long idx = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            idx = idx * 10 + (text[j] - '0');
            ++j;
        }
        best = std::max(best, static_cast<int>(idx));
    }
    return best;
}

} // namespace

RatFunc parse_ratfunc(const std::string& text, int nvars) {
    if (nvars < 0) throw domain_error("negative level");
    return Parser(text, nvars).run();
}

RatFunc parse_ratfunc(const std::string& text) {
    return parse_ratfunc(text, max_variable_index(text));
}

} // namespace slrep
