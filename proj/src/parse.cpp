#include "lyubeznik/parse.hpp"

#include <cctype>
#include <limits>

namespace lyz {

namespace {

class Parser {
public:
    Parser(std::string_view text, const RingPtr& ring, std::size_t base)
        : text_(text), ring_(ring), base_(base) {}

    Polynomial parse_all() {
        Polynomial r = expr();
        skip_ws();
        if (pos_ != text_.size()) {
            fail(std::string("unexpected '") + text_[pos_] + "'");
        }
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, base_ + pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected an integer");
        }
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const unsigned d = unsigned(text_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10) {
                fail("integer literal too large");
            }
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    Polynomial expr() {
        Polynomial acc(ring_);
        bool negative = accept('-');
        if (!negative) {
            accept('+');
        }
        for (;;) {
            Polynomial t = term();
            if (negative) {
                acc -= t;
            } else {
                acc += t;
            }
            if (accept('+')) {
                negative = false;
            } else if (accept('-')) {
                negative = true;
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (accept('*')) {
            acc *= factor();
        }
        return acc;
    }

    Polynomial power_suffix(Polynomial base) {
        if (accept('^')) {
            return base.pow(integer());
        }
        return base;
    }

    Polynomial factor() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("unexpected end of input");
        }
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            if (!accept(')')) {
                fail("expected ')'");
            }
            return power_suffix(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = integer();
            return Polynomial::constant(ring_, std::int64_t(v % ring_->characteristic()));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            const std::string_view name = text_.substr(start, pos_ - start);
            const int idx = ring_->var_index(name);
            if (idx < 0) {
                throw ParseError("unknown identifier '" + std::string(name) + "'", base_ + start);
            }
            return power_suffix(Polynomial::variable(ring_, std::size_t(idx)));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    const RingPtr& ring_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring, 0).parse_all(); }

std::vector<Polynomial> parse_poly_list(std::string_view text, const RingPtr& ring) {
    std::vector<Polynomial> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i < text.size() && text[i] == '(') {
            ++depth;
        } else if (i < text.size() && text[i] == ')') {
            --depth;
        } else if (i == text.size() || (text[i] == ',' && depth == 0)) {
            out.push_back(Parser(text.substr(start, i - start), ring, start).parse_all());
            start = i + 1;
        }
    }
    return out;
}

} // namespace lyz
