#include "duval/parse.hpp"

#include <cctype>
#include <string>

namespace duval {

namespace {

constexpr unsigned long long kMaxExponent = 1u << 20;

struct IntLit {
    unsigned long long value = 0;  // saturated at kMaxExponent + 1
    std::uint32_t reduced = 0;     // value mod p, exact for any length
};

class Parser {
  public:
    Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    PolyFp run() {
        skip_ws();
        PolyFp f = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

  private:
    PolyFp expr() {
        bool neg = accept('-');
        PolyFp acc = term();
        if (neg) acc = -acc;
        for (;;) {
            if (accept('+')) {
                acc = acc + term();
            } else if (accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    PolyFp term() {
        PolyFp acc = factor();
        while (accept('*')) acc = acc * factor();
        return acc;
    }

    PolyFp factor() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '-') {
            advance();
            return -factor();
        }
        if (c == '(') {
            advance();
            PolyFp inner = expr();
            if (!accept(')')) fail("expected ')'");
            return maybe_pow(std::move(inner));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return PolyFp::constant(ring_, static_cast<long long>(integer().reduced));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            auto [line, col] = position();
            std::string name = identifier();
            auto idx = ring_->var_index(name);
            if (!idx) throw ParseError("unknown variable '" + name + "'", line, col);
            return maybe_pow(PolyFp::variable(ring_, *idx));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    PolyFp maybe_pow(PolyFp base) {
        if (!accept('^')) return base;
        skip_ws();
        auto [line, col] = position();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected exponent");
        }
        IntLit e = integer();
        if (e.value > kMaxExponent) throw ParseError("exponent too large", line, col);
        return base.pow(static_cast<std::uint32_t>(e.value));
    }

    IntLit integer() {
        auto [line, col] = position();
        IntLit lit;
        std::uint64_t red = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            unsigned d = static_cast<unsigned>(text_[pos_] - '0');
            red = (red * 10 + d) % ring_->p;
            if (lit.value <= kMaxExponent) lit.value = lit.value * 10 + d;
            advance();
        }
        if (pos_ < text_.size() && text_[pos_] == '.') {
            throw ParseError("coefficient is not an integer", line, col);
        }
        lit.reduced = static_cast<std::uint32_t>(red);
        return lit;
    }

    std::string identifier() {
        std::size_t start = pos_;
        advance();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'') {
                advance();
            } else {
                break;
            }
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::pair<std::size_t, std::size_t> position() const { return {line_, col_}; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace

PolyFp parse_poly(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace duval
