#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "poly.hpp"

namespace symcart {

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, std::size_t num_vars, std::span<const std::string> names)
        : s_(text), n_(num_vars), names_(names) {}

    MultiPoly parse() {
        MultiPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw InputError("malformed polynomial '" + std::string(s_) + "' at offset " +
                         std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    MultiPoly expr() {
        MultiPoly acc(n_);
        bool negate = false;
        if (accept('-')) negate = true;
        else accept('+');
        MultiPoly t = term();
        acc += negate ? -t : t;
        for (;;) {
            if (accept('+')) acc += term();
            else if (accept('-')) acc -= term();
            else break;
        }
        return acc;
    }

    MultiPoly term() {
        MultiPoly acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                MultiPoly d = factor();
                if (!d.is_constant() || d.is_zero()) fail("divisor must be a nonzero constant");
                acc *= d.constant_term().inverse();
            } else {
                break;
            }
        }
        return acc;
    }

    MultiPoly factor() {
        MultiPoly b = base();
        if (accept('^')) {
            skip_ws();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            unsigned long k = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (k > 4096) fail("exponent too large");
            b = b.pow(static_cast<unsigned>(k));
        }
        return b;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return std::string(s_.substr(start, pos_ - start));
    }

    bool ident_char(std::size_t at) const {
        return at < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[at])) || s_[at] == '_');
    }

    MultiPoly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly p = expr();
            if (!accept(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = digits();
            std::string den = "1";
            if (pos_ + 1 < s_.size() && s_[pos_] == '/' && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
                ++pos_;
                den = digits();
            }
            Rational q(num + "/" + den);
            if (q.get_den() == 0) fail("zero denominator");
            q.canonicalize();
            if (pos_ < s_.size() && s_[pos_] == 'i' && !ident_char(pos_ + 1)) {
                ++pos_;
                return MultiPoly::constant(n_, Scalar(Rational(0), q));
            }
            return MultiPoly::constant(n_, Scalar(q));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (ident_char(pos_)) ++pos_;
            std::string id(s_.substr(start, pos_ - start));
            if (id == "i") return MultiPoly::constant(n_, Scalar::i());
            for (std::size_t k = 0; k < names_.size(); ++k)
                if (names_[k] == id) return MultiPoly::variable(n_, k);
            if (names_.empty() && id.size() > 1 && id[0] == 'x' &&
                std::all_of(id.begin() + 1, id.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                unsigned long k = std::stoul(id.substr(1));
                if (k >= n_) fail("variable " + id + " outside the " + std::to_string(n_) + "-variable ring");
                return MultiPoly::variable(n_, k);
            }
            fail("unknown identifier '" + id + "'");
        }
        fail(c == '\0' ? "unexpected end of input" : "unexpected character");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t n_;
    std::span<const std::string> names_;
};

}  // namespace detail

/// Parses the canonical rendering (and ordinary infix input) back into a
/// polynomial over x0..x{n-1}, or over the supplied variable names.
inline MultiPoly parse_poly(std::string_view text, std::size_t num_vars,
                            std::span<const std::string> names = {}) {
    return detail::PolyParser(text, num_vars, names).parse();
}

/// Scalars as "p/q", "p/q+r/si", "(3/2 + 1i)", "-i".
inline Scalar parse_scalar(std::string_view text) {
    MultiPoly p = parse_poly(text, 0);
    return p.constant_term();
}

}  // namespace symcart
