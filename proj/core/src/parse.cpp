/*
   Copyright 2026 The qclcd Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "qclcd/parse.hpp"

#include <cctype>
#include <charconv>

#include "qclcd/poly.hpp"

namespace qclcd {

namespace {

constexpr std::uint64_t kMaxExponent = 1u << 20;

class Parser {
public:
    Parser(const FieldSpec& field, std::string_view text, bool allow_x)
        : field_(field), text_(text), allow_x_(allow_x) {}

    Poly parse() {
        Poly r = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorCode::SyntaxError,
                    what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool at_symbol() {
        skip_ws();
        const std::string& s = field_.symbol();
        return text_.substr(pos_, s.size()) == s;
    }

    bool starts_factor() {
        const char c = peek();
        return c == '(' || c == 'x' || std::isdigit(static_cast<unsigned char>(c)) || at_symbol();
    }

    Poly expr() {
        Poly acc(field_);
        bool negate = false;
        if (peek() == '-' || peek() == '+') {
            negate = text_[pos_] == '-';
            ++pos_;
        }
        Poly t = term();
        acc = negate ? -t : t;
        while (peek() == '+' || peek() == '-') {
            const bool minus = text_[pos_] == '-';
            ++pos_;
            Poly u = term();
            if (minus)
                acc -= u;
            else
                acc += u;
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc *= factor();
            } else if (starts_factor() && !std::isdigit(static_cast<unsigned char>(peek()))) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = primary();
        if (peek() == '^') {
            ++pos_;
            const std::uint64_t e = integer();
            if (e > kMaxExponent) throw Error(ErrorCode::OutOfRangeDigit, "exponent too large");
            Poly r = Poly::constant(field_, 1);
            Poly b = base;
            std::uint64_t k = e;
            while (k) {
                if (k & 1) r *= b;
                k >>= 1;
                if (k) b *= b;
            }
            return r;
        }
        return base;
    }

    Poly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::uint64_t v = integer();
            return Poly::constant(field_, v % field_.characteristic());
        }
        if (at_symbol()) {
            if (field_.degree() == 1) fail("symbol '" + field_.symbol() + "' is undefined in a prime field");
            pos_ += field_.symbol().size();
            return Poly::constant(field_, field_.characteristic());
        }
        if (c == 'x') {
            if (!allow_x_) fail("variable x is not allowed in a field element");
            ++pos_;
            return Poly::monomial(field_, 1, 1);
        }
        if (c == '\0') fail("unexpected end of input");
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::uint64_t integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected integer");
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (UINT64_MAX - d) / 10) throw Error(ErrorCode::OutOfRangeDigit, "integer literal overflows");
            v = v * 10 + d;
            ++pos_;
        }
        return v;
    }

    const FieldSpec& field_;
    std::string_view text_;
    bool allow_x_;
    std::size_t pos_ = 0;
};

}  // namespace

Coeff parse_element(const FieldSpec& field, std::string_view text) {
    Poly p = Parser(field, text, false).parse();
    return p.coeff(0);
}

Poly parse_poly(const FieldSpec& field, std::string_view text) { return Parser(field, text, true).parse(); }

Poly parse_poly_or_list(const FieldSpec& field, std::string_view text) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size() || text[i] != '[') return parse_poly(field, text);

    std::vector<Coeff> coeffs;
    ++i;
    auto ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    ws();
    if (i < text.size() && text[i] == ']') return Poly(field);
    for (;;) {
        ws();
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error(ErrorCode::SyntaxError, "expected integer in coefficient list \"" + std::string(text) + "\"");
        std::uint64_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(text[i] - '0');
            if (v > (UINT64_MAX - d) / 10) throw Error(ErrorCode::OutOfRangeDigit, "integer literal overflows");
            v = v * 10 + d;
            ++i;
        }
        coeffs.push_back(v);
        ws();
        if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
        }
        if (i < text.size() && text[i] == ']') {
            ++i;
            break;
        }
        throw Error(ErrorCode::SyntaxError, "malformed coefficient list \"" + std::string(text) + "\"");
    }
    ws();
    if (i != text.size()) throw Error(ErrorCode::SyntaxError, "trailing characters after coefficient list");
    return Poly(field, std::move(coeffs));
}

FieldSpec parse_field_spec(std::string_view text) {
    const auto bad = [&] {
        return Error(ErrorCode::SyntaxError,
                     "field must be written q, p^k or p^k:modulus, got \"" + std::string(text) + "\"");
    };
    const auto read_uint = [&](std::string_view s) {
        std::uint64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw bad();
        return v;
    };
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const auto caret = head.find('^');
    std::uint64_t p = read_uint(head.substr(0, caret));
    std::uint64_t k = 1;
    if (caret != std::string_view::npos) {
        k = read_uint(head.substr(caret + 1));
    } else if (p > 3 && !is_prime(p)) {
        // A bare prime power such as "4" or "9".
        std::uint64_t r = 2;
        while (r * r <= p && p % r != 0) ++r;
        std::uint64_t rest = p;
        unsigned e = 0;
        while (rest % r == 0) {
            rest /= r;
            ++e;
        }
        if (rest == 1) {
            p = r;
            k = e;
        }
    }
    if (k == 0 || k > 64) throw Error(ErrorCode::UnsupportedSize, "extension degree " + std::to_string(k));
    std::vector<Coeff> modulus;
    if (colon != std::string_view::npos) {
        const FieldSpec base = FieldSpec::prime(p);
        modulus = parse_poly_or_list(base, text.substr(colon + 1)).coeffs();
    }
    return FieldSpec::make(p, static_cast<unsigned>(k), std::move(modulus));
}

}  // namespace qclcd
