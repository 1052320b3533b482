#pragma once

// Exact arithmetic in Z[A, A^-1].

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <cstdint>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "skein/errors.hpp"

namespace skein {

using BigInt = boost::multiprecision::cpp_int;

namespace detail {

inline int checked_add(int a, int b) {
    int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Laurent exponent overflow");
    return r;
}

inline int checked_neg(int a) {
    int r;
    if (__builtin_sub_overflow(0, a, &r)) throw std::overflow_error("Laurent exponent overflow");
    return r;
}

}  // namespace detail

/// Element of R = Z[A, A^-1], stored as exponent -> nonzero coefficient.
/// The zero polynomial is the empty map.
class LaurentPoly {
public:
    using TermMap = std::map<int, BigInt>;

    LaurentPoly() = default;

    /// Constant polynomial.
    LaurentPoly(long long c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(0, BigInt(c));
    }

    static LaurentPoly monomial(const BigInt& coeff, int exp) {
        LaurentPoly p;
        if (coeff != 0) p.terms_.emplace(exp, coeff);
        return p;
    }

    /// A^exp with unit coefficient.
    static LaurentPoly a_power(int exp) { return monomial(BigInt(1), exp); }

    static LaurentPoly from_terms(const TermMap& terms) {
        LaurentPoly p;
        for (const auto& [e, c] : terms)
            if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Single term (or zero).
    bool is_monomial() const noexcept { return terms_.size() <= 1; }

    BigInt coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    int min_exponent() const {
        if (terms_.empty()) throw std::domain_error("min_exponent of zero polynomial");
        return terms_.begin()->first;
    }

    int max_exponent() const {
        if (terms_.empty()) throw std::domain_error("max_exponent of zero polynomial");
        return terms_.rbegin()->first;
    }

    /// Value at A = 1.
    BigInt coefficient_sum() const {
        BigInt s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// The substitution A -> A^-1.
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(detail::checked_neg(e), c);
        return r;
    }

    /// Multiply by A^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), detail::checked_add(e, k), c);
        return r;
    }

    LaurentPoly pow(unsigned n) const {
        LaurentPoly result(1);
        LaurentPoly base = *this;
        while (n != 0) {
            if (n & 1u) result *= base;
            n >>= 1u;
            if (n != 0) base *= base;
        }
        return result;
    }

    /// Adds c * A^exp in place.
    void add_term(int exp, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) {
        *this = *this * o;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator-(LaurentPoly x, const LaurentPoly& y) { return x -= y; }

    friend LaurentPoly operator-(const LaurentPoly& x) {
        LaurentPoly r;
        for (const auto& [e, c] : x.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
        LaurentPoly r;
        for (const auto& [ex, cx] : x.terms_)
            for (const auto& [ey, cy] : y.terms_) r.add_term(detail::checked_add(ex, ey), cx * cy);
        return r;
    }

    friend bool operator==(const LaurentPoly& x, const LaurentPoly& y) { return x.terms_ == y.terms_; }
    friend bool operator!=(const LaurentPoly& x, const LaurentPoly& y) { return !(x == y); }

private:
    TermMap terms_;
};

inline LaurentPoly add(const LaurentPoly& x, const LaurentPoly& y) { return x + y; }
inline LaurentPoly mul(const LaurentPoly& x, const LaurentPoly& y) { return x * y; }
inline LaurentPoly monomial(const BigInt& coeff, int exp) { return LaurentPoly::monomial(coeff, exp); }

/// Value of a trivial unoriented circle, -A^2 - A^-2.
inline LaurentPoly delta() {
    LaurentPoly d;
    d.add_term(-2, -1);
    d.add_term(2, -1);
    return d;
}

// ---------------------------------------------------------------------------
// Text form. Terms in ascending exponent order: "A^-6 + A^-2 + A^2 + A^6",
// "-A^2 - A^-2", "3A^-1 + 2".

namespace detail {

inline void write_monomial_body(std::ostream& os, const BigInt& magnitude, int exp) {
    if (exp == 0) {
        os << magnitude;
        return;
    }
    if (magnitude != 1) os << magnitude;
    os << 'A';
    if (exp != 1) os << '^' << exp;
}

}  // namespace detail

inline std::string format(const LaurentPoly& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : x.terms()) {
        const bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        detail::write_monomial_body(os, negative ? BigInt(-c) : c, e);
        first = false;
    }
    return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& x) { return os << format(x); }

namespace detail {

/// Cursor over a text buffer that skips whitespace between tokens.
class Scanner {
public:
    explicit Scanner(std::string_view text, std::size_t base = 0) : text_(text), base_(base) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    /// Peek without skipping whitespace.
    char peek_raw() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    BigInt read_unsigned() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    long long read_int() {
        bool neg = false;
        if (accept('-'))
            neg = true;
        else
            accept('+');
        const std::size_t at = position();
        BigInt v = read_unsigned();
        if (neg) v = -v;
        if (v > BigInt(std::numeric_limits<int>::max()) || v < BigInt(std::numeric_limits<int>::min()))
            throw ParseError("integer out of range", at);
        return static_cast<long long>(v);
    }

    std::size_t position() const { return base_ + pos_; }
    std::size_t offset() const { return pos_; }
    void seek(std::size_t p) { pos_ = p; }
    std::string_view text() const { return text_; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, position()); }

private:
    std::string_view text_;
    std::size_t base_;
    std::size_t pos_ = 0;
};

/// One unsigned monomial body: digits, "A", "A^e", "2A^e", "2*A^e".
/// Returns false without consuming anything if the cursor is not at one.
inline bool parse_monomial_body(Scanner& s, BigInt& coeff, int& exp) {
    bool have_coeff = false;
    coeff = 1;
    exp = 0;
    if (s.peek_digit()) {
        coeff = s.read_unsigned();
        have_coeff = true;
        if (s.accept('*') && s.peek() != 'A') s.fail("expected 'A' after '*'");
    }
    if (s.accept('A')) {
        exp = 1;
        if (s.accept('^')) {
            char c = s.peek();
            if (!(c == '-' || c == '+' || std::isdigit(static_cast<unsigned char>(c)))) s.fail("expected exponent");
            exp = static_cast<int>(s.read_int());
        }
        return true;
    }
    return have_coeff;
}

/// Sum of signed monomials, stopping at the first character that cannot
/// continue the sum.
inline LaurentPoly parse_laurent_sum(Scanner& s) {
    LaurentPoly result;
    bool first = true;
    for (;;) {
        const std::size_t mark = s.offset();
        bool negative = false;
        bool have_sign = false;
        if (s.accept('-')) {
            negative = true;
            have_sign = true;
        } else if (s.accept('+')) {
            have_sign = true;
        }
        if (!first && !have_sign) {
            s.seek(mark);
            break;
        }
        BigInt c;
        int e;
        if (!parse_monomial_body(s, c, e)) {
            if (first && !have_sign) s.fail("expected a term");
            s.fail("expected a term after sign");
        }
        result.add_term(e, negative ? BigInt(-c) : c);
        first = false;
    }
    return result;
}

}  // namespace detail

/// Parses the grammar `term (('+'|'-') term)*`, term = `[sign] [coeff] ["A" ["^" exponent]]`.
inline LaurentPoly parse_laurent(std::string_view text) {
    detail::Scanner s(text);
    if (s.at_end()) throw ParseError("empty polynomial", 0);
    LaurentPoly p = detail::parse_laurent_sum(s);
    if (!s.at_end()) s.fail("unexpected character");
    return p;
}

}  // namespace skein
