#include "qcol/laurent.hpp"

#include <boost/multiprecision/integer.hpp>
#include <cctype>
#include <numeric>
#include <sstream>

namespace qcol {

LaurentPoly::LaurentPoly(long long constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly::LaurentPoly(const Int& constant) {
    if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::term(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_[exp] = std::move(coeff);
    return p;
}

bool LaurentPoly::is_unit() const {
    if (terms_.size() != 1) return false;
    const Int& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

void LaurentPoly::add_term(const Int& coeff, int exp) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(c, e);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(-c, e);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly r;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) r.add_term(c1 * c2, e1 + e2);
    return r;
}

LaurentPoly LaurentPoly::unit_scaled(int shift, int sign) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + shift] = sign < 0 ? Int(-c) : c;
    return r;
}

Int LaurentPoly::content() const {
    Int g = 0;
    for (const auto& [e, c] : terms_) g = boost::multiprecision::gcd(g, c);
    return g;
}

bool LaurentPoly::divide_exact(const LaurentPoly& divisor, LaurentPoly& quotient) const {
    if (divisor.is_zero()) return false;
    if (is_zero()) {
        quotient = LaurentPoly();
        return true;
    }
    LaurentPoly rem = *this;
    LaurentPoly quot;
    const int dlead = divisor.max_exp();
    const Int& dc = divisor.terms_.rbegin()->second;
    // if the division is exact, every quotient exponent is >= this bound
    const int qmin = min_exp() - divisor.min_exp();
    while (!rem.is_zero()) {
        int rlead = rem.max_exp();
        Int rc = rem.terms_.rbegin()->second;
        if (rc % dc != 0) return false;
        if (rlead - dlead < qmin) return false;
        LaurentPoly t = LaurentPoly::term(rc / dc, rlead - dlead);
        quot += t;
        rem -= t * divisor;
    }
    quotient = std::move(quot);
    return true;
}

namespace {

constexpr int kMaxParseExp = 64;

void skip_ws(std::string_view s, size_t& i) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    LaurentPoly result;
    size_t i = 0;
    skip_ws(text, i);
    if (i == text.size()) throw parse_error("empty polynomial");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws(text, i);
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws(text, i);
        } else if (!first) {
            throw parse_error("expected '+' or '-' between terms at position " +
                              std::to_string(i));
        }
        first = false;
        // coefficient digits (optional when the m part is present)
        bool have_digits = false;
        Int coeff = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = coeff * 10 + (text[i] - '0');
            have_digits = true;
            ++i;
        }
        skip_ws(text, i);
        if (i < text.size() && text[i] == '*') {
            if (!have_digits) throw parse_error("'*' without coefficient at position " +
                                                std::to_string(i));
            ++i;
            skip_ws(text, i);
            if (i >= text.size() || text[i] != 'm')
                throw parse_error("expected 'm' after '*' at position " + std::to_string(i));
        }
        int exp = 0;
        if (i < text.size() && text[i] == 'm') {
            ++i;
            exp = 1;
            skip_ws(text, i);
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws(text, i);
                bool neg = false;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
                    neg = text[i] == '-';
                    ++i;
                }
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw parse_error("expected exponent digits at position " +
                                      std::to_string(i));
                long long e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + (text[i] - '0');
                    if (e > kMaxParseExp)
                        throw parse_error("exponent out of range [-64, 64]");
                    ++i;
                }
                exp = static_cast<int>(neg ? -e : e);
            }
            if (!have_digits) coeff = 1;
        } else if (!have_digits) {
            throw parse_error("expected term at position " + std::to_string(i));
        }
        result.add_term(sign < 0 ? Int(-coeff) : coeff, exp);
        skip_ws(text, i);
    }
    return result;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << a.str();
        } else {
            if (a != 1) out << a.str() << "*";
            out << "m";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

QuandleSpec::QuandleSpec(long long modulus, long long multiplier)
    : n(modulus), m(multiplier) {
    if (n < 2) throw std::invalid_argument("quandle modulus must be >= 2");
    if (m < 1 || m >= n)
        throw std::invalid_argument("quandle multiplier must satisfy 1 <= m < n");
    if (std::gcd(m, n) != 1)
        throw std::invalid_argument("quandle requires gcd(m, n) = 1");
    // extended Euclid for the inverse
    long long r0 = n, r1 = m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    m_inv = ((s0 % n) + n) % n;
}

long long eval_mod(const LaurentPoly& p, const QuandleSpec& q) {
    const Int n = q.n;
    Int acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Int base = e >= 0 ? q.m : q.m_inv;
        Int pw = 1;
        for (int k = 0; k < std::abs(e); ++k) pw = pw * base % n;
        acc = (acc + c % n * pw) % n;
    }
    if (acc < 0) acc += n;
    return acc.convert_to<long long>();
}

long long gcd_mod(const Int& value, long long n) {
    Int v = value % n;
    if (v < 0) v += n;
    if (v == 0) return n;
    return boost::multiprecision::gcd(v, Int(n)).convert_to<long long>();
}

long long gcd_mod(const LaurentPoly& p, const QuandleSpec& q) {
    return gcd_mod(Int(eval_mod(p, q)), q.n);
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
    if (p.is_zero()) throw std::domain_error("zero polynomial has no Alexander normal form");
    int lo = p.min_exp();
    int sign = p.coeff(lo) > 0 ? 1 : -1;
    return p.unit_scaled(-lo, sign);
}

bool unit_equal(const LaurentPoly& p, const LaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    return normalize_alexander(p) == normalize_alexander(q);
}

}  // namespace qcol
