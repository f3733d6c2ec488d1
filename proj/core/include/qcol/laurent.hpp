#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace qcol {

using Int = boost::multiprecision::cpp_int;

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Univariate Laurent polynomial over the integers, written in the variable m.
/// Canonical representation: a map from exponent to nonzero coefficient; the
/// zero polynomial is the empty map, and equality is map equality.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long long constant);
    LaurentPoly(const Int& constant);

    /// coeff * m^exp
    static LaurentPoly term(Int coeff, int exp);
    /// the variable m
    static LaurentPoly var() { return term(1, 1); }

    bool is_zero() const { return terms_.empty(); }
    /// true iff this is +-m^k
    bool is_unit() const;
    bool is_one() const;

    int min_exp() const;  // throws on zero
    int max_exp() const;  // throws on zero
    /// max_exp - min_exp, or -1 for the zero polynomial
    int degree_span() const { return is_zero() ? -1 : max_exp() - min_exp(); }

    Int coeff(int exp) const;
    const std::map<int, Int>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

    /// multiply by sign * m^shift (sign must be +-1)
    LaurentPoly unit_scaled(int shift, int sign = 1) const;

    /// gcd of all coefficients (0 for the zero polynomial)
    Int content() const;

    /// exact quotient, or false if the divisor does not divide exactly
    bool divide_exact(const LaurentPoly& divisor, LaurentPoly& quotient) const;

    /// Text form, e.g. "1 - 3*m + m^2" or "m^-1". Parsing accepts the same
    /// grammar with arbitrary whitespace; exponents are limited to [-64, 64].
    static LaurentPoly parse(std::string_view text);
    std::string str() const;

    void add_term(const Int& coeff, int exp);

  private:
    std::map<int, Int> terms_;
};

/// The linear Alexander quandle Z_n[t,t^-1]/(t-m): modulus n >= 2,
/// multiplier 1 <= m < n with gcd(m,n) = 1, and m_inv the inverse of m mod n.
struct QuandleSpec {
    long long n;
    long long m;
    long long m_inv;

    QuandleSpec(long long modulus, long long multiplier);
};

/// Substitute m for the variable (m_inv for negative powers) and reduce into [0, n).
long long eval_mod(const LaurentPoly& p, const QuandleSpec& q);

/// gcd convention used by all counting formulas: the value is reduced into
/// [0, n) first and gcd(0, n) = n.
long long gcd_mod(const Int& value, long long n);
long long gcd_mod(const LaurentPoly& p, const QuandleSpec& q);

/// The unique +-m^k multiple with minimum exponent 0 and positive constant
/// term. Throws std::domain_error for the zero polynomial.
LaurentPoly normalize_alexander(const LaurentPoly& p);

/// true iff p = +-m^k * q (two zeros count as equal)
bool unit_equal(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace qcol
