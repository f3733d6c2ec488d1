#include "qcol/alexander.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace qcol {

namespace {

using Rational = boost::multiprecision::cpp_rational;

LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& m) {
    const size_t n = m.size();
    if (n == 0) return LaurentPoly(1);
    if (n == 1) return m[0][0];
    LaurentPoly det;
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        if (!m[0][j].is_zero()) {
            std::vector<std::vector<LaurentPoly>> sub(n - 1);
            for (size_t i = 1; i < n; ++i) {
                sub[i - 1].reserve(n - 1);
                for (size_t k = 0; k < n; ++k)
                    if (k != j) sub[i - 1].push_back(m[i][k]);
            }
            LaurentPoly term = m[0][j] * cofactor_det(sub);
            det += sign > 0 ? term : -term;
        }
        sign = -sign;
    }
    return det;
}

}  // namespace

LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentPoly(1);

    // clear negative exponents row by row, remembering the unit factor
    int shift_total = 0;
    for (auto& row : m) {
        int lo = 0;
        for (const auto& p : row)
            if (!p.is_zero()) lo = std::min(lo, p.min_exp());
        if (lo < 0) {
            for (auto& p : row) p = p.unit_scaled(-lo);
            shift_total += -lo;
        }
    }

    LaurentPoly det;
    if (n <= 5) {
        det = cofactor_det(m);
    } else {
        int sign = 1;
        LaurentPoly prev(1);
        bool zero = false;
        for (int k = 0; k < n - 1 && !zero; ++k) {
            if (m[k][k].is_zero()) {
                int r = -1;
                for (int i = k + 1; i < n; ++i)
                    if (!m[i][k].is_zero()) {
                        r = i;
                        break;
                    }
                if (r < 0) {
                    zero = true;
                    break;
                }
                std::swap(m[k], m[r]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j) {
                    LaurentPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                    if (!num.divide_exact(prev, m[i][j]))
                        throw std::logic_error("Bareiss division was not exact");
                }
                m[i][k] = LaurentPoly();
            }
            prev = m[k][k];
        }
        det = zero ? LaurentPoly() : (sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1]);
    }
    if (det.is_zero() || shift_total == 0) return det;
    return det.unit_scaled(-shift_total);
}

AlexanderPolynomial alexander_from_matrix(const ColouringMatrix& a) {
    const int n = a.size();
    std::vector<std::vector<LaurentPoly>> minor(std::max(0, n - 1));
    for (int i = 0; i + 1 < n; ++i) {
        minor[i].reserve(n - 1);
        for (int j = 0; j + 1 < n; ++j) minor[i].push_back(a.at(i, j));
    }
    LaurentPoly det = laurent_det(std::move(minor));
    if (det.is_zero())
        throw std::domain_error("Alexander determinant vanishes (rank-deficient matrix)");
    return {normalize_alexander(det)};
}

AlexanderPolynomial alexander_from_triangular(const ReducedForm& r) {
    switch (r.classification) {
        case Classification::type_one:
            return {normalize_alexander(r.alpha)};
        case Classification::type_two:
            return {normalize_alexander(r.alpha1 * r.alpha2)};
        case Classification::general_triangular: {
            LaurentPoly prod(1);
            for (const LaurentPoly& d : r.diagonal) prod *= d;
            return {normalize_alexander(prod)};
        }
        default:
            throw std::invalid_argument("not a triangular reduced form: " +
                                        to_string(r.classification));
    }
}

namespace {

constexpr int kMaxFactorDegree = 12;
constexpr long long kMaxTuples = 2'000'000;

Int eval_at(const LaurentPoly& p, long long x) {
    // p has no negative exponents here
    Int acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Int pw = 1;
        for (int k = 0; k < e; ++k) pw *= x;
        acc += c * pw;
    }
    return acc;
}

std::vector<Int> positive_divisors(Int v) {
    if (v < 0) v = -v;
    std::vector<Int> ds;
    for (Int d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            ds.push_back(d);
            if (d * d != v) ds.push_back(v / d);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

/// Lagrange interpolation through (pts[i], vals[i]); returns false unless all
/// coefficients come out integral.
bool interpolate_integer(const std::vector<long long>& pts, const std::vector<Int>& vals,
                         LaurentPoly& out) {
    const size_t k = pts.size();
    std::vector<Rational> coeff(k, 0);
    for (size_t i = 0; i < k; ++i) {
        // basis polynomial for point i, times vals[i]
        std::vector<Rational> basis(k, 0);
        basis[0] = 1;
        size_t deg = 0;
        Rational denom = 1;
        for (size_t j = 0; j < k; ++j) {
            if (j == i) continue;
            // multiply basis by (x - pts[j])
            for (size_t d = deg + 2; d-- > 0;) {
                Rational hi = d > 0 ? basis[d - 1] : Rational(0);
                basis[d] = hi - Rational(pts[j]) * basis[d];
            }
            ++deg;
            denom *= Rational(pts[i]) - Rational(pts[j]);
        }
        const Rational scale = Rational(vals[i]) / denom;
        for (size_t d = 0; d <= deg; ++d) coeff[d] += basis[d] * scale;
    }
    LaurentPoly g;
    for (size_t d = 0; d < k; ++d) {
        if (boost::multiprecision::denominator(coeff[d]) != 1) return false;
        g.add_term(boost::multiprecision::numerator(coeff[d]), static_cast<int>(d));
    }
    out = std::move(g);
    return true;
}

}  // namespace

std::optional<Factorization> proper_factorization(const LaurentPoly& input) {
    if (input.is_zero())
        throw std::domain_error("factorizability is undefined for the zero polynomial");
    const LaurentPoly p = normalize_alexander(input);
    const int deg = p.max_exp();
    if (deg > kMaxFactorDegree)
        throw std::domain_error("factorizability decision supports degree <= 12");

    if (deg == 0) {
        const Int c = p.coeff(0);  // positive
        for (Int d = 2; d * d <= c; ++d)
            if (c % d == 0) return Factorization{LaurentPoly(d), LaurentPoly(c / d)};
        return std::nullopt;
    }

    const Int cont = p.content();
    if (cont > 1) {
        LaurentPoly primitive;
        if (!p.divide_exact(LaurentPoly(cont), primitive))
            throw std::logic_error("content division failed");
        return Factorization{LaurentPoly(cont), primitive};
    }

    // integer roots first: p(x) = 0 gives the factor (m - x)
    const std::vector<long long> point_pool = {0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5, 6, -6};
    for (long long x : point_pool) {
        if (eval_at(p, x) == 0) {
            LaurentPoly factor = LaurentPoly::term(1, 1) - LaurentPoly(x);
            LaurentPoly q;
            if (!p.divide_exact(factor, q))
                throw std::logic_error("root division failed");
            return Factorization{factor, q};
        }
    }

    long long tuples = 0;
    for (int cand = 1; cand <= deg / 2; ++cand) {
        const std::vector<long long> pts(point_pool.begin(), point_pool.begin() + cand + 1);
        std::vector<std::vector<Int>> choices(pts.size());
        for (size_t i = 0; i < pts.size(); ++i) {
            for (const Int& d : positive_divisors(eval_at(p, pts[i]))) {
                choices[i].push_back(d);
                choices[i].push_back(-d);
            }
        }
        std::vector<Int> vals(pts.size());
        std::optional<Factorization> found;
        auto enumerate = [&](auto&& self, size_t level) -> bool {
            if (level == pts.size()) {
                if (++tuples > kMaxTuples)
                    throw std::runtime_error("factorizability divisor search exceeded bound");
                LaurentPoly g;
                if (!interpolate_integer(pts, vals, g)) return false;
                if (g.is_zero() || g.max_exp() < 1) return false;
                LaurentPoly q;
                if (!p.divide_exact(g, q)) return false;
                found = Factorization{g, q};
                return true;
            }
            for (const Int& d : choices[level]) {
                vals[level] = d;
                if (self(self, level + 1)) return true;
            }
            return false;
        };
        if (enumerate(enumerate, 0)) return found;
    }
    return std::nullopt;
}

}  // namespace qcol
