#pragma once

#include <random>
#include <vector>

#include "qcol/census.hpp"
#include "qcol/colmatrix.hpp"
#include "qcol/laurent.hpp"

namespace qcol::test {

#ifndef QCOL_TEST_DATA_DIR
#error "QCOL_TEST_DATA_DIR must be defined by the build"
#endif

inline std::filesystem::path data_dir() { return QCOL_TEST_DATA_DIR; }

inline const Census& census() {
    static const Census c = Census::load(data_dir());
    return c;
}

inline LaurentPoly P(const char* text) { return LaurentPoly::parse(text); }

/// all valid quandles with 2 <= n <= n_max
inline std::vector<QuandleSpec> quandles_up_to(long long n_max) {
    std::vector<QuandleSpec> out;
    for (long long n = 2; n <= n_max; ++n)
        for (long long m = 1; m < n; ++m)
            if (std::gcd(m, n) == 1) out.emplace_back(n, m);
    return out;
}

/// random Laurent polynomial, degree window and coefficient bound chosen to
/// exercise carries without blowing up test time
inline LaurentPoly random_poly(std::mt19937_64& rng, int max_abs_exp = 4,
                               long long max_abs_coeff = 50, int max_terms = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<long long> coeff(-max_abs_coeff, max_abs_coeff);
    LaurentPoly p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) p.add_term(coeff(rng), exp(rng));
    return p;
}

/// random square matrix satisfying row-sum-zero (final column closes each row)
inline ColouringMatrix random_row_sum_zero_matrix(std::mt19937_64& rng, int n) {
    ColouringMatrix a(n);
    for (int i = 0; i < n; ++i) {
        LaurentPoly sum;
        for (int j = 0; j + 1 < n; ++j) {
            a.at(i, j) = random_poly(rng, 2, 6, 3);
            sum += a.at(i, j);
        }
        a.at(i, n - 1) = -sum;
    }
    return a;
}

/// enumerate solutions of the evaluated system (tiny sizes only)
inline long long solution_count_by_enumeration(const EvaluatedMatrix& e) {
    const long long n = e.n;
    long long total = 1;
    for (int i = 0; i < e.size; ++i) total *= n;
    long long count = 0;
    std::vector<long long> x(e.size, 0);
    for (long long idx = 0; idx < total; ++idx) {
        long long t = idx;
        for (int i = 0; i < e.size; ++i) {
            x[i] = t % n;
            t /= n;
        }
        bool ok = true;
        for (int i = 0; i < e.size && ok; ++i) {
            long long acc = 0;
            for (int j = 0; j < e.size; ++j) acc = (acc + e.at(i, j) * x[j]) % n;
            ok = acc == 0;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace qcol::test
