#include "qcol/count.hpp"

#include <numeric>

namespace qcol {

std::string to_string(CountMethod m) {
    switch (m) {
        case CountMethod::formula_one: return "FormulaI";
        case CountMethod::formula_two: return "FormulaII";
        case CountMethod::general_triangular: return "GeneralTriangular";
        case CountMethod::block_brute: return "BlockBrute";
        case CountMethod::snf_oracle: return "SnfOracle";
        case CountMethod::full_brute: return "FullBrute";
    }
    return "?";
}

CountResult count_type_one(const LaurentPoly& alex, const QuandleSpec& q) {
    return {Int(q.n) * gcd_mod(alex, q), CountMethod::formula_one, q};
}

CountResult count_type_two(const LaurentPoly& alpha1, const LaurentPoly& beta1,
                           const LaurentPoly& alpha2, const QuandleSpec& q) {
    const long long d2 = gcd_mod(alpha2, q);
    const long long d1 = gcd_mod(alpha1, q);
    const Int b1 = eval_mod(beta1, q);
    const long long d3 = gcd_mod(b1 * (q.n / d2), d1);
    return {Int(q.n) * d2 * d3, CountMethod::formula_two, q};
}

namespace {

// solutions of a*x = rhs (mod n) in [0, n): none unless gcd(a,n) | rhs,
// otherwise gcd(a,n) of them, x0 + t*(n/d)
struct Congruence {
    long long solutions = 0;
    long long x0 = 0;
    long long step = 0;
};

long long inverse_mod(long long a, long long n) {
    if (n == 1) return 0;
    long long r0 = n, r1 = ((a % n) + n) % n, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long long quo = r0 / r1;
        r0 -= quo * r1;
        std::swap(r0, r1);
        s0 -= quo * s1;
        std::swap(s0, s1);
    }
    return ((s0 % n) + n) % n;
}

Congruence solve_congruence(long long a, long long rhs, long long n) {
    a = ((a % n) + n) % n;
    rhs = ((rhs % n) + n) % n;
    const long long d = a == 0 ? n : std::gcd(a, n);
    if (rhs % d != 0) return {};
    const long long n2 = n / d;
    // 128-bit product: both factors can approach n
    const long long x0 =
        n2 == 1 ? 0
                : static_cast<long long>(static_cast<__int128>((rhs / d) % n2) *
                                         inverse_mod(a / d, n2) % n2);
    return {d, x0, n2};
}

Int count_rows_upward(const EvaluatedMatrix& ev, int row, std::vector<long long>& y) {
    if (row < 0) return 1;
    const long long n = ev.n;
    long long rhs = 0;
    for (int j = row + 1; j + 1 < ev.size; ++j)
        rhs = static_cast<long long>(
            (static_cast<__int128>(ev.at(row, j)) * y[j] + rhs) % n);
    rhs = (n - rhs) % n;
    const Congruence c = solve_congruence(ev.at(row, row), rhs, n);
    Int total = 0;
    for (long long t = 0; t < c.solutions; ++t) {
        y[row] = c.x0 + t * c.step;
        total += count_rows_upward(ev, row - 1, y);
    }
    return total;
}

}  // namespace

CountResult count_general_triangular(const ReducedForm& r, const QuandleSpec& q) {
    if (r.classification != Classification::type_one &&
        r.classification != Classification::type_two &&
        r.classification != Classification::general_triangular)
        throw std::invalid_argument("count_general_triangular requires a triangular form");
    const EvaluatedMatrix ev = evaluate_matrix(r.matrix, q);
    // substitute Y_j = X_j - X_N: the final column drops out (row sums are
    // zero) and X_N ranges freely over n values
    std::vector<long long> y(std::max(0, ev.size - 1), 0);
    const Int branches = count_rows_upward(ev, ev.size - 2, y);
    return {Int(q.n) * branches, CountMethod::general_triangular, q};
}

namespace {

Int block_rows_count(const std::array<std::array<long long, 3>, 2>& rows,
                     const QuandleSpec& q, long long cap) {
    const long long n = q.n;
    if (n > cap / n / n)
        throw std::invalid_argument("block brute force requires n^3 <= cap");
    Int count = 0;
    for (long long x = 0; x < n; ++x)
        for (long long y = 0; y < n; ++y) {
            const long long p0 = (rows[0][0] * x + rows[0][1] * y) % n;
            const long long p1 = (rows[1][0] * x + rows[1][1] * y) % n;
            for (long long z = 0; z < n; ++z)
                if ((p0 + rows[0][2] * z) % n == 0 && (p1 + rows[1][2] * z) % n == 0) ++count;
        }
    return count;
}

}  // namespace

CountResult count_block_brute(const ReducedForm& r, const QuandleSpec& q, long long cap) {
    if (r.classification != Classification::simplified_block)
        throw std::invalid_argument("count_block_brute requires a simplified block form");
    std::array<std::array<long long, 3>, 2> rows{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) rows[i][j] = eval_mod(r.block_rows[i][j], q);
    return {block_rows_count(rows, q, cap), CountMethod::block_brute, q};
}

CountResult count_block_brute(const std::array<std::array<LaurentPoly, 2>, 2>& block,
                              const QuandleSpec& q, long long cap) {
    std::array<std::array<long long, 3>, 2> rows{};
    for (int i = 0; i < 2; ++i) {
        rows[i][0] = eval_mod(block[i][0], q);
        rows[i][1] = eval_mod(block[i][1], q);
        rows[i][2] = (2 * q.n - rows[i][0] - rows[i][1]) % q.n;  // row sums to zero
    }
    return {block_rows_count(rows, q, cap), CountMethod::block_brute, q};
}

std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
    const int rank_bound = std::min(rows, cols);
    using boost::multiprecision::abs;
    for (int r = 0; r < rank_bound; ++r) {
        for (;;) {
            int bi = -1, bj = -1;
            for (int i = r; i < rows; ++i)
                for (int j = r; j < cols; ++j)
                    if (m[i][j] != 0 && (bi < 0 || abs(m[i][j]) < abs(m[bi][bj]))) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) break;
            std::swap(m[r], m[bi]);
            for (auto& row : m) std::swap(row[r], row[bj]);
            const Int p = m[r][r];
            bool dirty = false;
            for (int i = r + 1; i < rows; ++i) {
                if (m[i][r] == 0) continue;
                const Int quo = m[i][r] / p;
                for (int j = r; j < cols; ++j) m[i][j] -= quo * m[r][j];
                if (m[i][r] != 0) dirty = true;
            }
            for (int j = r + 1; j < cols; ++j) {
                if (m[r][j] == 0) continue;
                const Int quo = m[r][j] / p;
                for (int i = r; i < rows; ++i) m[i][j] -= quo * m[i][r];
                if (m[r][j] != 0) dirty = true;
            }
            if (!dirty) break;
        }
    }
    std::vector<Int> d(rank_bound);
    for (int i = 0; i < rank_bound; ++i) d[i] = m[i][i];
    // divisibility chain d_i | d_{i+1}
    for (int i = 0; i < rank_bound; ++i)
        for (int j = i + 1; j < rank_bound; ++j) {
            if (d[i] == 0 && d[j] != 0) std::swap(d[i], d[j]);
            if (d[i] == 0 || d[j] == 0) continue;
            const Int g = boost::multiprecision::gcd(d[i], d[j]);
            d[j] = d[i] / g * d[j];
            d[i] = g;
        }
    for (Int& v : d)
        if (v < 0) v = -v;
    return d;
}

CountResult count_snf_oracle(const ColouringMatrix& a, const QuandleSpec& q) {
    const EvaluatedMatrix ev = evaluate_matrix(a, q);
    std::vector<std::vector<Int>> m(ev.size, std::vector<Int>(ev.size));
    for (int i = 0; i < ev.size; ++i)
        for (int j = 0; j < ev.size; ++j) m[i][j] = ev.at(i, j);
    Int count = 1;
    for (const Int& d : smith_diagonal(std::move(m))) count *= gcd_mod(d, q.n);
    return {count, CountMethod::snf_oracle, q};
}

Int brute_force_count(const EvaluatedMatrix& e, long long cap) {
    const long long n = e.n;
    const int size = e.size;
    Int space = 1;
    for (int i = 0; i < size; ++i) space *= n;
    if (space > cap)
        throw std::invalid_argument("brute force space " + space.str() + " exceeds cap " +
                                    std::to_string(cap));
    // rows become checkable once their highest referenced column is assigned
    std::vector<std::vector<int>> due(size);
    for (int i = 0; i < size; ++i) {
        int last = -1;
        for (int j = 0; j < size; ++j)
            if (e.at(i, j) != 0) last = j;
        due[last < 0 ? 0 : last].push_back(i);
    }
    std::vector<long long> x(size, 0);
    Int count = 0;
    auto rec = [&](auto&& self, int col) -> void {
        if (col == size) {
            ++count;
            return;
        }
        for (long long v = 0; v < n; ++v) {
            x[col] = v;
            bool ok = true;
            for (int row : due[col]) {
                long long acc = 0;
                for (int j = 0; j <= col; ++j) acc = (acc + e.at(row, j) * x[j]) % n;
                if (acc % n != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) self(self, col + 1);
        }
    };
    rec(rec, 0);
    return count;
}

CountResult count_full_brute(const ColouringMatrix& a, const QuandleSpec& q, long long cap) {
    return {brute_force_count(evaluate_matrix(a, q), cap), CountMethod::full_brute, q};
}

CountResult count_auto(const ReducedForm& r, const QuandleSpec& q) {
    switch (r.classification) {
        case Classification::type_one:
            return count_type_one(r.alpha, q);
        case Classification::type_two:
            return count_type_two(r.alpha1, r.beta1, r.alpha2, q);
        case Classification::general_triangular:
            return count_general_triangular(r, q);
        case Classification::simplified_block:
            if (q.n <= 215)  // n^3 within the brute cap
                return count_block_brute(r, q);
            return count_snf_oracle(r.matrix, q);
        case Classification::unreduced:
            return count_snf_oracle(r.matrix, q);
    }
    throw std::logic_error("unhandled classification");
}

CountResult count_auto(const ColouringMatrix& a, const QuandleSpec& q) {
    return count_snf_oracle(a, q);
}

}  // namespace qcol
