#include "qcol/distinguish.hpp"

#include <algorithm>
#include <numeric>

#include "qcol/alexander.hpp"
#include "qcol/parallel.hpp"

namespace qcol {

Int eval_int(const LaurentPoly& p, long long x) {
    if (p.is_zero()) return 0;
    if (p.min_exp() < 0)
        throw std::invalid_argument("eval_int requires non-negative exponents");
    Int acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Int pw = 1;
        for (int k = 0; k < e; ++k) pw *= x;
        acc += c * pw;
    }
    return acc;
}

long long next_prime_above(long long x) {
    auto is_prime = [](long long v) {
        if (v < 2) return false;
        for (long long d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    };
    long long p = x + 1;
    while (!is_prime(p)) ++p;
    return p;
}

CountableKnot CountableKnot::from_census(const CensusEntry& e) {
    return {e.name, as_reduced_form(canonical_matrix(e))};
}

CountableKnot CountableKnot::from_reduced(std::string name, ReducedForm form) {
    return {std::move(name), std::move(form)};
}

bool CountableKnot::triangular() const {
    switch (form.classification) {
        case Classification::type_one:
        case Classification::type_two:
        case Classification::general_triangular:
            return true;
        default:
            return false;
    }
}

namespace {

/// normalized non-unit diagonal entries of a triangular form
std::vector<LaurentPoly> interesting_diagonal(const ReducedForm& r) {
    std::vector<LaurentPoly> out;
    auto push = [&out](const LaurentPoly& p) {
        if (!p.is_unit()) out.push_back(normalize_alexander(p));
    };
    switch (r.classification) {
        case Classification::type_one:
            push(r.alpha);
            break;
        case Classification::type_two:
            push(r.alpha1);
            push(r.alpha2);
            break;
        case Classification::general_triangular:
            for (const LaurentPoly& d : r.diagonal) push(d);
            break;
        default:
            throw std::invalid_argument("triangular form required");
    }
    return out;
}

}  // namespace

DistinguishWitness find_distinguishing_quandle(const CountableKnot& k1, const CountableKnot& k2,
                                               DistinguishMode mode) {
    if (!k1.triangular() || !k2.triangular())
        throw std::invalid_argument("find_distinguishing_quandle requires triangular forms");
    const LaurentPoly alex1 = alexander_from_triangular(k1.form).poly;
    const LaurentPoly alex2 = alexander_from_triangular(k2.form).poly;
    if (unit_equal(alex1, alex2))
        throw std::invalid_argument(
            "Alexander polynomials are unit-equal; no witness is guaranteed - use "
            "grid_compare instead");

    std::vector<LaurentPoly> diag = interesting_diagonal(k1.form);
    for (LaurentPoly& p : interesting_diagonal(k2.form)) diag.push_back(std::move(p));

    long long m = 0;
    for (long long cand = 2; cand < 2'000'000; ++cand) {
        bool ok = boost::multiprecision::abs(eval_int(alex1, cand)) !=
                  boost::multiprecision::abs(eval_int(alex2, cand));
        for (const LaurentPoly& p : diag) {
            if (!ok) break;
            if (eval_int(p, cand) == 0) ok = false;
            else if (std::gcd(cand, p.coeff(0).convert_to<long long>()) != 1) ok = false;
        }
        if (ok) {
            m = cand;
            break;
        }
    }
    if (m == 0) throw std::runtime_error("no admissible multiplier found");

    const Int big_m =
        boost::multiprecision::abs(eval_int(alex1, m)) * boost::multiprecision::abs(eval_int(alex2, m));
    Int constructive_n = big_m > m ? big_m : big_m * next_prime_above(m);
    if (constructive_n > 1'000'000'000'000LL)
        throw std::overflow_error("constructive modulus exceeds supported range");
    const long long n_full = constructive_n.convert_to<long long>();

    auto witness_at = [&](long long n) -> std::optional<DistinguishWitness> {
        const QuandleSpec q(n, m);
        const Int c1 = k1.count(q);
        const Int c2 = k2.count(q);
        if (c1 == c2) return std::nullopt;
        if (k1.count_oracle(q) != c1 || k2.count_oracle(q) != c2)
            throw std::logic_error("formula and SNF oracle disagree in distinguisher");
        return DistinguishWitness{q, c1, c2, k1.name, k2.name};
    };

    if (mode == DistinguishMode::refined) {
        const long long scan_max = std::min<long long>(n_full - 1, 512);
        for (long long n = m + 1; n <= scan_max; ++n) {
            if (std::gcd(m, n) != 1) continue;
            if (auto w = witness_at(n)) return *w;
        }
    }
    if (auto w = witness_at(n_full)) return *w;
    throw std::logic_error("constructive quandle failed to distinguish (bug)");
}

std::vector<GridDifference> grid_compare(const CountableKnot& k1, const CountableKnot& k2,
                                         long long m_max, long long n_max) {
    if (n_max < 2) return {};
    // cells are independent; fan out per modulus and merge in order
    std::vector<std::vector<GridDifference>> per_n(n_max - 1);
    parallel_for(per_n.size(), [&](size_t idx) {
        const long long n = 2 + static_cast<long long>(idx);
        for (long long m = 1; m < std::min(m_max + 1, n); ++m) {
            if (std::gcd(m, n) != 1) continue;
            const QuandleSpec q(n, m);
            const Int c1 = k1.count(q);
            const Int c2 = k2.count(q);
            if (k1.count_oracle(q) != c1 || k2.count_oracle(q) != c2)
                throw std::logic_error("formula and SNF oracle disagree at m=" +
                                       std::to_string(m) + " n=" + std::to_string(n));
            if (c1 != c2) per_n[idx].push_back({m, n, c1, c2});
        }
    });
    std::vector<GridDifference> out;
    for (const auto& chunk : per_n) out.insert(out.end(), chunk.begin(), chunk.end());
    return out;
}

std::optional<NonTriangWitness> witness_nontriangularizable(const CountableKnot& block_knot,
                                                            const LaurentPoly& alex,
                                                            long long m_bound,
                                                            long long n_bound) {
    if (block_knot.form.classification != Classification::simplified_block)
        throw std::invalid_argument("witness_nontriangularizable requires a block form");
    if (is_properly_factorizable(alex))
        throw std::invalid_argument(
            "witness argument requires a non-properly-factorizable Alexander polynomial");
    for (long long n = 2; n <= n_bound; ++n) {
        for (long long m = std::min(m_bound, n - 1); m >= 1; --m) {
            if (std::gcd(m, n) != 1) continue;
            const QuandleSpec q(n, m);
            const Int prediction = Int(n) * gcd_mod(alex, q);
            const Int actual = count_auto(block_knot.form, q).count;
            if (actual != prediction)
                return NonTriangWitness{block_knot.name, q, actual, prediction};
        }
    }
    return std::nullopt;
}

}  // namespace qcol
