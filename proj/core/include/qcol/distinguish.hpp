#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcol/census.hpp"
#include "qcol/count.hpp"
#include "qcol/reduce.hpp"

namespace qcol {

/// A knot in countable form: its reduced (or census-shaped) matrix plus name.
struct CountableKnot {
    std::string name;
    ReducedForm form;

    static CountableKnot from_census(const CensusEntry& e);
    static CountableKnot from_reduced(std::string name, ReducedForm form);

    bool triangular() const;
    Int count(const QuandleSpec& q) const { return count_auto(form, q).count; }
    Int count_oracle(const QuandleSpec& q) const {
        return count_snf_oracle(form.matrix, q).count;
    }
};

struct DistinguishWitness {
    QuandleSpec q;
    Int count1, count2;
    std::string knot1, knot2;
};

enum class DistinguishMode {
    /// keep the constructive multiplier m, but scan small moduli first and
    /// fall back to the constructive n
    refined,
    /// the pure construction: n is the product of the diagonal values
    constructive,
};

/// Constructive separation of two triangularizable knots with different
/// Alexander polynomials: the smallest m >= 2 avoiding integer roots of the
/// diagonal entries and of |Alex1| = |Alex2| and coprime to the diagonal
/// constant terms; n the (possibly refined) modulus built from
/// |Alex1(m)|*|Alex2(m)|. Throws std::invalid_argument when either form is
/// not triangular or the Alexander polynomials are unit-equal (use
/// grid_compare for those).
DistinguishWitness find_distinguishing_quandle(const CountableKnot& k1, const CountableKnot& k2,
                                               DistinguishMode mode = DistinguishMode::refined);

struct GridDifference {
    long long m, n;
    Int count1, count2;
};

/// Exhaustive sweep over 2 <= n <= n_max, 1 <= m < min(m_max+1, n) with
/// gcd(m,n) = 1, listing every quandle where the counts differ. Every count
/// is cross-checked against the SNF oracle; a method disagreement throws
/// std::logic_error (it indicates a bug, not mathematics).
std::vector<GridDifference> grid_compare(const CountableKnot& k1, const CountableKnot& k2,
                                         long long m_max, long long n_max);

struct NonTriangWitness {
    std::string knot;
    QuandleSpec q;
    Int actual_count;
    Int type_one_prediction;
};

/// Scan quandles (n ascending, m descending from n-1) for one where the true
/// block-brute count differs from the type I prediction n*gcd(Alex(m), n).
/// Precondition: alex is not properly factorizable. A nullopt result is
/// inconclusive, never a triangularizability proof.
std::optional<NonTriangWitness> witness_nontriangularizable(const CountableKnot& block_knot,
                                                            const LaurentPoly& alex,
                                                            long long m_bound,
                                                            long long n_bound);

/// Integer value of a polynomial with no negative exponents.
Int eval_int(const LaurentPoly& p, long long x);

long long next_prime_above(long long x);

}  // namespace qcol
