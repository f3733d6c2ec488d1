#pragma once

#include <array>
#include <string>
#include <vector>

#include "qcol/colmatrix.hpp"
#include "qcol/reduce.hpp"

namespace qcol {

enum class CountMethod {
    formula_one,
    formula_two,
    general_triangular,
    block_brute,
    snf_oracle,
    full_brute,
};

std::string to_string(CountMethod m);

/// Number of colourings |{X : AX = 0 mod n}| together with how it was
/// obtained. Always divisible by n, and >= n (the constant colourings).
struct CountResult {
    Int count;
    CountMethod method;
    QuandleSpec quandle;
};

inline constexpr long long kBruteCap = 10'000'000;

/// n * gcd(Alex(m), n)
CountResult count_type_one(const LaurentPoly& alex, const QuandleSpec& q);

/// n * d2 * gcd(beta1(m) * n/d2, gcd(alpha1(m), n)) with d2 = gcd(alpha2(m), n)
CountResult count_type_two(const LaurentPoly& alpha1, const LaurentPoly& beta1,
                           const LaurentPoly& alpha2, const QuandleSpec& q);

/// Upward substitution through a triangular form, solving each diagonal
/// congruence with the extended Euclidean algorithm and branching over its
/// gcd(a_ii, n) solutions.
CountResult count_general_triangular(const ReducedForm& r, const QuandleSpec& q);

/// Brute force over the last three unknowns of a simplified block form
/// (n^3 triples checked against the two relevant rows; every valid triple
/// extends uniquely through the unit-diagonal rows above).
CountResult count_block_brute(const ReducedForm& r, const QuandleSpec& q,
                              long long cap = kBruteCap);

/// Same, from a bare 2x2 relevant block; the third column entries are
/// recovered from the row-sum-zero invariant.
CountResult count_block_brute(const std::array<std::array<LaurentPoly, 2>, 2>& block,
                              const QuandleSpec& q, long long cap = kBruteCap);

/// Independent counting oracle: evaluate to integers in [0, n), compute the
/// Smith normal form over the integers, return the product of gcd(d_i, n)
/// over all invariant factors (gcd(0, n) = n).
CountResult count_snf_oracle(const ColouringMatrix& a, const QuandleSpec& q);

/// Ground-truth oracle enumerating all n^N assignments. Throws
/// std::invalid_argument when n^N exceeds the cap.
CountResult count_full_brute(const ColouringMatrix& a, const QuandleSpec& q,
                             long long cap = kBruteCap);

/// Enumeration core on an evaluated matrix; accepts any modulus >= 1.
Int brute_force_count(const EvaluatedMatrix& e, long long cap = kBruteCap);

/// Smith normal form diagonal (with the divisibility chain) of an integer
/// matrix; pivots chosen by smallest nonzero absolute value on every pass.
std::vector<Int> smith_diagonal(std::vector<std::vector<Int>> m);

/// Dispatch on classification: FormulaI / FormulaII / GeneralTriangular /
/// BlockBrute, falling back to the SNF oracle.
CountResult count_auto(const ReducedForm& r, const QuandleSpec& q);
CountResult count_auto(const ColouringMatrix& a, const QuandleSpec& q);

}  // namespace qcol
