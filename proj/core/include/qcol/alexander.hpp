#pragma once

#include <optional>
#include <vector>

#include "qcol/colmatrix.hpp"
#include "qcol/laurent.hpp"
#include "qcol/reduce.hpp"

namespace qcol {

/// Exact determinant of a square grid of Laurent polynomials. Rows are
/// unit-scaled to clear negative exponents (tracked and undone), then
/// fraction-free Bareiss elimination over integer polynomials; plain cofactor
/// expansion for sizes <= 5. The 0x0 determinant is 1.
LaurentPoly laurent_det(std::vector<std::vector<LaurentPoly>> m);

/// Alexander polynomial in its normal form (minimum exponent 0, positive
/// constant term).
struct AlexanderPolynomial {
    LaurentPoly poly;

    friend bool operator==(const AlexanderPolynomial&, const AlexanderPolynomial&) = default;
};

/// Determinant of the (N-1)x(N-1) minor (final row and column removed),
/// normalized. Throws std::domain_error when the determinant vanishes.
AlexanderPolynomial alexander_from_matrix(const ColouringMatrix& a);

/// TypeI -> alpha; TypeII -> alpha1*alpha2; GeneralTriangular -> product of
/// the first N-1 diagonal entries; all normalized. Throws
/// std::invalid_argument for other classifications.
AlexanderPolynomial alexander_from_triangular(const ReducedForm& r);

struct Factorization {
    LaurentPoly left;
    LaurentPoly right;
};

/// A nontrivial factorization over the integers (integer content counts) of
/// the normalized polynomial, or nullopt when none exists. Kronecker's
/// method; degree above 12 is unsupported (throws std::domain_error), as is
/// the zero polynomial.
std::optional<Factorization> proper_factorization(const LaurentPoly& p);

inline bool is_properly_factorizable(const LaurentPoly& p) {
    return proper_factorization(p).has_value();
}

}  // namespace qcol
