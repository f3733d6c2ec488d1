#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qcol/colmatrix.hpp"

namespace qcol {

enum class ScaleUnit { m, m_inv, minus_one };

/// The restricted operation set: row scaling by m, m^-1 or -1; adding one row
/// to another; row swaps; column swaps. No other operation is representable.
/// Indices are 0-based in code and 1-based in the text trace.
struct ElementaryOp {
    enum class Kind { scale_row, add_row, swap_rows, swap_cols };

    Kind kind;
    int i = 0;  // scale: row; add: source row; swaps: first index
    int j = 0;  // add: destination row; swaps: second index
    ScaleUnit unit = ScaleUnit::minus_one;

    static ElementaryOp scale(int row, ScaleUnit u) { return {Kind::scale_row, row, row, u}; }
    static ElementaryOp add(int src, int dst) { return {Kind::add_row, src, dst, {}}; }
    static ElementaryOp swap_rows(int a, int b) { return {Kind::swap_rows, a, b, {}}; }
    static ElementaryOp swap_cols(int a, int b) { return {Kind::swap_cols, a, b, {}}; }

    friend bool operator==(const ElementaryOp&, const ElementaryOp&) = default;
};

/// Applies one operation, returning the transformed matrix. Row-sum-zero is
/// preserved by every kind; column_labels is updated on column swaps.
/// Throws std::out_of_range on bad indices.
ColouringMatrix apply_op(const ColouringMatrix& a, const ElementaryOp& op);

ColouringMatrix replay(const ColouringMatrix& original, const std::vector<ElementaryOp>& ops);

enum class Classification { type_one, type_two, general_triangular, simplified_block, unreduced };

std::string to_string(Classification c);

/// Strongest structural label that holds for the matrix as-is:
///   type_one:          triangular, zero final row, unit diagonal except
///                      (N-1,N-1) = alpha with (N-1,N) = -alpha   [1-based]
///   type_two:          triangular, zero final row, unit diagonal except the
///                      two "interesting rows" alpha1/beta1 and alpha2
///   general_triangular: triangular with zero final row
///   simplified_block:  unit diagonal with zeros below outside the final
///                      three rows; zero final row (the 2x2 relevant block
///                      sits in the penultimate two rows and columns)
///   unreduced:         none of the above
Classification classify(const ColouringMatrix& a);

struct ReducedForm {
    Classification classification = Classification::unreduced;
    ColouringMatrix matrix;
    std::vector<ElementaryOp> op_log;
    bool budget_exhausted = false;

    // relevant entries, populated according to classification
    LaurentPoly alpha;                                     // type I
    LaurentPoly alpha1, beta1, alpha2;                     // type II
    std::vector<LaurentPoly> diagonal;                     // general triangular, first N-1
    std::array<std::array<LaurentPoly, 2>, 2> block;       // simplified block
    std::array<std::array<LaurentPoly, 3>, 2> block_rows;  // its two full relevant rows
};

inline constexpr int kDefaultReduceBudget = 20000;

/// Triangularize under the restricted operations and classify the result.
/// Deterministic for a fixed input. Exceeding the elementary-op budget yields
/// classification unreduced with the partial matrix (log still replays).
ReducedForm reduce_matrix(const ColouringMatrix& a, int budget = kDefaultReduceBudget);

/// Classify a matrix as-is and extract its relevant entries without running
/// the reduction (used for census-table forms that are already shaped).
ReducedForm as_reduced_form(const ColouringMatrix& a);

/// Line-oriented audit trace: "scale r1 -1", "add r2 r1", "swapr 1 2",
/// "swapc 3 4" (1-based).
std::string serialize_op_log(const std::vector<ElementaryOp>& ops);
std::vector<ElementaryOp> parse_op_log(std::string_view text);

}  // namespace qcol
