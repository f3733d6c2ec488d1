#pragma once

#include <vector>

#include "qcol/diagram.hpp"
#include "qcol/laurent.hpp"

namespace qcol {

/// Square matrix over LaurentPoly with the row-sum-zero invariant.
/// column_labels tracks column swaps: column j currently holds the unknown
/// X_{column_labels[j]} of the original system.
class ColouringMatrix {
  public:
    ColouringMatrix() = default;
    explicit ColouringMatrix(int n);

    int size() const { return n_; }
    const LaurentPoly& at(int row, int col) const { return entries_[row * n_ + col]; }
    LaurentPoly& at(int row, int col) { return entries_[row * n_ + col]; }

    const std::vector<int>& column_labels() const { return column_labels_; }
    std::vector<int>& column_labels() { return column_labels_; }

    bool row_sums_zero() const;
    LaurentPoly row_sum(int row) const;

    friend bool operator==(const ColouringMatrix& a, const ColouringMatrix& b) = default;

    /// column-aligned text rendering using the polynomial grammar
    std::string render() const;

  private:
    int n_ = 0;
    std::vector<LaurentPoly> entries_;
    std::vector<int> column_labels_;
};

/// Row k: m (positive) or m^-1 (negative) in column k, (1-m) resp. (1-m^-1)
/// added into the over-arc column, -1 added into column (k mod N)+1.
/// Coincident columns accumulate by addition. Throws std::invalid_argument
/// when the diagram fails validation.
ColouringMatrix build_colouring_matrix(const KnotDiagram& d);

/// The rewrite of the second background remark: rows of negative crossings
/// multiplied by -m. Solution sets are unchanged (unit row scaling).
ColouringMatrix remark_two_rewrite(const ColouringMatrix& a, const KnotDiagram& d);

/// Entrywise evaluation into [0, n).
struct EvaluatedMatrix {
    long long n = 0;
    int size = 0;
    std::vector<long long> entries;  // row-major

    long long at(int row, int col) const { return entries[row * size + col]; }
};

EvaluatedMatrix evaluate_matrix(const ColouringMatrix& a, const QuandleSpec& q);

}  // namespace qcol
