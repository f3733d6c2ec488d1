#include "qcol/colmatrix.hpp"

#include <numeric>
#include <sstream>

namespace qcol {

ColouringMatrix::ColouringMatrix(int n) : n_(n), entries_(n * n), column_labels_(n) {
    std::iota(column_labels_.begin(), column_labels_.end(), 1);
}

bool ColouringMatrix::row_sums_zero() const {
    for (int i = 0; i < n_; ++i)
        if (!row_sum(i).is_zero()) return false;
    return true;
}

LaurentPoly ColouringMatrix::row_sum(int row) const {
    LaurentPoly s;
    for (int j = 0; j < n_; ++j) s += at(row, j);
    return s;
}

std::string ColouringMatrix::render() const {
    std::vector<std::vector<std::string>> cells(n_);
    std::vector<size_t> width(n_, 0);
    for (int i = 0; i < n_; ++i) {
        cells[i].resize(n_);
        for (int j = 0; j < n_; ++j) {
            cells[i][j] = at(i, j).str();
            width[j] = std::max(width[j], cells[i][j].size());
        }
    }
    std::ostringstream out;
    out << "columns:";
    for (int j = 0; j < n_; ++j) out << " X" << column_labels_[j];
    out << "\n";
    for (int i = 0; i < n_; ++i) {
        out << "[ ";
        for (int j = 0; j < n_; ++j) {
            out << std::string(width[j] - cells[i][j].size(), ' ') << cells[i][j];
            out << (j + 1 == n_ ? " ]\n" : "   ");
        }
    }
    return out.str();
}

ColouringMatrix build_colouring_matrix(const KnotDiagram& d) {
    auto violations = validate_diagram(d);
    if (!violations.empty())
        throw std::invalid_argument("invalid diagram: " + violations.front());
    const int n = d.size();
    ColouringMatrix a(n);
    for (int k = 0; k < n; ++k) {
        const Crossing& c = d.crossings()[k];
        const bool pos = c.sign == CrossingSign::positive;
        const LaurentPoly diag = LaurentPoly::term(1, pos ? 1 : -1);
        a.at(k, k) += diag;
        a.at(k, c.over_arc - 1) += LaurentPoly(1) - diag;
        a.at(k, (k + 1) % n) += LaurentPoly(-1);
    }
    return a;
}

ColouringMatrix remark_two_rewrite(const ColouringMatrix& a, const KnotDiagram& d) {
    if (d.size() != a.size())
        throw std::invalid_argument("diagram size does not match matrix size");
    ColouringMatrix b = a;
    for (int k = 0; k < a.size(); ++k) {
        if (d.crossings()[k].sign != CrossingSign::negative) continue;
        for (int j = 0; j < a.size(); ++j) b.at(k, j) = b.at(k, j).unit_scaled(1, -1);
    }
    return b;
}

EvaluatedMatrix evaluate_matrix(const ColouringMatrix& a, const QuandleSpec& q) {
    EvaluatedMatrix e;
    e.n = q.n;
    e.size = a.size();
    e.entries.resize(a.size() * a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) e.entries[i * a.size() + j] = eval_mod(a.at(i, j), q);
    return e;
}

}  // namespace qcol
