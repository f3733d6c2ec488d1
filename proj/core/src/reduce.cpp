#include "qcol/reduce.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "qcol/alexander.hpp"

namespace qcol {

namespace {

void apply_in_place(ColouringMatrix& a, const ElementaryOp& op) {
    const int n = a.size();
    auto check = [n](int idx) {
        if (idx < 0 || idx >= n) throw std::out_of_range("row/column index out of range");
    };
    switch (op.kind) {
        case ElementaryOp::Kind::scale_row: {
            check(op.i);
            const int shift = op.unit == ScaleUnit::m ? 1 : op.unit == ScaleUnit::m_inv ? -1 : 0;
            const int sign = op.unit == ScaleUnit::minus_one ? -1 : 1;
            for (int j = 0; j < n; ++j) a.at(op.i, j) = a.at(op.i, j).unit_scaled(shift, sign);
            break;
        }
        case ElementaryOp::Kind::add_row: {
            check(op.i);
            check(op.j);
            if (op.i == op.j) throw std::out_of_range("add_row requires distinct rows");
            for (int j = 0; j < n; ++j) a.at(op.j, j) += a.at(op.i, j);
            break;
        }
        case ElementaryOp::Kind::swap_rows: {
            check(op.i);
            check(op.j);
            for (int j = 0; j < n; ++j) std::swap(a.at(op.i, j), a.at(op.j, j));
            break;
        }
        case ElementaryOp::Kind::swap_cols: {
            check(op.i);
            check(op.j);
            for (int i = 0; i < n; ++i) std::swap(a.at(i, op.i), a.at(i, op.j));
            std::swap(a.column_labels()[op.i], a.column_labels()[op.j]);
            break;
        }
    }
}

struct BudgetExhausted {};

/// Mutable reduction state: applies elementary ops, logs them, and enforces
/// the op budget.
class Reducer {
  public:
    Reducer(const ColouringMatrix& a, int budget) : a_(a), budget_(budget) {}

    const ColouringMatrix& matrix() const { return a_; }
    ColouringMatrix take_matrix() { return std::move(a_); }
    std::vector<ElementaryOp> take_log() { return std::move(log_); }
    int size() const { return a_.size(); }

    void op(const ElementaryOp& o) {
        if (budget_ <= 0) throw BudgetExhausted{};
        --budget_;
        apply_in_place(a_, o);
        log_.push_back(o);
    }

    const LaurentPoly& at(int i, int j) const { return a_.at(i, j); }

    /// dst += q * src, expanded into unit scalings and row additions
    void add_multiple(int src, int dst, const LaurentPoly& q) {
        for (const auto& [e, c] : q.terms()) {
            shift_row(src, e);
            if (c < 0) op(ElementaryOp::scale(src, ScaleUnit::minus_one));
            for (Int k = 0; k < boost::multiprecision::abs(c); ++k)
                op(ElementaryOp::add(src, dst));
            if (c < 0) op(ElementaryOp::scale(src, ScaleUnit::minus_one));
            shift_row(src, -e);
        }
    }

    /// multiply a row by sign * m^shift
    void scale_row_unit(int row, int shift, int sign) {
        if (sign < 0) op(ElementaryOp::scale(row, ScaleUnit::minus_one));
        shift_row(row, shift);
    }

    void shift_row(int row, int exp) {
        for (int k = 0; k < std::abs(exp); ++k)
            op(ElementaryOp::scale(row, exp > 0 ? ScaleUnit::m : ScaleUnit::m_inv));
    }

    // ---- reduction phases ----

    /// Use the left kernel of the matrix (cofactors along the final column)
    /// to cancel one row exactly, then park it at the bottom. The combination
    /// only uses unit multiples when all nonzero cofactors are unit-equal,
    /// which holds for genuine knot diagrams (each is a unit multiple of the
    /// Alexander polynomial).
    bool zero_last_row() {
        const int n = size();
        if (n < 2 || n > 12) return false;
        for (int j = 0; j < n; ++j)
            if (!at(n - 1, j).is_zero()) goto nonzero;
        return true;  // already zero
    nonzero:
        std::vector<LaurentPoly> w(n);
        int target = -1;
        for (int i = 0; i < n; ++i) {
            std::vector<std::vector<LaurentPoly>> minor;
            minor.reserve(n - 1);
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<LaurentPoly> row;
                row.reserve(n - 1);
                for (int c = 0; c + 1 < n; ++c) row.push_back(at(r, c));
                minor.push_back(std::move(row));
            }
            w[i] = laurent_det(std::move(minor));
            if (i % 2 == 1) w[i] = -w[i];
            if (!w[i].is_zero()) target = i;
        }
        if (target < 0) return false;
        // the combination is expressible iff every ratio w[i]/w[target] is a
        // unit, i.e. all nonzero cofactors are unit-equal
        for (int i = 0; i < n; ++i)
            if (!w[i].is_zero() && !unit_equal(w[i], w[target])) return false;
        const int tshift = w[target].min_exp();
        const int tsign = w[target].coeff(tshift) > 0 ? 1 : -1;
        for (int i = 0; i < n; ++i) {
            if (i == target || w[i].is_zero()) continue;
            // w[i]/w[target], a unit
            const int shift = w[i].min_exp() - tshift;
            const int sign = (w[i].coeff(w[i].min_exp()) > 0 ? 1 : -1) * tsign;
            add_multiple(i, target, LaurentPoly::term(sign, shift));
        }
        for (int j = 0; j < n; ++j)
            if (!at(target, j).is_zero()) return false;  // kernel was not what we computed
        if (target != n - 1) op(ElementaryOp::swap_rows(target, n - 1));
        return true;
    }

    /// Forward elimination from column c: unit pivots (scaled to 1, cleared
    /// below), manufactured units, then divisibility pivots. Returns the
    /// first column that could not be pivoted.
    int eliminate_from(int c) {
        const int n = size();
        while (c < n - 1) {
            if (find_and_apply_unit_pivot(c)) {
                ++c;
                continue;
            }
            if (manufacture_unit(c)) continue;  // retry pivot search
            if (divisibility_pivot(c)) {
                ++c;
                continue;
            }
            break;
        }
        return c;
    }

    bool find_and_apply_unit_pivot(int c) {
        const int n = size();
        int best_row = -1, best_col = -1, best_absk = 0, best_sign = 0;
        for (int col = c; col < n - 1; ++col) {
            for (int row = c; row < n; ++row) {
                const LaurentPoly& p = at(row, col);
                if (!p.is_unit()) continue;
                const int k = p.min_exp();
                const int sign = p.coeff(k) > 0 ? 1 : -1;
                const bool better =
                    best_row < 0 ||
                    std::tuple(row, col, std::abs(k), sign < 0) <
                        std::tuple(best_row, best_col, best_absk, best_sign < 0);
                if (better) {
                    best_row = row;
                    best_col = col;
                    best_absk = std::abs(k);
                    best_sign = sign;
                }
            }
        }
        if (best_row < 0) return false;
        pivot_with(c, best_row, best_col);
        return true;
    }

    void pivot_with(int c, int row, int col) {
        const int n = size();
        if (col != c) op(ElementaryOp::swap_cols(c, col));
        if (row != c) op(ElementaryOp::swap_rows(c, row));
        const LaurentPoly& p = at(c, c);
        scale_row_unit(c, -p.min_exp(), p.coeff(p.min_exp()) > 0 ? 1 : -1);
        for (int i = c + 1; i < n; ++i)
            if (!at(i, c).is_zero()) add_multiple(c, i, -at(i, c));
    }

    /// Bounded breadth-first search for a unit-multiple row addition sequence
    /// that creates a unit entry in the active block.
    bool manufacture_unit(int c) {
        const int n = size();
        const int rows = n - c;
        if (rows < 2) return false;
        struct Move {
            int dst, src, shift, sign;
        };
        std::vector<Move> moves;
        for (int dst = 0; dst < rows; ++dst)
            for (int src = 0; src < rows; ++src) {
                if (dst == src) continue;
                for (int shift : {0, 1, -1})
                    for (int sign : {1, -1}) moves.push_back({dst, src, shift, sign});
            }
        using Block = std::vector<LaurentPoly>;  // (n-c) x (n-c), row major
        auto has_unit = [&](const Block& b) {
            for (int i = 0; i < rows; ++i)
                for (int j = 0; j + 1 < rows; ++j)  // exclude the final column
                    if (b[i * rows + j].is_unit()) return true;
            return false;
        };
        Block start(rows * rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) start[i * rows + j] = at(c + i, c + j);
        struct Node {
            Block block;
            std::vector<int> path;  // move indices
        };
        std::deque<Node> queue;
        queue.push_back({std::move(start), {}});
        int expanded = 0;
        constexpr int kMaxDepth = 4, kMaxNodes = 4000;
        while (!queue.empty()) {
            Node cur = std::move(queue.front());
            queue.pop_front();
            if (static_cast<int>(cur.path.size()) >= kMaxDepth) continue;
            for (size_t mi = 0; mi < moves.size(); ++mi) {
                const Move& mv = moves[mi];
                Block next = cur.block;
                const LaurentPoly u = LaurentPoly::term(mv.sign, mv.shift);
                for (int j = 0; j < rows; ++j)
                    next[mv.dst * rows + j] += u * next[mv.src * rows + j];
                if (++expanded > kMaxNodes) return false;
                std::vector<int> path = cur.path;
                path.push_back(static_cast<int>(mi));
                if (has_unit(next)) {
                    for (int step : path) {
                        const Move& m2 = moves[step];
                        add_multiple(c + m2.src, c + m2.dst,
                                     LaurentPoly::term(m2.sign, m2.shift));
                    }
                    return true;
                }
                queue.push_back({std::move(next), std::move(path)});
            }
        }
        return false;
    }

    /// Non-unit pivot usable when it exactly divides everything below it in
    /// its column (general triangular route).
    bool divisibility_pivot(int c) {
        const int n = size();
        for (int col = c; col < n - 1; ++col) {
            for (int row = c; row < n; ++row) {
                const LaurentPoly& p = at(row, col);
                if (p.is_zero()) continue;
                bool ok = true;
                for (int i = c; i < n && ok; ++i) {
                    if (i == row || at(i, col).is_zero()) continue;
                    LaurentPoly q;
                    ok = at(i, col).divide_exact(p, q);
                }
                if (!ok) continue;
                if (col != c) op(ElementaryOp::swap_cols(c, col));
                if (row != c) op(ElementaryOp::swap_rows(c, row));
                for (int i = c + 1; i < n; ++i) {
                    if (at(i, c).is_zero()) continue;
                    LaurentPoly q;
                    if (!at(i, c).divide_exact(at(c, c), q))
                        throw std::logic_error("divisibility pivot lost divisibility");
                    add_multiple(c, i, -q);
                }
                return true;
            }
        }
        return false;
    }

    void move_zero_row_to_bottom(int c) {
        const int n = size();
        auto row_zero = [&](int r) {
            for (int j = 0; j < n; ++j)
                if (!at(r, j).is_zero()) return false;
            return true;
        };
        if (row_zero(n - 1)) return;
        for (int r = c; r < n - 1; ++r) {
            if (row_zero(r)) {
                op(ElementaryOp::swap_rows(r, n - 1));
                return;
            }
        }
    }

    /// Euclid-style attempt to make the trailing 2x2 block upper triangular
    /// using polynomial-multiple row additions, row swaps and the one block
    /// column swap. Returns true iff the block ends upper triangular; on
    /// failure any column swap is undone (simplifying row steps are kept).
    bool block_phase() {
        const int n = size();
        const int r0 = n - 3, r1 = n - 2, c0 = n - 3, c1 = n - 2;
        bool col_swapped = false;
        auto measure = [](const LaurentPoly& p) {
            Int l1 = 0;
            for (const auto& [e, coef] : p.terms()) l1 += boost::multiprecision::abs(coef);
            return std::pair<int, Int>(p.degree_span(), l1);
        };
        auto give_up = [&]() {
            if (col_swapped) op(ElementaryOp::swap_cols(c0, c1));
            return at(r1, c0).is_zero();
        };
        for (int iter = 0; iter < 64; ++iter) {
            const LaurentPoly& a = at(r0, c0);
            const LaurentPoly& low = at(r1, c0);
            if (low.is_zero()) return true;
            if (a.is_zero()) {
                op(ElementaryOp::swap_rows(r0, r1));
                continue;
            }
            LaurentPoly q;
            if (low.divide_exact(a, q)) {
                add_multiple(r0, r1, -q);
                continue;
            }
            if (a.divide_exact(low, q)) {
                add_multiple(r1, r0, -q);
                op(ElementaryOp::swap_rows(r0, r1));
                continue;
            }
            // single-term reductions that strictly shrink one of the pair
            bool stepped = false;
            for (int dir = 0; dir < 2 && !stepped; ++dir) {
                const LaurentPoly& num = dir == 0 ? low : a;
                const LaurentPoly& den = dir == 0 ? a : low;
                for (bool leading : {true, false}) {
                    const int ne = leading ? num.max_exp() : num.min_exp();
                    const int de = leading ? den.max_exp() : den.min_exp();
                    const Int nc = num.coeff(ne);
                    const Int dc = den.coeff(de);
                    if (nc % dc != 0) continue;
                    LaurentPoly t = LaurentPoly::term(nc / dc, ne - de);
                    LaurentPoly reduced = num - t * den;
                    if (measure(reduced) >= measure(num)) continue;
                    if (dir == 0)
                        add_multiple(r0, r1, -t);
                    else
                        add_multiple(r1, r0, -t);
                    stepped = true;
                    break;
                }
            }
            if (stepped) continue;
            if (!col_swapped) {
                op(ElementaryOp::swap_cols(c0, c1));
                col_swapped = true;
                continue;
            }
            return give_up();
        }
        return give_up();
    }

    /// Unit-scale the interesting rows so their diagonal entries are in
    /// Alexander normal form.
    void normalize_interesting_rows() {
        const int n = size();
        switch (classify(a_)) {
            case Classification::type_one:
                if (n >= 2) normalize_row_diag(n - 2);
                break;
            case Classification::type_two:
                normalize_row_diag(n - 3);
                normalize_row_diag(n - 2);
                break;
            case Classification::general_triangular:
                for (int i = 0; i + 1 < n; ++i) normalize_row_diag(i);
                break;
            default:
                break;
        }
    }

    void normalize_row_diag(int i) {
        const LaurentPoly& d = at(i, i);
        if (d.is_zero()) return;
        const int lo = d.min_exp();
        const int sign = d.coeff(lo) > 0 ? 1 : -1;
        if (lo != 0 || sign < 0) scale_row_unit(i, -lo, sign);
    }

  private:
    ColouringMatrix a_;
    std::vector<ElementaryOp> log_;
    int budget_;
};

}  // namespace

ColouringMatrix apply_op(const ColouringMatrix& a, const ElementaryOp& op) {
    ColouringMatrix b = a;
    apply_in_place(b, op);
    return b;
}

ColouringMatrix replay(const ColouringMatrix& original, const std::vector<ElementaryOp>& ops) {
    ColouringMatrix b = original;
    for (const ElementaryOp& o : ops) apply_in_place(b, o);
    return b;
}

std::string to_string(Classification c) {
    switch (c) {
        case Classification::type_one: return "TypeI";
        case Classification::type_two: return "TypeII";
        case Classification::general_triangular: return "GeneralTriangular";
        case Classification::simplified_block: return "SimplifiedBlock";
        case Classification::unreduced: return "Unreduced";
    }
    return "?";
}

namespace {

bool final_row_zero(const ColouringMatrix& a) {
    const int n = a.size();
    for (int j = 0; j < n; ++j)
        if (!a.at(n - 1, j).is_zero()) return false;
    return true;
}

bool is_triangular(const ColouringMatrix& a) {
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < i; ++j)
            if (!a.at(i, j).is_zero()) return false;
    return true;
}

bool unit_diag_through(const ColouringMatrix& a, int count) {
    for (int i = 0; i < count; ++i)
        if (!a.at(i, i).is_one()) return false;
    return true;
}

}  // namespace

Classification classify(const ColouringMatrix& a) {
    const int n = a.size();
    if (n == 0) return Classification::unreduced;
    if (!final_row_zero(a)) return Classification::unreduced;
    if (n == 1) return Classification::type_one;  // [0], the one-crossing unknot shape
    const bool tri = is_triangular(a);
    if (tri && unit_diag_through(a, n - 2) &&
        a.at(n - 2, n - 1) == -a.at(n - 2, n - 2))
        return Classification::type_one;
    if (n >= 3 && tri && unit_diag_through(a, n - 3) &&
        a.at(n - 3, n - 1) == -(a.at(n - 3, n - 3) + a.at(n - 3, n - 2)) &&
        a.at(n - 2, n - 1) == -a.at(n - 2, n - 2))
        return Classification::type_two;
    if (tri) return Classification::general_triangular;
    if (n >= 3) {
        bool ok = unit_diag_through(a, n - 3);
        for (int j = 0; j < n - 3 && ok; ++j)
            for (int i = j + 1; i < n && ok; ++i)
                if (!a.at(i, j).is_zero()) ok = false;
        if (ok) return Classification::simplified_block;
    }
    return Classification::unreduced;
}

namespace {

ReducedForm finish_form(ColouringMatrix m, std::vector<ElementaryOp> log, bool exhausted) {
    ReducedForm r;
    r.matrix = std::move(m);
    r.op_log = std::move(log);
    r.budget_exhausted = exhausted;
    r.classification = exhausted ? Classification::unreduced : classify(r.matrix);
    const int n = r.matrix.size();
    switch (r.classification) {
        case Classification::type_one:
            r.alpha = n == 1 ? LaurentPoly(1) : r.matrix.at(n - 2, n - 2);
            break;
        case Classification::type_two:
            r.alpha1 = r.matrix.at(n - 3, n - 3);
            r.beta1 = r.matrix.at(n - 3, n - 2);
            r.alpha2 = r.matrix.at(n - 2, n - 2);
            break;
        case Classification::general_triangular:
            for (int i = 0; i + 1 < n; ++i) r.diagonal.push_back(r.matrix.at(i, i));
            break;
        case Classification::simplified_block:
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) r.block[i][j] = r.matrix.at(n - 3 + i, n - 3 + j);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 3; ++j)
                    r.block_rows[i][j] = r.matrix.at(n - 3 + i, n - 3 + j);
            break;
        case Classification::unreduced:
            break;
    }
    return r;
}

}  // namespace

ReducedForm reduce_matrix(const ColouringMatrix& a, int budget) {
    if (!a.row_sums_zero())
        throw std::invalid_argument("reduce_matrix requires the row-sum-zero invariant");
    const int n = a.size();
    Reducer red(a, budget);
    bool exhausted = false;
    try {
        if (n >= 2) {
            red.zero_last_row();
            int c = 0;
            for (int round = 0; round < 4 * n + 4; ++round) {
                c = red.eliminate_from(c);
                if (c >= n - 1) break;
                if (c == n - 2) {
                    red.move_zero_row_to_bottom(c);
                    break;
                }
                if (c == n - 3) {
                    red.move_zero_row_to_bottom(c);
                    if (!red.block_phase()) break;
                    continue;
                }
                break;  // stalled earlier than the final three rows
            }
            red.normalize_interesting_rows();
        }
    } catch (const BudgetExhausted&) {
        exhausted = true;
    }
    return finish_form(red.take_matrix(), red.take_log(), exhausted);
}

ReducedForm as_reduced_form(const ColouringMatrix& a) {
    return finish_form(a, {}, false);
}

std::string serialize_op_log(const std::vector<ElementaryOp>& ops) {
    std::ostringstream out;
    for (const ElementaryOp& o : ops) {
        switch (o.kind) {
            case ElementaryOp::Kind::scale_row:
                out << "scale r" << o.i + 1 << ' '
                    << (o.unit == ScaleUnit::m        ? "m"
                        : o.unit == ScaleUnit::m_inv ? "m^-1"
                                                      : "-1")
                    << '\n';
                break;
            case ElementaryOp::Kind::add_row:
                out << "add r" << o.i + 1 << " r" << o.j + 1 << '\n';
                break;
            case ElementaryOp::Kind::swap_rows:
                out << "swapr " << o.i + 1 << ' ' << o.j + 1 << '\n';
                break;
            case ElementaryOp::Kind::swap_cols:
                out << "swapc " << o.i + 1 << ' ' << o.j + 1 << '\n';
                break;
        }
    }
    return out.str();
}

std::vector<ElementaryOp> parse_op_log(std::string_view text) {
    std::vector<ElementaryOp> ops;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    auto bad = [&lineno]() -> parse_error {
        return parse_error("op log line " + std::to_string(lineno) + ": malformed");
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "scale") {
            std::string row, unit;
            if (!(ls >> row >> unit) || row.size() < 2 || row[0] != 'r') throw bad();
            ScaleUnit u;
            if (unit == "m")
                u = ScaleUnit::m;
            else if (unit == "m^-1")
                u = ScaleUnit::m_inv;
            else if (unit == "-1")
                u = ScaleUnit::minus_one;
            else
                throw bad();
            ops.push_back(ElementaryOp::scale(std::stoi(row.substr(1)) - 1, u));
        } else if (kw == "add") {
            std::string src, dst;
            if (!(ls >> src >> dst) || src.size() < 2 || dst.size() < 2 || src[0] != 'r' ||
                dst[0] != 'r')
                throw bad();
            ops.push_back(
                ElementaryOp::add(std::stoi(src.substr(1)) - 1, std::stoi(dst.substr(1)) - 1));
        } else if (kw == "swapr" || kw == "swapc") {
            int x, y;
            if (!(ls >> x >> y)) throw bad();
            ops.push_back(kw == "swapr" ? ElementaryOp::swap_rows(x - 1, y - 1)
                                        : ElementaryOp::swap_cols(x - 1, y - 1));
        } else {
            throw bad();
        }
    }
    return ops;
}

}  // namespace qcol
