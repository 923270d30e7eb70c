#include <hlbip/matrix.hpp>

#include <sstream>

namespace hlbip {

Matrix::Matrix(int rows, int cols, const FieldSpec& field)
    : rows_(rows), cols_(cols), field_(field) {
    if (rows < 0 || cols < 0) throw input_error("matrix dimensions must be nonnegative");
    data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                 field_.zero());
}

Matrix Matrix::identity(int n, const FieldSpec& field) {
    Matrix m(n, n, field);
    for (int i = 1; i <= n; ++i) m.set(i, i, field.one());
    return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& d, const FieldSpec& field) {
    int n = static_cast<int>(d.size());
    Matrix m(n, n, field);
    for (int i = 1; i <= n; ++i) m.set(i, i, d[static_cast<std::size_t>(i - 1)]);
    return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows,
                         const FieldSpec& field) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows.front().size()) : 0;
    Matrix m(r, c, field);
    for (int i = 1; i <= r; ++i) {
        const auto& row = rows[static_cast<std::size_t>(i - 1)];
        if (static_cast<int>(row.size()) != c)
            throw input_error("ragged rows in matrix literal");
        for (int j = 1; j <= c; ++j)
            m.set(i, j, field.from_int(row[static_cast<std::size_t>(j - 1)]));
    }
    return m;
}

const Scalar& Matrix::at(int i, int j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw internal_error("matrix index out of range");
    return data_[pos(i, j)];
}

void Matrix::set(int i, int j, const Scalar& v) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw internal_error("matrix index out of range");
    data_[pos(i, j)] = v;
}

Matrix Matrix::submatrix(const IndexSet& row_idx, const IndexSet& col_idx) const {
    if (!row_idx.empty() && row_idx.max() > rows_)
        throw input_error("row selection outside matrix");
    if (!col_idx.empty() && col_idx.max() > cols_)
        throw input_error("column selection outside matrix");
    Matrix m(row_idx.size(), col_idx.size(), field_);
    int r = 1;
    for (int i : row_idx) {
        int c = 1;
        for (int j : col_idx) m.set(r, c++, at(i, j));
        ++r;
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_, field_);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j) m.set(j, i, at(i, j));
    return m;
}

bool Matrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 1; i <= rows_; ++i)
        for (int j = i + 1; j <= cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool Matrix::is_zero() const {
    for (const Scalar& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product shape mismatch");
    if (!(field_ == o.field_)) throw input_error("matrix product across fields");
    Matrix m(rows_, o.cols_, field_);
    for (int i = 1; i <= rows_; ++i)
        for (int k = 1; k <= cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 1; j <= o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                m.set(i, j, m.at(i, j) + aik * o.at(k, j));
            }
        }
    return m;
}

bool Matrix::operator==(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        return false;
    return data_ == o.data_;
}

int Matrix::rank() const {
    Matrix w = *this;
    int r = 1, c = 1, rank = 0;
    while (r <= w.rows_ && c <= w.cols_) {
        // First nonzero in row-major order of the untouched block.
        int pi = 0, pj = 0;
        for (int i = r; i <= w.rows_ && !pi; ++i)
            for (int j = c; j <= w.cols_; ++j)
                if (!w.at(i, j).is_zero()) { pi = i; pj = j; break; }
        if (!pi) break;
        if (pi != r)
            for (int j = 1; j <= w.cols_; ++j) {
                Scalar t = w.at(r, j);
                w.set(r, j, w.at(pi, j));
                w.set(pi, j, t);
            }
        if (pj != c)
            for (int i = 1; i <= w.rows_; ++i) {
                Scalar t = w.at(i, c);
                w.set(i, c, w.at(i, pj));
                w.set(i, pj, t);
            }
        Scalar inv = w.at(r, c).inverse();
        for (int i = r + 1; i <= w.rows_; ++i) {
            if (w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c) * inv;
            for (int j = c; j <= w.cols_; ++j)
                w.set(i, j, w.at(i, j) - f * w.at(r, j));
        }
        ++rank; ++r; ++c;
    }
    return rank;
}

std::optional<Matrix> Matrix::inverse() const {
    if (!is_square()) throw input_error("inverse of non-square matrix");
    int n = rows_;
    Matrix w = *this;
    Matrix inv = identity(n, field_);
    for (int c = 1; c <= n; ++c) {
        int p = 0;
        for (int i = c; i <= n; ++i)
            if (!w.at(i, c).is_zero()) { p = i; break; }
        if (!p) return std::nullopt;
        if (p != c)
            for (int j = 1; j <= n; ++j) {
                Scalar t = w.at(c, j); w.set(c, j, w.at(p, j)); w.set(p, j, t);
                t = inv.at(c, j); inv.set(c, j, inv.at(p, j)); inv.set(p, j, t);
            }
        Scalar piv = w.at(c, c).inverse();
        for (int j = 1; j <= n; ++j) {
            w.set(c, j, w.at(c, j) * piv);
            inv.set(c, j, inv.at(c, j) * piv);
        }
        for (int i = 1; i <= n; ++i) {
            if (i == c || w.at(i, c).is_zero()) continue;
            Scalar f = w.at(i, c);
            for (int j = 1; j <= n; ++j) {
                w.set(i, j, w.at(i, j) - f * w.at(c, j));
                inv.set(i, j, inv.at(i, j) - f * inv.at(c, j));
            }
        }
    }
    return inv;
}

bool Matrix::is_rank_at_most_one() const {
    int ai = 0, aj = 0;
    for (int i = 1; i <= rows_ && !ai; ++i)
        for (int j = 1; j <= cols_; ++j)
            if (!at(i, j).is_zero()) { ai = i; aj = j; break; }
    if (!ai) return true;
    const Scalar& anchor = at(ai, aj);
    for (int i = 1; i <= rows_; ++i)
        for (int j = 1; j <= cols_; ++j)
            if (at(i, j) * anchor != at(i, aj) * at(ai, j)) return false;
    return true;
}

bool Matrix::is_irreducible() const {
    if (!is_square()) throw input_error("irreducibility is for square matrices");
    int n = rows_;
    if (n == 0) return false;
    if (n == 1) return true;
    // BFS over the nonzero pattern, then over its reverse.
    auto reaches_all = [&](bool transposed) {
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 1; v <= n; ++v) {
                if (seen[static_cast<std::size_t>(v)]) continue;
                const Scalar& e = transposed ? at(v, u) : at(u, v);
                if (e.is_zero()) continue;
                seen[static_cast<std::size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
        return count == n;
    };
    return reaches_all(false) && reaches_all(true);
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (int i = 1; i <= rows_; ++i) {
        for (int j = 1; j <= cols_; ++j) {
            if (j > 1) os << ' ';
            os << at(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

} // namespace hlbip
